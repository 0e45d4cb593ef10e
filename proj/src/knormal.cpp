#include "cymat/knormal.hpp"

#include "cymat/cyclic_code.hpp"

namespace cymat {

GfMatrix frobenius_conjugate_matrix(const Gf& field, Gf::Elem alpha) {
    if (alpha == 0) throw error(errc::zero_element, "alpha must be nonzero");
    const std::uint32_t n = field.degree();
    Gf base = Gf::prime_field(field.characteristic());
    GfMatrix m(base, n, n);
    Gf::Elem conj = alpha;
    for (std::uint32_t j = 0; j < n; ++j) {
        const fp::Poly coords = field.decode(conj);
        for (std::uint32_t i = 0; i < n; ++i) m.set(i, j, coords[i]);
        conj = field.pow(conj, field.characteristic());
    }
    return m;
}

std::uint32_t normality_defect(const Gf& field, Gf::Elem alpha) {
    return field.degree() - rank(frobenius_conjugate_matrix(field, alpha));
}

KNormalResult knormal_matroid(const Gf& field, Gf::Elem alpha) {
    const std::uint32_t n = field.degree();
    const GfMatrix cols = frobenius_conjugate_matrix(field, alpha);
    const std::uint32_t r = rank(cols);
    BasesSet family = matroid_from_matrix(row_basis(cols));
    if (!is_cyclic(family))
        throw error(errc::cyclicity_violation, "conjugate column matroid");
    return KNormalResult{n - r, alpha, CyclicMatroid::from_family(family, true)};
}

KNormalResult knormal_matroid(std::uint32_t p, std::uint32_t n, Gf::Elem alpha) {
    return knormal_matroid(Gf::extension_field(p, n), alpha);
}

std::optional<Gf::Elem> find_knormal(std::uint32_t p, std::uint32_t n, std::uint32_t k) {
    const Gf field = Gf::extension_field(p, n);
    for (Gf::Elem a = 1; a < field.size(); ++a)
        if (normality_defect(field, a) == k) return a;
    return std::nullopt;
}

} // namespace cymat

#include "cymat/plane.hpp"

#include "cymat/cyclic_code.hpp"
#include "cymat/gf.hpp"

namespace cymat {

bool is_perfect_difference_set(const ZnSubset& d) {
    const std::uint32_t n = d.modulus();
    std::uint64_t seen = 0;
    const auto elems = d.elements();
    for (std::uint32_t a : elems)
        for (std::uint32_t b : elems) {
            if (a == b) continue;
            const std::uint32_t diff = (a + n - b) % n;
            if ((seen >> diff) & 1u) return false;
            seen |= 1ull << diff;
        }
    return seen == (ZnSubset::full_mask(n) & ~1ull);
}

ZnSubset perfect_difference_set(std::uint32_t q) {
    if (q < 2 || q > 4) throw error(errc::unsupported, "supported q: 2, 3, 4");
    const std::uint32_t n = q * q + q + 1;
    const std::uint32_t k = q + 1;
    const std::uint64_t limit = 1ull << n;
    std::uint64_t m = (1ull << k) - 1;
    while (m < limit) {
        ZnSubset cand(n, m);
        if (is_perfect_difference_set(cand)) return cand;
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    throw error(errc::not_found, "no perfect difference set for q=" + std::to_string(q));
}

Gf2Matrix cyclic_plane_incidence(std::uint32_t q) {
    return circulant_matrix(perfect_difference_set(q));
}

std::uint32_t plane_rank_expected(std::uint32_t q) {
    if (q % 2 == 1) return q * q + q;
    std::uint32_t t = 0;
    std::uint32_t v = q;
    while (v > 1) {
        if (v % 2) throw error(errc::unsupported, "q must be odd or a power of two");
        v /= 2;
        ++t;
    }
    std::uint32_t out = 1;
    for (std::uint32_t i = 0; i < t; ++i) out *= 3;
    return out + 1;
}

PlaneResult plane_matroid(std::uint32_t q, bool enumerate_bases) {
    PlaneResult res;
    res.q = q;
    res.n = q * q + q + 1;
    res.difference_set = perfect_difference_set(q);
    const Gf2Matrix incidence = circulant_matrix(res.difference_set);
    res.rank = rank_gf2(incidence);
    res.expected_rank = plane_rank_expected(q);
    if (!enumerate_bases) return res;

    Gf field = Gf::prime_field(2);
    GfMatrix full(field, res.n, res.n);
    for (std::uint32_t i = 0; i < res.n; ++i)
        for (std::uint32_t j = 0; j < res.n; ++j)
            if (incidence.get(i, j)) full.set(i, j, 1);
    const GfMatrix gen = row_basis(full);
    BasesSet family = matroid_from_matrix(gen);
    if (!is_cyclic(family)) throw error(errc::cyclicity_violation, "plane column matroid");
    // the exchange axiom holds by linear independence; re-check it only at
    // sizes where the quadratic sweep is immaterial
    const bool check_axiom = family.size() <= 2000;
    res.matroid = CyclicMatroid::from_family(family, check_axiom);
    return res;
}

} // namespace cymat

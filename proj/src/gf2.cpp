#include "cymat/gf2.hpp"

namespace cymat {

std::uint32_t rank_gf2(Gf2Matrix m) {
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < m.cols && r < m.rows.size(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows.size() && !((m.rows[piv] >> c) & 1u)) ++piv;
        if (piv == m.rows.size()) continue;
        std::swap(m.rows[r], m.rows[piv]);
        for (std::size_t i = 0; i < m.rows.size(); ++i)
            if (i != r && ((m.rows[i] >> c) & 1u)) m.rows[i] ^= m.rows[r];
        ++r;
    }
    return r;
}

Gf2Matrix circulant_matrix(const ZnSubset& a) {
    const std::uint32_t n = a.modulus();
    Gf2Matrix m;
    m.cols = n;
    m.rows.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) m.rows.push_back(a.shift(i).mask());
    return m;
}

std::uint64_t subset_polynomial(const ZnSubset& a) { return a.mask(); }

std::uint64_t gf2_polymul_mod(std::uint64_t f, std::uint64_t g, std::uint32_t n) {
    std::uint64_t out = 0;
    const std::uint64_t full = ZnSubset::full_mask(n);
    f &= full;
    g &= full;
    while (g) {
        std::uint32_t i = static_cast<std::uint32_t>(std::countr_zero(g));
        g &= g - 1;
        out ^= ((f << i) | (i ? (f >> (n - i)) : 0)) & full; // x^i * f, cyclic
    }
    return out;
}

} // namespace cymat

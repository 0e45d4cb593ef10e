#pragma once

#include <cstdint>
#include <vector>

#include "cymat/zn_subset.hpp"

namespace cymat {

/// Binary matrix with rows packed as 64-bit words (column j = bit j, j < 64).
struct Gf2Matrix {
    std::uint32_t cols = 0;
    std::vector<std::uint64_t> rows;

    bool get(std::size_t i, std::uint32_t j) const { return (rows[i] >> j) & 1u; }
};

/// Rank over F_2 by elimination on bit rows.
std::uint32_t rank_gf2(Gf2Matrix m);

/// n x n circulant M_A: entry (i,j) = 1 iff (j - i) mod n is in a.
/// Row i is the incidence vector of a + i.
Gf2Matrix circulant_matrix(const ZnSubset& a);

/// Coefficient vector of f_A in Z_2[x]/(x^n - 1): bit j set iff j in a.
/// Multiplication by x^i is the cyclic shift: f_{A+i} = x^i f_A.
std::uint64_t subset_polynomial(const ZnSubset& a);

/// Product in Z_2[x]/(x^n - 1) of two coefficient masks.
std::uint64_t gf2_polymul_mod(std::uint64_t f, std::uint64_t g, std::uint32_t n);

} // namespace cymat

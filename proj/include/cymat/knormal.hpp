#pragma once

#include <optional>

#include "cymat/gf.hpp"
#include "cymat/matroid.hpp"

namespace cymat {

/// Columns i = 0..n-1 hold the coordinate vectors of alpha^(p^i) over F_p.
GfMatrix frobenius_conjugate_matrix(const Gf& field, Gf::Elem alpha);

/// n minus the dimension of the span of the Frobenius conjugates.
std::uint32_t normality_defect(const Gf& field, Gf::Elem alpha);

struct KNormalResult {
    std::uint32_t defect = 0; // the k in "k-normal"
    Gf::Elem alpha = 0;
    CyclicMatroid matroid;    // rank n - defect, on Z_n
};

/// Builds F_{p^n} (lexicographically first irreducible modulus), computes
/// the conjugate matrix of alpha, and returns the cyclic matroid whose
/// bases are the independent column index sets of full rank n - k.
KNormalResult knormal_matroid(std::uint32_t p, std::uint32_t n, Gf::Elem alpha);
KNormalResult knormal_matroid(const Gf& field, Gf::Elem alpha);

/// First field element (ascending encoding, zero excluded) with normality
/// defect exactly k, or nullopt.
std::optional<Gf::Elem> find_knormal(std::uint32_t p, std::uint32_t n, std::uint32_t k);

} // namespace cymat

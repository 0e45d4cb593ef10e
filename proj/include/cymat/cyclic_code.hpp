#pragma once

#include "cymat/gf.hpp"
#include "cymat/matroid.hpp"

namespace cymat {

/// A length-n cyclic code over a prime field, held by its monic generator
/// polynomial g | x^n - 1; dimension k = n - deg g.
class CyclicCode {
public:
    /// Validates: prime field, g monic with 1 <= deg g <= n-1, g | x^n - 1.
    CyclicCode(std::uint32_t p, std::uint32_t n, fp::Poly generator);

    /// Spec string "p=3;n=6;g=1,2,2,1" (coefficients ascending by degree).
    static CyclicCode parse(const std::string& spec);

    std::uint32_t p() const { return p_; }
    std::uint32_t length() const { return n_; }
    std::uint32_t dimension() const { return k_; }
    const fp::Poly& generator() const { return g_; }

    /// k x n canonical generator matrix: row i carries x^i * g(x).
    GfMatrix generator_matrix() const;

    std::string str() const;

private:
    std::uint32_t p_ = 2;
    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    fp::Poly g_;
};

/// All size-(#rows) column index sets whose columns are linearly
/// independent. Requires full row rank.
BasesSet matroid_from_matrix(const GfMatrix& g);

/// The column matroid of the canonical generator matrix, verified cyclic.
CyclicMatroid code_matroid(const CyclicCode& c);

} // namespace cymat

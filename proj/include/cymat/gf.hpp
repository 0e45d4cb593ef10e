#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cymat/errors.hpp"

namespace cymat {

/// Dense polynomials over F_p, coefficients ascending by degree, no
/// trailing zeros (the zero polynomial is the empty vector).
namespace fp {

using Poly = std::vector<std::uint32_t>;

Poly trim(Poly a);
int degree(const Poly& a); // -1 for the zero polynomial
Poly add(const Poly& a, const Poly& b, std::uint32_t p);
Poly sub(const Poly& a, const Poly& b, std::uint32_t p);
Poly mul(const Poly& a, const Poly& b, std::uint32_t p);
/// Quotient and remainder by a nonzero divisor.
std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint32_t p);
/// x^n - 1 over F_p.
Poly xn_minus_1(std::uint32_t n, std::uint32_t p);
bool is_irreducible(const Poly& a, std::uint32_t p);
/// All monic divisors of x^n - 1 of degree in [1, n-1], by trial division,
/// sorted by (degree, coefficient encoding).
std::vector<Poly> proper_divisors_of_xn_minus_1(std::uint32_t n, std::uint32_t p);

} // namespace fp

bool is_prime(std::uint32_t p);

/// The finite field F_{p^d}. Elements are encoded as base-p integers of the
/// coefficient vector (constant digit first), so the natural scan order of
/// encodings is the coefficient-vector order.
class Gf {
public:
    using Elem = std::uint32_t;

    static Gf prime_field(std::uint32_t p);
    /// Modulus = lexicographically first monic irreducible of degree d.
    static Gf extension_field(std::uint32_t p, std::uint32_t d);
    static Gf extension_field(std::uint32_t p, std::uint32_t d, fp::Poly modulus);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t degree() const { return d_; }
    std::uint64_t size() const { return size_; }
    const fp::Poly& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const;
    Elem sub(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;

    fp::Poly decode(Elem a) const;           // length d, digits ascending
    Elem encode(const fp::Poly& coeffs) const;

    /// "c0,c1,...,c_{d-1}" (coefficients ascending by degree).
    std::string elem_str(Elem a) const;
    Elem parse_elem(const std::string& text) const;

    bool operator==(const Gf& other) const {
        return p_ == other.p_ && d_ == other.d_ && modulus_ == other.modulus_;
    }

private:
    Gf(std::uint32_t p, std::uint32_t d, fp::Poly modulus);

    std::uint32_t p_ = 2;
    std::uint32_t d_ = 1;
    std::uint64_t size_ = 2;
    fp::Poly modulus_; // monic, degree d; empty when d == 1
};

/// Matrix over a finite field, row-major.
class GfMatrix {
public:
    GfMatrix(Gf field, std::uint32_t rows, std::uint32_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), a_(std::size_t{rows} * cols, 0) {
        if (rows == 0 || cols == 0) throw error(errc::out_of_range, "empty matrix");
    }

    const Gf& field() const { return field_; }
    std::uint32_t rows() const { return rows_; }
    std::uint32_t cols() const { return cols_; }

    Gf::Elem at(std::uint32_t i, std::uint32_t j) const { return a_[std::size_t{i} * cols_ + j]; }
    void set(std::uint32_t i, std::uint32_t j, Gf::Elem v) { a_[std::size_t{i} * cols_ + j] = v; }

private:
    Gf field_;
    std::uint32_t rows_ = 0, cols_ = 0;
    std::vector<Gf::Elem> a_;
};

std::uint32_t rank(const GfMatrix& m);

/// Reduced row echelon form; also reports the rank.
GfMatrix rref(const GfMatrix& m, std::uint32_t* out_rank = nullptr);

/// The first out_rank rows of rref(m): a full-row-rank matrix with the same
/// row space.
GfMatrix row_basis(const GfMatrix& m);

} // namespace cymat

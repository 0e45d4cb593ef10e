#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "cymat/errors.hpp"

namespace cymat {

/// Largest supported modulus; subsets are stored as n-bit masks in one word.
inline constexpr std::uint32_t max_modulus = 63;

/// A subset of Z_n. Value type: one 64-bit mask plus the modulus.
/// Bit e of the mask is set iff residue e is in the set.
class ZnSubset {
public:
    ZnSubset() = default;

    ZnSubset(std::uint32_t n, std::uint64_t mask) : n_(check_n(n)), mask_(mask) {
        if (n < max_modulus && (mask >> n) != 0)
            throw error(errc::out_of_range, "element >= modulus in mask");
    }

    static ZnSubset empty(std::uint32_t n) { return ZnSubset(n, 0); }

    static ZnSubset full(std::uint32_t n) { return ZnSubset(n, full_mask(n)); }

    static ZnSubset from_elements(std::uint32_t n, const std::vector<std::uint32_t>& elems);

    /// First k residues {0, 1, ..., k-1}; the interval anchored at 0.
    static ZnSubset interval(std::uint32_t n, std::uint32_t k);

    /// Parses the text form "n:{e1,e2,...}", elements ascending, no spaces.
    static ZnSubset parse(const std::string& text);

    /// Parses just the brace part "{e1,e2,...}" against a known modulus.
    static ZnSubset parse_elements(const std::string& braces, std::uint32_t n);

    std::uint32_t modulus() const { return n_; }
    std::uint64_t mask() const { return mask_; }
    std::uint32_t size() const { return static_cast<std::uint32_t>(std::popcount(mask_)); }
    bool is_empty() const { return mask_ == 0; }
    bool is_full() const { return mask_ == full_mask(n_); }
    bool contains(std::uint32_t e) const { return e < n_ && ((mask_ >> e) & 1u); }

    std::vector<std::uint32_t> elements() const;

    /// {(x+s) mod n : x in this}; s is reduced mod n.
    ZnSubset shift(std::uint32_t s) const {
        s %= n_;
        if (s == 0) return *this;
        std::uint64_t m = ((mask_ << s) | (mask_ >> (n_ - s))) & full_mask(n_);
        return ZnSubset(n_, m);
    }

    ZnSubset complement() const { return ZnSubset(n_, mask_ ^ full_mask(n_)); }

    /// "n:{e1,e2,...}"
    std::string str() const;
    /// "{e1,e2,...}"
    std::string elements_str() const;

    bool operator==(const ZnSubset&) const = default;
    auto operator<=>(const ZnSubset&) const = default;

    static std::uint64_t full_mask(std::uint32_t n) {
        return n == 64 ? ~0ull : (1ull << n) - 1;
    }

private:
    static std::uint32_t check_n(std::uint32_t n) {
        if (n < 1 || n > max_modulus)
            throw error(errc::out_of_range, "modulus must be in [1, 63]");
        return n;
    }

    std::uint32_t n_ = 1;
    std::uint64_t mask_ = 0;
};

/// One maximal run of consecutive residues mod n.
struct Block {
    std::uint32_t start = 0;
    std::uint32_t length = 0;

    bool operator==(const Block&) const = default;
};

/// Consecutive block decomposition, blocks ordered by ascending start.
/// At most one block wraps past n-1; by the start ordering it is listed last.
struct BlockStructure {
    std::vector<Block> blocks;

    std::size_t count() const { return blocks.size(); }
    std::vector<std::uint32_t> composition() const;
};

/// Blocks of a nonempty subset. The full set Z_n yields the single block (0, n).
BlockStructure block_structure(const ZnSubset& a);

/// Stab(a) = <generator>; generator 0 encodes the trivial stabilizer {0}.
struct Stabilizer {
    std::uint32_t generator = 0;
    std::uint32_t size = 1;

    bool operator==(const Stabilizer&) const = default;
};

Stabilizer stabilizer(const ZnSubset& a);

/// Shift orbit of a subset. representative carries the smallest mask value
/// among all n shifts; size * |Stab| = n.
struct Orbit {
    ZnSubset representative;
    std::uint32_t size = 0;
    std::uint32_t stabilizer_generator = 0;

    bool operator==(const Orbit&) const = default;
};

Orbit orbit(const ZnSubset& a);

/// Smallest mask value among all shifts of a.
std::uint64_t canonical_shift_mask(const ZnSubset& a);

/// Coset starts a_1,...,a_r in [0, s0) with a = disjoint union of a_i + Stab(a).
/// Trivial stabilizer: returns the elements of a themselves.
std::vector<std::uint32_t> arithmetic_progression_decomposition(const ZnSubset& a);

} // namespace cymat

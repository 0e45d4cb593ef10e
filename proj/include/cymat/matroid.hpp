#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "cymat/errors.hpp"
#include "cymat/zn_subset.hpp"

namespace cymat {

/// An explicit k-uniform family of subsets of Z_n, not necessarily
/// shift-closed. Candidate basis collection for the axiom checks.
class BasesSet {
public:
    /// Validates: nonempty, all members the same cardinality.
    BasesSet(std::uint32_t n, std::vector<std::uint64_t> member_masks);

    std::uint32_t modulus() const { return n_; }
    std::uint32_t cardinality() const { return k_; }
    const std::vector<std::uint64_t>& members() const { return members_; }
    bool contains(std::uint64_t mask) const { return set_.count(mask) != 0; }
    std::size_t size() const { return members_.size(); }

private:
    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::vector<std::uint64_t> members_; // sorted ascending by mask
    std::unordered_set<std::uint64_t> set_;
};

/// Basis exchange axiom over the whole family. Returns the first
/// counterexample in (b1, b2, x) scan order over the sorted member list,
/// or nullopt when the axiom holds. Deterministic for any worker count.
std::optional<exchange_witness> verify_exchange_axiom(const BasesSet& b);

/// Multiple exchange: some P in b2\b1 with (b1\q) u P a member, searched in
/// ascending mask order; nullopt only if b is not a matroid.
/// q must be a subset of b1\b2, and b1, b2 must be members.
std::optional<ZnSubset> verify_multiple_exchange(const BasesSet& b, const ZnSubset& b1,
                                                 const ZnSubset& b2, const ZnSubset& q);

/// True iff the family is closed under the shift by 1 (hence all shifts).
bool is_cyclic(const BasesSet& b);

/// A matroid on Z_n whose basis collection is shift-closed, stored as
/// canonical orbit representatives. Immutable after construction.
class CyclicMatroid {
public:
    /// Expands the orbits of the given representatives, then verifies the
    /// exchange axiom and that the interval {0..k-1} is a basis.
    /// Rejects k = 0 and k = n.
    static CyclicMatroid from_orbit_representatives(std::uint32_t n, std::uint32_t k,
                                                    const std::vector<ZnSubset>& reps);

    /// Same checks, but admits the degenerate ranks 0 and n (free matroid
    /// and its dual), which arise from algebraic constructions.
    static CyclicMatroid from_orbit_representatives_any_rank(std::uint32_t n, std::uint32_t k,
                                                             const std::vector<ZnSubset>& reps);

    /// Wraps an explicit family. Shift closure and the interval basis are
    /// always verified; the quadratic exchange check can be skipped for
    /// families whose members are independent column sets of a fixed matrix,
    /// where the axiom holds by linear algebra.
    static CyclicMatroid from_family(const BasesSet& family, bool check_axiom);

    std::uint32_t modulus() const { return n_; }
    std::uint32_t rank() const { return k_; }
    const std::vector<Orbit>& basis_orbits() const { return orbits_; }
    std::uint64_t basis_count() const { return basis_count_; }

    /// The full basis collection, expanded.
    BasesSet expand() const;

    /// Canonical representatives, ascending by mask value.
    std::vector<ZnSubset> representatives() const;

    bool operator==(const CyclicMatroid& other) const {
        return n_ == other.n_ && k_ == other.k_ && orbits_ == other.orbits_;
    }

private:
    CyclicMatroid(std::uint32_t n, std::uint32_t k, std::vector<Orbit> orbits,
                  std::uint64_t count)
        : n_(n), k_(k), orbits_(std::move(orbits)), basis_count_(count) {}

    static CyclicMatroid build(std::uint32_t n, std::uint32_t k,
                               const std::vector<ZnSubset>& reps, bool allow_degenerate);

    std::uint32_t n_ = 0;
    std::uint32_t k_ = 0;
    std::vector<Orbit> orbits_; // sorted ascending by representative mask
    std::uint64_t basis_count_ = 0;
};

/// Bases of the dual are the complements of the bases; rank becomes n - k.
CyclicMatroid dual(const CyclicMatroid& m);

/// Rank of a subset: largest intersection with any basis.
std::uint32_t subset_rank(const BasesSet& b, std::uint64_t subset_mask);

/// No partition E = E1 | E2 with rank(E1) + rank(E2) = rank(E).
bool is_connected(const BasesSet& b);

// --- cyclic-basis structure, B_i = {i, i+1, ..., i+k-1} -------------------

/// |(B_i n B_j) \ B_0| by the case split: 0 when i - j >= k, else
/// j + k - max(k, i). Matches the direct set computation whenever
/// j <= n - k or i - j >= k; see the tests for the boundary behaviour.
std::uint32_t cyclic_basis_intersection_excess(std::uint32_t n, std::uint32_t k, std::uint32_t i,
                                               std::uint32_t j);

/// Shift indices q1 + i, spread(q) < i <= n - k, of the cyclic bases that
/// avoid q entirely; exactly n - k - q2 + q1 of them, and no others qualify.
std::vector<std::uint32_t> trivially_intersecting_cyclic_bases(std::uint32_t n, std::uint32_t k,
                                                               const ZnSubset& q);

/// Guaranteed count of distinct bases (B_0 \ q) u P_i reachable by multiple
/// exchange against the cyclic bases: floor((n-k-q2+q1-1)/(k-r+1)) + 1.
std::uint64_t distinct_exchange_count(std::uint32_t n, std::uint32_t k, const ZnSubset& q);

} // namespace cymat

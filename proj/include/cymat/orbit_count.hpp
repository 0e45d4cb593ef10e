#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cymat/zn_subset.hpp"

namespace cymat {

/// Default ceiling on binom(n, k) for the brute-force orbit partition,
/// overridable through the CYMAT_BRUTE_CAP environment variable.
std::uint64_t brute_force_cap();

/// All orbits of k-subsets of Z_n under the shift action, sorted by
/// representative mask. Throws TooLarge when binom(n, k) exceeds the cap.
std::vector<Orbit> orbits_brute_force(std::uint32_t n, std::uint32_t k,
                                      std::uint64_t cap = brute_force_cap());

/// Orbit count by the orbit-counting lemma: (1/n) sum_s Fix(s) with
/// Fix(s) = binom(g, kg/n) when n | kg for g = gcd(n, s), else 0.
std::uint64_t count_orbits_burnside(std::uint32_t n, std::uint32_t k);

/// Orbits whose block composition has length r, counted as orbits of the
/// diagonal Z_r rotation on pairs (composition of k) x (composition of n-k).
std::uint64_t count_orbits_by_length(std::uint32_t n, std::uint32_t k, std::uint32_t r);

/// Census over r = 1 .. min(k, n-k); total must equal the Burnside count.
struct OrbitCensus {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::map<std::uint32_t, std::uint64_t> per_length;
    std::uint64_t total = 0;
};

OrbitCensus total_orbits_by_composition(std::uint32_t n, std::uint32_t k);

/// CSV: "n,k,r,orbit_count" rows plus a final "n,k,total,<total>" row.
std::string census_csv(const OrbitCensus& c);

/// (c(D), c(D^C)) with the gap composition aligned so that c_b[i] is the
/// cyclic gap immediately after block i of D.
struct CompositionPair {
    std::vector<std::uint32_t> c_a;
    std::vector<std::uint32_t> c_b;

    std::uint32_t length() const { return static_cast<std::uint32_t>(c_a.size()); }
    bool operator==(const CompositionPair&) const = default;
};

/// Requires d to be neither empty nor all of Z_n.
CompositionPair composition_bijection(const ZnSubset& d);

/// Preimage anchored at 0: {0..c_a[0]-1} u {c_a[0]+c_b[0] ..} u ...
/// Lands in the same orbit as any set whose pair is a diagonal rotation.
ZnSubset reconstruct_from_composition(std::uint32_t n, const CompositionPair& pair);

/// Diagonal rotation equivalence of composition pairs.
bool same_pair_orbit(const CompositionPair& a, const CompositionPair& b);

/// Euler phi by trial factorization (arguments stay <= 63).
std::uint32_t euler_phi(std::uint32_t m);

} // namespace cymat

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cymat/matroid.hpp"
#include "cymat/matroid_json.hpp"

namespace cymat {

/// Exhaustive mode sweeps all unions of k-subset orbits that contain the
/// interval orbit; the candidate space is 2^(#orbits - 1).
inline constexpr std::uint32_t max_exhaustive_orbits = 24;

struct SearchConfig {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t seed = 0;
    std::uint64_t max_candidates = 100; // consecutive failed removals before stopping
    bool require_nonuniform = false;
};

/// Every cyclic k-matroid on Z_n, sorted by basis count, then by the
/// representative list. Complete and duplicate-free.
/// Throws TooLarge when the orbit count exceeds max_exhaustive_orbits.
std::vector<CyclicMatroid> enumerate_cyclic_matroids(std::uint32_t n, std::uint32_t k);

/// Minimum basis count over the full enumeration.
std::uint64_t min_bases(std::uint32_t n, std::uint32_t k);

/// Removal descent from the uniform matroid: repeatedly drop a uniformly
/// chosen non-interval orbit while the exchange axiom survives. Pure
/// function of the config (SplitMix64 stream from the seed).
std::optional<CyclicMatroid> random_cyclic_matroid(const SearchConfig& cfg);

struct VerificationReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    bool valid = false;
    std::string failure;                // error text when invalid
    std::optional<exchange_witness> witness;
    std::uint64_t basis_count = 0;      // expanded count when valid
    std::uint64_t orbit_count = 0;
    std::uint64_t bound = 0;            // combined lower bound for (n, k)
    bool meets_bound = false;
    std::optional<CyclicMatroid> matroid;
};

/// Rebuilds a matroid document from its orbit representatives and reports
/// axiom outcome, basis count, and the lower-bound comparison.
VerificationReport verify_matroid_document(const MatroidDocument& doc);

/// SplitMix64; stream t of seed s starts from splitmix(s) + t.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    /// Unbiased draw from [0, bound) by rejection.
    std::uint64_t below(std::uint64_t bound) {
        const std::uint64_t threshold = (~bound + 1) % bound;
        while (true) {
            const std::uint64_t v = next();
            if (v >= threshold) return v % bound;
        }
    }

private:
    std::uint64_t state_;
};

} // namespace cymat

#pragma once

#include <optional>

#include "cymat/gf2.hpp"
#include "cymat/matroid.hpp"

namespace cymat {

/// Every nonzero residue mod n has exactly one representation d - d' with
/// d, d' in the set.
bool is_perfect_difference_set(const ZnSubset& d);

/// The smallest-mask (q+1)-subset of Z_{q^2+q+1} whose differences cover
/// every nonzero residue exactly once. Supported q: 2, 3, 4.
ZnSubset perfect_difference_set(std::uint32_t q);

/// n x n circulant line/point incidence built from the difference set.
Gf2Matrix cyclic_plane_incidence(std::uint32_t q);

/// 2-rank of the incidence: q^2 + q for odd q, 3^t + 1 for q = 2^t.
std::uint32_t plane_rank_expected(std::uint32_t q);

struct PlaneResult {
    std::uint32_t q = 0;
    std::uint32_t n = 0;
    ZnSubset difference_set;
    std::uint32_t rank = 0;
    std::uint32_t expected_rank = 0;
    std::optional<CyclicMatroid> matroid; // present when basis enumeration ran
};

/// Verifies the incidence rank against the expected value; when
/// enumerate_bases is set (default for q <= 3), row-reduces the incidence
/// to a full-rank generator and builds the column matroid. At q = 4 the
/// enumeration sweeps binom(21,10) candidates, so it stays behind the flag.
PlaneResult plane_matroid(std::uint32_t q, bool enumerate_bases);

} // namespace cymat

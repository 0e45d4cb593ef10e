#include <doctest.h>

#include <map>
#include <set>

#include "cymat/bounds.hpp"
#include "cymat/orbit_count.hpp"

using namespace cymat;

namespace {

ZnSubset zs(std::uint32_t n, std::initializer_list<std::uint32_t> els) {
    return ZnSubset::from_elements(n, els);
}

} // namespace

TEST_CASE("brute-force orbits of 3-subsets of Z_6") {
    const std::vector<Orbit> orbits = orbits_brute_force(6, 3);
    REQUIRE(orbits.size() == 4);
    CHECK(orbits[0].representative == zs(6, {0, 1, 2}));
    CHECK(orbits[1].representative == zs(6, {0, 1, 3}));
    CHECK(orbits[2].representative == zs(6, {0, 2, 3}));
    CHECK(orbits[3].representative == zs(6, {0, 2, 4}));
    CHECK(orbits[0].size == 6);
    CHECK(orbits[1].size == 6);
    CHECK(orbits[2].size == 6);
    CHECK(orbits[3].size == 2);
}

TEST_CASE("brute-force orbit edge cases") {
    const auto pairs = orbits_brute_force(4, 2);
    REQUIRE(pairs.size() == 2);
    CHECK(pairs[0].representative == zs(4, {0, 1}));
    CHECK(pairs[0].size == 4);
    CHECK(pairs[1].representative == zs(4, {0, 2}));
    CHECK(pairs[1].size == 2);

    CHECK(orbits_brute_force(9, 0).size() == 1);
    CHECK(orbits_brute_force(9, 0)[0].representative.is_empty());
    CHECK(orbits_brute_force(9, 9).size() == 1);

    CHECK_THROWS_AS(orbits_brute_force(40, 20), error);
    CHECK_THROWS_AS(orbits_brute_force(10, 3, 10), error); // explicit tiny cap
}

TEST_CASE("orbit-counting-lemma values") {
    CHECK(count_orbits_burnside(6, 3) == 4);
    CHECK(count_orbits_burnside(7, 3) == 5);
    CHECK(count_orbits_burnside(9, 9) == 1);
    CHECK(count_orbits_burnside(11, 2) == 5);
}

TEST_CASE("per-length counts") {
    CHECK(count_orbits_by_length(6, 3, 3) == 1);
    CHECK(count_orbits_by_length(6, 3, 2) == 2);
    CHECK(count_orbits_by_length(6, 3, 1) == 1);
    CHECK_THROWS_AS(count_orbits_by_length(6, 3, 4), error);
    CHECK_THROWS_AS(count_orbits_by_length(6, 3, 0), error);
}

TEST_CASE("census") {
    const OrbitCensus c = total_orbits_by_composition(6, 3);
    CHECK(c.per_length == std::map<std::uint32_t, std::uint64_t>{{1, 1}, {2, 2}, {3, 1}});
    CHECK(c.total == 4);
    CHECK(total_orbits_by_composition(7, 3).total == 5);
    CHECK(total_orbits_by_composition(11, 2).total == 5);
    CHECK(census_csv(c) ==
          "n,k,r,orbit_count\n6,3,1,1\n6,3,2,2\n6,3,3,1\n6,3,total,4\n");
}

TEST_CASE("three routes agree for 4 <= n <= 16") {
    for (std::uint32_t n = 4; n <= 16; ++n)
        for (std::uint32_t k = 1; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const std::uint64_t brute = orbits_brute_force(n, k).size();
            const std::uint64_t lemma = count_orbits_burnside(n, k);
            const std::uint64_t comp = total_orbits_by_composition(n, k).total;
            CHECK(brute == lemma);
            CHECK(lemma == comp);
        }
}

TEST_CASE("per-length counts match the block histogram for n <= 14") {
    for (std::uint32_t n = 4; n <= 14; ++n)
        for (std::uint32_t k = 1; k < n; ++k) {
            std::map<std::uint32_t, std::uint64_t> hist;
            for (const Orbit& o : orbits_brute_force(n, k))
                ++hist[static_cast<std::uint32_t>(
                    block_structure(o.representative).count())];
            const OrbitCensus c = total_orbits_by_composition(n, k);
            CHECK(hist == c.per_length);
        }
}

TEST_CASE("orbit sizes sum to the number of k-subsets") {
    for (std::uint32_t n = 4; n <= 14; ++n)
        for (std::uint32_t k = 0; k <= n; ++k) {
            std::uint64_t total = 0;
            for (const Orbit& o : orbits_brute_force(n, k)) total += o.size;
            CHECK(total == safe_binomial(n, k));
        }
}

TEST_CASE("complement symmetry of totals") {
    for (std::uint32_t n = 4; n <= 16; ++n)
        for (std::uint32_t k = 1; k < n; ++k)
            CHECK(total_orbits_by_composition(n, k).total ==
                  total_orbits_by_composition(n, n - k).total);
}

TEST_CASE("composition pair: examples") {
    const CompositionPair one = composition_bijection(zs(6, {0, 1, 2}));
    CHECK(one.c_a == std::vector<std::uint32_t>{3});
    CHECK(one.c_b == std::vector<std::uint32_t>{3});
    CHECK(reconstruct_from_composition(6, one) == zs(6, {0, 1, 2}));

    const CompositionPair alt = composition_bijection(zs(6, {0, 2, 4}));
    CHECK(alt.c_a == std::vector<std::uint32_t>{1, 1, 1});
    CHECK(alt.c_b == std::vector<std::uint32_t>{1, 1, 1});

    const CompositionPair ex = composition_bijection(zs(10, {0, 2, 3, 4, 6, 7, 9}));
    CHECK(ex.c_a == std::vector<std::uint32_t>{3, 2, 2}); // blocks at 2, 6, 9
    std::uint32_t gaps = 0;
    for (std::uint32_t g : ex.c_b) gaps += g;
    CHECK(gaps == 3);

    CHECK_THROWS_AS(composition_bijection(ZnSubset::empty(5)), error);
    CHECK_THROWS_AS(composition_bijection(ZnSubset::full(5)), error);
}

TEST_CASE("pair is an orbit invariant and separates orbits (n <= 12)") {
    for (std::uint32_t n = 4; n <= 12; ++n)
        for (std::uint32_t k = 1; k < n; ++k) {
            // constant on orbits up to diagonal rotation, and reconstruct
            // lands back in the orbit
            for (const Orbit& o : orbits_brute_force(n, k)) {
                const CompositionPair base = composition_bijection(o.representative);
                CHECK(orbit(reconstruct_from_composition(n, base)).representative ==
                      o.representative);
                for (std::uint32_t s = 1; s < n; ++s) {
                    const CompositionPair shifted =
                        composition_bijection(o.representative.shift(s));
                    CHECK(same_pair_orbit(base, shifted));
                }
            }
            // distinct orbits map to distinct rotation classes
            const auto orbits = orbits_brute_force(n, k);
            for (std::size_t i = 0; i < orbits.size(); ++i)
                for (std::size_t j = i + 1; j < orbits.size(); ++j)
                    CHECK(!same_pair_orbit(
                        composition_bijection(orbits[i].representative),
                        composition_bijection(orbits[j].representative)));
        }
}

TEST_CASE("euler phi") {
    CHECK(euler_phi(1) == 1);
    CHECK(euler_phi(2) == 1);
    CHECK(euler_phi(12) == 4);
    CHECK(euler_phi(13) == 12);
    CHECK(euler_phi(63) == 36);
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "cymat/bounds.hpp"
#include "cymat/jobs.hpp"
#include "cymat/orbit_count.hpp"
#include "cymat/search.hpp"

using namespace cymat;

namespace {

ZnSubset zs(std::uint32_t n, std::initializer_list<std::uint32_t> els) {
    return ZnSubset::from_elements(n, els);
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// plain-scan oracle: every union of orbits containing the interval orbit,
// filtered by the axiom on the expanded family
std::vector<std::vector<ZnSubset>> enumerate_by_plain_scan(std::uint32_t n, std::uint32_t k) {
    const std::vector<Orbit> orbits = orbits_brute_force(n, k);
    const std::uint64_t b0 = canonical_shift_mask(ZnSubset::interval(n, k));
    std::size_t b0_idx = 0;
    while (orbits[b0_idx].representative.mask() != b0) ++b0_idx;
    std::vector<std::vector<ZnSubset>> out;
    for (std::uint32_t bits = 0; bits < (1u << orbits.size()); ++bits) {
        if (!((bits >> b0_idx) & 1)) continue;
        std::vector<std::uint64_t> masks;
        std::vector<ZnSubset> reps;
        for (std::size_t i = 0; i < orbits.size(); ++i) {
            if (!((bits >> i) & 1)) continue;
            reps.push_back(orbits[i].representative);
            for (std::uint32_t s = 0; s < orbits[i].size; ++s)
                masks.push_back(orbits[i].representative.shift(s).mask());
        }
        if (!verify_exchange_axiom(BasesSet(n, std::move(masks)))) out.push_back(reps);
    }
    return out;
}

} // namespace

TEST_CASE("the three rank-3 matroids on Z_6") {
    const auto all = enumerate_cyclic_matroids(6, 3);
    REQUIRE(all.size() == 3);
    CHECK(all[0].basis_count() == 8);
    CHECK(all[1].basis_count() == 18);
    CHECK(all[2].basis_count() == 20);
    CHECK(all[0].representatives() ==
          std::vector<ZnSubset>{zs(6, {0, 1, 2}), zs(6, {0, 2, 4})});
    CHECK(all[1].representatives() ==
          std::vector<ZnSubset>{zs(6, {0, 1, 2}), zs(6, {0, 1, 3}), zs(6, {0, 2, 3})});
    CHECK(all[2].basis_orbits().size() == 4);
}

TEST_CASE("enumeration edge cases") {
    const auto r42 = enumerate_cyclic_matroids(4, 2);
    REQUIRE(r42.size() == 2);
    CHECK(r42[0].basis_count() == 4);
    CHECK(r42[1].basis_count() == 6);

    // rank n-1: the single orbit of (n-1)-subsets
    for (std::uint32_t n = 4; n <= 8; ++n) {
        const auto top = enumerate_cyclic_matroids(n, n - 1);
        REQUIRE(top.size() == 1);
        CHECK(top[0].basis_count() == n);
    }

    CHECK_THROWS_AS(enumerate_cyclic_matroids(10, 5), error); // 26 orbits
}

TEST_CASE("minimum basis counts") {
    CHECK(min_bases(6, 3) == 8);
    CHECK(min_bases(4, 2) == 4);
    CHECK(min_bases(5, 2) == 10);
}

TEST_CASE("enumeration equals the plain scan for n <= 8") {
    for (std::uint32_t n = 4; n <= 8; ++n)
        for (std::uint32_t k = 2; k < n; ++k) {
            CAPTURE(n);
            CAPTURE(k);
            const auto fast = enumerate_cyclic_matroids(n, k);
            auto oracle = enumerate_by_plain_scan(n, k);
            REQUIRE(fast.size() == oracle.size());
            std::set<std::vector<ZnSubset>> oracle_set(oracle.begin(), oracle.end());
            for (const CyclicMatroid& m : fast)
                CHECK(oracle_set.count(m.representatives()) == 1);
        }
}

TEST_CASE("enumeration equals the plain scan at n = 9 for small orbit spaces") {
    for (std::uint32_t k : {3u, 4u, 7u}) { // orbit spaces of 10, 14, 4 orbits
        const auto fast = enumerate_cyclic_matroids(9, k);
        auto oracle = enumerate_by_plain_scan(9, k);
        REQUIRE(fast.size() == oracle.size());
        std::set<std::vector<ZnSubset>> oracle_set(oracle.begin(), oracle.end());
        for (const CyclicMatroid& m : fast) CHECK(oracle_set.count(m.representatives()) == 1);
    }
}

TEST_CASE("the uniform matroid always appears") {
    for (std::uint32_t n = 4; n <= 8; ++n)
        for (std::uint32_t k = 2; k < n; ++k) {
            const auto all = enumerate_cyclic_matroids(n, k);
            CHECK(all.back().basis_count() == safe_binomial(n, k));
        }
}

TEST_CASE("enumerated matroids never undercut the combined bound") {
    // ground truth for the bound formulas, exhaustively over n <= 9
    for (std::uint32_t n = 4; n <= 9; ++n)
        for (std::uint32_t k = 2; k < n; ++k) {
            const std::uint64_t bound = m_best(n, k).m_best;
            for (const CyclicMatroid& m : enumerate_cyclic_matroids(n, k)) {
                CAPTURE(n);
                CAPTURE(k);
                CHECK(m.basis_count() >= bound);
            }
        }
}

TEST_CASE("enumeration at 22 orbits stays exact") {
    // (10, 4) is the largest feasible instance below the cap
    const auto all = enumerate_cyclic_matroids(10, 4);
    CHECK(all.size() >= 2);
    const std::uint64_t bound = m_best(10, 4).m_best;
    for (const CyclicMatroid& m : all) CHECK(m.basis_count() >= bound);
    CHECK(all.back().basis_count() == safe_binomial(10, 4));
    // complementary rank gives the same counts through duality
    const auto duals = enumerate_cyclic_matroids(10, 6);
    REQUIRE(duals.size() == all.size());
    for (std::size_t i = 0; i < all.size(); ++i)
        CHECK(duals[i].basis_count() == all[i].basis_count());
}

TEST_CASE("bound soundness across every feasible instance with n = 10") {
    for (std::uint32_t k = 2; k < 10; ++k) {
        if (k == 5) {
            CHECK_THROWS_AS(enumerate_cyclic_matroids(10, 5), error); // 26 orbits
            continue;
        }
        const std::uint64_t bound = m_best(10, k).m_best;
        for (const CyclicMatroid& m : enumerate_cyclic_matroids(10, k)) {
            CAPTURE(k);
            CHECK(m.basis_count() >= bound);
        }
    }
}

TEST_CASE("randomized search is a pure function of the config") {
    SearchConfig cfg;
    cfg.n = 7;
    cfg.k = 3;
    cfg.seed = 12345;
    const auto a = random_cyclic_matroid(cfg);
    const auto b = random_cyclic_matroid(cfg);
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(*a == *b);

    cfg.seed = 54321;
    const auto c = random_cyclic_matroid(cfg);
    REQUIRE(c.has_value());
    // any outcome verifies as a cyclic matroid containing the interval orbit
    CHECK(c->expand().contains(ZnSubset::interval(7, 3).mask()));
}

TEST_CASE("random results on Z_6 land among the three known matroids") {
    const auto all = enumerate_cyclic_matroids(6, 3);
    std::set<std::uint64_t> counts;
    for (const CyclicMatroid& m : all) counts.insert(m.basis_count());
    for (std::uint64_t seed : {1ull, 2ull, 3ull, 99ull, 1000ull}) {
        SearchConfig cfg;
        cfg.n = 6;
        cfg.k = 3;
        cfg.seed = seed;
        const auto m = random_cyclic_matroid(cfg);
        REQUIRE(m.has_value());
        CHECK(counts.count(m->basis_count()) == 1);
    }
}

TEST_CASE("require_nonuniform") {
    SearchConfig cfg;
    cfg.n = 5;
    cfg.k = 2; // only the uniform matroid exists
    cfg.seed = 7;
    cfg.require_nonuniform = true;
    CHECK(!random_cyclic_matroid(cfg).has_value());
    cfg.require_nonuniform = false;
    REQUIRE(random_cyclic_matroid(cfg).has_value());
    CHECK(random_cyclic_matroid(cfg)->basis_count() == 10);
}

TEST_CASE("a larger random instance verifies end to end") {
    SearchConfig cfg;
    cfg.n = 9;
    cfg.k = 3;
    cfg.seed = 2024;
    const auto m = random_cyclic_matroid(cfg);
    REQUIRE(m.has_value());
    CHECK(m->rank() == 3);
    CHECK(m->expand().contains(zs(9, {0, 1, 2}).mask()));
}

TEST_CASE("enumeration output survives the interchange format") {
    for (const CyclicMatroid& m : enumerate_cyclic_matroids(7, 3)) {
        const CyclicMatroid back = matroid_from_json(matroid_to_json(m));
        CHECK(back == m);
        CHECK(back.basis_count() == m.basis_count());
    }
}

TEST_CASE("document verification") {
    MatroidDocument doc;
    doc.n = 6;
    doc.k = 3;
    doc.orbit_representatives = {zs(6, {0, 1, 2}), zs(6, {0, 2, 4})};
    const VerificationReport good = verify_matroid_document(doc);
    CHECK(good.valid);
    CHECK(good.basis_count == 8);
    CHECK(good.orbit_count == 2);
    CHECK(good.bound == 8);
    CHECK(good.meets_bound);

    doc.orbit_representatives = {zs(6, {0, 2, 4})};
    const VerificationReport bad = verify_matroid_document(doc);
    CHECK(!bad.valid);
    CHECK(bad.failure.find("MissingCyclicBasis") != std::string::npos);

    doc.n = 5;
    doc.k = 2;
    doc.orbit_representatives = {zs(5, {0, 1})};
    const VerificationReport axiom = verify_matroid_document(doc);
    CHECK(!axiom.valid);
    REQUIRE(axiom.witness.has_value());
    CHECK(axiom.witness->b1 == zs(5, {0, 1}).mask());
}

TEST_CASE("all shipped fixtures verify") {
    const std::filesystem::path root(CYMAT_FIXTURE_DIR);
    std::size_t count = 0;
    for (const char* dir : {"appendix_a", "reference"}) {
        for (const auto& entry : std::filesystem::directory_iterator(root / dir)) {
            if (entry.path().extension() != ".json") continue;
            CAPTURE(entry.path().filename().string());
            const MatroidDocument doc = matroid_document_from_json(slurp(entry.path()));
            const VerificationReport rep = verify_matroid_document(doc);
            CHECK(rep.valid);
            CHECK(rep.meets_bound);
            if (doc.basis_count) CHECK(rep.basis_count == doc.basis_count);
            ++count;
        }
    }
    CHECK(count == 14);
}

TEST_CASE("worker count does not change enumeration output") {
    set_jobs(2);
    const auto two = enumerate_cyclic_matroids(8, 4);
    set_jobs(1);
    const auto one = enumerate_cyclic_matroids(8, 4);
    REQUIRE(one.size() == two.size());
    for (std::size_t i = 0; i < one.size(); ++i) CHECK(one[i] == two[i]);
}

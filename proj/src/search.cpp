#include "cymat/search.hpp"

#include <algorithm>
#include <unordered_map>

#include "cymat/bounds.hpp"
#include "cymat/orbit_count.hpp"

namespace cymat {

namespace {

struct OrbitSpace {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<Orbit> orbits;           // sorted by representative mask
    std::size_t interval_index = 0;
    std::unordered_map<std::uint64_t, std::uint32_t> index_of; // canonical mask -> index

    std::vector<std::uint64_t> expand(const std::vector<std::uint8_t>& chosen) const {
        std::vector<std::uint64_t> fam;
        for (std::uint32_t i = 0; i < orbits.size(); ++i) {
            if (!chosen[i]) continue;
            for (std::uint32_t s = 0; s < orbits[i].size; ++s)
                fam.push_back(orbits[i].representative.shift(s).mask());
        }
        return fam;
    }
};

OrbitSpace make_orbit_space(std::uint32_t n, std::uint32_t k) {
    if (k < 2 || k + 1 > n) throw error(errc::out_of_range, "need 2 <= k <= n-1");
    OrbitSpace sp;
    sp.n = n;
    sp.k = k;
    sp.orbits = orbits_brute_force(n, k);
    for (std::uint32_t i = 0; i < sp.orbits.size(); ++i)
        sp.index_of.emplace(sp.orbits[i].representative.mask(), i);
    const std::uint64_t b0 = ZnSubset::interval(n, k).mask();
    sp.interval_index = sp.index_of.at(canonical_shift_mask(ZnSubset(n, b0)));
    return sp;
}

// Exchange requirements between two orbits: for B1 = rep(i), every B2 in
// orbit j and every x in B1\B2 needs some replacement orbit present. Each
// requirement is the bitset of orbit indices that satisfy it. Requirements
// already met by the interval orbit are dropped (it is always present).
std::vector<std::uint32_t> pair_requirements(const OrbitSpace& sp, std::uint32_t i,
                                             std::uint32_t j) {
    std::vector<std::uint32_t> reqs;
    const std::uint64_t b1 = sp.orbits[i].representative.mask();
    const std::uint32_t n = sp.n;
    for (std::uint32_t s = 0; s < sp.orbits[j].size; ++s) {
        const std::uint64_t b2 = sp.orbits[j].representative.shift(s).mask();
        std::uint64_t xs = b1 & ~b2;
        while (xs) {
            const std::uint64_t xbit = xs & (~xs + 1);
            xs &= xs - 1;
            const std::uint64_t base = b1 ^ xbit;
            std::uint32_t req = 0;
            std::uint64_t ys = b2 & ~b1;
            while (ys) {
                const std::uint64_t ybit = ys & (~ys + 1);
                ys &= ys - 1;
                req |= 1u << sp.index_of.at(canonical_shift_mask(ZnSubset(n, base | ybit)));
            }
            if (!((req >> sp.interval_index) & 1u)) reqs.push_back(req);
        }
    }
    std::sort(reqs.begin(), reqs.end());
    reqs.erase(std::unique(reqs.begin(), reqs.end()), reqs.end());
    return reqs;
}

struct Enumerator {
    const OrbitSpace& sp;
    std::vector<std::vector<std::vector<std::uint32_t>>> reqs; // [i][j] lists
    std::vector<std::uint32_t> found;                          // valid orbit bitsets

    explicit Enumerator(const OrbitSpace& space) : sp(space) {
        const std::size_t m = sp.orbits.size();
        reqs.assign(m, std::vector<std::vector<std::uint32_t>>(m));
        for (std::uint32_t i = 0; i < m; ++i)
            for (std::uint32_t j = 0; j < m; ++j) reqs[i][j] = pair_requirements(sp, i, j);
    }

    // include/exclude each orbit in index order; the interval orbit is
    // forced in. pending holds requirements not yet met by the included
    // set; a requirement with no overlap with the reachable set kills the
    // whole subtree.
    void dfs(std::uint32_t idx, std::uint32_t included, std::uint32_t reachable,
             std::vector<std::uint32_t> pending) {
        const std::uint32_t m = static_cast<std::uint32_t>(sp.orbits.size());
        if (idx == m) {
            for (std::uint32_t r : pending)
                if (!(r & included)) return;
            found.push_back(included);
            return;
        }
        if (idx == sp.interval_index) {
            dfs(idx + 1, included, reachable, std::move(pending));
            return;
        }

        // exclude idx: previously reachable requirements may die
        {
            const std::uint32_t reach2 = reachable & ~(1u << idx);
            bool alive = true;
            for (std::uint32_t r : pending)
                if (!(r & reach2)) {
                    alive = false;
                    break;
                }
            if (alive) dfs(idx + 1, included, reach2, pending);
        }

        // include idx: pull in the pair requirements against the set so far
        {
            const std::uint32_t inc2 = included | (1u << idx);
            std::vector<std::uint32_t> pend2;
            pend2.reserve(pending.size());
            for (std::uint32_t r : pending)
                if (!(r & inc2)) pend2.push_back(r);
            bool alive = true;
            auto add_reqs = [&](const std::vector<std::uint32_t>& list) {
                for (std::uint32_t r : list) {
                    if (r & inc2) continue;
                    if (!(r & reachable)) {
                        alive = false;
                        return;
                    }
                    pend2.push_back(r);
                }
            };
            std::uint32_t members = inc2;
            while (alive && members) {
                const std::uint32_t u =
                    static_cast<std::uint32_t>(std::countr_zero(members));
                members &= members - 1;
                add_reqs(reqs[idx][u]);
                if (alive && u != idx) add_reqs(reqs[u][idx]);
            }
            if (alive) dfs(idx + 1, inc2, reachable, std::move(pend2));
        }
    }
};

} // namespace

std::vector<CyclicMatroid> enumerate_cyclic_matroids(std::uint32_t n, std::uint32_t k) {
    OrbitSpace sp = make_orbit_space(n, k);
    if (sp.orbits.size() > max_exhaustive_orbits)
        throw error(errc::too_large, std::to_string(sp.orbits.size()) +
                                         " orbits exceed the exhaustive cap of " +
                                         std::to_string(max_exhaustive_orbits));

    Enumerator en(sp);
    {
        // seed state: interval orbit included, its self-requirements pending
        std::uint32_t included = 1u << sp.interval_index;
        std::uint32_t reachable = (sp.orbits.size() == 32)
                                      ? ~0u
                                      : (1u << sp.orbits.size()) - 1;
        std::vector<std::uint32_t> pending;
        for (std::uint32_t r : en.reqs[sp.interval_index][sp.interval_index])
            if (!(r & included)) pending.push_back(r);
        en.dfs(0, included, reachable, std::move(pending));
    }

    std::vector<CyclicMatroid> out;
    out.reserve(en.found.size());
    for (std::uint32_t bits : en.found) {
        std::vector<ZnSubset> reps;
        for (std::uint32_t i = 0; i < sp.orbits.size(); ++i)
            if ((bits >> i) & 1u) reps.push_back(sp.orbits[i].representative);
        out.push_back(CyclicMatroid::from_orbit_representatives(n, k, reps));
    }
    std::sort(out.begin(), out.end(), [](const CyclicMatroid& a, const CyclicMatroid& b) {
        if (a.basis_count() != b.basis_count()) return a.basis_count() < b.basis_count();
        return a.representatives() < b.representatives();
    });
    return out;
}

std::uint64_t min_bases(std::uint32_t n, std::uint32_t k) {
    return enumerate_cyclic_matroids(n, k).front().basis_count();
}

std::optional<CyclicMatroid> random_cyclic_matroid(const SearchConfig& cfg) {
    OrbitSpace sp = make_orbit_space(cfg.n, cfg.k);
    const std::uint32_t m = static_cast<std::uint32_t>(sp.orbits.size());
    std::vector<std::uint8_t> current(m, 1);
    std::uint32_t dropped = 0;

    SplitMix64 rng(SplitMix64(cfg.seed).next());
    std::uint64_t failures = 0;
    while (failures < cfg.max_candidates && dropped + 1 < m) {
        std::vector<std::uint32_t> removable;
        for (std::uint32_t i = 0; i < m; ++i)
            if (i != sp.interval_index && current[i]) removable.push_back(i);
        if (removable.empty()) break;
        const std::uint32_t pick =
            removable[static_cast<std::size_t>(rng.below(removable.size()))];
        std::vector<std::uint8_t> cand = current;
        cand[pick] = 0;
        BasesSet fam(sp.n, sp.expand(cand));
        if (!verify_exchange_axiom(fam)) {
            current = std::move(cand);
            ++dropped;
            failures = 0;
        } else {
            ++failures;
        }
    }

    if (cfg.require_nonuniform && dropped == 0) return std::nullopt;
    std::vector<ZnSubset> reps;
    for (std::uint32_t i = 0; i < m; ++i)
        if (current[i]) reps.push_back(sp.orbits[i].representative);
    return CyclicMatroid::from_orbit_representatives(cfg.n, cfg.k, reps);
}

VerificationReport verify_matroid_document(const MatroidDocument& doc) {
    VerificationReport rep;
    rep.n = doc.n;
    rep.k = doc.k;
    try {
        CyclicMatroid m =
            CyclicMatroid::from_orbit_representatives(doc.n, doc.k, doc.orbit_representatives);
        rep.valid = true;
        rep.basis_count = m.basis_count();
        rep.orbit_count = m.basis_orbits().size();
        rep.matroid = std::move(m);
    } catch (const axiom_error& e) {
        rep.failure = e.what();
        rep.witness = e.witness();
    } catch (const error& e) {
        rep.failure = e.what();
    }
    if (doc.n >= 3 && doc.k >= 2 && doc.k + 1 <= doc.n) {
        rep.bound = m_best(doc.n, doc.k).m_best;
        rep.meets_bound = rep.valid && rep.basis_count >= rep.bound;
    } else {
        rep.meets_bound = rep.valid;
    }
    return rep;
}

} // namespace cymat

#include "cymat/matroid.hpp"

#include <algorithm>
#include <map>

#include "cymat/jobs.hpp"

namespace cymat {

BasesSet::BasesSet(std::uint32_t n, std::vector<std::uint64_t> member_masks) : n_(n) {
    if (member_masks.empty()) throw error(errc::empty_family, "no members");
    std::sort(member_masks.begin(), member_masks.end());
    member_masks.erase(std::unique(member_masks.begin(), member_masks.end()),
                       member_masks.end());
    const std::uint64_t full = ZnSubset::full_mask(n);
    k_ = static_cast<std::uint32_t>(std::popcount(member_masks.front()));
    for (std::uint64_t m : member_masks) {
        if (m & ~full) throw error(errc::out_of_range, "member has element >= n");
        if (static_cast<std::uint32_t>(std::popcount(m)) != k_)
            throw error(errc::non_uniform_cardinality, "member sizes differ");
    }
    set_.reserve(member_masks.size() * 2);
    set_.insert(member_masks.begin(), member_masks.end());
    members_ = std::move(member_masks);
}

namespace {

// first failing (i, j, x) within pair index range [begin, end); pairs are
// flattened as idx = i * count + j
std::optional<std::pair<std::size_t, exchange_witness>>
scan_pairs(const BasesSet& b, std::size_t begin, std::size_t end) {
    const auto& mem = b.members();
    const std::size_t count = mem.size();
    for (std::size_t idx = begin; idx < end; ++idx) {
        const std::uint64_t b1 = mem[idx / count];
        const std::uint64_t b2 = mem[idx % count];
        std::uint64_t xs = b1 & ~b2;
        while (xs) {
            const std::uint64_t xbit = xs & (~xs + 1);
            xs &= xs - 1;
            const std::uint64_t base = b1 ^ xbit;
            std::uint64_t ys = b2 & ~b1;
            bool found = false;
            while (ys) {
                const std::uint64_t ybit = ys & (~ys + 1);
                ys &= ys - 1;
                if (b.contains(base | ybit)) {
                    found = true;
                    break;
                }
            }
            if (!found) {
                exchange_witness w{b1, b2,
                                   static_cast<std::uint32_t>(std::countr_zero(xbit))};
                return std::make_pair(idx, w);
            }
        }
    }
    return std::nullopt;
}

} // namespace

std::optional<exchange_witness> verify_exchange_axiom(const BasesSet& b) {
    const std::size_t count = b.size();
    const std::size_t total = count * count;
    std::vector<std::optional<std::pair<std::size_t, exchange_witness>>> local(
        std::max<std::size_t>(1, jobs()));
    parallel_chunks(total, [&](std::size_t lo, std::size_t hi, std::size_t chunk) {
        local[chunk % local.size()] = scan_pairs(b, lo, hi);
    });
    std::optional<std::pair<std::size_t, exchange_witness>> best;
    for (const auto& cand : local)
        if (cand && (!best || cand->first < best->first)) best = cand;
    if (best) return best->second;
    return std::nullopt;
}

std::optional<ZnSubset> verify_multiple_exchange(const BasesSet& b, const ZnSubset& b1,
                                                 const ZnSubset& b2, const ZnSubset& q) {
    if (b1.modulus() != b.modulus() || b2.modulus() != b.modulus() ||
        q.modulus() != b.modulus())
        throw error(errc::out_of_range, "modulus mismatch");
    if (!b.contains(b1.mask()) || !b.contains(b2.mask()))
        throw error(errc::not_members, "b1 or b2 not in the family");
    const std::uint64_t diff12 = b1.mask() & ~b2.mask();
    if (q.mask() & ~diff12) throw error(errc::bad_subset, "q not a subset of b1\\b2");

    const std::uint64_t base = b1.mask() & ~q.mask();
    const std::uint64_t pool = b2.mask() & ~b1.mask();
    // submasks of pool in ascending numeric order
    std::uint64_t p = 0;
    while (true) {
        if (b.contains(base | p)) return ZnSubset(b.modulus(), p);
        if (p == pool) break;
        p = (p - pool) & pool;
    }
    return std::nullopt;
}

bool is_cyclic(const BasesSet& b) {
    const std::uint32_t n = b.modulus();
    for (std::uint64_t m : b.members())
        if (!b.contains(ZnSubset(n, m).shift(1).mask())) return false;
    return true;
}

CyclicMatroid CyclicMatroid::build(std::uint32_t n, std::uint32_t k,
                                   const std::vector<ZnSubset>& reps, bool allow_degenerate) {
    if (!allow_degenerate && (k == 0 || k >= n))
        throw error(errc::degenerate_rank,
                    "rank must be in [1, n-1], got k=" + std::to_string(k));
    if (k > n) throw error(errc::out_of_range, "rank exceeds ground set");
    if (reps.empty()) throw error(errc::empty_family, "no orbit representatives");

    std::map<std::uint64_t, Orbit> orbits;
    std::vector<std::uint64_t> expanded;
    for (const ZnSubset& r : reps) {
        if (r.modulus() != n) throw error(errc::out_of_range, "modulus mismatch");
        if (r.size() != k)
            throw error(errc::wrong_cardinality,
                        "representative " + r.str() + " has size != k");
        Orbit o = orbit(r);
        if (orbits.emplace(o.representative.mask(), o).second)
            for (std::uint32_t s = 0; s < o.size; ++s)
                expanded.push_back(o.representative.shift(s).mask());
    }
    BasesSet family(n, std::move(expanded));

    const ZnSubset b0 = ZnSubset::interval(n, k);
    if (!family.contains(b0.mask()))
        throw error(errc::missing_cyclic_basis,
                    "interval basis " + b0.str() + " is not in the family");
    if (auto w = verify_exchange_axiom(family))
        throw axiom_error(*w, "exchange fails at b1=" + ZnSubset(n, w->b1).str() +
                                  " b2=" + ZnSubset(n, w->b2).str() +
                                  " x=" + std::to_string(w->x));

    std::vector<Orbit> sorted;
    sorted.reserve(orbits.size());
    std::uint64_t count = 0;
    for (auto& [mask, o] : orbits) {
        count += o.size;
        sorted.push_back(std::move(o));
    }
    return CyclicMatroid(n, k, std::move(sorted), count);
}

CyclicMatroid CyclicMatroid::from_orbit_representatives(std::uint32_t n, std::uint32_t k,
                                                        const std::vector<ZnSubset>& reps) {
    return build(n, k, reps, false);
}

CyclicMatroid CyclicMatroid::from_orbit_representatives_any_rank(
    std::uint32_t n, std::uint32_t k, const std::vector<ZnSubset>& reps) {
    return build(n, k, reps, true);
}

CyclicMatroid CyclicMatroid::from_family(const BasesSet& family, bool check_axiom) {
    const std::uint32_t n = family.modulus();
    const std::uint32_t k = family.cardinality();
    if (!is_cyclic(family))
        throw error(errc::cyclicity_violation, "family is not closed under shifts");
    const ZnSubset b0 = ZnSubset::interval(n, k);
    if (!family.contains(b0.mask()))
        throw error(errc::missing_cyclic_basis,
                    "interval basis " + b0.str() + " is not in the family");
    if (check_axiom)
        if (auto w = verify_exchange_axiom(family))
            throw axiom_error(*w, "exchange fails at b1=" + ZnSubset(n, w->b1).str() +
                                      " b2=" + ZnSubset(n, w->b2).str() +
                                      " x=" + std::to_string(w->x));
    std::map<std::uint64_t, Orbit> orbits;
    for (std::uint64_t m : family.members()) {
        Orbit o = orbit(ZnSubset(n, m));
        orbits.emplace(o.representative.mask(), o);
    }
    std::vector<Orbit> sorted;
    sorted.reserve(orbits.size());
    std::uint64_t count = 0;
    for (auto& [mask, o] : orbits) {
        count += o.size;
        sorted.push_back(std::move(o));
    }
    if (count != family.size())
        throw error(errc::cyclicity_violation, "family is not a union of full orbits");
    return CyclicMatroid(n, k, std::move(sorted), count);
}

BasesSet CyclicMatroid::expand() const {
    std::vector<std::uint64_t> masks;
    masks.reserve(basis_count_);
    for (const Orbit& o : orbits_)
        for (std::uint32_t s = 0; s < o.size; ++s)
            masks.push_back(o.representative.shift(s).mask());
    return BasesSet(n_, std::move(masks));
}

std::vector<ZnSubset> CyclicMatroid::representatives() const {
    std::vector<ZnSubset> out;
    out.reserve(orbits_.size());
    for (const Orbit& o : orbits_) out.push_back(o.representative);
    return out;
}

CyclicMatroid dual(const CyclicMatroid& m) {
    std::vector<ZnSubset> reps;
    for (const Orbit& o : m.basis_orbits()) reps.push_back(o.representative.complement());
    return CyclicMatroid::from_orbit_representatives_any_rank(m.modulus(),
                                                              m.modulus() - m.rank(), reps);
}

std::uint32_t subset_rank(const BasesSet& b, std::uint64_t subset_mask) {
    std::uint32_t best = 0;
    for (std::uint64_t m : b.members())
        best = std::max(best, static_cast<std::uint32_t>(std::popcount(m & subset_mask)));
    return best;
}

bool is_connected(const BasesSet& b) {
    const std::uint32_t n = b.modulus();
    const std::uint64_t full = ZnSubset::full_mask(n);
    const std::uint32_t k = b.cardinality();
    // fix element 0 on the E1 side to halve the partition scan
    for (std::uint64_t e1 = 1; e1 < full; e1 += 2) {
        const std::uint64_t e2 = full ^ e1;
        if (!e2) continue;
        if (subset_rank(b, e1) + subset_rank(b, e2) == k) return false;
    }
    return true;
}

std::uint32_t cyclic_basis_intersection_excess(std::uint32_t n, std::uint32_t k, std::uint32_t i,
                                               std::uint32_t j) {
    if (k < 1 || k > n - 1 || j < 1 || j > i || i > n - 1)
        throw error(errc::out_of_range, "need 1 <= j <= i <= n-1 and 1 <= k <= n-1");
    if (i - j >= k) return 0;
    return j + k - std::max(k, i);
}

std::vector<std::uint32_t> trivially_intersecting_cyclic_bases(std::uint32_t n, std::uint32_t k,
                                                               const ZnSubset& q) {
    if (q.is_empty()) throw error(errc::empty_set, "q must be nonempty");
    if (q.mask() & ~ZnSubset::interval(n, k).mask())
        throw error(errc::bad_subset, "q must be a subset of the interval basis");
    auto elems = q.elements();
    const std::uint32_t q1 = elems.front();
    const std::uint32_t q2 = elems.back();
    if (q2 - q1 >= n - k)
        throw error(errc::spread_too_large, "spread of q must be below n-k");
    std::vector<std::uint32_t> out;
    for (std::uint32_t i = q2 - q1 + 1; i <= n - k; ++i) out.push_back(q1 + i);
    return out;
}

std::uint64_t distinct_exchange_count(std::uint32_t n, std::uint32_t k, const ZnSubset& q) {
    if (q.is_empty()) throw error(errc::empty_set, "q must be nonempty");
    if (q.mask() & ~ZnSubset::interval(n, k).mask())
        throw error(errc::bad_subset, "q must be a subset of the interval basis");
    auto elems = q.elements();
    const std::uint32_t q1 = elems.front();
    const std::uint32_t q2 = elems.back();
    const std::uint32_t r = q.size();
    if (q2 - q1 >= n - k)
        throw error(errc::spread_too_large, "spread of q must be below n-k");
    return (n - k - q2 + q1 - 1) / (k - r + 1) + 1;
}

} // namespace cymat

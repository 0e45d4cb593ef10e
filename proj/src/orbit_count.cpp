#include "cymat/orbit_count.hpp"

#include <cstdlib>
#include <numeric>
#include <string>

#include "cymat/bounds.hpp"
#include "cymat/errors.hpp"

namespace cymat {

std::uint64_t brute_force_cap() {
    static const std::uint64_t cap = [] {
        if (const char* env = std::getenv("CYMAT_BRUTE_CAP")) {
            char* end = nullptr;
            unsigned long long v = std::strtoull(env, &end, 10);
            if (end && *end == '\0' && v > 0) return static_cast<std::uint64_t>(v);
        }
        return std::uint64_t{5'000'000};
    }();
    return cap;
}

std::vector<Orbit> orbits_brute_force(std::uint32_t n, std::uint32_t k, std::uint64_t cap) {
    if (k > n) throw error(errc::out_of_range, "k > n");
    if (safe_binomial(n, k) > cap)
        throw error(errc::too_large, "binom(" + std::to_string(n) + "," + std::to_string(k) +
                                         ") exceeds cap " + std::to_string(cap));
    std::vector<Orbit> out;
    if (k == 0) {
        out.push_back(orbit(ZnSubset::empty(n)));
        return out;
    }
    // Gosper scan of all k-subsets ascending; a mask is an orbit
    // representative iff it equals its canonical shift
    const std::uint64_t limit = 1ull << n;
    std::uint64_t m = (1ull << k) - 1;
    while (m < limit) {
        ZnSubset a(n, m);
        if (canonical_shift_mask(a) == m) out.push_back(orbit(a));
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }
    return out;
}

std::uint64_t count_orbits_burnside(std::uint32_t n, std::uint32_t k) {
    if (k > n) throw error(errc::out_of_range, "k > n");
    std::uint64_t total = 0;
    for (std::uint32_t s = 0; s < n; ++s) {
        const std::uint32_t g = s == 0 ? n : std::gcd(n, s);
        if ((std::uint64_t{k} * g) % n == 0) total += safe_binomial(g, std::uint64_t{k} * g / n);
    }
    return total / n;
}

std::uint64_t count_orbits_by_length(std::uint32_t n, std::uint32_t k, std::uint32_t r) {
    if (k < 1 || k + 1 > n) throw error(errc::out_of_range, "need 1 <= k <= n-1");
    if (r < 1 || r > std::min(k, n - k))
        throw error(errc::out_of_range, "need 1 <= r <= min(k, n-k)");
    std::uint64_t total = 0;
    for (std::uint32_t g = 1; g <= r; ++g) {
        if (r % g != 0) continue;
        const std::uint32_t d = r / g; // rotation order whose fixed pairs repeat d times
        if (k % d != 0 || (n - k) % d != 0) continue;
        total += std::uint64_t{euler_phi(d)} *
                 safe_binomial(k / d - 1, g - 1) * safe_binomial((n - k) / d - 1, g - 1);
    }
    return total / r;
}

OrbitCensus total_orbits_by_composition(std::uint32_t n, std::uint32_t k) {
    if (k < 1 || k + 1 > n) throw error(errc::out_of_range, "need 1 <= k <= n-1");
    OrbitCensus c;
    c.n = n;
    c.k = k;
    for (std::uint32_t r = 1; r <= std::min(k, n - k); ++r) {
        const std::uint64_t cnt = count_orbits_by_length(n, k, r);
        c.per_length[r] = cnt;
        c.total += cnt;
    }
    return c;
}

std::string census_csv(const OrbitCensus& c) {
    std::string out = "n,k,r,orbit_count\n";
    const std::string prefix = std::to_string(c.n) + "," + std::to_string(c.k) + ",";
    for (const auto& [r, cnt] : c.per_length)
        out += prefix + std::to_string(r) + "," + std::to_string(cnt) + "\n";
    out += prefix + "total," + std::to_string(c.total) + "\n";
    return out;
}

CompositionPair composition_bijection(const ZnSubset& d) {
    if (d.is_empty() || d.is_full())
        throw error(errc::degenerate_set, "composition pair needs a proper nonempty subset");
    const std::uint32_t n = d.modulus();
    CompositionPair pair;
    for (const Block& b : block_structure(d).blocks) {
        pair.c_a.push_back(b.length);
        std::uint32_t gap = 0;
        while (!d.contains((b.start + b.length + gap) % n)) ++gap;
        pair.c_b.push_back(gap);
    }
    return pair;
}

ZnSubset reconstruct_from_composition(std::uint32_t n, const CompositionPair& pair) {
    if (pair.c_a.empty() || pair.c_a.size() != pair.c_b.size())
        throw error(errc::degenerate_set, "pair lengths differ or empty");
    std::uint64_t sum = 0;
    for (std::uint32_t v : pair.c_a) sum += v;
    for (std::uint32_t v : pair.c_b) sum += v;
    if (sum != n) throw error(errc::out_of_range, "pair does not sum to n");
    std::uint64_t mask = 0;
    std::uint32_t pos = 0;
    for (std::size_t i = 0; i < pair.c_a.size(); ++i) {
        if (pair.c_a[i] == 0 || pair.c_b[i] == 0)
            throw error(errc::out_of_range, "composition entries must be positive");
        for (std::uint32_t t = 0; t < pair.c_a[i]; ++t) mask |= 1ull << (pos + t);
        pos += pair.c_a[i] + pair.c_b[i];
    }
    return ZnSubset(n, mask);
}

bool same_pair_orbit(const CompositionPair& a, const CompositionPair& b) {
    if (a.c_a.size() != b.c_a.size()) return false;
    const std::size_t r = a.c_a.size();
    for (std::size_t s = 0; s < r; ++s) {
        bool match = true;
        for (std::size_t i = 0; i < r && match; ++i)
            match = a.c_a[(i + s) % r] == b.c_a[i] && a.c_b[(i + s) % r] == b.c_b[i];
        if (match) return true;
    }
    return false;
}

std::uint32_t euler_phi(std::uint32_t m) {
    std::uint32_t result = m;
    for (std::uint32_t p = 2; p * p <= m; ++p) {
        if (m % p != 0) continue;
        while (m % p == 0) m /= p;
        result -= result / p;
    }
    if (m > 1) result -= result / m;
    return result;
}

} // namespace cymat

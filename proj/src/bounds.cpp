#include "cymat/bounds.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <sstream>

#include "cymat/errors.hpp"

namespace cymat {

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_mul_overflow(a, b, &r)) throw error(errc::overflow, "bound value > 2^64");
    return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
    std::uint64_t r = 0;
    if (__builtin_add_overflow(a, b, &r)) throw error(errc::overflow, "bound value > 2^64");
    return r;
}

} // namespace

std::uint64_t safe_binomial(std::int64_t a, std::int64_t b) {
    if (b == -1) return a == -1 ? 1 : 0;
    if (b < 0) return 0;
    if (a < 0) return 0;
    if (b > a) return 0;
    const std::uint64_t m = static_cast<std::uint64_t>(std::min(b, a - b));
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= m; ++i) {
        acc = acc * (static_cast<std::uint64_t>(a) - m + i) / i;
        if (acc > ~std::uint64_t{0}) throw error(errc::overflow, "binomial > 2^64");
    }
    return static_cast<std::uint64_t>(acc);
}

std::uint64_t m1(std::uint32_t n, std::uint32_t k) {
    if (k < 2 || k + 1 > n) return 0;
    std::uint64_t total = 1;
    const std::uint32_t dmax = std::min(k - 1, n - k - 1);
    for (std::uint32_t d = 0; d <= dmax; ++d) {
        for (std::uint32_t r = 1; r <= d + 1; ++r) {
            const std::int64_t num = static_cast<std::int64_t>(n) - k - d - 1;
            if (num < 0) continue;
            const std::uint64_t reach =
                static_cast<std::uint64_t>(num) / (k - r + 1) + 1;
            total = checked_add(
                total, checked_mul(checked_mul(k - d, safe_binomial(d - 1, r - 2)), reach));
        }
    }
    return total;
}

std::uint64_t m2(std::uint32_t n, std::uint32_t k) {
    if (k < 2 || k + 1 > n) return 0;
    const std::uint32_t l = n / k - 1;          // full interval blocks beyond the first
    const std::uint32_t cap = n - (l + 1) * k;  // outside part of the wrapped block
    const std::uint32_t overlap = (l + 2) * k - n;
    std::uint64_t total = 1;
    for (std::uint32_t t = 1; t <= k; ++t) {
        for (std::uint32_t j = 0; j <= std::min(cap, t); ++j) {
            const std::uint32_t m = t - j;
            std::uint64_t ways;
            if (m == 0)
                ways = l >= 1 ? 2 : 1; // m == 0 counts double when full blocks exist
            else
                ways = safe_binomial(static_cast<std::int64_t>(m) + l - 1,
                                     static_cast<std::int64_t>(l) - 1);
            if (ways == 0) continue;
            total = checked_add(
                total, checked_mul(checked_mul(safe_binomial(overlap, j),
                                               safe_binomial(k - j, m)),
                                   ways));
        }
    }
    return total;
}

std::uint64_t m3(std::uint32_t n, std::uint32_t k) {
    if (n < 3 || k < 2 || k + 1 > n) return 0;
    // k == n-1: the complement of a basis is a single point, so every basis
    // is a shift of the interval and exactly one orbit is guaranteed
    if (k == n - 1) return n;
    const std::uint32_t x = (k / 2 + 2) / 3; // >= 1 for k >= 2
    const std::uint32_t M = 31 - std::countl_zero(x);
    return checked_mul(std::uint64_t{M} + k / 4 + 1, n / std::gcd(n, k));
}

BoundReport m_best(std::uint32_t n, std::uint32_t k) {
    if (n < 3 || k < 2 || k + 1 > n)
        throw error(errc::out_of_range, "need n >= 3 and 2 <= k <= n-1");
    BoundReport r;
    r.n = n;
    r.k = k;
    r.m1_k = m1(n, k);
    r.m1_nk = m1(n, n - k);
    r.m2_k = m2(n, k);
    r.m2_nk = m2(n, n - k);
    r.m3_k = m3(n, k);
    r.m3_nk = m3(n, n - k);
    std::uint64_t vals[6] = {r.m1_k, r.m1_nk, r.m2_k, r.m2_nk, r.m3_k, r.m3_nk};
    std::uint64_t best = 0;
    const bool coprime = std::gcd(n, k) == 1;
    for (std::uint64_t v : vals) {
        if (coprime) v = checked_mul((v + n - 1) / n, n); // orbits are full: round up
        best = std::max(best, v);
    }
    r.m_best = best;
    return r;
}

std::vector<BoundReport> bounds_table(std::uint32_t n) {
    if (n < 4) throw error(errc::out_of_range, "table requires n >= 4");
    std::vector<BoundReport> rows;
    for (std::uint32_t k = 2; k <= n / 2; ++k) rows.push_back(m_best(n, k));
    return rows;
}

const char* const bounds_csv_header = "k,m1_k,m1_nk,m2_k,m2_nk,m3_k,m3_nk,mB";

std::string bounds_csv_row(const BoundReport& r) {
    std::string out;
    for (std::uint64_t v : {std::uint64_t{r.k}, r.m1_k, r.m1_nk, r.m2_k, r.m2_nk, r.m3_k,
                            r.m3_nk, r.m_best}) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

BoundReport bounds_csv_parse_row(const std::string& line, std::uint32_t n) {
    std::uint64_t vals[8];
    const char* p = line.data();
    const char* end = line.data() + line.size();
    for (int i = 0; i < 8; ++i) {
        const char* comma = p;
        while (comma < end && *comma != ',') ++comma;
        auto [q, ec] = std::from_chars(p, comma, vals[i]);
        if (ec != std::errc() || q != comma)
            throw error(errc::parse_error, "bad csv row: " + line);
        p = comma + 1;
    }
    BoundReport r;
    r.n = n;
    r.k = static_cast<std::uint32_t>(vals[0]);
    r.m1_k = vals[1];
    r.m1_nk = vals[2];
    r.m2_k = vals[3];
    r.m2_nk = vals[4];
    r.m3_k = vals[5];
    r.m3_nk = vals[6];
    r.m_best = vals[7];
    return r;
}

std::string bounds_text_table(const std::vector<BoundReport>& rows) {
    const char* names[8] = {"k",       "m1(n,k)", "m1(n,n-k)", "m2(n,k)",
                            "m2(n,n-k)", "m3(n,k)", "m3(n,n-k)", "m_B"};
    std::vector<std::vector<std::string>> cells;
    cells.emplace_back(names, names + 8);
    for (const BoundReport& r : rows) {
        std::vector<std::string> row;
        for (std::uint64_t v : {std::uint64_t{r.k}, r.m1_k, r.m1_nk, r.m2_k, r.m2_nk, r.m3_k,
                                r.m3_nk, r.m_best})
            row.push_back(std::to_string(v));
        cells.push_back(std::move(row));
    }
    std::size_t width[8] = {};
    for (const auto& row : cells)
        for (int c = 0; c < 8; ++c) width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (int c = 0; c < 8; ++c) {
            if (c) out << "  ";
            out << std::string(width[c] - row[c].size(), ' ') << row[c];
        }
        out << '\n';
    }
    return out.str();
}

KRule parse_krule(const std::string& name) {
    if (name == "n/2") return KRule::half;
    if (name == "n/3") return KRule::third;
    if (name == "n/4") return KRule::quarter;
    if (name == "n-2") return KRule::n_minus_2;
    if (name == "n-3") return KRule::n_minus_3;
    if (name == "n/3-exact") return KRule::exact_third;
    throw error(errc::parse_error,
                "unknown rule '" + name + "' (n/2, n/3, n/4, n-2, n-3, n/3-exact)");
}

std::vector<FigurePoint> figure_fixed_n(std::uint32_t n) {
    if (n < 4) throw error(errc::out_of_range, "need n >= 4");
    std::vector<FigurePoint> pts;
    for (std::uint32_t k = 2; k + 2 <= n; ++k)
        pts.push_back({n, k, m1(n, k), m2(n, k), m3(n, k)});
    return pts;
}

std::vector<FigurePoint> figure_rule(KRule rule, std::uint32_t n_min, std::uint32_t n_max) {
    std::vector<FigurePoint> pts;
    for (std::uint32_t n = n_min; n <= n_max; ++n) {
        std::int64_t k = -1;
        switch (rule) {
            case KRule::half: k = n / 2; break;
            case KRule::third: k = n / 3; break;
            case KRule::quarter: k = n / 4; break;
            case KRule::n_minus_2: k = static_cast<std::int64_t>(n) - 2; break;
            case KRule::n_minus_3: k = static_cast<std::int64_t>(n) - 3; break;
            case KRule::exact_third:
                if (n % 3 != 0) continue;
                k = n / 3;
                break;
        }
        if (k < 2 || k + 1 > n) continue;
        const std::uint32_t ku = static_cast<std::uint32_t>(k);
        pts.push_back({n, ku, m1(n, ku), m2(n, ku), m3(n, ku)});
    }
    return pts;
}

const char* const figure_csv_header = "n,k,m1,m2,m3";

std::string figure_csv(const std::vector<FigurePoint>& pts) {
    std::string out = figure_csv_header;
    out += '\n';
    for (const FigurePoint& p : pts) {
        out += std::to_string(p.n);
        out += ',';
        out += std::to_string(p.k);
        out += ',';
        out += std::to_string(p.v1);
        out += ',';
        out += std::to_string(p.v2);
        out += ',';
        out += std::to_string(p.v3);
        out += '\n';
    }
    return out;
}

} // namespace cymat

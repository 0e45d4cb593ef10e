#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cymat {

/// Binomial coefficient with the extended convention used throughout the
/// bound formulas:
///   binom(-1, -1) = 1; binom(a, -1) = 0 for a != -1;
///   binom(a, b) = 0 for b < -1, for a < 0 with b >= 0, and for b > a >= 0;
///   the standard value otherwise. Exact; throws on 64-bit overflow.
std::uint64_t safe_binomial(std::int64_t a, std::int64_t b);

/// Lower bounds on the number of bases of a cyclic k-matroid on Z_n.
/// Each returns 0 outside its domain 2 <= k <= n-1 (m3 additionally n >= 3).
std::uint64_t m1(std::uint32_t n, std::uint32_t k);
std::uint64_t m2(std::uint32_t n, std::uint32_t k);
std::uint64_t m3(std::uint32_t n, std::uint32_t k);

/// The six bound values at ranks k and n-k plus the combined best bound.
struct BoundReport {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t m1_k = 0, m1_nk = 0;
    std::uint64_t m2_k = 0, m2_nk = 0;
    std::uint64_t m3_k = 0, m3_nk = 0;
    std::uint64_t m_best = 0;

    bool operator==(const BoundReport&) const = default;
};

/// max over the six values; when gcd(n, k) = 1 every orbit is full, so each
/// value is first rounded up to a multiple of n.
BoundReport m_best(std::uint32_t n, std::uint32_t k);

/// One report per k = 2 .. floor(n/2). Requires n >= 4.
std::vector<BoundReport> bounds_table(std::uint32_t n);

/// CSV row "k,m1_k,m1_nk,m2_k,m2_nk,m3_k,m3_nk,mB" (header constant below).
extern const char* const bounds_csv_header;
std::string bounds_csv_row(const BoundReport& r);
BoundReport bounds_csv_parse_row(const std::string& line, std::uint32_t n);

/// Aligned plain-text table of the given reports.
std::string bounds_text_table(const std::vector<BoundReport>& rows);

/// One (n, k, m1, m2, m3) sample of the figure series.
struct FigurePoint {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::uint64_t v1 = 0, v2 = 0, v3 = 0;

    bool operator==(const FigurePoint&) const = default;
};

enum class KRule { half, third, quarter, n_minus_2, n_minus_3, exact_third };

KRule parse_krule(const std::string& name); // "n/2", "n/3", "n/4", "n-2", "n-3", "n/3-exact"

/// Fixed-n sweep over k = 2 .. n-2.
std::vector<FigurePoint> figure_fixed_n(std::uint32_t n);

/// k(n) per rule over n in [n_min, n_max]; points with k outside [2, n-1]
/// are skipped, and the exact_third rule emits only multiples of 3.
std::vector<FigurePoint> figure_rule(KRule rule, std::uint32_t n_min, std::uint32_t n_max);

extern const char* const figure_csv_header; // "n,k,m1,m2,m3"
std::string figure_csv(const std::vector<FigurePoint>& pts);

} // namespace cymat

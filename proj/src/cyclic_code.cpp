#include "cymat/cyclic_code.hpp"

#include <algorithm>

#include "cymat/bounds.hpp"
#include "cymat/jobs.hpp"

namespace cymat {

CyclicCode::CyclicCode(std::uint32_t p, std::uint32_t n, fp::Poly generator)
    : p_(p), n_(n), g_(fp::trim(std::move(generator))) {
    if (!is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
    if (n < 2 || n > max_modulus) throw error(errc::out_of_range, "length out of range");
    const int deg = fp::degree(g_);
    if (deg < 1 || deg >= static_cast<int>(n))
        throw error(errc::out_of_range, "generator degree must be in [1, n-1]");
    if (g_.back() != 1) throw error(errc::out_of_range, "generator must be monic");
    for (std::uint32_t c : g_)
        if (c >= p) throw error(errc::out_of_range, "generator coefficient >= p");
    if (!fp::divrem(fp::xn_minus_1(n, p), g_, p).second.empty())
        throw error(errc::out_of_range, "generator does not divide x^n - 1");
    k_ = n - static_cast<std::uint32_t>(deg);
}

CyclicCode CyclicCode::parse(const std::string& spec) {
    std::uint32_t p = 0, n = 0;
    fp::Poly g;
    std::size_t pos = 0;
    while (pos < spec.size()) {
        std::size_t semi = spec.find(';', pos);
        if (semi == std::string::npos) semi = spec.size();
        const std::string part = spec.substr(pos, semi - pos);
        const std::size_t eq = part.find('=');
        if (eq == std::string::npos)
            throw error(errc::parse_error, "expected key=value in '" + part + "'");
        const std::string key = part.substr(0, eq);
        const std::string val = part.substr(eq + 1);
        try {
            if (key == "p") {
                p = static_cast<std::uint32_t>(std::stoul(val));
            } else if (key == "n") {
                n = static_cast<std::uint32_t>(std::stoul(val));
            } else if (key == "g") {
                std::size_t vp = 0;
                while (vp <= val.size()) {
                    std::size_t comma = val.find(',', vp);
                    if (comma == std::string::npos) comma = val.size();
                    g.push_back(static_cast<std::uint32_t>(std::stoul(val.substr(vp, comma - vp))));
                    vp = comma + 1;
                    if (comma == val.size()) break;
                }
            } else {
                throw error(errc::parse_error, "unknown key '" + key + "'");
            }
        } catch (const std::invalid_argument&) {
            throw error(errc::parse_error, "bad number in '" + part + "'");
        } catch (const std::out_of_range&) {
            throw error(errc::parse_error, "number out of range in '" + part + "'");
        }
        pos = semi + 1;
    }
    if (p == 0 || n == 0 || g.empty())
        throw error(errc::parse_error, "code spec needs p=, n=, g=");
    return CyclicCode(p, n, std::move(g));
}

GfMatrix CyclicCode::generator_matrix() const {
    Gf field = Gf::prime_field(p_);
    GfMatrix m(field, k_, n_);
    for (std::uint32_t i = 0; i < k_; ++i)
        for (std::size_t d = 0; d < g_.size(); ++d) m.set(i, i + static_cast<std::uint32_t>(d), g_[d]);
    return m;
}

std::string CyclicCode::str() const {
    std::string out = "p=" + std::to_string(p_) + ";n=" + std::to_string(n_) + ";g=";
    for (std::size_t i = 0; i < g_.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(g_[i]);
    }
    return out;
}

namespace {

// rank == k test for the k columns selected by colmask, F_2 fast path
bool f2_columns_independent(const std::vector<std::uint64_t>& rows, std::uint64_t colmask) {
    std::uint64_t basis[64] = {};
    std::size_t cnt = 0;
    for (std::uint64_t r : rows) {
        std::uint64_t v = r & colmask;
        while (v) {
            const int h = 63 - std::countl_zero(v);
            if (!basis[h]) {
                basis[h] = v;
                ++cnt;
                break;
            }
            v ^= basis[h];
        }
        if (!v) return false; // dependent row, rank short of k
    }
    return cnt == rows.size();
}

bool gf_columns_independent(const GfMatrix& g, const std::vector<std::uint32_t>& cols) {
    const Gf& f = g.field();
    const std::uint32_t k = g.rows();
    std::vector<Gf::Elem> m(std::size_t{k} * k);
    for (std::uint32_t i = 0; i < k; ++i)
        for (std::uint32_t j = 0; j < k; ++j) m[std::size_t{i} * k + j] = g.at(i, cols[j]);
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < k && r < k; ++c) {
        std::uint32_t piv = r;
        while (piv < k && m[std::size_t{piv} * k + c] == 0) ++piv;
        if (piv == k) return false;
        if (piv != r)
            for (std::uint32_t j = 0; j < k; ++j)
                std::swap(m[std::size_t{r} * k + j], m[std::size_t{piv} * k + j]);
        const Gf::Elem scale = f.inv(m[std::size_t{r} * k + c]);
        for (std::uint32_t j = 0; j < k; ++j)
            m[std::size_t{r} * k + j] = f.mul(m[std::size_t{r} * k + j], scale);
        for (std::uint32_t i = r + 1; i < k; ++i) {
            const Gf::Elem factor = m[std::size_t{i} * k + c];
            if (factor == 0) continue;
            for (std::uint32_t j = 0; j < k; ++j)
                m[std::size_t{i} * k + j] =
                    f.sub(m[std::size_t{i} * k + j], f.mul(factor, m[std::size_t{r} * k + j]));
        }
        ++r;
    }
    return r == k;
}

} // namespace

BasesSet matroid_from_matrix(const GfMatrix& g) {
    const std::uint32_t k = g.rows();
    const std::uint32_t n = g.cols();
    if (n > max_modulus) throw error(errc::too_large, "too many columns");
    const std::uint64_t count = safe_binomial(n, k);
    if (count > 5'000'000) throw error(errc::too_large, "too many column sets");
    if (rank(g) != k) throw error(errc::rank_deficient, "rows are dependent");

    // candidate column sets ascending by mask
    std::vector<std::uint64_t> candidates;
    candidates.reserve(static_cast<std::size_t>(count));
    const std::uint64_t limit = 1ull << n;
    std::uint64_t m = (1ull << k) - 1;
    while (m < limit) {
        candidates.push_back(m);
        const std::uint64_t c = m & (~m + 1);
        const std::uint64_t r = m + c;
        m = (((r ^ m) >> 2) / c) | r;
    }

    const bool binary = g.field().characteristic() == 2 && g.field().degree() == 1;
    std::vector<std::uint64_t> f2rows;
    if (binary)
        for (std::uint32_t i = 0; i < k; ++i) {
            std::uint64_t row = 0;
            for (std::uint32_t j = 0; j < n; ++j)
                if (g.at(i, j)) row |= 1ull << j;
            f2rows.push_back(row);
        }

    std::vector<std::vector<std::uint64_t>> hits(std::max<std::size_t>(1, jobs()));
    parallel_chunks(candidates.size(), [&](std::size_t lo, std::size_t hi, std::size_t chunk) {
        auto& out = hits[chunk];
        std::vector<std::uint32_t> cols(k);
        for (std::size_t idx = lo; idx < hi; ++idx) {
            const std::uint64_t cand = candidates[idx];
            bool ok;
            if (binary) {
                ok = f2_columns_independent(f2rows, cand);
            } else {
                std::uint64_t cm = cand;
                for (std::uint32_t t = 0; t < k; ++t) {
                    cols[t] = static_cast<std::uint32_t>(std::countr_zero(cm));
                    cm &= cm - 1;
                }
                ok = gf_columns_independent(g, cols);
            }
            if (ok) out.push_back(cand);
        }
    });
    std::vector<std::uint64_t> bases;
    for (auto& h : hits) bases.insert(bases.end(), h.begin(), h.end());
    if (bases.empty()) throw error(errc::empty_family, "no independent column set");
    return BasesSet(n, std::move(bases));
}

CyclicMatroid code_matroid(const CyclicCode& c) {
    BasesSet family = matroid_from_matrix(c.generator_matrix());
    if (!is_cyclic(family))
        throw error(errc::cyclicity_violation, "column matroid of " + c.str());
    return CyclicMatroid::from_family(family, true);
}

} // namespace cymat

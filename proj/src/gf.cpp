#include "cymat/gf.hpp"

#include <algorithm>

namespace cymat {

namespace fp {

Poly trim(Poly a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
    return a;
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
        out[i] = v % p;
    }
    return trim(std::move(out));
}

Poly sub(const Poly& a, const Poly& b, std::uint32_t p) {
    Poly out(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::uint32_t av = i < a.size() ? a[i] : 0;
        std::uint32_t bv = i < b.size() ? b[i] : 0;
        out[i] = (av + p - bv) % p;
    }
    return trim(std::move(out));
}

Poly mul(const Poly& a, const Poly& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = (out[i + j] + std::uint64_t{a[i]} * b[j]) % p;
    return trim(std::move(out));
}

namespace {

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::uint32_t r = 1;
    std::uint32_t base = a % p;
    std::uint32_t e = p - 2;
    while (e) {
        if (e & 1) r = static_cast<std::uint32_t>(std::uint64_t{r} * base % p);
        base = static_cast<std::uint32_t>(std::uint64_t{base} * base % p);
        e >>= 1;
    }
    return r;
}

} // namespace

std::pair<Poly, Poly> divrem(const Poly& a, const Poly& b, std::uint32_t p) {
    if (b.empty()) throw error(errc::out_of_range, "division by zero polynomial");
    Poly rem = a;
    if (degree(rem) < degree(b)) return {Poly{}, trim(std::move(rem))};
    Poly quot(rem.size() - b.size() + 1, 0);
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    for (int d = degree(rem); d >= degree(b); --d) {
        const std::size_t di = static_cast<std::size_t>(d);
        if (di >= rem.size() || rem[di] == 0) continue;
        const std::uint32_t f =
            static_cast<std::uint32_t>(std::uint64_t{rem[di]} * lead_inv % p);
        const std::size_t off = di - (b.size() - 1);
        quot[off] = f;
        for (std::size_t i = 0; i < b.size(); ++i) {
            const std::uint64_t sub = std::uint64_t{f} * b[i] % p;
            rem[off + i] = static_cast<std::uint32_t>((rem[off + i] + p - sub) % p);
        }
    }
    return {trim(std::move(quot)), trim(std::move(rem))};
}

Poly xn_minus_1(std::uint32_t n, std::uint32_t p) {
    Poly out(n + 1, 0);
    out[0] = p - 1;
    out[n] = 1;
    return out;
}

namespace {

// enumerate monic polynomials of exact degree deg by ascending encoding of
// the lower coefficients
template <typename Fn>
bool for_each_monic(std::uint32_t deg, std::uint32_t p, Fn&& fn) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < deg; ++i) count *= p;
    Poly poly(deg + 1, 0);
    poly[deg] = 1;
    for (std::uint64_t enc = 0; enc < count; ++enc) {
        std::uint64_t e = enc;
        for (std::uint32_t i = 0; i < deg; ++i) {
            poly[i] = static_cast<std::uint32_t>(e % p);
            e /= p;
        }
        if (fn(poly)) return true;
    }
    return false;
}

} // namespace

bool is_irreducible(const Poly& a, std::uint32_t p) {
    const int d = degree(a);
    if (d <= 0) return false;
    if (d == 1) return true;
    for (std::uint32_t deg = 1; deg <= static_cast<std::uint32_t>(d) / 2; ++deg) {
        bool divisible = for_each_monic(deg, p, [&](const Poly& div) {
            return divrem(a, div, p).second.empty();
        });
        if (divisible) return false;
    }
    return true;
}

std::vector<Poly> proper_divisors_of_xn_minus_1(std::uint32_t n, std::uint32_t p) {
    const Poly target = xn_minus_1(n, p);
    std::vector<Poly> out;
    for (std::uint32_t deg = 1; deg + 1 <= n; ++deg) {
        for_each_monic(deg, p, [&](const Poly& cand) {
            if (divrem(target, cand, p).second.empty()) out.push_back(cand);
            return false;
        });
    }
    return out;
}

} // namespace fp

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

Gf::Gf(std::uint32_t p, std::uint32_t d, fp::Poly modulus)
    : p_(p), d_(d), modulus_(std::move(modulus)) {
    size_ = 1;
    for (std::uint32_t i = 0; i < d; ++i) {
        size_ *= p;
        if (size_ > (1u << 20))
            throw error(errc::too_large, "field size exceeds 2^20");
    }
}

Gf Gf::prime_field(std::uint32_t p) {
    if (!is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
    return Gf(p, 1, {});
}

Gf Gf::extension_field(std::uint32_t p, std::uint32_t d) {
    if (!is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
    if (d < 2) return prime_field(p);
    fp::Poly found;
    fp::for_each_monic(d, p, [&](const fp::Poly& cand) {
        if (fp::is_irreducible(cand, p)) {
            found = cand;
            return true;
        }
        return false;
    });
    return Gf(p, d, std::move(found));
}

Gf Gf::extension_field(std::uint32_t p, std::uint32_t d, fp::Poly modulus) {
    if (!is_prime(p)) throw error(errc::not_prime, std::to_string(p) + " is not prime");
    if (d < 2) throw error(errc::out_of_range, "extension degree must be >= 2");
    modulus = fp::trim(std::move(modulus));
    if (fp::degree(modulus) != static_cast<int>(d) || modulus.back() != 1)
        throw error(errc::out_of_range, "modulus must be monic of degree d");
    if (!fp::is_irreducible(modulus, p))
        throw error(errc::not_irreducible, "modulus is reducible");
    return Gf(p, d, std::move(modulus));
}

Gf::Elem Gf::add(Elem a, Elem b) const {
    if (d_ == 1) return (a + b) % p_;
    Elem out = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        out += (a % p_ + b % p_) % p_ * mult;
        a /= p_;
        b /= p_;
        mult *= p_;
    }
    return out;
}

Gf::Elem Gf::neg(Elem a) const {
    if (d_ == 1) return (p_ - a % p_) % p_;
    Elem out = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        out += (p_ - a % p_) % p_ * mult;
        a /= p_;
        mult *= p_;
    }
    return out;
}

Gf::Elem Gf::sub(Elem a, Elem b) const { return add(a, neg(b)); }

Gf::Elem Gf::mul(Elem a, Elem b) const {
    if (d_ == 1) return static_cast<Elem>(std::uint64_t{a} * b % p_);
    fp::Poly prod = fp::mul(decode(a), decode(b), p_);
    return encode(fp::divrem(prod, modulus_, p_).second);
}

Gf::Elem Gf::pow(Elem a, std::uint64_t e) const {
    Elem out = one();
    Elem base = a;
    while (e) {
        if (e & 1) out = mul(out, base);
        base = mul(base, base);
        e >>= 1;
    }
    return out;
}

Gf::Elem Gf::inv(Elem a) const {
    if (a == 0) throw error(errc::zero_element, "inverse of zero");
    return pow(a, size_ - 2);
}

fp::Poly Gf::decode(Elem a) const {
    fp::Poly out(d_, 0);
    for (std::uint32_t i = 0; i < d_; ++i) {
        out[i] = a % p_;
        a /= p_;
    }
    return out;
}

Gf::Elem Gf::encode(const fp::Poly& coeffs) const {
    if (coeffs.size() > d_) throw error(errc::out_of_range, "coefficient vector too long");
    Elem out = 0;
    std::uint32_t mult = 1;
    for (std::uint32_t i = 0; i < d_; ++i) {
        if (i < coeffs.size()) out += coeffs[i] % p_ * mult;
        mult *= p_;
    }
    return out;
}

std::string Gf::elem_str(Elem a) const {
    std::string out;
    for (std::uint32_t v : decode(a)) {
        if (!out.empty()) out += ',';
        out += std::to_string(v);
    }
    return out;
}

Gf::Elem Gf::parse_elem(const std::string& text) const {
    fp::Poly coeffs;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
            coeffs.push_back(static_cast<std::uint32_t>(
                std::stoul(text.substr(pos, comma - pos))));
        } catch (const std::exception&) {
            throw error(errc::parse_error, "bad field element '" + text + "'");
        }
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (coeffs.size() > d_)
        throw error(errc::parse_error, "too many coefficients for degree " +
                                           std::to_string(d_));
    for (std::uint32_t c : coeffs)
        if (c >= p_) throw error(errc::parse_error, "coefficient >= characteristic");
    return encode(coeffs);
}

namespace {

GfMatrix rref_impl(GfMatrix m, std::uint32_t* out_rank) {
    const Gf& f = m.field();
    const std::uint32_t rows = m.rows();
    const std::uint32_t cols = m.cols();
    std::uint32_t r = 0;
    for (std::uint32_t c = 0; c < cols && r < rows; ++c) {
        std::uint32_t piv = r;
        while (piv < rows && m.at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::uint32_t j = 0; j < cols; ++j) {
                Gf::Elem t = m.at(r, j);
                m.set(r, j, m.at(piv, j));
                m.set(piv, j, t);
            }
        const Gf::Elem scale = f.inv(m.at(r, c));
        for (std::uint32_t j = 0; j < cols; ++j) m.set(r, j, f.mul(m.at(r, j), scale));
        for (std::uint32_t i = 0; i < rows; ++i) {
            if (i == r || m.at(i, c) == 0) continue;
            const Gf::Elem factor = m.at(i, c);
            for (std::uint32_t j = 0; j < cols; ++j)
                m.set(i, j, f.sub(m.at(i, j), f.mul(factor, m.at(r, j))));
        }
        ++r;
    }
    if (out_rank) *out_rank = r;
    return m;
}

} // namespace

GfMatrix rref(const GfMatrix& m, std::uint32_t* out_rank) { return rref_impl(m, out_rank); }

std::uint32_t rank(const GfMatrix& m) {
    std::uint32_t r = 0;
    rref_impl(m, &r);
    return r;
}

GfMatrix row_basis(const GfMatrix& m) {
    std::uint32_t r = 0;
    GfMatrix red = rref_impl(m, &r);
    if (r == 0) throw error(errc::rank_deficient, "zero matrix has no row basis");
    GfMatrix out(red.field(), r, red.cols());
    for (std::uint32_t i = 0; i < r; ++i)
        for (std::uint32_t j = 0; j < red.cols(); ++j) out.set(i, j, red.at(i, j));
    return out;
}

} // namespace cymat

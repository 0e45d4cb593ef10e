#include "cymat/zn_subset.hpp"

#include <charconv>
#include <numeric>

namespace cymat {

const char* errc_name(errc c) {
    switch (c) {
        case errc::empty_set: return "EmptySet";
        case errc::empty_family: return "EmptyFamily";
        case errc::non_uniform_cardinality: return "NonUniformCardinality";
        case errc::axiom_violation: return "AxiomViolation";
        case errc::missing_cyclic_basis: return "MissingCyclicBasis";
        case errc::wrong_cardinality: return "WrongCardinality";
        case errc::degenerate_rank: return "DegenerateRank";
        case errc::degenerate_set: return "DegenerateSet";
        case errc::out_of_range: return "OutOfRange";
        case errc::spread_too_large: return "SpreadTooLarge";
        case errc::not_members: return "NotMembers";
        case errc::bad_subset: return "BadSubset";
        case errc::too_large: return "TooLarge";
        case errc::not_found: return "NotFound";
        case errc::zero_element: return "ZeroElement";
        case errc::not_irreducible: return "NotIrreducible";
        case errc::not_prime: return "NotPrime";
        case errc::rank_deficient: return "RankDeficient";
        case errc::cyclicity_violation: return "CyclicityViolation";
        case errc::parse_error: return "ParseError";
        case errc::overflow: return "Overflow";
        case errc::unsupported: return "Unsupported";
    }
    return "UnknownError";
}

ZnSubset ZnSubset::from_elements(std::uint32_t n, const std::vector<std::uint32_t>& elems) {
    std::uint64_t m = 0;
    for (std::uint32_t e : elems) {
        if (e >= n) throw error(errc::out_of_range, "element " + std::to_string(e) + " >= n");
        m |= 1ull << e;
    }
    return ZnSubset(n, m);
}

ZnSubset ZnSubset::interval(std::uint32_t n, std::uint32_t k) {
    if (k > n) throw error(errc::out_of_range, "interval length exceeds modulus");
    return ZnSubset(n, k == 0 ? 0 : full_mask(k));
}

std::vector<std::uint32_t> ZnSubset::elements() const {
    std::vector<std::uint32_t> out;
    out.reserve(size());
    std::uint64_t m = mask_;
    while (m) {
        out.push_back(static_cast<std::uint32_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

namespace {

std::uint32_t parse_u32(const char* first, const char* last, const std::string& ctx) {
    std::uint32_t v = 0;
    auto [p, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || p != last)
        throw error(errc::parse_error, "bad integer in " + ctx);
    return v;
}

} // namespace

ZnSubset ZnSubset::parse(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos)
        throw error(errc::parse_error, "expected n:{...} in '" + text + "'");
    std::uint32_t n = parse_u32(text.data(), text.data() + colon, text);
    return parse_elements(text.substr(colon + 1), n);
}

ZnSubset ZnSubset::parse_elements(const std::string& braces, std::uint32_t n) {
    if (braces.size() < 2 || braces.front() != '{' || braces.back() != '}')
        throw error(errc::parse_error, "expected {e1,e2,...} in '" + braces + "'");
    std::vector<std::uint32_t> elems;
    const char* p = braces.data() + 1;
    const char* end = braces.data() + braces.size() - 1;
    while (p < end) {
        const char* comma = p;
        while (comma < end && *comma != ',') ++comma;
        elems.push_back(parse_u32(p, comma, braces));
        p = comma + 1;
    }
    return from_elements(n, elems);
}

std::string ZnSubset::str() const { return std::to_string(n_) + ":" + elements_str(); }

std::string ZnSubset::elements_str() const {
    std::string out = "{";
    bool first = true;
    for (std::uint32_t e : elements()) {
        if (!first) out += ',';
        out += std::to_string(e);
        first = false;
    }
    out += '}';
    return out;
}

std::vector<std::uint32_t> BlockStructure::composition() const {
    std::vector<std::uint32_t> c;
    c.reserve(blocks.size());
    for (const Block& b : blocks) c.push_back(b.length);
    return c;
}

BlockStructure block_structure(const ZnSubset& a) {
    if (a.is_empty()) throw error(errc::empty_set, "block structure of the empty set");
    const std::uint32_t n = a.modulus();
    if (a.is_full()) return BlockStructure{{Block{0, n}}};

    BlockStructure out;
    for (std::uint32_t d = 0; d < n; ++d) {
        if (!a.contains(d)) continue;
        if (a.contains((d + n - 1) % n)) continue; // not the start of a run
        std::uint32_t len = 0;
        while (a.contains((d + len) % n)) ++len;
        out.blocks.push_back(Block{d, len});
    }
    return out;
}

Stabilizer stabilizer(const ZnSubset& a) {
    const std::uint32_t n = a.modulus();
    // the smallest positive fixing shift, if any, generates Stab(a) and divides n
    for (std::uint32_t s = 1; s < n; ++s) {
        if (n % s != 0) continue;
        if (a.shift(s) == a) return Stabilizer{s, n / s};
    }
    return Stabilizer{0, 1};
}

std::uint64_t canonical_shift_mask(const ZnSubset& a) {
    std::uint64_t best = a.mask();
    for (std::uint32_t s = 1; s < a.modulus(); ++s)
        best = std::min(best, a.shift(s).mask());
    return best;
}

Orbit orbit(const ZnSubset& a) {
    Stabilizer st = stabilizer(a);
    return Orbit{ZnSubset(a.modulus(), canonical_shift_mask(a)), a.modulus() / st.size,
                 st.generator};
}

std::vector<std::uint32_t> arithmetic_progression_decomposition(const ZnSubset& a) {
    Stabilizer st = stabilizer(a);
    if (st.generator == 0) return a.elements();
    std::vector<std::uint32_t> starts;
    for (std::uint32_t e : a.elements())
        if (e < st.generator) starts.push_back(e);
    return starts;
}

} // namespace cymat

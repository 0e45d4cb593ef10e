#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cymat {

enum class errc {
    empty_set,
    empty_family,
    non_uniform_cardinality,
    axiom_violation,
    missing_cyclic_basis,
    wrong_cardinality,
    degenerate_rank,
    degenerate_set,
    out_of_range,
    spread_too_large,
    not_members,
    bad_subset,
    too_large,
    not_found,
    zero_element,
    not_irreducible,
    not_prime,
    rank_deficient,
    cyclicity_violation,
    parse_error,
    overflow,
    unsupported,
};

const char* errc_name(errc c);

/// Library-wide exception; carries a machine-checkable code plus a message.
class error : public std::runtime_error {
public:
    error(errc code, const std::string& what)
        : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

    errc code() const noexcept { return code_; }

private:
    errc code_;
};

/// Exchange-axiom counterexample: x in b1\b2 admits no replacement y in b2\b1.
struct exchange_witness {
    std::uint64_t b1 = 0;
    std::uint64_t b2 = 0;
    std::uint32_t x = 0;

    bool operator==(const exchange_witness&) const = default;
};

class axiom_error : public error {
public:
    axiom_error(const exchange_witness& w, const std::string& what)
        : error(errc::axiom_violation, what), witness_(w) {}

    const exchange_witness& witness() const noexcept { return witness_; }

private:
    exchange_witness witness_;
};

} // namespace cymat

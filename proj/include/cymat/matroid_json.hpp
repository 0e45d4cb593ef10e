#pragma once

#include <string>

#include "cymat/matroid.hpp"

namespace cymat {

/// Interchange document: {"n", "k", "orbit_representatives", "basis_count"},
/// representatives in canonical smallest-mask form, ascending by mask value.
std::string matroid_to_json(const CyclicMatroid& m);

/// Fields of a parsed (not yet validated) matroid document.
struct MatroidDocument {
    std::uint32_t n = 0;
    std::uint32_t k = 0;
    std::vector<ZnSubset> orbit_representatives;
    std::uint64_t basis_count = 0; // as stated in the document
};

MatroidDocument matroid_document_from_json(const std::string& text);

/// Validates a document end to end: orbit expansion, axiom, interval basis.
CyclicMatroid matroid_from_json(const std::string& text);

} // namespace cymat

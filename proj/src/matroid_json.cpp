#include "cymat/matroid_json.hpp"

#include <json.hpp>

namespace cymat {

std::string matroid_to_json(const CyclicMatroid& m) {
    nlohmann::json doc;
    doc["n"] = m.modulus();
    doc["k"] = m.rank();
    std::vector<std::string> reps;
    for (const Orbit& o : m.basis_orbits()) reps.push_back(o.representative.elements_str());
    doc["orbit_representatives"] = reps;
    doc["basis_count"] = m.basis_count();
    return doc.dump(2);
}

MatroidDocument matroid_document_from_json(const std::string& text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
    MatroidDocument out;
    try {
        out.n = doc.at("n").get<std::uint32_t>();
        out.k = doc.at("k").get<std::uint32_t>();
        out.basis_count = doc.value("basis_count", std::uint64_t{0});
        for (const auto& item : doc.at("orbit_representatives"))
            out.orbit_representatives.push_back(
                ZnSubset::parse_elements(item.get<std::string>(), out.n));
    } catch (const nlohmann::json::exception& e) {
        throw error(errc::parse_error, e.what());
    }
    return out;
}

CyclicMatroid matroid_from_json(const std::string& text) {
    MatroidDocument doc = matroid_document_from_json(text);
    return CyclicMatroid::from_orbit_representatives(doc.n, doc.k, doc.orbit_representatives);
}

} // namespace cymat

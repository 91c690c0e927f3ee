#include "gjets/limits.hpp"

#include "gjets/error.hpp"

#include <json.hpp>

#include <fstream>

namespace gjets {

Limits load_limits(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw Error("cannot open limits file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid limits file: ") + e.what());
    }
    Limits limits;
    if (doc.contains("max_basis"))
        limits.max_basis = doc["max_basis"].get<std::size_t>();
    if (doc.contains("max_pair_degree"))
        limits.max_pair_degree = doc["max_pair_degree"].get<int>();
    if (doc.contains("cover_cap"))
        limits.cover_cap = doc["cover_cap"].get<int>();
    if (doc.contains("betti_cap"))
        limits.betti_cap = doc["betti_cap"].get<int>();
    if (doc.contains("seed"))
        limits.seed = doc["seed"].get<unsigned long>();
    return limits;
}

} // namespace gjets

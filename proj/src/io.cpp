#include "orbitlab/io.hpp"

#include <fstream>
#include <regex>

#include "orbitlab/error.hpp"

namespace orbitlab::io {

using exact::Domain;
using exact::Matrix;
using exact::Scalar;

Json matrix_to_json(const Matrix& m) {
    Json entries = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
        entries.push_back(std::move(row));
    }
    Json j;
    j["rows"] = m.rows();
    j["cols"] = m.cols();
    j["domain"] = m.domain().to_string();
    j["entries"] = std::move(entries);
    return j;
}

Matrix matrix_from_json(const Json& j) {
    try {
        const auto rows = j.at("rows").get<std::size_t>();
        const auto cols = j.at("cols").get<std::size_t>();
        const Domain domain = Domain::parse(j.at("domain").get<std::string>());
        const Json& entries = j.at("entries");
        if (!entries.is_array() || entries.size() != rows) throw ParseError("entries must hold one array per row");
        Matrix m(rows, cols, domain);
        for (std::size_t r = 0; r < rows; ++r) {
            const Json& row = entries[r];
            if (!row.is_array() || row.size() != cols) throw ParseError("row " + std::to_string(r) + " has the wrong length");
            for (std::size_t c = 0; c < cols; ++c) {
                const Json& cell = row[c];
                const std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
                m.set(r, c, Scalar::parse(domain, text));
            }
        }
        return m;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("malformed matrix: ") + e.what());
    }
}

Json pair_to_json(const orbits::NilpotentPair& e) {
    Json j;
    j["x"] = matrix_to_json(e.x);
    j["y"] = matrix_to_json(e.y);
    return j;
}

orbits::NilpotentPair pair_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("x") || !j.contains("y")) throw ParseError("pair file needs \"x\" and \"y\"");
    return orbits::NilpotentPair(matrix_from_json(j["x"]), matrix_from_json(j["y"]));
}

Json invariant_to_json(const orbits::OrbitInvariant& inv) {
    Json j;
    j["xy"] = inv.xy;
    j["yx"] = inv.yx;
    j["xyx"] = inv.xyx;
    j["yxy"] = inv.yxy;
    return j;
}

Json decomposition_to_json(const graded::GradedDecomposition& d) {
    Json j = Json::array();
    for (const auto& c : d.components()) j.push_back({c.lambda, c.omega});
    return j;
}

graded::GradedDecomposition parse_decomposition(const std::string& text) {
    static const std::regex whole(R"(\s*\{\s*(\(\s*\d+\s*,\s*[01]\s*\)\s*(,\s*\(\s*\d+\s*,\s*[01]\s*\)\s*)*)?\}\s*)");
    static const std::regex pair(R"(\(\s*(\d+)\s*,\s*([01])\s*\))");
    if (!std::regex_match(text, whole)) throw ParseError("expected a decomposition like {(8,1),(2,1)}: " + text);
    std::vector<graded::Component> comps;
    for (auto it = std::sregex_iterator(text.begin(), text.end(), pair); it != std::sregex_iterator(); ++it) {
        comps.push_back({std::stoi((*it)[1]), std::stoi((*it)[2])});
    }
    return graded::GradedDecomposition(std::move(comps));
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    try {
        return Json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
}

}  // namespace orbitlab::io

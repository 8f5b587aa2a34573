#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbitlab/io.hpp"

namespace orbitlab::cli {

using io::Json;

struct Limits {
    int pq = 12;           // p + q for full orbit reports
    int light_pq = 16;     // p + q for polynomial-cost work: --find-trace, classify, represent
    int degree = 12;       // truncation degree
};

/// Defaults overridden by ORBITLAB_LIMITS="pq=14,light_pq=18,degree=10".
Limits limits_from_env();

struct Config {
    std::string command;
    int p = 0;
    int q = 0;
    std::string field = "Q";
    int truncate = 6;
    std::uint64_t seed = 0;
    unsigned threads = 1;
    std::string format = "json";
    std::string out;
    bool unsafe_limits = false;
    Limits limits;

    // orbits
    bool oracle = false;
    std::optional<long> find_trace;
    // classify
    std::string file;
    // cosets
    int k = 0;
    std::vector<std::string> a_values;
    // lfun
    std::optional<int> verify;
    std::string chars;
    // represent
    std::string decomposition;
};

struct Report {
    Json body;
    bool pass = true;
};

Report cmd_orbits(const Config& cfg);
Report cmd_classify(const Config& cfg);
Report cmd_cosets(const Config& cfg);
Report cmd_lfun(const Config& cfg);
/// Canonical representative pair of a decomposition, as a pair file.
Report cmd_represent(const Config& cfg);

Report run(const Config& cfg);

/// "json" pretty-prints; "text" flattens to one "path: value" line per leaf.
std::string render(const Json& body, const std::string& format);

}  // namespace orbitlab::cli

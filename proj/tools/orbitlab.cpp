#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "orbitlab/cli.hpp"
#include "orbitlab/error.hpp"

using orbitlab::cli::Config;

namespace {

void add_common(CLI::App* sub, Config& cfg) {
    sub->add_option("--field", cfg.field, "Q | Fp:<l> | Cyc:<m>");
    sub->add_option("--truncate", cfg.truncate, "truncation degree D");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format, "json | text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--out", cfg.out, "write the report here instead of stdout");
    sub->add_flag("--unsafe-limits", cfg.unsafe_limits, "lift the size caps");
}

}  // namespace

int main(int argc, char** argv) {
    Config cfg;
    CLI::App app{"Nilpotent orbits, closed double cosets and Whittaker sums for (GL_n, GL_p x GL_q)"};
    app.require_subcommand(1);

    auto* orbits = app.add_subcommand("orbits", "enumerate nilpotent orbits in I_{p,q}");
    orbits->add_option("p", cfg.p)->required();
    orbits->add_option("q", cfg.q)->required();
    orbits->add_flag("--oracle", cfg.oracle, "also compute the trace by linear algebra");
    orbits->add_option("--find-trace", cfg.find_trace, "only report orbits with this trace");
    add_common(orbits, cfg);

    auto* classify = app.add_subcommand("classify", "classify a nilpotent pair from a JSON file");
    classify->add_option("file", cfg.file)->required();
    add_common(classify, cfg);

    std::string a_list;
    auto* cosets = app.add_subcommand("cosets", "closed double coset representative and invariants");
    cosets->add_option("p", cfg.p)->required();
    cosets->add_option("q", cfg.q)->required();
    cosets->add_option("--k", cfg.k, "half the multiplicity of eigenvalue -1");
    cosets->add_option("--a", a_list, "comma-separated scalars a with a^2 != 1");
    add_common(cosets, cfg);

    auto* lfun = app.add_subcommand("lfun", "Whittaker sums and the exterior square product, n = 2p+1");
    lfun->add_option("p", cfg.p)->required();
    lfun->add_option("--verify", cfg.verify, "check the series identity through degree D");
    lfun->add_option("--chars", cfg.chars, "comma-separated values a/b or zeta:m:j");
    add_common(lfun, cfg);

    auto* represent = app.add_subcommand("represent", "print the canonical pair of a decomposition");
    represent->add_option("decomposition", cfg.decomposition, "e.g. {(8,1),(2,1),(1,1)}")->required();
    add_common(represent, cfg);

    CLI11_PARSE(app, argc, argv);
    cfg.command = app.get_subcommands().front()->get_name();

    try {
        cfg.limits = orbitlab::cli::limits_from_env();
        std::stringstream ss(a_list);
        for (std::string item; std::getline(ss, item, ',');) {
            if (!item.empty()) cfg.a_values.push_back(item);
        }
        const auto report = orbitlab::cli::run(cfg);
        const std::string text = orbitlab::cli::render(report.body, cfg.format);
        if (cfg.out.empty()) {
            std::cout << text;
        } else {
            std::ofstream out(cfg.out);
            if (!out) throw orbitlab::ParseError("cannot write " + cfg.out);
            out << text;
        }
        return report.pass ? 0 : 1;
    } catch (const orbitlab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
}

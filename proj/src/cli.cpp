#include "orbitlab/cli.hpp"

#include <cstdlib>
#include <numeric>
#include <sstream>

#include "orbitlab/error.hpp"
#include "orbitlab/graded.hpp"
#include "orbitlab/lseries.hpp"
#include "orbitlab/orbits.hpp"
#include "orbitlab/parallel.hpp"
#include "orbitlab/symspace.hpp"

namespace orbitlab::cli {

using exact::Domain;
using exact::Scalar;
using graded::GradedDecomposition;

Limits limits_from_env() {
    Limits lim;
    const char* env = std::getenv("ORBITLAB_LIMITS");
    if (env == nullptr) return lim;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) throw ParseError("ORBITLAB_LIMITS entries look like key=value");
        const std::string key = item.substr(0, eq);
        const int value = std::stoi(item.substr(eq + 1));
        if (key == "pq") {
            lim.pq = value;
        } else if (key == "light_pq") {
            lim.light_pq = value;
        } else if (key == "degree") {
            lim.degree = value;
        } else {
            throw ParseError("unknown limit " + key);
        }
    }
    return lim;
}

namespace {

void check_cap(const Config& cfg, long value, long cap, const std::string& what) {
    if (!cfg.unsafe_limits && value > cap) {
        throw InvalidArgument(what + " = " + std::to_string(value) + " exceeds the limit " + std::to_string(cap) +
                              " (use --unsafe-limits or ORBITLAB_LIMITS)");
    }
}

void check_dims(int p, int q) {
    if (p < 0 || q < 0) throw InvalidArgument("p and q must be non-negative");
}

Json parity_dims_json(const GradedDecomposition& d) {
    Json j = Json::array();
    for (const auto& c : d.components()) {
        const auto dims = graded::parity_dims(c.lambda, c.omega);
        j.push_back({dims.even, dims.odd});
    }
    return j;
}

Json scalar_list(const std::vector<Scalar>& values) {
    Json j = Json::array();
    for (const auto& v : values) j.push_back(v.to_string());
    return j;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        if (!item.empty()) out.push_back(item);
    }
    return out;
}

}  // namespace

Report cmd_orbits(const Config& cfg) {
    check_dims(cfg.p, cfg.q);
    check_cap(cfg, cfg.p + cfg.q, cfg.find_trace ? cfg.limits.light_pq : cfg.limits.pq, "p + q");

    const auto all = graded::enumerate_decompositions(cfg.p, cfg.q);
    std::vector<GradedDecomposition> selected;
    for (const auto& d : all) {
        if (!cfg.find_trace || graded::trace_formula(d) == *cfg.find_trace) selected.push_back(d);
    }
    const std::size_t max_dim = graded::max_orbit_dim(cfg.p, cfg.q, cfg.threads);

    std::vector<Json> records(selected.size());
    std::vector<char> ok(selected.size(), 1);
    parallel_for(selected.size(), cfg.threads, [&](std::size_t i) {
        const auto& d = selected[i];
        Json r;
        r["decomposition"] = d.to_string();
        r["components"] = io::decomposition_to_json(d);
        r["parity_dims"] = parity_dims_json(d);
        r["m_sum"] = graded::m_sum(d);
        r["trace_formula"] = graded::trace_formula(d);
        const std::size_t dim = graded::orbit_dim(d);
        r["orbit_dim"] = dim;
        r["is_regular"] = dim == max_dim;
        r["transpose_orbit"] = orbits::transpose_orbit(d).to_string();
        r["is_transpose_stable"] = orbits::is_transpose_stable(d);
        if (cfg.oracle) {
            const long brute = graded::trace_bruteforce(d);
            r["trace_bruteforce"] = brute;
            r["match"] = brute == graded::trace_formula(d);
            ok[i] = brute == graded::trace_formula(d);
        }
        records[i] = std::move(r);
    });

    Report rep;
    rep.pass = std::all_of(ok.begin(), ok.end(), [](char c) { return c != 0; });
    Json& b = rep.body;
    b["command"] = "orbits";
    b["p"] = cfg.p;
    b["q"] = cfg.q;
    b["dim_I"] = 2 * cfg.p * cfg.q;
    b["orbit_count"] = all.size();
    b["max_orbit_dim"] = max_dim;
    if (cfg.find_trace) b["find_trace"] = *cfg.find_trace;
    b["oracle"] = cfg.oracle;
    b["records"] = records;
    b["pass"] = rep.pass;
    return rep;
}

Report cmd_classify(const Config& cfg) {
    const auto e = io::pair_from_json(io::read_json_file(cfg.file));
    check_cap(cfg, e.p + e.q, cfg.limits.light_pq, "p + q");
    Report rep;
    Json& b = rep.body;
    b["command"] = "classify";
    b["p"] = e.p;
    b["q"] = e.q;
    b["domain"] = e.x.domain().to_string();
    if (!orbits::is_nilpotent_pair(e)) {
        b["nilpotent"] = false;
        b["witness"] = "(xy)^" + std::to_string(e.p) + " != 0";
        b["pass"] = false;
        rep.pass = false;
        return rep;
    }
    b["nilpotent"] = true;
    b["nilpotency_index"] = orbits::nilpotency_witness(e);
    const auto inv = orbits::rank_invariant(e);
    const auto d = orbits::classify(e);
    const auto image = orbits::transpose_orbit(d);
    const auto oracle = orbits::classify(orbits::transpose_move(e));
    b["decomposition"] = d.to_string();
    b["components"] = io::decomposition_to_json(d);
    b["rank_x"] = inv.rank_x();
    b["rank_y"] = inv.rank_y();
    b["rank_tables"] = io::invariant_to_json(inv);
    b["transpose_orbit"] = image.to_string();
    b["transpose_oracle"] = oracle.to_string();
    b["transpose_rule_matches"] = image == oracle;
    b["is_transpose_stable"] = image == d;
    rep.pass = image == oracle;
    b["pass"] = rep.pass;
    return rep;
}

Report cmd_cosets(const Config& cfg) {
    check_dims(cfg.p, cfg.q);
    check_cap(cfg, cfg.p + cfg.q, cfg.limits.pq, "p + q");
    const Domain domain = Domain::parse(cfg.field);
    std::vector<Scalar> a;
    for (const auto& text : cfg.a_values) a.push_back(Scalar::parse(domain, text));
    const auto g = symspace::rep_nu_block(cfg.p, cfg.q, cfg.k, a, domain);
    const auto t = symspace::tau(g, cfg.p, cfg.q);
    const bool closed = symspace::is_closed(g, cfg.p, cfg.q);
    const auto inv = symspace::coset_invariants(g, cfg.p, cfg.q);
    const std::size_t normal = symspace::normal_space_dim(g, cfg.p, cfg.q);

    auto sorted = a;
    std::sort(sorted.begin(), sorted.end(), [](const Scalar& x, const Scalar& y) { return canonical_less(x, y); });
    const bool round_trip = inv.k == cfg.k && inv.nu == static_cast<int>(a.size()) && inv.a_values == sorted;

    Report rep;
    Json& b = rep.body;
    b["command"] = "cosets";
    b["p"] = cfg.p;
    b["q"] = cfg.q;
    b["k"] = cfg.k;
    b["a_values"] = scalar_list(sorted);
    b["representative"] = io::matrix_to_json(g);
    b["tau"] = io::matrix_to_json(t);
    b["closed"] = closed;
    Json ij;
    ij["k"] = inv.k;
    ij["nu"] = inv.nu;
    ij["a_values"] = scalar_list(inv.a_values);
    b["invariant"] = ij;
    b["invariant_text"] = inv.to_string();
    b["round_trip"] = round_trip;
    b["normal_space_dim"] = normal;
    bool normal_ok = true;
    if (a.empty()) {
        const long expected = 2L * cfg.k * cfg.k + 2L * (cfg.p - cfg.k) * (cfg.q - cfg.k);
        b["normal_dim_formula"] = expected;
        normal_ok = static_cast<long>(normal) == expected;
        b["normal_dim_matches"] = normal_ok;
    } else {
        b["normal_dim_formula"] = nullptr;
    }
    rep.pass = closed && round_trip && normal_ok;
    b["pass"] = rep.pass;
    return rep;
}

namespace {

Domain infer_char_domain(const Config& cfg, const std::vector<std::string>& tokens) {
    if (cfg.field != "Q") return Domain::parse(cfg.field);
    std::uint32_t m = 0;
    for (const auto& t : tokens) {
        if (t.rfind("zeta:", 0) != 0) continue;
        const auto parts = split(t, ':');
        if (parts.size() != 3) throw ParseError("root of unity must look like zeta:m:j");
        const auto order = static_cast<std::uint32_t>(std::stoul(parts[1]));
        m = m == 0 ? order : std::lcm(m, order);
    }
    return m == 0 ? Domain::rational() : Domain::cyclotomic(m);
}

}  // namespace

Report cmd_lfun(const Config& cfg) {
    if (cfg.p < 0) throw InvalidArgument("p must be non-negative");
    if (!cfg.verify && cfg.chars.empty()) throw InvalidArgument("lfun needs --verify D or --chars list");
    const std::size_t n = 2 * static_cast<std::size_t>(cfg.p) + 1;
    Report rep;
    Json& b = rep.body;
    b["command"] = "lfun";
    b["p"] = cfg.p;
    b["n"] = n;

    if (cfg.verify) {
        const int d = *cfg.verify;
        if (d < 0) throw InvalidArgument("truncation degree must be non-negative");
        check_cap(cfg, d, cfg.limits.degree, "D");
        const auto xs = lseries::symbolic_variables(n);
        const auto lhs = lseries::lhs_series(xs, n, d, cfg.threads);
        const auto rhs = lseries::rhs_product(xs, n, d);
        Json coeffs = Json::array();
        bool all_equal = true;
        for (int k = 0; k <= d; ++k) {
            const auto idx = static_cast<std::size_t>(k);
            const bool equal = lhs[idx] == rhs[idx];
            all_equal = all_equal && equal;
            Json row;
            row["deg"] = k;
            row["poly"] = lhs[idx].to_string();
            row["product"] = rhs[idx].to_string();
            row["equal"] = equal;
            coeffs.push_back(std::move(row));
        }
        Json series;
        series["truncation"] = d;
        series["coeffs"] = std::move(coeffs);
        b["series"] = std::move(series);
        b["identity_holds"] = all_equal;
        rep.pass = rep.pass && all_equal;
    }

    if (!cfg.chars.empty()) {
        check_cap(cfg, cfg.truncate, cfg.limits.degree, "D");
        const auto tokens = split(cfg.chars, ',');
        const Domain domain = infer_char_domain(cfg, tokens);
        std::vector<Scalar> chi;
        for (const auto& t : tokens) chi.push_back(Scalar::parse(domain, t));
        if (chi.size() != n) {
            throw InvalidArgument("need 2p + 1 = " + std::to_string(n) + " character values, got " +
                                  std::to_string(chi.size()));
        }
        b["domain"] = domain.to_string();
        b["characters"] = scalar_list(chi);

        Json table = Json::array();
        bool delta_ok = true;
        for (long total = 0; total <= cfg.truncate; ++total) {
            for (const auto& lambda : lseries::partitions(total, n, n)) {
                const auto w = lseries::whittaker_value(lambda, chi);
                Json row;
                row["lambda"] = lambda;
                row["q_exponent"] = w.q_exponent;
                row["value"] = w.value.to_string();
                if (lambda.back() == 0) {
                    const long ph = lseries::modular_exponent_PH(lambda, static_cast<std::size_t>(cfg.p));
                    row["modular_exponent_PH"] = ph;
                    row["delta_match"] = ph == w.q_exponent;
                    delta_ok = delta_ok && ph == w.q_exponent;
                }
                table.push_back(std::move(row));
            }
        }
        b["whittaker"] = std::move(table);
        b["delta_identity"] = delta_ok;

        const auto pole = lseries::pole_order_at_one(chi, static_cast<std::size_t>(cfg.p));
        Json pj;
        pj["order"] = pole.order;
        pj["leading"] = pole.leading.to_string();
        if (pole.limit) {
            pj["limit"] = pole.limit->to_string();
        } else {
            pj["limit"] = nullptr;
        }
        pj["unit_values"] = pole.unit_values;
        pj["vanishing_pairs"] = pole.vanishing_pairs;
        pj["pole_at_zero"] = pole.order >= 1;
        if (pole.order < 1) {
            pj["note"] = "prod chi_i = 1 alone does not force a pole; whether the representation is distinguished "
                         "is not checked here";
        }
        b["pole"] = std::move(pj);
        rep.pass = rep.pass && delta_ok;
    }
    b["pass"] = rep.pass;
    return rep;
}

Report cmd_represent(const Config& cfg) {
    const auto d = io::parse_decomposition(cfg.decomposition);
    check_cap(cfg, d.dimension(), cfg.limits.light_pq, "p + q");
    Report rep;
    rep.body = io::pair_to_json(orbits::representative(d, Domain::parse(cfg.field)));
    return rep;
}

Report run(const Config& cfg) {
    if (cfg.command == "orbits") return cmd_orbits(cfg);
    if (cfg.command == "classify") return cmd_classify(cfg);
    if (cfg.command == "cosets") return cmd_cosets(cfg);
    if (cfg.command == "lfun") return cmd_lfun(cfg);
    if (cfg.command == "represent") return cmd_represent(cfg);
    throw InvalidArgument("unknown command " + cfg.command);
}

namespace {

void flatten(const Json& j, const std::string& path, std::ostringstream& os) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, os);
    } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
        for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", os);
    } else {
        os << path << ": " << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
    }
}

}  // namespace

std::string render(const Json& body, const std::string& format) {
    if (format == "json") return body.dump(2) + "\n";
    if (format == "text") {
        std::ostringstream os;
        flatten(body, "", os);
        return os.str();
    }
    throw InvalidArgument("format must be json or text");
}

}  // namespace orbitlab::cli

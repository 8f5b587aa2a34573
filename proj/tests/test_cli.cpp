#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "orbitlab/cli.hpp"
#include "orbitlab/error.hpp"
#include "orbitlab/io.hpp"

using namespace orbitlab;
using namespace orbitlab::cli;

namespace {

Config make(const std::string& command, int p = 0, int q = 0) {
    Config c;
    c.command = command;
    c.p = p;
    c.q = q;
    return c;
}

std::string write_temp(const std::string& name, const std::string& text) {
    const auto path = std::filesystem::temp_directory_path() / ("orbitlab_test_" + name);
    std::ofstream(path) << text;
    return path.string();
}

}  // namespace

TEST_CASE("matrix json round trip") {
    const auto m = exact::Matrix::from_ints(2, 3, {1, -2, 0, 4, 5, 6});
    const auto j = io::matrix_to_json(m);
    CHECK(j["entries"][0][1] == "-2/1");
    CHECK(j["domain"] == "Q");
    CHECK(io::matrix_from_json(j) == m);

    const auto f = exact::Domain::prime_field(5);
    const auto mf = exact::Matrix::from_ints(1, 2, {7, 3}, f);
    CHECK(io::matrix_from_json(io::matrix_to_json(mf)) == mf);

    auto bad = j;
    bad["rows"] = 3;
    CHECK_THROWS_AS(io::matrix_from_json(bad), ParseError);
    CHECK_THROWS_AS(io::matrix_from_json(io::Json::parse(R"({"rows": 1})")), ParseError);
}

TEST_CASE("decomposition parsing") {
    const auto d = io::parse_decomposition("{(8,1), (2,1),(1,1)}");
    CHECK(d.to_string() == "{(8,1),(2,1),(1,1)}");
    CHECK(io::parse_decomposition("{}").size() == 0);
    CHECK_THROWS_AS(io::parse_decomposition("{(8,2)}"), ParseError);
    CHECK_THROWS_AS(io::parse_decomposition("(1,0)"), ParseError);
}

TEST_CASE("orbits report") {
    auto cfg = make("orbits", 1, 2);
    cfg.oracle = true;
    const auto r = run(cfg);
    CHECK(r.pass);
    const auto& recs = r.body["records"];
    CHECK(recs.size() == 4);
    int regular = 0;
    for (const auto& rec : recs) {
        regular += rec["is_regular"].get<bool>();
        CHECK(rec["match"].get<bool>());
    }
    CHECK(regular == 1);

    const auto zero = run(make("orbits", 0, 1));
    REQUIRE(zero.body["records"].size() == 1);
    CHECK(zero.body["records"][0]["decomposition"] == "{(0,1)}");

    CHECK_THROWS_AS(run(make("orbits", 7, 6)), InvalidArgument);
    auto unsafe = make("orbits", 7, 6);
    unsafe.unsafe_limits = true;
    unsafe.find_trace = -1;
    CHECK(run(unsafe).body["records"].empty());
}

TEST_CASE("classify report") {
    const auto pair_json = io::pair_to_json(orbits::representative(io::parse_decomposition("{(2,1)}")));
    auto cfg = make("classify");
    cfg.file = write_temp("regular.json", pair_json.dump());
    const auto r = run(cfg);
    CHECK(r.pass);
    CHECK(r.body["decomposition"] == "{(2,1)}");
    CHECK(r.body["is_transpose_stable"].get<bool>());

    io::Json bad = pair_json;
    bad["y"]["entries"][0][0] = "1/1";
    bad["x"]["entries"][0][0] = "1/1";
    cfg.file = write_temp("nonnilpotent.json", bad.dump());
    const auto nn = run(cfg);
    CHECK_FALSE(nn.pass);
    CHECK(nn.body["nilpotent"] == false);
    CHECK(nn.body["witness"] == "(xy)^1 != 0");

    cfg.file = write_temp("broken.json", "{\"x\": 3");
    CHECK_THROWS_AS(run(cfg), ParseError);
}

TEST_CASE("cosets report") {
    auto cfg = make("cosets", 1, 2);
    cfg.k = 1;
    auto r = run(cfg);
    CHECK(r.pass);
    CHECK(r.body["invariant_text"] == "(1, 0, {})");
    CHECK(r.body["normal_space_dim"] == 2);

    cfg.k = 0;
    cfg.a_values = {"2"};
    r = run(cfg);
    CHECK(r.pass);
    CHECK(r.body["invariant_text"] == "(0, 1, {2/1})");

    auto id = make("cosets", 2, 3);
    r = run(id);
    CHECK(r.body["normal_space_dim"] == 12);

    cfg.a_values = {"1"};
    CHECK_THROWS_AS(run(cfg), InvalidArgument);
}

TEST_CASE("lfun report") {
    auto cfg = make("lfun", 1);
    cfg.verify = 6;
    auto r = run(cfg);
    CHECK(r.pass);
    CHECK(r.body["series"]["coeffs"].size() == 7);
    CHECK(r.body["series"]["truncation"] == 6);

    auto chars = make("lfun", 1);
    chars.chars = "1,1,1";
    r = run(chars);
    CHECK(r.pass);
    CHECK(r.body["pole"]["order"] == 5);

    chars.chars = "zeta:3:1,zeta:3:1,zeta:3:1";
    r = run(chars);
    CHECK(r.body["domain"] == "Cyc:3");
    CHECK(r.body["pole"]["order"] == -1);
    CHECK(r.body["pole"].contains("note"));

    chars.chars = "1,2,1";
    CHECK_THROWS_AS(run(chars), InvalidArgument);
    chars.chars = "1,1";
    CHECK_THROWS_AS(run(chars), InvalidArgument);
    CHECK_THROWS_AS(run(make("lfun", 1)), InvalidArgument);

    cfg.verify = 20;
    CHECK_THROWS_AS(run(cfg), InvalidArgument);
}

TEST_CASE("thread count does not change output") {
    auto cfg = make("orbits", 3, 4);
    cfg.oracle = true;
    const std::string one = render(run(cfg).body, "json");
    cfg.threads = 4;
    CHECK(render(run(cfg).body, "json") == one);

    auto l = make("lfun", 2);
    l.verify = 4;
    const std::string a = render(run(l).body, "text");
    l.threads = 3;
    CHECK(render(run(l).body, "text") == a);
}

TEST_CASE("limits from the environment") {
    setenv("ORBITLAB_LIMITS", "pq=3,degree=2", 1);
    const auto lim = limits_from_env();
    CHECK(lim.pq == 3);
    CHECK(lim.degree == 2);
    CHECK(lim.light_pq == 16);
    setenv("ORBITLAB_LIMITS", "bogus=1", 1);
    CHECK_THROWS_AS(limits_from_env(), ParseError);
    unsetenv("ORBITLAB_LIMITS");
}

TEST_CASE("text rendering") {
    io::Json j;
    j["a"] = 1;
    j["b"]["c"] = "x";
    j["d"] = io::Json::array({io::Json{{"e", true}}});
    CHECK(render(j, "text") == "a: 1\nb.c: x\nd[0].e: true\n");
    CHECK_THROWS_AS(render(j, "yaml"), InvalidArgument);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>

#include "boxspec/cli.hpp"

using namespace boxspec;
using namespace boxspec::cli;
using nlohmann::json;

namespace {

const std::string kBidiscConfig = R"({
    "factors": [{"type": "disc", "radius": 1.0}, {"type": "disc", "radius": 1.0}],
    "cutoff": 10.0
})";

const std::string kSquareConfig = R"({
    "factors": [{"type": "rectangle", "a": 3.14159265358979323846,
                 "b": 3.14159265358979323846},
                {"type": "rectangle", "a": 3.14159265358979323846,
                 "b": 3.14159265358979323846}],
    "cutoff": 10.0
})";

int pointer_code(const std::string& text, const std::string& ptr) {
    try {
        parse_config(text);
        return -1;
    } catch (const CliError& e) {
        CHECK(e.pointer == ptr);
        return e.exit_code;
    }
}

}  // namespace

TEST_CASE("fmt_g12 is stable and spare") {
    CHECK(fmt_g12(0.5) == "0.5");
    CHECK(fmt_g12(2.0) == "2");
    CHECK(fmt_g12(1.0 / 3.0) == "0.333333333333");
    CHECK(fmt_g12(1e-12) == "1e-12");
}

TEST_CASE("config parsing fills defaults") {
    auto cfg = parse_config(kBidiscConfig);
    CHECK(cfg.factors.size() == 2);
    CHECK(cfg.cutoff == 10.0);
    CHECK(cfg.merge_tol == kDefaultMergeTol);
    CHECK(cfg.zero_tol == kDefaultZeroTol);
    CHECK(cfg.format == "json");
}

TEST_CASE("config violations report exit code 2 and a JSON pointer") {
    CHECK(pointer_code(R"({"factors":[{"type":"disc","radius":1}]})", "/cutoff") == 2);
    CHECK(pointer_code(R"({"factors":[],"cutoff":5})", "/factors") == 2);
    CHECK(pointer_code(R"({"factors":[{"type":"disc"}],"cutoff":5})", "/factors/0/radius") ==
          2);
    CHECK(pointer_code(R"({"factors":[{"type":"cube","r":1}],"cutoff":5})",
                       "/factors/0/type") == 2);
    CHECK(pointer_code(
              R"({"factors":[{"type":"rectangle","a":-1,"b":1}],"cutoff":5})",
              "/factors/0/a") == 2);
    CHECK(pointer_code(
              R"({"factors":[{"type":"custom","spectra":{"0,1":[[-1,1]]}}],"cutoff":5})",
              "/factors/0/spectra/0,1/0/0") == 2);
    CHECK(pointer_code(R"({"factors":[{"type":"disc","radius":1}],"cutoff":5,"format":"xml"})",
                       "/format") == 2);
    CHECK_THROWS_AS(parse_config("not json"), CliError);
}

TEST_CASE("spectrum report structure and round trip") {
    auto cfg = parse_config(kSquareConfig);
    auto res = run_command("spectrum", &cfg, {});
    CHECK(res.exit_code == 0);

    json j = json::parse(res.output);
    CHECK(j["command"] == "spectrum");
    CHECK(j["complete"] == true);
    CHECK(j["pure_point"] == true);
    REQUIRE(j["points"].is_array());
    // sigma00+sigma00 and friends start at 0 with infinite multiplicity.
    CHECK(j["points"][0][0] == 0.0);
    CHECK(j["points"][0][1] == "inf");

    // Re-ingest the emitted points as a custom factor table.
    json wrapper = {{"type", "custom"},
                    {"dim", 2},
                    {"spectra", {{"0,0", j["points"]}}}};
    Custom c = load_custom_spectrum(wrapper.dump(), cfg.cutoff);
    const auto& pts = c.spectra.table.at({0, 0}).points();
    REQUIRE(pts.size() == j["points"].size());
    for (std::size_t i = 0; i < pts.size(); ++i)
        CHECK(fmt_g12(pts[i].value) == fmt_g12(j["points"][i][0].get<double>()));
}

TEST_CASE("bidegree report and unavailable data") {
    auto cfg = parse_config(kSquareConfig);
    CommandOptions opts;
    opts.pq = Bidegree{0, 2};
    auto res = run_command("bidegree", &cfg, opts);
    json j = json::parse(res.output);
    CHECK(j["p"] == 0);
    CHECK(j["q"] == 2);
    // Smallest box_2 value on the pi x pi bisquare: 0.5 + 0.5.
    CHECK(j["points"][0][0].get<double>() == doctest::Approx(1.0));

    auto cfg2 = parse_config(
        R"({"factors":[{"type":"custom","spectra":{"0,1":[[1,1]]}},
                       {"type":"disc","radius":1}],"cutoff":5})");
    // (1,1) needs the custom factor's p > 0 or (0,0) tables, none provided.
    CommandOptions opts2;
    opts2.pq = Bidegree{1, 1};
    try {
        run_command("bidegree", &cfg2, opts2);
        FAIL("expected CliError 4");
    } catch (const CliError& e) {
        CHECK(e.exit_code == 4);
    }
}

TEST_CASE("csv output carries the fixed header") {
    auto cfg = parse_config(kSquareConfig);
    CommandOptions opts;
    opts.format = "csv";
    auto res = run_command("spectrum", &cfg, opts);
    CHECK(res.output.rfind("value,multiplicity,kind,J,k\n", 0) == 0);
    CHECK(res.output.find("0,inf,,,\n") != std::string::npos);

    opts.q = 2;
    auto en = run_command("enumerate", &cfg, opts);
    CHECK(en.output.rfind("value,multiplicity,kind,J,k\n", 0) == 0);
    CHECK(en.output.find(",W,1;2,1:1;2:1\n") != std::string::npos);
}

TEST_CASE("gap report on the bisquare") {
    auto cfg = parse_config(kSquareConfig);
    auto res = run_command("gap", &cfg, {});
    json j = json::parse(res.output);
    CHECK(j["verdict"] == "ClosedRange");
    CHECK(j["gap"].get<double>() == doctest::Approx(0.5));
    CHECK(j["bound_constant"] == j["gap"]);
    CHECK(j["gap_is_lower_bound"] == false);
}

TEST_CASE("kunneth table for two planar factors") {
    auto cfg = parse_config(kBidiscConfig);
    auto res = run_command("kunneth", &cfg, {});
    json j = json::parse(res.output);
    CHECK(j["dim"] == 2);
    CHECK(j["table"]["0,0"] == "inf");
    CHECK(j["table"]["0,1"] == 0);
    CHECK(j["table"]["2,0"] == "inf");
    CHECK(j["table"]["2,2"] == 0);
    CHECK_FALSE(j.contains("unavailable"));
}

TEST_CASE("enumerate output is byte-identical across runs") {
    auto cfg = parse_config(kBidiscConfig);
    CommandOptions opts;
    opts.q = 1;
    auto a = run_command("enumerate", &cfg, opts);
    auto b = run_command("enumerate", &cfg, opts);
    CHECK(a.output == b.output);
    CHECK(!a.output.empty());

    json j = json::parse(a.output);
    CHECK(j["n"] == 2);
    CHECK(j["q"] == 1);
    CHECK(j["entries"][0]["multiplicity"] == "inf");
    CHECK(j["entries"][0]["labels"][0]["kind"] == "W");
    CHECK(j["metadata"]["assumes_pure_point"] == false);
}

TEST_CASE("bessel and option validation") {
    CommandOptions opts;
    opts.bessel_n = 0;
    opts.bessel_k = 1;
    auto res = run_command("bessel", nullptr, opts);
    json j = json::parse(res.output);
    CHECK(j["zero"].get<double>() == doctest::Approx(2.404825557695773));

    try {
        run_command("bessel", nullptr, {});
        FAIL("expected CliError");
    } catch (const CliError& e) {
        CHECK(e.exit_code == 2);
    }
    try {
        run_command("spectrum", nullptr, {});
        FAIL("expected CliError");
    } catch (const CliError& e) {
        CHECK(e.exit_code == 2);
    }
    try {
        auto cfg = parse_config(kBidiscConfig);
        run_command("mystery", &cfg, {});
        FAIL("expected CliError");
    } catch (const CliError& e) {
        CHECK(e.exit_code == 2);
    }
}

TEST_CASE("cutoff override narrows the window") {
    auto cfg = parse_config(kSquareConfig);
    CommandOptions narrow;
    narrow.cutoff = 2.0;
    auto res = run_command("spectrum", &cfg, narrow);
    json j = json::parse(res.output);
    CHECK(j["cutoff"] == 2.0);
    for (const auto& p : j["points"]) CHECK(p[0].get<double>() < 2.0);
}

TEST_CASE("verify: fast suites pass") {
    auto res = run_command("verify", nullptr, [] {
        CommandOptions o;
        o.suite = "bessel";
        return o;
    }());
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("FAIL") == std::string::npos);
    CHECK(res.output.find("PASS bessel/zero-targets") != std::string::npos);

    auto kr = run_command("verify", nullptr, [] {
        CommandOptions o;
        o.suite = "kronecker";
        o.seed = 99;
        return o;
    }());
    CHECK(kr.exit_code == 0);
    CHECK(kr.output.find("0 failed") != std::string::npos);

    try {
        CommandOptions o;
        o.suite = "everything";
        run_command("verify", nullptr, o);
        FAIL("expected CliError");
    } catch (const CliError& e) {
        CHECK(e.exit_code == 2);
    }
}

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <random>

#include "support.hpp"
#include "weylstab/cli.hpp"

using namespace weylstab;

namespace {

struct TempDir {
    std::filesystem::path path;
    TempDir() {
        std::random_device rd;
        path = std::filesystem::temp_directory_path() / ("weylstab-test-" + std::to_string(rd()) + std::to_string(rd()));
        std::filesystem::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        std::filesystem::remove_all(path, ec);
    }
};

cli::Outcome run(const std::string& command, const std::string& problem_json, const std::filesystem::path& ws = {},
                 bool ideal = false) {
    cli::Invocation inv;
    inv.command = command;
    inv.problem = cli::load_problem(problem_json);
    inv.ideal_mode = ideal;
    inv.use_cache = !ws.empty();
    inv.workspace = ws;
    return cli::run(inv);
}


} // namespace

TEST_SUITE("cli") {

TEST_CASE("printer output reparses to the same element") {
    std::mt19937 rng(47);
    for (int k = 0; k < 500; ++k) {
        auto a = support::algebra(k % 2 ? 3 : 7, 1 + k % 2, static_cast<std::uint32_t>(k % 3));
        auto f = support::random_poly(rng, a.nvars(), 4, 4, 20);
        auto e = WeylElement::from_terms(a, WeylElement::TermList(f.begin(), f.end()));
        if (k % 5 == 0)
            e = e.scaled(Rational(1, 2));
        CHECK(cli::parse_expression(e.to_string(), a) == e);
    }
}

TEST_CASE("grammar") {
    auto a = support::algebra(5, 2);
    CHECK(cli::parse_expression("x1*d1 - 1", a).to_string() == "x1*d1 - 1");
    CHECK(cli::parse_expression("d1*x1", a).to_string() == "x1*d1 + 1");
    CHECK(cli::parse_expression("-(x2 + 1)^2", a).to_string() == "-x2^2 - 2*x2 - 1");
    CHECK(cli::parse_expression("p^2*X1*Y2", a).to_string() == "25*x1*d2");
    CHECK(cli::parse_expression("3/10*d2", a).to_string() == "3/10*d2");
    CHECK(cli::parse_expression("  x1 \n + 0", a).to_string() == "x1");
}

TEST_CASE("parse errors carry positions") {
    auto a = support::algebra(5);
    auto expect = [&](const std::string& text, ErrorCode code, std::size_t line, std::size_t col) {
        try {
            cli::parse_expression(text, a);
            FAIL("no error for " << text);
        } catch (const ParseError& e) {
            CHECK(e.code() == code);
            CHECK(e.line() == line);
            CHECK(e.column() == col);
        }
    };
    expect("x1 +", ErrorCode::ParseError, 1, 5);
    expect("x1 * (d1", ErrorCode::ParseError, 1, 9);
    expect("x1\n + x3", ErrorCode::UnknownVariable, 2, 4);
    expect("x1 $ 2", ErrorCode::ParseError, 1, 4);
    expect("1/0", ErrorCode::ParseError, 1, 4);
    CHECK_THROWS_AS(cli::parse_expression("x1^70000", a), Error);
}

TEST_CASE("problem files") {
    auto p = cli::load_problem(R"({"prime": 5, "dim": 1, "generators": ["x1*d1 - 1"], "options": {"scan": "0..3"}})");
    CHECK(p.prime == 5);
    CHECK(p.scan == std::make_pair(0u, 3u));
    try {
        cli::load_problem("{\n  \"prime\": 5,\n  \"dim\": }");
        FAIL("accepted malformed JSON");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(cli::load_problem(R"({"prime": 5, "dim": 1, "generators": [], "colour": 1})"), ParseError);
    CHECK_THROWS_AS(cli::parse_window("3-4"), ParseError);
    CHECK(cli::parse_window("2..6") == std::make_pair(2u, 6u));
}

TEST_CASE("commands and exit codes") {
    const std::string xd = R"({"prime": 5, "dim": 1, "generators": ["x1*d1 - 1"]})";
    auto nf = run("nf", R"({"prime": 3, "dim": 1, "generators": ["d1*x1"], "options": {"level": 2}})");
    CHECK(nf.exit_code == 0);
    CHECK(nf.json.find("\"x1*d1 + 9\"") != std::string::npos);

    auto sc = run("scan", R"({"prime": 5, "dim": 1, "generators": ["x1*d1 - 1"], "options": {"scan": "0..4"}})");
    CHECK(sc.exit_code == 0);
    CHECK(sc.json.find("\"certificate\": \"CERTIFIED\"") != std::string::npos);

    auto h = run("hilbert", R"({"prime": 5, "dim": 1, "generators": ["X1*Y1"]})", {}, true);
    CHECK(h.exit_code == 0);
    CHECK(h.json.find("\"multiplicity\": 2") != std::string::npos);

    CHECK(run("char-ideal", R"({"prime": 5, "dim": 1, "generators": ["p*d1 - 1"]})").exit_code == 3);
    CHECK(run("char-ideal", R"({"prime": 5, "dim": 2, "generators": ["X1^2 + X2*Y1", "X2^2*Y1"]})", {}, true).exit_code ==
          5);
    CHECK(run("gb", R"({"prime": 5, "dim": 1, "generators": ["x1^5*d1^3 - d1^4 + x1", "d1^5*x1^2 - x1^3"],
                         "options": {"max_gb_steps": 1}})")
              .exit_code == 4);
    CHECK(run("length-bound", R"({"prime": 5, "dim": 1, "generators": [], "options": {"scan": "0..2"}})").exit_code ==
          1);
    CHECK(run("holonomic", xd).exit_code == 0);
    CHECK(run("nf", R"({"prime": 5, "dim": 1, "generators": ["x2"]})").exit_code == 2);
    CHECK(cli::exit_code_for(ErrorCode::UnknownVariable) == 2);
    CHECK(cli::exit_code_for(ErrorCode::DimensionMismatch) == 1);
}

TEST_CASE("cache") {
    TempDir ws;
    const std::string problem = R"({"prime": 5, "dim": 1, "generators": ["x1*d1 - 1"], "options": {"scan": "0..2"}})";
    auto first = run("scan", problem, ws.path);
    CHECK_FALSE(first.cache_hit);
    auto second = run("scan", problem, ws.path);
    CHECK(second.cache_hit);
    CHECK(second.json == first.json);

    auto other = run("scan", R"({"prime": 7, "dim": 1, "generators": ["x1*d1 - 1"], "options": {"scan": "0..2"}})",
                     ws.path);
    CHECK_FALSE(other.cache_hit);
    CHECK(other.json != first.json);

    // truncate every entry
    for (const auto& entry : std::filesystem::directory_iterator(ws.path / "cache")) {
        std::filesystem::resize_file(entry.path(), 10);
    }
    auto third = run("scan", problem, ws.path);
    CHECK_FALSE(third.cache_hit);
    CHECK(third.json == first.json);
    bool warned = false;
    for (const auto& d : third.diagnostics)
        warned = warned || d.find("corrupt cache entry") != std::string::npos;
    CHECK(warned);
    CHECK(run("scan", problem, ws.path).cache_hit);
}

TEST_CASE("cache keys") {
    CHECK(cli::Cache::key("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
    CHECK(cli::Cache::key("") == "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
}

}

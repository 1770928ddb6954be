#include <doctest.h>

#include "support.hpp"
#include "weylstab/stab.hpp"

using namespace weylstab;
using support::cyclic;

TEST_SUITE("stab") {

TEST_CASE("x d - 1") {
    auto r = stab::scan(cyclic(5, {"x1*d1 - 1"}), 0, 4);
    REQUIRE(r.levels.size() == 5);
    for (const auto& L : r.levels) {
        CHECK(L.status == stab::LevelStatus::Ok);
        CHECK(L.data->ideal_strings == std::vector<std::string>{"X1*Y1"});
    }
    CHECK(r.detected_n0 == 0u);
    CHECK(r.certified_n0 == 0L);
    REQUIRE(r.length_bound);
    CHECK(r.length_bound->bound == 2);
    CHECK(r.length_bound->certificate == stab::Certificate::Certified);
    CHECK(stab::tower_dimension(r) == 1);
    CHECK_FALSE(r.soundness_alarm);
}

TEST_CASE("p d - 1") {
    auto r = stab::scan(cyclic(2, {"p*d1 - 1"}), 0, 4);
    CHECK(r.levels[0].status == stab::LevelStatus::Degenerate);
    for (std::size_t k = 1; k < r.levels.size(); ++k)
        CHECK(r.levels[k].data->ideal_strings == std::vector<std::string>{"Y1"});
    CHECK(r.detected_n0 == 1u);
    CHECK(r.certified_n0 == 1L);
    CHECK(r.length_bound->bound == 1);
    CHECK(r.length_bound->certificate == stab::Certificate::Certified);
}

TEST_CASE("d") {
    auto P = cyclic(5, {"d1"});
    auto r = stab::scan(P, 0, 4);
    CHECK(r.detected_n0 == 0u);
    CHECK(stab::certified_n0(P) == 0);
    CHECK(r.length_bound->bound == 1);
    CHECK(stab::tower_dimension(r) == 1);
}

TEST_CASE("free module") {
    auto r = stab::scan(support::free_module(5), 0, 2);
    CHECK(r.detected_n0 == 0u);
    CHECK_FALSE(r.length_bound);
    CHECK(r.length_bound_note.find("not holonomic") != std::string::npos);
    CHECK(stab::tower_dimension(r) == 2);
    try {
        stab::length_bound(r);
        CHECK(false);
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotHolonomicAtSomeLevel);
    }
}

TEST_CASE("plateau starts one level after the certificate") {
    // x + d: level 0 symbol X + Y, levels >= 1 symbol Y; torsion exponent 0
    auto r = stab::scan(cyclic(5, {"x1 + d1"}), 0, 4);
    CHECK(r.certified_n0 == 0L);
    CHECK(r.detected_n0 == 1u);
    CHECK_FALSE(r.soundness_alarm);
    CHECK(r.length_bound->certificate == stab::Certificate::Certified);
    // p d - x^2: levels 0, 1 give (X), levels >= 2 give (Y); torsion exponent 1
    auto s = stab::scan(cyclic(5, {"p*d1 - x1^2"}), 0, 4);
    CHECK(s.certified_n0 == 1L);
    CHECK(s.detected_n0 == 2u);
    CHECK_FALSE(s.soundness_alarm);
}

TEST_CASE("window too short to certify") {
    auto r = stab::scan(cyclic(5, {"p*d1 - 1"}), 1, 1);
    CHECK(r.detected_n0 == 1u);
    CHECK(r.certified_n0 == 1L);
    CHECK(r.length_bound->certificate == stab::Certificate::Empirical);
}

TEST_CASE("serial and parallel scans agree") {
    auto P = cyclic(3, {"x1^2*d1 - p*d1 + x1"});
    auto a = stab::scan(P, 0, 3, {}, true), b = stab::scan(P, 0, 3, {}, false);
    REQUIRE(a.levels.size() == b.levels.size());
    for (std::size_t k = 0; k < a.levels.size(); ++k) {
        CHECK(a.levels[k].status == b.levels[k].status);
        if (a.levels[k].data)
            CHECK(a.levels[k].data->same_data(*b.levels[k].data));
    }
    CHECK(a.detected_n0 == b.detected_n0);
}

TEST_CASE("bad windows") {
    CHECK_THROWS_AS(stab::scan(cyclic(5, {"d1"}), 3, 2), Error);
    CHECK_THROWS_AS(stab::scan(cyclic(5, {"d1"}), 0, stab::kLevelCeiling + 1), Error);
}

}

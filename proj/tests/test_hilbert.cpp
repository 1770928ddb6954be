#include <doctest.h>

#include <random>

#include "support.hpp"
#include "weylstab/hilbert.hpp"

using namespace weylstab;
using support::make;
using E = oracle::Exp;

namespace {

Integer binom(long n, unsigned long k) {
    Integer r;
    mpz_bin_ui(r.get_mpz_t(), Integer(n).get_mpz_t(), k);
    return r;
}

/// Standard monomials of degree <= i, counted one by one.
long count_standard(const hilbert::MonomialIdeal& M, std::size_t n, std::uint32_t i) {
    long c = 0;
    for (const auto& m : oracle::monomials_up_to(n, i))
        if (std::none_of(M.begin(), M.end(), [&](const gb::Exponents& g) { return gb::divides(g, m); }))
            ++c;
    return c;
}

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

} // namespace

TEST_SUITE("hilbert") {

TEST_CASE("polynomial ring") {
    CHECK(hilbert::hilbert_function({}, 2, 3) == 10);
    for (std::size_t m = 1; m <= 5; ++m)
        for (long i = 0; i <= 20; ++i)
            CHECK(hilbert::hilbert_function({}, m, i) == binom(static_cast<long>(m) + i, static_cast<unsigned long>(i)));
    auto h = hilbert::hilbert_polynomial({}, 2);
    CHECK(h.binomial_coeffs == ints({1, 2, 1}));
    CHECK(h.degree == 2);
    CHECK(h.multiplicity == 1);
    for (long i = 0; i <= 20; ++i)
        CHECK(hilbert::evaluate(h, i) == binom(i + 2, 2));
    auto h4 = hilbert::hilbert_polynomial({}, 4);
    CHECK(h4.degree == 4);
    CHECK(h4.multiplicity == 1);
}

TEST_CASE("small ideals") {
    hilbert::MonomialIdeal XY{{1, 1}};
    for (long i = 0; i <= 12; ++i)
        CHECK(hilbert::hilbert_function(XY, 2, i) == 2 * i + 1);
    auto h = hilbert::hilbert_polynomial(XY, 2);
    CHECK(h.binomial_coeffs == ints({1, 2}));
    CHECK(h.degree == 1);
    CHECK(h.multiplicity == 2);
    CHECK(hilbert::hilbert_function({{1}}, 1, 7) == 1);
    auto y = hilbert::hilbert_polynomial({{0, 1}}, 2);
    CHECK(y.binomial_coeffs == ints({1, 1}));
    CHECK(y.multiplicity == 1);
    auto pt = hilbert::hilbert_polynomial({{1, 0}, {0, 1}}, 2);
    CHECK(pt.degree == 0);
    CHECK(pt.multiplicity == 1);
    auto unit = hilbert::hilbert_polynomial({{0, 0}}, 2);
    CHECK(unit.is_zero());
    CHECK(unit.degree == -1);
}

TEST_CASE("negative binomial coefficients") {
    // X^2 Y^2: h(i) = 4i - 2 for i >= 2, h(1) = 3
    auto h = hilbert::hilbert_polynomial({{2, 2}}, 2);
    CHECK(h.binomial_coeffs == ints({-2, 4}));
    CHECK(h.stability_index == 2);
    CHECK(hilbert::hilbert_function({{2, 2}}, 2, 1) == 3);
    for (long i = 2; i <= 12; ++i)
        CHECK(hilbert::hilbert_function({{2, 2}}, 2, i) == 4 * i - 2);
}

TEST_CASE("dimension and multiplicity") {
    auto ctx = cpoly::field_context(5, 2);
    auto d1 = hilbert::dim_and_mult(ctx, {make(ctx, {{E{1, 1}, 1}})});
    CHECK(d1.dimension == 1);
    CHECK(d1.multiplicity == 2);
    auto d0 = hilbert::dim_and_mult(ctx, {make(ctx, {{E{1, 0}, 1}}), make(ctx, {{E{0, 1}, 1}})});
    CHECK(d0.dimension == 0);
    CHECK(d0.multiplicity == 1);
    auto ctx4 = cpoly::field_context(5, 4);
    auto d4 = hilbert::dim_and_mult(ctx4, {});
    CHECK(d4.dimension == 4);
    CHECK(d4.multiplicity == 1);
}

TEST_CASE("non-degree-compatible order is rejected") {
    auto ctx = cpoly::field_context(5, 2, cpoly::weighted({1, 1}));
    CHECK(hilbert::hilbert_function(ctx, {make(ctx, {{E{1, 1}, 1}})}, 2) == 5);
    auto bad = cpoly::field_context(5, 2, cpoly::weighted({1, 0}));
    CHECK_THROWS_AS(hilbert::hilbert_function(bad, {make(bad, {{E{1, 1}, 1}})}, 2), Error);
}

TEST_CASE("random monomial ideals: counting, polynomial, monotonicity") {
    std::mt19937 rng(31);
    for (int inst = 0; inst < 60; ++inst) {
        std::size_t n = 1 + inst % 3;
        hilbert::MonomialIdeal M;
        int k = 1 + static_cast<int>(rng() % 4);
        for (int g = 0; g < k; ++g) {
            gb::Exponents e(n, 0);
            std::uint32_t total = 1 + rng() % 4;
            for (std::uint32_t s = 0; s < total; ++s)
                ++e[rng() % n];
            M.push_back(e);
        }
        auto P = hilbert::hilbert_polynomial(M, n);
        for (std::uint32_t i = 0; i <= 12; ++i) {
            long expect = count_standard(M, n, i);
            CHECK(hilbert::hilbert_function(M, n, i) == expect);
            if (static_cast<long>(i) >= P.stability_index)
                CHECK(hilbert::evaluate(P, i) == expect);
        }
        // a larger ideal has a smaller Hilbert function
        auto bigger = M;
        gb::Exponents extra(n, 0);
        extra[rng() % n] = 2;
        bigger.push_back(extra);
        for (std::uint32_t i = 0; i <= 12; ++i)
            CHECK(hilbert::hilbert_function(bigger, n, i) <= hilbert::hilbert_function(M, n, i));
        CHECK(hilbert::minimalize(M).size() <= M.size());
    }
}

}

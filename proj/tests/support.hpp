#pragma once

#include <string>
#include <vector>

#include "oracles.hpp"
#include "weylstab/charvar.hpp"
#include "weylstab/cli.hpp"
#include "weylstab/cpoly.hpp"

namespace support {

using namespace weylstab;

inline AlgebraDescriptor algebra(std::uint32_t p, std::uint32_t d = 1, std::uint32_t level = 0) {
    return AlgebraDescriptor{d, level, p, CoefficientKind::LocalField};
}

inline WeylElement parse(const std::string& s, const AlgebraDescriptor& a) { return cli::parse_expression(s, a); }

/// Cyclic (rank 1) module A / A(r_1, ..., r_k) at level 0.
inline charvar::ModulePresentation cyclic(std::uint32_t p, const std::vector<std::string>& rels, std::uint32_t d = 1) {
    charvar::ModulePresentation P{algebra(p, d), 1, {}};
    for (const auto& r : rels)
        P.relations.push_back({parse(r, P.algebra)});
    return P;
}

inline charvar::ModulePresentation free_module(std::uint32_t p, std::uint32_t d = 1) {
    return charvar::ModulePresentation{algebra(p, d), 1, {}};
}

template <class Ring>
gb::Vec<Ring> from_oracle(const gb::Context<Ring>& ctx, const oracle::Poly& f, std::uint32_t comp = 0) {
    std::vector<gb::Term<Ring>> terms;
    for (const auto& [e, c] : f)
        terms.push_back({gb::Monomial{comp, e}, ctx.ring().from_rational(c)});
    return ctx.normalize(std::move(terms));
}

template <class Ring>
oracle::Poly to_oracle(const gb::Context<Ring>& ctx, const gb::Vec<Ring>& f) {
    oracle::Poly out;
    for (const auto& t : f.terms)
        oracle::add_term(out, t.mono.exp, ctx.ring().to_rational(t.coef));
    return out;
}

inline oracle::Poly to_oracle(const WeylElement& w) {
    oracle::Poly out;
    for (const auto& [e, c] : w.terms())
        oracle::add_term(out, e, c);
    return out;
}

/// Polynomial from (exponent, coefficient) pairs.
inline oracle::Poly poly(std::initializer_list<std::pair<oracle::Exp, long>> terms) {
    oracle::Poly out;
    for (const auto& [e, c] : terms)
        oracle::add_term(out, e, mpq_class(c));
    return out;
}

template <class Ring>
gb::Vec<Ring> make(const gb::Context<Ring>& ctx, std::initializer_list<std::pair<oracle::Exp, long>> terms,
                   std::uint32_t comp = 0) {
    return from_oracle(ctx, poly(terms), comp);
}

/// Random polynomial with nterms terms of total degree <= maxdeg over small integers.
inline oracle::Poly random_poly(std::mt19937& rng, std::size_t nvars, std::uint32_t maxdeg, std::size_t nterms,
                                long coef_range = 5) {
    std::uniform_int_distribution<long> coef(-coef_range, coef_range);
    std::uniform_int_distribution<std::uint32_t> deg(0, maxdeg);
    oracle::Poly f;
    for (std::size_t k = 0; k < nterms; ++k) {
        oracle::Exp e(nvars, 0);
        std::uint32_t total = deg(rng);
        for (std::uint32_t s = 0; s < total; ++s)
            ++e[std::uniform_int_distribution<std::size_t>(0, nvars - 1)(rng)];
        oracle::add_term(f, e, mpq_class(coef(rng)));
    }
    return f;
}

/// Random homogeneous polynomial of degree exactly deg.
inline oracle::Poly random_homogeneous(std::mt19937& rng, std::size_t nvars, std::uint32_t deg, std::size_t nterms,
                                       long coef_range = 5) {
    auto mons = oracle::monomials_of_degree(nvars, deg);
    std::uniform_int_distribution<long> coef(-coef_range, coef_range);
    std::uniform_int_distribution<std::size_t> pick(0, mons.size() - 1);
    oracle::Poly f;
    for (std::size_t k = 0; k < nterms; ++k)
        oracle::add_term(f, mons[pick(rng)], mpq_class(coef(rng)));
    return f;
}

} // namespace support

#pragma once

// Commutative polynomial rings over F_p and Z_(p): Gröbner bases, submodule
// operations, radicals for a few ideal classes, dimension and p-torsion.

#include <cstdint>
#include <string>
#include <vector>

#include "weylstab/groebner.hpp"

namespace weylstab::cpoly {

using Field = gb::PrimeField;
using Local = gb::LocalRing;
using Poly = gb::Vec<Field>;
using LocalPoly = gb::Vec<Local>;
using FieldContext = gb::Context<Field>;
using LocalContext = gb::Context<Local>;

gb::MonomialOrder degrevlex();
gb::MonomialOrder deglex();
/// Weight vector refined by degrevlex.
gb::MonomialOrder weighted(std::vector<std::uint32_t> w);

/// Generators of a submodule of Ring[vars]^rank (component = position).
template <class Ring>
struct SubmodulePresentation {
    std::size_t rank = 1;
    std::vector<gb::Vec<Ring>> gens;
};

FieldContext field_context(std::uint32_t p, std::size_t nvars, gb::MonomialOrder order = degrevlex(),
                           Limits limits = {});
LocalContext local_context(std::uint32_t p, std::size_t nvars, gb::MonomialOrder order = degrevlex(),
                           Limits limits = {});

std::vector<Poly> gb_field(const FieldContext& ctx, const SubmodulePresentation<Field>& gens);
std::vector<LocalPoly> strong_gb_local(const LocalContext& ctx, const SubmodulePresentation<Local>& gens);

template <class Ring>
bool is_member(const gb::Context<Ring>& ctx, const gb::Vec<Ring>& f, const std::vector<gb::Vec<Ring>>& basis) {
    return ctx.is_member(f, basis);
}

/// e_j with unit coefficient.
template <class Ring>
gb::Vec<Ring> unit_vector(const gb::Context<Ring>& ctx, std::uint32_t j) {
    return ctx.monomial(gb::Exponents(ctx.nvars(), 0), j, ctx.ring().one());
}

/// (N : v) = {f : f v in N}, as a reduced basis of an ideal. ctx must be commutative.
std::vector<Poly> colon(const FieldContext& ctx, const SubmodulePresentation<Field>& N, const Poly& v);
std::vector<Poly> intersect(const FieldContext& ctx, const std::vector<std::vector<Poly>>& ideals);
/// Ann(F^r / N).
std::vector<Poly> annihilator(const FieldContext& ctx, const SubmodulePresentation<Field>& N);

bool has_squarefree_leading_ideal(const std::vector<Poly>& basis);
/// Radical for monomial, principal and zero-dimensional ideals and for ideals
/// with a squarefree initial ideal. Throws UnsupportedRadical otherwise.
std::vector<Poly> radical(const FieldContext& ctx, const std::vector<Poly>& ideal);

Poly derivative(const FieldContext& ctx, const Poly& f, std::size_t var);
/// Exact quotient f / g; throws InvalidArgument if g does not divide f.
Poly divide_exact(const FieldContext& ctx, const Poly& f, const Poly& g);
Poly gcd(const FieldContext& ctx, const Poly& f, const Poly& g);
/// Product of the distinct irreducible factors of f, monic.
Poly squarefree_part(const FieldContext& ctx, const Poly& f);

/// Dimension of V(I) from a Gröbner basis; -1 for the unit ideal.
long krull_dim(const std::vector<gb::Exponents>& leading, std::size_t nvars);
long krull_dim(const FieldContext& ctx, const std::vector<Poly>& ideal);

/// N_Q intersected with the integral free module, as a strong basis. Works in
/// Weyl contexts too (any number of pairs).
SubmodulePresentation<Local> saturate(const LocalContext& ctx, const SubmodulePresentation<Local>& N);
/// Least k with p^k killing the p-torsion of F^r / N.
long torsion_exponent(const LocalContext& ctx, const SubmodulePresentation<Local>& N, long cap = 64);

template <class Ring>
std::string format(const gb::Vec<Ring>& f, const Ring& ring, const std::vector<std::string>& names,
                   std::uint32_t component = 0) {
    std::string out;
    for (const auto& t : f.terms) {
        if (t.mono.comp != component)
            continue;
        Rational c = ring.to_rational(t.coef);
        std::string mono;
        for (std::size_t i = 0; i < t.mono.exp.size(); ++i) {
            if (t.mono.exp[i] == 0)
                continue;
            if (!mono.empty())
                mono += "*";
            mono += names.at(i);
            if (t.mono.exp[i] > 1)
                mono += "^" + std::to_string(t.mono.exp[i]);
        }
        bool negative = sgn(c) < 0;
        if (out.empty())
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        Rational mag = abs(c);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out.empty() ? "0" : out;
}

/// `(f_1, ..., f_r)`, or the bare polynomial when rank is 1.
template <class Ring>
std::string format_vector(const gb::Vec<Ring>& f, const Ring& ring, const std::vector<std::string>& names,
                          std::size_t rank) {
    if (rank == 1)
        return format(f, ring, names, 0);
    std::string out = "(";
    for (std::size_t j = 0; j < rank; ++j) {
        if (j != 0)
            out += ", ";
        out += format(f, ring, names, static_cast<std::uint32_t>(j));
    }
    return out + ")";
}

/// X1..Xd, Y1..Yd.
std::vector<std::string> symbol_names(std::uint32_t d);

} // namespace weylstab::cpoly

#include "weylstab/charvar.hpp"

#include <algorithm>

namespace weylstab::charvar {

namespace {

template <class Ring>
gb::Vec<Ring> to_vec(const gb::Context<Ring>& ctx, const std::vector<WeylElement>& v) {
    std::vector<gb::Term<Ring>> terms;
    for (std::size_t j = 0; j < v.size(); ++j)
        for (const auto& [e, c] : v[j].terms())
            terms.push_back({gb::Monomial{static_cast<std::uint32_t>(j), e}, ctx.ring().from_rational(c)});
    return ctx.normalize(std::move(terms));
}

template <class Ring>
std::vector<WeylElement> from_vec(const AlgebraDescriptor& a, const gb::Context<Ring>& ctx, const gb::Vec<Ring>& v,
                                  std::size_t rank) {
    std::vector<WeylElement::TermList> parts(rank);
    for (const auto& t : v.terms)
        parts.at(t.mono.comp).emplace_back(t.mono.exp, ctx.ring().to_rational(t.coef));
    std::vector<WeylElement> out;
    for (auto& p : parts)
        out.push_back(WeylElement::from_terms(a, std::move(p)));
    return out;
}

gb::MonomialOrder graded_order(Grading grading, std::uint32_t d) {
    gb::MonomialOrder o;
    o.weights.push_back(grading_weights(grading, d));
    return o;
}

// Top-weight part of v, moved into the commutative context.
template <class Ring>
gb::Vec<Ring> top_part(const gb::Context<Ring>& target, const gb::Vec<Ring>& v, const std::vector<std::uint32_t>& w) {
    std::uint64_t top = 0;
    std::vector<std::uint64_t> weight;
    for (const auto& t : v.terms) {
        std::uint64_t s = 0;
        for (std::size_t i = 0; i < w.size(); ++i)
            s += static_cast<std::uint64_t>(w[i]) * t.mono.exp[i];
        weight.push_back(s);
        top = std::max(top, s);
    }
    std::vector<gb::Term<Ring>> terms;
    for (std::size_t i = 0; i < v.terms.size(); ++i)
        if (weight[i] == top)
            terms.push_back(v.terms[i]);
    return target.normalize(std::move(terms));
}

gb::Context<gb::LocalRing> local_weyl_context(const AlgebraDescriptor& a, Grading grading, const Limits& limits) {
    return gb::Context<gb::LocalRing>(gb::LocalRing{a.prime}, a.d, 0, a.commutator(), graded_order(grading, a.d),
                                      limits);
}

std::vector<std::string> format_ideal(const cpoly::FieldContext& ctx, const std::vector<cpoly::Poly>& G,
                                      std::uint32_t d) {
    std::vector<std::string> out;
    auto names = cpoly::symbol_names(d);
    for (const auto& g : G)
        out.push_back(cpoly::format(g, ctx.ring(), names));
    return out;
}

CharData compute(const SliceModule& S, const WeylBasis& B, const Limits& limits, bool strict) {
    auto ctx = symbol_context(S.algebra, limits);
    cpoly::SubmodulePresentation<cpoly::Field> N{B.rank, {}};
    for (const auto& g : B.initial)
        N.gens.push_back(ctx.normalize(g.terms));
    auto ann = cpoly::annihilator(ctx, N);

    CharData c;
    c.level = S.level;
    c.d = S.algebra.d;
    c.annihilator_strings = format_ideal(ctx, ann, c.d);
    try {
        c.ideal = cpoly::radical(ctx, ann);
    } catch (const Error& e) {
        if (strict || e.code() != ErrorCode::UnsupportedRadical)
            throw;
        c.ideal = ann;
        c.radical_verified = false;
    }
    c.ideal_strings = format_ideal(ctx, c.ideal, c.d);
    c.hilbert = hilbert::hilbert_polynomial(ctx, c.ideal);
    auto dm = hilbert::dim_and_mult(ctx, c.ideal);
    c.dimension = dm.dimension;
    c.multiplicity = dm.multiplicity;
    c.holonomic = c.hilbert.is_zero() || c.dimension == static_cast<long>(c.d);
    return c;
}

} // namespace

void ModulePresentation::validate() const {
    algebra.validate();
    if (algebra.coefficients != CoefficientKind::LocalField)
        fail(ErrorCode::InvalidArgument, "module presentations use local-field coefficients");
    if (rank < 1)
        fail(ErrorCode::InvalidArgument, "module rank must be at least 1");
    for (const auto& v : relations) {
        if (v.size() != rank)
            fail(ErrorCode::InvalidArgument, "relation vector of length " + std::to_string(v.size()) +
                                                 " in a module of rank " + std::to_string(rank));
        for (const auto& e : v) {
            if (!(e.algebra() == algebra))
                fail(ErrorCode::AlgebraMismatch, "relation lives in a different algebra");
            if (!e.is_integral())
                fail(ErrorCode::NotIntegral, "relation " + e.to_string() + " is not integral");
        }
    }
}

bool WeylBasis::is_zero_module() const {
    std::vector<bool> unit(rank, false);
    for (const auto& g : basis)
        if (gb::total_degree(g.lm().exp) == 0)
            unit.at(g.lm().comp) = true;
    return std::all_of(unit.begin(), unit.end(), [](bool b) { return b; });
}

bool CharData::same_data(const CharData& other) const {
    return d == other.d && ideal_strings == other.ideal_strings && hilbert == other.hilbert &&
           dimension == other.dimension && multiplicity == other.multiplicity && holonomic == other.holonomic &&
           radical_verified == other.radical_verified;
}

SliceContext slice_context(const AlgebraDescriptor& residue_algebra, Grading grading, const Limits& limits) {
    SliceRing F{residue_algebra.prime};
    return SliceContext(F, residue_algebra.d, 0, F.from_rational(residue_algebra.residue().commutator()),
                        graded_order(grading, residue_algebra.d), limits);
}

cpoly::FieldContext symbol_context(const AlgebraDescriptor& algebra, const Limits& limits) {
    return cpoly::field_context(algebra.prime, algebra.nvars(), cpoly::degrevlex(), limits);
}

ModulePresentation saturate_lattice(const ModulePresentation& P, const Limits& limits) {
    P.validate();
    auto ctx = local_weyl_context(P.algebra, Grading::Bernstein, limits);
    cpoly::SubmodulePresentation<gb::LocalRing> N{P.rank, {}};
    for (const auto& v : P.relations)
        N.gens.push_back(to_vec(ctx, v));
    auto sat = cpoly::saturate(ctx, N);
    ModulePresentation out{P.algebra, P.rank, {}};
    for (const auto& g : sat.gens)
        out.relations.push_back(from_vec(P.algebra, ctx, g, P.rank));
    return out;
}

SliceModule slice(const ModulePresentation& P, std::uint32_t n, const Limits& limits) {
    P.validate();
    if (n < P.algebra.level)
        fail(ErrorCode::InvalidArgument, "slice level below the presentation level");
    ModulePresentation at{P.algebra.with_level(n), P.rank, {}};
    for (const auto& v : P.relations)
        at.relations.push_back(rebase_vector(v, n).first);
    ModulePresentation sat = saturate_lattice(at, limits);

    SliceModule S{n, P.algebra.with_level(n).residue(), P.rank, {}};
    for (const auto& v : sat.relations) {
        std::vector<WeylElement> r;
        bool zero = true;
        for (const auto& e : v) {
            r.push_back(e.reduce_mod_p());
            zero = zero && r.back().is_zero();
        }
        if (!zero)
            S.relations.push_back(std::move(r));
    }
    if (weyl_gb(S, Grading::Bernstein, limits).is_zero_module())
        fail(ErrorCode::DegenerateLattice, "slice at level " + std::to_string(n) + " is zero");
    return S;
}

WeylBasis weyl_gb(const SliceModule& S, Grading grading, const Limits& limits) {
    auto ctx = slice_context(S.algebra, grading, limits);
    std::vector<SliceVec> gens;
    for (const auto& v : S.relations)
        gens.push_back(to_vec(ctx, v));
    WeylBasis B{grading, S.rank, ctx.groebner(gens), {}};
    auto target = symbol_context(S.algebra, limits);
    auto w = grading_weights(grading, S.algebra.d);
    for (const auto& g : B.basis) {
        auto s = top_part(ctx, g, w);
        B.initial.push_back(target.normalize(s.terms));
    }
    return B;
}

CharData characteristic_ideal(const SliceModule& S, const Limits& limits) {
    auto B = weyl_gb(S, Grading::Bernstein, limits);
    if (B.is_zero_module())
        fail(ErrorCode::DegenerateLattice, "slice at level " + std::to_string(S.level) + " is zero");
    return compute(S, B, limits, true);
}

CharData char_data(const ModulePresentation& P, std::uint32_t n, const Limits& limits) {
    SliceModule S = slice(P, n, limits);
    return compute(S, weyl_gb(S, Grading::Bernstein, limits), limits, false);
}

bool bernstein_check(const CharData& c) { return c.hilbert.is_zero() || c.dimension >= static_cast<long>(c.d); }

bool dims_agree(const SliceModule& S, const Limits& limits) {
    CharData c = compute(S, weyl_gb(S, Grading::Bernstein, limits), limits, false);
    auto order = weyl_gb(S, Grading::Order, limits);
    auto ctx = symbol_context(S.algebra, limits);
    cpoly::SubmodulePresentation<cpoly::Field> N{order.rank, order.initial};
    return cpoly::krull_dim(ctx, cpoly::annihilator(ctx, N)) == c.dimension;
}

bool dims_agree(const ModulePresentation& P, std::uint32_t n, const Limits& limits) {
    return dims_agree(slice(P, n, limits), limits);
}

cpoly::SubmodulePresentation<cpoly::Local> integral_initial_module(const ModulePresentation& P, Grading grading,
                                                                    const Limits& limits) {
    ModulePresentation sat = saturate_lattice(P, limits);
    auto ctx = local_weyl_context(P.algebra, grading, limits);
    std::vector<gb::Vec<gb::LocalRing>> gens;
    for (const auto& v : sat.relations)
        gens.push_back(to_vec(ctx, v));
    auto target = cpoly::local_context(P.algebra.prime, P.algebra.nvars(), cpoly::degrevlex(), limits);
    auto w = grading_weights(grading, P.algebra.d);
    cpoly::SubmodulePresentation<cpoly::Local> out{P.rank, {}};
    for (const auto& g : ctx.groebner(gens)) {
        auto s = top_part(ctx, g, w);
        out.gens.push_back(target.normalize(s.terms));
    }
    return out;
}

std::vector<std::string> format_relations(const SliceModule& S) {
    auto ctx = slice_context(S.algebra, Grading::Bernstein, {});
    std::vector<std::string> names;
    for (std::size_t i = 0; i < S.algebra.nvars(); ++i)
        names.push_back(variable_name(i, S.algebra.d, S.level > 0));
    std::vector<std::string> out;
    for (const auto& v : S.relations)
        out.push_back(cpoly::format_vector(to_vec(ctx, v), ctx.ring(), names, S.rank));
    return out;
}

} // namespace weylstab::charvar

#include "weylstab/cpoly.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace weylstab::cpoly {

gb::MonomialOrder degrevlex() { return gb::MonomialOrder::degrevlex(); }

gb::MonomialOrder deglex() {
    gb::MonomialOrder o;
    o.deglex = true;
    return o;
}

gb::MonomialOrder weighted(std::vector<std::uint32_t> w) {
    gb::MonomialOrder o;
    o.weights.push_back(std::move(w));
    return o;
}

std::vector<std::string> symbol_names(std::uint32_t d) {
    std::vector<std::string> names;
    for (std::uint32_t i = 1; i <= d; ++i)
        names.push_back("X" + std::to_string(i));
    for (std::uint32_t i = 1; i <= d; ++i)
        names.push_back("Y" + std::to_string(i));
    return names;
}

FieldContext field_context(std::uint32_t p, std::size_t nvars, gb::MonomialOrder order, Limits limits) {
    return FieldContext::commutative(Field{p}, nvars, std::move(order), limits);
}

LocalContext local_context(std::uint32_t p, std::size_t nvars, gb::MonomialOrder order, Limits limits) {
    return LocalContext::commutative(Local{p}, nvars, std::move(order), limits);
}

std::vector<Poly> gb_field(const FieldContext& ctx, const SubmodulePresentation<Field>& gens) {
    return ctx.groebner(gens.gens);
}

std::vector<LocalPoly> strong_gb_local(const LocalContext& ctx, const SubmodulePresentation<Local>& gens) {
    return ctx.groebner(gens.gens);
}

namespace {

Poly shift_component(const Poly& f, std::uint32_t comp) {
    Poly out = f;
    for (auto& t : out.terms)
        t.mono.comp = comp;
    return out;
}

bool is_constant(const Poly& f) { return f.terms.size() == 1 && gb::total_degree(f.lm().exp) == 0; }

bool is_unit_ideal(const std::vector<Poly>& G) {
    for (const auto& g : G)
        if (!g.is_zero() && gb::total_degree(g.lm().exp) == 0)
            return true;
    return false;
}

} // namespace

std::vector<Poly> colon(const FieldContext& ctx, const SubmodulePresentation<Field>& N, const Poly& v) {
    if (!ctx.commutative())
        fail(ErrorCode::InvalidArgument, "colon needs a commutative ring");
    gb::MonomialOrder pot = ctx.order();
    pot.position_over_term = true;
    FieldContext big(ctx.ring(), ctx.pairs(), ctx.extra(), ctx.commutator(), pot, ctx.limits());
    const auto tag = static_cast<std::uint32_t>(N.rank);
    std::vector<Poly> gens;
    for (const auto& g : N.gens)
        gens.push_back(big.normalize(g.terms));
    gens.push_back(big.add(big.normalize(v.terms), unit_vector(big, tag)));
    std::vector<Poly> out;
    for (auto& g : big.groebner(gens))
        if (g.lm().comp == tag)
            out.push_back(shift_component(g, 0));
    for (auto& g : out)
        g = ctx.normalize(g.terms);
    return ctx.interreduce(std::move(out));
}

std::vector<Poly> intersect(const FieldContext& ctx, const std::vector<std::vector<Poly>>& ideals) {
    if (ideals.empty())
        return {unit_vector(ctx, 0)};
    if (ideals.size() == 1)
        return ctx.groebner(ideals.front());
    SubmodulePresentation<Field> N{ideals.size(), {}};
    Poly diagonal;
    for (std::size_t j = 0; j < ideals.size(); ++j) {
        for (const auto& f : ideals[j])
            N.gens.push_back(shift_component(f, static_cast<std::uint32_t>(j)));
        diagonal = ctx.add(diagonal, unit_vector(ctx, static_cast<std::uint32_t>(j)));
    }
    return colon(ctx, N, diagonal);
}

std::vector<Poly> annihilator(const FieldContext& ctx, const SubmodulePresentation<Field>& N) {
    if (N.rank == 1)
        return ctx.groebner(N.gens);
    std::vector<std::vector<Poly>> parts;
    for (std::size_t j = 0; j < N.rank; ++j) {
        parts.push_back(colon(ctx, N, unit_vector(ctx, static_cast<std::uint32_t>(j))));
        if (parts.back().empty())
            return {};
    }
    return intersect(ctx, parts);
}

bool has_squarefree_leading_ideal(const std::vector<Poly>& basis) {
    for (const auto& g : basis)
        for (auto e : g.lm().exp)
            if (e > 1)
                return false;
    return true;
}

// ---------------------------------------------------------------------------

Poly derivative(const FieldContext& ctx, const Poly& f, std::size_t var) {
    std::vector<gb::Term<Field>> terms;
    for (const auto& t : f.terms) {
        if (t.mono.exp[var] == 0)
            continue;
        auto c = ctx.ring().mul(t.coef, t.mono.exp[var] % ctx.ring().p);
        if (ctx.ring().is_zero(c))
            continue;
        gb::Monomial m = t.mono;
        --m.exp[var];
        terms.push_back({std::move(m), c});
    }
    return ctx.normalize(std::move(terms));
}

Poly divide_exact(const FieldContext& ctx, const Poly& f, const Poly& g) {
    if (g.is_zero())
        fail(ErrorCode::DivisionByZero, "division by the zero polynomial");
    Poly q, r = f;
    const auto inv = ctx.ring().inv(g.lc());
    while (!r.is_zero()) {
        if (!gb::divides(g.lm().exp, r.lm().exp))
            fail(ErrorCode::InvalidArgument, "polynomial division is not exact");
        gb::Exponents m = gb::quotient(r.lm().exp, g.lm().exp);
        auto c = ctx.ring().mul(r.lc(), inv);
        q = ctx.add(q, ctx.monomial(m, 0, c));
        r = ctx.sub(r, ctx.mul_monomial(m, c, g));
    }
    return q;
}

Poly gcd(const FieldContext& ctx, const Poly& f, const Poly& g) {
    if (f.is_zero())
        return ctx.canonical(g);
    if (g.is_zero())
        return ctx.canonical(f);
    if (is_constant(f) || is_constant(g))
        return unit_vector(ctx, 0);
    auto l = intersect(ctx, {{f}, {g}});
    if (l.size() != 1)
        fail(ErrorCode::InvalidArgument, "intersection of principal ideals is not principal");
    return ctx.canonical(divide_exact(ctx, ctx.mul(f, g), l.front()));
}

namespace {

Poly pth_root(const FieldContext& ctx, const Poly& f) {
    const auto p = ctx.ring().p;
    std::vector<gb::Term<Field>> terms;
    for (const auto& t : f.terms) {
        gb::Monomial m = t.mono;
        for (auto& e : m.exp)
            e /= p;
        // a^p = a in F_p
        terms.push_back({std::move(m), t.coef});
    }
    return ctx.normalize(std::move(terms));
}

} // namespace

Poly squarefree_part(const FieldContext& ctx, const Poly& f) {
    if (f.is_zero())
        fail(ErrorCode::ZeroElement, "squarefree part of zero");
    if (is_constant(f))
        return unit_vector(ctx, 0);
    Poly g = f;
    bool all_zero = true;
    for (std::size_t i = 0; i < ctx.nvars(); ++i) {
        Poly di = derivative(ctx, f, i);
        if (di.is_zero())
            continue;
        all_zero = false;
        g = gcd(ctx, g, di);
    }
    if (all_zero)
        return squarefree_part(ctx, pth_root(ctx, f));
    Poly a = divide_exact(ctx, f, g);
    Poly b = f;
    for (;;) {
        Poly h = gcd(ctx, b, a);
        if (is_constant(h))
            break;
        b = divide_exact(ctx, b, h);
    }
    if (!is_constant(b))
        a = ctx.mul(a, squarefree_part(ctx, pth_root(ctx, b)));
    return ctx.canonical(a);
}

// ---------------------------------------------------------------------------

long krull_dim(const std::vector<gb::Exponents>& leading, std::size_t nvars) {
    if (nvars > 24)
        fail(ErrorCode::ResourceExceeded, "too many variables for the independent-set search");
    std::vector<std::uint32_t> supports;
    for (const auto& e : leading) {
        std::uint32_t s = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (e[i] != 0)
                s |= 1u << i;
        if (s == 0)
            return -1;
        supports.push_back(s);
    }
    long best = 0;
    for (std::uint32_t set = 0; set < (1u << nvars); ++set) {
        long size = std::popcount(set);
        if (size <= best)
            continue;
        bool independent = std::none_of(supports.begin(), supports.end(),
                                        [&](std::uint32_t s) { return (s & ~set) == 0; });
        if (independent)
            best = size;
    }
    return best;
}

long krull_dim(const FieldContext& ctx, const std::vector<Poly>& ideal) {
    std::vector<gb::Exponents> lead;
    for (const auto& g : ctx.groebner(ideal))
        lead.push_back(g.lm().exp);
    return krull_dim(lead, ctx.nvars());
}

namespace {

std::size_t count_standard_monomials(const std::vector<Poly>& G, std::size_t nvars) {
    // zero-dimensional: every variable has a pure power in the leading ideal
    std::vector<std::uint32_t> bound(nvars, 0);
    for (const auto& g : G) {
        const auto& e = g.lm().exp;
        std::size_t nz = 0, idx = 0;
        for (std::size_t i = 0; i < nvars; ++i)
            if (e[i] != 0) {
                ++nz;
                idx = i;
            }
        if (nz == 1 && (bound[idx] == 0 || e[idx] < bound[idx]))
            bound[idx] = e[idx];
    }
    std::size_t count = 0;
    gb::Exponents e(nvars, 0);
    for (;;) {
        bool standard = std::none_of(G.begin(), G.end(), [&](const Poly& g) { return gb::divides(g.lm().exp, e); });
        if (standard)
            ++count;
        std::size_t i = 0;
        while (i < nvars && ++e[i] >= bound[i]) {
            e[i] = 0;
            ++i;
        }
        if (i == nvars)
            break;
    }
    return count;
}

// Minimal polynomial of variable `var` modulo the zero-dimensional ideal G.
Poly minimal_polynomial(const FieldContext& ctx, const std::vector<Poly>& G, std::size_t var, std::size_t dim) {
    const auto& F = ctx.ring();
    std::map<std::vector<std::uint32_t>, std::size_t> column;
    // rows: normal forms of var^k, with an identity block tracking combinations
    std::vector<std::vector<std::uint64_t>> rows;
    std::vector<std::vector<std::uint64_t>> combos;
    gb::Exponents e(ctx.nvars(), 0);
    for (std::size_t k = 0; k <= dim; ++k) {
        e[var] = static_cast<std::uint32_t>(k);
        Poly nf = ctx.reduce(ctx.monomial(e, 0, F.one()), G, true);
        std::vector<std::uint64_t> row;
        for (const auto& t : nf.terms) {
            auto [it, inserted] = column.try_emplace(t.mono.exp, column.size());
            if (row.size() <= it->second)
                row.resize(it->second + 1, 0);
            row[it->second] = t.coef;
        }
        std::vector<std::uint64_t> combo(dim + 1, 0);
        combo[k] = 1;
        // eliminate against previous rows
        for (std::size_t r = 0; r < rows.size(); ++r) {
            auto pivot = std::find_if(rows[r].begin(), rows[r].end(), [](std::uint64_t x) { return x != 0; });
            std::size_t pc = static_cast<std::size_t>(pivot - rows[r].begin());
            if (pivot == rows[r].end() || pc >= row.size() || row[pc] == 0)
                continue;
            auto factor = F.mul(row[pc], F.inv(*pivot));
            if (row.size() < rows[r].size())
                row.resize(rows[r].size(), 0);
            for (std::size_t c = 0; c < rows[r].size(); ++c)
                row[c] = F.sub(row[c], F.mul(factor, rows[r][c]));
            for (std::size_t c = 0; c <= dim; ++c)
                combo[c] = F.sub(combo[c], F.mul(factor, combos[r][c]));
        }
        if (std::all_of(row.begin(), row.end(), [](std::uint64_t x) { return x == 0; })) {
            std::vector<gb::Term<Field>> terms;
            for (std::size_t c = 0; c <= dim; ++c) {
                gb::Exponents m(ctx.nvars(), 0);
                m[var] = static_cast<std::uint32_t>(c);
                terms.push_back({gb::Monomial{0, m}, combo[c]});
            }
            return ctx.canonical(ctx.normalize(std::move(terms)));
        }
        rows.push_back(std::move(row));
        combos.push_back(std::move(combo));
    }
    fail(ErrorCode::InvalidArgument, "no minimal polynomial found; ideal is not zero-dimensional");
}

} // namespace

std::vector<Poly> radical(const FieldContext& ctx, const std::vector<Poly>& ideal) {
    std::vector<Poly> G = ctx.groebner(ideal);
    if (G.empty() || is_unit_ideal(G) || has_squarefree_leading_ideal(G))
        return G;
    bool monomial = std::all_of(G.begin(), G.end(), [](const Poly& g) { return g.terms.size() == 1; });
    if (monomial) {
        std::vector<Poly> out;
        for (const auto& g : G) {
            gb::Exponents e = g.lm().exp;
            for (auto& v : e)
                v = v ? 1 : 0;
            out.push_back(ctx.monomial(e, 0, ctx.ring().one()));
        }
        return ctx.groebner(out);
    }
    if (G.size() == 1)
        return {squarefree_part(ctx, G.front())};
    if (krull_dim(ctx, G) == 0) {
        std::size_t dim = count_standard_monomials(G, ctx.nvars());
        std::vector<Poly> gens = G;
        for (std::size_t i = 0; i < ctx.nvars(); ++i)
            gens.push_back(squarefree_part(ctx, minimal_polynomial(ctx, G, i, dim)));
        return ctx.groebner(gens);
    }
    fail(ErrorCode::UnsupportedRadical, "radical of a positive-dimensional, non-principal, non-monomial ideal "
                                        "with a non-squarefree initial ideal");
}

// ---------------------------------------------------------------------------

SubmodulePresentation<Local> saturate(const LocalContext& ctx, const SubmodulePresentation<Local>& N) {
    const auto& R = ctx.ring();
    std::vector<LocalPoly> nonzero;
    for (const auto& g : N.gens)
        if (!g.is_zero())
            nonzero.push_back(g);
    if (nonzero.empty())
        return {N.rank, {}};
    if (nonzero.size() == 1) {
        // over a domain mod p, a primitive single generator is saturated
        long v = kInfiniteValuation;
        for (const auto& t : nonzero.front().terms)
            v = std::min(v, R.valuation(t.coef));
        Rational s(Integer(1), power_of(R.p, static_cast<unsigned long>(v)));
        return {N.rank, {ctx.canonical(ctx.scale(s, nonzero.front()))}};
    }

    const std::size_t n = ctx.nvars();
    gb::MonomialOrder order;
    std::vector<std::uint32_t> elim(n + 1, 0);
    elim[n] = 1;
    order.weights.push_back(elim);
    for (auto w : ctx.order().weights) {
        w.resize(n + 1, 0);
        order.weights.push_back(std::move(w));
    }
    order.deglex = ctx.order().deglex;
    LocalContext big(R, ctx.pairs(), ctx.extra() + 1, ctx.commutator(), order, ctx.limits());

    std::vector<LocalPoly> gens;
    for (const auto& g : nonzero) {
        std::vector<gb::Term<Local>> terms = g.terms;
        for (auto& t : terms)
            t.mono.exp.push_back(0);
        gens.push_back(big.normalize(std::move(terms)));
    }
    for (std::size_t j = 0; j < N.rank; ++j) {
        gb::Exponents t(n + 1, 0);
        t[n] = 1;
        gens.push_back(big.sub(big.monomial(t, static_cast<std::uint32_t>(j), Rational(R.p)),
                               big.monomial(gb::Exponents(n + 1, 0), static_cast<std::uint32_t>(j), R.one())));
    }
    std::vector<LocalPoly> kept;
    for (auto& g : big.groebner(gens)) {
        if (g.lm().exp[n] != 0)
            continue;
        for (auto& t : g.terms)
            t.mono.exp.pop_back();
        kept.push_back(ctx.normalize(std::move(g.terms)));
    }
    return {N.rank, ctx.groebner(kept)};
}

long torsion_exponent(const LocalContext& ctx, const SubmodulePresentation<Local>& N, long cap) {
    auto G = ctx.groebner(N.gens);
    auto S = saturate(ctx, N);
    long k = 0;
    for (const auto& g : S.gens) {
        long j = 0;
        LocalPoly h = g;
        while (!ctx.is_member(h, G)) {
            if (++j > cap)
                fail(ErrorCode::ResourceExceeded, "torsion exponent exceeds " + std::to_string(cap));
            h = ctx.scale(Rational(ctx.ring().p), h);
        }
        k = std::max(k, j);
    }
    return k;
}

} // namespace weylstab::cpoly

#include "weylstab/hilbert.hpp"

#include <algorithm>

namespace weylstab::hilbert {

namespace {

using Series = std::vector<Integer>;

Series multiply(const Series& a, const Series& b) {
    Series r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            r[i + j] += a[i] * b[j];
    return r;
}

Series& accumulate(Series& a, const Series& b, std::size_t shift) {
    if (a.size() < b.size() + shift)
        a.resize(b.size() + shift, 0);
    for (std::size_t i = 0; i < b.size(); ++i)
        a[i + shift] += b[i];
    return a;
}

bool coprime(const gb::Exponents& a, const gb::Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0)
            return false;
    return true;
}

Series numerator(MonomialIdeal M, std::size_t nvars) {
    M = minimalize(std::move(M));
    if (M.empty())
        return {1};
    if (M.size() == 1 && gb::total_degree(M.front()) == 0)
        return {0};

    // pivot on the variable shared by the most generators
    std::vector<std::size_t> uses(nvars, 0);
    bool all_coprime = true;
    for (std::size_t i = 0; i < M.size(); ++i)
        for (std::size_t j = i + 1; j < M.size(); ++j)
            if (!coprime(M[i], M[j]))
                all_coprime = false;
    if (all_coprime) {
        Series r{1};
        for (const auto& g : M) {
            Series f(gb::total_degree(g) + 1, 0);
            f[0] = 1;
            f.back() = -1;
            r = multiply(r, f);
        }
        return r;
    }
    for (const auto& g : M)
        for (std::size_t v = 0; v < nvars; ++v)
            if (g[v] != 0)
                ++uses[v];
    std::size_t pivot = static_cast<std::size_t>(std::max_element(uses.begin(), uses.end()) - uses.begin());

    MonomialIdeal plus, colon;
    for (const auto& g : M) {
        if (g[pivot] == 0)
            plus.push_back(g);
        gb::Exponents c = g;
        if (c[pivot] != 0)
            --c[pivot];
        colon.push_back(std::move(c));
    }
    gb::Exponents x(nvars, 0);
    x[pivot] = 1;
    plus.push_back(x);

    Series r = numerator(std::move(plus), nvars);
    accumulate(r, numerator(std::move(colon), nvars), 1);
    return r;
}

Integer binomial(long n, unsigned long k) {
    if (n < 0)
        return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), k);
    return r;
}

// C(x, m) as a polynomial in x, at any integer x.
Rational binomial_poly(long x, std::size_t m) {
    Rational r = 1;
    for (std::size_t j = 0; j < m; ++j)
        r *= Rational(x - static_cast<long>(j));
    Integer f;
    mpz_fac_ui(f.get_mpz_t(), m);
    return r / f;
}

Integer polynomial_value(const Series& N, std::size_t m, long i) {
    Rational s = 0;
    for (std::size_t k = 0; k < N.size(); ++k)
        if (sgn(N[k]) != 0)
            s += N[k] * binomial_poly(i - static_cast<long>(k) + static_cast<long>(m), m);
    if (s.get_den() != 1)
        fail(ErrorCode::InvalidArgument, "Hilbert polynomial value is not an integer");
    return s.get_num();
}

Integer function_value(const Series& N, std::size_t m, long i) {
    Integer s = 0;
    for (std::size_t k = 0; k < N.size() && static_cast<long>(k) <= i; ++k)
        s += N[k] * binomial(i - static_cast<long>(k) + static_cast<long>(m), m);
    return s;
}

} // namespace

MonomialIdeal minimalize(MonomialIdeal M) {
    std::sort(M.begin(), M.end(), [](const gb::Exponents& a, const gb::Exponents& b) {
        auto da = gb::total_degree(a), db = gb::total_degree(b);
        return da != db ? da < db : a < b;
    });
    M.erase(std::unique(M.begin(), M.end()), M.end());
    MonomialIdeal out;
    for (auto& g : M) {
        bool redundant = std::any_of(out.begin(), out.end(), [&](const gb::Exponents& h) { return gb::divides(h, g); });
        if (!redundant)
            out.push_back(std::move(g));
    }
    return out;
}

std::vector<Integer> series_numerator(const MonomialIdeal& M, std::size_t nvars) {
    Series r = numerator(M, nvars);
    while (r.size() > 1 && sgn(r.back()) == 0)
        r.pop_back();
    return r;
}

Integer hilbert_function(const MonomialIdeal& M, std::size_t nvars, long i) {
    if (i < 0)
        return 0;
    return function_value(series_numerator(M, nvars), nvars, i);
}

HilbertData hilbert_polynomial(const MonomialIdeal& M, std::size_t nvars) {
    const Series N = series_numerator(M, nvars);
    HilbertData h;
    if (N.size() == 1 && sgn(N[0]) == 0)
        return h;
    // a_j = (forward difference)^j p at 0
    std::vector<Integer> values;
    for (long i = 0; i <= static_cast<long>(nvars); ++i)
        values.push_back(polynomial_value(N, nvars, i));
    for (std::size_t j = 0; j <= nvars; ++j) {
        h.binomial_coeffs.push_back(values[0]);
        for (std::size_t i = 0; i + 1 < values.size(); ++i)
            values[i] = values[i + 1] - values[i];
        values.pop_back();
    }
    while (!h.binomial_coeffs.empty() && sgn(h.binomial_coeffs.back()) == 0)
        h.binomial_coeffs.pop_back();
    if (h.binomial_coeffs.empty())
        fail(ErrorCode::InvalidArgument, "nonzero quotient with zero Hilbert polynomial");
    h.degree = static_cast<long>(h.binomial_coeffs.size()) - 1;
    h.multiplicity = h.binomial_coeffs.back();

    long s = std::max(0L, static_cast<long>(N.size()) - 1 - static_cast<long>(nvars));
    while (s > 0 && function_value(N, nvars, s - 1) == polynomial_value(N, nvars, s - 1))
        --s;
    h.stability_index = s;
    return h;
}

Integer evaluate(const HilbertData& h, long i) {
    Integer s = 0;
    for (std::size_t j = 0; j < h.binomial_coeffs.size(); ++j) {
        Rational c = binomial_poly(i, j);
        s += h.binomial_coeffs[j] * c.get_num() / c.get_den();
    }
    return s;
}

MonomialIdeal leading_ideal(const std::vector<cpoly::Poly>& basis) {
    MonomialIdeal M;
    for (const auto& g : basis)
        if (!g.is_zero())
            M.push_back(g.lm().exp);
    return M;
}

namespace {

void require_degree_compatible(const cpoly::FieldContext& ctx) {
    for (const auto& w : ctx.order().weights) {
        bool uniform = std::all_of(w.begin(), w.end(), [&](std::uint32_t v) { return v == w.front(); });
        if (!uniform)
            fail(ErrorCode::InvalidArgument, "Hilbert functions need a degree-compatible order");
    }
}

} // namespace

Integer hilbert_function(const cpoly::FieldContext& ctx, const std::vector<cpoly::Poly>& ideal, long i) {
    require_degree_compatible(ctx);
    return hilbert_function(leading_ideal(ctx.groebner(ideal)), ctx.nvars(), i);
}

HilbertData hilbert_polynomial(const cpoly::FieldContext& ctx, const std::vector<cpoly::Poly>& ideal) {
    require_degree_compatible(ctx);
    return hilbert_polynomial(leading_ideal(ctx.groebner(ideal)), ctx.nvars());
}

DimMult dim_and_mult(const cpoly::FieldContext& ctx, const std::vector<cpoly::Poly>& ideal) {
    require_degree_compatible(ctx);
    auto lead = leading_ideal(ctx.groebner(ideal));
    HilbertData h = hilbert_polynomial(lead, ctx.nvars());
    long k = cpoly::krull_dim(lead, ctx.nvars());
    if (k != h.degree)
        fail(ErrorCode::DimensionMismatch, "Hilbert degree " + std::to_string(h.degree) + " but Krull dimension " +
                                               std::to_string(k));
    return {h.degree, h.multiplicity};
}

} // namespace weylstab::hilbert

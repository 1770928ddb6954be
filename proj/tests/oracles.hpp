#pragma once

// Independent reference computations for the test suites. Nothing here calls
// the Gröbner engine: products come from rewriting, dimensions from dense
// linear algebra.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <stdexcept>
#include <vector>

namespace oracle {

using Exp = std::vector<std::uint32_t>;
using Poly = std::map<Exp, mpq_class>;

inline void add_term(Poly& f, const Exp& e, const mpq_class& c) {
    auto& slot = f[e];
    slot += c;
    if (slot == 0)
        f.erase(e);
}

// ---------------------------------------------------------------------------
// Weyl algebra products by rewriting. Exponents are (a_1..a_d, b_1..b_d) for
// x^a eta^b; the relation is eta_i x_i = x_i eta_i + c.

/// Letters: 2*i for x_i, 2*i+1 for eta_i. Rewrites the word until every
/// eta stands right of every x, one adjacent swap at a time.
inline Poly rewrite_word(const std::vector<int>& word, unsigned d, const mpq_class& c) {
    std::map<std::vector<int>, mpq_class> pending{{word, 1}};
    Poly out;
    while (!pending.empty()) {
        auto [w, coef] = *pending.begin();
        pending.erase(pending.begin());
        if (coef == 0)
            continue;
        std::size_t k = 0;
        while (k + 1 < w.size() && !((w[k] & 1) == 1 && (w[k + 1] & 1) == 0))
            ++k;
        if (k + 1 >= w.size()) {
            Exp e(2 * d, 0);
            for (int l : w)
                ++e[(l & 1) ? d + l / 2 : l / 2];
            add_term(out, e, coef);
            continue;
        }
        std::vector<int> swapped = w;
        std::swap(swapped[k], swapped[k + 1]);
        pending[swapped] += coef;
        if (w[k] / 2 == w[k + 1] / 2 && c != 0) {
            std::vector<int> dropped(w.begin(), w.begin() + static_cast<long>(k));
            dropped.insert(dropped.end(), w.begin() + static_cast<long>(k) + 2, w.end());
            pending[dropped] += coef * c;
        }
    }
    return out;
}

inline std::vector<int> word_of(const Exp& e, unsigned d) {
    std::vector<int> w;
    for (unsigned i = 0; i < d; ++i)
        for (std::uint32_t k = 0; k < e[i]; ++k)
            w.push_back(static_cast<int>(2 * i));
    for (unsigned i = 0; i < d; ++i)
        for (std::uint32_t k = 0; k < e[d + i]; ++k)
            w.push_back(static_cast<int>(2 * i + 1));
    return w;
}

inline Poly rewrite_product(const Poly& a, const Poly& b, unsigned d, const mpq_class& c) {
    Poly out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> w = word_of(ea, d);
            auto wb = word_of(eb, d);
            w.insert(w.end(), wb.begin(), wb.end());
            for (const auto& [e, v] : rewrite_word(w, d, c))
                add_term(out, e, v * ca * cb);
        }
    return out;
}

/// Left multiplication by one generator: x_i f, or eta_i f via
/// eta_i x_i^a = x_i^a eta_i + a c x_i^(a-1).
inline Poly left_mul_letter(int letter, const Poly& f, unsigned d, const mpq_class& c) {
    Poly out;
    const unsigned i = static_cast<unsigned>(letter / 2);
    for (const auto& [e, v] : f) {
        Exp m = e;
        if ((letter & 1) == 0) {
            ++m[i];
            add_term(out, m, v);
            continue;
        }
        ++m[d + i];
        add_term(out, m, v);
        if (e[i] > 0 && c != 0) {
            Exp m2 = e;
            --m2[i];
            add_term(out, m2, v * c * e[i]);
        }
    }
    return out;
}

inline Poly left_mul_monomial(const Exp& m, const Poly& f, unsigned d, const mpq_class& c) {
    Poly g = f;
    auto w = word_of(m, d);
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        g = left_mul_letter(*it, g, d, c);
    return g;
}

// ---------------------------------------------------------------------------
// Dense linear algebra over F_p.

inline std::uint64_t mod_p(const mpq_class& q, std::uint64_t p) {
    mpz_class n = q.get_num() % p, den = q.get_den() % p;
    if (n < 0)
        n += p;
    if (den < 0)
        den += p;
    mpz_class inv;
    if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mpz_class(p).get_mpz_t()) == 0)
        throw std::runtime_error("denominator divisible by p");
    return mpz_class(n * inv % p).get_ui();
}

inline std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
    std::uint64_t r = 1, b = a % p, e = p - 2;
    while (e) {
        if (e & 1)
            r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

/// Row echelon form with pivots at the first nonzero column.
class Echelon {
public:
    explicit Echelon(std::uint64_t p) : p_(p) {}

    /// Reduces v; returns true and stores it if it was independent.
    bool insert(std::vector<std::uint64_t> v) {
        reduce(v);
        auto it = std::find_if(v.begin(), v.end(), [](std::uint64_t x) { return x != 0; });
        if (it == v.end())
            return false;
        std::size_t col = static_cast<std::size_t>(it - v.begin());
        std::uint64_t inv = inv_mod(*it, p_);
        for (auto& x : v)
            x = x * inv % p_;
        rows_[col] = std::move(v);
        return true;
    }

    void reduce(std::vector<std::uint64_t>& v) const {
        for (const auto& [col, row] : rows_) {
            if (col >= v.size() || v[col] == 0)
                continue;
            std::uint64_t f = v[col];
            for (std::size_t k = col; k < row.size() && k < v.size(); ++k)
                v[k] = (v[k] + p_ - f * row[k] % p_) % p_;
        }
    }

    std::size_t rank() const { return rows_.size(); }
    const std::map<std::size_t, std::vector<std::uint64_t>>& rows() const { return rows_; }

private:
    std::uint64_t p_;
    std::map<std::size_t, std::vector<std::uint64_t>> rows_;
};

/// All exponent vectors in n variables of total degree exactly j.
inline std::vector<Exp> monomials_of_degree(std::size_t n, std::uint32_t j) {
    std::vector<Exp> out;
    Exp e(n, 0);
    std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t i, std::uint32_t left) {
        if (i + 1 == n) {
            e[i] = left;
            out.push_back(e);
            return;
        }
        for (std::uint32_t k = left + 1; k-- > 0;) {
            e[i] = k;
            rec(i + 1, left - k);
        }
    };
    if (n == 0) {
        if (j == 0)
            out.push_back({});
        return out;
    }
    rec(0, j);
    return out;
}

inline std::vector<Exp> monomials_up_to(std::size_t n, std::uint32_t j) {
    std::vector<Exp> out;
    for (std::uint32_t k = 0; k <= j; ++k)
        for (auto& e : monomials_of_degree(n, k))
            out.push_back(std::move(e));
    return out;
}

inline std::uint32_t degree(const Exp& e) {
    std::uint32_t s = 0;
    for (auto v : e)
        s += v;
    return s;
}

inline Exp add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = a[i] + b[i];
    return r;
}

/// dim_F (S/I)_j for j = 0..top, I generated by homogeneous polynomials in n
/// commuting variables; then summed into the filtered Hilbert function.
inline std::vector<long> filtered_dims_homogeneous(const std::vector<Poly>& gens, std::size_t n, std::uint32_t top,
                                                   std::uint64_t p) {
    std::vector<long> h;
    long acc = 0;
    for (std::uint32_t j = 0; j <= top; ++j) {
        auto mons = monomials_of_degree(n, j);
        std::map<Exp, std::size_t> col;
        for (std::size_t k = 0; k < mons.size(); ++k)
            col[mons[k]] = k;
        Echelon E(p);
        for (const auto& g : gens) {
            if (g.empty())
                continue;
            std::uint32_t dg = degree(g.begin()->first);
            if (dg > j)
                continue;
            for (const auto& m : monomials_of_degree(n, j - dg)) {
                std::vector<std::uint64_t> row(mons.size(), 0);
                for (const auto& [e, c] : g)
                    row[col.at(add(e, m))] = mod_p(c, p);
                E.insert(std::move(row));
            }
        }
        acc += static_cast<long>(mons.size() - E.rank());
        h.push_back(acc);
    }
    return h;
}

/// dim B_i / (B_i cap N_D) for the left ideal N of the d = 1 (deformed) Weyl
/// algebra over F_p with [eta, x] = c, using all products of degree <= D.
/// With c = 0 this is the commutative polynomial ring in two variables.
inline long weyl_filtered_quotient_dim(const std::vector<Poly>& gens, const mpq_class& c, std::uint64_t p,
                                       std::uint32_t i, std::uint32_t D) {
    // columns ordered by decreasing degree so low-degree rows come last
    auto mons = monomials_up_to(2, D);
    std::reverse(mons.begin(), mons.end());
    std::map<Exp, std::size_t> col;
    for (std::size_t k = 0; k < mons.size(); ++k)
        col[mons[k]] = k;
    Echelon E(p);
    for (const auto& g : gens) {
        if (g.empty())
            continue;
        std::uint32_t dg = 0;
        for (const auto& [e, v] : g)
            dg = std::max(dg, degree(e));
        if (dg > D)
            continue;
        for (const auto& m : monomials_up_to(2, D - dg)) {
            Poly prod = left_mul_monomial(m, g, 1, c);
            std::vector<std::uint64_t> row(mons.size(), 0);
            for (const auto& [e, v] : prod)
                row[col.at(e)] = mod_p(v, p);
            E.insert(std::move(row));
        }
    }
    long in_low = 0;
    for (const auto& [pc, row] : E.rows())
        if (degree(mons[pc]) <= i)
            ++in_low;
    long total = static_cast<long>(monomials_up_to(2, i).size());
    return total - in_low;
}

// ---------------------------------------------------------------------------
// Linear algebra over Z_(p): membership of a homogeneous f in the ideal of
// homogeneous generators, degree by degree.

inline long val(const mpq_class& q, unsigned long p) {
    if (q == 0)
        return 1L << 40;
    long v = 0;
    mpz_class n = q.get_num(), d = q.get_den();
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
        n /= p;
        ++v;
    }
    while (mpz_divisible_ui_p(d.get_mpz_t(), p)) {
        d /= p;
        --v;
    }
    return v;
}

inline bool local_member(const Poly& f, const std::vector<Poly>& gens, std::size_t n, unsigned long p) {
    if (f.empty())
        return true;
    std::uint32_t j = degree(f.begin()->first);
    auto mons = monomials_of_degree(n, j);
    std::map<Exp, std::size_t> col;
    for (std::size_t k = 0; k < mons.size(); ++k)
        col[mons[k]] = k;
    std::vector<std::vector<mpq_class>> rows;
    for (const auto& g : gens) {
        if (g.empty())
            continue;
        std::uint32_t dg = degree(g.begin()->first);
        if (dg > j)
            continue;
        for (const auto& m : monomials_of_degree(n, j - dg)) {
            std::vector<mpq_class> row(mons.size(), 0);
            for (const auto& [e, c] : g)
                row[col.at(add(e, m))] = c;
            rows.push_back(std::move(row));
        }
    }
    std::vector<mpq_class> target(mons.size(), 0);
    for (const auto& [e, c] : f)
        target[col.at(e)] = c;
    // valuation-pivoted elimination, column by column
    std::size_t next = 0;
    for (std::size_t c = 0; c < mons.size(); ++c) {
        std::size_t best = rows.size();
        for (std::size_t r = next; r < rows.size(); ++r)
            if (rows[r][c] != 0 && (best == rows.size() || val(rows[r][c], p) < val(rows[best][c], p)))
                best = r;
        if (best == rows.size()) {
            continue;
        }
        std::swap(rows[next], rows[best]);
        const auto& piv = rows[next];
        for (std::size_t r = next + 1; r < rows.size(); ++r) {
            if (rows[r][c] == 0)
                continue;
            mpq_class q = rows[r][c] / piv[c];
            for (std::size_t k = 0; k < mons.size(); ++k)
                rows[r][k] -= q * piv[k];
        }
        ++next;
    }
    // back-substitution in pivot order
    std::size_t r = 0;
    for (std::size_t c = 0; c < mons.size() && r < next; ++c) {
        if (rows[r][c] == 0)
            continue;
        if (target[c] != 0) {
            if (val(target[c], p) < val(rows[r][c], p))
                return false;
            mpq_class q = target[c] / rows[r][c];
            for (std::size_t k = 0; k < mons.size(); ++k)
                target[k] -= q * rows[r][k];
        }
        ++r;
    }
    return std::all_of(target.begin(), target.end(), [](const mpq_class& x) { return x == 0; });
}

} // namespace oracle

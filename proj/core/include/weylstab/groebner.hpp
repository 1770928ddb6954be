#pragma once

// Buchberger's algorithm for left submodules of free modules over
//   Ring[x_1..x_d, eta_1..eta_d, t_1..t_e]  with  eta_i x_i - x_i eta_i = c,
// i.e. a (possibly deformed) Weyl algebra with extra central variables. With
// c = 0 (or d = 0) this is an ordinary commutative polynomial ring. Ring is a
// field (reduced bases) or Z_(p) (strong bases).

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weylstab/errors.hpp"
#include "weylstab/rings.hpp"

namespace weylstab::gb {

using Exponents = std::vector<std::uint32_t>;

/// x^a e_comp in a free module.
struct Monomial {
    std::uint32_t comp = 0;
    Exponents exp;

    bool operator==(const Monomial&) const = default;
};

inline std::uint64_t total_degree(const Exponents& e) {
    std::uint64_t s = 0;
    for (auto v : e)
        s += v;
    return s;
}

/// Weight vectors compared in sequence, then degrevlex (or deglex); modules
/// use term-over-position unless position_over_term is set. Component 0 is the
/// largest position.
struct MonomialOrder {
    std::vector<std::vector<std::uint32_t>> weights;
    bool deglex = false;
    bool position_over_term = false;

    static MonomialOrder degrevlex() { return {}; }

    int compare_exponents(const Exponents& a, const Exponents& b) const {
        for (const auto& w : weights) {
            std::uint64_t wa = 0, wb = 0;
            for (std::size_t i = 0; i < w.size() && i < a.size(); ++i) {
                wa += static_cast<std::uint64_t>(w[i]) * a[i];
                wb += static_cast<std::uint64_t>(w[i]) * b[i];
            }
            if (wa != wb)
                return wa < wb ? -1 : 1;
        }
        std::uint64_t da = total_degree(a), db = total_degree(b);
        if (da != db)
            return da < db ? -1 : 1;
        if (deglex) {
            for (std::size_t i = 0; i < a.size(); ++i)
                if (a[i] != b[i])
                    return a[i] < b[i] ? -1 : 1;
        } else {
            for (std::size_t i = a.size(); i-- > 0;)
                if (a[i] != b[i])
                    return a[i] > b[i] ? -1 : 1;
        }
        return 0;
    }

    int compare(const Monomial& a, const Monomial& b) const {
        if (position_over_term && a.comp != b.comp)
            return a.comp > b.comp ? -1 : 1;
        int c = compare_exponents(a.exp, b.exp);
        if (c != 0)
            return c;
        if (a.comp != b.comp)
            return a.comp > b.comp ? -1 : 1;
        return 0;
    }
};

template <class Ring>
struct Term {
    Monomial mono;
    typename Ring::Elem coef;
};

/// Element of a free module; terms strictly decreasing in the owning order.
template <class Ring>
struct Vec {
    std::vector<Term<Ring>> terms;

    bool is_zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().mono; }
    const typename Ring::Elem& lc() const { return terms.front().coef; }
};

inline bool divides(const Exponents& a, const Exponents& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i])
            return false;
    return true;
}

inline Exponents lcm(const Exponents& a, const Exponents& b) {
    Exponents r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        r[i] = std::max(a[i], b[i]);
    return r;
}

inline Exponents quotient(const Exponents& num, const Exponents& den) {
    Exponents r(num.size());
    for (std::size_t i = 0; i < num.size(); ++i)
        r[i] = num[i] - den[i];
    return r;
}

/// Algebra, order and caps shared by every operation of one computation.
template <class Ring>
class Context {
public:
    using Elem = typename Ring::Elem;
    using V = Vec<Ring>;

    Context(Ring ring, std::size_t pairs, std::size_t extra, Elem commutator, MonomialOrder order, Limits limits = {})
        : ring_(std::move(ring)), pairs_(pairs), extra_(extra), commutator_(std::move(commutator)),
          order_(std::move(order)), limits_(limits) {}

    /// Commutative polynomial ring in n variables.
    static Context commutative(Ring ring, std::size_t nvars, MonomialOrder order, Limits limits = {}) {
        Elem z = ring.zero();
        return Context(std::move(ring), 0, nvars, z, std::move(order), limits);
    }

    const Ring& ring() const { return ring_; }
    const MonomialOrder& order() const { return order_; }
    const Limits& limits() const { return limits_; }
    std::size_t pairs() const { return pairs_; }
    std::size_t extra() const { return extra_; }
    std::size_t nvars() const { return 2 * pairs_ + extra_; }
    const Elem& commutator() const { return commutator_; }
    bool commutative() const { return pairs_ == 0 || ring_.is_zero(commutator_); }

    /// Sorts, merges equal monomials and drops zeros.
    V normalize(std::vector<Term<Ring>> terms) const {
        std::sort(terms.begin(), terms.end(),
                  [&](const Term<Ring>& a, const Term<Ring>& b) { return order_.compare(a.mono, b.mono) > 0; });
        V out;
        for (auto& t : terms) {
            if (!out.terms.empty() && out.terms.back().mono == t.mono) {
                out.terms.back().coef = ring_.add(out.terms.back().coef, t.coef);
                if (ring_.is_zero(out.terms.back().coef))
                    out.terms.pop_back();
            } else if (!ring_.is_zero(t.coef)) {
                out.terms.push_back(std::move(t));
            }
        }
        check_size(out);
        return out;
    }

    V monomial(const Exponents& e, std::uint32_t comp, Elem c) const {
        V v;
        if (!ring_.is_zero(c))
            v.terms.push_back({Monomial{comp, e}, std::move(c)});
        return v;
    }

    V add(const V& a, const V& b) const { return combine(a, ring_.one(), b, ring_.one()); }
    V sub(const V& a, const V& b) const { return combine(a, ring_.one(), b, ring_.neg(ring_.one())); }

    /// ca*a + cb*b, merging two sorted term lists.
    V combine(const V& a, const Elem& ca, const V& b, const Elem& cb) const {
        V out;
        out.terms.reserve(a.terms.size() + b.terms.size());
        std::size_t i = 0, j = 0;
        while (i < a.terms.size() || j < b.terms.size()) {
            int c;
            if (i == a.terms.size())
                c = -1;
            else if (j == b.terms.size())
                c = 1;
            else
                c = order_.compare(a.terms[i].mono, b.terms[j].mono);
            if (c > 0) {
                Elem v = ring_.mul(ca, a.terms[i].coef);
                if (!ring_.is_zero(v))
                    out.terms.push_back({a.terms[i].mono, std::move(v)});
                ++i;
            } else if (c < 0) {
                Elem v = ring_.mul(cb, b.terms[j].coef);
                if (!ring_.is_zero(v))
                    out.terms.push_back({b.terms[j].mono, std::move(v)});
                ++j;
            } else {
                Elem v = ring_.add(ring_.mul(ca, a.terms[i].coef), ring_.mul(cb, b.terms[j].coef));
                if (!ring_.is_zero(v))
                    out.terms.push_back({a.terms[i].mono, std::move(v)});
                ++i;
                ++j;
            }
        }
        check_size(out);
        return out;
    }

    V scale(const Elem& c, const V& a) const {
        V out;
        for (const auto& t : a.terms) {
            Elem v = ring_.mul(c, t.coef);
            if (!ring_.is_zero(v))
                out.terms.push_back({t.mono, std::move(v)});
        }
        return out;
    }

    /// (c * m) * a, where m is a monomial of the algebra (no component).
    V mul_monomial(const Exponents& m, const Elem& c, const V& a) const {
        if (commutative()) {
            V out;
            out.terms.reserve(a.terms.size());
            for (const auto& t : a.terms) {
                Elem v = ring_.mul(c, t.coef);
                if (ring_.is_zero(v))
                    continue;
                Monomial mono{t.mono.comp, t.mono.exp};
                for (std::size_t i = 0; i < m.size(); ++i)
                    mono.exp[i] = checked_add(mono.exp[i], m[i]);
                out.terms.push_back({std::move(mono), std::move(v)});
            }
            // monomial multiplication preserves the order
            return out;
        }
        std::vector<Term<Ring>> acc;
        for (const auto& t : a.terms)
            expand_weyl(m, ring_.mul(c, t.coef), t.mono, acc);
        return normalize(std::move(acc));
    }

    /// f * a for a scalar (single component) element f.
    V mul(const V& f, const V& a) const {
        V out;
        for (const auto& t : f.terms)
            out = add(out, mul_monomial(t.mono.exp, t.coef, a));
        return out;
    }

    /// Strong reduction of f by G: a leading term c*m is reducible by g when
    /// lm(g) divides m and lc(g) divides c. With full set, every term is reduced.
    V reduce(V f, const std::vector<V>& G, bool full = true) const {
        std::vector<Term<Ring>> done;
        std::size_t steps = 0;
        while (!f.is_zero()) {
            const auto& lt = f.terms.front();
            const V* divisor = nullptr;
            for (const auto& g : G) {
                if (g.is_zero() || g.lm().comp != lt.mono.comp)
                    continue;
                if (divides(g.lm().exp, lt.mono.exp) && ring_.divides(g.lc(), lt.coef)) {
                    divisor = &g;
                    break;
                }
            }
            if (divisor == nullptr) {
                if (!full)
                    break;
                done.push_back(std::move(f.terms.front()));
                f.terms.erase(f.terms.begin());
                continue;
            }
            if (++steps > limits_.max_gb_steps * 64)
                fail(ErrorCode::ResourceExceeded, "reduction exceeded step cap");
            Elem q = ring_.quotient(lt.coef, divisor->lc());
            Exponents m = quotient(lt.mono.exp, divisor->lm().exp);
            f = combine(f, ring_.one(), mul_monomial(m, q, *divisor), ring_.neg(ring_.one()));
        }
        if (done.empty())
            return f;
        for (auto& t : f.terms)
            done.push_back(std::move(t));
        V out;
        out.terms = std::move(done);
        return out;
    }

    V s_poly(const V& f, const V& g) const {
        Exponents l = lcm(f.lm().exp, g.lm().exp);
        auto [s, t] = ring_.cofactors(f.lc(), g.lc());
        V a = mul_monomial(quotient(l, f.lm().exp), s, f);
        V b = mul_monomial(quotient(l, g.lm().exp), t, g);
        return sub(a, b);
    }

    V canonical(const V& f) const {
        if (f.is_zero())
            return f;
        return scale(ring_.normalizer(f.lc()), f);
    }

    /// Reduced (field) or minimal tail-reduced strong (Z_(p)) Gröbner basis,
    /// sorted by increasing leading monomial.
    std::vector<V> groebner(const std::vector<V>& gens) const {
        std::vector<V> G;
        struct Pair {
            std::size_t i, j;
            Monomial lcm;
        };
        std::vector<Pair> pairs;
        std::size_t steps = 0;

        auto add_element = [&](V h) {
            h = canonical(h);
            if (total_degree(h.lm().exp) > limits_.max_degree)
                fail(ErrorCode::ResourceExceeded, "Gröbner basis element exceeds degree cap " +
                                                      std::to_string(limits_.max_degree));
            std::size_t k = G.size();
            for (std::size_t i = 0; i < k; ++i) {
                if (G[i].is_zero() || G[i].lm().comp != h.lm().comp)
                    continue;
                pairs.push_back({i, k, Monomial{h.lm().comp, lcm(G[i].lm().exp, h.lm().exp)}});
            }
            G.push_back(std::move(h));
        };

        for (const auto& g : gens) {
            V r = reduce(g, G, false);
            if (!r.is_zero())
                add_element(std::move(r));
        }
        while (!pairs.empty()) {
            auto it = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
                int c = order_.compare(a.lcm, b.lcm);
                if (c != 0)
                    return c < 0;
                return std::make_pair(a.j, a.i) < std::make_pair(b.j, b.i);
            });
            Pair pr = *it;
            pairs.erase(it);
            if (skip_pair(pr.i, pr.j, pr.lcm, G, pairs))
                continue;
            if (++steps > limits_.max_gb_steps)
                fail(ErrorCode::ResourceExceeded, "Gröbner basis exceeded " + std::to_string(limits_.max_gb_steps) +
                                                      " S-pair steps");
            V r = reduce(s_poly(G[pr.i], G[pr.j]), G, false);
            if (!r.is_zero())
                add_element(std::move(r));
        }
        return interreduce(std::move(G));
    }

    /// Drops elements whose leading term is divisible by another's, then
    /// tail-reduces and sorts by leading monomial.
    std::vector<V> interreduce(std::vector<V> G) const {
        std::vector<V> minimal;
        for (std::size_t i = 0; i < G.size(); ++i) {
            if (G[i].is_zero())
                continue;
            bool redundant = false;
            for (std::size_t j = 0; j < G.size() && !redundant; ++j) {
                if (i == j || G[j].is_zero() || G[j].lm().comp != G[i].lm().comp)
                    continue;
                if (!divides(G[j].lm().exp, G[i].lm().exp) || !ring_.divides(G[j].lc(), G[i].lc()))
                    continue;
                bool same = G[j].lm().exp == G[i].lm().exp && ring_.divides(G[i].lc(), G[j].lc());
                // among identical leading terms keep the first
                redundant = !same || j < i;
            }
            if (!redundant)
                minimal.push_back(std::move(G[i]));
        }
        for (std::size_t i = 0; i < minimal.size(); ++i) {
            V head;
            head.terms.push_back(minimal[i].terms.front());
            V tail;
            tail.terms.assign(minimal[i].terms.begin() + 1, minimal[i].terms.end());
            std::vector<V> others;
            for (std::size_t j = 0; j < minimal.size(); ++j)
                if (j != i)
                    others.push_back(minimal[j]);
            minimal[i] = canonical(add(head, reduce(std::move(tail), others, true)));
        }
        std::sort(minimal.begin(), minimal.end(), [&](const V& a, const V& b) {
            int c = order_.compare(a.lm(), b.lm());
            if (c != 0)
                return c < 0;
            return compare_vec(a, b) < 0;
        });
        return minimal;
    }

    /// Total order on whole elements (leading terms first), for canonical output.
    int compare_vec(const V& a, const V& b) const {
        std::size_t n = std::min(a.terms.size(), b.terms.size());
        for (std::size_t i = 0; i < n; ++i) {
            int c = order_.compare(a.terms[i].mono, b.terms[i].mono);
            if (c != 0)
                return c;
            Rational ra = ring_.to_rational(a.terms[i].coef), rb = ring_.to_rational(b.terms[i].coef);
            if (ra != rb)
                return ra < rb ? -1 : 1;
        }
        if (a.terms.size() != b.terms.size())
            return a.terms.size() < b.terms.size() ? -1 : 1;
        return 0;
    }

    bool equal(const V& a, const V& b) const { return compare_vec(a, b) == 0 && a.terms.size() == b.terms.size(); }

    bool is_member(const V& f, const std::vector<V>& basis) const { return reduce(f, basis, true).is_zero(); }

private:
    static std::uint32_t checked_add(std::uint32_t a, std::uint32_t b) {
        std::uint64_t s = static_cast<std::uint64_t>(a) + b;
        if (s >= (1ULL << 31))
            fail(ErrorCode::ResourceExceeded, "exponent exceeds 2^31");
        return static_cast<std::uint32_t>(s);
    }

    void check_size(const V& v) const {
        if (v.terms.size() > limits_.max_terms)
            fail(ErrorCode::ResourceExceeded, "term count exceeds cap " + std::to_string(limits_.max_terms));
    }

    // (c x^a eta^b t^e) * (x^alpha eta^beta t^f) via
    //   eta^b x^alpha = sum_k C(b,k) C(alpha,k) k! c^k x^(alpha-k) eta^(b-k)   per pair.
    void expand_weyl(const Exponents& m, const Elem& c, const Monomial& target, std::vector<Term<Ring>>& acc) const {
        if (ring_.is_zero(c))
            return;
        const std::size_t d = pairs_;
        std::vector<std::uint32_t> kmax(d), k(d, 0);
        for (std::size_t i = 0; i < d; ++i)
            kmax[i] = std::min(m[d + i], target.exp[i]);
        for (;;) {
            Integer coef = 1;
            std::uint32_t ksum = 0;
            Monomial mono{target.comp, Exponents(nvars())};
            for (std::size_t i = 0; i < d; ++i) {
                Integer b1, b2, f;
                mpz_bin_uiui(b1.get_mpz_t(), m[d + i], k[i]);
                mpz_bin_uiui(b2.get_mpz_t(), target.exp[i], k[i]);
                mpz_fac_ui(f.get_mpz_t(), k[i]);
                coef *= b1 * b2 * f;
                ksum += k[i];
                mono.exp[i] = checked_add(m[i], target.exp[i] - k[i]);
                mono.exp[d + i] = checked_add(m[d + i] - k[i], target.exp[d + i]);
            }
            for (std::size_t i = 2 * d; i < nvars(); ++i)
                mono.exp[i] = checked_add(m[i], target.exp[i]);
            Elem v = ring_.mul(c, ring_.from_integer(coef));
            for (std::uint32_t s = 0; s < ksum; ++s)
                v = ring_.mul(v, commutator_);
            if (!ring_.is_zero(v))
                acc.push_back({std::move(mono), std::move(v)});
            std::size_t i = 0;
            while (i < d && k[i] == kmax[i]) {
                k[i] = 0;
                ++i;
            }
            if (i == d)
                break;
            ++k[i];
        }
    }

    // Product criterion (commutative, scalar elements) and Buchberger's chain
    // criterion; both sound over fields, the latter also in the Weyl case.
    template <class Pairs>
    bool skip_pair(std::size_t i, std::size_t j, const Monomial& l, const std::vector<V>& G, const Pairs& pending) const {
        if constexpr (!Ring::is_field) {
            return false;
        } else {
            if (commutative() && is_scalar(G[i]) && is_scalar(G[j]) &&
                l.exp == lcm_product(G[i].lm().exp, G[j].lm().exp))
                return true;
            for (std::size_t k = 0; k < G.size(); ++k) {
                if (k == i || k == j || G[k].is_zero() || G[k].lm().comp != l.comp)
                    continue;
                if (!divides(G[k].lm().exp, l.exp))
                    continue;
                bool ik_pending = false, jk_pending = false;
                for (const auto& p : pending) {
                    if ((p.i == std::min(i, k) && p.j == std::max(i, k)))
                        ik_pending = true;
                    if ((p.i == std::min(j, k) && p.j == std::max(j, k)))
                        jk_pending = true;
                }
                if (!ik_pending && !jk_pending && G[k].lm().exp != l.exp)
                    return true;
            }
            return false;
        }
    }

    static Exponents lcm_product(const Exponents& a, const Exponents& b) {
        Exponents r(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] != 0 && b[i] != 0)
                return {};
            r[i] = a[i] + b[i];
        }
        return r;
    }

    static bool is_scalar(const V& v) {
        for (const auto& t : v.terms)
            if (t.mono.comp != 0)
                return false;
        return true;
    }

    Ring ring_;
    std::size_t pairs_;
    std::size_t extra_;
    Elem commutator_;
    MonomialOrder order_;
    Limits limits_;
};

} // namespace weylstab::gb

#pragma once

// Coefficient domains for the Gröbner engine. Each exposes the same small
// surface; `divides`, `cofactors` and `normalizer` are what distinguish a
// field from the valuation ring Z_(p).

#include <cstdint>
#include <string>
#include <utility>

#include "weylstab/coeff.hpp"

namespace weylstab::gb {

/// F_p with p < 2^31.
struct PrimeField {
    using Elem = std::uint64_t;
    static constexpr bool is_field = true;

    std::uint32_t p;

    Elem zero() const { return 0; }
    Elem one() const { return 1 % p; }
    bool is_zero(Elem a) const { return a == 0; }
    Elem add(Elem a, Elem b) const { return (a + b) % p; }
    Elem sub(Elem a, Elem b) const { return (a + p - b) % p; }
    Elem mul(Elem a, Elem b) const { return a * b % p; }
    Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
    Elem inv(Elem a) const { return ResidueElement(static_cast<std::int64_t>(a), p).inv().value(); }
    Elem from_integer(const Integer& n) const {
        Integer r = n % p;
        if (sgn(r) < 0)
            r += p;
        return r.get_ui();
    }
    Elem from_rational(const Rational& q) const { return mul(from_integer(q.get_num()), inv(from_integer(q.get_den()))); }
    Rational to_rational(Elem a) const { return Rational(static_cast<unsigned long>(a)); }
    bool divides(Elem a, Elem) const { return a != 0; }
    Elem quotient(Elem b, Elem a) const { return mul(b, inv(a)); }
    /// s, t with s*a == t*b generating the lcm of the leading coefficients.
    std::pair<Elem, Elem> cofactors(Elem a, Elem b) const { return {inv(a), inv(b)}; }
    Elem normalizer(Elem a) const { return inv(a); }
    bool equal(Elem a, Elem b) const { return a == b; }
    std::string str(Elem a) const { return std::to_string(a); }
};

/// The rationals.
struct RationalField {
    using Elem = Rational;
    static constexpr bool is_field = true;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem inv(const Elem& a) const {
        if (sgn(a) == 0)
            fail(ErrorCode::DivisionByZero, "inverse of zero");
        return 1 / a;
    }
    Elem from_integer(const Integer& n) const { return Rational(n); }
    Elem from_rational(const Rational& q) const { return q; }
    Rational to_rational(const Elem& a) const { return a; }
    bool divides(const Elem& a, const Elem&) const { return sgn(a) != 0; }
    Elem quotient(const Elem& b, const Elem& a) const { return b / a; }
    std::pair<Elem, Elem> cofactors(const Elem& a, const Elem& b) const { return {1 / a, 1 / b}; }
    Elem normalizer(const Elem& a) const { return 1 / a; }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }
};

/// Z localised at p: rationals whose denominators are prime to p. Every
/// nonzero element is a unit times p^v, so a divides b iff v(a) <= v(b).
struct LocalRing {
    using Elem = Rational;
    static constexpr bool is_field = false;

    std::uint32_t p;

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    bool is_zero(const Elem& a) const { return sgn(a) == 0; }
    Elem add(const Elem& a, const Elem& b) const { return a + b; }
    Elem sub(const Elem& a, const Elem& b) const { return a - b; }
    Elem mul(const Elem& a, const Elem& b) const { return a * b; }
    Elem neg(const Elem& a) const { return -a; }
    Elem from_integer(const Integer& n) const { return Rational(n); }
    Elem from_rational(const Rational& q) const {
        if (sgn(q) != 0 && p_valuation(q, p) < 0)
            fail(ErrorCode::NotIntegral, "coefficient " + q.get_str() + " is not integral at p");
        return q;
    }
    Rational to_rational(const Elem& a) const { return a; }
    long valuation(const Elem& a) const { return p_valuation(a.get_num(), p); }
    bool divides(const Elem& a, const Elem& b) const {
        if (sgn(a) == 0)
            return false;
        return sgn(b) == 0 || valuation(a) <= valuation(b);
    }
    Elem quotient(const Elem& b, const Elem& a) const { return b / a; }
    std::pair<Elem, Elem> cofactors(const Elem& a, const Elem& b) const {
        long v = std::max(valuation(a), valuation(b));
        Rational l(power_of(p, static_cast<unsigned long>(v)));
        return {l / a, l / b};
    }
    /// Multiplier turning a into p^v(a).
    Elem normalizer(const Elem& a) const {
        Rational l(power_of(p, static_cast<unsigned long>(valuation(a))));
        return l / a;
    }
    bool equal(const Elem& a, const Elem& b) const { return a == b; }
    std::string str(const Elem& a) const { return a.get_str(); }
};

} // namespace weylstab::gb

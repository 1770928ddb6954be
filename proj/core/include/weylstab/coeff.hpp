#pragma once

#include <gmpxx.h>

#include <climits>
#include <cstdint>
#include <string>

#include "weylstab/errors.hpp"

namespace weylstab {

using Integer = mpz_class;
using Rational = mpq_class;

/// Valuation of zero.
inline constexpr long kInfiniteValuation = LONG_MAX;

bool is_prime(std::uint64_t n);

/// Exponent of p in a nonzero integer; kInfiniteValuation for zero.
long p_valuation(const Integer& n, std::uint32_t p);

/// Exponent of p in a rational (numerator exponent minus denominator exponent).
long p_valuation(const Rational& q, std::uint32_t p);

Integer power_of(std::uint32_t p, unsigned long k);

/// An element of the residue field F_p.
class ResidueElement {
public:
    ResidueElement(std::int64_t value, std::uint32_t prime);

    std::uint32_t value() const noexcept { return value_; }
    std::uint32_t prime() const noexcept { return prime_; }
    bool is_zero() const noexcept { return value_ == 0; }

    ResidueElement operator+(const ResidueElement& other) const;
    ResidueElement operator-(const ResidueElement& other) const;
    ResidueElement operator*(const ResidueElement& other) const;
    ResidueElement operator-() const;
    ResidueElement inv() const;

    bool operator==(const ResidueElement& other) const = default;

private:
    void check_same(const ResidueElement& other) const;

    std::uint32_t value_;
    std::uint32_t prime_;
};

/// A rational number together with a fixed prime p and its p-adic valuation.
///
/// Stands in for elements of the local field: integral elements (valuation >= 0)
/// form the localisation Z_(p), which plays the role of the valuation ring.
/// The (numerator, denominator) constructor builds integral elements only and
/// rejects denominators divisible by p; non-integral values are built with
/// from_rational or p_power.
class LocalRational {
public:
    explicit LocalRational(std::uint32_t prime);
    LocalRational(const Integer& numerator, const Integer& denominator, std::uint32_t prime);
    LocalRational(long value, std::uint32_t prime) : LocalRational(Integer(value), Integer(1), prime) {}

    static LocalRational from_rational(const Rational& value, std::uint32_t prime);
    /// p^k for any integer k.
    static LocalRational p_power(long k, std::uint32_t prime);

    const Rational& value() const noexcept { return value_; }
    Integer numerator() const { return value_.get_num(); }
    Integer denominator() const { return value_.get_den(); }
    std::uint32_t prime() const noexcept { return prime_; }

    bool is_zero() const { return sgn(value_) == 0; }
    bool is_integral() const { return valuation_ >= 0; }
    long valuation() const noexcept { return valuation_; }
    /// value / p^valuation; a p-adic unit. Zero maps to zero.
    LocalRational unit_part() const;

    ResidueElement residue() const;

    LocalRational operator+(const LocalRational& other) const;
    LocalRational operator-(const LocalRational& other) const;
    LocalRational operator*(const LocalRational& other) const;
    LocalRational operator-() const;
    /// Inverse in the field.
    LocalRational inv() const;
    /// Inverse that must stay integral; raises NotIntegral otherwise.
    LocalRational inv_integral() const;

    bool operator==(const LocalRational& other) const { return prime_ == other.prime_ && value_ == other.value_; }

    /// `a/b` or `p^k*a/b`; the form accepted back by the expression grammar.
    std::string to_string() const;

private:
    LocalRational(Rational value, std::uint32_t prime, long valuation)
        : value_(std::move(value)), prime_(prime), valuation_(valuation) {}
    void check_same(const LocalRational& other) const;

    Rational value_;
    std::uint32_t prime_;
    long valuation_;
};

} // namespace weylstab

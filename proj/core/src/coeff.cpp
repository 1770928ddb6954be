#include "weylstab/coeff.hpp"

namespace weylstab {

std::string_view to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::DivisionByZero: return "DivisionByZero";
    case ErrorCode::NegativeValuation: return "NegativeValuation";
    case ErrorCode::NotIntegral: return "NotIntegral";
    case ErrorCode::AlgebraMismatch: return "AlgebraMismatch";
    case ErrorCode::ZeroElement: return "ZeroElement";
    case ErrorCode::ResourceExceeded: return "ResourceExceeded";
    case ErrorCode::UnsupportedRadical: return "UnsupportedRadical";
    case ErrorCode::DegenerateLattice: return "DegenerateLattice";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NotHolonomicAtSomeLevel: return "NotHolonomicAtSomeLevel";
    case ErrorCode::AllLevelsDegenerate: return "AllLevelsDegenerate";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVariable: return "UnknownVariable";
    }
    return "Unknown";
}

bool is_prime(std::uint64_t n) {
    if (n < 2)
        return false;
    for (std::uint64_t q = 2; q * q <= n; ++q)
        if (n % q == 0)
            return false;
    return true;
}

long p_valuation(const Integer& n, std::uint32_t p) {
    if (sgn(n) == 0)
        return kInfiniteValuation;
    Integer m = abs(n);
    long v = 0;
    Integer q, r;
    for (;;) {
        mpz_fdiv_qr_ui(q.get_mpz_t(), r.get_mpz_t(), m.get_mpz_t(), p);
        if (sgn(r) != 0)
            return v;
        m = q;
        ++v;
    }
}

long p_valuation(const Rational& q, std::uint32_t p) {
    if (sgn(q) == 0)
        return kInfiniteValuation;
    return p_valuation(q.get_num(), p) - p_valuation(q.get_den(), p);
}

Integer power_of(std::uint32_t p, unsigned long k) {
    Integer r;
    mpz_ui_pow_ui(r.get_mpz_t(), p, k);
    return r;
}

// ---------------------------------------------------------------------------

ResidueElement::ResidueElement(std::int64_t value, std::uint32_t prime) : prime_(prime) {
    if (prime < 2)
        fail(ErrorCode::InvalidArgument, "residue field needs a prime >= 2");
    std::int64_t r = value % static_cast<std::int64_t>(prime);
    if (r < 0)
        r += prime;
    value_ = static_cast<std::uint32_t>(r);
}

void ResidueElement::check_same(const ResidueElement& other) const {
    if (prime_ != other.prime_)
        fail(ErrorCode::AlgebraMismatch, "residues modulo different primes");
}

ResidueElement ResidueElement::operator+(const ResidueElement& other) const {
    check_same(other);
    return {static_cast<std::int64_t>(value_) + other.value_, prime_};
}

ResidueElement ResidueElement::operator-(const ResidueElement& other) const {
    check_same(other);
    return {static_cast<std::int64_t>(value_) - other.value_, prime_};
}

ResidueElement ResidueElement::operator*(const ResidueElement& other) const {
    check_same(other);
    return {static_cast<std::int64_t>(static_cast<std::uint64_t>(value_) * other.value_ % prime_), prime_};
}

ResidueElement ResidueElement::operator-() const { return {-static_cast<std::int64_t>(value_), prime_}; }

ResidueElement ResidueElement::inv() const {
    if (value_ == 0)
        fail(ErrorCode::DivisionByZero, "inverse of zero in F_p");
    // extended Euclid
    std::int64_t a = value_, b = prime_, x0 = 1, x1 = 0;
    while (b != 0) {
        std::int64_t q = a / b;
        std::int64_t t = a - q * b;
        a = b;
        b = t;
        t = x0 - q * x1;
        x0 = x1;
        x1 = t;
    }
    return {x0, prime_};
}

// ---------------------------------------------------------------------------

LocalRational::LocalRational(std::uint32_t prime) : value_(0), prime_(prime), valuation_(kInfiniteValuation) {
    if (!is_prime(prime))
        fail(ErrorCode::InvalidArgument, "p = " + std::to_string(prime) + " is not prime");
}

LocalRational::LocalRational(const Integer& numerator, const Integer& denominator, std::uint32_t prime)
    : prime_(prime) {
    if (!is_prime(prime))
        fail(ErrorCode::InvalidArgument, "p = " + std::to_string(prime) + " is not prime");
    if (sgn(denominator) == 0)
        fail(ErrorCode::DivisionByZero, "zero denominator");
    value_ = Rational(numerator, denominator);
    value_.canonicalize();
    if (sgn(value_) != 0 && p_valuation(value_.get_den(), prime) > 0)
        fail(ErrorCode::NotIntegral, "denominator of " + value_.get_str() + " is divisible by p = " + std::to_string(prime));
    valuation_ = p_valuation(value_.get_num(), prime);
}

LocalRational LocalRational::from_rational(const Rational& value, std::uint32_t prime) {
    if (!is_prime(prime))
        fail(ErrorCode::InvalidArgument, "p = " + std::to_string(prime) + " is not prime");
    Rational v = value;
    v.canonicalize();
    return LocalRational(v, prime, p_valuation(v, prime));
}

LocalRational LocalRational::p_power(long k, std::uint32_t prime) {
    Rational v = k >= 0 ? Rational(power_of(prime, static_cast<unsigned long>(k)))
                        : Rational(Integer(1), power_of(prime, static_cast<unsigned long>(-k)));
    return from_rational(v, prime);
}

LocalRational LocalRational::unit_part() const {
    if (is_zero())
        return *this;
    Rational u = value_;
    if (valuation_ > 0)
        u /= power_of(prime_, static_cast<unsigned long>(valuation_));
    else if (valuation_ < 0)
        u *= power_of(prime_, static_cast<unsigned long>(-valuation_));
    return LocalRational(u, prime_, 0);
}

ResidueElement LocalRational::residue() const {
    if (valuation_ < 0)
        fail(ErrorCode::NegativeValuation, "residue of " + to_string() + " with negative valuation");
    Integer num = value_.get_num() % prime_;
    Integer den = value_.get_den() % prime_;
    ResidueElement n(num.get_si(), prime_);
    ResidueElement d(den.get_si(), prime_);
    return n * d.inv();
}

void LocalRational::check_same(const LocalRational& other) const {
    if (prime_ != other.prime_)
        fail(ErrorCode::AlgebraMismatch, "local rationals for different primes");
}

LocalRational LocalRational::operator+(const LocalRational& other) const {
    check_same(other);
    return from_rational(value_ + other.value_, prime_);
}

LocalRational LocalRational::operator-(const LocalRational& other) const {
    check_same(other);
    return from_rational(value_ - other.value_, prime_);
}

LocalRational LocalRational::operator*(const LocalRational& other) const {
    check_same(other);
    Rational v = value_ * other.value_;
    long val = (is_zero() || other.is_zero()) ? kInfiniteValuation : valuation_ + other.valuation_;
    return LocalRational(v, prime_, val);
}

LocalRational LocalRational::operator-() const { return LocalRational(Rational(-value_), prime_, valuation_); }

LocalRational LocalRational::inv() const {
    if (is_zero())
        fail(ErrorCode::DivisionByZero, "inverse of zero");
    return LocalRational(Rational(1 / value_), prime_, -valuation_);
}

LocalRational LocalRational::inv_integral() const {
    LocalRational r = inv();
    if (!r.is_integral())
        fail(ErrorCode::NotIntegral, "inverse of " + to_string() + " is not integral");
    return r;
}

std::string LocalRational::to_string() const {
    if (is_zero() || valuation_ < 2)
        return value_.get_str();
    Rational u = abs(unit_part().value_);
    return std::string(sgn(value_) < 0 ? "-" : "") + "p^" + std::to_string(valuation_) + "*" + u.get_str();
}

} // namespace weylstab

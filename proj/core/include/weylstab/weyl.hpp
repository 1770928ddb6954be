#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "weylstab/coeff.hpp"
#include "weylstab/groebner.hpp"

namespace weylstab {

enum class CoefficientKind { LocalField, ResidueField };

/// The level-n deformed Weyl algebra A_{d,n}: generators x_i and eta_i with
/// eta_i x_j - x_j eta_i = p^n delta_ij. At level 0, eta_i is the derivation d_i.
struct AlgebraDescriptor {
    std::uint32_t d = 1;
    std::uint32_t level = 0;
    std::uint32_t prime = 2;
    CoefficientKind coefficients = CoefficientKind::LocalField;

    bool operator==(const AlgebraDescriptor&) const = default;

    /// Throws InvalidArgument unless d >= 1 and prime is prime.
    void validate() const;
    std::size_t nvars() const { return 2 * static_cast<std::size_t>(d); }
    /// p^level in the coefficient domain (zero in F_p for level > 0).
    Rational commutator() const;
    AlgebraDescriptor with_level(std::uint32_t n) const;
    AlgebraDescriptor residue() const;
};

/// Exponent vector (alpha_1..alpha_d, beta_1..beta_d) of x^alpha eta^beta.
using ExponentPair = gb::Exponents;

/// Degree of the zero element.
inline constexpr long kMinusInfinity = -1;

/// Element in standard form sum c x^alpha eta^beta, x's left of eta's, terms
/// in decreasing degrevlex order, no zero coefficients. Over the residue
/// field coefficients are stored as integers in [0, p).
class WeylElement {
public:
    using TermList = std::vector<std::pair<ExponentPair, Rational>>;

    explicit WeylElement(AlgebraDescriptor algebra);

    static WeylElement constant(const AlgebraDescriptor& algebra, const Rational& c);
    static WeylElement x(const AlgebraDescriptor& algebra, std::uint32_t i);
    /// eta_i (the derivation at level 0).
    static WeylElement eta(const AlgebraDescriptor& algebra, std::uint32_t i);
    static WeylElement from_terms(const AlgebraDescriptor& algebra, TermList terms);

    const AlgebraDescriptor& algebra() const { return algebra_; }
    const TermList& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    Rational coefficient(const ExponentPair& e) const;
    LocalRational local_coefficient(const ExponentPair& e) const;
    ResidueElement residue_coefficient(const ExponentPair& e) const;

    /// Minimum coefficient valuation; kInfiniteValuation for zero.
    long min_valuation() const;
    bool is_integral() const { return min_valuation() >= 0; }

    WeylElement operator+(const WeylElement& other) const;
    WeylElement operator-(const WeylElement& other) const;
    WeylElement operator-() const;
    /// Normal form of the product, using
    ///   eta^b x^a = sum_k C(b,k) C(a,k) k! p^(nk) x^(a-k) eta^(b-k).
    WeylElement operator*(const WeylElement& other) const;
    WeylElement scaled(const Rational& c) const;
    WeylElement pow(unsigned k) const;

    bool operator==(const WeylElement& other) const = default;

    /// Reduction modulo p of an integral element, into the residue algebra.
    WeylElement reduce_mod_p() const;

    /// `x1^2*d1^2 + 4*x1*d1 + 2`; reparses to an equal element.
    std::string to_string() const;

private:
    void check_same(const WeylElement& other) const;

    AlgebraDescriptor algebra_;
    TermList terms_;
};

/// max |alpha|+|beta| over the terms; kMinusInfinity for zero.
long bernstein_degree(const WeylElement& a);
/// max |beta| over the terms; kMinusInfinity for zero.
long order_degree(const WeylElement& a);

enum class Grading { Bernstein, Order };

/// Weights (1,..,1) for the Bernstein filtration, (0..0,1..1) for the order one.
std::vector<std::uint32_t> grading_weights(Grading g, std::uint32_t d);

/// Homogeneous commutative polynomial in X_1..X_d, Y_1..Y_d.
struct GradedSymbol {
    AlgebraDescriptor algebra;
    Grading grading = Grading::Bernstein;
    WeylElement::TermList terms;

    bool operator==(const GradedSymbol&) const = default;
    std::string to_string() const;
};

/// Top part of a for the grading, with x^alpha eta^beta read as X^alpha Y^beta.
/// Throws ZeroElement for a = 0.
GradedSymbol symbol(const WeylElement& a, Grading grading);

GradedSymbol symbol_product(const GradedSymbol& a, const GradedSymbol& b);

struct Rebased {
    WeylElement element;
    /// The element was multiplied by p^applied_power after substitution.
    long applied_power = 0;
};

/// Moves a level-n0 element to level n >= n0 (eta_{n0} = p^-(n-n0) eta_n) and
/// rescales by the p-power that makes it integral and primitive.
Rebased rebase(const WeylElement& a, std::uint32_t to_level);

/// Same substitution applied to a vector with one common rescaling.
std::pair<std::vector<WeylElement>, long> rebase_vector(const std::vector<WeylElement>& v, std::uint32_t to_level);

/// Multiplies a vector by the p-power making it integral with some unit coefficient.
std::pair<std::vector<WeylElement>, long> make_primitive(const std::vector<WeylElement>& v);

/// Variable names used by the printer and parser.
std::string variable_name(std::size_t index, std::uint32_t d, bool commutative_names = false);

} // namespace weylstab

#pragma once

// Filtered Hilbert functions h(i) = dim F_i(S/I) and Hilbert polynomials in
// the binomial basis p(i) = sum_j a_j C(i, j).

#include <vector>

#include "weylstab/coeff.hpp"
#include "weylstab/cpoly.hpp"

namespace weylstab::hilbert {

using MonomialIdeal = std::vector<gb::Exponents>;

struct HilbertData {
    /// a_0..a_e; empty for the zero quotient.
    std::vector<Integer> binomial_coeffs;
    /// e; -1 stands for the degree of the zero polynomial.
    long degree = -1;
    Integer multiplicity = 0;
    long stability_index = 0;

    bool is_zero() const { return binomial_coeffs.empty(); }
    bool operator==(const HilbertData&) const = default;
};

/// Minimal generators of the monomial ideal.
MonomialIdeal minimalize(MonomialIdeal M);

/// Numerator N(t) of the graded Hilbert series N(t)/(1-t)^m of S/M, low degree first.
std::vector<Integer> series_numerator(const MonomialIdeal& M, std::size_t nvars);

Integer hilbert_function(const MonomialIdeal& M, std::size_t nvars, long i);
HilbertData hilbert_polynomial(const MonomialIdeal& M, std::size_t nvars);

/// sum_j a_j C(i, j), valid for any integer i.
Integer evaluate(const HilbertData& h, long i);

/// Leading monomials of a Gröbner basis for a degree-compatible order.
MonomialIdeal leading_ideal(const std::vector<cpoly::Poly>& basis);

/// Ideal versions; the generators need not form a Gröbner basis.
Integer hilbert_function(const cpoly::FieldContext& ctx, const std::vector<cpoly::Poly>& ideal, long i);
HilbertData hilbert_polynomial(const cpoly::FieldContext& ctx, const std::vector<cpoly::Poly>& ideal);

struct DimMult {
    long dimension = -1;
    Integer multiplicity = 0;
};

/// Degree and top coefficient, with the degree cross-checked against
/// cpoly::krull_dim (DimensionMismatch on disagreement).
DimMult dim_and_mult(const cpoly::FieldContext& ctx, const std::vector<cpoly::Poly>& ideal);

} // namespace weylstab::hilbert

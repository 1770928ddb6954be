#pragma once

// Lattices, slices and characteristic ideals of finitely presented modules
// over the deformed Weyl algebras.

#include <optional>
#include <string>
#include <vector>

#include "weylstab/cpoly.hpp"
#include "weylstab/hilbert.hpp"
#include "weylstab/weyl.hpp"

namespace weylstab::charvar {

/// A^r / (left span of the relation vectors). Coefficients are local-field
/// rationals; relations at algebra.level must be integral.
struct ModulePresentation {
    AlgebraDescriptor algebra;
    std::size_t rank = 1;
    std::vector<std::vector<WeylElement>> relations;

    /// Throws InvalidArgument, AlgebraMismatch or NotIntegral.
    void validate() const;
};

using SliceRing = gb::PrimeField;
using SliceVec = gb::Vec<SliceRing>;
using SliceContext = gb::Context<SliceRing>;

/// Reduction mod p of the saturated level-n lattice: a module over A_d(F_p)
/// when n = 0 and over F_p[X, Y] otherwise.
struct SliceModule {
    std::uint32_t level = 0;
    AlgebraDescriptor algebra;
    std::size_t rank = 1;
    std::vector<std::vector<WeylElement>> relations;
};

struct WeylBasis {
    Grading grading = Grading::Bernstein;
    std::size_t rank = 1;
    std::vector<SliceVec> basis;
    /// Top symbols of the basis elements, over F_p[X_1..X_d, Y_1..Y_d].
    std::vector<cpoly::Poly> initial;

    /// The quotient module is zero.
    bool is_zero_module() const;
};

struct CharData {
    std::uint32_t level = 0;
    std::uint32_t d = 1;
    /// Reduced degrevlex basis of the characteristic ideal (or of the
    /// annihilator when radical_verified is false).
    std::vector<cpoly::Poly> ideal;
    std::vector<std::string> ideal_strings;
    std::vector<std::string> annihilator_strings;
    hilbert::HilbertData hilbert;
    long dimension = -1;
    Integer multiplicity = 0;
    bool holonomic = false;
    bool radical_verified = true;

    /// Equality of everything but the level.
    bool same_data(const CharData& other) const;
};

SliceContext slice_context(const AlgebraDescriptor& residue_algebra, Grading grading, const Limits& limits);
cpoly::FieldContext symbol_context(const AlgebraDescriptor& algebra, const Limits& limits);

/// Relation submodule closed under division by p at the presentation's level.
ModulePresentation saturate_lattice(const ModulePresentation& P, const Limits& limits = {});

/// Throws DegenerateLattice when the slice module is zero.
SliceModule slice(const ModulePresentation& P, std::uint32_t n, const Limits& limits = {});

WeylBasis weyl_gb(const SliceModule& S, Grading grading, const Limits& limits = {});

/// Throws UnsupportedRadical when the radical is outside the supported classes.
CharData characteristic_ideal(const SliceModule& S, const Limits& limits = {});

/// Full pipeline at level n. An unsupported radical yields annihilator data
/// with radical_verified = false.
CharData char_data(const ModulePresentation& P, std::uint32_t n, const Limits& limits = {});

bool bernstein_check(const CharData& c);

/// Bernstein dimension of the characteristic ideal against the dimension of
/// the order-filtration annihilator.
bool dims_agree(const SliceModule& S, const Limits& limits = {});
bool dims_agree(const ModulePresentation& P, std::uint32_t n, const Limits& limits = {});

/// Order-graded initial module of the saturated level-0 lattice over Z_(p).
cpoly::SubmodulePresentation<cpoly::Local> integral_initial_module(const ModulePresentation& P, Grading grading,
                                                                    const Limits& limits = {});

std::vector<std::string> format_relations(const SliceModule& S);

} // namespace weylstab::charvar

#include "weylstab/weyl.hpp"

#include <algorithm>

namespace weylstab {

namespace {

const gb::MonomialOrder& canonical_order() {
    static const gb::MonomialOrder order = gb::MonomialOrder::degrevlex();
    return order;
}

template <class Ring>
gb::Context<Ring> context_for(const AlgebraDescriptor& a, Ring ring) {
    auto c = ring.from_rational(a.commutator());
    return gb::Context<Ring>(std::move(ring), a.d, 0, c, canonical_order());
}

template <class Ring>
gb::Vec<Ring> to_vec(const gb::Context<Ring>& ctx, const WeylElement& e) {
    std::vector<gb::Term<Ring>> terms;
    terms.reserve(e.terms().size());
    for (const auto& [exp, c] : e.terms())
        terms.push_back({gb::Monomial{0, exp}, ctx.ring().from_rational(c)});
    return ctx.normalize(std::move(terms));
}

template <class Ring>
WeylElement from_vec(const AlgebraDescriptor& a, const gb::Context<Ring>& ctx, const gb::Vec<Ring>& v) {
    WeylElement::TermList terms;
    terms.reserve(v.terms.size());
    for (const auto& t : v.terms)
        terms.emplace_back(t.mono.exp, ctx.ring().to_rational(t.coef));
    return WeylElement::from_terms(a, std::move(terms));
}

long sum_range(const ExponentPair& e, std::size_t from, std::size_t to) {
    long s = 0;
    for (std::size_t i = from; i < to; ++i)
        s += e[i];
    return s;
}

} // namespace

void AlgebraDescriptor::validate() const {
    if (d < 1)
        fail(ErrorCode::InvalidArgument, "need d >= 1");
    if (!is_prime(prime))
        fail(ErrorCode::InvalidArgument, "p = " + std::to_string(prime) + " is not prime");
}

Rational AlgebraDescriptor::commutator() const {
    if (coefficients == CoefficientKind::ResidueField)
        return level == 0 ? Rational(1) : Rational(0);
    return Rational(power_of(prime, level));
}

AlgebraDescriptor AlgebraDescriptor::with_level(std::uint32_t n) const {
    AlgebraDescriptor r = *this;
    r.level = n;
    return r;
}

AlgebraDescriptor AlgebraDescriptor::residue() const {
    AlgebraDescriptor r = *this;
    r.coefficients = CoefficientKind::ResidueField;
    return r;
}

std::string variable_name(std::size_t index, std::uint32_t d, bool commutative_names) {
    if (index < d)
        return (commutative_names ? "X" : "x") + std::to_string(index + 1);
    return (commutative_names ? "Y" : "d") + std::to_string(index - d + 1);
}

// ---------------------------------------------------------------------------

WeylElement::WeylElement(AlgebraDescriptor algebra) : algebra_(algebra) { algebra_.validate(); }

WeylElement WeylElement::constant(const AlgebraDescriptor& algebra, const Rational& c) {
    return from_terms(algebra, {{ExponentPair(algebra.nvars(), 0), c}});
}

WeylElement WeylElement::x(const AlgebraDescriptor& algebra, std::uint32_t i) {
    if (i < 1 || i > algebra.d)
        fail(ErrorCode::UnknownVariable, "x" + std::to_string(i) + " with d = " + std::to_string(algebra.d));
    ExponentPair e(algebra.nvars(), 0);
    e[i - 1] = 1;
    return from_terms(algebra, {{e, Rational(1)}});
}

WeylElement WeylElement::eta(const AlgebraDescriptor& algebra, std::uint32_t i) {
    if (i < 1 || i > algebra.d)
        fail(ErrorCode::UnknownVariable, "d" + std::to_string(i) + " with d = " + std::to_string(algebra.d));
    ExponentPair e(algebra.nvars(), 0);
    e[algebra.d + i - 1] = 1;
    return from_terms(algebra, {{e, Rational(1)}});
}

WeylElement WeylElement::from_terms(const AlgebraDescriptor& algebra, TermList terms) {
    WeylElement out(algebra);
    const bool residue = algebra.coefficients == CoefficientKind::ResidueField;
    for (auto& [e, c] : terms) {
        if (e.size() != algebra.nvars())
            fail(ErrorCode::InvalidArgument, "exponent vector has wrong length");
        if (residue)
            c = Rational(gb::PrimeField{algebra.prime}.from_rational(c));
    }
    std::sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
        return canonical_order().compare_exponents(a.first, b.first) > 0;
    });
    for (auto& t : terms) {
        if (!out.terms_.empty() && out.terms_.back().first == t.first) {
            out.terms_.back().second += t.second;
            if (residue)
                out.terms_.back().second =
                    Rational(gb::PrimeField{algebra.prime}.from_rational(out.terms_.back().second));
            if (sgn(out.terms_.back().second) == 0)
                out.terms_.pop_back();
        } else if (sgn(t.second) != 0) {
            out.terms_.push_back(std::move(t));
        }
    }
    return out;
}

Rational WeylElement::coefficient(const ExponentPair& e) const {
    for (const auto& [exp, c] : terms_)
        if (exp == e)
            return c;
    return 0;
}

LocalRational WeylElement::local_coefficient(const ExponentPair& e) const {
    return LocalRational::from_rational(coefficient(e), algebra_.prime);
}

ResidueElement WeylElement::residue_coefficient(const ExponentPair& e) const {
    if (algebra_.coefficients == CoefficientKind::ResidueField)
        return ResidueElement(coefficient(e).get_num().get_si(), algebra_.prime);
    return local_coefficient(e).residue();
}

long WeylElement::min_valuation() const {
    if (algebra_.coefficients == CoefficientKind::ResidueField)
        return is_zero() ? kInfiniteValuation : 0;
    long v = kInfiniteValuation;
    for (const auto& [e, c] : terms_)
        v = std::min(v, p_valuation(c, algebra_.prime));
    return v;
}

void WeylElement::check_same(const WeylElement& other) const {
    if (!(algebra_ == other.algebra_))
        fail(ErrorCode::AlgebraMismatch, "operands live in different algebras");
}

WeylElement WeylElement::operator+(const WeylElement& other) const {
    check_same(other);
    TermList t = terms_;
    t.insert(t.end(), other.terms_.begin(), other.terms_.end());
    return from_terms(algebra_, std::move(t));
}

WeylElement WeylElement::operator-(const WeylElement& other) const { return *this + (-other); }

WeylElement WeylElement::operator-() const {
    TermList t = terms_;
    for (auto& [e, c] : t)
        c = -c;
    return from_terms(algebra_, std::move(t));
}

WeylElement WeylElement::scaled(const Rational& c) const {
    TermList t = terms_;
    for (auto& [e, v] : t)
        v *= c;
    return from_terms(algebra_, std::move(t));
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
    check_same(other);
    if (algebra_.coefficients == CoefficientKind::ResidueField) {
        auto ctx = context_for(algebra_, gb::PrimeField{algebra_.prime});
        return from_vec(algebra_, ctx, ctx.mul(to_vec(ctx, *this), to_vec(ctx, other)));
    }
    auto ctx = context_for(algebra_, gb::RationalField{});
    return from_vec(algebra_, ctx, ctx.mul(to_vec(ctx, *this), to_vec(ctx, other)));
}

WeylElement WeylElement::pow(unsigned k) const {
    WeylElement r = constant(algebra_, 1);
    for (unsigned i = 0; i < k; ++i)
        r = r * *this;
    return r;
}

WeylElement WeylElement::reduce_mod_p() const {
    AlgebraDescriptor target = algebra_.residue();
    if (algebra_.coefficients == CoefficientKind::ResidueField)
        return *this;
    TermList t;
    for (const auto& [e, c] : terms_) {
        if (p_valuation(c, algebra_.prime) < 0)
            fail(ErrorCode::NegativeValuation, "reduction mod p of a non-integral element");
        t.emplace_back(e, c);
    }
    return from_terms(target, std::move(t));
}

namespace {

std::string monomial_string(const ExponentPair& e, std::uint32_t d, bool commutative_names) {
    std::string s;
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0)
            continue;
        if (!s.empty())
            s += "*";
        s += variable_name(i, d, commutative_names);
        if (e[i] > 1)
            s += "^" + std::to_string(e[i]);
    }
    return s;
}

std::string terms_string(const WeylElement::TermList& terms, std::uint32_t d, bool commutative_names) {
    if (terms.empty())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms) {
        Rational mag = abs(c);
        bool negative = sgn(c) < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        std::string mono = monomial_string(e, d, commutative_names);
        if (mono.empty())
            out += mag.get_str();
        else if (mag == 1)
            out += mono;
        else
            out += mag.get_str() + "*" + mono;
    }
    return out;
}

} // namespace

std::string WeylElement::to_string() const { return terms_string(terms_, algebra_.d, false); }

std::string GradedSymbol::to_string() const { return terms_string(terms, algebra.d, true); }

// ---------------------------------------------------------------------------

long bernstein_degree(const WeylElement& a) {
    long deg = kMinusInfinity;
    for (const auto& [e, c] : a.terms())
        deg = std::max(deg, sum_range(e, 0, e.size()));
    return deg;
}

long order_degree(const WeylElement& a) {
    long deg = kMinusInfinity;
    for (const auto& [e, c] : a.terms())
        deg = std::max(deg, sum_range(e, a.algebra().d, e.size()));
    return deg;
}

std::vector<std::uint32_t> grading_weights(Grading g, std::uint32_t d) {
    std::vector<std::uint32_t> w(2 * static_cast<std::size_t>(d), 1);
    if (g == Grading::Order)
        std::fill(w.begin(), w.begin() + d, 0);
    return w;
}

GradedSymbol symbol(const WeylElement& a, Grading grading) {
    if (a.is_zero())
        fail(ErrorCode::ZeroElement, "symbol of zero");
    long top = grading == Grading::Bernstein ? bernstein_degree(a) : order_degree(a);
    std::size_t from = grading == Grading::Bernstein ? 0 : a.algebra().d;
    GradedSymbol s{a.algebra(), grading, {}};
    for (const auto& [e, c] : a.terms())
        if (sum_range(e, from, e.size()) == top)
            s.terms.emplace_back(e, c);
    return s;
}

GradedSymbol symbol_product(const GradedSymbol& a, const GradedSymbol& b) {
    if (!(a.algebra == b.algebra) || a.grading != b.grading)
        fail(ErrorCode::AlgebraMismatch, "symbols of different algebras or gradings");
    // commutative product: reuse the Weyl product at a level where it commutes
    AlgebraDescriptor comm = a.algebra.residue().with_level(1);
    const bool residue = a.algebra.coefficients == CoefficientKind::ResidueField;
    WeylElement::TermList out;
    for (const auto& [ea, ca] : a.terms)
        for (const auto& [eb, cb] : b.terms) {
            ExponentPair e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                e[i] = ea[i] + eb[i];
            out.emplace_back(e, ca * cb);
        }
    WeylElement w = WeylElement::from_terms(residue ? comm : a.algebra, std::move(out));
    return GradedSymbol{a.algebra, a.grading, w.terms()};
}

Rebased rebase(const WeylElement& a, std::uint32_t to_level) {
    auto [v, power] = rebase_vector({a}, to_level);
    return {v.front(), power};
}

std::pair<std::vector<WeylElement>, long> rebase_vector(const std::vector<WeylElement>& v, std::uint32_t to_level) {
    if (v.empty())
        return {v, 0};
    const AlgebraDescriptor& from = v.front().algebra();
    if (from.coefficients != CoefficientKind::LocalField)
        fail(ErrorCode::InvalidArgument, "rebase needs local-field coefficients");
    if (to_level < from.level)
        fail(ErrorCode::InvalidArgument, "rebase only moves to higher levels");
    const long shift = static_cast<long>(to_level - from.level);
    const std::uint32_t p = from.prime;
    const AlgebraDescriptor target = from.with_level(to_level);

    // valuation of each term after the substitution, before rescaling
    long s = kInfiniteValuation;
    for (const auto& e : v) {
        if (!(e.algebra() == from))
            fail(ErrorCode::AlgebraMismatch, "vector entries in different algebras");
        for (const auto& [exp, c] : e.terms())
            s = std::min(s, p_valuation(c, p) - shift * sum_range(exp, from.d, exp.size()));
    }
    if (s == kInfiniteValuation)
        return {std::vector<WeylElement>(v.size(), WeylElement(target)), 0};
    std::vector<WeylElement> out;
    for (const auto& e : v) {
        WeylElement::TermList t;
        for (const auto& [exp, c] : e.terms()) {
            long k = -shift * sum_range(exp, from.d, exp.size()) - s;
            t.emplace_back(exp, c * LocalRational::p_power(k, p).value());
        }
        out.push_back(WeylElement::from_terms(target, std::move(t)));
    }
    return {std::move(out), -s};
}

std::pair<std::vector<WeylElement>, long> make_primitive(const std::vector<WeylElement>& v) {
    if (v.empty())
        return {v, 0};
    return rebase_vector(v, v.front().algebra().level);
}

} // namespace weylstab

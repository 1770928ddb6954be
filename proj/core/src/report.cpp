#include <algorithm>
#include <cstdlib>

#include "json.hpp"
#include "weylstab/cli.hpp"

namespace weylstab::cli {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void bad_problem(const std::string& msg) { throw ParseError(ErrorCode::ParseError, msg, 1, 1); }

std::uint32_t small_uint(const json& v, const char* what) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || v.get<long long>() > (1LL << 31))
        bad_problem(std::string(what) + " must be a nonnegative integer");
    return static_cast<std::uint32_t>(v.get<long long>());
}

json int_json(const Integer& n) {
    if (n.fits_slong_p())
        return n.get_si();
    return n.get_str();
}

json strings_json(const std::vector<std::string>& v) {
    json a = json::array();
    for (const auto& s : v)
        a.push_back(s);
    return a;
}

AlgebraDescriptor algebra_of(const ProblemFile& p, std::uint32_t level, CoefficientKind kind) {
    AlgebraDescriptor a{p.dim, level, p.prime, kind};
    a.validate();
    return a;
}

std::vector<WeylElement> parse_vector(const std::vector<std::string>& v, const AlgebraDescriptor& a) {
    std::vector<WeylElement> out;
    for (const auto& s : v)
        out.push_back(parse_expression(s, a));
    return out;
}

// Residue representatives lifted to the integers.
WeylElement lift(const WeylElement& e, const AlgebraDescriptor& target) {
    return WeylElement::from_terms(target, e.terms());
}

std::string commutative_string(const WeylElement& e) {
    return GradedSymbol{e.algebra(), Grading::Bernstein, e.terms()}.to_string();
}

} // namespace

// ---------------------------------------------------------------------------

ProblemFile load_problem(std::string_view json_text) {
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::parse_error& e) {
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < json_text.size(); ++i) {
            if (json_text[i] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        throw ParseError(ErrorCode::ParseError, "malformed problem file", line, col);
    }
    if (!doc.is_object())
        bad_problem("problem file must be a JSON object");
    ProblemFile p;
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const auto& k = it.key();
        const auto& v = it.value();
        if (k == "prime") {
            p.prime = small_uint(v, "prime");
        } else if (k == "dim") {
            p.dim = small_uint(v, "dim");
        } else if (k == "rank") {
            p.rank = small_uint(v, "rank");
        } else if (k == "coefficients") {
            if (v == "local")
                p.coefficients = CoefficientKind::LocalField;
            else if (v == "residue")
                p.coefficients = CoefficientKind::ResidueField;
            else
                bad_problem("coefficients must be \"local\" or \"residue\"");
        } else if (k == "generators") {
            if (!v.is_array())
                bad_problem("generators must be an array");
            for (const auto& g : v) {
                if (g.is_string())
                    p.generators.push_back({g.get<std::string>()});
                else if (g.is_array() && std::all_of(g.begin(), g.end(), [](const json& s) { return s.is_string(); }))
                    p.generators.push_back(g.get<std::vector<std::string>>());
                else
                    bad_problem("each generator is a string or an array of strings");
            }
        } else if (k == "options") {
            if (!v.is_object())
                bad_problem("options must be an object");
            for (auto o = v.begin(); o != v.end(); ++o) {
                if (o.key() == "level")
                    p.level = small_uint(o.value(), "level");
                else if (o.key() == "scan") {
                    if (o.value().is_string())
                        p.scan = parse_window(o.value().get<std::string>());
                    else if (o.value().is_array() && o.value().size() == 2)
                        p.scan = {small_uint(o.value()[0], "scan"), small_uint(o.value()[1], "scan")};
                    else
                        bad_problem("scan must be \"a..b\" or [a, b]");
                } else if (o.key() == "max_degree")
                    p.limits.max_degree = small_uint(o.value(), "max_degree");
                else if (o.key() == "max_gb_steps")
                    p.limits.max_gb_steps = small_uint(o.value(), "max_gb_steps");
                else if (o.key() == "max_terms")
                    p.limits.max_terms = small_uint(o.value(), "max_terms");
                else
                    bad_problem("unknown option '" + o.key() + "'");
            }
        } else {
            bad_problem("unknown key '" + k + "'");
        }
    }
    for (const auto& g : p.generators)
        if (g.size() != p.rank)
            bad_problem("generator of length " + std::to_string(g.size()) + " in a problem of rank " +
                        std::to_string(p.rank));
    return p;
}

charvar::ModulePresentation presentation(const ProblemFile& problem) {
    AlgebraDescriptor local = algebra_of(problem, 0, CoefficientKind::LocalField);
    AlgebraDescriptor parse_in = algebra_of(problem, 0, problem.coefficients);
    charvar::ModulePresentation P{local, problem.rank, {}};
    for (const auto& g : problem.generators) {
        std::vector<WeylElement> v;
        for (auto& e : parse_vector(g, parse_in))
            v.push_back(lift(e, local));
        P.relations.push_back(std::move(v));
    }
    P.validate();
    return P;
}

std::vector<std::vector<std::string>> canonical_generators(const ProblemFile& problem, std::uint32_t level) {
    AlgebraDescriptor a = algebra_of(problem, level, problem.coefficients);
    std::vector<std::vector<std::string>> out;
    for (const auto& g : problem.generators) {
        std::vector<std::string> v;
        for (const auto& e : parse_vector(g, a))
            v.push_back(e.to_string());
        out.push_back(std::move(v));
    }
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<std::string>& commands() {
    static const std::vector<std::string> c{"nf",   "gb",   "char-ideal", "hilbert",     "dim",
                                            "mult", "holonomic", "scan", "length-bound"};
    return c;
}

int exit_code_for(ErrorCode code) {
    switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::UnknownVariable: return 2;
    case ErrorCode::DegenerateLattice: return 3;
    case ErrorCode::ResourceExceeded: return 4;
    case ErrorCode::UnsupportedRadical: return 5;
    default: return 1;
    }
}

std::filesystem::path default_workspace() {
    if (const char* env = std::getenv("WEYLSTAB_WORKSPACE"); env != nullptr && *env != '\0')
        return env;
    return ".weylstab";
}

// ---------------------------------------------------------------------------

namespace {

json hilbert_json(const hilbert::HilbertData& h) {
    json j;
    json coeffs = json::array();
    for (const auto& a : h.binomial_coeffs)
        coeffs.push_back(int_json(a));
    j["binomial_coeffs"] = coeffs;
    j["degree"] = h.is_zero() ? json(nullptr) : json(h.degree);
    j["multiplicity"] = int_json(h.multiplicity);
    j["stability_index"] = h.stability_index;
    return j;
}

json char_json(const charvar::CharData& c) {
    json j;
    j["characteristic_ideal"] = strings_json(c.ideal_strings);
    j["annihilator"] = strings_json(c.annihilator_strings);
    j["radical_verified"] = c.radical_verified;
    j["hilbert"] = hilbert_json(c.hilbert);
    j["dimension"] = c.hilbert.is_zero() ? json(nullptr) : json(c.dimension);
    j["multiplicity"] = int_json(c.multiplicity);
    j["holonomic"] = c.holonomic;
    j["bernstein_inequality"] = charvar::bernstein_check(c);
    return j;
}

json error_json(ErrorCode code, const std::string& message) {
    json j;
    j["code"] = std::string(to_string(code));
    j["message"] = message;
    return j;
}

json level_json(const stab::LevelOutcome& L) {
    json j;
    j["level"] = L.level;
    j["status"] = std::string(stab::to_string(L.status));
    if (L.data) {
        json c = char_json(*L.data);
        j.update(c);
    } else {
        j["error"] = error_json(L.error, L.message);
    }
    return j;
}

template <class T>
json optional_json(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json scan_json(const stab::ScanReport& r) {
    json j;
    j["window"] = json::array({r.n_lo, r.n_hi});
    json levels = json::array();
    for (const auto& L : r.levels)
        levels.push_back(level_json(L));
    j["levels"] = levels;
    j["detected_n0"] = optional_json(r.detected_n0);
    j["certified_n0"] = optional_json(r.certified_n0);
    if (!r.certified_n0)
        j["certificate_note"] = r.certificate_note;
    j["tower_dimension"] = optional_json(r.tower_dimension);
    if (r.length_bound) {
        json b;
        b["bound"] = int_json(r.length_bound->bound);
        b["certificate"] = std::string(stab::to_string(r.length_bound->certificate));
        j["length_bound"] = b;
    } else {
        j["length_bound"] = nullptr;
        j["length_bound_note"] = r.length_bound_note;
    }
    j["soundness_alarm"] = r.soundness_alarm;
    return j;
}

std::uint32_t level_of(const Invocation& inv) { return inv.problem.level.value_or(0); }

std::pair<std::uint32_t, std::uint32_t> window_of(const Invocation& inv) {
    return inv.problem.scan.value_or(std::pair<std::uint32_t, std::uint32_t>{0, 6});
}

// Ideal mode: commutative polynomials over F_p in X_1..X_d, Y_1..Y_d.
struct IdealInput {
    cpoly::FieldContext ctx;
    std::vector<cpoly::Poly> gens;
};

IdealInput ideal_input(const Invocation& inv) {
    const auto& p = inv.problem;
    if (p.rank != 1)
        fail(ErrorCode::InvalidArgument, "ideal mode needs rank 1");
    AlgebraDescriptor a = algebra_of(p, 1, CoefficientKind::ResidueField);
    IdealInput in{cpoly::field_context(p.prime, a.nvars(), cpoly::degrevlex(), p.limits), {}};
    for (const auto& g : p.generators) {
        WeylElement e = parse_expression(g.front(), a);
        std::vector<gb::Term<cpoly::Field>> terms;
        for (const auto& [exp, c] : e.terms())
            terms.push_back({gb::Monomial{0, exp}, in.ctx.ring().from_rational(c)});
        in.gens.push_back(in.ctx.normalize(std::move(terms)));
    }
    return in;
}

std::vector<std::string> format_basis(const cpoly::FieldContext& ctx, const std::vector<cpoly::Poly>& G,
                                      std::uint32_t d) {
    std::vector<std::string> out;
    for (const auto& g : G)
        out.push_back(cpoly::format(g, ctx.ring(), cpoly::symbol_names(d)));
    return out;
}

json run_ideal(const Invocation& inv) {
    auto in = ideal_input(inv);
    auto G = in.ctx.groebner(in.gens);
    json j;
    j["basis"] = strings_json(format_basis(in.ctx, G, inv.problem.dim));
    const auto& cmd = inv.command;
    if (cmd == "gb")
        return j;
    if (cmd == "hilbert") {
        j["hilbert"] = hilbert_json(hilbert::hilbert_polynomial(in.ctx, G));
        return j;
    }
    if (cmd == "char-ideal") {
        j["radical"] = strings_json(format_basis(in.ctx, cpoly::radical(in.ctx, G), inv.problem.dim));
        return j;
    }
    auto dm = hilbert::dim_and_mult(in.ctx, G);
    bool zero = dm.dimension < 0;
    if (cmd == "dim") {
        j["dimension"] = zero ? json(nullptr) : json(dm.dimension);
        return j;
    }
    if (cmd == "mult") {
        j["multiplicity"] = int_json(dm.multiplicity);
        return j;
    }
    fail(ErrorCode::InvalidArgument, "command '" + cmd + "' does not take --ideal");
}

json run_module(const Invocation& inv) {
    const auto& cmd = inv.command;
    const auto& problem = inv.problem;
    const Limits& limits = problem.limits;

    if (cmd == "nf") {
        AlgebraDescriptor a = algebra_of(problem, level_of(inv), problem.coefficients);
        json forms = json::array();
        for (const auto& g : problem.generators) {
            auto v = parse_vector(g, a);
            if (problem.rank == 1) {
                forms.push_back(v.front().to_string());
            } else {
                json row = json::array();
                for (const auto& e : v)
                    row.push_back(e.to_string());
                forms.push_back(row);
            }
        }
        json j;
        j["level"] = a.level;
        j["normal_forms"] = forms;
        return j;
    }

    auto P = presentation(problem);
    if (cmd == "scan" || cmd == "length-bound") {
        auto [lo, hi] = window_of(inv);
        auto report = stab::scan(P, lo, hi, limits);
        if (cmd == "scan")
            return scan_json(report);
        auto bound = stab::length_bound(report);
        json j;
        j["window"] = json::array({lo, hi});
        j["detected_n0"] = optional_json(report.detected_n0);
        j["certified_n0"] = optional_json(report.certified_n0);
        j["length_bound"] = int_json(bound.bound);
        j["certificate"] = std::string(stab::to_string(bound.certificate));
        return j;
    }

    const std::uint32_t n = level_of(inv);
    json j;
    j["level"] = n;
    if (cmd == "gb") {
        auto S = charvar::slice(P, n, limits);
        auto B = charvar::weyl_gb(S, Grading::Bernstein, limits);
        auto sctx = charvar::slice_context(S.algebra, Grading::Bernstein, limits);
        std::vector<std::string> names;
        for (std::size_t i = 0; i < S.algebra.nvars(); ++i)
            names.push_back(variable_name(i, S.algebra.d, n > 0));
        std::vector<std::string> basis;
        for (const auto& g : B.basis)
            basis.push_back(cpoly::format_vector(g, sctx.ring(), names, S.rank));
        auto symbols = charvar::symbol_context(S.algebra, limits);
        std::vector<std::string> initial;
        for (const auto& g : B.initial)
            initial.push_back(cpoly::format_vector(g, symbols.ring(), cpoly::symbol_names(problem.dim), S.rank));
        j["slice_relations"] = strings_json(charvar::format_relations(S));
        j["basis"] = strings_json(basis);
        j["initial"] = strings_json(initial);
        return j;
    }
    if (cmd == "char-ideal" || cmd == "hilbert" || cmd == "mult") {
        auto c = charvar::characteristic_ideal(charvar::slice(P, n, limits), limits);
        if (cmd == "char-ideal") {
            j.update(char_json(c));
        } else if (cmd == "hilbert") {
            j["hilbert"] = hilbert_json(c.hilbert);
        } else {
            j["multiplicity"] = int_json(c.multiplicity);
        }
        return j;
    }
    if (cmd == "dim" || cmd == "holonomic") {
        auto S = charvar::slice(P, n, limits);
        auto c = charvar::char_data(P, n, limits);
        j["dimension"] = c.hilbert.is_zero() ? json(nullptr) : json(c.dimension);
        if (cmd == "holonomic") {
            j["d"] = problem.dim;
            j["holonomic"] = c.holonomic;
            j["bernstein_inequality"] = charvar::bernstein_check(c);
            j["dims_agree"] = charvar::dims_agree(S, limits);
        }
        return j;
    }
    fail(ErrorCode::InvalidArgument, "unknown command '" + cmd + "'");
}

json problem_json(const Invocation& inv) {
    const auto& p = inv.problem;
    json j;
    j["prime"] = p.prime;
    j["dim"] = p.dim;
    j["coefficients"] = p.coefficients == CoefficientKind::LocalField ? "local" : "residue";
    j["rank"] = p.rank;
    j["ideal_mode"] = inv.ideal_mode;
    json gens = json::array();
    if (inv.ideal_mode) {
        AlgebraDescriptor a = algebra_of(p, 1, CoefficientKind::ResidueField);
        std::vector<std::string> v;
        for (const auto& g : p.generators)
            v.push_back(commutative_string(parse_expression(g.front(), a)));
        std::sort(v.begin(), v.end());
        gens = strings_json(v);
    } else {
        std::uint32_t level = inv.command == "nf" ? level_of(inv) : 0;
        for (const auto& v : canonical_generators(p, level)) {
            if (p.rank == 1)
                gens.push_back(v.front());
            else
                gens.push_back(strings_json(v));
        }
    }
    j["generators"] = gens;
    if (inv.command == "scan" || inv.command == "length-bound") {
        auto [lo, hi] = window_of(inv);
        j["scan"] = json::array({lo, hi});
    } else {
        j["level"] = level_of(inv);
    }
    json limits;
    limits["max_degree"] = p.limits.max_degree;
    limits["max_gb_steps"] = p.limits.max_gb_steps;
    limits["max_terms"] = p.limits.max_terms;
    j["limits"] = limits;
    return j;
}

} // namespace

Outcome run(const Invocation& inv) {
    Outcome out;
    json report;
    report["tool"] = "weylstab";
    report["version"] = std::string(kVersion);
    report["command"] = inv.command;

    auto finish = [&](int code) {
        out.exit_code = code;
        out.json = report.dump(2) + "\n";
    };

    std::string key;
    try {
        if (std::find(commands().begin(), commands().end(), inv.command) == commands().end())
            fail(ErrorCode::InvalidArgument, "unknown command '" + inv.command + "'");
        json problem = problem_json(inv);
        report["input_hash"] = Cache::key(problem.dump());
        report["problem"] = problem;
        key = Cache::key(std::string(kVersion) + "\n" + inv.command + "\n" + problem.dump());
    } catch (const Error& e) {
        out.diagnostics.push_back(std::string("error: ") + e.what());
        report["error"] = error_json(e.code(), e.what());
        finish(exit_code_for(e.code()));
        return out;
    }

    std::optional<Cache> cache;
    if (inv.use_cache) {
        cache.emplace(inv.workspace.empty() ? default_workspace() : inv.workspace);
        if (auto hit = cache->get(key, out.diagnostics)) {
            out.exit_code = hit->first;
            out.json = hit->second;
            out.cache_hit = true;
            out.diagnostics.push_back("cache hit " + key);
            return out;
        }
    }

    try {
        report["result"] = inv.ideal_mode ? run_ideal(inv) : run_module(inv);
        finish(0);
    } catch (const Error& e) {
        out.diagnostics.push_back(std::string("error: ") + e.what());
        report["error"] = error_json(e.code(), e.what());
        finish(exit_code_for(e.code()));
    }

    if (cache && out.exit_code != 2) {
        try {
            cache->put(key, out.exit_code, out.json);
        } catch (const std::exception& e) {
            out.diagnostics.push_back(std::string("warning: cache write failed: ") + e.what());
        }
    }
    return out;
}

} // namespace weylstab::cli

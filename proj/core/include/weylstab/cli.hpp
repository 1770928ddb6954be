#pragma once

// Expression grammar, problem files, command dispatch and the result cache
// behind the `weylstab` executable.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylstab/charvar.hpp"
#include "weylstab/stab.hpp"

namespace weylstab::cli {

inline constexpr std::string_view kVersion = "0.1.0";

/// expr := term (('+'|'-') term)*
/// term := ['-'] factor ('*' factor)*
/// factor := atom ('^' nat)?
/// atom := rational | 'p' | 'x'k | 'd'k | 'X'k | 'Y'k | '(' expr ')'
/// X and Y are aliases of x and d. Throws ParseError (codes ParseError and
/// UnknownVariable) carrying line and column.
WeylElement parse_expression(std::string_view text, const AlgebraDescriptor& algebra);

struct ProblemFile {
    std::uint32_t prime = 2;
    std::uint32_t dim = 1;
    CoefficientKind coefficients = CoefficientKind::LocalField;
    std::size_t rank = 1;
    /// One entry per relation; each has `rank` expression strings.
    std::vector<std::vector<std::string>> generators;
    std::optional<std::uint32_t> level;
    std::optional<std::pair<std::uint32_t, std::uint32_t>> scan;
    Limits limits;
};

/// JSON problem file. Malformed JSON raises ParseError with line and column.
ProblemFile load_problem(std::string_view json_text);

/// Relations parsed at the ambient level 0.
charvar::ModulePresentation presentation(const ProblemFile& problem);

/// Normal forms of the relations, sorted; the basis of the cache key.
std::vector<std::vector<std::string>> canonical_generators(const ProblemFile& problem, std::uint32_t level = 0);

/// `a..b`.
std::pair<std::uint32_t, std::uint32_t> parse_window(std::string_view text);

struct Invocation {
    std::string command;
    ProblemFile problem;
    /// Generators are commutative polynomials in X_i, Y_i over F_p.
    bool ideal_mode = false;
    bool use_cache = true;
    std::filesystem::path workspace;
};

struct Outcome {
    int exit_code = 0;
    /// Report document, newline-terminated.
    std::string json;
    std::vector<std::string> diagnostics;
    bool cache_hit = false;
};

const std::vector<std::string>& commands();

/// 0 success, 2 parse error, 3 degenerate lattice, 4 resource cap,
/// 5 unsupported radical, 1 anything else.
int exit_code_for(ErrorCode code);

/// $WEYLSTAB_WORKSPACE, else `.weylstab`.
std::filesystem::path default_workspace();

Outcome run(const Invocation& inv);

/// Content-addressed store under <workspace>/cache.
class Cache {
public:
    explicit Cache(std::filesystem::path workspace);

    static std::string key(std::string_view material);

    /// Stored report and exit code; corrupt entries are reported and ignored.
    std::optional<std::pair<int, std::string>> get(const std::string& key, std::vector<std::string>& diagnostics) const;
    /// Atomic: temporary file, then rename.
    void put(const std::string& key, int exit_code, const std::string& report) const;

    std::filesystem::path path_for(const std::string& key) const;

private:
    std::filesystem::path dir_;
};

} // namespace weylstab::cli

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "weylstab/cli.hpp"

namespace cli = weylstab::cli;

namespace {

const std::map<std::string, std::string> kHelp{
    {"nf", "normal forms of the generators at --level"},
    {"gb", "slice relations and their Bernstein Gröbner basis"},
    {"char-ideal", "characteristic ideal at --level"},
    {"hilbert", "Hilbert polynomial of the characteristic ideal"},
    {"dim", "dimension of the characteristic variety"},
    {"mult", "multiplicity of the characteristic ideal"},
    {"holonomic", "holonomicity and the Bernstein inequality"},
    {"scan", "characteristic data across a level window"},
    {"length-bound", "plateau multiplicity with its certificate"},
};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Characteristic ideals and deformation scans for modules over deformed Weyl algebras"};
    app.require_subcommand(1, 1);

    std::string file;
    std::vector<std::string> exprs;
    std::optional<std::uint32_t> prime, dim, level;
    std::optional<std::size_t> max_degree, max_gb_steps;
    std::string window;
    std::string workspace;
    bool no_cache = false;
    bool ideal = false;

    for (const auto& name : cli::commands()) {
        auto* sub = app.add_subcommand(name, kHelp.at(name));
        sub->add_option("problem", file, "JSON problem file")->check(CLI::ExistingFile);
        sub->add_option("-e,--expr", exprs, "relation expression (repeatable)");
        sub->add_option("--prime", prime, "the prime p");
        sub->add_option("--dim", dim, "number of variable pairs d");
        sub->add_option("--level", level, "deformation level n");
        sub->add_option("--scan", window, "level window a..b");
        sub->add_option("--max-degree", max_degree, "degree cap for Gröbner elements");
        sub->add_option("--max-gb-steps", max_gb_steps, "S-pair cap per Gröbner computation");
        sub->add_flag("--no-cache", no_cache, "bypass the result cache");
        sub->add_option("--workspace", workspace, "workspace directory (default .weylstab)");
        sub->add_flag("--ideal", ideal, "generators are commutative polynomials in X_i, Y_i over F_p");
    }
    CLI11_PARSE(app, argc, argv);

    cli::Invocation inv;
    inv.command = app.get_subcommands().front()->get_name();
    try {
        if (!file.empty()) {
            std::ifstream in(file);
            std::stringstream ss;
            ss << in.rdbuf();
            inv.problem = cli::load_problem(ss.str());
        }
        for (const auto& e : exprs) {
            if (inv.problem.rank != 1)
                throw weylstab::Error(weylstab::ErrorCode::InvalidArgument, "--expr needs a rank-1 problem");
            inv.problem.generators.push_back({e});
        }
        if (prime)
            inv.problem.prime = *prime;
        if (dim)
            inv.problem.dim = *dim;
        if (level)
            inv.problem.level = *level;
        if (!window.empty())
            inv.problem.scan = cli::parse_window(window);
        if (max_degree)
            inv.problem.limits.max_degree = *max_degree;
        if (max_gb_steps)
            inv.problem.limits.max_gb_steps = *max_gb_steps;
    } catch (const weylstab::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return cli::exit_code_for(e.code());
    }
    inv.ideal_mode = ideal;
    inv.use_cache = !no_cache;
    inv.workspace = workspace.empty() ? cli::default_workspace() : std::filesystem::path(workspace);

    cli::Outcome out = cli::run(inv);
    for (const auto& d : out.diagnostics)
        std::cerr << d << '\n';
    std::cout << out.json;
    return out.exit_code;
}

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "geokit/block.hpp"
#include "geokit/cartwright_steger.hpp"
#include "geokit/int_matrix.hpp"
#include "geokit/recipe.hpp"
#include "geokit/report.hpp"

namespace {

constexpr int EXIT_EXPECT_FAILED = 1;
constexpr int EXIT_PARSE_ERROR = 2;
constexpr int EXIT_STEP_ERROR = 3;

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

bool is_builtin(const std::string &name) {
    for (const auto &f : geokit::builtin_recipes())
        if (f.name == name) return true;
    return false;
}

int cmd_run(const std::string &target, const std::vector<std::string> &param_args,
            const std::string &format) {
    std::map<std::string, long long> overrides;
    for (const auto &p : param_args) {
        size_t eq = p.find('=');
        if (eq == std::string::npos) {
            std::cerr << "bad --param \"" << p << "\", expected k=v\n";
            return EXIT_PARSE_ERROR;
        }
        try {
            overrides[p.substr(0, eq)] = std::stoll(p.substr(eq + 1));
        } catch (const std::exception &) {
            std::cerr << "bad --param value in \"" << p << "\"\n";
            return EXIT_PARSE_ERROR;
        }
    }

    geokit::Recipe recipe;
    try {
        if (is_builtin(target)) {
            recipe = geokit::build_recipe(target, overrides);
        } else {
            if (!overrides.empty()) {
                std::cerr << "--param applies to built-in recipes only\n";
                return EXIT_PARSE_ERROR;
            }
            recipe = geokit::parse_recipe(read_file(target));
        }
    } catch (const std::exception &e) {
        std::cerr << "recipe error: " << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }

    geokit::Report rep = geokit::run_recipe(recipe);
    try {
        std::cout << rep.render(format);
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }
    return geokit::exit_code_for(rep);
}

int cmd_h1(const std::string &path) {
    geokit::Presentation p;
    try {
        p = geokit::Presentation::parse(read_file(path));
    } catch (const std::exception &e) {
        std::cerr << "presentation error: " << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }
    geokit::AbelianGroup g = geokit::h1(p);
    std::cout << "generators: " << p.generators.size() << "\n";
    std::cout << "relators: " << p.relators.size() << "\n";
    std::cout << "h1: " << g.str() << "\n";
    return 0;
}

int cmd_snf(const std::string &path) {
    std::vector<std::vector<long>> rows;
    std::istringstream in;
    try {
        in.str(read_file(path));
    } catch (const std::exception &e) {
        std::cerr << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        std::vector<long> row;
        long v;
        while (ls >> v) row.push_back(v);
        if (!ls.eof()) {
            std::cerr << "matrix parse error: non-integer token in \"" << line << "\"\n";
            return EXIT_PARSE_ERROR;
        }
        if (!row.empty()) rows.push_back(row);
    }
    geokit::IntMatrix A;
    try {
        A = geokit::IntMatrix::from_rows(rows);
    } catch (const std::exception &e) {
        std::cerr << "matrix error: " << e.what() << "\n";
        return EXIT_PARSE_ERROR;
    }
    geokit::SnfResult s = geokit::snf(A);
    std::cout << "invariant_factors:";
    for (const auto &d : s.invariant_factors) std::cout << " " << d.get_str();
    std::cout << "\nrank: " << s.invariant_factors.size() << "\n";
    std::cout << "cokernel: " << geokit::cokernel(A).str() << "\n";
    return 0;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"geokit: exact invariant bookkeeping for surgered and glued 4-manifolds"};
    app.require_subcommand(1);

    auto *run = app.add_subcommand("run", "run a built-in or file recipe and report");
    std::string run_target, run_format = "text";
    std::vector<std::string> run_params;
    run->add_option("recipe", run_target, "built-in recipe name or recipe file path")
        ->required();
    run->add_option("--param", run_params, "parameter override k=v (built-ins only)");
    run->add_option("--format", run_format, "text or json-like");

    auto *blocks = app.add_subcommand("blocks", "built-in building blocks");
    bool blocks_list = false;
    blocks->add_flag("--list", blocks_list, "print the block table");

    auto *csv = app.add_subcommand("cs-verify", "verify the lattice generator data exactly");
    bool dump_gens = false;
    std::string cs_format = "text";
    csv->add_flag("--dump-generators", dump_gens, "print the generator matrices and exit");
    csv->add_option("--format", cs_format, "text or json-like");

    auto *h1c = app.add_subcommand("h1", "first homology of a presentation file");
    std::string h1_path;
    h1c->add_option("file", h1_path, "presentation file (gen/rel lines)")->required();

    auto *snfc = app.add_subcommand("snf", "Smith normal form of an integer matrix file");
    std::string snf_path;
    snfc->add_option("file", snf_path, "whitespace-separated integer rows")->required();

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) return cmd_run(run_target, run_params, run_format);
        if (blocks->parsed()) {
            if (!blocks_list) {
                std::cerr << "nothing to do (use --list)\n";
                return EXIT_PARSE_ERROR;
            }
            std::cout << geokit::blocks_table();
            return 0;
        }
        if (csv->parsed()) {
            if (dump_gens) {
                std::cout << geokit::cs::dump_generators();
                return 0;
            }
            return cmd_run("cs-verify", {}, cs_format);
        }
        if (h1c->parsed()) return cmd_h1(h1_path);
        if (snfc->parsed()) return cmd_snf(snf_path);
    } catch (const std::exception &e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return EXIT_STEP_ERROR;
    }
    return 0;
}

#include "heunfact/commands.hpp"
#include "heunfact/errors.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>

namespace {

std::filesystem::path default_golden_dir() {
    const std::filesystem::path installed{HEUNFACT_DEFAULT_GOLDEN_DIR};
    if (std::filesystem::exists(installed)) {
        return installed;
    }
    return HEUNFACT_SOURCE_GOLDEN_DIR;
}

void add_family_flags(CLI::App* cmd, heunfact::FamilyFlags& flags, std::string& format, std::string& out_path) {
    cmd->add_option("--k", flags.k, "Number of free singularities a_1..a_k")->required();
    cmd->add_option("--sing", flags.sing, "Comma-separated a_1..a_k")->required();
    cmd->add_flag("--lame", flags.lame, "All finite exponents 1/2");
    cmd->add_option("--gamma", flags.gamma, "Exponent at 0");
    cmd->add_option("--delta", flags.delta, "Exponent at 1");
    cmd->add_option("--eps", flags.eps, "Comma-separated exponents at a_1..a_k");
    cmd->add_option("--symbols", flags.symbols, "Comma-separated parameter order");
    cmd->add_flag("--include-trivial", flags.include_trivial, "Also solve the all-clear and all-set masks");
    cmd->add_option("--format", format, "table, json or csv")->capture_default_str();
    cmd->add_option("--out", out_path, "Write the document here instead of stdout");
}

int emit(const heunfact::CommandResult& result, const std::string& out_path) {
    std::cerr << result.err;
    if (out_path.empty() || result.out.empty()) {
        std::cout << result.out;
        return result.exit_code;
    }
    std::ofstream file(out_path);
    if (!file) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
    }
    file << result.out;
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact factorization of generalized Heun and Lame operators"};
    app.require_subcommand(1);

    heunfact::FamilyFlags flags;
    std::string format = "table";
    std::string out_path;
    bool twice = false;
    int table_id = 0;
    std::string golden_dir;
    std::string problem_path;

    auto* factorize = app.add_subcommand("factorize", "Factorize every splitting of a family");
    add_family_flags(factorize, flags, format, out_path);

    auto* adjoint = app.add_subcommand("adjoint", "Factorizations of the Lagrange adjoint");
    add_family_flags(adjoint, flags, format, out_path);
    adjoint->add_flag("--twice", twice, "Apply the adjoint twice (returns the original factorizations)");

    auto* tables = app.add_subcommand("tables", "Recompute a reference table and compare with its golden file");
    tables->add_option("--id", table_id, "Table id 1..7")->required();
    tables->add_option("--golden-dir", golden_dir, "Directory with table<N>.txt");

    auto* verify = app.add_subcommand("verify", "Audit a problem or result JSON file");
    verify->add_option("problem", problem_path, "Path to the JSON file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    if (tables->parsed()) {
        return emit(heunfact::cmd_tables(table_id, golden_dir.empty() ? default_golden_dir() : std::filesystem::path(golden_dir)), {});
    }
    if (verify->parsed()) {
        return emit(heunfact::cmd_verify(problem_path), {});
    }
    try {
        const auto fmt = heunfact::parse_output_format(format);
        const auto problem = heunfact::problem_from_flags(flags);
        if (adjoint->parsed()) {
            return emit(heunfact::cmd_adjoint(problem, fmt, twice), out_path);
        }
        return emit(heunfact::cmd_factorize(problem, fmt), out_path);
    } catch (const heunfact::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}

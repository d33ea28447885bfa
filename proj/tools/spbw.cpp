#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "spbw/driver.hpp"

int main(int argc, char** argv) {
    CLI::App app{"Groebner engine for bijective skew PBW extensions"};
    app.require_subcommand(1);

    std::string file;
    std::vector<std::string> names;
    spbw::RunFlags flags;

    auto add_common = [&](CLI::App* sub, bool with_names) {
        sub->add_option("file", file, "presentation file (.spbw)")->required();
        if (with_names) sub->add_option("names", names, "defined entity names");
        sub->add_flag("--trace", flags.trace, "one reduction step per line");
        sub->add_flag("--pairs-only", flags.pairs_only,
                      "restrict syzygy subsets to pairs (field coefficients)");
        sub->add_option("--max-degree", flags.max_degree, "degree resource guard");
        sub->add_option("--max-basis", flags.max_basis, "basis size resource guard");
    };

    add_common(app.add_subcommand("validate", "check the presentation axioms"), false);
    add_common(app.add_subcommand("mul", "multiply two named polynomials"), true);
    add_common(app.add_subcommand("divide", "divide f by divisors: divide FILE f [by] f1 f2 ..."), true);
    add_common(app.add_subcommand("gb", "Groebner basis of named (or all) polynomials"), true);
    add_common(app.add_subcommand("modgb", "module Groebner basis of named (or all) vectors"), true);
    add_common(app.add_subcommand("linv", "left inverse of a matrix"), true);
    add_common(app.add_subcommand("unimod", "unimodularity of a column with certificate"), true);
    add_common(app.add_subcommand("idem-diag", "diagonalize a scalar idempotent matrix"), true);

    CLI11_PARSE(app, argc, argv);
    const std::string command = app.get_subcommands().front()->get_name();

    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return spbw::EXIT_INPUT;
    }
    std::ostringstream text;
    text << in.rdbuf();

    spbw::RunResult res = spbw::run_command(command, text.str(), names, flags);
    std::cout << res.report;
    return res.exit_code;
}

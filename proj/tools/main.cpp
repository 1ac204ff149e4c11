// Command-line front end: norms, sigma functionals, greedy traces,
// constant searches and the verification suite over JSON-described
// sequence spaces.
#include <iostream>

#include "CLI11.hpp"
#include "greedylab/cli.hpp"

int main(int argc, char** argv) {
    CLI::App app{"finite-dimensional workbench for greedy-type basis functionals"};
    app.require_subcommand(1);

    greedylab::RunConfig config;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--space", config.space_path, "space description JSON file");
        cmd->add_option("--lambda", config.lambda_text, "scale factor as p or p/q (default 2)");
        cmd->add_option("--ambient", config.ambient_cap, "ambient index cap for searches");
        cmd->add_option("--seed", config.seed, "seed for randomized families");
        cmd->add_option("--out", config.output_dir, "output directory for report files");
        cmd->add_option("--format", config.output_format, "stdout format: json or csv");
    };

    CLI::App* norm = app.add_subcommand("norm", "evaluate the space norm of a vector");
    add_common(norm);
    norm->add_option("--vector", config.vector_literal, "vector as index:coef,... ('0' for zero)")
        ->required();

    CLI::App* sigma = app.add_subcommand("sigma", "evaluate a competitor functional");
    add_common(sigma);
    sigma->add_option("--vector", config.vector_literal, "vector as index:coef,...")->required();
    sigma->add_option("--set", config.set_literal, "anchor set as comma-separated indices");
    sigma->add_option("--m", config.m, "competitor size budget")->required();
    sigma->add_option("--kind", config.sigma_kind, "reverse | check | hat | pg-tail");

    CLI::App* trace = app.add_subcommand("greedy-trace", "list greedy sets for m = 1..k");
    add_common(trace);
    trace->add_option("--vector", config.vector_literal, "vector as index:coef,...")->required();
    trace->add_option("--max", config.trace_max, "largest greedy-set size to list");

    CLI::App* constants = app.add_subcommand("constants", "search a named constant");
    add_common(constants);
    constants->add_option("--constant", config.constant_name, "constant name")->required();

    CLI::App* verify = app.add_subcommand("verify", "run the inequality verification suite");
    add_common(verify);
    verify->add_option("--theorem", config.theorem, "theorem id or 'all'");

    CLI::App* corpus = app.add_subcommand("corpus", "write the built-in space corpus");
    add_common(corpus);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    config.command = app.get_subcommands().front()->get_name();
    return greedylab::run_cli(config, std::cout, std::cerr);
}

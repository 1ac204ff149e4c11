// Command execution behind the CLI front end. Exit codes: 0 all requested
// checks pass, 1 configuration error, 2 a check failed or an enumeration
// overflowed.
#ifndef GREEDYLAB_CLI_HPP
#define GREEDYLAB_CLI_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "greedylab/core.hpp"

namespace greedylab {

struct RunConfig {
    std::string command;  // norm | sigma | greedy-trace | constants | verify | corpus
    std::string space_path;
    std::string vector_literal;
    std::string set_literal;
    std::string sigma_kind = "check";
    std::size_t m = 0;
    std::size_t trace_max = 4;
    std::string constant_name;
    std::string theorem = "all";
    std::string lambda_text = "2";
    Index ambient_cap = 8;
    std::string output_dir;
    std::string output_format = "json";  // json | csv (stdout format for verify)
    std::uint64_t seed = 1;
};

const std::vector<std::string>& known_theorem_ids();
const std::vector<std::string>& known_constant_names();

int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace greedylab

#endif

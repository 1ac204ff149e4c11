#include "greedylab/cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "greedylab/checks.hpp"
#include "greedylab/constants.hpp"
#include "greedylab/family.hpp"
#include "greedylab/greedy.hpp"
#include "greedylab/report.hpp"
#include "greedylab/sigma.hpp"
#include "greedylab/space.hpp"

namespace greedylab {

namespace {

constexpr int kOk = 0;
constexpr int kConfigError = 1;
constexpr int kCheckFailure = 2;

class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += ", ";
        out += s;
    }
    return out;
}

SpaceSpec load_space(const RunConfig& config) {
    if (config.space_path.empty()) throw ConfigError("--space is required for this command");
    SpaceSpec space = SpaceSpec::from_json_file(config.space_path);
    validate_space(space, config.seed);
    return space;
}

Rational parse_lambda(const RunConfig& config) {
    Rational lambda = Rational::parse(config.lambda_text);
    return lambda;
}

SearchFamily grid_family(const RunConfig& config) {
    SearchFamily fam = SearchFamily::defaults();
    fam.ambient_cap = config.ambient_cap;
    return fam;
}

SearchFamily tuple_family(const RunConfig& config) {
    return SearchFamily::small(config.ambient_cap);
}

void write_file(const std::string& dir, const std::string& name, const std::string& body) {
    std::filesystem::create_directories(dir);
    std::ofstream out(dir + "/" + name, std::ios::binary);
    if (!out) throw ConfigError("cannot write to output directory '" + dir + "'");
    out << body;
    if (body.empty() || body.back() != '\n') out << "\n";
}

int run_norm(const RunConfig& config, std::ostream& out) {
    SpaceSpec space = load_space(config);
    Vector x = parse_vector_literal(config.vector_literal);
    out << norm_result_json(space.norm(x)) << "\n";
    return kOk;
}

int run_sigma(const RunConfig& config, std::ostream& out) {
    SpaceSpec space = load_space(config);
    Vector x = parse_vector_literal(config.vector_literal);
    IndexSet lambda_set = parse_set_literal(config.set_literal);
    SigmaResult result;
    if (config.sigma_kind == "reverse") {
        result = sigma_reverse(x, lambda_set, config.m, space);
    } else if (config.sigma_kind == "check") {
        result = sigma_check(x, lambda_set, config.m, space);
    } else if (config.sigma_kind == "hat") {
        result = sigma_hat(x, lambda_set, config.m, space);
    } else if (config.sigma_kind == "pg-tail") {
        result = pg_tail(x, config.m, space);
    } else {
        throw ConfigError("unknown sigma kind '" + config.sigma_kind +
                          "' (expected reverse, check, hat or pg-tail)");
    }
    std::vector<std::string> notes;
    if (lambda_set.empty() && config.m >= 1 && config.sigma_kind != "pg-tail")
        notes.push_back("anchor set empty: positional constraint is vacuous");
    out << sigma_result_json(result, notes) << "\n";
    return kOk;
}

int run_greedy_trace(const RunConfig& config, std::ostream& out, std::ostream& err) {
    Vector x = parse_vector_literal(config.vector_literal);
    std::vector<std::pair<std::size_t, std::vector<IndexSet>>> trace;
    try {
        for (std::size_t m = 1; m <= config.trace_max; ++m) {
            if (m > static_cast<std::size_t>(config.ambient_cap)) break;
            GreedySetFamily fam = enumerate_greedy_sets(x, m, config.ambient_cap);
            trace.emplace_back(m, fam.sets);
        }
    } catch (const EnumerationOverflow& e) {
        err << "greedy-trace: " << e.what() << "\n";
        return kCheckFailure;
    }
    out << greedy_trace_json(x, trace) << "\n";
    return kOk;
}

int run_constants(const RunConfig& config, std::ostream& out, std::ostream& err) {
    SpaceSpec space = load_space(config);
    Rational lambda = parse_lambda(config);
    const std::string& name = config.constant_name;
    std::optional<ConstantEstimate> est;
    try {
        if (name == "quasi-greedy") {
            est = estimate_quasi_greedy(space, grid_family(config));
        } else if (name == "suppression") {
            est = estimate_suppression(space, grid_family(config));
        } else if (name == "reverse-conservative") {
            est = estimate_reverse_conservative(space, config.ambient_cap);
        } else if (name == "conservative") {
            est = estimate_conservative(space, config.ambient_cap);
        } else if (name == "lambda-reverse-conservative") {
            est = estimate_lambda_reverse_conservative(space, lambda, config.ambient_cap);
        } else if (name == "rpslc") {
            est = estimate_rpslc(space, lambda, tuple_family(config));
        } else if (name == "rpslc-remainder") {
            est = estimate_rpslc_remainder(space, lambda, tuple_family(config));
        } else if (name == "rpgii") {
            est = estimate_rpgii(space, lambda, grid_family(config));
        } else if (name == "rpg") {
            est = estimate_rpg(space, grid_family(config));
        } else if (name == "pg") {
            est = estimate_pg(space, grid_family(config));
        } else if (name == "rpg-interval") {
            est = estimate_rpg_interval(space, grid_family(config));
        } else if (name == "pg-interval") {
            est = estimate_pg_interval(space, grid_family(config));
        } else {
            throw ConfigError("unknown constant '" + name + "'; valid names: " +
                              join(known_constant_names()));
        }
    } catch (const EnumerationOverflow& e) {
        err << "constants: " << e.what() << "\n";
        return kCheckFailure;
    }
    out << constant_estimate_json(*est) << "\n";
    return kOk;
}

int run_corpus(const RunConfig& config, std::ostream& out) {
    if (config.output_dir.empty()) throw ConfigError("corpus requires --out <dir>");
    for (const SpaceSpec& space : builtin_spaces()) {
        write_file(config.output_dir, space.name + ".json", space.to_json());
        out << space.name << ".json\n";
    }
    return kOk;
}

int run_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
    SpaceSpec space = load_space(config);
    Rational lambda = parse_lambda(config);
    SearchFamily heavy = grid_family(config);
    SearchFamily light = tuple_family(config);

    std::vector<std::string> wanted;
    if (config.theorem == "all") {
        wanted = known_theorem_ids();
    } else {
        const auto& known = known_theorem_ids();
        if (std::find(known.begin(), known.end(), config.theorem) == known.end())
            throw ConfigError("unknown theorem '" + config.theorem + "'; valid ids: " +
                              join(known));
        wanted.push_back(config.theorem);
    }

    // shared estimates, computed once
    std::optional<ConstantEstimate> cq, cl, drc;
    auto quasi = [&] {
        if (!cq) cq = estimate_quasi_greedy(space, heavy);
        return cq->value;
    };
    auto suppr = [&] {
        if (!cl) cl = estimate_suppression(space, heavy);
        return cl->value;
    };
    auto reverse_conservative = [&] {
        if (!drc) drc = estimate_reverse_conservative(space, heavy.ambient_cap);
        return drc->value;
    };

    std::vector<CheckReport> reports;
    for (const std::string& id : wanted) {
        if (id == "ul-property") {
            reports.push_back(check_ul_property(space, quasi(), heavy));
        } else if (id == "truncation-bound") {
            auto samples = random_vectors(heavy.ambient_cap, 2000, 1, 6, 0.05, 2.0, config.seed);
            reports.push_back(
                check_truncation_bound(space, suppr(), samples,
                                       "2000 seeded random vectors, support 1..6, |coef|<=2"));
        } else if (id == "rpg-interval-bound") {
            reports.push_back(
                check_rpg_interval_bound(space, quasi(), reverse_conservative(), heavy));
        } else if (id == "pg-interval-bound") {
            reports.push_back(check_pg_interval_bound(space, heavy));
        } else if (id == "rpslc-reformulation") {
            reports.push_back(check_rpslc_reformulation(space, lambda, light));
        } else if (id == "rpgii-relations") {
            reports.push_back(check_rpgii_relations(space, lambda, light));
        } else if (id == "rpslc-conservative-bound") {
            reports.push_back(check_rpslc_conservative_bound(space, lambda, light));
        } else if (id == "rpgii-equivalences") {
            reports.push_back(check_rpgii_equivalences(space, lambda, light));
        } else if (id == "signed-unit-inequalities") {
            reports.push_back(check_signed_unit_inequalities(space, heavy));
        } else if (id == "one-constant-equivalence") {
            reports.push_back(check_one_constant_equivalence(space, heavy));
        } else if (id == "counterexample-growth") {
            reports.push_back(check_counterexample_growth({1, 10, 100, 10000}));
        } else if (id == "counterexample-lambda-bound") {
            Rational bound_lambda = lambda.greater_than_one() ? lambda : Rational(2, 1);
            reports.push_back(check_counterexample_lambda_bound(bound_lambda, 64));
        }
    }

    bool all_pass = true;
    for (const auto& r : reports) {
        all_pass = all_pass && r.pass;
        if (!config.output_dir.empty())
            write_file(config.output_dir, r.theorem_id + ".json", check_report_json(r));
    }
    if (!config.output_dir.empty())
        write_file(config.output_dir, "summary.csv", csv_summary(reports));

    if (config.output_format == "csv") {
        out << csv_summary(reports);
    } else {
        for (const auto& r : reports)
            out << r.theorem_id << ": " << (r.pass ? "pass" : "fail") << "\n";
    }
    if (!all_pass) {
        err << "verify: " << std::count_if(reports.begin(), reports.end(),
                                           [](const CheckReport& r) { return !r.pass; })
            << " check(s) failed\n";
        return kCheckFailure;
    }
    return kOk;
}

}  // namespace

const std::vector<std::string>& known_theorem_ids() {
    static const std::vector<std::string> ids = {
        "ul-property",
        "truncation-bound",
        "rpg-interval-bound",
        "pg-interval-bound",
        "rpslc-reformulation",
        "rpgii-relations",
        "rpslc-conservative-bound",
        "rpgii-equivalences",
        "signed-unit-inequalities",
        "one-constant-equivalence",
        "counterexample-growth",
        "counterexample-lambda-bound",
    };
    return ids;
}

const std::vector<std::string>& known_constant_names() {
    static const std::vector<std::string> names = {
        "quasi-greedy",     "suppression",
        "reverse-conservative", "conservative",
        "lambda-reverse-conservative",
        "rpslc",            "rpslc-remainder",
        "rpgii",            "rpg",
        "pg",               "rpg-interval",
        "pg-interval",
    };
    return names;
}

int run_cli(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.ambient_cap < 1) throw ConfigError("--ambient must be at least 1");
        Rational lambda = Rational::parse(config.lambda_text);
        (void)lambda;
        if (config.command == "norm") return run_norm(config, out);
        if (config.command == "sigma") return run_sigma(config, out);
        if (config.command == "greedy-trace") return run_greedy_trace(config, out, err);
        if (config.command == "constants") return run_constants(config, out, err);
        if (config.command == "verify") return run_verify(config, out, err);
        if (config.command == "corpus") return run_corpus(config, out);
        throw ConfigError("unknown command '" + config.command + "'");
    } catch (const ConfigError& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kConfigError;
    }
}

}  // namespace greedylab

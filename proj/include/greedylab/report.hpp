// Report serialization: JSON documents for estimates, check reports and
// sigma results, the CSV summary, and the CLI literal parsers. All output
// is deterministic (sorted keys, shortest round-trip numbers).
#ifndef GREEDYLAB_REPORT_HPP
#define GREEDYLAB_REPORT_HPP

#include <string>
#include <vector>

#include "greedylab/checks.hpp"
#include "greedylab/constants.hpp"
#include "greedylab/sigma.hpp"

namespace greedylab {

std::string check_report_json(const CheckReport& report);
std::string constant_estimate_json(const ConstantEstimate& estimate);
std::string sigma_result_json(const SigmaResult& result, const std::vector<std::string>& notes = {});
std::string norm_result_json(double value);
std::string greedy_trace_json(const Vector& x,
                              const std::vector<std::pair<std::size_t, std::vector<IndexSet>>>& trace);

// theorem_id,status,worst_ratio,bound_used
std::string csv_summary(const std::vector<CheckReport>& reports);

// "3:1,5:-0.25"; "0" or "" denote the zero vector.
Vector parse_vector_literal(const std::string& text);
// "1,3,5"; "" denotes the empty set.
IndexSet parse_set_literal(const std::string& text);

}  // namespace greedylab

#endif

#include "greedylab/report.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <sstream>

#include "json.hpp"

namespace greedylab {

namespace {

std::string fmt(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

nlohmann::json witness_json(const Witness& w) {
    if (!w.valid) return nullptr;
    nlohmann::json j;
    j["lhs"] = vector_literal(w.lhs);
    j["rhs"] = vector_literal(w.rhs);
    j["detail"] = w.detail;
    return j;
}

nlohmann::json set_json(const IndexSet& a) {
    nlohmann::json arr = nlohmann::json::array();
    for (Index i : a) arr.push_back(i);
    return arr;
}

}  // namespace

std::string check_report_json(const CheckReport& report) {
    nlohmann::json j;
    j["theorem"] = report.theorem_id;
    j["status"] = report.pass ? "pass" : "fail";
    j["worst_ratio"] = report.worst_ratio;
    j["bound_used"] = report.bound_used;
    j["bound_formula"] = report.bound_formula;
    j["witness"] = witness_json(report.witness);
    j["family"] = report.family;
    j["scope"] = report.scope;
    nlohmann::json details = nlohmann::json::object();
    for (const auto& [k, v] : report.details) details[k] = v;
    j["details"] = details;
    return j.dump(2);
}

std::string constant_estimate_json(const ConstantEstimate& estimate) {
    nlohmann::json j;
    j["name"] = estimate.name;
    j["value"] = estimate.value;
    j["raw_max"] = estimate.raw_max;
    j["clamped"] = estimate.clamped;
    j["exact"] = estimate.exact;
    j["unbounded"] = estimate.unbounded;
    j["witness"] = witness_json(estimate.witness);
    if (estimate.unbounded) j["unbounded_witness"] = witness_json(estimate.unbounded_witness);
    j["family"] = estimate.family;
    if (!estimate.lambda.empty()) j["lambda"] = estimate.lambda;
    return j.dump(2);
}

std::string sigma_result_json(const SigmaResult& result, const std::vector<std::string>& notes) {
    nlohmann::json j;
    j["value"] = result.value;
    j["minimizer"] = set_json(result.minimizer);
    j["kind"] = sigma_kind_name(result.kind);
    if (!notes.empty()) j["notes"] = notes;
    return j.dump(2);
}

std::string norm_result_json(double value) {
    nlohmann::json j;
    j["value"] = value;
    return j.dump(2);
}

std::string greedy_trace_json(
    const Vector& x, const std::vector<std::pair<std::size_t, std::vector<IndexSet>>>& trace) {
    nlohmann::json j;
    j["vector"] = vector_literal(x);
    nlohmann::json rows = nlohmann::json::array();
    for (const auto& [m, sets] : trace) {
        nlohmann::json row;
        row["m"] = m;
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& s : sets) arr.push_back(set_json(s));
        row["greedy_sets"] = arr;
        rows.push_back(row);
    }
    j["trace"] = rows;
    return j.dump(2);
}

std::string csv_summary(const std::vector<CheckReport>& reports) {
    std::string out = "theorem_id,status,worst_ratio,bound_used\n";
    for (const auto& r : reports) {
        out += r.theorem_id;
        out += ",";
        out += r.pass ? "pass" : "fail";
        out += ",";
        out += fmt(r.worst_ratio);
        out += ",";
        out += fmt(r.bound_used);
        out += "\n";
    }
    return out;
}

Vector parse_vector_literal(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(), [](char c) { return c == ' '; }), t.end());
    if (t.empty() || t == "0") return {};
    std::vector<Entry> entries;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto colon = item.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("vector literal expects index:coefficient pairs, got '" +
                                        item + "'");
        Index idx;
        try {
            idx = std::stoll(item.substr(0, colon));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index in vector literal: '" + item + "'");
        }
        char* end = nullptr;
        std::string coef_text = item.substr(colon + 1);
        double coef = std::strtod(coef_text.c_str(), &end);
        if (end == coef_text.c_str() || *end != '\0')
            throw std::invalid_argument("bad coefficient in vector literal: '" + item + "'");
        entries.push_back({idx, coef});
    }
    return Vector(std::move(entries));
}

IndexSet parse_set_literal(const std::string& text) {
    std::string t = text;
    t.erase(std::remove_if(t.begin(), t.end(),
                           [](char c) { return c == ' ' || c == '{' || c == '}'; }),
            t.end());
    if (t.empty()) return {};
    std::vector<Index> elems;
    std::stringstream ss(t);
    std::string item;
    while (std::getline(ss, item, ',')) {
        try {
            elems.push_back(std::stoll(item));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad index in set literal: '" + item + "'");
        }
    }
    return IndexSet(std::move(elems));
}

}  // namespace greedylab

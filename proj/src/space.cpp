#include "greedylab/space.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <random>
#include <sstream>

#include "json.hpp"

namespace greedylab {

namespace {

double lp_norm_impl(std::span<const Entry> es, int p) {
    if (p == 1) {
        double s = 0.0;
        for (const auto& e : es) s += std::abs(e.coef);
        return s;
    }
    if (p == 2) {
        double s = 0.0;
        for (const auto& e : es) s += e.coef * e.coef;
        return std::sqrt(s);
    }
    double m = 0.0;
    for (const auto& e : es) m = std::max(m, std::abs(e.coef));
    return m;
}

double weighted_l1_impl(std::span<const Entry> es, const std::vector<double>& w) {
    double s = 0.0;
    for (const auto& e : es) {
        std::size_t pos = static_cast<std::size_t>(e.index - 1);
        double weight = pos < w.size() ? w[pos] : w.back();
        s += weight * std::abs(e.coef);
    }
    return s;
}

// Decreasing rearrangement against decreasing weights attains the sup
// over bijections (rearrangement inequality). Each group accumulates from
// its smallest term up, the same order as the count-based prefix sums, so
// indicator norms through sets and through counts agree bit for bit.
double counterexample_impl(std::span<const Entry> es, Index mirror_cap) {
    std::vector<double> heavy, light;
    heavy.reserve(es.size());
    light.reserve(es.size());
    for (const auto& e : es) {
        Index n = e.index;
        if (mirror_cap > 0) {
            if (n > mirror_cap)
                throw std::invalid_argument("mirrored counterexample norm needs support within the cap");
            n = mirror_cap + 1 - n;
        }
        (on_heavy_set(n) ? heavy : light).push_back(std::abs(e.coef));
    }
    std::sort(heavy.begin(), heavy.end(), std::greater<>());
    std::sort(light.begin(), light.end(), std::greater<>());
    double sum_heavy = 0.0;
    for (std::size_t k = heavy.size(); k-- > 0;)
        sum_heavy += heavy[k] / std::sqrt(static_cast<double>(k + 1));
    double sum_light = 0.0;
    for (std::size_t k = light.size(); k-- > 0;)
        sum_light += light[k] / static_cast<double>(k + 1);
    return sum_heavy + sum_light;
}

}  // namespace

double SpaceSpec::norm(std::span<const Entry> entries) const {
    switch (kind) {
        case SpaceKind::L1: return lp_norm_impl(entries, 1);
        case SpaceKind::L2: return lp_norm_impl(entries, 2);
        case SpaceKind::LInf: return lp_norm_impl(entries, 0);
        case SpaceKind::Weighted: return weighted_l1_impl(entries, weights);
        case SpaceKind::Counterexample: return counterexample_impl(entries, 0);
        case SpaceKind::CounterexampleMirrored: return counterexample_impl(entries, ambient_cap);
    }
    return 0.0;
}

SpaceSpec SpaceSpec::lp(int p, Index cap) {
    if (p != 1 && p != 2) throw std::invalid_argument("lp kind supports p = 1, 2 or inf");
    SpaceSpec s;
    s.name = p == 1 ? "l1" : "l2";
    s.kind = p == 1 ? SpaceKind::L1 : SpaceKind::L2;
    s.ambient_cap = cap;
    return s;
}

SpaceSpec SpaceSpec::lp_inf(Index cap) {
    SpaceSpec s;
    s.name = "linf";
    s.kind = SpaceKind::LInf;
    s.ambient_cap = cap;
    return s;
}

SpaceSpec SpaceSpec::weighted(std::string name, std::vector<double> w, Index cap) {
    if (w.empty()) throw std::invalid_argument("weighted space needs a nonempty weight list");
    for (double v : w)
        if (!(v > 0.0)) throw std::invalid_argument("weights must be positive");
    SpaceSpec s;
    s.name = std::move(name);
    s.kind = SpaceKind::Weighted;
    s.weights = std::move(w);
    s.ambient_cap = cap;
    return s;
}

SpaceSpec SpaceSpec::counterexample(Index cap, bool mirrored) {
    SpaceSpec s;
    s.name = mirrored ? "counterexample-mirrored" : "counterexample";
    s.kind = mirrored ? SpaceKind::CounterexampleMirrored : SpaceKind::Counterexample;
    s.ambient_cap = cap;
    return s;
}

namespace {

[[noreturn]] void bad_space(const std::string& what) {
    throw std::invalid_argument("space json: " + what);
}

}  // namespace

SpaceSpec SpaceSpec::from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        // Report the offending line and column, not just a byte offset.
        std::size_t line = 1, col = 1;
        for (std::size_t i = 0; i + 1 < e.byte && i < text.size(); ++i) {
            if (text[i] == '\n') { ++line; col = 1; } else { ++col; }
        }
        std::ostringstream msg;
        msg << "space json: parse error at line " << line << ", column " << col;
        throw std::invalid_argument(msg.str());
    }

    if (!j.is_object()) bad_space("document must be an object");
    for (const char* key : {"name", "kind", "ambient_cap"})
        if (!j.contains(key)) bad_space(std::string("missing required field '") + key + "'");
    if (!j["name"].is_string()) bad_space("'name' must be a string");
    if (!j["kind"].is_string()) bad_space("'kind' must be a string");
    if (!j["ambient_cap"].is_number_integer()) bad_space("'ambient_cap' must be an integer");
    Index cap = j["ambient_cap"].get<Index>();
    if (cap < 1) bad_space("'ambient_cap' must be at least 1");
    nlohmann::json params = j.value("params", nlohmann::json::object());
    if (!params.is_object()) bad_space("'params' must be an object");

    std::string kind = j["kind"].get<std::string>();
    SpaceSpec s;
    if (kind == "lp") {
        if (!params.contains("p")) bad_space("lp kind requires params.p");
        const auto& p = params["p"];
        if (p.is_string() && p.get<std::string>() == "inf") {
            s = lp_inf(cap);
        } else if (p.is_number_integer() && (p.get<int>() == 1 || p.get<int>() == 2)) {
            s = lp(p.get<int>(), cap);
        } else {
            bad_space("params.p must be 1, 2 or \"inf\"");
        }
    } else if (kind == "weighted") {
        if (!params.contains("weights") || !params["weights"].is_array())
            bad_space("weighted kind requires params.weights as an array");
        std::vector<double> w;
        for (const auto& v : params["weights"]) {
            if (!v.is_number()) bad_space("weights must be numbers");
            w.push_back(v.get<double>());
        }
        try {
            s = weighted(j["name"].get<std::string>(), std::move(w), cap);
        } catch (const std::invalid_argument& e) {
            bad_space(e.what());
        }
    } else if (kind == "counterexample") {
        s = counterexample(cap, params.value("mirrored", false));
    } else {
        bad_space("unknown kind '" + kind + "' (expected lp, weighted or counterexample)");
    }
    s.name = j["name"].get<std::string>();
    s.ambient_cap = cap;
    return s;
}

SpaceSpec SpaceSpec::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open space file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return from_json_text(buf.str());
}

std::string SpaceSpec::to_json() const {
    nlohmann::json j;
    j["name"] = name;
    j["ambient_cap"] = ambient_cap;
    nlohmann::json params = nlohmann::json::object();
    switch (kind) {
        case SpaceKind::L1: j["kind"] = "lp"; params["p"] = 1; break;
        case SpaceKind::L2: j["kind"] = "lp"; params["p"] = 2; break;
        case SpaceKind::LInf: j["kind"] = "lp"; params["p"] = "inf"; break;
        case SpaceKind::Weighted: j["kind"] = "weighted"; params["weights"] = weights; break;
        case SpaceKind::Counterexample: j["kind"] = "counterexample"; break;
        case SpaceKind::CounterexampleMirrored:
            j["kind"] = "counterexample";
            params["mirrored"] = true;
            break;
    }
    j["params"] = params;
    return j.dump(2);
}

double lp_norm(const Vector& x, double p) {
    if (p == 1.0) return lp_norm_impl(x.span(), 1);
    if (p == 2.0) return lp_norm_impl(x.span(), 2);
    if (std::isinf(p) && p > 0) return lp_norm_impl(x.span(), 0);
    throw std::invalid_argument("lp_norm supports p = 1, 2 or infinity");
}

double sqrt_weight_sum(std::int64_t a) {
    double s = 0.0;
    for (std::int64_t k = a; k >= 1; --k) s += 1.0 / std::sqrt(static_cast<double>(k));
    return s;
}

double harmonic_sum(std::int64_t b) {
    double s = 0.0;
    for (std::int64_t k = b; k >= 1; --k) s += 1.0 / static_cast<double>(k);
    return s;
}

double counterexample_indicator_norm(std::int64_t in_heavy, std::int64_t off_heavy) {
    if (in_heavy < 0 || off_heavy < 0)
        throw std::invalid_argument("membership counts must be nonnegative");
    return sqrt_weight_sum(in_heavy) + harmonic_sum(off_heavy);
}

double counterexample_norm(const Vector& x) {
    return counterexample_impl(x.span(), 0);
}

IndicatorNormTable::IndicatorNormTable(std::int64_t max_count) {
    std::size_t n = static_cast<std::size_t>(max_count) + 1;
    sqrt_prefix_.resize(n);
    harmonic_prefix_.resize(n);
    // Kahan compensation keeps the long ascending accumulation consistent
    // with the descending-order reference sums to well below 1e-12.
    double s = 0.0, se = 0.0, h = 0.0, he = 0.0;
    sqrt_prefix_[0] = 0.0;
    harmonic_prefix_[0] = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        double u = 1.0 / std::sqrt(static_cast<double>(k));
        double y = u - se;
        double t = s + y;
        se = (t - s) - y;
        s = t;
        sqrt_prefix_[k] = s;

        double v = 1.0 / static_cast<double>(k);
        y = v - he;
        t = h + y;
        he = (t - h) - y;
        h = t;
        harmonic_prefix_[k] = h;
    }
}

void validate_space(const SpaceSpec& space, std::uint64_t seed) {
    if (space.ambient_cap < 1) throw std::invalid_argument("ambient_cap must be at least 1");
    if (space.norm(Vector{}) != 0.0) throw std::invalid_argument("norm of zero must be 0");

    double lo = std::numeric_limits<double>::infinity();
    double hi = 0.0;
    for (Index n = 1; n <= space.ambient_cap; ++n) {
        double v = space.norm(Vector::unit(n));
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    if (!(lo > 0.0) || !std::isfinite(hi))
        throw std::invalid_argument("basis vectors must have norms bounded away from 0 and infinity");

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Index> pick_index(1, space.ambient_cap);
    std::uniform_real_distribution<double> pick_coef(-2.0, 2.0);
    auto random_vec = [&] {
        std::vector<Entry> es;
        std::uniform_int_distribution<int> pick_size(0, 5);
        int size = pick_size(rng);
        for (int i = 0; i < size; ++i) {
            double c = pick_coef(rng);
            if (c != 0.0) es.push_back({pick_index(rng), c});
        }
        std::sort(es.begin(), es.end(), [](auto& a, auto& b) { return a.index < b.index; });
        es.erase(std::unique(es.begin(), es.end(),
                             [](auto& a, auto& b) { return a.index == b.index; }),
                 es.end());
        return Vector(std::move(es));
    };

    for (int trial = 0; trial < 64; ++trial) {
        Vector x = random_vec();
        Vector y = random_vec();
        double t = pick_coef(rng);
        double nx = space.norm(x);
        if (!x.is_zero() && !(nx > 0.0))
            throw std::invalid_argument("norm must be positive on nonzero vectors");
        double lhs = space.norm(x.scaled(t));
        double rhs = std::abs(t) * nx;
        if (std::abs(lhs - rhs) > 1e-12 * std::max(1.0, std::abs(rhs)))
            throw std::invalid_argument("norm fails absolute homogeneity on a sampled vector");
        if (space.norm(x.plus(y)) > nx + space.norm(y) + 1e-12)
            throw std::invalid_argument("norm fails the triangle inequality on a sampled pair");
    }
}

std::vector<SpaceSpec> builtin_spaces() {
    std::vector<double> dec, inc;
    double w = 1.0;
    for (int i = 0; i < 16; ++i) {
        dec.push_back(w);
        w /= 2.0;
    }
    w = 0.5;
    for (int i = 0; i < 16; ++i) {
        inc.push_back(w);
        w *= 2.0;
    }
    return {
        SpaceSpec::lp(1),
        SpaceSpec::lp(2),
        SpaceSpec::lp_inf(),
        SpaceSpec::counterexample(),
        SpaceSpec::weighted("weighted-decreasing", std::move(dec)),
        SpaceSpec::weighted("weighted-increasing", std::move(inc)),
    };
}

}  // namespace greedylab

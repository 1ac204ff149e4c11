// Exact rational scale factors. Ceilings like ceil(lambda * m) are taken
// in integer arithmetic so no float rounding can shift a set size.
#ifndef GREEDYLAB_RATIONAL_HPP
#define GREEDYLAB_RATIONAL_HPP

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace greedylab {

struct Rational {
    std::int64_t num = 1;
    std::int64_t den = 1;

    Rational() = default;
    Rational(std::int64_t n, std::int64_t d) : num(n), den(d) {
        if (d <= 0 || n <= 0) throw std::invalid_argument("rational must have positive terms");
        std::int64_t g = std::gcd(n, d);
        num /= g;
        den /= g;
    }

    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) {
                return Rational(std::stoll(text), 1);
            }
            return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("cannot parse rational '" + text + "' (expected p or p/q)");
        } catch (const std::out_of_range&) {
            throw std::invalid_argument("rational '" + text + "' out of range");
        }
    }

    double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    bool at_least_one() const { return num >= den; }
    bool greater_than_one() const { return num > den; }

    // ceil(num/den * m) for m >= 0.
    std::int64_t ceil_mul(std::int64_t m) const {
        return (num * m + den - 1) / den;
    }

    // Least integer b with (num/den - 1) * span + count <= b; requires num >= den.
    std::int64_t min_competitor_size(std::int64_t span, std::int64_t count) const {
        std::int64_t excess = num - den;
        return (excess * span + den - 1) / den + count;
    }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }

    friend bool operator==(const Rational&, const Rational&) = default;
};

}  // namespace greedylab

#endif

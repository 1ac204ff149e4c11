// Sparse coefficient vectors over the canonical basis, finite index sets,
// and sign patterns. Everything here is an immutable value type.
#ifndef GREEDYLAB_CORE_HPP
#define GREEDYLAB_CORE_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace greedylab {

using Index = std::int64_t;

// One nonzero coordinate of a vector.
struct Entry {
    Index index = 0;
    double coef = 0.0;

    friend bool operator==(const Entry&, const Entry&) = default;
};

// Finite sorted set of positive integers.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<Index> xs) : elems_(xs) { normalize(); }
    explicit IndexSet(std::vector<Index> xs) : elems_(std::move(xs)) { normalize(); }

    static IndexSet interval(Index lo, Index hi) {
        IndexSet s;
        if (lo < 1) throw std::invalid_argument("interval must start at a positive index");
        for (Index i = lo; i <= hi; ++i) s.elems_.push_back(i);
        return s;
    }

    bool empty() const { return elems_.empty(); }
    std::size_t size() const { return elems_.size(); }
    Index min() const { return elems_.front(); }
    Index max() const { return elems_.back(); }
    bool contains(Index i) const {
        return std::binary_search(elems_.begin(), elems_.end(), i);
    }
    const std::vector<Index>& elements() const { return elems_; }
    auto begin() const { return elems_.begin(); }
    auto end() const { return elems_.end(); }

    // s(A): max - min + 1, 0 for the empty set.
    Index span_length() const {
        return elems_.empty() ? 0 : elems_.back() - elems_.front() + 1;
    }

    bool is_interval() const {
        return span_length() == static_cast<Index>(elems_.size());
    }

    IndexSet unite(const IndexSet& other) const {
        std::vector<Index> out;
        out.reserve(size() + other.size());
        std::set_union(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        IndexSet s;
        s.elems_ = std::move(out);
        return s;
    }

    IndexSet minus(const IndexSet& other) const {
        std::vector<Index> out;
        std::set_difference(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        IndexSet s;
        s.elems_ = std::move(out);
        return s;
    }

    IndexSet intersect(const IndexSet& other) const {
        std::vector<Index> out;
        std::set_intersection(begin(), end(), other.begin(), other.end(), std::back_inserter(out));
        IndexSet s;
        s.elems_ = std::move(out);
        return s;
    }

    bool disjoint_from(const IndexSet& other) const {
        auto a = begin();
        auto b = other.begin();
        while (a != end() && b != other.end()) {
            if (*a < *b) ++a;
            else if (*b < *a) ++b;
            else return false;
        }
        return true;
    }

    friend bool operator==(const IndexSet&, const IndexSet&) = default;
    // Lexicographic on the sorted element sequence; the empty set is least.
    friend bool operator<(const IndexSet& a, const IndexSet& b) {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

private:
    void normalize() {
        std::sort(elems_.begin(), elems_.end());
        elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
        if (!elems_.empty() && elems_.front() < 1)
            throw std::invalid_argument("index sets hold positive integers only");
    }

    std::vector<Index> elems_;
};

// "A > B": every element of A exceeds every element of B. Holds vacuously
// when either side is empty.
inline bool strictly_right_of(const IndexSet& a, const IndexSet& b) {
    if (a.empty() || b.empty()) return true;
    return a.min() > b.max();
}

// Assignment of +1/-1 to the elements of an index set.
class SignPattern {
public:
    SignPattern() = default;
    SignPattern(const IndexSet& domain, std::vector<int> signs) : domain_(domain), signs_(std::move(signs)) {
        if (signs_.size() != domain_.size())
            throw std::invalid_argument("sign pattern domain mismatch");
        for (int s : signs_)
            if (s != 1 && s != -1) throw std::invalid_argument("signs must be +1 or -1");
    }

    static SignPattern all_plus(const IndexSet& domain) {
        return SignPattern(domain, std::vector<int>(domain.size(), 1));
    }

    // Bits of `mask` select -1 positions in sorted domain order.
    static SignPattern from_mask(const IndexSet& domain, std::uint64_t mask) {
        std::vector<int> s(domain.size(), 1);
        for (std::size_t i = 0; i < s.size(); ++i)
            if (mask >> i & 1) s[i] = -1;
        return SignPattern(domain, std::move(s));
    }

    const IndexSet& domain() const { return domain_; }
    int at(std::size_t pos) const { return signs_[pos]; }
    std::size_t size() const { return signs_.size(); }

private:
    IndexSet domain_;
    std::vector<int> signs_;
};

// Finitely supported real sequence. Entries are sorted by index and never
// hold a zero coefficient; the zero vector has no entries.
class Vector {
public:
    Vector() = default;
    Vector(std::initializer_list<Entry> es) : entries_(es) { normalize(); }
    explicit Vector(std::vector<Entry> es) : entries_(std::move(es)) { normalize(); }

    static Vector unit(Index n) { return Vector{{n, 1.0}}; }

    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    const std::vector<Entry>& entries() const { return entries_; }
    std::span<const Entry> span() const { return entries_; }

    double coef(Index i) const {
        auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                                   [](const Entry& e, Index v) { return e.index < v; });
        return (it != entries_.end() && it->index == i) ? it->coef : 0.0;
    }

    IndexSet support() const {
        std::vector<Index> idx;
        idx.reserve(entries_.size());
        for (const auto& e : entries_) idx.push_back(e.index);
        return IndexSet(std::move(idx));
    }

    Index max_support() const { return entries_.empty() ? 0 : entries_.back().index; }
    Index min_support() const { return entries_.empty() ? 0 : entries_.front().index; }

    // Restriction P_A(x).
    Vector restrict_to(const IndexSet& a) const {
        std::vector<Entry> out;
        for (const auto& e : entries_)
            if (a.contains(e.index)) out.push_back(e);
        return Vector(std::move(out));
    }

    // x - P_A(x).
    Vector drop(const IndexSet& a) const {
        std::vector<Entry> out;
        for (const auto& e : entries_)
            if (!a.contains(e.index)) out.push_back(e);
        return Vector(std::move(out));
    }

    Vector scaled(double t) const {
        if (t == 0.0) return {};
        std::vector<Entry> out = entries_;
        for (auto& e : out) e.coef *= t;
        return Vector(std::move(out));
    }

    Vector plus(const Vector& other) const {
        std::vector<Entry> out;
        out.reserve(entries_.size() + other.entries_.size());
        auto a = entries_.begin();
        auto b = other.entries_.begin();
        while (a != entries_.end() || b != other.entries_.end()) {
            if (b == other.entries_.end() || (a != entries_.end() && a->index < b->index)) {
                out.push_back(*a++);
            } else if (a == entries_.end() || b->index < a->index) {
                out.push_back(*b++);
            } else {
                double c = a->coef + b->coef;
                if (c != 0.0) out.push_back({a->index, c});
                ++a;
                ++b;
            }
        }
        return Vector(std::move(out));
    }

    Vector minus(const Vector& other) const { return plus(other.scaled(-1.0)); }

    friend bool operator==(const Vector&, const Vector&) = default;

private:
    void normalize() {
        std::erase_if(entries_, [](const Entry& e) { return e.coef == 0.0; });
        std::sort(entries_.begin(), entries_.end(),
                  [](const Entry& a, const Entry& b) { return a.index < b.index; });
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (entries_[i].index < 1)
                throw std::invalid_argument("vector indices must be positive");
            if (i > 0 && entries_[i].index == entries_[i - 1].index)
                throw std::invalid_argument("duplicate index in vector literal");
        }
    }

    std::vector<Entry> entries_;
};

// 1_{eps A} = sum over A of eps_n e_n.
inline Vector indicator(const IndexSet& a, const SignPattern& eps) {
    if (eps.domain() != a)
        throw std::invalid_argument("sign pattern domain must equal the index set");
    std::vector<Entry> es;
    es.reserve(a.size());
    std::size_t pos = 0;
    for (Index i : a) es.push_back({i, static_cast<double>(eps.at(pos++))});
    return Vector(std::move(es));
}

inline Vector indicator(const IndexSet& a) {
    return indicator(a, SignPattern::all_plus(a));
}

inline double sup_norm(const Vector& x) {
    double m = 0.0;
    for (const auto& e : x.entries()) m = std::max(m, std::abs(e.coef));
    return m;
}

inline Index span_length(const IndexSet& a) { return a.span_length(); }

// x surrounds A: A is empty or supp(x) avoids [min A, max A] entirely.
inline bool surrounds(const Vector& x, const IndexSet& a) {
    if (a.empty()) return true;
    for (const auto& e : x.entries())
        if (e.index >= a.min() && e.index <= a.max()) return false;
    return true;
}

}  // namespace greedylab

#endif

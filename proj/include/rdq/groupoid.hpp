#pragma once

#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdq/text.hpp"

namespace rdq {

// Finite groupoid (Q, *) given by its Cayley table; rows index the left operand.
class Groupoid {
public:
    Groupoid(int order, std::vector<int> entries)
        : order_(order), table_(std::move(entries)) {
        if (order_ <= 0) throw std::invalid_argument("groupoid order must be positive");
        if (table_.size() != static_cast<std::size_t>(order_) * static_cast<std::size_t>(order_))
            throw std::invalid_argument("Cayley table size does not match order");
        for (int x : table_)
            if (x < 0 || x >= order_)
                throw std::invalid_argument("Cayley table entry out of range");
    }

    static Groupoid from_rows(const std::vector<std::vector<int>>& rows) {
        std::vector<int> flat;
        flat.reserve(rows.size() * rows.size());
        for (const auto& row : rows) {
            if (row.size() != rows.size())
                throw std::invalid_argument("Cayley table must be square");
            flat.insert(flat.end(), row.begin(), row.end());
        }
        return Groupoid(static_cast<int>(rows.size()), std::move(flat));
    }

    int order() const { return order_; }

    int at(int a, int b) const {
        return table_[static_cast<std::size_t>(a) * order_ + b];
    }

    const std::vector<int>& table() const { return table_; }

    bool operator==(const Groupoid&) const = default;

    // Text form: header "q <order>" followed by <order> rows of <order> elements.
    static Groupoid parse(std::istream& in) { return parse_lines(token_lines(in)); }
    static Groupoid parse(std::string_view text) { return parse_lines(token_lines(text)); }

    std::string to_text() const {
        std::string out = "q " + std::to_string(order_) + "\n";
        for (int a = 0; a < order_; ++a) {
            for (int b = 0; b < order_; ++b) {
                if (b) out += ' ';
                out += format_symbol(at(a, b), order_);
            }
            out += '\n';
        }
        return out;
    }

private:
    static Groupoid parse_lines(const std::vector<std::vector<std::string>>& lines) {
        if (lines.empty() || lines[0].size() != 2 || lines[0][0] != "q")
            throw parse_error("Cayley table must start with a 'q <order>' header");
        int q = parse_int(lines[0][1], "order");
        if (q <= 0) throw parse_error("order must be positive");
        if (lines.size() != static_cast<std::size_t>(q) + 1)
            throw parse_error("expected " + std::to_string(q) + " table rows, got " +
                              std::to_string(lines.size() - 1));
        std::vector<int> flat;
        flat.reserve(static_cast<std::size_t>(q) * q);
        for (int a = 0; a < q; ++a) {
            const auto& row = lines[static_cast<std::size_t>(a) + 1];
            if (row.size() != static_cast<std::size_t>(q))
                throw parse_error("row " + std::to_string(a) + " has " +
                                  std::to_string(row.size()) + " entries, expected " +
                                  std::to_string(q));
            for (const auto& tok : row) flat.push_back(parse_symbol(tok, q));
        }
        return Groupoid(q, std::move(flat));
    }

    int order_;
    std::vector<int> table_;
};

struct QuasigroupReport {
    bool is_left_quasigroup = false;   // every row is a permutation
    bool is_right_quasigroup = false;  // every column is a permutation
    bool is_quasigroup = false;
    bool is_idempotent = false;        // a*a == a for all a
};

inline QuasigroupReport classify(const Groupoid& g) {
    const int q = g.order();
    QuasigroupReport r;
    r.is_left_quasigroup = true;
    r.is_right_quasigroup = true;
    r.is_idempotent = true;
    std::vector<char> seen(static_cast<std::size_t>(q));
    for (int a = 0; a < q && r.is_left_quasigroup; ++a) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int b = 0; b < q; ++b) {
            if (seen[g.at(a, b)]) { r.is_left_quasigroup = false; break; }
            seen[g.at(a, b)] = 1;
        }
    }
    for (int b = 0; b < q && r.is_right_quasigroup; ++b) {
        std::fill(seen.begin(), seen.end(), 0);
        for (int a = 0; a < q; ++a) {
            if (seen[g.at(a, b)]) { r.is_right_quasigroup = false; break; }
            seen[g.at(a, b)] = 1;
        }
    }
    for (int a = 0; a < q; ++a)
        if (g.at(a, a) != a) { r.is_idempotent = false; break; }
    r.is_quasigroup = r.is_left_quasigroup && r.is_right_quasigroup;
    return r;
}

namespace detail {

inline std::vector<int> left_projection_table(int q) {
    std::vector<int> t(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) t[static_cast<std::size_t>(a) * q + b] = a;
    return t;
}

inline std::vector<int> right_projection_table(int q) {
    std::vector<int> t(static_cast<std::size_t>(q) * q);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) t[static_cast<std::size_t>(a) * q + b] = b;
    return t;
}

// One step of the derivative recurrence: entry (a,b) becomes
// prev2(a,b) * prev1(a,b), with * taken in the base groupoid.
inline std::vector<int> derive_step(const Groupoid& base,
                                    const std::vector<int>& prev2,
                                    const std::vector<int>& prev1) {
    std::vector<int> next(prev1.size());
    for (std::size_t i = 0; i < next.size(); ++i)
        next[i] = base.at(prev2[i], prev1[i]);
    return next;
}

inline bool table_is_quasigroup(int q, const std::vector<int>& t) {
    return classify(Groupoid(q, t)).is_quasigroup;
}

}  // namespace detail

// The n-th recursive derivative *_n:
//   a *_{-2} b = a,  a *_{-1} b = b,  a *_n b = (a *_{n-2} b) * (a *_{n-1} b).
inline Groupoid recursive_derivative(const Groupoid& g, int n) {
    if (n < -2) throw std::invalid_argument("derivative index must be >= -2");
    const int q = g.order();
    if (n == -2) return Groupoid(q, detail::left_projection_table(q));
    if (n == -1) return Groupoid(q, detail::right_projection_table(q));
    std::vector<int> prev2 = detail::left_projection_table(q);
    std::vector<int> prev1 = detail::right_projection_table(q);
    for (int i = 0; i <= n; ++i) {
        std::vector<int> next = detail::derive_step(g, prev2, prev1);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return Groupoid(q, std::move(prev1));
}

// True when *_0, ..., *_n are all quasigroups.
inline bool is_recursively_n_differentiable(const Groupoid& g, int n) {
    if (n < 0) throw std::invalid_argument("differentiability index must be >= 0");
    const int q = g.order();
    std::vector<int> prev2 = detail::left_projection_table(q);
    std::vector<int> prev1 = detail::right_projection_table(q);
    for (int i = 0; i <= n; ++i) {
        std::vector<int> next = detail::derive_step(g, prev2, prev1);
        if (!detail::table_is_quasigroup(q, next)) return false;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    return true;
}

struct DegreeResult {
    int degree = -1;          // largest n with *_0..*_n all quasigroups; -1 if *_0 is not
    bool cap_reached = false; // every derivative up to the cap was a quasigroup
    int cap = 0;
};

// Differentiability degree, scanning derivatives up to `cap` (default order^2).
// When cap_reached is set the true degree is only known to be >= cap.
inline DegreeResult differentiability_degree(const Groupoid& g, int cap = -1) {
    const int q = g.order();
    if (cap < 0) cap = q * q;
    DegreeResult res;
    res.cap = cap;
    std::vector<int> prev2 = detail::left_projection_table(q);
    std::vector<int> prev1 = detail::right_projection_table(q);
    for (int n = 0; n <= cap; ++n) {
        std::vector<int> next = detail::derive_step(g, prev2, prev1);
        if (!detail::table_is_quasigroup(q, next)) {
            res.degree = n - 1;
            return res;
        }
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    res.degree = cap;
    res.cap_reached = true;
    return res;
}

struct DerivativeChain {
    Groupoid base;
    std::vector<Groupoid> derivatives;  // *_0, *_1, ... up to the first failure or the cap
    int degree = -1;
    bool cap_reached = false;
};

inline DerivativeChain derivative_chain(const Groupoid& g, int cap = -1) {
    const int q = g.order();
    if (cap < 0) cap = q * q;
    DerivativeChain chain{g, {}, -1, false};
    std::vector<int> prev2 = detail::left_projection_table(q);
    std::vector<int> prev1 = detail::right_projection_table(q);
    for (int n = 0; n <= cap; ++n) {
        std::vector<int> next = detail::derive_step(g, prev2, prev1);
        bool ok = detail::table_is_quasigroup(q, next);
        chain.derivatives.emplace_back(q, next);
        if (!ok) {
            chain.degree = n - 1;
            return chain;
        }
        chain.degree = n;
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    chain.cap_reached = true;
    return chain;
}

}  // namespace rdq

#pragma once

#include <algorithm>
#include <compare>
#include <istream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rdq/groupoid.hpp"
#include "rdq/text.hpp"

namespace rdq {

namespace detail {

// Booth's least-rotation algorithm: index of the lexicographically
// smallest rotation of s, in O(|s|).
inline std::size_t least_rotation(const std::vector<int>& s) {
    const std::size_t n = s.size();
    std::vector<std::ptrdiff_t> f(2 * n, -1);
    std::size_t k = 0;
    for (std::size_t j = 1; j < 2 * n; ++j) {
        int sj = s[j % n];
        std::ptrdiff_t i = f[j - k - 1];
        while (i != -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j - i - 1;
            i = f[i];
        }
        if (i == -1 && sj != s[(k + i + 1) % n]) {
            if (sj < s[(k + i + 1) % n]) k = j;
            f[j - k] = -1;
        } else {
            f[j - k] = i + 1;
        }
    }
    return k % n;
}

inline std::vector<int> rotate_to(const std::vector<int>& s, std::size_t start) {
    std::vector<int> out(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) out[i] = s[(start + i) % s.size()];
    return out;
}

}  // namespace detail

// Cyclically ordered block of distinct points, stored with its smallest
// point first so equal cyclic orders compare equal.
class Block {
public:
    explicit Block(std::vector<int> points) : points_(std::move(points)) {
        if (points_.size() < 2)
            throw std::invalid_argument("block needs at least two points");
        auto min_it = std::min_element(points_.begin(), points_.end());
        std::rotate(points_.begin(), min_it, points_.end());
        std::vector<int> sorted = points_;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw std::invalid_argument("block points must be distinct");
        if (sorted.front() < 0)
            throw std::invalid_argument("block points must be nonnegative");
    }

    const std::vector<int>& points() const { return points_; }
    int size() const { return static_cast<int>(points_.size()); }
    int at(int i) const { return points_[static_cast<std::size_t>(i) % points_.size()]; }

    friend auto operator<=>(const Block&, const Block&) = default;

private:
    std::vector<int> points_;
};

// Ordered pairs of points t steps apart along the block's cyclic order.
inline std::vector<std::pair<int, int>> t_apart_pairs(const Block& block, int t) {
    const int k = block.size();
    if (t < 1 || t >= k)
        throw std::invalid_argument("pair distance must lie in [1, k-1]");
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) pairs.emplace_back(block.at(i), block.at(i + t));
    return pairs;
}

// Cyclic sequence that may repeat elements; canonical form is the
// lexicographically least rotation.
class Cycle {
public:
    explicit Cycle(std::vector<int> elements) {
        if (elements.empty()) throw std::invalid_argument("cycle must be nonempty");
        elements_ = detail::rotate_to(elements, detail::least_rotation(elements));
    }

    const std::vector<int>& elements() const { return elements_; }
    int length() const { return static_cast<int>(elements_.size()); }

    friend auto operator<=>(const Cycle&, const Cycle&) = default;

private:
    std::vector<int> elements_;
};

// (v, k, lambda)-Mendelsohn design candidate: structural checks only here;
// pair-coverage checks live in verify_design.
struct MendelsohnDesign {
    int v = 0;
    int k = 0;
    int lambda = 0;
    std::vector<Block> blocks;  // canonical and sorted

    static MendelsohnDesign make(int v, int k, int lambda, std::vector<Block> blocks) {
        if (v < 2) throw std::invalid_argument("design needs at least two points");
        if (k < 2 || k > v) throw std::invalid_argument("block size must lie in [2, v]");
        if (lambda < 1) throw std::invalid_argument("lambda must be positive");
        for (const Block& b : blocks) {
            if (b.size() != k)
                throw std::invalid_argument("all blocks must have size k");
            for (int p : b.points())
                if (p >= v) throw std::invalid_argument("block point out of range");
        }
        std::sort(blocks.begin(), blocks.end());
        return MendelsohnDesign{v, k, lambda, std::move(blocks)};
    }

    bool operator==(const MendelsohnDesign&) const = default;

    // Text form: header "v k lambda", then one block per line.
    static MendelsohnDesign parse(std::istream& in) { return parse_lines(token_lines(in)); }
    static MendelsohnDesign parse(std::string_view text) { return parse_lines(token_lines(text)); }

    std::string to_text() const {
        std::string out = std::to_string(v) + ' ' + std::to_string(k) + ' ' +
                          std::to_string(lambda) + '\n';
        for (const Block& b : blocks) {
            for (int i = 0; i < b.size(); ++i) {
                if (i) out += ' ';
                out += format_symbol(b.at(i), v);
            }
            out += '\n';
        }
        return out;
    }

private:
    static MendelsohnDesign parse_lines(const std::vector<std::vector<std::string>>& lines) {
        if (lines.empty() || lines[0].size() != 3)
            throw parse_error("design must start with a 'v k lambda' header");
        int v = parse_int(lines[0][0], "v");
        int k = parse_int(lines[0][1], "k");
        int lambda = parse_int(lines[0][2], "lambda");
        std::vector<Block> blocks;
        blocks.reserve(lines.size() - 1);
        for (std::size_t i = 1; i < lines.size(); ++i) {
            std::vector<int> pts;
            pts.reserve(lines[i].size());
            for (const auto& tok : lines[i]) pts.push_back(parse_symbol(tok, v));
            try {
                blocks.emplace_back(std::move(pts));
            } catch (const std::invalid_argument& e) {
                throw parse_error("bad block on line " + std::to_string(i + 1) + ": " + e.what());
            }
        }
        try {
            return make(v, k, lambda, std::move(blocks));
        } catch (const std::invalid_argument& e) {
            throw parse_error(e.what());
        }
    }
};

struct PairViolation {
    int t = 0;
    int a = 0;
    int b = 0;
    long count = 0;  // observed count; the target is lambda
};

struct DesignCheck {
    bool ok = false;
    bool pair_counts_ok = false;   // every ordered pair consecutive in exactly lambda blocks
    bool block_count_ok = false;   // |blocks| == lambda * v * (v-1) / k
    std::size_t block_count = 0;
    std::size_t expected_block_count = 0;
    std::vector<PairViolation> violations;  // consecutive (t = 1) pairs off target
};

namespace detail {

// Dense v*v matrix of t-apart pair counts across all blocks.
inline std::vector<long> pair_count_matrix(const MendelsohnDesign& d, int t) {
    std::vector<long> counts(static_cast<std::size_t>(d.v) * d.v, 0);
    for (const Block& b : d.blocks)
        for (auto [x, y] : t_apart_pairs(b, t))
            ++counts[static_cast<std::size_t>(x) * d.v + y];
    return counts;
}

inline std::vector<PairViolation> pair_violations(const MendelsohnDesign& d, int t) {
    auto counts = pair_count_matrix(d, t);
    std::vector<PairViolation> out;
    for (int a = 0; a < d.v; ++a)
        for (int b = 0; b < d.v; ++b) {
            if (a == b) continue;
            long c = counts[static_cast<std::size_t>(a) * d.v + b];
            if (c != d.lambda) out.push_back({t, a, b, c});
        }
    return out;
}

}  // namespace detail

inline DesignCheck verify_design(const MendelsohnDesign& d) {
    DesignCheck check;
    check.block_count = d.blocks.size();
    long pair_total = static_cast<long>(d.lambda) * d.v * (d.v - 1);
    check.expected_block_count =
        pair_total % d.k == 0 ? static_cast<std::size_t>(pair_total / d.k) : 0;
    check.block_count_ok =
        pair_total % d.k == 0 && check.block_count == check.expected_block_count;
    check.violations = detail::pair_violations(d, 1);
    check.pair_counts_ok = check.violations.empty();
    check.ok = check.pair_counts_ok && check.block_count_ok;
    return check;
}

struct PerfectnessReport {
    int max_perfect_l = 0;  // largest l with t = 1..l all exact; k-1 means perfect
    std::vector<std::vector<PairViolation>> per_t;  // index t-1 holds distance-t violations
};

inline PerfectnessReport perfectness(const MendelsohnDesign& d) {
    PerfectnessReport report;
    report.per_t.resize(static_cast<std::size_t>(d.k) - 1);
    bool clean = true;
    for (int t = 1; t <= d.k - 1; ++t) {
        report.per_t[static_cast<std::size_t>(t) - 1] = detail::pair_violations(d, t);
        if (clean && report.per_t[static_cast<std::size_t>(t) - 1].empty())
            report.max_perfect_l = t;
        else
            clean = false;
    }
    return report;
}

inline bool is_perfect(const MendelsohnDesign& d) {
    return perfectness(d).max_perfect_l == d.k - 1;
}

// Directed standard construction: a*a = a, and a*b = c whenever (a, b, c)
// appear consecutively in a block.  Requires a valid design with lambda = 1
// and k >= 3; the result is always an idempotent right quasigroup.
inline Groupoid directed_standard_construction(const MendelsohnDesign& d) {
    if (d.lambda != 1)
        throw std::invalid_argument("directed standard construction requires lambda = 1");
    if (d.k < 3)
        throw std::invalid_argument("directed standard construction requires k >= 3");
    if (!verify_design(d).ok)
        throw std::invalid_argument("directed standard construction requires a valid design");
    const int q = d.v;
    std::vector<int> table(static_cast<std::size_t>(q) * q, -1);
    for (int a = 0; a < q; ++a) table[static_cast<std::size_t>(a) * q + a] = a;
    for (const Block& b : d.blocks)
        for (int i = 0; i < d.k; ++i) {
            int x = b.at(i), y = b.at(i + 1), z = b.at(i + 2);
            int& cell = table[static_cast<std::size_t>(x) * q + y];
            if (cell != -1 && cell != z)
                throw internal_error("conflicting successor in a verified design");
            cell = z;
        }
    for (int x : table)
        if (x < 0) throw internal_error("uncovered pair in a verified design");
    Groupoid g(q, std::move(table));
    if (!classify(g).is_right_quasigroup)
        throw internal_error("directed standard construction must yield a right quasigroup");
    return g;
}

// Cycles of the sequences a, b, a*b, ... over all starting pairs; requires a
// right quasigroup.  Idempotent pairs (a, a) contribute the 1-cycle (a).
inline std::vector<Cycle> cyclic_decomposition(const Groupoid& g) {
    if (!classify(g).is_right_quasigroup)
        throw std::invalid_argument("cyclic decomposition requires a right quasigroup");
    const int q = g.order();
    const std::size_t step_guard = static_cast<std::size_t>(q) * q + 2;
    std::vector<Cycle> cycles;
    std::vector<char> visited(static_cast<std::size_t>(q) * q, 0);
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (visited[static_cast<std::size_t>(a) * q + b]) continue;
            std::vector<int> seq{a, b};
            int x = a, y = b;
            std::size_t steps = 0;
            while (true) {
                if (++steps > step_guard)
                    throw internal_error("cycle failed to close within order^2 steps");
                visited[static_cast<std::size_t>(x) * q + y] = 1;
                int z = g.at(x, y);
                seq.push_back(z);
                x = y;
                y = z;
                if (x == a && y == b) break;
            }
            seq.resize(seq.size() - 2);
            cycles.emplace_back(std::move(seq));
        }
    std::sort(cycles.begin(), cycles.end());
    return cycles;
}

// Characterization test: g arises from a (v, n+3, 1)-perfect Mendelsohn
// design via the directed standard construction iff g is an idempotent
// quasigroup, recursively n-differentiable, with a *_{n+1} b = a,
// a *_{n+2} b = b, and a *_d b != a for 0 <= d <= n on distinct a, b.
// When the conditions hold, the block set recovered from the cyclic
// decomposition is additionally verified to be such a design.
inline bool check_characterization(const Groupoid& g, int n) {
    if (n < 0) throw std::invalid_argument("characterization index must be >= 0");
    const int q = g.order();
    if (q < n + 3) return false;  // a design with k = n+3 blocks needs at least k points
    auto rep = classify(g);
    if (!rep.is_quasigroup || !rep.is_idempotent) return false;

    std::vector<std::vector<int>> derivs;  // *_0 .. *_{n+2}
    derivs.reserve(static_cast<std::size_t>(n) + 3);
    std::vector<int> prev2 = detail::left_projection_table(q);
    std::vector<int> prev1 = detail::right_projection_table(q);
    for (int i = 0; i <= n + 2; ++i) {
        std::vector<int> next = detail::derive_step(g, prev2, prev1);
        if (i <= n && !detail::table_is_quasigroup(q, next)) return false;
        derivs.push_back(next);
        prev2 = std::move(prev1);
        prev1 = std::move(next);
    }
    for (int a = 0; a < q; ++a)
        for (int b = 0; b < q; ++b) {
            if (a == b) continue;
            std::size_t idx = static_cast<std::size_t>(a) * q + b;
            if (derivs[static_cast<std::size_t>(n) + 1][idx] != a) return false;
            if (derivs[static_cast<std::size_t>(n) + 2][idx] != b) return false;
            for (int d = 0; d <= n; ++d)
                if (derivs[static_cast<std::size_t>(d)][idx] == a) return false;
        }

    // Cross-check: the non-trivial cycles must form a (q, n+3, 1)-PMD.
    const int k = n + 3;
    std::vector<Block> blocks;
    try {
        for (const Cycle& c : cyclic_decomposition(g)) {
            if (c.length() == 1) continue;
            if (c.length() != k)
                throw internal_error("characterized quasigroup has a cycle of wrong length");
            blocks.emplace_back(c.elements());
        }
        MendelsohnDesign d = MendelsohnDesign::make(q, k, 1, std::move(blocks));
        if (!verify_design(d).ok || perfectness(d).max_perfect_l != k - 1)
            throw internal_error("characterized quasigroup did not decompose into a perfect design");
    } catch (const std::invalid_argument& e) {
        throw internal_error(std::string("characterization decomposition failed: ") + e.what());
    }
    return true;
}

}  // namespace rdq

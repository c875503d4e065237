#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "rdq/data.hpp"
#include "rdq/design.hpp"
#include "rdq/exact_cover.hpp"
#include "rdq/groupoid.hpp"
#include "rdq/text.hpp"

namespace rdq {

// Difference-method scheme: base blocks are developed by x -> x+1 (mod m) on
// the residue points 0..m-1 while the fixed points m..m+s-1 stay put; extra
// blocks are taken as-is.
struct DevelopmentScheme {
    int residue_count = 0;
    int fixed_count = 0;
    std::vector<Block> base_blocks;
    std::vector<Block> extra_blocks;

    int points() const { return residue_count + fixed_count; }

    static DevelopmentScheme parse(std::string_view text) {
        DevelopmentScheme sch;
        bool have_m = false, have_s = false;
        for (const auto& line : token_lines(text)) {
            const std::string& head = line[0];
            if (head == "m" && line.size() == 2) {
                sch.residue_count = parse_int(line[1], "residue count");
                have_m = true;
            } else if (head == "s" && line.size() == 2) {
                sch.fixed_count = parse_int(line[1], "fixed count");
                have_s = true;
            } else if ((head == "base" || head == "extra") && line.size() >= 3) {
                if (!have_m || !have_s)
                    throw parse_error("scheme blocks must follow the m and s lines");
                std::vector<int> pts;
                pts.reserve(line.size() - 1);
                for (std::size_t i = 1; i < line.size(); ++i)
                    pts.push_back(parse_symbol(line[i], sch.points()));
                (head == "base" ? sch.base_blocks : sch.extra_blocks).emplace_back(std::move(pts));
            } else {
                throw parse_error("unrecognized scheme line starting with '" + head + "'");
            }
        }
        if (!have_m || !have_s || sch.residue_count < 1)
            throw parse_error("scheme needs m >= 1 and s");
        if (sch.base_blocks.empty() && sch.extra_blocks.empty())
            throw parse_error("scheme needs at least one block");
        return sch;
    }
};

// Expand a scheme into its full block list: m shifts of every base block
// plus the extra blocks.  Structural checks only; validity of the result is
// the caller's question.
inline MendelsohnDesign develop(const DevelopmentScheme& sch) {
    const int m = sch.residue_count;
    const int v = sch.points();
    int k = !sch.base_blocks.empty() ? sch.base_blocks[0].size() : sch.extra_blocks[0].size();
    std::vector<Block> blocks;
    blocks.reserve(sch.base_blocks.size() * static_cast<std::size_t>(m) + sch.extra_blocks.size());
    for (const Block& base : sch.base_blocks)
        for (int j = 0; j < m; ++j) {
            std::vector<int> pts;
            pts.reserve(base.points().size());
            for (int x : base.points()) pts.push_back(x < m ? (x + j) % m : x);
            blocks.emplace_back(std::move(pts));
        }
    blocks.insert(blocks.end(), sch.extra_blocks.begin(), sch.extra_blocks.end());
    return MendelsohnDesign::make(v, k, 1, std::move(blocks));
}

// The (26,5,1)-PMD obtained by developing the stored scheme; shape, pair
// coverage and perfectness are re-verified on every call.
inline MendelsohnDesign construct_26_pmd() {
    MendelsohnDesign d = develop(DevelopmentScheme::parse(data::blocks26));
    if (d.v != 26 || d.k != 5 || d.blocks.size() != 130)
        throw internal_error("order-26 design came out with the wrong shape");
    if (!verify_design(d).ok)
        throw internal_error("order-26 design failed pair verification");
    if (perfectness(d).max_perfect_l != 4)
        throw internal_error("order-26 design is not perfect");
    return d;
}

// The recursively 2-differentiable idempotent quasigroup of order 26; the
// table and its first two derivatives are checked against the stored copies.
inline Groupoid construct_26_quasigroup() {
    Groupoid g = directed_standard_construction(construct_26_pmd());
    if (g != Groupoid::parse(data::golden26_d0))
        throw internal_error("order-26 quasigroup drifted from the stored table");
    if (recursive_derivative(g, 1) != Groupoid::parse(data::golden26_d1))
        throw internal_error("first derivative drifted from the stored table");
    if (recursive_derivative(g, 2) != Groupoid::parse(data::golden26_d2))
        throw internal_error("second derivative drifted from the stored table");
    return g;
}

struct SearchOptions {
    std::size_t limit = 1;                         // stop after this many designs
    std::uint64_t node_cap = 50'000'000;           // options tried before giving up
    long max_pairs = 200;                          // admissible v*(v-1)
    std::uint64_t max_option_nodes = 20'000'000;   // candidate table size guard
    bool symmetry_break = true;                    // force the block (0,1,...,k-1)
};

struct SearchResult {
    std::vector<MendelsohnDesign> designs;
    bool complete = false;  // search space exhausted (nonexistence is proven)
    std::uint64_t nodes = 0;
};

// Exhaustive (v,k,1) Mendelsohn design search as an exact cover problem:
// one item per ordered pair and distance class, one option per cyclically
// reduced candidate block.  With symmetry breaking the block (0,1,...,k-1)
// is forced, which is harmless for existence questions since any design can
// be relabeled to contain it.
inline SearchResult search_pmd(int v, int k, bool require_perfect,
                               const SearchOptions& opt = {}) {
    if (v < 2 || k < 2 || k > v)
        throw std::invalid_argument("search needs 2 <= k <= v");
    const long pairs = static_cast<long>(v) * (v - 1);
    if (pairs > opt.max_pairs)
        throw std::invalid_argument("search limited to v*(v-1) <= " +
                                    std::to_string(opt.max_pairs));
    SearchResult result;
    if (pairs % k != 0) {  // the block count lambda*v*(v-1)/k must be integral
        result.complete = true;
        return result;
    }
    const int tcount = require_perfect ? k - 1 : 1;

    std::uint64_t candidates = 1;
    for (int i = 0; i < k; ++i) candidates = candidates * static_cast<std::uint64_t>(v - i);
    candidates /= static_cast<std::uint64_t>(k);  // v!/(v-k)!/k = C(v,k)*(k-1)!
    if (candidates * static_cast<std::uint64_t>(k) * static_cast<std::uint64_t>(tcount) >
        opt.max_option_nodes)
        throw std::length_error("candidate block table exceeds the search size guard");

    auto pair_index = [v](int a, int b) {
        return static_cast<long>(a) * (v - 1) + b - (b > a ? 1 : 0);
    };

    ExactCover cover(static_cast<int>(pairs) * tcount);
    std::vector<Block> pool;
    pool.reserve(static_cast<std::size_t>(candidates));
    std::vector<int> forced;

    std::vector<int> subset(static_cast<std::size_t>(k));
    std::iota(subset.begin(), subset.end(), 0);
    std::vector<int> items;
    items.reserve(static_cast<std::size_t>(k) * static_cast<std::size_t>(tcount));
    while (true) {
        std::vector<int> tail(subset.begin() + 1, subset.end());
        do {
            std::vector<int> pts{subset[0]};
            pts.insert(pts.end(), tail.begin(), tail.end());
            Block block(std::move(pts));
            items.clear();
            for (int t = 1; t <= tcount; ++t)
                for (auto [x, y] : t_apart_pairs(block, t))
                    items.push_back(static_cast<int>((t - 1) * pairs + pair_index(x, y)));
            int id = cover.add_option(items);
            if (opt.symmetry_break && forced.empty()) {
                bool canonical_first = true;
                for (int i = 0; i < k; ++i) canonical_first &= block.at(i) == i;
                if (canonical_first) forced.push_back(id);
            }
            pool.push_back(std::move(block));
        } while (std::next_permutation(tail.begin(), tail.end()));
        int pos = k - 1;
        while (pos >= 0 && subset[static_cast<std::size_t>(pos)] == v - k + pos) --pos;
        if (pos < 0) break;
        ++subset[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            subset[static_cast<std::size_t>(i)] = subset[static_cast<std::size_t>(i) - 1] + 1;
    }

    auto solved = cover.solve(opt.limit, opt.node_cap, forced);
    result.nodes = solved.nodes;
    result.complete = solved.complete;
    for (const auto& sol : solved.solutions) {
        std::vector<Block> blocks;
        blocks.reserve(sol.size());
        for (int id : sol) blocks.push_back(pool[static_cast<std::size_t>(id)]);
        result.designs.push_back(MendelsohnDesign::make(v, k, 1, std::move(blocks)));
    }
    return result;
}

// Existence rule for (v,k,1)-PMDs: a residue condition with exception sets,
// possibly scoped to one residue class.
struct BoundRule {
    int k = 0;
    int modulus = 0;
    int min_v = 0;
    std::vector<int> residues;
    std::vector<std::pair<int, int>> exception_values;        // (residue or -1, v)
    std::vector<std::tuple<int, int, int>> exception_ranges;  // (residue or -1, lo, hi)

    bool applies(int v) const {
        if (v < min_v) return false;
        const int r = v % modulus;
        if (std::find(residues.begin(), residues.end(), r) == residues.end()) return false;
        for (auto [res, value] : exception_values)
            if (value == v && (res == -1 || res == r)) return false;
        for (auto [res, lo, hi] : exception_ranges)
            if ((res == -1 || res == r) && lo <= v && v <= hi) return false;
        return true;
    }

    static BoundRule parse(std::string_view text, int k) {
        BoundRule rule;
        rule.k = k;
        for (const auto& line : token_lines(text)) {
            const std::string& head = line[0];
            if (head == "mod" && line.size() == 2) {
                rule.modulus = parse_int(line[1], "modulus");
            } else if (head == "min" && line.size() == 2) {
                rule.min_v = parse_int(line[1], "minimum order");
            } else if (head == "residues") {
                for (std::size_t i = 1; i < line.size(); ++i)
                    rule.residues.push_back(parse_int(line[i], "residue"));
            } else if (head == "except" && line.size() >= 4 && line[2] == ":") {
                const int res = line[1] == "*" ? -1 : parse_int(line[1], "residue");
                if (line[3] == "range") {
                    if (line.size() != 6) throw parse_error("range takes exactly two bounds");
                    rule.exception_ranges.emplace_back(res, parse_int(line[4], "range low"),
                                                       parse_int(line[5], "range high"));
                } else {
                    for (std::size_t i = 3; i < line.size(); ++i)
                        rule.exception_values.emplace_back(res, parse_int(line[i], "exception"));
                }
            } else {
                throw parse_error("unrecognized rule line starting with '" + head + "'");
            }
        }
        if (rule.modulus < 1 || rule.residues.empty())
            throw parse_error("rule needs a modulus and residues");
        return rule;
    }
};

// The known (v,k,1)-PMD existence rules for k = 4..7, largest k first.
inline const std::vector<BoundRule>& pmd_bound_rules() {
    static const std::vector<BoundRule> rules = [] {
        std::vector<BoundRule> r;
        r.push_back(BoundRule::parse(data::exceptions_k7, 7));
        r.push_back(BoundRule::parse(data::exceptions_k6, 6));
        r.push_back(BoundRule::parse("mod 5\nmin 5\nresidues 0 1\nexcept * : 6 10 15 20\n", 5));
        r.push_back(BoundRule::parse("mod 4\nmin 4\nresidues 0 1\nexcept * : 4 8\n", 4));
        return r;
    }();
    return rules;
}

struct DegreeBound {
    int degree = 0;
    std::string justification;
};

// Provable lower bound on the differentiability degree achievable at order
// q: a (q,k,1)-PMD yields degree k-3, and quasigroups exist at every order,
// so degree 0 is always available (and is in fact optimal at q = 2 and 6).
inline DegreeBound degree_lower_bound(int q) {
    if (q < 1) throw std::invalid_argument("order must be positive");
    for (const BoundRule& rule : pmd_bound_rules())
        if (rule.applies(q))
            return {rule.k - 3, "via k=" + std::to_string(rule.k) + " PMD rule"};
    if (q == 2 || q == 6) return {0, "quasigroup existence only; degree 0 is optimal here"};
    return {0, "quasigroup existence only"};
}

struct KnownDegreeCell {
    bool infinite = false;
    int value = 0;
    std::optional<int> old_value;  // superseded value, present on improved entries
};

// Reference table of best known degrees for orders 1..100, as stored.
inline const std::array<std::optional<KnownDegreeCell>, 101>& reference_degree_table() {
    static const std::array<std::optional<KnownDegreeCell>, 101> table = [] {
        std::array<std::optional<KnownDegreeCell>, 101> t;
        for (const auto& line : token_lines(data::known_degrees)) {
            if (line.size() != 2) throw parse_error("reference table rows are 'q cell'");
            const int q = parse_int(line[0], "order");
            if (q < 1 || q > 100) throw parse_error("reference table covers orders 1..100");
            KnownDegreeCell cell;
            const std::string& tok = line[1];
            if (tok == "inf") {
                cell.infinite = true;
            } else if (auto slash = tok.find('/'); slash != std::string::npos) {
                cell.value = parse_int(tok.substr(0, slash), "new degree");
                cell.old_value = parse_int(tok.substr(slash + 1), "old degree");
            } else {
                cell.value = parse_int(tok, "degree");
            }
            t[static_cast<std::size_t>(q)] = cell;
        }
        for (int q = 1; q <= 100; ++q)
            if (!t[static_cast<std::size_t>(q)])
                throw parse_error("reference table is missing an order");
        return t;
    }();
    return table;
}

struct BoundsTableEntry {
    int q = 0;
    int computed = 0;                    // degree_lower_bound(q)
    std::string justification;
    std::optional<KnownDegreeCell> reference; // stored cell, when q <= 100
    bool improved = false;               // reference marks this order as improved
};

// Bound table for orders 1..q_max.  Every entry the reference marks as
// improved must be reproduced exactly by the rules; anything else is a bug.
inline std::vector<BoundsTableEntry> bounds_report(int q_max) {
    if (q_max < 1) throw std::invalid_argument("order bound must be positive");
    std::vector<BoundsTableEntry> entries;
    entries.reserve(static_cast<std::size_t>(q_max));
    const auto& ref = reference_degree_table();
    for (int q = 1; q <= q_max; ++q) {
        BoundsTableEntry e;
        e.q = q;
        DegreeBound bound = degree_lower_bound(q);
        e.computed = bound.degree;
        e.justification = std::move(bound.justification);
        if (q <= 100) {
            e.reference = ref[static_cast<std::size_t>(q)];
            e.improved = e.reference->old_value.has_value();
            if (e.improved) {
                if (e.computed != e.reference->value)
                    throw internal_error("rules fail to reproduce the improved bound at order " +
                                         std::to_string(q));
                if (e.reference->value <= *e.reference->old_value)
                    throw internal_error("improved bound does not beat the old one at order " +
                                         std::to_string(q));
            }
        }
        entries.push_back(std::move(e));
    }
    return entries;
}

}  // namespace rdq

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <istream>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "rdq/groupoid.hpp"
#include "rdq/text.hpp"

namespace rdq {

using Word = std::vector<int>;

inline int hamming_distance(const Word& u, const Word& w) {
    if (u.size() != w.size())
        throw std::invalid_argument("Hamming distance needs words of equal length");
    int d = 0;
    for (std::size_t i = 0; i < u.size(); ++i) d += u[i] != w[i];
    return d;
}

inline constexpr std::uint64_t default_enumeration_cap = std::uint64_t(1) << 24;

// Recursion rule f : Q^k -> Q used to extend length-k seeds; a groupoid
// provides the k = 2 case with f = *.
class RecursionRule {
public:
    RecursionRule(int alphabet, int arity, std::vector<int> table)
        : alphabet_(alphabet), arity_(arity), table_(std::move(table)) {
        if (alphabet_ < 1) throw std::invalid_argument("alphabet size must be positive");
        if (arity_ < 1) throw std::invalid_argument("rule arity must be positive");
        std::uint64_t expected = 1;
        for (int i = 0; i < arity_; ++i) {
            if (expected > (std::uint64_t(1) << 40) / static_cast<std::uint64_t>(alphabet_))
                throw std::invalid_argument("rule table too large");
            expected *= static_cast<std::uint64_t>(alphabet_);
        }
        if (table_.size() != expected)
            throw std::invalid_argument("rule table size must be alphabet^arity");
        for (int x : table_)
            if (x < 0 || x >= alphabet_)
                throw std::invalid_argument("rule table entry out of range");
    }

    static RecursionRule from_groupoid(const Groupoid& g) {
        return RecursionRule(g.order(), 2, g.table());
    }

    int alphabet() const { return alphabet_; }
    int arity() const { return arity_; }

    int apply(std::span<const int> window) const {
        std::size_t idx = 0;
        for (int x : window) idx = idx * static_cast<std::size_t>(alphabet_) + static_cast<std::size_t>(x);
        return table_[idx];
    }

private:
    int alphabet_;
    int arity_;
    std::vector<int> table_;
};

// All q^k words of length n whose tail is determined by the rule applied to
// the previous k letters.  Seeds are enumerated in lexicographic order, so
// the output is sorted.  Refuses to build more than `cap` words.
inline std::vector<Word> generate_recursive_code(const RecursionRule& rule, int n,
                                                 std::uint64_t cap = default_enumeration_cap) {
    const int q = rule.alphabet();
    const int k = rule.arity();
    if (n < k) throw std::invalid_argument("code length must be at least the rule arity");
    std::uint64_t count = 1;
    for (int i = 0; i < k; ++i) {
        if (count > cap / static_cast<std::uint64_t>(q) + 1) count = cap + 1;
        else count *= static_cast<std::uint64_t>(q);
        if (count > cap)
            throw std::length_error("codebook q^k = " + std::to_string(q) + "^" +
                                    std::to_string(k) + " exceeds the enumeration cap " +
                                    std::to_string(cap));
    }
    std::vector<Word> code;
    code.reserve(static_cast<std::size_t>(count));
    Word seed(static_cast<std::size_t>(k), 0);
    while (true) {
        Word w = seed;
        w.reserve(static_cast<std::size_t>(n));
        for (int i = k; i < n; ++i)
            w.push_back(rule.apply(std::span<const int>(w).subspan(static_cast<std::size_t>(i - k),
                                                                   static_cast<std::size_t>(k))));
        code.push_back(std::move(w));
        int pos = k - 1;
        while (pos >= 0 && seed[static_cast<std::size_t>(pos)] == q - 1)
            seed[static_cast<std::size_t>(pos--)] = 0;
        if (pos < 0) break;
        ++seed[static_cast<std::size_t>(pos)];
    }
    return code;
}

// Exact minimum pairwise Hamming distance.  The pair scan may be split
// across threads; the result does not depend on the thread count.
inline int code_distance(const std::vector<Word>& code, unsigned threads = 1) {
    if (code.size() < 2)
        throw std::invalid_argument("code distance needs at least two words");
    const std::size_t n = code.size();
    const std::size_t len = code[0].size();
    for (const Word& w : code)
        if (w.size() != len)
            throw std::invalid_argument("code words must share one length");
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, static_cast<unsigned>(n - 1));

    auto scan_rows = [&](std::size_t begin, std::size_t end) {
        int best = static_cast<int>(len) + 1;
        for (std::size_t i = begin; i < end; ++i)
            for (std::size_t j = i + 1; j < n; ++j) {
                int d = 0;
                for (std::size_t p = 0; p < len && d < best; ++p)
                    d += code[i][p] != code[j][p];
                if (d < best) best = d;
            }
        return best;
    };

    if (threads <= 1) return scan_rows(0, n - 1);

    std::vector<int> partial(threads, static_cast<int>(len) + 1);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            // Stride rows so the triangular workload balances.
            int best = static_cast<int>(len) + 1;
            for (std::size_t i = t; i < n - 1; i += threads)
                best = std::min(best, scan_rows(i, i + 1));
            partial[t] = best;
        });
    for (auto& th : pool) th.join();
    return *std::min_element(partial.begin(), partial.end());
}

struct CodeSummary {
    int n = 0;                       // word length
    int q = 0;                       // alphabet size
    std::size_t size = 0;            // number of words
    double k_real = 0.0;             // log_q(size)
    std::optional<int> k_exact;      // set when size is an exact power of q
    int d = 0;                       // minimum distance
    double singleton_defect = 0.0;   // n - k + 1 - d
    bool is_mds = false;             // k integral and defect zero
};

inline CodeSummary summarize(const std::vector<Word>& code, int q, unsigned threads = 1) {
    if (q < 2) throw std::invalid_argument("alphabet size must be at least 2");
    if (code.size() < 2)
        throw std::invalid_argument("code summary needs at least two words");
    CodeSummary s;
    s.q = q;
    s.size = code.size();
    s.n = static_cast<int>(code[0].size());
    s.d = code_distance(code, threads);
    std::uint64_t power = 1;
    for (int k = 0; k <= s.n; ++k) {
        if (power == s.size) { s.k_exact = k; break; }
        if (power > s.size / static_cast<std::uint64_t>(q) + 1) break;
        power *= static_cast<std::uint64_t>(q);
    }
    s.k_real = std::log(static_cast<double>(s.size)) / std::log(static_cast<double>(q));
    if (s.k_exact) s.k_real = static_cast<double>(*s.k_exact);
    s.singleton_defect = static_cast<double>(s.n) - s.k_real + 1.0 - static_cast<double>(s.d);
    s.is_mds = s.k_exact.has_value() && s.d == s.n - *s.k_exact + 1;
    return s;
}

struct MdsEquivalenceEvidence {
    bool consistent = false;      // code_is_mds == differentiable
    bool code_is_mds = false;
    bool differentiable = false;  // recursively (n-3)-differentiable
    CodeSummary summary;
    DegreeResult degree;
};

// The length-n complete 2-recursive code over g is MDS exactly when g is
// recursively (n-3)-differentiable; returns both sides of the equivalence.
inline MdsEquivalenceEvidence mds_equivalence_crosscheck(const Groupoid& g, int n,
                                            std::uint64_t cap = default_enumeration_cap,
                                            unsigned threads = 1) {
    if (n < 3) throw std::invalid_argument("equivalence crosscheck needs code length >= 3");
    MdsEquivalenceEvidence ev;
    auto code = generate_recursive_code(RecursionRule::from_groupoid(g), n, cap);
    ev.summary = summarize(code, g.order(), threads);
    ev.code_is_mds = ev.summary.is_mds;
    ev.differentiable = is_recursively_n_differentiable(g, n - 3);
    ev.degree = differentiability_degree(g);
    ev.consistent = ev.code_is_mds == ev.differentiable;
    return ev;
}

// Word-list text form: header "<q> <n>", then one word per line.
inline std::string code_to_text(const std::vector<Word>& code, int q) {
    if (code.empty()) throw std::invalid_argument("cannot format an empty code");
    std::string out = std::to_string(q) + ' ' + std::to_string(code[0].size()) + '\n';
    for (const Word& w : code) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i) out += ' ';
            out += format_symbol(w[i], q);
        }
        out += '\n';
    }
    return out;
}

struct ParsedCode {
    int q = 0;
    int n = 0;
    std::vector<Word> words;
};

inline ParsedCode parse_code_lines(const std::vector<std::vector<std::string>>& lines) {
    if (lines.empty() || lines[0].size() != 2)
        throw parse_error("word list must start with a 'q n' header");
    ParsedCode parsed;
    parsed.q = parse_int(lines[0][0], "alphabet size");
    parsed.n = parse_int(lines[0][1], "word length");
    if (parsed.q < 1 || parsed.n < 1) throw parse_error("alphabet size and word length must be positive");
    for (std::size_t i = 1; i < lines.size(); ++i) {
        Word w;
        w.reserve(static_cast<std::size_t>(parsed.n));
        for (const auto& tok : lines[i]) w.push_back(parse_symbol(tok, parsed.q));
        if (w.size() != static_cast<std::size_t>(parsed.n))
            throw parse_error("word on line " + std::to_string(i + 1) + " has length " +
                              std::to_string(w.size()) + ", expected " + std::to_string(parsed.n));
        parsed.words.push_back(std::move(w));
    }
    return parsed;
}

inline ParsedCode parse_code(std::istream& in) { return parse_code_lines(token_lines(in)); }
inline ParsedCode parse_code(std::string_view text) { return parse_code_lines(token_lines(text)); }

}  // namespace rdq

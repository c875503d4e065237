#pragma once

#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace rdq {

// Exact-cover solver over dancing links (Knuth's Algorithm X).  Items are
// 0-based; each option is a set of distinct items.  Options may be forced
// into every solution, which prunes the search to covers extending them.
class ExactCover {
public:
    explicit ExactCover(int item_count) : item_count_(item_count) {
        if (item_count <= 0) throw std::invalid_argument("need at least one item");
        const int n = item_count;
        llink_.resize(static_cast<std::size_t>(n) + 1);
        rlink_.resize(static_cast<std::size_t>(n) + 1);
        len_.assign(static_cast<std::size_t>(n) + 1, 0);
        for (int i = 0; i <= n; ++i) {
            llink_[static_cast<std::size_t>(i)] = i == 0 ? n : i - 1;
            rlink_[static_cast<std::size_t>(i)] = i == n ? 0 : i + 1;
        }
        top_.resize(static_cast<std::size_t>(n) + 2);
        ulink_.resize(static_cast<std::size_t>(n) + 2);
        dlink_.resize(static_cast<std::size_t>(n) + 2);
        for (int i = 1; i <= n; ++i) {
            ulink_[static_cast<std::size_t>(i)] = i;
            dlink_[static_cast<std::size_t>(i)] = i;
        }
        top_[static_cast<std::size_t>(n) + 1] = 0;  // first spacer
        node_option_.assign(static_cast<std::size_t>(n) + 2, -1);
        last_spacer_ = n + 1;
    }

    int add_option(const std::vector<int>& items) {
        if (items.empty()) throw std::invalid_argument("option must cover something");
        for (int it : items)
            if (it < 0 || it >= item_count_)
                throw std::invalid_argument("option refers to an unknown item");
        const int opt = static_cast<int>(option_first_node_.size());
        const int first = static_cast<int>(top_.size());
        option_first_node_.push_back(first);
        for (int it : items) {
            const int i = it + 1;
            const int x = static_cast<int>(top_.size());
            const int u = ulink_[static_cast<std::size_t>(i)];
            top_.push_back(i);
            ulink_.push_back(u);
            dlink_.push_back(i);
            dlink_[static_cast<std::size_t>(u)] = x;
            ulink_[static_cast<std::size_t>(i)] = x;
            ++len_[static_cast<std::size_t>(i)];
            node_option_.resize(top_.size(), opt);
        }
        dlink_[static_cast<std::size_t>(last_spacer_)] = static_cast<int>(top_.size()) - 1;
        const int spacer = static_cast<int>(top_.size());
        top_.push_back(-(opt + 1));
        ulink_.push_back(first);
        dlink_.push_back(0);
        node_option_.resize(top_.size(), -1);
        last_spacer_ = spacer;
        return opt;
    }

    struct Result {
        std::vector<std::vector<int>> solutions;  // option ids, forced ones included
        bool complete = false;                    // search space fully explored
        std::uint64_t nodes = 0;                  // options tried
    };

    Result solve(std::size_t solution_limit = 1,
                 std::uint64_t node_cap = std::numeric_limits<std::uint64_t>::max(),
                 const std::vector<int>& forced_options = {}) {
        Result result;
        std::vector<char> seen(static_cast<std::size_t>(item_count_) + 1, 0);
        for (int opt : forced_options) {
            if (opt < 0 || opt >= static_cast<int>(option_first_node_.size()))
                throw std::invalid_argument("unknown forced option");
            for (int x = option_first_node_[static_cast<std::size_t>(opt)];
                 top_[static_cast<std::size_t>(x)] > 0; ++x) {
                if (seen[static_cast<std::size_t>(top_[static_cast<std::size_t>(x)])])
                    throw std::invalid_argument("forced options must be pairwise disjoint");
                seen[static_cast<std::size_t>(top_[static_cast<std::size_t>(x)])] = 1;
            }
        }
        std::vector<int> chosen(forced_options);
        for (int opt : forced_options)
            for (int x = option_first_node_[static_cast<std::size_t>(opt)];
                 top_[static_cast<std::size_t>(x)] > 0; ++x)
                cover(top_[static_cast<std::size_t>(x)]);
        bool aborted = false;
        search(result, chosen, solution_limit, node_cap, aborted);
        for (std::size_t r = forced_options.size(); r-- > 0;) {
            int opt = forced_options[r];
            int last = option_first_node_[static_cast<std::size_t>(opt)];
            while (top_[static_cast<std::size_t>(last) + 1] > 0) ++last;
            for (int x = last; x >= option_first_node_[static_cast<std::size_t>(opt)]; --x)
                uncover(top_[static_cast<std::size_t>(x)]);
        }
        result.complete = !aborted;
        return result;
    }

private:
    void cover(int i) {
        for (int p = dlink_[static_cast<std::size_t>(i)]; p != i;
             p = dlink_[static_cast<std::size_t>(p)])
            hide(p);
        const int l = llink_[static_cast<std::size_t>(i)];
        const int r = rlink_[static_cast<std::size_t>(i)];
        rlink_[static_cast<std::size_t>(l)] = r;
        llink_[static_cast<std::size_t>(r)] = l;
    }

    void hide(int p) {
        int q = p + 1;
        while (q != p) {
            const int x = top_[static_cast<std::size_t>(q)];
            const int u = ulink_[static_cast<std::size_t>(q)];
            const int d = dlink_[static_cast<std::size_t>(q)];
            if (x <= 0) {
                q = u;  // spacer: wrap to the option's first node
            } else {
                dlink_[static_cast<std::size_t>(u)] = d;
                ulink_[static_cast<std::size_t>(d)] = u;
                --len_[static_cast<std::size_t>(x)];
                ++q;
            }
        }
    }

    void uncover(int i) {
        const int l = llink_[static_cast<std::size_t>(i)];
        const int r = rlink_[static_cast<std::size_t>(i)];
        rlink_[static_cast<std::size_t>(l)] = i;
        llink_[static_cast<std::size_t>(r)] = i;
        for (int p = ulink_[static_cast<std::size_t>(i)]; p != i;
             p = ulink_[static_cast<std::size_t>(p)])
            unhide(p);
    }

    void unhide(int p) {
        int q = p - 1;
        while (q != p) {
            const int x = top_[static_cast<std::size_t>(q)];
            const int u = ulink_[static_cast<std::size_t>(q)];
            const int d = dlink_[static_cast<std::size_t>(q)];
            if (x <= 0) {
                q = d;  // spacer: wrap to the option's last node
            } else {
                dlink_[static_cast<std::size_t>(u)] = q;
                ulink_[static_cast<std::size_t>(d)] = q;
                ++len_[static_cast<std::size_t>(x)];
                --q;
            }
        }
    }

    void search(Result& result, std::vector<int>& chosen, std::size_t solution_limit,
                std::uint64_t node_cap, bool& aborted) {
        if (aborted || result.solutions.size() >= solution_limit) return;
        if (rlink_[0] == 0) {
            result.solutions.push_back(chosen);
            return;
        }
        int item = 0;
        int best = std::numeric_limits<int>::max();
        for (int i = rlink_[0]; i != 0; i = rlink_[static_cast<std::size_t>(i)])
            if (len_[static_cast<std::size_t>(i)] < best) {
                best = len_[static_cast<std::size_t>(i)];
                item = i;
            }
        if (best == 0) return;
        cover(item);
        for (int p = dlink_[static_cast<std::size_t>(item)]; p != item;
             p = dlink_[static_cast<std::size_t>(p)]) {
            if (++result.nodes > node_cap) { aborted = true; break; }
            for (int q = p + 1; q != p;) {
                const int x = top_[static_cast<std::size_t>(q)];
                if (x <= 0) q = ulink_[static_cast<std::size_t>(q)];
                else { cover(x); ++q; }
            }
            chosen.push_back(node_option_[static_cast<std::size_t>(p)]);
            search(result, chosen, solution_limit, node_cap, aborted);
            chosen.pop_back();
            for (int q = p - 1; q != p;) {
                const int x = top_[static_cast<std::size_t>(q)];
                if (x <= 0) q = dlink_[static_cast<std::size_t>(q)];
                else { uncover(x); --q; }
            }
            if (aborted || result.solutions.size() >= solution_limit) break;
        }
        uncover(item);
    }

    int item_count_;
    int last_spacer_;
    std::vector<int> llink_, rlink_, len_;
    std::vector<int> top_, ulink_, dlink_;
    std::vector<int> node_option_;       // -1 for spacers and item headers
    std::vector<int> option_first_node_;
};

}  // namespace rdq

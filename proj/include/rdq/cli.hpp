#pragma once

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rdq/code.hpp"
#include "rdq/construction.hpp"
#include "rdq/design.hpp"
#include "rdq/groupoid.hpp"
#include "rdq/text.hpp"

namespace rdq::cli {

namespace detail {

inline std::string slurp(const std::string& path, std::istream& stdin_stream) {
    std::ostringstream buffer;
    if (path == "-") {
        buffer << stdin_stream.rdbuf();
    } else {
        std::ifstream file(path);
        if (!file) throw parse_error("cannot open '" + path + "'");
        buffer << file.rdbuf();
    }
    return buffer.str();
}

inline void spill(const std::string& path, const std::string& content) {
    std::ofstream file(path);
    if (!file) throw parse_error("cannot write '" + path + "'");
    file << content;
    if (!file) throw parse_error("write to '" + path + "' failed");
}

inline std::string fmt_real(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

inline std::string fmt_dim(const CodeSummary& s) {
    return s.k_exact ? std::to_string(*s.k_exact) : fmt_real(s.k_real);
}

}  // namespace detail

// Dispatch one invocation.  Exit codes: 0 success / property holds,
// 1 property fails or nothing found, 2 usage/input/resource error,
// 3 internal invariant violated.
inline int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"recursively differentiable quasigroups, Mendelsohn designs, recursive MDS codes"};
    app.require_subcommand(1);
    unsigned threads = 1;
    app.add_option("--threads", threads, "threads for distance scans (0 = all cores)");

    std::vector<std::pair<const CLI::App*, std::function<int()>>> actions;
    auto on = [&actions](CLI::App* sub, std::function<int()> fn) {
        sub->fallthrough();  // global options may follow the subcommand
        actions.emplace_back(sub, std::move(fn));
    };

    {
        auto* sub = app.add_subcommand("classify", "test whether a Cayley table is a quasigroup");
        auto file = std::make_shared<std::string>();
        sub->add_option("file", *file, "Cayley table ('-' for stdin)")->required();
        on(sub, [&, file] {
            Groupoid g = Groupoid::parse(detail::slurp(*file, in));
            auto rep = classify(g);
            out << (rep.is_quasigroup ? "OK" : "FAIL") << " q=" << g.order()
                << " left=" << rep.is_left_quasigroup << " right=" << rep.is_right_quasigroup
                << " quasigroup=" << rep.is_quasigroup << " idempotent=" << rep.is_idempotent
                << "\n";
            return rep.is_quasigroup ? 0 : 1;
        });
    }
    {
        auto* sub = app.add_subcommand("derive", "print the n-th recursive derivative");
        auto file = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        sub->add_option("file", *file, "Cayley table ('-' for stdin)")->required();
        sub->add_option("--n", *n, "derivative index (>= -2)")->required();
        on(sub, [&, file, n] {
            Groupoid g = Groupoid::parse(detail::slurp(*file, in));
            Groupoid d = recursive_derivative(g, *n);
            err << "OK q=" << g.order() << " n=" << *n << "\n";
            out << d.to_text();
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand("degree", "compute the differentiability degree");
        auto file = std::make_shared<std::string>();
        auto cap = std::make_shared<int>(-1);
        sub->add_option("file", *file, "Cayley table ('-' for stdin)")->required();
        sub->add_option("--cap", *cap, "scan derivatives up to this index (default order^2)");
        on(sub, [&, file, cap] {
            Groupoid g = Groupoid::parse(detail::slurp(*file, in));
            DegreeResult res = differentiability_degree(g, *cap);
            if (res.degree < 0) {
                out << "FAIL degree=-1 cap=" << res.cap << " (not a quasigroup)\n";
                return 1;
            }
            if (res.cap_reached)
                out << "OK degree>=" << res.degree << " cap=" << res.cap << " cap-reached\n";
            else
                out << "OK degree=" << res.degree << " cap=" << res.cap << "\n";
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand("check-design", "verify a Mendelsohn design");
        auto file = std::make_shared<std::string>();
        auto perfect = std::make_shared<int>(-2);
        sub->add_option("file", *file, "design file ('-' for stdin)")->required();
        sub->add_option(
               "--perfect",
               [perfect](const CLI::results_t& res) {
                   *perfect = res.empty() || res[0].empty() || res[0] == "true"
                                  ? -2
                                  : parse_int(res[0], "l");
                   return true;
               },
               "also require l-perfection (default when given: l = k-1)")
            ->expected(0, 1);
        on(sub, [&, sub, file, perfect] {
            MendelsohnDesign d = MendelsohnDesign::parse(detail::slurp(*file, in));
            DesignCheck check = verify_design(d);
            PerfectnessReport perf = perfectness(d);
            int want_l = -1;
            if (sub->count("--perfect")) want_l = *perfect == -2 ? d.k - 1 : *perfect;
            bool pass = check.ok && perf.max_perfect_l >= want_l;
            out << (pass ? "OK" : "FAIL") << " v=" << d.v << " k=" << d.k
                << " lambda=" << d.lambda << " blocks=" << check.block_count
                << " expected_blocks=" << check.expected_block_count << " valid=" << check.ok
                << " max_perfect_l=" << perf.max_perfect_l << "\n";
            std::size_t shown = 0;
            for (const auto& per_t : perf.per_t)
                for (const PairViolation& viol : per_t) {
                    if (++shown > 10) break;
                    out << "  t=" << viol.t << " pair (" << format_symbol(viol.a, d.v) << ","
                        << format_symbol(viol.b, d.v) << ") count=" << viol.count
                        << " want=" << d.lambda << "\n";
                }
            return pass ? 0 : 1;
        });
    }
    {
        auto* sub = app.add_subcommand("construct",
                                       "directed standard construction from a design");
        auto file = std::make_shared<std::string>();
        sub->add_option("file", *file, "design file ('-' for stdin)")->required();
        on(sub, [&, file] {
            MendelsohnDesign d = MendelsohnDesign::parse(detail::slurp(*file, in));
            Groupoid g = directed_standard_construction(d);
            err << "OK q=" << g.order() << "\n";
            out << g.to_text();
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand("decompose", "cyclic decomposition of a right quasigroup");
        auto file = std::make_shared<std::string>();
        sub->add_option("file", *file, "Cayley table ('-' for stdin)")->required();
        on(sub, [&, file] {
            Groupoid g = Groupoid::parse(detail::slurp(*file, in));
            auto cycles = cyclic_decomposition(g);
            std::size_t ones = 0;
            for (const Cycle& c : cycles) ones += c.length() == 1;
            err << "OK q=" << g.order() << " cycles=" << cycles.size() << " one_cycles=" << ones
                << "\n";
            for (const Cycle& c : cycles) {
                for (int i = 0; i < c.length(); ++i) {
                    if (i) out << ' ';
                    out << format_symbol(c.elements()[static_cast<std::size_t>(i)], g.order());
                }
                out << "\n";
            }
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand(
            "characterize", "test whether a quasigroup arises from a (v,n+3,1)-PMD");
        auto file = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        sub->add_option("file", *file, "Cayley table ('-' for stdin)")->required();
        sub->add_option("--n", *n, "differentiability index")->required();
        on(sub, [&, file, n] {
            Groupoid g = Groupoid::parse(detail::slurp(*file, in));
            bool holds = check_characterization(g, *n);
            out << (holds ? "OK" : "FAIL") << " q=" << g.order() << " n=" << *n
                << " characterization=" << holds << "\n";
            return holds ? 0 : 1;
        });
    }
    {
        auto* sub = app.add_subcommand("gen-code", "emit the complete 2-recursive code");
        auto file = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto cap = std::make_shared<std::uint64_t>(default_enumeration_cap);
        sub->add_option("file", *file, "Cayley table ('-' for stdin)")->required();
        sub->add_option("--n", *n, "code length (>= 2)")->required();
        sub->add_option("--cap", *cap, "refuse codebooks larger than this");
        on(sub, [&, file, n, cap] {
            Groupoid g = Groupoid::parse(detail::slurp(*file, in));
            auto code = generate_recursive_code(RecursionRule::from_groupoid(g), *n, *cap);
            err << "OK q=" << g.order() << " n=" << *n << " words=" << code.size() << "\n";
            out << code_to_text(code, g.order());
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand("check-mds", "summarize a word list and test MDS-ness");
        auto file = std::make_shared<std::string>();
        sub->add_option("file", *file, "word list ('-' for stdin)")->required();
        on(sub, [&, file] {
            ParsedCode parsed = parse_code(detail::slurp(*file, in));
            CodeSummary s = summarize(parsed.words, parsed.q, threads);
            out << (s.is_mds ? "OK" : "FAIL") << " q=" << s.q << " n=" << s.n
                << " size=" << s.size << " k=" << detail::fmt_dim(s) << " d=" << s.d
                << " defect=" << detail::fmt_real(s.singleton_defect) << " mds=" << s.is_mds
                << "\n";
            return s.is_mds ? 0 : 1;
        });
    }
    {
        auto* sub = app.add_subcommand(
            "mds-equiv", "cross-check MDS-ness against recursive differentiability");
        auto file = std::make_shared<std::string>();
        auto n = std::make_shared<int>(0);
        auto cap = std::make_shared<std::uint64_t>(default_enumeration_cap);
        sub->add_option("file", *file, "Cayley table ('-' for stdin)")->required();
        sub->add_option("--n", *n, "code length (>= 3)")->required();
        sub->add_option("--cap", *cap, "refuse codebooks larger than this");
        on(sub, [&, file, n, cap] {
            Groupoid g = Groupoid::parse(detail::slurp(*file, in));
            MdsEquivalenceEvidence ev = mds_equivalence_crosscheck(g, *n, *cap, threads);
            out << (ev.consistent ? "OK" : "FAIL") << " q=" << g.order() << " n=" << *n
                << " mds=" << ev.code_is_mds << " differentiable=" << ev.differentiable
                << " size=" << ev.summary.size << " d=" << ev.summary.d
                << " k=" << detail::fmt_dim(ev.summary) << "\n";
            if (!ev.consistent) {
                err << "internal error: the MDS property and recursive differentiability "
                       "disagree at q="
                    << g.order() << " n=" << *n << " (degree "
                    << (ev.degree.cap_reached ? ">=" : "=") << ev.degree.degree
                    << ", defect=" << detail::fmt_real(ev.summary.singleton_defect) << ")\n";
                return 3;
            }
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand("construct26",
                                       "the recursively 2-differentiable quasigroup of order 26");
        auto derivative = std::make_shared<int>(0);
        sub->add_option("--derivative", *derivative, "emit this derivative instead (>= 0)");
        on(sub, [&, derivative] {
            if (*derivative < 0) throw std::invalid_argument("derivative index must be >= 0");
            Groupoid g = construct_26_quasigroup();
            Groupoid table = *derivative == 0 ? g : recursive_derivative(g, *derivative);
            err << "OK q=26 derivative=" << *derivative << "\n";
            out << table.to_text();
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand("bound", "lower bound on the degree at one order");
        auto q = std::make_shared<int>(0);
        sub->add_option("q", *q, "order")->required();
        on(sub, [&, q] {
            DegreeBound b = degree_lower_bound(*q);
            out << b.degree << " (" << b.justification << ")\n";
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand("bounds-report", "degree lower bounds for orders 1..max");
        auto max_q = std::make_shared<int>(100);
        sub->add_option("--max", *max_q, "largest order to report");
        on(sub, [&, max_q] {
            auto entries = bounds_report(*max_q);
            std::size_t improved = 0;
            for (const auto& e : entries) improved += e.improved;
            out << "OK max=" << *max_q << " improved=" << improved << "\n";
            for (const auto& e : entries) {
                out << "q=" << e.q << " computed=" << e.computed;
                if (e.reference) {
                    out << " known=";
                    if (e.reference->infinite) out << "inf";
                    else out << e.reference->value;
                    if (e.reference->old_value) out << " old=" << *e.reference->old_value;
                }
                out << " (" << e.justification << ")";
                if (e.improved) out << " improved";
                out << "\n";
            }
            return 0;
        });
    }
    {
        auto* sub = app.add_subcommand("search-pmd", "exhaustive (v,k,1) design search");
        auto v = std::make_shared<int>(0);
        auto k = std::make_shared<int>(0);
        auto perfect = std::make_shared<bool>(false);
        auto opts = std::make_shared<SearchOptions>();
        auto out_path = std::make_shared<std::string>();
        sub->add_option("v", *v, "number of points")->required();
        sub->add_option("k", *k, "block size")->required();
        sub->add_flag("--perfect", *perfect, "require a perfect design");
        sub->add_option("--limit", opts->limit, "stop after this many designs");
        sub->add_option("--node-cap", opts->node_cap, "search nodes before giving up");
        sub->add_option("--out", *out_path, "write the first design found to this file");
        on(sub, [&, v, k, perfect, opts, out_path] {
            SearchResult res = search_pmd(*v, *k, *perfect, *opts);
            err << "nodes=" << res.nodes << "\n";
            if (!res.designs.empty()) {
                out << "OK found=" << res.designs.size() << " complete=" << res.complete
                    << " nodes=" << res.nodes << "\n";
                if (!out_path->empty()) detail::spill(*out_path, res.designs[0].to_text());
                return 0;
            }
            if (res.complete) {
                out << "NONE (complete)\n";
                return 1;
            }
            out << "NONE (capped)\n";
            return 2;
        });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    try {
        for (auto& [sub, fn] : actions)
            if (app.got_subcommand(sub)) return fn();
        err << "error: no subcommand\n";
        return 2;
    } catch (const internal_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace rdq::cli

#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "rdq/data.hpp"
#include "rdq/groupoid.hpp"
#include "support/oracles.hpp"

using rdq::Groupoid;

TEST_CASE("Cayley text round-trips byte for byte") {
    for (std::string_view text : {rdq::data::golden26_d0, rdq::data::golden26_d1,
                                  rdq::data::golden26_d2}) {
        Groupoid g = Groupoid::parse(text);
        REQUIRE(g.order() == 26);
        REQUIRE(g.to_text() == text);
    }
}

TEST_CASE("Cayley parser accepts comments, decimal cells and stream input") {
    std::istringstream in("# cyclic group\nq 3\n0 1 2\n1 2 0  # wraps\n\n2 0 1\n");
    Groupoid g = Groupoid::parse(in);
    REQUIRE(g == oracle::cyclic_group(3));

    Groupoid z40 = oracle::cyclic_group(40);
    REQUIRE(Groupoid::parse(z40.to_text()) == z40);  // q > 36 uses decimal cells
}

TEST_CASE("Cayley parser rejects malformed input") {
    REQUIRE_THROWS_AS(Groupoid::parse("p 3\n0 1 2\n1 2 0\n2 0 1\n"), rdq::parse_error);
    REQUIRE_THROWS_AS(Groupoid::parse("q 3\n0 1 2\n1 2 0\n"), rdq::parse_error);
    REQUIRE_THROWS_AS(Groupoid::parse("q 3\n0 1 2\n1 2 0\n2 0 1 0\n"), rdq::parse_error);
    REQUIRE_THROWS_AS(Groupoid::parse("q 3\n0 1 3\n1 2 0\n2 0 1\n"), rdq::parse_error);
    REQUIRE_THROWS_AS(Groupoid::parse("q 3\n0 1 ?\n1 2 0\n2 0 1\n"), rdq::parse_error);
    REQUIRE_THROWS_AS(Groupoid::parse("q 0\n"), rdq::parse_error);
    REQUIRE_THROWS_AS(Groupoid::parse(""), rdq::parse_error);
}

TEST_CASE("Groupoid constructor validates the table") {
    REQUIRE_THROWS_AS(Groupoid(2, {0, 1, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Groupoid(2, {0, 1, 1, 2}), std::invalid_argument);
    REQUIRE_THROWS_AS(Groupoid(0, {}), std::invalid_argument);
    REQUIRE_THROWS_AS(Groupoid::from_rows({{0, 1}, {1}}), std::invalid_argument);
}

TEST_CASE("classify separates the one-sided cases") {
    auto left_proj = rdq::recursive_derivative(oracle::cyclic_group(4), -2);
    auto rep = rdq::classify(left_proj);  // constant rows, permutation columns
    REQUIRE_FALSE(rep.is_left_quasigroup);
    REQUIRE(rep.is_right_quasigroup);
    REQUIRE_FALSE(rep.is_quasigroup);
    REQUIRE(rep.is_idempotent);

    auto right_proj = rdq::recursive_derivative(oracle::cyclic_group(4), -1);
    rep = rdq::classify(right_proj);
    REQUIRE(rep.is_left_quasigroup);
    REQUIRE_FALSE(rep.is_right_quasigroup);
    REQUIRE(rep.is_idempotent);

    rep = rdq::classify(Groupoid::parse(rdq::data::golden26_d0));
    REQUIRE(rep.is_quasigroup);
    REQUIRE(rep.is_idempotent);

    rep = rdq::classify(oracle::cyclic_group(5));
    REQUIRE(rep.is_quasigroup);
    REQUIRE_FALSE(rep.is_idempotent);
}

TEST_CASE("classify agrees with the solution-count oracle up to order 8") {
    std::mt19937_64 rng(20240801);
    for (int q = 1; q <= 8; ++q)
        for (int trial = 0; trial < 40; ++trial) {
            Groupoid g = trial % 4 == 0 ? oracle::random_quasigroup(q, rng)
                                        : oracle::random_groupoid(q, rng);
            auto fast = rdq::classify(g);
            auto naive = oracle::naive_classify(g);
            REQUIRE(fast.is_left_quasigroup == naive.left);
            REQUIRE(fast.is_right_quasigroup == naive.right);
            REQUIRE(fast.is_quasigroup == (naive.left && naive.right));
            REQUIRE(fast.is_idempotent == naive.idempotent);
        }
}

TEST_CASE("recursive derivatives of cyclic groups match the coefficient oracle") {
    for (int q : {2, 3, 5, 6, 10}) {
        Groupoid g = oracle::cyclic_group(q);
        for (int n = -2; n <= 9; ++n) {
            Groupoid d = rdq::recursive_derivative(g, n);
            for (int a = 0; a < q; ++a)
                for (int b = 0; b < q; ++b)
                    REQUIRE(d.at(a, b) == oracle::fib_derivative_entry(q, n, a, b));
        }
    }
}

TEST_CASE("derivative recurrence looks entries up in the base table") {
    Groupoid g = Groupoid::parse(rdq::data::golden26_d0);
    Groupoid d1 = rdq::recursive_derivative(g, 1);
    Groupoid d2 = rdq::recursive_derivative(g, 2);
    REQUIRE(rdq::recursive_derivative(g, 0) == g);
    REQUIRE(d1.at(0, 1) == 20);
    REQUIRE(d2.at(0, 1) == 19);
    for (int a = 0; a < 26; ++a)
        for (int b = 0; b < 26; ++b)
            REQUIRE(d2.at(a, b) == g.at(g.at(a, b), d1.at(a, b)));
    REQUIRE_THROWS_AS(rdq::recursive_derivative(g, -3), std::invalid_argument);
}

TEST_CASE("differentiability degree and the n-differentiability predicate agree") {
    Groupoid g26 = Groupoid::parse(rdq::data::golden26_d0);
    auto res = rdq::differentiability_degree(g26);
    REQUIRE(res.degree == 2);
    REQUIRE_FALSE(res.cap_reached);
    REQUIRE(res.cap == 676);
    REQUIRE(rdq::is_recursively_n_differentiable(g26, 2));
    REQUIRE_FALSE(rdq::is_recursively_n_differentiable(g26, 3));

    auto z3 = rdq::differentiability_degree(oracle::cyclic_group(3));
    REQUIRE(z3.degree == 1);
    auto z5 = rdq::differentiability_degree(oracle::cyclic_group(5));
    REQUIRE(z5.degree == 2);

    // degree = (first n whose Fibonacci pair hits zero mod q) - 1
    for (int q : {2, 3, 5, 7, 11}) {
        int expected = 0;
        while (true) {
            auto [c1, c2] = oracle::fib_coefficients(q, expected);
            if (c1 == 0 || c2 == 0) break;
            ++expected;
        }
        REQUIRE(rdq::differentiability_degree(oracle::cyclic_group(q)).degree == expected - 1);
    }

    REQUIRE(rdq::differentiability_degree(rdq::recursive_derivative(g26, -2)).degree == -1);
    REQUIRE_THROWS_AS(rdq::is_recursively_n_differentiable(g26, -1), std::invalid_argument);
}

TEST_CASE("degree cap is reported, not silently an answer") {
    Groupoid g26 = Groupoid::parse(rdq::data::golden26_d0);
    auto capped = rdq::differentiability_degree(g26, 1);
    REQUIRE(capped.degree == 1);
    REQUIRE(capped.cap_reached);
    REQUIRE(capped.cap == 1);
    auto uncapped = rdq::differentiability_degree(g26, 3);
    REQUIRE(uncapped.degree == 2);
    REQUIRE_FALSE(uncapped.cap_reached);
}

TEST_CASE("derivative chains carry their evidence") {
    Groupoid g26 = Groupoid::parse(rdq::data::golden26_d0);
    auto chain = rdq::derivative_chain(g26);
    REQUIRE(chain.base == g26);
    REQUIRE(chain.derivatives[0] == g26);
    REQUIRE(chain.degree == 2);
    REQUIRE_FALSE(chain.cap_reached);
    REQUIRE(chain.derivatives.size() == 4);  // *_0..*_2 plus the failing *_3
    REQUIRE(chain.derivatives[1] == Groupoid::parse(rdq::data::golden26_d1));
    REQUIRE(chain.derivatives[2] == Groupoid::parse(rdq::data::golden26_d2));
    REQUIRE_FALSE(rdq::classify(chain.derivatives[3]).is_quasigroup);

    auto capped = rdq::derivative_chain(g26, 1);
    REQUIRE(capped.cap_reached);
    REQUIRE(capped.degree == 1);
    REQUIRE(capped.derivatives.size() == 2);
}

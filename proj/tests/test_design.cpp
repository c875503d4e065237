#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "rdq/design.hpp"
#include "support/oracles.hpp"

using rdq::Block;
using rdq::Cycle;
using rdq::MendelsohnDesign;

namespace {

MendelsohnDesign pmd33() {
    return MendelsohnDesign::make(3, 3, 1, {Block({0, 1, 2}), Block({0, 2, 1})});
}

}  // namespace

TEST_CASE("blocks canonicalize to their least-point rotation") {
    REQUIRE(Block({2, 0, 1}).points() == std::vector<int>{0, 1, 2});
    REQUIRE(Block({1, 2, 0}).points() == std::vector<int>{0, 1, 2});
    REQUIRE(Block({0, 2, 1}).points() == std::vector<int>{0, 2, 1});
    REQUIRE(Block({2, 0, 1}) == Block({0, 1, 2}));
    REQUIRE(Block({0, 1, 2}) < Block({0, 2, 1}));
    REQUIRE(Block({14, 20, 19, 0, 1}).points() == std::vector<int>{0, 1, 14, 20, 19});

    REQUIRE_THROWS_AS(Block({5}), std::invalid_argument);
    REQUIRE_THROWS_AS(Block({1, 2, 1}), std::invalid_argument);
    REQUIRE_THROWS_AS(Block({-1, 2}), std::invalid_argument);
}

TEST_CASE("t-apart pairs walk the cyclic order") {
    Block b({0, 1, 14, 20, 19});
    using P = std::vector<std::pair<int, int>>;
    REQUIRE(t_apart_pairs(b, 1) == P{{0, 1}, {1, 14}, {14, 20}, {20, 19}, {19, 0}});
    REQUIRE(t_apart_pairs(b, 2) == P{{0, 14}, {1, 20}, {14, 19}, {20, 0}, {19, 1}});
    REQUIRE(t_apart_pairs(b, 4) == P{{0, 19}, {1, 0}, {14, 1}, {20, 14}, {19, 20}});
    REQUIRE_THROWS_AS(t_apart_pairs(b, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(t_apart_pairs(b, 5), std::invalid_argument);
}

TEST_CASE("cycles canonicalize to the least rotation, repeats included") {
    REQUIRE(Cycle({1, 0, 1, 0}).elements() == std::vector<int>{0, 1, 0, 1});
    REQUIRE(Cycle({2, 1, 2, 0}).elements() == std::vector<int>{0, 2, 1, 2});
    REQUIRE(Cycle({7}).elements() == std::vector<int>{7});
    REQUIRE_THROWS_AS(Cycle({}), std::invalid_argument);

    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 500; ++trial) {
        std::vector<int> s(1 + static_cast<std::size_t>(oracle::pick(rng, 12)));
        for (int& x : s) x = oracle::pick(rng, 5);
        REQUIRE(Cycle(s).elements() == oracle::naive_least_rotation(s));
    }
}

TEST_CASE("design construction validates structure and sorts blocks") {
    MendelsohnDesign d = MendelsohnDesign::make(3, 3, 1, {Block({0, 2, 1}), Block({1, 2, 0})});
    REQUIRE(d.blocks == std::vector<Block>{Block({0, 1, 2}), Block({0, 2, 1})});

    REQUIRE_THROWS_AS(MendelsohnDesign::make(3, 4, 1, {Block({0, 1, 2})}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(MendelsohnDesign::make(3, 3, 0, {Block({0, 1, 2})}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(MendelsohnDesign::make(3, 3, 1, {Block({0, 1, 3})}),
                      std::invalid_argument);
    REQUIRE_THROWS_AS(MendelsohnDesign::make(4, 3, 1, {Block({0, 1, 2}), Block({0, 1})}),
                      std::invalid_argument);
}

TEST_CASE("design text round-trips") {
    MendelsohnDesign d = pmd33();
    REQUIRE(d.to_text() == "3 3 1\n0 1 2\n0 2 1\n");
    REQUIRE(MendelsohnDesign::parse(d.to_text()) == d);
    REQUIRE(MendelsohnDesign::parse("# tiny\n3 3 1\n2 0 1 # rotated\n0 2 1\n") == d);

    MendelsohnDesign wide = MendelsohnDesign::make(
        40, 3, 1, {Block({0, 1, 39})});  // structural only; decimal symbols
    REQUIRE(MendelsohnDesign::parse(wide.to_text()) == wide);

    REQUIRE_THROWS_AS(MendelsohnDesign::parse("3 3\n0 1 2\n"), rdq::parse_error);
    REQUIRE_THROWS_AS(MendelsohnDesign::parse("3 3 1\n0 1 1\n"), rdq::parse_error);
    REQUIRE_THROWS_AS(MendelsohnDesign::parse("3 3 1\n0 1 3\n"), rdq::parse_error);
}

TEST_CASE("verify_design counts consecutive pairs exactly") {
    auto check = rdq::verify_design(pmd33());
    REQUIRE(check.ok);
    REQUIRE(check.pair_counts_ok);
    REQUIRE(check.block_count_ok);
    REQUIRE(check.expected_block_count == 2);
    REQUIRE(check.violations.empty());

    MendelsohnDesign missing = MendelsohnDesign::make(3, 3, 1, {Block({0, 1, 2})});
    auto bad = rdq::verify_design(missing);
    REQUIRE_FALSE(bad.ok);
    REQUIRE_FALSE(bad.block_count_ok);
    REQUIRE(bad.violations.size() == 3);  // (0,2), (2,1), (1,0) never appear
    for (const auto& v : bad.violations) REQUIRE(v.count == 0);

    MendelsohnDesign doubled =
        MendelsohnDesign::make(3, 3, 1, {Block({0, 1, 2}), Block({0, 1, 2})});
    auto dup = rdq::verify_design(doubled);
    REQUIRE_FALSE(dup.ok);
    REQUIRE(dup.violations.size() == 6);  // three pairs twice, three pairs never
}

TEST_CASE("lambda counts multiset pair occurrences") {
    std::vector<Block> twice{Block({0, 1, 2}), Block({0, 2, 1}), Block({0, 1, 2}),
                             Block({0, 2, 1})};
    MendelsohnDesign d2 = MendelsohnDesign::make(3, 3, 2, twice);
    REQUIRE(rdq::verify_design(d2).ok);
    REQUIRE(rdq::perfectness(d2).max_perfect_l == 2);

    MendelsohnDesign lopsided =
        MendelsohnDesign::make(3, 3, 2, {Block({0, 1, 2}), Block({0, 1, 2})});
    REQUIRE_FALSE(rdq::verify_design(lopsided).ok);
}

TEST_CASE("perfectness reports the largest exact prefix of distances") {
    auto report = rdq::perfectness(pmd33());
    REQUIRE(report.max_perfect_l == 2);
    REQUIRE(report.per_t.size() == 2);
    REQUIRE(report.per_t[0].empty());
    REQUIRE(report.per_t[1].empty());
}

TEST_CASE("directed standard construction reproduces the textbook table") {
    rdq::Groupoid g = rdq::directed_standard_construction(pmd33());
    REQUIRE(g == rdq::Groupoid::from_rows({{0, 2, 1}, {2, 1, 0}, {1, 0, 2}}));
    auto rep = rdq::classify(g);
    REQUIRE(rep.is_quasigroup);
    REQUIRE(rep.is_idempotent);
    REQUIRE(rdq::check_characterization(g, 0));

    REQUIRE_THROWS_AS(
        rdq::directed_standard_construction(MendelsohnDesign::make(
            3, 3, 2, {Block({0, 1, 2}), Block({0, 2, 1}), Block({0, 1, 2}), Block({0, 2, 1})})),
        std::invalid_argument);
    REQUIRE_THROWS_AS(rdq::directed_standard_construction(
                          MendelsohnDesign::make(3, 3, 1, {Block({0, 1, 2})})),
                      std::invalid_argument);
    MendelsohnDesign pairs = MendelsohnDesign::make(
        3, 2, 1, {Block({0, 1}), Block({1, 0}), Block({0, 2}), Block({2, 0}), Block({1, 2}),
                  Block({2, 1})});
    REQUIRE_THROWS_AS(rdq::directed_standard_construction(pairs), std::invalid_argument);
}

TEST_CASE("cyclic decomposition partitions the ordered pairs") {
    rdq::Groupoid z3 = oracle::cyclic_group(3);
    auto cycles = rdq::cyclic_decomposition(z3);
    REQUIRE(cycles.size() == 2);
    REQUIRE(cycles[0].elements() == std::vector<int>{0});
    REQUIRE(cycles[1].elements() == std::vector<int>{0, 1, 1, 2, 0, 2, 2, 1});

    std::mt19937_64 rng(7);
    for (int q : {2, 4, 5, 6}) {
        rdq::Groupoid g = oracle::random_quasigroup(q, rng);
        auto parts = rdq::cyclic_decomposition(g);
        std::size_t total = 0;
        std::set<std::pair<int, int>> seen;
        for (const Cycle& c : parts) {
            total += static_cast<std::size_t>(c.length());
            for (int i = 0; i < c.length(); ++i)
                seen.emplace(c.elements()[static_cast<std::size_t>(i)],
                             c.elements()[static_cast<std::size_t>((i + 1) % c.length())]);
        }
        REQUIRE(total == static_cast<std::size_t>(q) * q);
        REQUIRE(seen.size() == static_cast<std::size_t>(q) * q);
        std::size_t ones = 0, idempotents = 0;
        for (const Cycle& c : parts) ones += c.length() == 1;
        for (int a = 0; a < q; ++a) idempotents += g.at(a, a) == a;
        REQUIRE(ones == idempotents);
    }

    REQUIRE_THROWS_AS(rdq::cyclic_decomposition(rdq::Groupoid(2, {0, 0, 0, 0})),
                      std::invalid_argument);
}

TEST_CASE("characterization rejects near misses") {
    REQUIRE_FALSE(rdq::check_characterization(oracle::cyclic_group(3), 0));  // not idempotent

    // Idempotent quasigroup x*y = 3x + 3y over Z_5: fails a *_1 b = a.
    std::vector<int> t(25);
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) t[static_cast<std::size_t>(a) * 5 + b] = (3 * a + 3 * b) % 5;
    rdq::Groupoid affine(5, std::move(t));
    REQUIRE(rdq::classify(affine).is_quasigroup);
    REQUIRE(rdq::classify(affine).is_idempotent);
    REQUIRE_FALSE(rdq::check_characterization(affine, 0));

    rdq::Groupoid g33 = rdq::directed_standard_construction(pmd33());
    REQUIRE_FALSE(rdq::check_characterization(g33, 1));  // wrong index
    REQUIRE_THROWS_AS(rdq::check_characterization(g33, -1), std::invalid_argument);
    REQUIRE_FALSE(rdq::check_characterization(rdq::Groupoid(1, {0}), 0));
}

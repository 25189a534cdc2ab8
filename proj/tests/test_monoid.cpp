#include "gracelab/endograph.hpp"
#include "gracelab/monoid.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <random>
#include <set>

using namespace gracelab;

TEST_CASE("permutation basics")
{
    CHECK_THROWS_AS(Permutation({0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(Permutation({1, 2}), std::invalid_argument);
    const Permutation p{2, 0, 1};
    CHECK((p * p.inverse()).is_identity());
    CHECK((p * Permutation{1, 0, 2}) == Permutation{0, 2, 1});
    CHECK(Permutation::complement(4) == Permutation{3, 2, 1, 0});
    CHECK(p.is_even());
    CHECK_FALSE(Permutation({1, 0, 2}).is_even());
}

TEST_CASE("lex rank anchors")
{
    CHECK(lex_rank(Permutation::identity(4)).value == 0);
    CHECK(lex_rank(Permutation{3, 2, 1, 0}).value == 23);
    CHECK(lex_rank(Permutation{1, 0, 2}).value == 2);
    CHECK(lex_unrank({0}, 5) == Permutation::identity(5));
    CHECK(lex_unrank({119}, 5) == Permutation{4, 3, 2, 1, 0});
    CHECK(lex_unrank({2}, 3) == Permutation{1, 0, 2});
    CHECK_THROWS_AS(lex_unrank({6}, 3), std::out_of_range);
}

TEST_CASE("lex rank equals position in the lexicographic listing")
{
    for (int n = 1; n <= 5; ++n) {
        for (const auto& s : oracle::all_permutations(n)) {
            const auto rank = lex_rank(Permutation(s));
            CHECK(rank.value == oracle::lex_position(s));
            CHECK(lex_unrank(rank, n) == Permutation(s));
        }
    }
}

TEST_CASE("lex rank is a bijection up to n = 7")
{
    for (int n = 1; n <= 7; ++n) {
        std::vector<bool> seen(factorial(n), false);
        for_each_permutation(n, [&](const Permutation& s) {
            const auto r = lex_rank(s).value;
            REQUIRE(r < seen.size());
            CHECK_FALSE(seen[r]);
            seen[r] = true;
        });
        CHECK(lex_rank(Permutation::complement(n)).value == factorial(n) - 1);
    }
}

TEST_CASE("conjugate")
{
    const EndoFunction path{0, 0, 1, 2};
    const Permutation sigma{0, 3, 1, 2};
    CHECK(conjugate(path, Permutation::identity(4)) == path);
    CHECK(conjugate(path, sigma) == EndoFunction{0, 3, 1, 0});
    CHECK(conjugate(conjugate(path, sigma), sigma.inverse()) == path);
    CHECK_THROWS_AS(conjugate(path, Permutation::identity(3)), std::invalid_argument);
}

TEST_CASE("conjugate matches explicit composition and preserves structure")
{
    for (int n = 1; n <= 4; ++n) {
        for (const auto& v : oracle::all_functions(n)) {
            const EndoFunction f(v);
            for (const auto& s : oracle::all_permutations(n)) {
                const auto h = conjugate(f, Permutation(s));
                CHECK(std::vector<int>(h.values().begin(), h.values().end()) == oracle::conjugate(v, s));
                CHECK(summarize(h) == summarize(f));
            }
        }
    }
}

TEST_CASE("tree and forest enumeration")
{
    CHECK(enumerate_tree_functions(3) == std::vector<EndoFunction>{{0, 0, 0}, {0, 0, 1}});
    CHECK(enumerate_tree_functions(1) == std::vector<EndoFunction>{{0}});
    CHECK(enumerate_forest_functions(2) == std::vector<EndoFunction>{{0, 0}, {0, 1}});
    CHECK(enumerate_forest_functions(1) == std::vector<EndoFunction>{{0}});
    CHECK(enumerate_forest_functions(6).size() == 720);
    const auto trees = enumerate_tree_functions(8);
    CHECK(trees.size() == 5040);
    CHECK(std::set<EndoFunction>(trees.begin(), trees.end()).size() == 5040);
    for (const auto& f : trees) CHECK(is_tree_function(f));
    for (int n = 1; n <= 5; ++n) {
        std::size_t trees_seen = 0, forests_seen = 0;
        for (const auto& v : oracle::all_functions(n)) {
            trees_seen += is_tree_function(EndoFunction(v)) ? 1 : 0;
            forests_seen += is_forest_function(EndoFunction(v)) ? 1 : 0;
        }
        CHECK(enumerate_tree_functions(n).size() == trees_seen);
        CHECK(enumerate_forest_functions(n).size() == forests_seen);
    }
    CHECK(function_at(3, 5) == EndoFunction{0, 1, 2});
}

TEST_CASE("closure of the named families")
{
    CHECK(verify_closure(Family::forest_monoid, 4).passed());
    CHECK(verify_closure(Family::tree_semigroup, 5).passed());
    const auto no_odd = verify_closure(Family::no_odd_permutations, 4);
    CHECK(no_odd.passed());
    CHECK(no_odd.member_count == 256 - 12);
    CHECK(verify_closure(Family::conjugated_forest, 4, Permutation{2, 0, 3, 1}).passed());
    CHECK(parse_family("tree-semigroup") == Family::tree_semigroup);
    CHECK_THROWS_AS(parse_family("bogus"), std::invalid_argument);
}

TEST_CASE("a set that is not closed yields a witness pair")
{
    // the odd permutations alone are not closed: the identity is missing and
    // products of two of them are even
    for (int n = 2; n <= 4; ++n) {
        std::set<EndoFunction> odd;
        for_each_permutation(n, [&](const Permutation& p) {
            if (!p.is_even()) odd.insert(p.as_function());
        });
        const auto a = *odd.begin();
        CHECK(odd.count(compose(a, a)) == 0);
    }
}

TEST_CASE("census")
{
    const auto c3 = census(3);
    CHECK(c3.union_count == 21);
    CHECK(c3.union_matches());
    const auto c4 = census(4);
    CHECK(c4.union_count == 148);
    CHECK(c4.cayley_formula == 148);
    CHECK(c4.forest_monoid_size == 24);
    CHECK(c4.tree_semigroup_size == 6);
    CHECK(c4.forest_monoid_closed);
    CHECK(c4.tree_semigroup_closed);
    CHECK(c4.conjugated_forests_distinct);
    CHECK(c4.lower_bound_family_count == 2 * 24 + 4);
    CHECK(c4.lower_bound_family_size == 7);
    CHECK(c4.lower_bound_families_distinct);
    CHECK(c4.lower_bound_families_closed);
    const auto c5 = census(5);
    CHECK(c5.union_count == 1415);
    CHECK(c5.union_matches());
    CHECK_THROWS_AS(census(8), std::out_of_range);
    CHECK_THROWS_AS(census(1), std::out_of_range);
}

TEST_CASE("union count agrees with brute-force materialization")
{
    for (int n = 2; n <= 4; ++n) {
        std::set<oracle::Vec> members;
        std::vector<oracle::Vec> forests;
        for (const auto& v : oracle::all_functions(n)) {
            bool forest = true;
            for (int i = 0; i < n; ++i) forest = forest && v[static_cast<std::size_t>(i)] <= i;
            if (forest) forests.push_back(v);
        }
        for (const auto& s : oracle::all_permutations(n)) {
            members.insert(s);
            for (const auto& h : forests) members.insert(oracle::conjugate(h, s));
        }
        CHECK(census(n).union_count == members.size());
    }
}

TEST_CASE("compositions of n-1 tree functions vanish")
{
    for (int n = 2; n <= 4; ++n) {
        const auto trees = enumerate_tree_functions(n);
        std::vector<std::size_t> idx(static_cast<std::size_t>(n - 1), 0);
        while (true) {
            std::vector<EndoFunction> word;
            for (auto k : idx) word.push_back(trees[k]);
            CHECK(compose_all(word) == EndoFunction::constant(n, 0));
            std::size_t k = 0;
            while (k < idx.size() && ++idx[k] == trees.size()) idx[k++] = 0;
            if (k == idx.size()) break;
        }
    }
    std::mt19937_64 rng(11);
    for (int n = 5; n <= 6; ++n) {
        const auto trees = enumerate_tree_functions(n);
        for (int s = 0; s < 500; ++s) {
            std::vector<EndoFunction> word;
            for (int k = 0; k < n - 1; ++k) word.push_back(trees[rng() % trees.size()]);
            CHECK(compose_all(word) == EndoFunction::constant(n, 0));
        }
    }
}

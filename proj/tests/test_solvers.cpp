#include "support/reference.hpp"

#include <strongdiff/error.hpp>
#include <strongdiff/exhaustive.hpp>
#include <strongdiff/families.hpp>
#include <strongdiff/solvers.hpp>

#include <doctest.h>

#include <string>

using namespace strongdiff;

namespace
{
    auto value_of(const Graph & g, Invariant which) -> std::int64_t
    {
        return solve(g, which).value;
    }

    auto feasible(const reference::Small & s, Invariant which, reference::Mask m) -> bool
    {
        switch (which)
        {
            case Invariant::StrongDifferential: return reference::dominating(s, m);
            case Invariant::Differential: return true;
            case Invariant::Domination: return reference::dominating(s, m);
            case Invariant::TwoDomination: return reference::two_dominating(s, m);
            case Invariant::SemitotalDomination: return reference::semitotal(s, m);
            case Invariant::Independence: return reference::independent(s, m);
            case Invariant::VertexCover: return reference::covers(s, m);
            default: return false;
        }
    }

    auto score(const reference::Small & s, Invariant which, reference::Mask m) -> int
    {
        switch (which)
        {
            case Invariant::StrongDifferential: return reference::strong_differential_of(s, m);
            case Invariant::Differential: return reference::differential_of(s, m);
            default: return reference::pop(m);
        }
    }

    auto lex_min_optimum(const Graph & g, Invariant which, std::int64_t value) -> std::uint64_t
    {
        auto s = reference::from(g);
        std::uint64_t best = 0;
        bool found = false;
        for (reference::Mask m = 0; m < (reference::Mask {1} << s.n); ++m)
            if (feasible(s, which, m) && score(s, which, m) == value)
                if (!found || mask_lex_less(m, best))
                {
                    best = m;
                    found = true;
                }
        REQUIRE(found);
        return best;
    }
}

TEST_CASE("worked examples")
{
    auto a = figure_a();
    CHECK(value_of(a, Invariant::StrongDifferential) == 8);
    CHECK(value_of(a, Invariant::SemitotalDomination) == 6);
    CHECK(a.order() - value_of(a, Invariant::SemitotalDomination) == 8);

    auto b = figure_b();
    CHECK(value_of(b, Invariant::StrongDifferential) == 4);
    CHECK(value_of(b, Invariant::Domination) == 2);
    CHECK(value_of(b, Invariant::TwoDomination) == 4);
    CHECK(value_of(b, Invariant::SemitotalDomination) == 2);
    CHECK(value_of(b, Invariant::Independence) == 4);

    for (std::int64_t k = 0; k <= 2; ++k)
    {
        auto p = path_graph(static_cast<std::size_t>(6 * k + 3));
        CHECK(value_of(p, Invariant::StrongDifferential) == 3 * k + 1);
        CHECK(value_of(p, Invariant::Differential) == 2 * k + 1);
    }
    for (std::size_t r = 3; r <= 5; ++r)
        CHECK(value_of(subdivided_star(r), Invariant::StrongDifferential) == static_cast<std::int64_t>(r) - 1);
}

TEST_CASE("solvers agree with the definition-level reference")
{
    std::size_t index = 0;
    for (auto & item : mixed_corpus(3))
    {
        if (item.graph.order() > 11)
            continue;
        auto s = reference::from(item.graph);
        for (auto which : all_invariants())
        {
            auto expected = reference::value(s, std::string(invariant_name(which)));
            if (expected < 0)
            {
                CHECK_THROWS_AS(solve(item.graph, which), UndefinedInvariant);
                continue;
            }
            auto bb = solve(item.graph, which);
            INFO(item.source, " ", invariant_name(which));
            CHECK(bb.value == expected);
            CHECK(witness_is_valid(item.graph, bb));
            if (item.graph.order() <= 9 || !has_weight_witness(which))
            {
                auto oracle = solve_oracle(item.graph, which);
                CHECK(oracle.value == expected);
                CHECK(witness_is_valid(item.graph, oracle));
                CHECK(oracle.method == Method::BruteForce);
            }
        }
        if (++index == 120)
            break;
    }
}

TEST_CASE("set witnesses are the lexicographically smallest optimum")
{
    for (std::uint64_t seed = 1; seed <= 40; ++seed)
    {
        auto g = random_gnp(3 + seed % 8, 0.4, seed);
        for (auto which : all_invariants())
        {
            if (has_weight_witness(which))
                continue;
            if (which == Invariant::SemitotalDomination && has_isolated_vertex(g))
                continue;
            auto r = solve(g, which);
            auto & set = std::get<VertexSet>(r.witness);
            INFO("seed ", seed, " ", invariant_name(which));
            CHECK(set.mask() == lex_min_optimum(g, which, r.value));
            CHECK(solve(g, which).witness == r.witness);
        }
    }
}

TEST_CASE("values add over components")
{
    SplitMix64 rng(11);
    for (int round = 0; round < 20; ++round)
    {
        auto a = random_gnp(2 + rng.below(6), 0.5, rng.next());
        auto b = random_gnp(2 + rng.below(6), 0.5, rng.next());
        auto u = disjoint_union(a, b);
        for (auto which : all_invariants())
        {
            if (which == Invariant::SemitotalDomination && has_isolated_vertex(u))
                continue;
            CHECK(value_of(u, which) == value_of(a, which) + value_of(b, which));
        }
    }
}

TEST_CASE("size guards")
{
    CHECK_THROWS_AS(solve(Graph(0), Invariant::Domination), EmptyGraph);
    CHECK_NOTHROW(solve(path_graph(20), Invariant::Domination));
    CHECK_THROWS_AS(solve(path_graph(21), Invariant::Domination), SizeGuardExceeded);

    SolverConfig relaxed;
    relaxed.allow_guard_override = true;
    auto piece = path_graph(14);
    auto big = disjoint_union(disjoint_union(piece, piece), piece);
    auto s = reference::from(piece);
    CHECK(solve(big, Invariant::Domination, relaxed).value == 3 * reference::domination(s));
    CHECK(solve(big, Invariant::StrongDifferential, relaxed).value == 3 * reference::strong_differential(s));
    CHECK_THROWS_AS(solve(path_graph(65), Invariant::Domination, relaxed), SizeGuardExceeded);

    try
    {
        solve(path_graph(30), Invariant::Independence);
        FAIL("expected a guard error");
    }
    catch (const SizeGuardExceeded & e)
    {
        CHECK(e.order() == 30);
        CHECK(e.guard() == 20);
    }

    SolverConfig small;
    small.oracle_guard = 5;
    CHECK_THROWS_AS(solve_oracle(path_graph(6), Invariant::Domination, small), SizeGuardExceeded);
}

TEST_CASE("semitotal domination needs every vertex to have a neighbour")
{
    CHECK_THROWS_AS(solve(Graph(3, {{0, 1}}), Invariant::SemitotalDomination), UndefinedInvariant);
    CHECK_THROWS_AS(solve(Graph(1), Invariant::SemitotalDomination), UndefinedInvariant);
}

TEST_CASE("gallai-derived values and witnesses")
{
    for (std::uint64_t seed = 1; seed <= 60; ++seed)
    {
        auto g = random_gnp(1 + seed % 10, 0.35, seed);
        for (auto which : {Invariant::ItalianDomination, Invariant::RomanDomination, Invariant::VertexCover})
        {
            auto derived = gallai_derived(g, which);
            CHECK(derived.method == Method::GallaiDerived);
            CHECK(derived.value == solve(g, which).value);
            CHECK(witness_is_valid(g, derived));
        }
        CHECK_THROWS_AS(gallai_derived(g, Invariant::Domination), InvalidArgument);

        auto d = dominating_strong_witness(g);
        CHECK(is_dominating(g, d));
        CHECK(breakdown(g, d).strong_differential == strong_differential(g).value);
    }
}

TEST_CASE("optimal set catalogues match enumeration")
{
    for (std::uint64_t seed = 1; seed <= 25; ++seed)
    {
        auto g = random_gnp(2 + seed % 8, 0.4, seed);
        auto s = reference::from(g);
        auto strong = all_strong_differential_sets(g);
        auto gammas = all_minimum_dominating_sets(g);
        CHECK(strong.value == reference::strong_differential(s));
        CHECK(gammas.value == reference::domination(s));

        std::size_t strong_count = 0;
        std::size_t gamma_count = 0;
        for (reference::Mask m = 0; m < (reference::Mask {1} << s.n); ++m)
        {
            if (reference::strong_differential_of(s, m) == strong.value)
                ++strong_count;
            if (reference::dominating(s, m) && reference::pop(m) == gammas.value)
                ++gamma_count;
        }
        CHECK(strong.sets.size() == strong_count);
        CHECK(gammas.sets.size() == gamma_count);
        for (auto & d : gammas.sets)
            CHECK(is_dominating(g, d));
    }
    SolverConfig tight;
    tight.exhaustive_guard = 4;
    CHECK_THROWS_AS(all_minimum_dominating_sets(path_graph(5), tight), SizeGuardExceeded);
}

TEST_CASE("invariant and method names round trip")
{
    for (auto which : all_invariants())
        CHECK(parse_invariant(invariant_name(which)) == which);
    CHECK_FALSE(parse_invariant("chromatic").has_value());
    for (auto m : {Method::BranchAndBound, Method::BruteForce, Method::GallaiDerived})
        CHECK(parse_method(method_name(m)) == m);
}

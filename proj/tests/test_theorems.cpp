#include "support/reference.hpp"

#include <strongdiff/error.hpp>
#include <strongdiff/families.hpp>
#include <strongdiff/set_calculus.hpp>
#include <strongdiff/theorems.hpp>

#include <doctest.h>

#include <set>

using namespace strongdiff;

namespace
{
    auto false_claim() -> TheoremCheck
    {
        TheoremCheck c;
        c.id = "planted-false";
        c.kind = ClaimKind::Identity;
        c.description = "strong differential = n";
        c.hypothesis = [](Evaluation &) { return Tri::Yes; };
        c.claim = [](Evaluation & e) {
            auto ds = e.get(Invariant::StrongDifferential);
            e.get(Invariant::Domination);
            e.set_sides(ds, e.n());
            e.require(ds == e.n(), "strong differential = n fails");
        };
        return c;
    }

    auto biconditional(bool left, bool right) -> TheoremCheck
    {
        TheoremCheck c;
        c.id = "planted-iff";
        c.kind = ClaimKind::Iff;
        c.hypothesis = [](Evaluation &) { return Tri::Yes; };
        c.claim = [left, right](Evaluation & e) { e.iff(left, right, "L", "R"); };
        return c;
    }
}

TEST_CASE("registry contents")
{
    auto & checks = registry();
    CHECK(checks.size() >= 29);
    std::set<std::string> ids;
    for (auto & c : checks)
    {
        CHECK_FALSE(c.id.empty());
        CHECK_FALSE(c.description.empty());
        CHECK(static_cast<bool>(c.claim));
        ids.insert(c.id);
    }
    CHECK(ids.size() == checks.size());
    CHECK(select_checks("all").size() == checks.size());
    CHECK(select_checks("trivial-i,trivial-ii").size() == 2);
    CHECK_THROWS_AS(find_check("no-such-check"), UnknownTheorem);
    CHECK_THROWS_AS(select_checks("trivial-i,nope"), UnknownTheorem);
    for (auto s : {CheckStatus::Holds, CheckStatus::HypothesisNotMet, CheckStatus::Violated, CheckStatus::Inconclusive})
        CHECK(parse_status(status_name(s)) == s);
}

TEST_CASE("spot checks")
{
    auto italian = check(figure_a(), "gallai-italian");
    CHECK(italian.status == CheckStatus::Holds);
    REQUIRE(italian.lhs.has_value());
    CHECK(*italian.lhs == 14);
    CHECK(*italian.rhs == 14);

    auto two_edges = disjoint_union(path_graph(2), path_graph(2));
    CHECK(check(two_edges, "trivial-ii").status == CheckStatus::Holds);
    CHECK(check(path_graph(1), "order-quarter").status == CheckStatus::HypothesisNotMet);
    CHECK(check(path_graph(7), "order-quarter").status == CheckStatus::Holds);
    CHECK(check(disjoint_union(path_graph(3), path_graph(3)), "order-quarter").status == CheckStatus::HypothesisNotMet);
    CHECK(check(figure_b(), "iff-gamma").status == CheckStatus::Holds);

    auto sandwich = check(complete_bipartite_graph(2, 3), "diff-sandwich");
    CHECK(sandwich.status == CheckStatus::Holds);

    CheckContext corona_context {parse_family_spec("corona(path:3,complete:2)")};
    auto g = generate(*corona_context.spec);
    CHECK(check(g, "corona", {}, corona_context).status == CheckStatus::Holds);
    CHECK(check(g, "corona").status == CheckStatus::HypothesisNotMet);
}

TEST_CASE("a false claim is reported with re-checkable certificates")
{
    auto planted = false_claim();
    for (auto & item : mixed_corpus())
    {
        auto & g = item.graph;
        if (g.order() < 3 || g.size() == 0)
            continue;
        InvariantCache cache(g, {});
        auto out = evaluate(planted, cache);
        CHECK(out.status == CheckStatus::Violated);
        REQUIRE(out.counterexample.has_value());
        CHECK(out.counterexample->graph == g);
        CHECK(out.counterexample->certificates.size() == 2);
        CHECK(certificates_valid(*out.counterexample));

        auto tampered = *out.counterexample;
        tampered.certificates[0].value += 1;
        CHECK_FALSE(certificates_valid(tampered));
        break;
    }

    auto report = fuzz(expand_stream("path:2;path:5;cycle:4"), std::vector<TheoremCheck> {planted}, 10);
    CHECK(report.graphs == 3);
    CHECK(report.counts["planted-false"].violated == 3);
    CHECK(report.findings.size() == 3);
}

TEST_CASE("biconditional failures name the direction")
{
    InvariantCache cache(path_graph(3), {});
    auto forward = evaluate(biconditional(true, false), cache);
    CHECK(forward.status == CheckStatus::Violated);
    CHECK(forward.detail.find("forward") != std::string::npos);
    auto backward = evaluate(biconditional(false, true), cache);
    CHECK(backward.detail.find("backward") != std::string::npos);
    CHECK(evaluate(biconditional(true, true), cache).status == CheckStatus::Holds);
    CHECK(evaluate(biconditional(false, false), cache).status == CheckStatus::Holds);
}

TEST_CASE("set-quantified claims become inconclusive beyond the exhaustive guard")
{
    SolverConfig cfg;
    cfg.exhaustive_guard = 6;
    CHECK(check(path_graph(9), "iff-2gamma", cfg).status == CheckStatus::Inconclusive);
    CHECK(check(path_graph(9), "remark-ds-formula", cfg).status == CheckStatus::Inconclusive);
    CHECK(check(path_graph(5), "iff-2gamma", cfg).status == CheckStatus::Holds);
}

TEST_CASE("every check holds on small trees")
{
    auto report = fuzz(expand_stream("trees:n=1-9"), "all", 1000);
    auto total = report.total();
    CHECK(report.graphs == 1 + 1 + 1 + 2 + 3 + 6 + 11 + 23 + 47);
    CHECK(total.violated == 0);
    CHECK(total.inconclusive == 0);
    CHECK(total.holds > 0);
    CHECK(report.counts["tree-family-T"].holds > 0);
    CHECK(report.counts["tree-floor-bound"].holds > 0);
}

TEST_CASE("corona checks over several operand pairs")
{
    auto report = fuzz(expand_stream("corona(path:2,path:3);corona(cycle:3,complete:3);corona(star:2,empty:2);corona(path:1,path:1)"),
            "corona", 10);
    CHECK(report.counts["corona"].holds == 3);
    CHECK(report.counts["corona"].hypothesis_not_met == 1);
    CHECK(report.total().violated == 0);
}

TEST_CASE("strong differential one exactly on C3, P3 and P4 among connected graphs")
{
    std::set<std::uint64_t> expected {canonical_code(cycle_graph(3)), canonical_code(path_graph(3)), canonical_code(path_graph(4))};
    std::set<std::uint64_t> found;
    for (std::size_t n = 3; n <= 6; ++n)
        for (auto & g : enumerate_graphs(n, true))
        {
            if (reference::strong_differential(reference::from(g)) == 1)
                found.insert(canonical_code(g));
            CHECK(check(g, "trivial-iii").status == CheckStatus::Holds);
        }
    CHECK(found == expected);
}

TEST_CASE("italian domination can exceed the independence number")
{
    auto c5 = reference::from(cycle_graph(5));
    CHECK(reference::italian_domination(c5) > reference::independence(c5));
    CHECK(check(cycle_graph(5), "table-alpha").status == CheckStatus::Holds);
}

#include "support/reference.hpp"

#include <strongdiff/error.hpp>
#include <strongdiff/families.hpp>
#include <strongdiff/io.hpp>
#include <strongdiff/theorems.hpp>

#include <doctest.h>

#include <string>

using namespace strongdiff;

namespace
{
    auto from_reference(const std::string & line) -> Graph
    {
        auto [n, pairs] = reference::decode_graph6(line);
        std::vector<Edge> edges;
        for (auto [u, v] : pairs)
            edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
        return Graph(static_cast<std::size_t>(n), edges);
    }

    auto parse_error_offset(std::string_view text) -> std::size_t
    {
        try
        {
            parse_graph6(text);
        }
        catch (const ParseError & e)
        {
            return e.offset();
        }
        FAIL("expected a parse error for ", std::string(text));
        return 0;
    }

    auto parse_error_line(std::string_view text) -> std::size_t
    {
        try
        {
            parse_edgelist(text);
        }
        catch (const ParseError & e)
        {
            return e.line();
        }
        FAIL("expected a parse error for ", std::string(text));
        return 0;
    }
}

TEST_CASE("graph6 fixtures")
{
    CHECK(parse_graph6("D?{") == Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}}));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6("Bg") == path_graph(3));
    CHECK(parse_graph6(">>graph6<<Bg") == path_graph(3));
    CHECK(parse_graph6("Bg\n") == path_graph(3));
    CHECK(write_graph6(path_graph(3)) == "Bg");
    CHECK(write_graph6(Graph(5, {{0, 4}, {1, 4}, {2, 4}, {3, 4}})) == "D?{");
}

TEST_CASE("graph6 matches an independent decoder")
{
    SplitMix64 rng(17);
    for (int round = 0; round < 300; ++round)
    {
        auto g = random_gnp(1 + rng.below(70), rng.unit(), rng.next());
        auto text = write_graph6(g);
        CHECK(parse_graph6(text) == g);
        CHECK(from_reference(text) == g);
    }
    auto big = random_gnp(300, 0.02, 3);
    auto text = write_graph6(big);
    CHECK(text.substr(0, 1) == "~");
    CHECK(parse_graph6(text) == big);
}

TEST_CASE("graph6 long order form")
{
    std::string text = "~~????@c" + std::string(825, '?');
    CHECK(parse_graph6(text) == Graph(100));
    CHECK(parse_graph6("~?@c" + std::string(825, '?')) == Graph(100));
}

TEST_CASE("graph6 errors carry byte offsets")
{
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK(parse_error_offset("D?") == 2);
    CHECK(parse_error_offset("D?{?") == 3);
    CHECK(parse_error_offset(std::string("D?\x01", 3)) == 2);
    CHECK(parse_error_offset("~?") == 2);
}

TEST_CASE("edge lists")
{
    CHECK(parse_edgelist("n 2\n0 1\n") == path_graph(2));
    CHECK(parse_edgelist("# comment\nn 3\n0 1 # first\n\n1 2\n") == path_graph(3));
    CHECK(parse_edgelist("n 4\n") == Graph(4));
    CHECK(parse_error_line("n 3\n0 0") == 2);
    CHECK(parse_error_line("n 3\n0 1\n1 0\n") == 3);
    CHECK(parse_error_line("n 3\n0 3\n") == 2);
    CHECK(parse_error_line("n 3\n0 x\n") == 2);
    CHECK(parse_error_line("0 1\n") == 1);
    CHECK_THROWS_AS(parse_edgelist(""), ParseError);

    auto g = figure_a();
    CHECK(parse_edgelist(write_edgelist(g)) == g);
    CHECK(parse_graph(write_graph(g, GraphFormat::Graph6), GraphFormat::Graph6) == g);
    CHECK(detect_format("n 3\n") == GraphFormat::EdgeList);
    CHECK(detect_format("# x\nn 3\n") == GraphFormat::EdgeList);
    CHECK(detect_format("Bg") == GraphFormat::Graph6);
    CHECK(parse_graph_format("graph6") == GraphFormat::Graph6);
    CHECK(parse_graph_format("edgelist") == GraphFormat::EdgeList);
    CHECK_FALSE(parse_graph_format("dot").has_value());
}

TEST_CASE("json reports round trip")
{
    auto g = figure_a();
    Report report;
    report.graph = describe(g, "figure-a");
    for (auto which : all_invariants())
        report.results.push_back({solve(g, which), 1.25});
    report.checks.push_back({check(g, "gallai-italian"), 0.5});

    TheoremCheck planted;
    planted.id = "planted";
    planted.hypothesis = [](Evaluation &) { return Tri::Yes; };
    planted.claim = [](Evaluation & e) { e.require(e.get(Invariant::StrongDifferential) == 0, "nonzero"); };
    InvariantCache cache(g, {});
    auto violated = evaluate(planted, cache);
    REQUIRE(violated.counterexample.has_value());
    report.checks.push_back({violated, 0.0});

    auto text = report_to_json(report);
    auto back = report_from_json(text);
    CHECK(back == report);
    CHECK(text.find("\"schema_version\": \"1\"") != std::string::npos);

    BatchReport batch;
    batch.reports = {report, report};
    batch.summary["gallai-italian"].holds = 2;
    CHECK(batch_from_json(batch_to_json(batch)) == batch);

    CHECK_THROWS_AS(report_from_json("{"), ParseError);
}

TEST_CASE("csv rows and witness text")
{
    CHECK(witness_text(Witness {VertexSet(6, {0, 3, 5})}) == "0;3;5");
    std::vector<std::uint8_t> weights {2, 0, 0, 0, 1};
    CHECK(witness_text(Witness {WeightFunction(weights)}) == "0=2;4=1");

    Report report;
    report.graph = describe(path_graph(3), "path:3");
    report.results.push_back({solve(path_graph(3), Invariant::Domination), 0.0});
    report.results.push_back({solve(path_graph(3), Invariant::StrongDifferential), 0.0});
    Report other;
    other.graph = describe(path_graph(2), "a,b");
    other.results.push_back({solve(path_graph(2), Invariant::Independence), 0.0});
    CHECK(reports_to_csv({report, other}) ==
            "graph-id,invariant,value,witness\n"
            "path:3,domination,1,1\n"
            "path:3,strong-differential,1,1\n"
            "\"a,b\",independence,1,1\n");
}

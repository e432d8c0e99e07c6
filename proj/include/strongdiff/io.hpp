#pragma once

#include <strongdiff/graph.hpp>
#include <strongdiff/solvers.hpp>
#include <strongdiff/theorems.hpp>

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strongdiff
{
    enum class GraphFormat
    {
        Graph6,
        EdgeList
    };

    auto parse_graph_format(std::string_view) -> std::optional<GraphFormat>;

    /// One graph6 line, optionally preceded by ">>graph6<<". ParseError
    /// offsets count bytes from the start of the line.
    auto parse_graph6(std::string_view text) -> Graph;
    auto write_graph6(const Graph & g) -> std::string;

    /// "n <count>" followed by "u v" lines; '#' starts a comment.
    auto parse_edgelist(std::string_view text) -> Graph;
    auto write_edgelist(const Graph & g) -> std::string;

    auto parse_graph(std::string_view text, GraphFormat format) -> Graph;
    auto write_graph(const Graph & g, GraphFormat format) -> std::string;
    /// Edge list when the first meaningful line starts with 'n' or '#', graph6 otherwise.
    auto detect_format(std::string_view text) -> GraphFormat;

    struct TimedResult
    {
        InvariantResult result;
        double elapsed_ms = 0.0;
    };

    struct TimedCheck
    {
        CheckOutcome outcome;
        double elapsed_ms = 0.0;
    };

    struct GraphInfo
    {
        std::size_t n = 0;
        std::vector<Edge> edges;
        std::string source;

        friend auto operator==(const GraphInfo &, const GraphInfo &) -> bool = default;
    };

    auto describe(const Graph & g, std::string source) -> GraphInfo;

    struct Report
    {
        std::string schema_version = "1";
        GraphInfo graph;
        std::vector<TimedResult> results;
        std::vector<TimedCheck> checks;
    };

    /// Reports of several graphs plus per-check totals.
    struct BatchReport
    {
        std::string schema_version = "1";
        std::vector<Report> reports;
        std::map<std::string, StatusCounts> summary;
    };

    auto operator==(const TimedResult &, const TimedResult &) -> bool;
    auto operator==(const TimedCheck &, const TimedCheck &) -> bool;
    auto operator==(const Report &, const Report &) -> bool;
    auto operator==(const BatchReport &, const BatchReport &) -> bool;

    auto report_to_json(const Report & report) -> std::string;
    auto report_from_json(std::string_view text) -> Report;
    auto batch_to_json(const BatchReport & batch) -> std::string;
    auto batch_from_json(std::string_view text) -> BatchReport;

    /// Witness as text: vertex indices "0;3;5" or nonzero weights "0=2;4=1".
    auto witness_text(const Witness & w) -> std::string;

    /// Header "graph-id,invariant,value,witness" then one row per result.
    auto reports_to_csv(const std::vector<Report> & reports) -> std::string;
}

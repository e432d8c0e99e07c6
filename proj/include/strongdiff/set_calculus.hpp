#pragma once

#include <strongdiff/graph.hpp>
#include <strongdiff/vertex_set.hpp>
#include <strongdiff/weight_function.hpp>

#include <cstddef>
#include <cstdint>
#include <vector>

namespace strongdiff
{
    /**
     * Everything a set D says about itself: its external neighbourhood Ne(D),
     * the split of D into weak members (those with an external private
     * neighbour) and strong members, and the two differentials
     * |Ne(D)| - |D| and |Ne(D)| - |weak|.
     */
    struct DifferentialBreakdown
    {
        VertexSet set;
        VertexSet external;
        VertexSet weak;
        VertexSet strong;
        std::int64_t differential = 0;
        std::int64_t strong_differential = 0;

        friend auto operator==(const DifferentialBreakdown &, const DifferentialBreakdown &) -> bool = default;
    };

    auto open_neighborhood(const Graph & g, Vertex v) -> VertexSet;
    auto closed_neighborhood(const Graph & g, Vertex v) -> VertexSet;

    /// N(S), the union of open neighbourhoods.
    auto neighborhood(const Graph & g, const VertexSet & s) -> VertexSet;

    /// Ne(S) = N(S) \ S.
    auto external_neighborhood(const Graph & g, const VertexSet & s) -> VertexSet;

    /// Vertices outside d whose only neighbour in d is v. Throws
    /// InvalidArgument when v is not in d.
    auto external_private_neighborhood(const Graph & g, Vertex v, const VertexSet & d) -> VertexSet;

    auto breakdown(const Graph & g, const VertexSet & d) -> DifferentialBreakdown;

    auto is_dominating(const Graph & g, const VertexSet & s) -> bool;
    auto is_2_dominating(const Graph & g, const VertexSet & s) -> bool;
    /// Throws UndefinedInvariant if g has an isolated vertex.
    auto is_semitotal_dominating(const Graph & g, const VertexSet & s) -> bool;
    auto is_vertex_cover(const Graph & g, const VertexSet & s) -> bool;
    auto is_independent(const Graph & g, const VertexSet & s) -> bool;

    auto is_idf(const Graph & g, const WeightFunction & f) -> bool;
    auto is_rdf(const Graph & g, const WeightFunction & f) -> bool;

    auto leaves(const Graph & g) -> VertexSet;
    auto supports(const Graph & g) -> VertexSet;
    /// Number of support vertices adjacent to at least two leaves.
    auto sigma(const Graph & g) -> std::size_t;
    auto leaf_neighbors(const Graph & g, Vertex v) -> VertexSet;
    auto degree_two_neighbors(const Graph & g, Vertex v) -> VertexSet;

    /// Eccentricity of v within its own connected component.
    auto eccentricity(const Graph & g, Vertex v) -> std::size_t;

    /// BFS distances from v; unreachable vertices get order().
    auto distances_from(const Graph & g, Vertex v) -> std::vector<std::size_t>;

    /// Vertices at distance 1 or 2 from v, v excluded.
    auto second_neighborhood(const Graph & g, Vertex v) -> VertexSet;

    auto components(const Graph & g) -> std::vector<VertexSet>;
    auto is_connected(const Graph & g) -> bool;
    auto is_tree(const Graph & g) -> bool;
    auto has_isolated_vertex(const Graph & g) -> bool;
    /// True when every connected component has a vertex of degree at least two.
    auto every_component_has_max_degree_two(const Graph & g) -> bool;
}

#pragma once

#include <strongdiff/vertex_set.hpp>

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace strongdiff
{
    using Edge = std::pair<Vertex, Vertex>;

    /**
     * Immutable simple undirected graph on vertices 0..n-1. Construction
     * rejects self-loops, repeated edges and out-of-range endpoints, so every
     * Graph value is simple and symmetric.
     */
    class Graph
    {
        public:
            Graph() = default;
            explicit Graph(std::size_t order);
            Graph(std::size_t order, std::span<const Edge> edges);
            Graph(std::size_t order, std::initializer_list<Edge> edges);

            auto order() const noexcept -> std::size_t { return _order; }
            auto size() const noexcept -> std::size_t { return _edge_count; }

            auto adjacent(Vertex u, Vertex v) const -> bool;
            auto degree(Vertex v) const -> std::size_t;
            auto neighbors(Vertex v) const -> const VertexSet &;
            auto neighbor_list(Vertex v) const -> const std::vector<Vertex> &;

            auto min_degree() const -> std::size_t;
            auto max_degree() const -> std::size_t;

            /// Edges as (u, v) with u < v, sorted.
            auto edges() const -> std::vector<Edge>;

            auto all_vertices() const -> VertexSet { return VertexSet::full(_order); }
            auto no_vertices() const -> VertexSet { return VertexSet(_order); }

            /// One adjacency word per vertex; requires order() <= 64.
            auto adjacency_masks() const -> std::vector<std::uint64_t>;

            friend auto operator==(const Graph & a, const Graph & b) -> bool
            {
                return a._order == b._order && a._rows == b._rows;
            }

        private:
            auto check_vertex(Vertex v) const -> void;

            std::size_t _order = 0;
            std::size_t _edge_count = 0;
            std::vector<VertexSet> _rows;
            std::vector<std::vector<Vertex>> _lists;
    };

    /// Subgraph induced by `keep`; vertex i of the result is the i-th smallest
    /// member of `keep`, so relative order is preserved.
    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph;

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph;
}

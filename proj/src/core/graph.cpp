#include <strongdiff/graph.hpp>
#include <strongdiff/error.hpp>

#include <algorithm>
#include <string>

namespace strongdiff
{
    Graph::Graph(std::size_t order) :
        _order(order),
        _rows(order, VertexSet(order)),
        _lists(order)
    {
    }

    Graph::Graph(std::size_t order, std::initializer_list<Edge> edges) :
        Graph(order, std::span<const Edge>(edges.begin(), edges.size()))
    {
    }

    Graph::Graph(std::size_t order, std::span<const Edge> edges) :
        Graph(order)
    {
        for (auto [u, v] : edges) {
            if (u >= order || v >= order)
                throw InvalidGraph("edge " + std::to_string(u) + "-" + std::to_string(v) + " outside vertex range");
            if (u == v)
                throw InvalidGraph("self-loop at vertex " + std::to_string(u));
            if (_rows[u].contains(v))
                throw InvalidGraph("repeated edge " + std::to_string(u) + "-" + std::to_string(v));
            _rows[u].insert(v);
            _rows[v].insert(u);
            ++_edge_count;
        }
        for (Vertex v = 0 ; v < order ; ++v)
            _lists[v] = _rows[v].members();
    }

    auto Graph::check_vertex(Vertex v) const -> void
    {
        if (v >= _order)
            throw InvalidVertex("vertex " + std::to_string(v) + " outside range 0.." + std::to_string(_order));
    }

    auto Graph::adjacent(Vertex u, Vertex v) const -> bool
    {
        check_vertex(u);
        return _rows[u].contains(v);
    }

    auto Graph::degree(Vertex v) const -> std::size_t
    {
        check_vertex(v);
        return _lists[v].size();
    }

    auto Graph::neighbors(Vertex v) const -> const VertexSet &
    {
        check_vertex(v);
        return _rows[v];
    }

    auto Graph::neighbor_list(Vertex v) const -> const std::vector<Vertex> &
    {
        check_vertex(v);
        return _lists[v];
    }

    auto Graph::min_degree() const -> std::size_t
    {
        std::size_t result = _order == 0 ? 0 : _order;
        for (auto & l : _lists)
            result = std::min(result, l.size());
        return result;
    }

    auto Graph::max_degree() const -> std::size_t
    {
        std::size_t result = 0;
        for (auto & l : _lists)
            result = std::max(result, l.size());
        return result;
    }

    auto Graph::edges() const -> std::vector<Edge>
    {
        std::vector<Edge> result;
        result.reserve(_edge_count);
        for (Vertex u = 0 ; u < _order ; ++u)
            for (auto v : _lists[u])
                if (u < v)
                    result.emplace_back(u, v);
        return result;
    }

    auto Graph::adjacency_masks() const -> std::vector<std::uint64_t>
    {
        if (_order > 64)
            throw InvalidArgument("adjacency masks need at most 64 vertices");
        std::vector<std::uint64_t> result;
        result.reserve(_order);
        for (auto & r : _rows)
            result.push_back(r.mask());
        return result;
    }

    auto induced_subgraph(const Graph & g, const VertexSet & keep) -> Graph
    {
        auto kept = keep.members();
        std::vector<Vertex> position(g.order(), g.order());
        for (std::size_t i = 0 ; i < kept.size() ; ++i)
            position[kept[i]] = i;

        std::vector<Edge> edges;
        for (auto [u, v] : g.edges())
            if (position[u] != g.order() && position[v] != g.order())
                edges.emplace_back(position[u], position[v]);
        return Graph(kept.size(), edges);
    }

    auto disjoint_union(const Graph & a, const Graph & b) -> Graph
    {
        auto edges = a.edges();
        for (auto [u, v] : b.edges())
            edges.emplace_back(u + a.order(), v + a.order());
        return Graph(a.order() + b.order(), edges);
    }
}

#include <strongdiff/set_calculus.hpp>
#include <strongdiff/error.hpp>

#include <algorithm>
#include <deque>
#include <string>

namespace strongdiff
{
    namespace
    {
        auto check_set(const Graph & g, const VertexSet & s) -> void
        {
            if (s.universe() != g.order())
                throw InvalidArgument("vertex set universe " + std::to_string(s.universe())
                        + " does not match graph order " + std::to_string(g.order()));
        }

        auto check_weights(const Graph & g, const WeightFunction & f) -> void
        {
            if (f.order() != g.order())
                throw InvalidArgument("weight function length " + std::to_string(f.order())
                        + " does not match graph order " + std::to_string(g.order()));
        }

        /// For every vertex, how many neighbours it has in s, saturating at 2.
        auto capped_hits(const Graph & g, const VertexSet & s) -> std::vector<std::uint8_t>
        {
            std::vector<std::uint8_t> hits(g.order(), 0);
            s.for_each([&] (Vertex v) {
                for (auto u : g.neighbor_list(v))
                    if (hits[u] < 2)
                        ++hits[u];
            });
            return hits;
        }
    }

    auto open_neighborhood(const Graph & g, Vertex v) -> VertexSet
    {
        return g.neighbors(v);
    }

    auto closed_neighborhood(const Graph & g, Vertex v) -> VertexSet
    {
        auto result = g.neighbors(v);
        result.insert(v);
        return result;
    }

    auto neighborhood(const Graph & g, const VertexSet & s) -> VertexSet
    {
        check_set(g, s);
        VertexSet result(g.order());
        s.for_each([&] (Vertex v) { result |= g.neighbors(v); });
        return result;
    }

    auto external_neighborhood(const Graph & g, const VertexSet & s) -> VertexSet
    {
        return neighborhood(g, s) - s;
    }

    auto external_private_neighborhood(const Graph & g, Vertex v, const VertexSet & d) -> VertexSet
    {
        check_set(g, d);
        if (! d.contains(v))
            throw InvalidArgument("vertex " + std::to_string(v) + " is not a member of the set");
        VertexSet result(g.order());
        for (auto u : g.neighbor_list(v)) {
            if (d.contains(u))
                continue;
            auto dominators = g.neighbors(u) & d;
            dominators.erase(v);
            if (dominators.empty())
                result.insert(u);
        }
        return result;
    }

    auto breakdown(const Graph & g, const VertexSet & d) -> DifferentialBreakdown
    {
        check_set(g, d);
        DifferentialBreakdown result{d, VertexSet(g.order()), VertexSet(g.order()), VertexSet(g.order()), 0, 0};

        // One pass over Ne(D): a vertex seen by exactly one member is private to it.
        auto hits = capped_hits(g, d);
        for (Vertex u = 0 ; u < g.order() ; ++u) {
            if (d.contains(u) || hits[u] == 0)
                continue;
            result.external.insert(u);
            if (hits[u] == 1)
                for (auto v : g.neighbor_list(u))
                    if (d.contains(v))
                        result.weak.insert(v);
        }
        result.strong = d - result.weak;
        auto external = std::int64_t(result.external.size());
        result.differential = external - std::int64_t(d.size());
        result.strong_differential = external - std::int64_t(result.weak.size());
        return result;
    }

    auto is_dominating(const Graph & g, const VertexSet & s) -> bool
    {
        auto covered = neighborhood(g, s) | s;
        return covered == g.all_vertices();
    }

    auto is_2_dominating(const Graph & g, const VertexSet & s) -> bool
    {
        check_set(g, s);
        auto hits = capped_hits(g, s);
        for (Vertex v = 0 ; v < g.order() ; ++v)
            if (! s.contains(v) && hits[v] < 2)
                return false;
        return true;
    }

    auto is_semitotal_dominating(const Graph & g, const VertexSet & s) -> bool
    {
        if (has_isolated_vertex(g))
            throw UndefinedInvariant("semitotal domination is undefined on graphs with isolated vertices");
        if (! is_dominating(g, s))
            return false;
        bool ok = true;
        s.for_each([&] (Vertex v) {
            if (ok && ! second_neighborhood(g, v).intersects(s))
                ok = false;
        });
        return ok;
    }

    auto is_vertex_cover(const Graph & g, const VertexSet & s) -> bool
    {
        check_set(g, s);
        for (auto [u, v] : g.edges())
            if (! s.contains(u) && ! s.contains(v))
                return false;
        return true;
    }

    auto is_independent(const Graph & g, const VertexSet & s) -> bool
    {
        return ! neighborhood(g, s).intersects(s);
    }

    auto is_idf(const Graph & g, const WeightFunction & f) -> bool
    {
        check_weights(g, f);
        for (Vertex v = 0 ; v < g.order() ; ++v) {
            if (f[v] != 0)
                continue;
            unsigned total = 0;
            for (auto u : g.neighbor_list(v))
                total += f[u];
            if (total < 2)
                return false;
        }
        return true;
    }

    auto is_rdf(const Graph & g, const WeightFunction & f) -> bool
    {
        check_weights(g, f);
        for (Vertex v = 0 ; v < g.order() ; ++v) {
            if (f[v] != 0)
                continue;
            auto & nbrs = g.neighbor_list(v);
            if (std::none_of(nbrs.begin(), nbrs.end(), [&] (Vertex u) { return f[u] == 2; }))
                return false;
        }
        return true;
    }

    auto leaves(const Graph & g) -> VertexSet
    {
        VertexSet result(g.order());
        for (Vertex v = 0 ; v < g.order() ; ++v)
            if (g.degree(v) == 1)
                result.insert(v);
        return result;
    }

    auto supports(const Graph & g) -> VertexSet
    {
        return neighborhood(g, leaves(g));
    }

    auto leaf_neighbors(const Graph & g, Vertex v) -> VertexSet
    {
        return g.neighbors(v) & leaves(g);
    }

    auto degree_two_neighbors(const Graph & g, Vertex v) -> VertexSet
    {
        VertexSet result(g.order());
        for (auto u : g.neighbor_list(v))
            if (g.degree(u) == 2)
                result.insert(u);
        return result;
    }

    auto sigma(const Graph & g) -> std::size_t
    {
        auto l = leaves(g);
        std::size_t result = 0;
        for (Vertex v = 0 ; v < g.order() ; ++v)
            if ((g.neighbors(v) & l).size() >= 2)
                ++result;
        return result;
    }

    auto distances_from(const Graph & g, Vertex v) -> std::vector<std::size_t>
    {
        std::vector<std::size_t> dist(g.order(), g.order());
        if (v >= g.order())
            throw InvalidVertex("vertex " + std::to_string(v) + " outside range 0.." + std::to_string(g.order()));
        std::deque<Vertex> queue{v};
        dist[v] = 0;
        while (! queue.empty()) {
            auto u = queue.front();
            queue.pop_front();
            for (auto w : g.neighbor_list(u))
                if (dist[w] == g.order()) {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
        }
        return dist;
    }

    auto eccentricity(const Graph & g, Vertex v) -> std::size_t
    {
        std::size_t result = 0;
        for (auto d : distances_from(g, v))
            if (d != g.order())
                result = std::max(result, d);
        return result;
    }

    auto second_neighborhood(const Graph & g, Vertex v) -> VertexSet
    {
        auto result = g.neighbors(v);
        for (auto u : g.neighbor_list(v))
            result |= g.neighbors(u);
        result.erase(v);
        return result;
    }

    auto components(const Graph & g) -> std::vector<VertexSet>
    {
        std::vector<VertexSet> result;
        VertexSet seen(g.order());
        for (Vertex v = 0 ; v < g.order() ; ++v) {
            if (seen.contains(v))
                continue;
            VertexSet component(g.order());
            auto dist = distances_from(g, v);
            for (Vertex u = 0 ; u < g.order() ; ++u)
                if (dist[u] != g.order())
                    component.insert(u);
            seen |= component;
            result.push_back(std::move(component));
        }
        return result;
    }

    auto is_connected(const Graph & g) -> bool
    {
        return components(g).size() <= 1;
    }

    auto is_tree(const Graph & g) -> bool
    {
        return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
    }

    auto has_isolated_vertex(const Graph & g) -> bool
    {
        return g.order() > 0 && g.min_degree() == 0;
    }

    auto every_component_has_max_degree_two(const Graph & g) -> bool
    {
        for (auto & c : components(g)) {
            std::size_t top = 0;
            c.for_each([&] (Vertex v) { top = std::max(top, g.degree(v)); });
            if (top < 2)
                return false;
        }
        return true;
    }
}

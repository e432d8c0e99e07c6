#include <strongdiff/error.hpp>
#include <strongdiff/families.hpp>
#include <strongdiff/set_calculus.hpp>

#include <algorithm>

namespace strongdiff
{
    auto path_graph(std::size_t n) -> Graph
    {
        if (n == 0)
            throw InvalidSpec("path: order must be positive");
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            edges.emplace_back(v - 1, v);
        return Graph(n, edges);
    }

    auto cycle_graph(std::size_t n) -> Graph
    {
        if (n < 3)
            throw InvalidSpec("cycle: order must be at least 3");
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v)
            edges.emplace_back(v - 1, v);
        edges.emplace_back(0, n - 1);
        return Graph(n, edges);
    }

    auto star_graph(std::size_t leaves) -> Graph
    {
        if (leaves == 0)
            throw InvalidSpec("star: needs at least one leaf");
        std::vector<Edge> edges;
        for (Vertex v = 1; v <= leaves; ++v)
            edges.emplace_back(0, v);
        return Graph(leaves + 1, edges);
    }

    auto complete_graph(std::size_t n) -> Graph
    {
        if (n == 0)
            throw InvalidSpec("complete: order must be positive");
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto complete_bipartite_graph(std::size_t a, std::size_t b) -> Graph
    {
        if (a == 0 || b == 0)
            throw InvalidSpec("bipartite: both parts must be non-empty");
        std::vector<Edge> edges;
        for (Vertex u = 0; u < a; ++u)
            for (Vertex v = a; v < a + b; ++v)
                edges.emplace_back(u, v);
        return Graph(a + b, edges);
    }

    auto subdivided_star(std::size_t r) -> Graph
    {
        if (r == 0)
            throw InvalidSpec("substar: needs at least one ray");
        std::vector<Edge> edges;
        for (Vertex v = 1; v <= r; ++v)
            edges.emplace_back(0, v);
        edges.emplace_back(r, r + 1);
        return Graph(r + 2, edges);
    }

    auto corona(const Graph & g1, const Graph & g2) -> Graph
    {
        auto n1 = g1.order();
        auto n2 = g2.order();
        std::vector<Edge> edges = g1.edges();
        for (Vertex i = 0; i < n1; ++i)
        {
            auto base = n1 + i * n2;
            for (auto [u, v] : g2.edges())
                edges.emplace_back(base + u, base + v);
            for (Vertex u = 0; u < n2; ++u)
                edges.emplace_back(i, base + u);
        }
        return Graph(n1 + n1 * n2, edges);
    }

    auto family_g_member(const std::vector<std::size_t> & leaves_per_support, SupportLayout layout) -> Graph
    {
        if (leaves_per_support.empty())
            throw InvalidSpec("family-g: needs at least one support");
        auto k = leaves_per_support.size();
        std::size_t n = k;
        for (auto l : leaves_per_support)
        {
            if (l < 2)
                throw InvalidSpec("family-g: every support needs at least two leaves");
            n += l;
        }
        std::vector<Edge> edges;
        if (layout == SupportLayout::Path)
            for (Vertex s = 1; s < k; ++s)
                edges.emplace_back(s - 1, s);
        else if (layout == SupportLayout::Complete)
            for (Vertex s = 0; s < k; ++s)
                for (Vertex t = s + 1; t < k; ++t)
                    edges.emplace_back(s, t);
        Vertex next = k;
        for (Vertex s = 0; s < k; ++s)
            for (std::size_t j = 0; j < leaves_per_support[s]; ++j)
                edges.emplace_back(s, next++);
        return Graph(n, edges);
    }

    namespace
    {
        auto lookup(const std::vector<std::string> & labels, std::string_view label) -> Vertex
        {
            auto it = std::find(labels.begin(), labels.end(), label);
            if (it == labels.end())
                throw InvalidArgument("unknown vertex label: " + std::string(label));
            return static_cast<Vertex>(it - labels.begin());
        }

        auto labelled(const std::vector<std::string> & labels, std::initializer_list<std::pair<const char *, const char *>> pairs) -> Graph
        {
            std::vector<Edge> edges;
            for (auto [a, b] : pairs)
                edges.emplace_back(lookup(labels, a), lookup(labels, b));
            return Graph(labels.size(), edges);
        }
    }

    auto figure_a_labels() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> labels {
            "a1", "a11", "a12", "a13", "a2", "a3", "b1", "b2", "b3", "b4", "c1", "c2", "c3", "c4"};
        return labels;
    }

    auto figure_b_labels() -> const std::vector<std::string> &
    {
        static const std::vector<std::string> labels {"a1", "a2", "a3", "a4", "a12", "a23", "a34", "a41"};
        return labels;
    }

    auto figure_a_vertex(std::string_view label) -> Vertex
    {
        return lookup(figure_a_labels(), label);
    }

    auto figure_b_vertex(std::string_view label) -> Vertex
    {
        return lookup(figure_b_labels(), label);
    }

    auto figure_a() -> Graph
    {
        return labelled(figure_a_labels(),
                {{"a1", "a11"}, {"a1", "a12"}, {"a1", "a13"}, {"a1", "a2"}, {"a2", "a3"},
                 {"a3", "b1"}, {"b1", "b2"}, {"b2", "b3"}, {"b3", "b4"}, {"b4", "b1"},
                 {"a3", "c1"}, {"c1", "c2"}, {"c2", "c3"}, {"c3", "c4"}, {"c4", "c1"}});
    }

    auto figure_b() -> Graph
    {
        return labelled(figure_b_labels(),
                {{"a1", "a2"}, {"a2", "a3"}, {"a3", "a4"}, {"a4", "a1"},
                 {"a12", "a1"}, {"a12", "a2"}, {"a23", "a2"}, {"a23", "a3"},
                 {"a34", "a3"}, {"a34", "a4"}, {"a41", "a4"}, {"a41", "a1"}});
    }

    auto is_family_g(const Graph & g) -> bool
    {
        if (g.order() < 3)
            return false;
        auto leaf_set = leaves(g);
        auto support_set = supports(g);
        if (leaf_set.intersects(support_set))
            return false;
        if ((leaf_set | support_set) != g.all_vertices())
            return false;
        for (auto s : support_set.members())
            if ((g.neighbors(s) & leaf_set).size() < 2)
                return false;
        return true;
    }

    auto is_family_t(const Graph & t) -> bool
    {
        if (t.order() < 3)
            throw InvalidArgument("is_family_t: order must be at least 3");
        if (!is_tree(t))
            throw NotATree("is_family_t: graph is not a tree");
        auto delta = t.max_degree();
        auto support_set = supports(t);
        for (Vertex v = 0; v < t.order(); ++v)
        {
            if (t.degree(v) != delta)
                continue;
            if (!support_set.contains(v) || eccentricity(t, v) > 3)
                return false;
            for (auto u : t.neighbor_list(v))
                if (t.degree(u) > 3 || degree_two_neighbors(t, u).size() > 1)
                    return false;
            auto closed = closed_neighborhood(t, v);
            for (Vertex u = 0; u < t.order(); ++u)
                if (!closed.contains(u) && t.degree(u) > 2)
                    return false;
            bool a4 = leaf_neighbors(t, v).size() >= 2;
            for (auto u : t.neighbor_list(v))
                if (support_set.contains(u) && t.degree(u) == 2)
                    a4 = true;
            if (!a4)
                return false;
        }
        return true;
    }
}

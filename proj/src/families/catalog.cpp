#include <strongdiff/error.hpp>
#include <strongdiff/families.hpp>
#include <strongdiff/set_calculus.hpp>

#include <algorithm>
#include <map>
#include <unordered_set>

namespace strongdiff
{
    namespace
    {
        constexpr std::size_t code_limit = 11;
        constexpr std::size_t catalog_limit = 8;

        using Masks = std::vector<std::uint64_t>;

        auto refine(std::size_t n, const Masks & adj) -> std::vector<std::size_t>
        {
            std::vector<std::size_t> colour(n);
            for (std::size_t v = 0; v < n; ++v)
                colour[v] = static_cast<std::size_t>(__builtin_popcountll(adj[v]));
            std::size_t classes = 0;
            while (true)
            {
                std::vector<std::vector<std::size_t>> signature(n);
                for (std::size_t v = 0; v < n; ++v)
                {
                    signature[v].push_back(colour[v]);
                    std::vector<std::size_t> around;
                    for (std::size_t u = 0; u < n; ++u)
                        if ((adj[v] >> u) & 1)
                            around.push_back(colour[u]);
                    std::sort(around.begin(), around.end());
                    signature[v].insert(signature[v].end(), around.begin(), around.end());
                }
                std::map<std::vector<std::size_t>, std::size_t> ids;
                for (auto & sig : signature)
                    ids.emplace(sig, 0);
                std::size_t next = 0;
                for (auto & [sig, id] : ids)
                    id = next++;
                for (std::size_t v = 0; v < n; ++v)
                    colour[v] = ids[signature[v]];
                if (ids.size() == classes)
                    return colour;
                classes = ids.size();
            }
        }

        struct CanonicalSearch
        {
            std::size_t n;
            const Masks & adj;
            std::size_t total;
            std::vector<std::uint64_t> cell_of_position;
            std::vector<std::size_t> perm;
            std::uint64_t used = 0;
            std::uint64_t best = 0;
            bool found = false;

            void run(std::size_t p, std::uint64_t prefix, std::size_t bits)
            {
                if (p == n)
                {
                    if (!found || prefix < best)
                    {
                        best = prefix;
                        found = true;
                    }
                    return;
                }
                auto candidates = cell_of_position[p] & ~used;
                while (candidates)
                {
                    auto v = static_cast<std::size_t>(__builtin_ctzll(candidates));
                    candidates &= candidates - 1;
                    std::uint64_t column = 0;
                    for (std::size_t i = 0; i < p; ++i)
                        column = (column << 1) | ((adj[perm[i]] >> v) & 1);
                    auto next_prefix = (prefix << p) | column;
                    auto next_bits = bits + p;
                    if (found && next_bits > 0 && next_prefix > (best >> (total - next_bits)))
                        continue;
                    perm[p] = v;
                    used |= std::uint64_t {1} << v;
                    run(p + 1, next_prefix, next_bits);
                    used &= ~(std::uint64_t {1} << v);
                }
            }
        };

        auto canonical_masks(std::size_t n, const Masks & adj) -> std::uint64_t
        {
            if (n <= 1)
                return 0;
            auto colour = refine(n, adj);
            std::vector<std::size_t> order(n);
            for (std::size_t v = 0; v < n; ++v)
                order[v] = v;
            std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return colour[a] < colour[b]; });
            CanonicalSearch search {n, adj, n * (n - 1) / 2, std::vector<std::uint64_t>(n, 0), std::vector<std::size_t>(n, 0)};
            for (std::size_t p = 0; p < n; ++p)
                for (std::size_t v = 0; v < n; ++v)
                    if (colour[v] == colour[order[p]])
                        search.cell_of_position[p] |= std::uint64_t {1} << v;
            search.run(0, 0, 0);
            return search.best;
        }

        auto masks_of(const Graph & g) -> Masks
        {
            Masks adj(g.order(), 0);
            for (auto [u, v] : g.edges())
            {
                adj[u] |= std::uint64_t {1} << v;
                adj[v] |= std::uint64_t {1} << u;
            }
            return adj;
        }

        auto add_generic(std::vector<SourcedGraph> & out, const std::string & text)
        {
            auto spec = parse_family_spec(text);
            out.push_back({to_string(spec), generate(spec), spec});
        }
    }

    auto canonical_code(const Graph & g) -> std::uint64_t
    {
        if (g.order() > code_limit)
            throw SizeGuardExceeded(g.order(), code_limit);
        return canonical_masks(g.order(), masks_of(g));
    }

    auto graph_from_code(std::size_t n, std::uint64_t code) -> Graph
    {
        if (n > code_limit)
            throw SizeGuardExceeded(n, code_limit);
        auto total = n * (n - 1) / 2;
        std::vector<Edge> edges;
        std::size_t k = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++k)
                if ((code >> (total - 1 - k)) & 1)
                    edges.emplace_back(i, j);
        return Graph(n, edges);
    }

    auto enumerate_graphs(std::size_t n, bool connected_only) -> std::vector<Graph>
    {
        if (n == 0)
            throw InvalidArgument("enumerate_graphs: order must be positive");
        if (n > catalog_limit)
            throw SizeGuardExceeded(n, catalog_limit);
        std::vector<std::uint64_t> level {0};
        for (std::size_t k = 1; k < n; ++k)
        {
            std::unordered_set<std::uint64_t> seen;
            std::vector<std::uint64_t> next;
            for (auto code : level)
            {
                auto base = masks_of(graph_from_code(k, code));
                for (std::uint64_t s = 0; s < (std::uint64_t {1} << k); ++s)
                {
                    Masks adj = base;
                    adj.push_back(s);
                    for (std::size_t v = 0; v < k; ++v)
                        if ((s >> v) & 1)
                            adj[v] |= std::uint64_t {1} << k;
                    auto c = canonical_masks(k + 1, adj);
                    if (seen.insert(c).second)
                        next.push_back(c);
                }
            }
            std::sort(next.begin(), next.end());
            level = std::move(next);
        }
        std::vector<Graph> result;
        for (auto code : level)
        {
            auto g = graph_from_code(n, code);
            if (!connected_only || is_connected(g))
                result.push_back(std::move(g));
        }
        return result;
    }

    auto mixed_corpus(std::uint64_t seed) -> std::vector<SourcedGraph>
    {
        std::vector<SourcedGraph> out;
        SplitMix64 rng(seed);
        const double ps[] = {0.2, 0.4, 0.6};
        for (std::size_t i = 0; i < 150; ++i)
        {
            auto n = 1 + static_cast<std::size_t>(rng.below(10));
            FamilySpec spec;
            spec.family = Family::RandomGnp;
            spec.params = {n};
            spec.probability = ps[i % 3];
            spec.seed = rng.next();
            out.push_back({to_string(spec), generate(spec), spec});
        }
        for (std::size_t n = 1; n <= 9; ++n)
        {
            TreeStream stream(n);
            std::size_t index = 0;
            while (auto t = stream.next())
                out.push_back({"trees:n=" + std::to_string(n) + "#" + std::to_string(index++), std::move(*t), std::nullopt});
        }
        for (const char * g1 : {"path:1", "path:2", "path:3", "cycle:3", "star:2"})
            for (const char * g2 : {"path:1", "path:2", "path:3", "complete:3", "empty:2"})
                add_generic(out, std::string("corona(") + g1 + "," + g2 + ")");
        for (const char * g : {"family-g:2", "family-g:3", "family-g:2,2", "family-g:2,3,supports=none",
                 "family-g:2,2,2", "family-g:3,2,2,supports=complete", "family-g:4,2"})
            add_generic(out, g);
        add_generic(out, "figure-a");
        add_generic(out, "figure-b");
        for (std::size_t r = 1; r <= 5; ++r)
            add_generic(out, "bipartite:2," + std::to_string(r));
        for (std::size_t r = 1; r <= 8; ++r)
        {
            add_generic(out, "star:" + std::to_string(r));
            add_generic(out, "substar:" + std::to_string(r));
        }
        for (std::size_t n = 1; n <= 12; ++n)
            add_generic(out, "path:" + std::to_string(n));
        for (std::size_t n = 3; n <= 12; ++n)
            add_generic(out, "cycle:" + std::to_string(n));
        return out;
    }
}

#include <strongdiff/error.hpp>
#include <strongdiff/families.hpp>
#include <strongdiff/set_calculus.hpp>

#include <algorithm>
#include <array>
#include <unordered_set>

namespace strongdiff
{
    namespace
    {
        constexpr std::size_t packed_limit = 32;
        constexpr std::size_t dedup_limit = 9;
        constexpr std::size_t stream_limit = 12;

        struct SmallTree
        {
            std::size_t n = 0;
            std::array<std::array<std::uint8_t, packed_limit>, packed_limit> adj {};
            std::array<std::uint8_t, packed_limit> deg {};

            void add(std::size_t u, std::size_t v)
            {
                adj[u][deg[u]++] = static_cast<std::uint8_t>(v);
                adj[v][deg[v]++] = static_cast<std::uint8_t>(u);
            }
        };

        auto tree_centres(const SmallTree & t) -> std::pair<std::size_t, std::size_t>
        {
            auto n = t.n;
            if (n <= 2)
                return {0, n == 2 ? 1 : 0};
            std::array<std::uint8_t, packed_limit> deg = t.deg;
            std::array<std::uint8_t, packed_limit> layer {};
            std::size_t count = 0;
            for (std::size_t v = 0; v < n; ++v)
                if (deg[v] == 1)
                    layer[count++] = static_cast<std::uint8_t>(v);
            std::size_t remaining = n;
            while (remaining > 2)
            {
                remaining -= count;
                std::array<std::uint8_t, packed_limit> next {};
                std::size_t next_count = 0;
                for (std::size_t i = 0; i < count; ++i)
                {
                    auto leaf = layer[i];
                    deg[leaf] = 0;
                    for (std::size_t j = 0; j < t.deg[leaf]; ++j)
                    {
                        auto u = t.adj[leaf][j];
                        if (deg[u] > 0 && --deg[u] == 1)
                            next[next_count++] = u;
                    }
                }
                layer = next;
                count = next_count;
            }
            return count == 2 ? std::pair<std::size_t, std::size_t> {layer[0], layer[1]}
                              : std::pair<std::size_t, std::size_t> {layer[0], layer[0]};
        }

        struct Code
        {
            std::uint64_t bits = 0;
            std::size_t length = 0;

            auto aligned() const -> std::uint64_t
            {
                return length == 0 ? 0 : bits << (64 - length);
            }
        };

        auto rooted_code(const SmallTree & t, std::size_t root) -> std::uint64_t
        {
            std::array<std::uint8_t, packed_limit> order {};
            std::array<std::uint8_t, packed_limit> parent {};
            std::size_t head = 0;
            std::size_t tail = 0;
            order[tail++] = static_cast<std::uint8_t>(root);
            parent[root] = static_cast<std::uint8_t>(root);
            while (head < tail)
            {
                auto v = order[head++];
                for (std::size_t j = 0; j < t.deg[v]; ++j)
                {
                    auto u = t.adj[v][j];
                    if (u != parent[v])
                    {
                        parent[u] = v;
                        order[tail++] = u;
                    }
                }
            }
            std::array<Code, packed_limit> codes {};
            std::array<Code, packed_limit> children {};
            for (std::size_t i = t.n; i-- > 0;)
            {
                auto v = order[i];
                std::size_t k = 0;
                for (std::size_t j = 0; j < t.deg[v]; ++j)
                {
                    auto u = t.adj[v][j];
                    if (u != parent[v])
                        children[k++] = codes[u];
                }
                std::sort(children.begin(), children.begin() + static_cast<std::ptrdiff_t>(k),
                        [](const Code & a, const Code & b) { return a.aligned() < b.aligned(); });
                Code code {1, 1};
                for (std::size_t c = 0; c < k; ++c)
                {
                    code.bits = (code.bits << children[c].length) | children[c].bits;
                    code.length += children[c].length;
                }
                code.bits <<= 1;
                code.length += 1;
                codes[v] = code;
            }
            return codes[root].bits;
        }

        auto packed_tree_code(const SmallTree & t) -> std::uint64_t
        {
            auto [c1, c2] = tree_centres(t);
            auto code = rooted_code(t, c1);
            if (c2 != c1)
                code = std::min(code, rooted_code(t, c2));
            return code;
        }

        void decode_into(std::size_t n, const std::vector<std::size_t> & sequence, SmallTree & t)
        {
            t.n = n;
            std::fill(t.deg.begin(), t.deg.end(), 0);
            if (n <= 1)
                return;
            std::array<std::size_t, packed_limit> degree {};
            for (std::size_t v = 0; v < n; ++v)
                degree[v] = 1;
            for (auto x : sequence)
                ++degree[x];
            std::size_t ptr = 0;
            while (degree[ptr] != 1)
                ++ptr;
            std::size_t leaf = ptr;
            for (auto x : sequence)
            {
                t.add(leaf, x);
                if (--degree[x] == 1 && x < ptr)
                {
                    leaf = x;
                }
                else
                {
                    ++ptr;
                    while (degree[ptr] != 1)
                        ++ptr;
                    leaf = ptr;
                }
            }
            t.add(leaf, n - 1);
        }

        auto to_graph(const SmallTree & t) -> Graph
        {
            std::vector<Edge> edges;
            for (std::size_t v = 0; v < t.n; ++v)
                for (std::size_t j = 0; j < t.deg[v]; ++j)
                    if (v < t.adj[v][j])
                        edges.emplace_back(v, t.adj[v][j]);
            return Graph(t.n, edges);
        }

        auto string_code(const Graph & t, Vertex root) -> std::string
        {
            std::vector<Vertex> order {root};
            std::vector<Vertex> parent(t.order(), t.order());
            parent[root] = root;
            for (std::size_t head = 0; head < order.size(); ++head)
                for (auto u : t.neighbor_list(order[head]))
                    if (parent[u] == t.order())
                    {
                        parent[u] = order[head];
                        order.push_back(u);
                    }
            std::vector<std::string> codes(t.order());
            for (std::size_t i = order.size(); i-- > 0;)
            {
                auto v = order[i];
                std::vector<std::string> children;
                for (auto u : t.neighbor_list(v))
                    if (parent[u] == v && u != v)
                        children.push_back(std::move(codes[u]));
                std::sort(children.begin(), children.end());
                std::string code = "(";
                for (auto & c : children)
                    code += c;
                code += ')';
                codes[v] = std::move(code);
            }
            return codes[root];
        }
    }

    auto canonical_tree_code(const Graph & t) -> std::string
    {
        if (!is_tree(t))
            throw NotATree("canonical_tree_code: graph is not a tree");
        auto n = t.order();
        std::vector<std::size_t> deg(n);
        std::vector<Vertex> layer;
        for (Vertex v = 0; v < n; ++v)
        {
            deg[v] = t.degree(v);
            if (deg[v] <= 1)
                layer.push_back(v);
        }
        auto remaining = n;
        while (remaining > 2)
        {
            remaining -= layer.size();
            std::vector<Vertex> next;
            for (auto leaf : layer)
            {
                deg[leaf] = 0;
                for (auto u : t.neighbor_list(leaf))
                    if (deg[u] > 0 && --deg[u] == 1)
                        next.push_back(u);
            }
            layer = std::move(next);
        }
        auto code = string_code(t, layer[0]);
        if (layer.size() == 2)
            code = std::min(code, string_code(t, layer[1]));
        return code;
    }

    struct TreeStream::State
    {
        std::size_t n = 0;
        std::vector<std::size_t> sequence;
        bool exhausted = false;
        std::unordered_set<std::uint64_t> seen;
        SmallTree scratch;

        auto advance() -> bool
        {
            for (std::size_t i = sequence.size(); i-- > 0;)
            {
                if (++sequence[i] < n)
                    return true;
                sequence[i] = 0;
            }
            return false;
        }
    };

    TreeStream::TreeStream(std::size_t n) : _state(std::make_unique<State>())
    {
        if (n == 0)
            throw InvalidArgument("enumerate_trees: order must be positive");
        if (n > stream_limit)
            throw SizeGuardExceeded(n, stream_limit);
        _state->n = n;
        _state->sequence.assign(n >= 2 ? n - 2 : 0, 0);
    }

    TreeStream::~TreeStream() = default;
    TreeStream::TreeStream(TreeStream &&) noexcept = default;
    auto TreeStream::operator=(TreeStream &&) noexcept -> TreeStream & = default;

    auto TreeStream::next() -> std::optional<Graph>
    {
        auto & s = *_state;
        while (!s.exhausted)
        {
            decode_into(s.n, s.sequence, s.scratch);
            s.exhausted = !s.advance();
            if (s.n <= dedup_limit && !s.seen.insert(packed_tree_code(s.scratch)).second)
                continue;
            return to_graph(s.scratch);
        }
        return std::nullopt;
    }

    auto enumerate_trees(std::size_t n) -> std::vector<Graph>
    {
        TreeStream stream(n);
        std::vector<Graph> result;
        while (auto t = stream.next())
            result.push_back(std::move(*t));
        return result;
    }
}

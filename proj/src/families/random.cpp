#include <strongdiff/error.hpp>
#include <strongdiff/families.hpp>

namespace strongdiff
{
    auto SplitMix64::next() -> std::uint64_t
    {
        std::uint64_t z = (_state += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    auto SplitMix64::below(std::uint64_t bound) -> std::uint64_t
    {
        if (bound == 0)
            throw InvalidArgument("SplitMix64::below: bound must be positive");
        // Lemire's multiply-and-reject
        auto product = static_cast<unsigned __int128>(next()) * bound;
        auto low = static_cast<std::uint64_t>(product);
        if (low < bound)
        {
            std::uint64_t threshold = (0 - bound) % bound;
            while (low < threshold)
            {
                product = static_cast<unsigned __int128>(next()) * bound;
                low = static_cast<std::uint64_t>(product);
            }
        }
        return static_cast<std::uint64_t>(product >> 64);
    }

    auto SplitMix64::unit() -> double
    {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    auto random_gnp(std::size_t n, double p, std::uint64_t seed) -> Graph
    {
        if (n == 0)
            throw InvalidSpec("gnp: order must be positive");
        if (!(p >= 0.0 && p <= 1.0))
            throw InvalidSpec("gnp: probability must lie in [0, 1]");
        SplitMix64 rng(seed);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng.unit() < p)
                    edges.emplace_back(u, v);
        return Graph(n, edges);
    }

    auto pruefer_decode(std::size_t n, const std::vector<std::size_t> & sequence) -> Graph
    {
        if (n == 0)
            throw InvalidArgument("pruefer_decode: order must be positive");
        if (n == 1)
            return Graph(1, {});
        if (sequence.size() != n - 2)
            throw InvalidArgument("pruefer_decode: sequence must have length n - 2");
        std::vector<std::size_t> degree(n, 1);
        for (auto x : sequence)
        {
            if (x >= n)
                throw InvalidArgument("pruefer_decode: entry out of range");
            ++degree[x];
        }
        std::vector<Edge> edges;
        edges.reserve(n - 1);
        std::size_t ptr = 0;
        while (degree[ptr] != 1)
            ++ptr;
        std::size_t leaf = ptr;
        for (auto x : sequence)
        {
            edges.emplace_back(std::min(leaf, x), std::max(leaf, x));
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
        edges.emplace_back(std::min(leaf, n - 1), std::max(leaf, n - 1));
        return Graph(n, edges);
    }

    auto random_tree(std::size_t n, std::uint64_t seed) -> Graph
    {
        if (n == 0)
            throw InvalidSpec("tree: order must be positive");
        if (n <= 2)
            return n == 1 ? Graph(1, {}) : Graph(2, {{0, 1}});
        SplitMix64 rng(seed);
        std::vector<std::size_t> sequence(n - 2);
        for (auto & x : sequence)
            x = rng.below(n);
        return pruefer_decode(n, sequence);
    }
}

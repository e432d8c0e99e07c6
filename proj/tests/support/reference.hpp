#pragma once

// Definition-level brute force, deliberately independent of the library's
// kernels and search code. Graphs up to 16 vertices.

#include <strongdiff/graph.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace reference
{
    using Mask = std::uint32_t;

    struct Small
    {
        int n = 0;
        std::vector<Mask> adj;
    };

    inline auto from(const strongdiff::Graph & g) -> Small
    {
        if (g.order() > 16)
            throw std::invalid_argument("reference graphs are limited to 16 vertices");
        Small s {static_cast<int>(g.order()), std::vector<Mask>(g.order(), 0)};
        for (auto [u, v] : g.edges())
        {
            s.adj[u] |= Mask {1} << v;
            s.adj[v] |= Mask {1} << u;
        }
        return s;
    }

    inline auto bit(int v) -> Mask
    {
        return Mask {1} << v;
    }

    inline auto pop(Mask m) -> int
    {
        return __builtin_popcount(m);
    }

    inline auto has(Mask m, int v) -> bool
    {
        return (m >> v) & 1;
    }

    inline auto external_count(const Small & g, Mask s) -> int
    {
        int count = 0;
        for (int v = 0; v < g.n; ++v)
            if (!has(s, v) && (g.adj[v] & s))
                ++count;
        return count;
    }

    inline auto weak_members(const Small & g, Mask s) -> Mask
    {
        Mask weak = 0;
        for (int u = 0; u < g.n; ++u)
            if (!has(s, u) && pop(g.adj[u] & s) == 1)
                weak |= g.adj[u] & s;
        return weak;
    }

    inline auto strong_differential_of(const Small & g, Mask s) -> int
    {
        return external_count(g, s) - pop(weak_members(g, s));
    }

    inline auto differential_of(const Small & g, Mask s) -> int
    {
        return external_count(g, s) - pop(s);
    }

    inline auto dominating(const Small & g, Mask s) -> bool
    {
        for (int v = 0; v < g.n; ++v)
            if (!has(s, v) && !(g.adj[v] & s))
                return false;
        return true;
    }

    inline auto two_dominating(const Small & g, Mask s) -> bool
    {
        for (int v = 0; v < g.n; ++v)
            if (!has(s, v) && pop(g.adj[v] & s) < 2)
                return false;
        return true;
    }

    inline auto within_two(const Small & g, int u, int v) -> bool
    {
        return has(g.adj[u], v) || (g.adj[u] & g.adj[v]);
    }

    inline auto semitotal(const Small & g, Mask s) -> bool
    {
        if (!dominating(g, s))
            return false;
        for (int v = 0; v < g.n; ++v)
        {
            if (!has(s, v))
                continue;
            bool partner = false;
            for (int u = 0; u < g.n && !partner; ++u)
                partner = u != v && has(s, u) && within_two(g, u, v);
            if (!partner)
                return false;
        }
        return true;
    }

    inline auto independent(const Small & g, Mask s) -> bool
    {
        for (int v = 0; v < g.n; ++v)
            if (has(s, v) && (g.adj[v] & s))
                return false;
        return true;
    }

    inline auto covers(const Small & g, Mask s) -> bool
    {
        for (int v = 0; v < g.n; ++v)
            if (!has(s, v) && (g.adj[v] & ~s))
                return false;
        return true;
    }

    template <typename Score>
    auto best_over_subsets(const Small & g, Score score, bool maximize) -> int
    {
        int best = maximize ? -1 : g.n + 1;
        for (Mask s = 0; s < (Mask {1} << g.n); ++s)
        {
            int value = 0;
            if (!score(s, value))
                continue;
            best = maximize ? std::max(best, value) : std::min(best, value);
        }
        return best;
    }

    inline auto strong_differential(const Small & g) -> int
    {
        return best_over_subsets(g, [&](Mask s, int & v) { v = strong_differential_of(g, s); return true; }, true);
    }

    inline auto differential(const Small & g) -> int
    {
        return best_over_subsets(g, [&](Mask s, int & v) { v = differential_of(g, s); return true; }, true);
    }

    inline auto domination(const Small & g) -> int
    {
        return best_over_subsets(g, [&](Mask s, int & v) { v = pop(s); return dominating(g, s); }, false);
    }

    inline auto two_domination(const Small & g) -> int
    {
        return best_over_subsets(g, [&](Mask s, int & v) { v = pop(s); return two_dominating(g, s); }, false);
    }

    inline auto semitotal_domination(const Small & g) -> int
    {
        return best_over_subsets(g, [&](Mask s, int & v) { v = pop(s); return semitotal(g, s); }, false);
    }

    inline auto independence(const Small & g) -> int
    {
        return best_over_subsets(g, [&](Mask s, int & v) { v = pop(s); return independent(g, s); }, true);
    }

    inline auto vertex_cover(const Small & g) -> int
    {
        return best_over_subsets(g, [&](Mask s, int & v) { v = pop(s); return covers(g, s); }, false);
    }

    /// Minimum weight over all {0,1,2} labellings accepted by ok(ones, twos).
    template <typename Ok>
    auto best_labelling(const Small & g, Ok ok) -> int
    {
        std::vector<int> digit(g.n, 0);
        int best = 2 * g.n + 1;
        while (true)
        {
            Mask ones = 0;
            Mask twos = 0;
            int weight = 0;
            for (int v = 0; v < g.n; ++v)
            {
                weight += digit[v];
                if (digit[v] == 1)
                    ones |= bit(v);
                else if (digit[v] == 2)
                    twos |= bit(v);
            }
            if (weight < best && ok(ones, twos))
                best = weight;
            int i = 0;
            while (i < g.n && digit[i] == 2)
                digit[i++] = 0;
            if (i == g.n)
                return best;
            ++digit[i];
        }
    }

    inline auto roman_domination(const Small & g) -> int
    {
        return best_labelling(g, [&](Mask ones, Mask twos) {
            for (int v = 0; v < g.n; ++v)
                if (!has(ones | twos, v) && !(g.adj[v] & twos))
                    return false;
            return true;
        });
    }

    inline auto italian_domination(const Small & g) -> int
    {
        return best_labelling(g, [&](Mask ones, Mask twos) {
            for (int v = 0; v < g.n; ++v)
                if (!has(ones | twos, v) && pop(g.adj[v] & ones) + 2 * pop(g.adj[v] & twos) < 2)
                    return false;
            return true;
        });
    }

    /// Reference value by invariant name; semitotal returns -1 when undefined.
    inline auto value(const Small & g, const std::string & name) -> int
    {
        if (name == "strong-differential")
            return strong_differential(g);
        if (name == "differential")
            return differential(g);
        if (name == "domination")
            return domination(g);
        if (name == "two-domination")
            return two_domination(g);
        if (name == "semitotal-domination")
        {
            for (int v = 0; v < g.n; ++v)
                if (g.adj[v] == 0)
                    return -1;
            return semitotal_domination(g);
        }
        if (name == "roman-domination")
            return roman_domination(g);
        if (name == "italian-domination")
            return italian_domination(g);
        if (name == "independence")
            return independence(g);
        if (name == "vertex-cover")
            return vertex_cover(g);
        throw std::invalid_argument("unknown invariant " + name);
    }

    /// graph6 decoding written straight from the format description.
    inline auto decode_graph6(const std::string & line) -> std::pair<int, std::vector<std::pair<int, int>>>
    {
        std::vector<int> six;
        for (char c : line)
            six.push_back(static_cast<unsigned char>(c) - 63);
        int n = 0;
        std::size_t pos = 0;
        if (six[0] < 63)
        {
            n = six[0];
            pos = 1;
        }
        else
        {
            n = (six[1] << 12) | (six[2] << 6) | six[3];
            pos = 4;
        }
        std::vector<int> bits;
        for (; pos < six.size(); ++pos)
            for (int b = 5; b >= 0; --b)
                bits.push_back((six[pos] >> b) & 1);
        std::vector<std::pair<int, int>> edges;
        std::size_t k = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                if (bits.at(k++))
                    edges.emplace_back(i, j);
        return {n, edges};
    }
}

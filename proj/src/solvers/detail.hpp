#pragma once

#include <strongdiff/graph.hpp>
#include <strongdiff/solvers.hpp>

#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace strongdiff::detail
{
    using Mask = std::uint64_t;

    constexpr std::int64_t infeasible = std::numeric_limits<std::int64_t>::max();
    constexpr std::int64_t no_incumbent = std::numeric_limits<std::int64_t>::max() / 2;

    inline auto bit(std::size_t v) -> Mask { return Mask{1} << v; }
    inline auto all_of(std::size_t n) -> Mask { return n >= 64 ? ~Mask{0} : bit(n) - 1; }
    inline auto count(Mask m) -> std::int64_t { return std::popcount(m); }

    /// Throws EmptyGraph / SizeGuardExceeded as appropriate.
    auto check_guard(const Graph & g, std::size_t guard, bool allow_override) -> void;

    /// Word-level view of a graph of at most 64 vertices.
    struct Bitgraph
    {
        explicit Bitgraph(const Graph & g);

        std::size_t n;
        Mask all;
        std::vector<Mask> adj;
        std::vector<Mask> closed;
        std::vector<Mask> ball2;

        auto neighborhood(Mask s) const -> Mask
        {
            Mask result = 0;
            for ( ; s ; s &= s - 1)
                result |= adj[std::countr_zero(s)];
            return result;
        }

        auto weak_members(Mask d) const -> Mask
        {
            Mask once = 0, twice = 0;
            for (auto s = d ; s ; s &= s - 1) {
                auto row = adj[std::countr_zero(s)];
                twice |= once & row;
                once |= row;
            }
            auto privates = once & ~twice & ~d;
            Mask weak = 0;
            for (auto s = d ; s ; s &= s - 1) {
                auto v = std::countr_zero(s);
                if (adj[v] & privates)
                    weak |= bit(v);
            }
            return weak;
        }
    };

    struct MaskSolution
    {
        std::int64_t value;
        Mask set;
    };

    struct WeightSolution
    {
        std::int64_t value;
        Mask ones;
        Mask twos;
    };

    /// Solves each connected component separately and stitches the witnesses
    /// back into the original numbering. Values add up.
    auto by_components(const Graph & g, const std::function<MaskSolution (const Graph &)> & solve_one) -> MaskSolution;
    auto by_components(const Graph & g, const std::function<WeightSolution (const Graph &)> & solve_one) -> WeightSolution;

    /// Set searches; each returns an optimum with the lexicographically smallest witness.
    auto search_domination(const Graph & g) -> MaskSolution;
    auto search_two_domination(const Graph & g) -> MaskSolution;
    auto search_semitotal_domination(const Graph & g) -> MaskSolution;
    auto search_independence(const Graph & g) -> MaskSolution;
    auto search_vertex_cover(const Graph & g) -> MaskSolution;
    auto search_differential(const Graph & g) -> MaskSolution;
    /// Maximises n - |D| - |weak(D)| over dominating sets D.
    auto search_strong_differential(const Graph & g) -> MaskSolution;

    auto search_italian(const Graph & g) -> WeightSolution;
    auto search_roman(const Graph & g) -> WeightSolution;

    /// Lexicographic order on weight strings given as (ones, twos) masks.
    inline auto weights_lex_less(Mask ones_a, Mask twos_a, Mask ones_b, Mask twos_b) -> bool
    {
        auto diff = (ones_a ^ ones_b) | (twos_a ^ twos_b);
        if (! diff)
            return false;
        auto first = diff & (~diff + 1);
        auto weight_a = (ones_a & first) ? 1 : (twos_a & first) ? 2 : 0;
        auto weight_b = (ones_b & first) ? 1 : (twos_b & first) ? 2 : 0;
        return weight_a < weight_b;
    }

    /// Plain enumeration over all 2^n subsets / all 3^n weight functions.
    auto oracle_sets(const Graph & g, Invariant which) -> MaskSolution;
    auto oracle_weights(const Graph & g, Invariant which) -> WeightSolution;

    struct SubsetView
    {
        Mask set;
        Mask once;
        Mask twice;
        Mask weak;
    };

    /// Streams every subset of V(g) in increasing integer order through the
    /// active coverage kernels.
    auto for_each_subset(const Graph & g, const std::function<void (const SubsetView &)> & f) -> void;
}

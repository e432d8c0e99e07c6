#pragma once

#include <strongdiff/graph.hpp>
#include <strongdiff/solvers.hpp>
#include <strongdiff/vertex_set.hpp>

#include <cstdint>
#include <vector>

namespace strongdiff
{
    /// Every optimal set of some invariant, found by enumerating all 2^n subsets.
    struct OptimalSets
    {
        std::int64_t value = 0;
        std::vector<VertexSet> sets;
    };

    /// All D with strong differential equal to the graph's, dominating or not.
    /// Requires order <= cfg.exhaustive_guard.
    auto all_strong_differential_sets(const Graph & g, const SolverConfig & cfg = {}) -> OptimalSets;

    /// All minimum dominating sets. Requires order <= cfg.exhaustive_guard.
    auto all_minimum_dominating_sets(const Graph & g, const SolverConfig & cfg = {}) -> OptimalSets;
}

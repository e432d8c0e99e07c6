#include "detail.hpp"

#include <strongdiff/exhaustive.hpp>

namespace strongdiff
{
    using namespace detail;

    namespace
    {
        auto collect(const Graph & g, std::int64_t value, const std::vector<Mask> & masks) -> OptimalSets
        {
            OptimalSets result{value, {}};
            result.sets.reserve(masks.size());
            for (auto m : masks)
                result.sets.push_back(VertexSet::from_mask(g.order(), m));
            return result;
        }
    }

    auto all_strong_differential_sets(const Graph & g, const SolverConfig & cfg) -> OptimalSets
    {
        check_guard(g, cfg.exhaustive_guard, false);
        std::int64_t best = -1;
        std::vector<Mask> sets;
        for_each_subset(g, [&] (const SubsetView & s) {
            auto value = count(s.once & ~s.set) - count(s.weak);
            if (value > best) {
                best = value;
                sets.clear();
            }
            if (value == best)
                sets.push_back(s.set);
        });
        return collect(g, best, sets);
    }

    auto all_minimum_dominating_sets(const Graph & g, const SolverConfig & cfg) -> OptimalSets
    {
        check_guard(g, cfg.exhaustive_guard, false);
        auto all = all_of(g.order());
        std::int64_t best = std::int64_t(g.order()) + 1;
        std::vector<Mask> sets;
        for_each_subset(g, [&] (const SubsetView & s) {
            if ((s.set | s.once) != all)
                return;
            auto size = count(s.set);
            if (size < best) {
                best = size;
                sets.clear();
            }
            if (size == best)
                sets.push_back(s.set);
        });
        return collect(g, best, sets);
    }
}

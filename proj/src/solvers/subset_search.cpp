#include "detail.hpp"

#include <algorithm>

namespace strongdiff::detail
{
    namespace
    {
        /**
         * Depth-first search over membership decisions in vertex-index order,
         * "out" before "in". Leaves are therefore visited in increasing
         * lexicographic order of their membership strings, and since the
         * incumbent is only replaced on strict improvement (and subtrees are
         * cut when their bound cannot beat it) the first optimum found is the
         * lexicographically smallest one.
         *
         * A policy minimises a cost and supplies lower_bound(in, i), where the
         * vertices below i are decided and `in` holds the chosen ones; it
         * returns `infeasible` when no completion can be valid. At i == n
         * the bound must be the exact cost of `in`, or `infeasible`.
         */
        template <typename Policy>
        class SubsetSearch
        {
            public:
                explicit SubsetSearch(const Policy & policy, std::size_t n) :
                    _policy(policy),
                    _n(n)
                {
                }

                auto run() -> MaskSolution
                {
                    visit(0, 0);
                    return MaskSolution{_best, _best_set};
                }

            private:
                auto visit(std::size_t i, Mask in) -> void
                {
                    auto bound = _policy.lower_bound(in, i);
                    if (bound >= _best)
                        return;
                    if (i == _n) {
                        _best = bound;
                        _best_set = in;
                        return;
                    }
                    visit(i + 1, in);
                    if (_policy.may_include(in, i))
                        visit(i + 1, in | bit(i));
                }

                const Policy & _policy;
                std::size_t _n;
                std::int64_t _best = no_incumbent;
                Mask _best_set = 0;
        };

        auto undecided(const Bitgraph & b, std::size_t i) -> Mask
        {
            return b.all & ~all_of(i);
        }

        /// Minimum number of extra vertices from `pool` whose closed
        /// neighbourhoods must cover `targets`, as a counting bound; infeasible
        /// when some target has no candidate in `pool`.
        auto covering_bound(const Bitgraph & b, Mask targets, Mask pool) -> std::int64_t
        {
            if (! targets)
                return 0;
            for (auto t = targets ; t ; t &= t - 1)
                if (! (b.closed[std::countr_zero(t)] & pool))
                    return infeasible;
            std::int64_t best_cover = 0;
            for (auto p = pool ; p ; p &= p - 1)
                best_cover = std::max(best_cover, count(b.closed[std::countr_zero(p)] & targets));
            return (count(targets) + best_cover - 1) / best_cover;
        }

        struct DominationPolicy
        {
            const Bitgraph & b;

            auto may_include(Mask, std::size_t) const -> bool { return true; }

            auto lower_bound(Mask in, std::size_t i) const -> std::int64_t
            {
                auto undominated = b.all & ~(in | b.neighborhood(in));
                auto extra = covering_bound(b, undominated, undecided(b, i));
                return extra == infeasible ? infeasible : count(in) + extra;
            }
        };

        /// Cost |D| + |weak(D)| over dominating D; the strong differential is n minus it.
        struct StrongDifferentialPolicy
        {
            const Bitgraph & b;

            auto may_include(Mask, std::size_t) const -> bool { return true; }

            auto lower_bound(Mask in, std::size_t i) const -> std::int64_t
            {
                auto free = undecided(b, i);
                auto undominated = b.all & ~(in | b.neighborhood(in));
                auto extra = covering_bound(b, undominated, free);
                if (extra == infeasible)
                    return infeasible;
                if (i == b.n)
                    return count(in) + count(b.weak_members(in));

                // An excluded vertex whose only possible dominator is already
                // chosen keeps that dominator weak in every completion.
                Mask forced_weak = 0;
                auto excluded = all_of(i) & ~in;
                for (auto o = excluded ; o ; o &= o - 1) {
                    auto reachable = b.adj[std::countr_zero(o)] & (in | free);
                    if (std::has_single_bit(reachable) && (reachable & in))
                        forced_weak |= reachable;
                }
                return count(in) + count(forced_weak) + extra;
            }
        };

        /// Cost -(|Ne(S)| - |S|).
        struct DifferentialPolicy
        {
            const Bitgraph & b;

            auto may_include(Mask, std::size_t) const -> bool { return true; }

            auto lower_bound(Mask in, std::size_t i) const -> std::int64_t
            {
                auto reached = b.neighborhood(in);
                auto current = count(reached & ~in) - count(in);
                std::int64_t gain = 0;
                auto covered = reached | in;
                for (auto f = undecided(b, i) ; f ; f &= f - 1)
                    gain += std::max<std::int64_t>(0, count(b.adj[std::countr_zero(f)] & ~covered) - 1);
                return -(current + gain);
            }
        };

        struct TwoDominationPolicy
        {
            const Bitgraph & b;

            auto may_include(Mask, std::size_t) const -> bool { return true; }

            auto lower_bound(Mask in, std::size_t i) const -> std::int64_t
            {
                auto free = undecided(b, i);
                auto excluded = all_of(i) & ~in;
                std::int64_t demand = 0;
                Mask needy = 0;
                for (auto o = excluded ; o ; o &= o - 1) {
                    auto v = std::countr_zero(o);
                    auto missing = std::max<std::int64_t>(0, 2 - count(b.adj[v] & in));
                    if (missing == 0)
                        continue;
                    if (count(b.adj[v] & free) < missing)
                        return infeasible;
                    demand += missing;
                    needy |= bit(v);
                }
                if (demand == 0)
                    return count(in);
                std::int64_t best_cover = 0;
                for (auto f = free ; f ; f &= f - 1)
                    best_cover = std::max(best_cover, count(b.adj[std::countr_zero(f)] & needy));
                return count(in) + (demand + best_cover - 1) / best_cover;
            }
        };

        struct SemitotalPolicy
        {
            const Bitgraph & b;

            auto may_include(Mask, std::size_t) const -> bool { return true; }

            auto lower_bound(Mask in, std::size_t i) const -> std::int64_t
            {
                auto free = undecided(b, i);
                for (auto s = in ; s ; s &= s - 1)
                    if (! (b.ball2[std::countr_zero(s)] & (in | free)))
                        return infeasible;
                auto undominated = b.all & ~(in | b.neighborhood(in));
                auto extra = covering_bound(b, undominated, free);
                return extra == infeasible ? infeasible : count(in) + extra;
            }
        };

        /// Cost -|S| over independent S.
        struct IndependencePolicy
        {
            const Bitgraph & b;

            auto may_include(Mask in, std::size_t i) const -> bool { return ! (b.adj[i] & in); }

            auto lower_bound(Mask in, std::size_t i) const -> std::int64_t
            {
                auto available = undecided(b, i) & ~b.neighborhood(in);
                return -(count(in) + count(available));
            }
        };

        struct VertexCoverPolicy
        {
            const Bitgraph & b;

            auto may_include(Mask, std::size_t) const -> bool { return true; }

            auto lower_bound(Mask in, std::size_t i) const -> std::int64_t
            {
                auto excluded = all_of(i) & ~in;
                for (auto o = excluded ; o ; o &= o - 1)
                    if (b.adj[std::countr_zero(o)] & excluded)
                        return infeasible;

                // Greedy matching on the uncovered edges touching undecided vertices.
                Mask matched = 0;
                std::int64_t matching = 0;
                for (auto f = undecided(b, i) ; f ; f &= f - 1) {
                    auto v = std::countr_zero(f);
                    if (matched & bit(v))
                        continue;
                    auto partners = b.adj[v] & ~in & ~matched;
                    if (partners) {
                        matched |= bit(v) | (partners & (~partners + 1));
                        ++matching;
                    }
                }
                return count(in) + matching;
            }
        };

        template <typename Policy>
        auto run(const Graph & g) -> MaskSolution
        {
            Bitgraph b(g);
            Policy policy{b};
            return SubsetSearch<Policy>(policy, b.n).run();
        }
    }

    auto search_domination(const Graph & g) -> MaskSolution
    {
        return run<DominationPolicy>(g);
    }

    auto search_two_domination(const Graph & g) -> MaskSolution
    {
        return run<TwoDominationPolicy>(g);
    }

    auto search_semitotal_domination(const Graph & g) -> MaskSolution
    {
        return run<SemitotalPolicy>(g);
    }

    auto search_independence(const Graph & g) -> MaskSolution
    {
        auto s = run<IndependencePolicy>(g);
        return MaskSolution{-s.value, s.set};
    }

    auto search_vertex_cover(const Graph & g) -> MaskSolution
    {
        return run<VertexCoverPolicy>(g);
    }

    auto search_differential(const Graph & g) -> MaskSolution
    {
        auto s = run<DifferentialPolicy>(g);
        return MaskSolution{-s.value, s.set};
    }

    auto search_strong_differential(const Graph & g) -> MaskSolution
    {
        auto s = run<StrongDifferentialPolicy>(g);
        return MaskSolution{std::int64_t(g.order()) - s.value, s.set};
    }
}

#include "detail.hpp"

#include <algorithm>

namespace strongdiff::detail
{
    namespace
    {
        /// Assigns 0, 1, 2 to vertices in index order, so leaves come in
        /// lexicographic order of the weight string; same incumbent rule as
        /// the subset search.
        template <typename Policy>
        class WeightSearch
        {
            public:
                WeightSearch(const Policy & policy, std::size_t n) :
                    _policy(policy),
                    _n(n)
                {
                }

                auto run() -> WeightSolution
                {
                    visit(0, 0, 0);
                    return WeightSolution{_best, _best_ones, _best_twos};
                }

            private:
                auto visit(std::size_t i, Mask ones, Mask twos) -> void
                {
                    auto bound = _policy.lower_bound(ones, twos, i);
                    if (bound >= _best)
                        return;
                    if (i == _n) {
                        _best = bound;
                        _best_ones = ones;
                        _best_twos = twos;
                        return;
                    }
                    visit(i + 1, ones, twos);
                    visit(i + 1, ones | bit(i), twos);
                    visit(i + 1, ones, twos | bit(i));
                }

                const Policy & _policy;
                std::size_t _n;
                std::int64_t _best = no_incumbent;
                Mask _best_ones = 0, _best_twos = 0;
        };

        struct ItalianPolicy
        {
            const Bitgraph & b;

            auto lower_bound(Mask ones, Mask twos, std::size_t i) const -> std::int64_t
            {
                auto assigned = all_of(i);
                auto free = b.all & ~assigned;
                auto zeros = assigned & ~ones & ~twos;
                auto weight = count(ones) + 2 * count(twos);

                // Outstanding demand: a zero vertex needs neighbourhood weight 2,
                // and an unassigned vertex with no weighted neighbour needs at
                // least one unit somewhere in its closed neighbourhood.
                std::int64_t demand = 0;
                Mask needy_zeros = 0, needy_free = 0;
                for (auto z = zeros ; z ; z &= z - 1) {
                    auto v = std::countr_zero(z);
                    auto got = (b.adj[v] & twos) ? 2 : std::min<std::int64_t>(2, count(b.adj[v] & ones));
                    if (got >= 2)
                        continue;
                    if (2 * count(b.adj[v] & free) < 2 - got)
                        return infeasible;
                    demand += 2 - got;
                    needy_zeros |= bit(v);
                }
                for (auto f = free ; f ; f &= f - 1) {
                    auto v = std::countr_zero(f);
                    if (! (b.adj[v] & (ones | twos))) {
                        ++demand;
                        needy_free |= bit(v);
                    }
                }
                if (demand == 0)
                    return weight;

                // One unit of weight on x lowers the demand of each needy
                // neighbour of x by at most one.
                std::int64_t best_cover = 0;
                for (auto f = free ; f ; f &= f - 1) {
                    auto v = std::countr_zero(f);
                    best_cover = std::max(best_cover, count(b.adj[v] & needy_zeros) + count(b.closed[v] & needy_free));
                }
                if (best_cover == 0)
                    return infeasible;
                return weight + (demand + best_cover - 1) / best_cover;
            }
        };

        struct RomanPolicy
        {
            const Bitgraph & b;

            auto lower_bound(Mask ones, Mask twos, std::size_t i) const -> std::int64_t
            {
                auto assigned = all_of(i);
                auto free = b.all & ~assigned;
                auto zeros = assigned & ~ones & ~twos;
                auto weight = count(ones) + 2 * count(twos);

                Mask needy_zeros = 0, needy_free = 0;
                for (auto z = zeros ; z ; z &= z - 1) {
                    auto v = std::countr_zero(z);
                    if (b.adj[v] & twos)
                        continue;
                    if (! (b.adj[v] & free))
                        return infeasible;
                    needy_zeros |= bit(v);
                }
                for (auto f = free ; f ; f &= f - 1) {
                    auto v = std::countr_zero(f);
                    if (! (b.adj[v] & twos))
                        needy_free |= bit(v);
                }
                auto needy = count(needy_zeros) + count(needy_free);
                if (needy == 0)
                    return weight;

                // A 2 on x settles at most best_cover needy vertices for a cost
                // of 2; a 1 settles only its own vertex.
                std::int64_t best_cover = 0;
                for (auto f = free ; f ; f &= f - 1) {
                    auto v = std::countr_zero(f);
                    best_cover = std::max(best_cover, count(b.adj[v] & needy_zeros) + count(b.closed[v] & needy_free));
                }
                if (best_cover == 0)
                    return infeasible;
                auto extra = best_cover <= 2 ? needy : (2 * needy + best_cover - 1) / best_cover;
                return weight + extra;
            }
        };

        template <typename Policy>
        auto run(const Graph & g) -> WeightSolution
        {
            Bitgraph b(g);
            Policy policy{b};
            return WeightSearch<Policy>(policy, b.n).run();
        }
    }

    auto search_italian(const Graph & g) -> WeightSolution
    {
        return run<ItalianPolicy>(g);
    }

    auto search_roman(const Graph & g) -> WeightSolution
    {
        return run<RomanPolicy>(g);
    }
}

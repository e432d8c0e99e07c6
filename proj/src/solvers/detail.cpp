#include "detail.hpp"

#include <strongdiff/error.hpp>
#include <strongdiff/kernels/subset_kernels.hpp>
#include <strongdiff/set_calculus.hpp>

#include <algorithm>

namespace strongdiff::detail
{
    auto check_guard(const Graph & g, std::size_t guard, bool allow_override) -> void
    {
        if (g.order() == 0)
            throw EmptyGraph();
        if (g.order() > 64)
            throw SizeGuardExceeded(g.order(), 64);
        if (g.order() > guard && ! allow_override)
            throw SizeGuardExceeded(g.order(), guard);
    }

    Bitgraph::Bitgraph(const Graph & g) :
        n(g.order()),
        all(all_of(g.order())),
        adj(g.adjacency_masks()),
        closed(n),
        ball2(n)
    {
        for (std::size_t v = 0 ; v < n ; ++v)
            closed[v] = adj[v] | bit(v);
        for (std::size_t v = 0 ; v < n ; ++v)
            ball2[v] = (adj[v] | neighborhood(adj[v])) & ~bit(v);
    }

    namespace
    {
        auto spread(Mask local, const std::vector<Vertex> & members) -> Mask
        {
            Mask result = 0;
            for ( ; local ; local &= local - 1)
                result |= bit(members[std::countr_zero(local)]);
            return result;
        }
    }

    auto by_components(const Graph & g, const std::function<MaskSolution (const Graph &)> & solve_one) -> MaskSolution
    {
        MaskSolution total{0, 0};
        for (auto & c : components(g)) {
            auto part = solve_one(induced_subgraph(g, c));
            total.value += part.value;
            total.set |= spread(part.set, c.members());
        }
        return total;
    }

    auto by_components(const Graph & g, const std::function<WeightSolution (const Graph &)> & solve_one) -> WeightSolution
    {
        WeightSolution total{0, 0, 0};
        for (auto & c : components(g)) {
            auto members = c.members();
            auto part = solve_one(induced_subgraph(g, c));
            total.value += part.value;
            total.ones |= spread(part.ones, members);
            total.twos |= spread(part.twos, members);
        }
        return total;
    }

    auto for_each_subset(const Graph & g, const std::function<void (const SubsetView &)> & f) -> void
    {
        auto & table = kernels::active();
        auto adjacency = g.adjacency_masks();
        auto total = g.order() >= 64 ? ~Mask{0} : bit(g.order());
        constexpr std::size_t chunk = 4096;

        std::vector<Mask> masks(chunk), once(chunk), twice(chunk), privates(chunk), weak(chunk);
        for (Mask start = 0 ; start < total ; ) {
            auto len = std::size_t(std::min<Mask>(chunk, total - start));
            for (std::size_t i = 0 ; i < len ; ++i)
                masks[i] = start + i;
            std::span<const Mask> batch(masks.data(), len);
            table.coverage(adjacency, batch, std::span(once.data(), len), std::span(twice.data(), len));
            for (std::size_t i = 0 ; i < len ; ++i)
                privates[i] = once[i] & ~twice[i] & ~masks[i];
            table.weak_members(adjacency, batch, std::span<const Mask>(privates.data(), len), std::span(weak.data(), len));
            for (std::size_t i = 0 ; i < len ; ++i)
                f(SubsetView{masks[i], once[i], twice[i], weak[i]});
            start += len;
        }
    }
}

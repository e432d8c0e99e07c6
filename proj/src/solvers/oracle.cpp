#include "detail.hpp"

#include <strongdiff/error.hpp>
#include <strongdiff/kernels/subset_kernels.hpp>

#include <algorithm>

namespace strongdiff::detail
{
    namespace
    {
        /// Keeps the best (value, set) with the lexicographically smallest set on ties.
        struct SetIncumbent
        {
            bool maximise;
            bool found = false;
            std::int64_t value = 0;
            Mask set = 0;

            auto offer(std::int64_t v, Mask s) -> void
            {
                bool better = ! found || (maximise ? v > value : v < value);
                if (better || (v == value && mask_lex_less(s, set))) {
                    found = true;
                    value = v;
                    set = s;
                }
            }
        };
    }

    auto oracle_sets(const Graph & g, Invariant which) -> MaskSolution
    {
        Bitgraph b(g);
        auto all = b.all;
        SetIncumbent best{is_maximization(which)};

        for_each_subset(g, [&] (const SubsetView & s) {
            auto m = s.set;
            auto dominating = (m | s.once) == all;
            switch (which) {
                case Invariant::StrongDifferential:
                    best.offer(count(s.once & ~m) - count(s.weak), m);
                    break;
                case Invariant::Differential:
                    best.offer(count(s.once & ~m) - count(m), m);
                    break;
                case Invariant::Domination:
                    if (dominating)
                        best.offer(count(m), m);
                    break;
                case Invariant::TwoDomination:
                    if ((m | s.twice) == all)
                        best.offer(count(m), m);
                    break;
                case Invariant::SemitotalDomination:
                    if (dominating) {
                        bool ok = true;
                        for (auto r = m ; r && ok ; r &= r - 1)
                            ok = (b.ball2[std::countr_zero(r)] & m) != 0;
                        if (ok)
                            best.offer(count(m), m);
                    }
                    break;
                case Invariant::Independence:
                    if (! (s.once & m))
                        best.offer(count(m), m);
                    break;
                case Invariant::VertexCover: {
                    bool ok = true;
                    for (auto r = all & ~m ; r && ok ; r &= r - 1)
                        ok = ! (b.adj[std::countr_zero(r)] & ~m);
                    if (ok)
                        best.offer(count(m), m);
                    break;
                }
                default:
                    throw InvalidArgument("not a set invariant");
            }
        });
        return MaskSolution{best.value, best.set};
    }

    auto oracle_weights(const Graph & g, Invariant which) -> WeightSolution
    {
        Bitgraph b(g);
        auto & table = kernels::active();
        bool italian = which == Invariant::ItalianDomination;

        bool found = false;
        WeightSolution best{0, 0, 0};
        auto offer = [&] (std::int64_t w, Mask ones, Mask twos) {
            if (! found || w < best.value || (w == best.value && weights_lex_less(ones, twos, best.ones, best.twos))) {
                found = true;
                best = WeightSolution{w, ones, twos};
            }
        };

        std::vector<Mask> batch, once, twice;
        auto total = bit(b.n);
        for (Mask twos = 0 ; twos < total ; ++twos) {
            auto by_twos = b.neighborhood(twos);
            auto rest = b.all & ~twos;

            // Every V1 inside the complement of V2, submasks in full.
            batch.clear();
            for (Mask ones = rest ; ; ones = (ones - 1) & rest) {
                batch.push_back(ones);
                if (ones == 0)
                    break;
            }
            once.resize(batch.size());
            twice.resize(batch.size());
            if (italian)
                table.coverage(b.adj, batch, once, twice);

            for (std::size_t k = 0 ; k < batch.size() ; ++k) {
                auto ones = batch[k];
                auto zeros = rest & ~ones;
                auto satisfied = italian ? (by_twos | twice[k]) : by_twos;
                if (zeros & ~satisfied)
                    continue;
                offer(count(ones) + 2 * count(twos), ones, twos);
            }
        }
        return best;
    }
}

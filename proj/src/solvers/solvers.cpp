#include "detail.hpp"

#include <strongdiff/error.hpp>
#include <strongdiff/solvers.hpp>

#include <array>
#include <cstdlib>
#include <string>

namespace strongdiff
{
    using namespace detail;

    namespace
    {
        constexpr std::array invariants{
            Invariant::StrongDifferential,
            Invariant::Differential,
            Invariant::Domination,
            Invariant::TwoDomination,
            Invariant::SemitotalDomination,
            Invariant::RomanDomination,
            Invariant::ItalianDomination,
            Invariant::Independence,
            Invariant::VertexCover
        };

        constexpr std::array invariant_names{
            std::string_view{"strong-differential"},
            std::string_view{"differential"},
            std::string_view{"domination"},
            std::string_view{"two-domination"},
            std::string_view{"semitotal-domination"},
            std::string_view{"roman-domination"},
            std::string_view{"italian-domination"},
            std::string_view{"independence"},
            std::string_view{"vertex-cover"}
        };

        auto set_result(const Graph & g, Invariant which, const MaskSolution & s, Method method) -> InvariantResult
        {
            auto witness = VertexSet::from_mask(g.order(), s.set);
            InvariantResult result{which, s.value, witness, std::nullopt, method};
            if (which == Invariant::StrongDifferential || which == Invariant::Differential)
                result.breakdown = breakdown(g, witness);
            return result;
        }

        auto weight_result(const Graph & g, Invariant which, const WeightSolution & s, Method method) -> InvariantResult
        {
            auto f = WeightFunction::from_levels(VertexSet::from_mask(g.order(), s.ones), VertexSet::from_mask(g.order(), s.twos));
            return InvariantResult{which, s.value, f, std::nullopt, method};
        }

        auto set_search(Invariant which) -> MaskSolution (*)(const Graph &)
        {
            switch (which) {
                case Invariant::StrongDifferential:  return &search_strong_differential;
                case Invariant::Differential:        return &search_differential;
                case Invariant::Domination:          return &search_domination;
                case Invariant::TwoDomination:       return &search_two_domination;
                case Invariant::SemitotalDomination: return &search_semitotal_domination;
                case Invariant::Independence:        return &search_independence;
                case Invariant::VertexCover:         return &search_vertex_cover;
                default:                             return nullptr;
            }
        }

        auto require_semitotal_defined(const Graph & g, Invariant which) -> void
        {
            if (which == Invariant::SemitotalDomination && has_isolated_vertex(g))
                throw UndefinedInvariant("semitotal domination is undefined on graphs with isolated vertices");
        }
    }

    auto all_invariants() -> std::span<const Invariant>
    {
        return invariants;
    }

    auto invariant_name(Invariant which) -> std::string_view
    {
        return invariant_names.at(static_cast<std::size_t>(which));
    }

    auto parse_invariant(std::string_view text) -> std::optional<Invariant>
    {
        for (std::size_t i = 0 ; i < invariant_names.size() ; ++i)
            if (invariant_names[i] == text)
                return invariants[i];
        return std::nullopt;
    }

    auto method_name(Method m) -> std::string_view
    {
        switch (m) {
            case Method::BranchAndBound: return "branch-and-bound";
            case Method::BruteForce:     return "brute-force";
            case Method::GallaiDerived:  return "gallai-derived";
        }
        return "unknown";
    }

    auto parse_method(std::string_view text) -> std::optional<Method>
    {
        for (auto m : {Method::BranchAndBound, Method::BruteForce, Method::GallaiDerived})
            if (method_name(m) == text)
                return m;
        return std::nullopt;
    }

    auto has_weight_witness(Invariant which) -> bool
    {
        return which == Invariant::RomanDomination || which == Invariant::ItalianDomination;
    }

    auto is_maximization(Invariant which) -> bool
    {
        return which == Invariant::StrongDifferential || which == Invariant::Differential
            || which == Invariant::Independence;
    }

    auto SolverConfig::from_environment() -> SolverConfig
    {
        SolverConfig cfg;
        if (auto text = std::getenv("STRONGDIFF_GUARD")) {
            try {
                auto guard = std::stoul(text);
                if (guard >= 1)
                    cfg.size_guard = guard;
            }
            catch (const std::exception &) {
                throw InvalidArgument(std::string("STRONGDIFF_GUARD is not a positive integer: ") + text);
            }
        }
        return cfg;
    }

    auto solve(const Graph & g, Invariant which, const SolverConfig & cfg) -> InvariantResult
    {
        check_guard(g, cfg.size_guard, cfg.allow_guard_override);
        require_semitotal_defined(g, which);

        if (has_weight_witness(which)) {
            auto search = which == Invariant::ItalianDomination ? &search_italian : &search_roman;
            return weight_result(g, which, by_components(g, std::function<WeightSolution (const Graph &)>(search)),
                    Method::BranchAndBound);
        }
        return set_result(g, which, by_components(g, std::function<MaskSolution (const Graph &)>(set_search(which))),
                Method::BranchAndBound);
    }

    auto solve_oracle(const Graph & g, Invariant which, const SolverConfig & cfg) -> InvariantResult
    {
        require_semitotal_defined(g, which);
        if (has_weight_witness(which)) {
            check_guard(g, cfg.weight_oracle_guard, false);
            return weight_result(g, which, oracle_weights(g, which), Method::BruteForce);
        }
        check_guard(g, cfg.oracle_guard, false);
        return set_result(g, which, oracle_sets(g, which), Method::BruteForce);
    }

    auto strong_differential_oracle(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve_oracle(g, Invariant::StrongDifferential, cfg);
    }

    auto strong_differential(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::StrongDifferential, cfg);
    }

    auto differential(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::Differential, cfg);
    }

    auto domination_number(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::Domination, cfg);
    }

    auto two_domination_number(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::TwoDomination, cfg);
    }

    auto semitotal_domination_number(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::SemitotalDomination, cfg);
    }

    auto roman_domination_number(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::RomanDomination, cfg);
    }

    auto italian_domination_number(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::ItalianDomination, cfg);
    }

    auto independence_number(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::Independence, cfg);
    }

    auto vertex_cover_number(const Graph & g, const SolverConfig & cfg) -> InvariantResult
    {
        return solve(g, Invariant::VertexCover, cfg);
    }

    auto gallai_derived(const Graph & g, Invariant which, const SolverConfig & cfg) -> InvariantResult
    {
        auto n = std::int64_t(g.order());
        switch (which) {
            case Invariant::ItalianDomination: {
                auto base = strong_differential(g, cfg);
                auto f = WeightFunction::from_levels(base.breakdown->strong, base.breakdown->weak);
                return InvariantResult{which, n - base.value, f, std::nullopt, Method::GallaiDerived};
            }
            case Invariant::RomanDomination: {
                auto base = differential(g, cfg);
                auto & d = std::get<VertexSet>(base.witness);
                auto outside = g.all_vertices() - d - neighborhood(g, d);
                auto f = WeightFunction::from_levels(outside, d);
                return InvariantResult{which, n - base.value, f, std::nullopt, Method::GallaiDerived};
            }
            case Invariant::VertexCover: {
                auto base = independence_number(g, cfg);
                auto cover = std::get<VertexSet>(base.witness).complement();
                return InvariantResult{which, n - base.value, cover, std::nullopt, Method::GallaiDerived};
            }
            default:
                throw InvalidArgument("no Gallai-type identity derives " + std::string(invariant_name(which)));
        }
    }

    auto dominating_strong_witness(const Graph & g, const SolverConfig & cfg) -> VertexSet
    {
        auto restricted = strong_differential(g, cfg);
        if (g.order() > cfg.oracle_guard)
            return std::get<VertexSet>(restricted.witness);

        auto d = std::get<VertexSet>(strong_differential_oracle(g, cfg).witness);
        for (Vertex v = 0 ; v < g.order() ; ++v)
            if (! d.contains(v) && ! g.neighbors(v).intersects(d))
                d.insert(v);

        if (breakdown(g, d).strong_differential != restricted.value)
            return std::get<VertexSet>(restricted.witness);
        return d;
    }

    auto witness_is_valid(const Graph & g, const InvariantResult & result) -> bool
    {
        if (has_weight_witness(result.invariant)) {
            auto f = std::get_if<WeightFunction>(&result.witness);
            if (! f || f->order() != g.order() || std::int64_t(f->weight()) != result.value)
                return false;
            return result.invariant == Invariant::ItalianDomination ? is_idf(g, *f) : is_rdf(g, *f);
        }

        auto s = std::get_if<VertexSet>(&result.witness);
        if (! s || s->universe() != g.order())
            return false;
        auto size = std::int64_t(s->size());
        switch (result.invariant) {
            case Invariant::StrongDifferential:
            case Invariant::Differential: {
                auto b = breakdown(g, *s);
                if (result.breakdown && *result.breakdown != b)
                    return false;
                if (result.invariant == Invariant::StrongDifferential)
                    return b.strong_differential == result.value
                        && (result.method != Method::BranchAndBound || is_dominating(g, *s));
                return b.differential == result.value;
            }
            case Invariant::Domination:          return size == result.value && is_dominating(g, *s);
            case Invariant::TwoDomination:       return size == result.value && is_2_dominating(g, *s);
            case Invariant::SemitotalDomination: return size == result.value && is_semitotal_dominating(g, *s);
            case Invariant::Independence:        return size == result.value && is_independent(g, *s);
            case Invariant::VertexCover:         return size == result.value && is_vertex_cover(g, *s);
            default:                             return false;
        }
    }
}

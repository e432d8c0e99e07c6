#pragma once

#include <strongdiff/graph.hpp>
#include <strongdiff/set_calculus.hpp>
#include <strongdiff/vertex_set.hpp>
#include <strongdiff/weight_function.hpp>

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <variant>

namespace strongdiff
{
    enum class Invariant
    {
        StrongDifferential,
        Differential,
        Domination,
        TwoDomination,
        SemitotalDomination,
        RomanDomination,
        ItalianDomination,
        Independence,
        VertexCover
    };

    enum class Method
    {
        BranchAndBound,
        BruteForce,
        GallaiDerived
    };

    auto all_invariants() -> std::span<const Invariant>;
    auto invariant_name(Invariant) -> std::string_view;
    auto parse_invariant(std::string_view) -> std::optional<Invariant>;
    auto method_name(Method) -> std::string_view;
    auto parse_method(std::string_view) -> std::optional<Method>;

    /// Roman and Italian domination have weight-function witnesses; the rest have sets.
    auto has_weight_witness(Invariant) -> bool;
    auto is_maximization(Invariant) -> bool;

    struct SolverConfig
    {
        /// Largest order the branch-and-bound solvers accept.
        std::size_t size_guard = 20;
        /// Lets callers go past size_guard, up to the 64-vertex word limit.
        bool allow_guard_override = false;
        /// Plain 2^n subset enumeration limit.
        std::size_t oracle_guard = 16;
        /// Plain 3^n weight-function enumeration limit.
        std::size_t weight_oracle_guard = 12;
        /// Limit for claims quantified over all optimal sets.
        std::size_t exhaustive_guard = 16;

        /// Defaults, with size_guard taken from STRONGDIFF_GUARD when set.
        static auto from_environment() -> SolverConfig;
    };

    using Witness = std::variant<VertexSet, WeightFunction>;

    /**
     * An invariant value together with an optimal witness. Among optimal
     * witnesses the lexicographically smallest membership (or weight) string is
     * returned; for the strong differential the search ranges over dominating
     * sets only, so its witness is the smallest dominating optimum.
     */
    struct InvariantResult
    {
        Invariant invariant;
        std::int64_t value = 0;
        Witness witness;
        std::optional<DifferentialBreakdown> breakdown;
        Method method = Method::BranchAndBound;
    };

    auto strong_differential(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;
    auto differential(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;
    auto domination_number(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;
    auto two_domination_number(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;
    auto semitotal_domination_number(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;
    auto roman_domination_number(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;
    auto italian_domination_number(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;
    auto independence_number(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;
    auto vertex_cover_number(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;

    /// Branch-and-bound solve of any invariant.
    auto solve(const Graph & g, Invariant which, const SolverConfig & cfg = {}) -> InvariantResult;

    /// Plain enumeration of every subset (or every weight function), with no
    /// search-space restriction. Set invariants need order <= cfg.oracle_guard,
    /// weight invariants order <= cfg.weight_oracle_guard.
    auto solve_oracle(const Graph & g, Invariant which, const SolverConfig & cfg = {}) -> InvariantResult;
    auto strong_differential_oracle(const Graph & g, const SolverConfig & cfg = {}) -> InvariantResult;

    /**
     * Italian domination as n - strong differential, Roman domination as
     * n - differential, vertex cover as n - independence. The witness is
     * built from the base witness: V2 = weak members and V1 = strong members
     * of a dominating strong-differential set; V2 = D, V1 = V \ N[D] for a
     * differential set D; the complement of a maximum independent set.
     */
    auto gallai_derived(const Graph & g, Invariant which, const SolverConfig & cfg = {}) -> InvariantResult;

    /// A dominating set attaining the strong differential, obtained by adding
    /// undominated vertices to an unrestricted optimum.
    auto dominating_strong_witness(const Graph & g, const SolverConfig & cfg = {}) -> VertexSet;

    /// Re-checks a result's witness against the graph: feasibility predicate,
    /// recomputed value, and for differentials the attached breakdown.
    auto witness_is_valid(const Graph & g, const InvariantResult & result) -> bool;
}

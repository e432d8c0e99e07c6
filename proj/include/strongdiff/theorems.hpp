#pragma once

#include <strongdiff/families.hpp>
#include <strongdiff/graph.hpp>
#include <strongdiff/solvers.hpp>

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace strongdiff
{
    enum class ClaimKind
    {
        Identity,
        Inequality,
        Iff,
        Implication
    };

    enum class CheckStatus
    {
        Holds,
        HypothesisNotMet,
        Violated,
        /// The claim could not be decided within the exhaustive guard.
        Inconclusive
    };

    auto claim_kind_name(ClaimKind) -> std::string_view;
    auto status_name(CheckStatus) -> std::string_view;
    auto parse_status(std::string_view) -> std::optional<CheckStatus>;

    /// Where a graph came from; some claims (corona) are about the recipe.
    struct CheckContext
    {
        std::optional<FamilySpec> spec;
    };

    struct Certificate
    {
        std::string label;
        std::int64_t value = 0;
        Witness witness;

        friend auto operator==(const Certificate &, const Certificate &) -> bool = default;
    };

    /// A graph plus the optimal witnesses behind every value the failed claim
    /// used; each certificate re-validates on its own.
    struct Counterexample
    {
        Graph graph;
        std::vector<Certificate> certificates;

        friend auto operator==(const Counterexample &, const Counterexample &) -> bool = default;
    };

    struct CheckOutcome
    {
        std::string id;
        CheckStatus status = CheckStatus::Holds;
        std::optional<std::int64_t> lhs;
        std::optional<std::int64_t> rhs;
        std::map<std::string, std::int64_t> values;
        std::string detail;
        std::optional<Counterexample> counterexample;

        friend auto operator==(const CheckOutcome &, const CheckOutcome &) -> bool = default;
    };

    /// Lazily computed invariants and optimal-set catalogues of one graph.
    class InvariantCache
    {
        public:
            InvariantCache(const Graph & g, const SolverConfig & cfg);

            auto graph() const -> const Graph & { return _graph; }
            auto config() const -> const SolverConfig & { return _cfg; }

            auto result(Invariant which) -> const InvariantResult &;
            auto value(Invariant which) -> std::int64_t;

            /// All strong-differential-optimal sets, or nullptr above the exhaustive guard.
            auto strong_sets() -> const std::vector<VertexSet> *;
            /// All minimum dominating sets, or nullptr above the exhaustive guard.
            auto gamma_sets() -> const std::vector<VertexSet> *;

            /// Every result computed so far, in invariant order.
            auto computed() const -> std::vector<const InvariantResult *>;

        private:
            const Graph & _graph;
            SolverConfig _cfg;
            std::map<Invariant, InvariantResult> _results;
            std::optional<std::vector<VertexSet>> _strong_sets;
            std::optional<std::vector<VertexSet>> _gamma_sets;
    };

    enum class Tri
    {
        No,
        Yes,
        Unknown
    };

    class Evaluation;

    struct TheoremCheck
    {
        std::string id;
        ClaimKind kind = ClaimKind::Inequality;
        std::string description;
        /// Human-readable hypothesis; empty when the claim is unconditional.
        std::string hypothesis_text;
        std::function<Tri(Evaluation &)> hypothesis;
        std::function<void(Evaluation &)> claim;
    };

    /**
     * Scratch space handed to a check. Sub-claims accumulate: any failure
     * makes the outcome Violated, any undecided part makes it Inconclusive.
     */
    class Evaluation
    {
        public:
            Evaluation(InvariantCache & cache, const CheckContext & context);

            auto graph() const -> const Graph & { return _cache.graph(); }
            auto cache() -> InvariantCache & { return _cache; }
            auto context() const -> const CheckContext & { return _context; }
            auto n() const -> std::int64_t { return static_cast<std::int64_t>(graph().order()); }

            /// Value of an invariant, recorded under its name.
            auto get(Invariant which) -> std::int64_t;
            void record(const std::string & name, std::int64_t value);
            void attach(const std::string & label, std::int64_t value, Witness witness);

            void set_sides(std::int64_t lhs, std::int64_t rhs);
            /// Fails with detail when ok is false.
            void require(bool ok, const std::string & detail);
            void undecided(const std::string & detail);
            /// Both implications of left <-> right; a failure names its direction.
            void iff(bool left, bool right, const std::string & left_text, const std::string & right_text);
            void implies(bool premise, bool conclusion, const std::string & premise_text, const std::string & conclusion_text);

            auto failed() const -> bool { return _failed; }
            auto inconclusive() const -> bool { return _inconclusive; }
            auto outcome(const std::string & id) -> CheckOutcome;

        private:
            InvariantCache & _cache;
            const CheckContext & _context;
            std::optional<std::int64_t> _lhs;
            std::optional<std::int64_t> _rhs;
            std::map<std::string, std::int64_t> _values;
            std::vector<Certificate> _extra;
            std::vector<std::string> _details;
            bool _failed = false;
            bool _inconclusive = false;
    };

    auto registry() -> const std::vector<TheoremCheck> &;
    /// Throws UnknownTheorem.
    auto find_check(std::string_view id) -> const TheoremCheck &;
    /// Resolves "all" or a comma-separated id list.
    auto select_checks(std::string_view ids) -> std::vector<TheoremCheck>;

    auto evaluate(const TheoremCheck & check, InvariantCache & cache, const CheckContext & context = {}) -> CheckOutcome;
    auto check(const Graph & g, std::string_view id, const SolverConfig & cfg = {}, const CheckContext & context = {}) -> CheckOutcome;
    /// Runs several checks on one graph sharing a cache.
    auto check_all(const Graph & g, const std::vector<TheoremCheck> & checks, const SolverConfig & cfg = {},
            const CheckContext & context = {}) -> std::vector<CheckOutcome>;

    /// Re-validates a counterexample's certificates against its graph.
    auto certificates_valid(const Counterexample & c) -> bool;

    struct StatusCounts
    {
        std::size_t holds = 0;
        std::size_t hypothesis_not_met = 0;
        std::size_t violated = 0;
        std::size_t inconclusive = 0;

        void add(CheckStatus status);
        friend auto operator==(const StatusCounts &, const StatusCounts &) -> bool = default;
    };

    struct Finding
    {
        std::string source;
        CheckOutcome outcome;

        friend auto operator==(const Finding &, const Finding &) -> bool = default;
    };

    struct FuzzReport
    {
        std::size_t graphs = 0;
        std::map<std::string, StatusCounts> counts;
        /// Violated and Inconclusive outcomes, in input order.
        std::vector<Finding> findings;

        auto total() const -> StatusCounts;
        friend auto operator==(const FuzzReport &, const FuzzReport &) -> bool = default;
    };

    /// Evaluates every check on up to budget graphs of the stream.
    auto fuzz(const std::vector<SourcedGraph> & stream, const std::vector<TheoremCheck> & checks, std::size_t budget,
            const SolverConfig & cfg = {}) -> FuzzReport;
    auto fuzz(const std::vector<SourcedGraph> & stream, std::string_view ids, std::size_t budget,
            const SolverConfig & cfg = {}) -> FuzzReport;
}

#include <strongdiff/theorems.hpp>

namespace strongdiff
{
    void StatusCounts::add(CheckStatus status)
    {
        switch (status)
        {
            case CheckStatus::Holds: ++holds; break;
            case CheckStatus::HypothesisNotMet: ++hypothesis_not_met; break;
            case CheckStatus::Violated: ++violated; break;
            case CheckStatus::Inconclusive: ++inconclusive; break;
        }
    }

    auto FuzzReport::total() const -> StatusCounts
    {
        StatusCounts t;
        for (auto & [id, c] : counts)
        {
            t.holds += c.holds;
            t.hypothesis_not_met += c.hypothesis_not_met;
            t.violated += c.violated;
            t.inconclusive += c.inconclusive;
        }
        return t;
    }

    auto fuzz(const std::vector<SourcedGraph> & stream, const std::vector<TheoremCheck> & checks, std::size_t budget,
            const SolverConfig & cfg) -> FuzzReport
    {
        FuzzReport report;
        for (auto & c : checks)
            report.counts[c.id];
        for (auto & item : stream)
        {
            if (report.graphs >= budget)
                break;
            ++report.graphs;
            CheckContext context {item.spec};
            for (auto & outcome : check_all(item.graph, checks, cfg, context))
            {
                report.counts[outcome.id].add(outcome.status);
                if (outcome.status == CheckStatus::Violated || outcome.status == CheckStatus::Inconclusive)
                    report.findings.push_back({item.source, std::move(outcome)});
            }
        }
        return report;
    }

    auto fuzz(const std::vector<SourcedGraph> & stream, std::string_view ids, std::size_t budget, const SolverConfig & cfg) -> FuzzReport
    {
        return fuzz(stream, select_checks(ids), budget, cfg);
    }
}

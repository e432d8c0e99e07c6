#include <strongdiff/error.hpp>
#include <strongdiff/exhaustive.hpp>
#include <strongdiff/set_calculus.hpp>
#include <strongdiff/theorems.hpp>

#include <algorithm>
#include <array>
#include <unordered_set>

namespace strongdiff
{
    auto claim_kind_name(ClaimKind kind) -> std::string_view
    {
        switch (kind)
        {
            case ClaimKind::Identity: return "identity";
            case ClaimKind::Inequality: return "inequality";
            case ClaimKind::Iff: return "iff";
            case ClaimKind::Implication: return "implication";
        }
        return "unknown";
    }

    namespace
    {
        constexpr std::array<std::pair<CheckStatus, std::string_view>, 4> status_names {{
            {CheckStatus::Holds, "HOLDS"},
            {CheckStatus::HypothesisNotMet, "HYPOTHESIS_NOT_MET"},
            {CheckStatus::Violated, "VIOLATED"},
            {CheckStatus::Inconclusive, "INCONCLUSIVE"},
        }};
    }

    auto status_name(CheckStatus status) -> std::string_view
    {
        for (auto [s, name] : status_names)
            if (s == status)
                return name;
        return "UNKNOWN";
    }

    auto parse_status(std::string_view text) -> std::optional<CheckStatus>
    {
        for (auto [s, name] : status_names)
            if (name == text)
                return s;
        return std::nullopt;
    }

    InvariantCache::InvariantCache(const Graph & g, const SolverConfig & cfg) : _graph(g), _cfg(cfg) {}

    auto InvariantCache::result(Invariant which) -> const InvariantResult &
    {
        auto it = _results.find(which);
        if (it == _results.end())
            it = _results.emplace(which, solve(_graph, which, _cfg)).first;
        return it->second;
    }

    auto InvariantCache::value(Invariant which) -> std::int64_t
    {
        return result(which).value;
    }

    auto InvariantCache::strong_sets() -> const std::vector<VertexSet> *
    {
        if (_graph.order() > _cfg.exhaustive_guard)
            return nullptr;
        if (!_strong_sets)
            _strong_sets = all_strong_differential_sets(_graph, _cfg).sets;
        return &*_strong_sets;
    }

    auto InvariantCache::gamma_sets() -> const std::vector<VertexSet> *
    {
        if (_graph.order() > _cfg.exhaustive_guard)
            return nullptr;
        if (!_gamma_sets)
            _gamma_sets = all_minimum_dominating_sets(_graph, _cfg).sets;
        return &*_gamma_sets;
    }

    auto InvariantCache::computed() const -> std::vector<const InvariantResult *>
    {
        std::vector<const InvariantResult *> out;
        for (auto & [which, r] : _results)
            out.push_back(&r);
        return out;
    }

    Evaluation::Evaluation(InvariantCache & cache, const CheckContext & context) : _cache(cache), _context(context) {}

    auto Evaluation::get(Invariant which) -> std::int64_t
    {
        auto v = _cache.value(which);
        _values[std::string(invariant_name(which))] = v;
        return v;
    }

    void Evaluation::record(const std::string & name, std::int64_t value)
    {
        _values[name] = value;
    }

    void Evaluation::attach(const std::string & label, std::int64_t value, Witness witness)
    {
        _extra.push_back({label, value, std::move(witness)});
    }

    void Evaluation::set_sides(std::int64_t lhs, std::int64_t rhs)
    {
        _lhs = lhs;
        _rhs = rhs;
    }

    void Evaluation::require(bool ok, const std::string & detail)
    {
        if (!ok)
        {
            _failed = true;
            _details.push_back(detail);
        }
    }

    void Evaluation::undecided(const std::string & detail)
    {
        _inconclusive = true;
        _details.push_back(detail);
    }

    void Evaluation::iff(bool left, bool right, const std::string & left_text, const std::string & right_text)
    {
        record("left", left);
        record("right", right);
        if (left && !right)
            require(false, "forward direction fails: " + left_text + " holds but " + right_text + " does not");
        if (right && !left)
            require(false, "backward direction fails: " + right_text + " holds but " + left_text + " does not");
    }

    void Evaluation::implies(bool premise, bool conclusion, const std::string & premise_text, const std::string & conclusion_text)
    {
        record("premise", premise);
        record("conclusion", conclusion);
        if (premise && !conclusion)
            require(false, premise_text + " holds but " + conclusion_text + " does not");
    }

    auto Evaluation::outcome(const std::string & id) -> CheckOutcome
    {
        CheckOutcome out;
        out.id = id;
        out.status = _failed ? CheckStatus::Violated : _inconclusive ? CheckStatus::Inconclusive : CheckStatus::Holds;
        out.lhs = _lhs;
        out.rhs = _rhs;
        out.values = _values;
        for (std::size_t i = 0; i < _details.size(); ++i)
            out.detail += (i ? "; " : "") + _details[i];
        if (_failed)
        {
            Counterexample c {graph(), {}};
            for (auto * r : _cache.computed())
                c.certificates.push_back({std::string(invariant_name(r->invariant)), r->value, r->witness});
            for (auto & extra : _extra)
                c.certificates.push_back(extra);
            out.counterexample = std::move(c);
        }
        return out;
    }

    namespace
    {
        using I = Invariant;

        auto tri(bool b) -> Tri
        {
            return b ? Tri::Yes : Tri::No;
        }

        auto ceil_div(std::int64_t a, std::int64_t b) -> std::int64_t
        {
            return a >= 0 ? (a + b - 1) / b : -((-a) / b);
        }

        auto floor_div(std::int64_t a, std::int64_t b) -> std::int64_t
        {
            return a >= 0 ? a / b : -((-a + b - 1) / b);
        }

        auto delta(Evaluation & e) -> std::int64_t
        {
            auto d = static_cast<std::int64_t>(e.graph().max_degree());
            e.record("max-degree", d);
            return d;
        }

        auto min_degree_at_least(std::size_t k)
        {
            return [k](Evaluation & e) { return tri(e.graph().order() >= 1 && e.graph().min_degree() >= k); };
        }

        auto connected_min_degree(std::size_t k)
        {
            return [k](Evaluation & e) { return tri(is_connected(e.graph()) && e.graph().min_degree() >= k); };
        }

        auto order_at_least(std::size_t k)
        {
            return [k](Evaluation & e) { return tri(e.graph().order() >= k); };
        }

        auto no_isolated(Evaluation & e) -> Tri
        {
            return tri(!has_isolated_vertex(e.graph()));
        }

        auto is_a_tree(Evaluation & e) -> Tri
        {
            return tri(is_tree(e.graph()));
        }

        auto semitotal_equals_two_domination(Evaluation & e) -> Tri
        {
            if (has_isolated_vertex(e.graph()))
                return Tri::No;
            return tri(e.get(I::SemitotalDomination) == e.get(I::TwoDomination));
        }

        void at_least(Evaluation & e, std::int64_t lhs, std::int64_t rhs, const std::string & text)
        {
            e.set_sides(lhs, rhs);
            e.require(lhs >= rhs, text + " fails: " + std::to_string(lhs) + " < " + std::to_string(rhs));
        }

        void at_most(Evaluation & e, std::int64_t lhs, std::int64_t rhs, const std::string & text)
        {
            e.set_sides(lhs, rhs);
            e.require(lhs <= rhs, text + " fails: " + std::to_string(lhs) + " > " + std::to_string(rhs));
        }

        void equal(Evaluation & e, std::int64_t lhs, std::int64_t rhs, const std::string & text)
        {
            e.set_sides(lhs, rhs);
            e.require(lhs == rhs, text + " fails: " + std::to_string(lhs) + " != " + std::to_string(rhs));
        }

        auto is_small_special(const Graph & c) -> bool
        {
            if (c.order() == 3)
                return true;
            return c.order() == 4 && is_tree(c) && c.max_degree() == 2;
        }

        /// G is C3, P3 or P4, possibly together with components of maximum degree <= 1.
        auto has_single_special_component(const Graph & g) -> bool
        {
            std::size_t special = 0;
            for (auto & c : components(g))
            {
                auto sub = induced_subgraph(g, c);
                if (sub.max_degree() <= 1)
                    continue;
                if (!is_small_special(sub))
                    return false;
                ++special;
            }
            return special == 1;
        }

        auto corona_orders(const CheckContext & context) -> std::optional<std::pair<std::int64_t, std::int64_t>>
        {
            if (!context.spec || context.spec->family != Family::Corona || context.spec->operands.size() != 2)
                return std::nullopt;
            auto n1 = static_cast<std::int64_t>(generate(context.spec->operands[0]).order());
            auto n2 = static_cast<std::int64_t>(generate(context.spec->operands[1]).order());
            return std::pair {n1, n2};
        }

        auto build_registry() -> std::vector<TheoremCheck>
        {
            std::vector<TheoremCheck> r;
            auto add = [&](std::string id, ClaimKind kind, std::string description, std::string hypothesis_text,
                               std::function<Tri(Evaluation &)> hypothesis, std::function<void(Evaluation &)> claim) {
                r.push_back({std::move(id), kind, std::move(description), std::move(hypothesis_text), std::move(hypothesis), std::move(claim)});
            };
            auto always = std::function<Tri(Evaluation &)> {};

            add("gallai-independence", ClaimKind::Identity, "alpha + beta = n", "", always, [](Evaluation & e) {
                equal(e, e.get(I::Independence) + e.get(I::VertexCover), e.n(), "alpha + beta = n");
            });
            add("gallai-roman", ClaimKind::Identity, "gamma_R + differential = n", "", always, [](Evaluation & e) {
                equal(e, e.get(I::RomanDomination) + e.get(I::Differential), e.n(), "gamma_R + differential = n");
            });
            add("gallai-italian", ClaimKind::Identity, "gamma_I + strong differential = n", "", always, [](Evaluation & e) {
                equal(e, e.get(I::ItalianDomination) + e.get(I::StrongDifferential), e.n(), "gamma_I + strong differential = n");
            });

            add("lemma-dominating-ds-set", ClaimKind::Identity,
                    "some set attaining the strong differential is dominating", "", always, [](Evaluation & e) {
                        auto & g = e.graph();
                        auto & cfg = e.cache().config();
                        if (g.order() > cfg.oracle_guard)
                        {
                            e.undecided("order above the oracle guard; unrestricted maximum not enumerated");
                            return;
                        }
                        auto unrestricted = strong_differential_oracle(g, cfg);
                        auto d = dominating_strong_witness(g, cfg);
                        auto b = breakdown(g, d);
                        e.record("unrestricted-maximum", unrestricted.value);
                        e.record("dominating-witness-value", b.strong_differential);
                        e.attach("unrestricted-optimum", unrestricted.value, unrestricted.witness);
                        e.attach("dominating-optimum", b.strong_differential, d);
                        e.set_sides(b.strong_differential, unrestricted.value);
                        e.require(is_dominating(g, d), "witness is not dominating");
                        e.require(b.strong_differential == unrestricted.value, "dominating witness is not optimal");
                    });

            add("remark-ds-formula", ClaimKind::Identity,
                    "every dominating set D attaining the strong differential has value n - |D| - |Dw|", "", always, [](Evaluation & e) {
                        auto * sets = e.cache().strong_sets();
                        if (!sets)
                        {
                            e.undecided("order above the exhaustive guard");
                            return;
                        }
                        auto ds = e.get(I::StrongDifferential);
                        std::int64_t checked = 0;
                        for (auto & d : *sets)
                        {
                            if (!is_dominating(e.graph(), d))
                                continue;
                            ++checked;
                            auto b = breakdown(e.graph(), d);
                            auto formula = e.n() - static_cast<std::int64_t>(d.size() + b.weak.size());
                            if (formula != ds)
                            {
                                e.attach("dominating-optimum", ds, d);
                                equal(e, ds, formula, "strong differential = n - |D| - |Dw|");
                                return;
                            }
                        }
                        e.record("dominating-sets-checked", checked);
                        e.set_sides(ds, ds);
                    });

            add("order-quarter", ClaimKind::Inequality, "connected, n >= 3: strong differential >= n/4",
                    "connected and n >= 3", [](Evaluation & e) { return tri(is_connected(e.graph()) && e.graph().order() >= 3); },
                    [](Evaluation & e) { at_least(e, e.get(I::StrongDifferential), ceil_div(e.n(), 4), "strong differential >= n/4"); });
            add("order-third", ClaimKind::Inequality, "connected, min degree >= 2: strong differential >= n/3",
                    "connected and min degree >= 2", connected_min_degree(2),
                    [](Evaluation & e) { at_least(e, e.get(I::StrongDifferential), ceil_div(e.n(), 3), "strong differential >= n/3"); });
            add("order-half", ClaimKind::Inequality, "connected, min degree >= 3: strong differential >= n/2",
                    "connected and min degree >= 3", connected_min_degree(3),
                    [](Evaluation & e) { at_least(e, e.get(I::StrongDifferential), ceil_div(e.n(), 2), "strong differential >= n/2"); });

            add("italian-basics", ClaimKind::Inequality,
                    "gamma_I <= gamma_R <= 2 gamma, gamma_I <= gamma_2, and gamma_I >= gamma + 1 on nontrivial trees", "", always,
                    [](Evaluation & e) {
                        auto gi = e.get(I::ItalianDomination);
                        auto gr = e.get(I::RomanDomination);
                        auto gm = e.get(I::Domination);
                        auto g2 = e.get(I::TwoDomination);
                        e.set_sides(gi, gr);
                        e.require(gi <= gr, "gamma_I <= gamma_R fails");
                        e.require(gr <= 2 * gm, "gamma_R <= 2 gamma fails");
                        e.require(gi <= g2, "gamma_I <= gamma_2 fails");
                        if (e.graph().order() >= 2 && is_tree(e.graph()))
                            e.require(gi >= gm + 1, "gamma_I >= gamma + 1 fails on a nontrivial tree");
                    });

            add("sandwich-sigma", ClaimKind::Inequality,
                    "n - min(2 gamma, gamma_2) <= strong differential <= n - gamma - sigma", "", always, [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto gm = e.get(I::Domination);
                        auto g2 = e.get(I::TwoDomination);
                        auto s = static_cast<std::int64_t>(sigma(e.graph()));
                        e.record("sigma", s);
                        auto lower = e.n() - std::min(2 * gm, g2);
                        auto upper = e.n() - gm - s;
                        e.record("lower", lower);
                        e.record("upper", upper);
                        e.set_sides(ds, upper);
                        e.require(lower <= ds, "lower bound n - min(2 gamma, gamma_2) fails");
                        e.require(ds <= upper, "upper bound n - gamma - sigma fails");
                    });

            add("iff-gamma", ClaimKind::Iff, "strong differential = n - gamma iff gamma_2 = gamma", "", always, [](Evaluation & e) {
                auto ds = e.get(I::StrongDifferential);
                auto gm = e.get(I::Domination);
                auto g2 = e.get(I::TwoDomination);
                e.iff(ds == e.n() - gm, g2 == gm, "strong differential = n - gamma", "gamma_2 = gamma");
            });

            add("iff-gamma2-witness", ClaimKind::Iff,
                    "strong differential = n - gamma_2 iff some optimal set is dominating with no weak members", "", always,
                    [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto g2 = e.get(I::TwoDomination);
                        auto * sets = e.cache().strong_sets();
                        if (!sets)
                        {
                            e.undecided("order above the exhaustive guard");
                            return;
                        }
                        bool exists = false;
                        for (auto & d : *sets)
                            if (is_dominating(e.graph(), d) && breakdown(e.graph(), d).weak.empty())
                            {
                                exists = true;
                                e.attach("dominating-optimum-without-weak", ds, d);
                                break;
                            }
                        e.iff(ds == e.n() - g2, exists, "strong differential = n - gamma_2",
                                "an optimal dominating set with no weak members exists");
                    });

            add("iff-2gamma", ClaimKind::Iff,
                    "strong differential = n - 2 gamma iff every gamma-set is optimal with no strong members", "", always,
                    [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto gm = e.get(I::Domination);
                        auto * sets = e.cache().gamma_sets();
                        if (!sets)
                        {
                            e.undecided("order above the exhaustive guard");
                            return;
                        }
                        bool every = true;
                        for (auto & d : *sets)
                        {
                            auto b = breakdown(e.graph(), d);
                            if (b.strong_differential != ds || !b.strong.empty())
                            {
                                every = false;
                                e.attach("gamma-set", b.strong_differential, d);
                                break;
                            }
                        }
                        e.record("gamma-sets", static_cast<std::int64_t>(sets->size()));
                        e.iff(ds == e.n() - 2 * gm, every, "strong differential = n - 2 gamma",
                                "every gamma-set is optimal with no strong members");
                    });

            add("strict-gamma-set", ClaimKind::Implication,
                    "a gamma-set with a strong member forces strong differential >= n - 2 gamma + 1",
                    "some gamma-set has a strong member",
                    [](Evaluation & e) {
                        auto * sets = e.cache().gamma_sets();
                        if (!sets)
                            return Tri::Unknown;
                        for (auto & d : *sets)
                            if (!breakdown(e.graph(), d).strong.empty())
                            {
                                e.attach("gamma-set-with-strong-member", breakdown(e.graph(), d).strong_differential, d);
                                return Tri::Yes;
                            }
                        return Tri::No;
                    },
                    [](Evaluation & e) {
                        at_least(e, e.get(I::StrongDifferential), e.n() - 2 * e.get(I::Domination) + 1,
                                "strong differential >= n - 2 gamma + 1");
                    });

            add("half-n-minus-gamma", ClaimKind::Inequality, "min degree >= 2: 2 strong differential >= n - gamma",
                    "min degree >= 2", min_degree_at_least(2), [](Evaluation & e) {
                        at_least(e, 2 * e.get(I::StrongDifferential), e.n() - e.get(I::Domination), "2 strong differential >= n - gamma");
                    });

            add("corona", ClaimKind::Identity,
                    "corona of G1 with nontrivial G2: differential = strong differential = n1 (n2 - 1)",
                    "graph built as a corona with n2 >= 2",
                    [](Evaluation & e) {
                        auto orders = corona_orders(e.context());
                        return tri(orders && orders->second >= 2);
                    },
                    [](Evaluation & e) {
                        auto [n1, n2] = *corona_orders(e.context());
                        e.record("n1", n1);
                        e.record("n2", n2);
                        auto target = n1 * (n2 - 1);
                        auto d = e.get(I::Differential);
                        auto ds = e.get(I::StrongDifferential);
                        e.set_sides(ds, target);
                        e.require(d == target, "differential = n1 (n2 - 1) fails");
                        e.require(ds == target, "strong differential = n1 (n2 - 1) fails");
                    });

            add("diff-sandwich", ClaimKind::Inequality,
                    "differential <= strong differential <= differential + gamma - 1", "", always, [](Evaluation & e) {
                        auto d = e.get(I::Differential);
                        auto ds = e.get(I::StrongDifferential);
                        auto gm = e.get(I::Domination);
                        e.set_sides(ds, d + gm - 1);
                        e.require(d <= ds, "differential <= strong differential fails");
                        e.require(ds <= d + gm - 1, "strong differential <= differential + gamma - 1 fails");
                    });

            add("iff-equal-differentials", ClaimKind::Iff,
                    "strong differential = differential iff some optimal set has no strong members", "", always,
                    [](Evaluation & e) {
                        auto d = e.get(I::Differential);
                        auto ds = e.get(I::StrongDifferential);
                        auto * sets = e.cache().strong_sets();
                        if (!sets)
                        {
                            e.undecided("order above the exhaustive guard");
                            return;
                        }
                        bool exists = false;
                        for (auto & s : *sets)
                            if (breakdown(e.graph(), s).strong.empty())
                            {
                                exists = true;
                                e.attach("optimum-without-strong", ds, s);
                                break;
                            }
                        e.iff(ds == d, exists, "strong differential = differential", "an optimal set with no strong members exists");
                    });

            add("tree-3-4-roman", ClaimKind::Inequality, "trees: 4 gamma_I >= 3 gamma_R", "tree", is_a_tree, [](Evaluation & e) {
                at_least(e, 4 * e.get(I::ItalianDomination), 3 * e.get(I::RomanDomination), "4 gamma_I >= 3 gamma_R");
            });
            add("tree-floor-bound", ClaimKind::Inequality, "trees: strong differential <= floor((n + 3 differential) / 4)", "tree",
                    is_a_tree, [](Evaluation & e) {
                        at_most(e, e.get(I::StrongDifferential), floor_div(e.n() + 3 * e.get(I::Differential), 4),
                                "strong differential <= floor((n + 3 differential) / 4)");
                    });

            add("maxdeg-sandwich", ClaimKind::Inequality,
                    "max degree - 1 <= strong differential <= n max degree / (max degree + 2)", "", always, [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto d = delta(e);
                        e.set_sides(ds, floor_div(e.n() * d, d + 2));
                        e.require(d - 1 <= ds, "max degree - 1 <= strong differential fails");
                        e.require(ds * (d + 2) <= e.n() * d, "strong differential <= n max degree / (max degree + 2) fails");
                    });
            add("iff-maxdeg", ClaimKind::Iff,
                    "strong differential = n max degree / (max degree + 2) iff gamma_2 = 2n / (max degree + 2)", "", always,
                    [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto g2 = e.get(I::TwoDomination);
                        auto d = delta(e);
                        e.iff(ds * (d + 2) == e.n() * d, g2 * (d + 2) == 2 * e.n(),
                                "strong differential = n max degree / (max degree + 2)", "gamma_2 = 2n / (max degree + 2)");
                    });

            add("lemma-T-weak-witness", ClaimKind::Implication,
                    "trees in family T: every maximum-degree vertex is weak in some optimal set",
                    "tree of order >= 3 in family T",
                    [](Evaluation & e) {
                        auto & g = e.graph();
                        return tri(g.order() >= 3 && is_tree(g) && is_family_t(g));
                    },
                    [](Evaluation & e) {
                        auto & g = e.graph();
                        auto * sets = e.cache().strong_sets();
                        if (!sets)
                        {
                            e.undecided("order above the exhaustive guard");
                            return;
                        }
                        auto ds = e.get(I::StrongDifferential);
                        VertexSet covered(g.order());
                        for (auto & d : *sets)
                            covered |= breakdown(g, d).weak;
                        for (Vertex v = 0; v < g.order(); ++v)
                            if (g.degree(v) == g.max_degree())
                                e.require(covered.contains(v), "vertex " + std::to_string(v) + " is weak in no optimal set");
                        e.set_sides(ds, ds);
                    });

            add("tree-family-T", ClaimKind::Iff, "trees of order >= 3: strong differential = max degree - 1 iff the tree is in family T",
                    "tree of order >= 3", [](Evaluation & e) { return tri(e.graph().order() >= 3 && is_tree(e.graph())); },
                    [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto d = delta(e);
                        e.iff(ds == d - 1, is_family_t(e.graph()), "strong differential = max degree - 1", "membership in family T");
                    });

            add("alpha-lower", ClaimKind::Inequality, "min degree >= 2: strong differential >= alpha", "min degree >= 2",
                    min_degree_at_least(2), [](Evaluation & e) {
                        at_least(e, e.get(I::StrongDifferential), e.get(I::Independence), "strong differential >= alpha");
                    });
            add("half-beta", ClaimKind::Inequality, "every component has max degree >= 2: 2 strong differential >= beta",
                    "every component has max degree >= 2", [](Evaluation & e) { return tri(every_component_has_max_degree_two(e.graph())); },
                    [](Evaluation & e) {
                        at_least(e, 2 * e.get(I::StrongDifferential), e.get(I::VertexCover), "2 strong differential >= beta");
                    });

            add("domchain", ClaimKind::Inequality, "gamma <= gamma_t2 <= gamma_2", "no isolated vertices", no_isolated,
                    [](Evaluation & e) {
                        auto gm = e.get(I::Domination);
                        auto gt = e.get(I::SemitotalDomination);
                        auto g2 = e.get(I::TwoDomination);
                        e.set_sides(gt, g2);
                        e.require(gm <= gt, "gamma <= gamma_t2 fails");
                        e.require(gt <= g2, "gamma_t2 <= gamma_2 fails");
                    });
            add("semitotal-upper", ClaimKind::Inequality, "no isolated vertices: strong differential <= n - gamma_t2",
                    "no isolated vertices", no_isolated, [](Evaluation & e) {
                        at_most(e, e.get(I::StrongDifferential), e.n() - e.get(I::SemitotalDomination), "strong differential <= n - gamma_t2");
                    });
            add("semitotal-eq", ClaimKind::Implication, "gamma_t2 = gamma_2 forces strong differential = n - gamma_2",
                    "gamma_t2 = gamma_2", semitotal_equals_two_domination, [](Evaluation & e) {
                        equal(e, e.get(I::StrongDifferential), e.n() - e.get(I::TwoDomination), "strong differential = n - gamma_2");
                    });

            add("trivial-i", ClaimKind::Inequality, "n >= 3: 0 <= strong differential <= n - 2", "n >= 3", order_at_least(3),
                    [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        e.set_sides(ds, e.n() - 2);
                        e.require(ds >= 0, "strong differential >= 0 fails");
                        e.require(ds <= e.n() - 2, "strong differential <= n - 2 fails");
                    });
            add("trivial-ii", ClaimKind::Iff, "n >= 3: strong differential = 0 iff max degree <= 1", "n >= 3", order_at_least(3),
                    [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto d = delta(e);
                        e.iff(ds == 0, d <= 1, "strong differential = 0", "max degree <= 1");
                    });
            add("trivial-iii", ClaimKind::Iff,
                    "n >= 3: strong differential = 1 iff G is C3, P3 or P4 plus components of max degree <= 1", "n >= 3",
                    order_at_least(3), [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        e.iff(ds == 1, has_single_special_component(e.graph()), "strong differential = 1",
                                "one component is C3, P3 or P4 and the rest have max degree <= 1");
                    });
            add("trivial-iv", ClaimKind::Iff, "n >= 3: strong differential = n - 2 iff max degree = n - 1 or gamma_2 = 2", "n >= 3",
                    order_at_least(3), [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto d = delta(e);
                        auto g2 = e.get(I::TwoDomination);
                        e.iff(ds == e.n() - 2, d == e.n() - 1 || g2 == 2, "strong differential = n - 2", "max degree = n - 1 or gamma_2 = 2");
                    });
            add("trivial-v", ClaimKind::Iff,
                    "n >= 3: strong differential = n - 3 iff (gamma_2 = 3 and max degree <= n - 2) or (gamma_2 > 3 and max degree = n - 2)",
                    "n >= 3", order_at_least(3), [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto d = delta(e);
                        auto g2 = e.get(I::TwoDomination);
                        auto n = e.n();
                        e.iff(ds == n - 3, (g2 == 3 && d <= n - 2) || (g2 > 3 && d == n - 2), "strong differential = n - 3",
                                "(gamma_2 = 3 and max degree <= n - 2) or (gamma_2 > 3 and max degree = n - 2)");
                    });

            add("family-g-remark", ClaimKind::Identity,
                    "family G: strong differential = differential = n - 2 gamma = n - gamma - sigma", "member of family G",
                    [](Evaluation & e) { return tri(is_family_g(e.graph())); },
                    [](Evaluation & e) {
                        auto ds = e.get(I::StrongDifferential);
                        auto d = e.get(I::Differential);
                        auto gm = e.get(I::Domination);
                        auto s = static_cast<std::int64_t>(sigma(e.graph()));
                        e.record("sigma", s);
                        e.set_sides(ds, e.n() - 2 * gm);
                        e.require(ds == d, "strong differential = differential fails");
                        e.require(ds == e.n() - 2 * gm, "strong differential = n - 2 gamma fails");
                        e.require(ds == e.n() - gm - s, "strong differential = n - gamma - sigma fails");
                    });

            add("table-gamma-sigma", ClaimKind::Inequality, "gamma_I >= gamma + sigma", "", always, [](Evaluation & e) {
                auto s = static_cast<std::int64_t>(sigma(e.graph()));
                e.record("sigma", s);
                at_least(e, e.get(I::ItalianDomination), e.get(I::Domination) + s, "gamma_I >= gamma + sigma");
            });
            add("table-iff-gamma", ClaimKind::Iff, "gamma_I = gamma iff gamma_2 = gamma", "", always, [](Evaluation & e) {
                auto gi = e.get(I::ItalianDomination);
                auto gm = e.get(I::Domination);
                auto g2 = e.get(I::TwoDomination);
                e.iff(gi == gm, g2 == gm, "gamma_I = gamma", "gamma_2 = gamma");
            });
            add("table-half-n-plus-gamma", ClaimKind::Inequality, "min degree >= 2: 2 gamma_I <= n + gamma", "min degree >= 2",
                    min_degree_at_least(2), [](Evaluation & e) {
                        at_most(e, 2 * e.get(I::ItalianDomination), e.n() + e.get(I::Domination), "2 gamma_I <= n + gamma");
                    });
            add("table-roman-gamma", ClaimKind::Inequality, "gamma_I >= gamma_R - gamma + 1", "", always, [](Evaluation & e) {
                at_least(e, e.get(I::ItalianDomination), e.get(I::RomanDomination) - e.get(I::Domination) + 1, "gamma_I >= gamma_R - gamma + 1");
            });
            add("table-iff-maxdeg", ClaimKind::Iff, "gamma_I = 2n / (max degree + 2) iff gamma_2 = 2n / (max degree + 2)", "", always,
                    [](Evaluation & e) {
                        auto gi = e.get(I::ItalianDomination);
                        auto g2 = e.get(I::TwoDomination);
                        auto d = delta(e);
                        e.iff(gi * (d + 2) == 2 * e.n(), g2 * (d + 2) == 2 * e.n(), "gamma_I = 2n / (max degree + 2)",
                                "gamma_2 = 2n / (max degree + 2)");
                    });
            add("table-alpha", ClaimKind::Inequality, "min degree >= 2: gamma_I <= beta", "min degree >= 2", min_degree_at_least(2),
                    [](Evaluation & e) { at_most(e, e.get(I::ItalianDomination), e.get(I::VertexCover), "gamma_I <= beta"); });
            add("table-half-beta", ClaimKind::Inequality, "every component has max degree >= 2: 2 gamma_I <= 2n - beta",
                    "every component has max degree >= 2", [](Evaluation & e) { return tri(every_component_has_max_degree_two(e.graph())); },
                    [](Evaluation & e) {
                        at_most(e, 2 * e.get(I::ItalianDomination), 2 * e.n() - e.get(I::VertexCover), "2 gamma_I <= 2n - beta");
                    });
            add("table-semitotal", ClaimKind::Inequality, "min degree >= 1: gamma_I >= gamma_t2", "min degree >= 1",
                    min_degree_at_least(1), [](Evaluation & e) {
                        at_least(e, e.get(I::ItalianDomination), e.get(I::SemitotalDomination), "gamma_I >= gamma_t2");
                    });
            add("table-gamma2-eq", ClaimKind::Implication, "gamma_t2 = gamma_2 forces gamma_I = gamma_2", "gamma_t2 = gamma_2",
                    semitotal_equals_two_domination, [](Evaluation & e) {
                        equal(e, e.get(I::ItalianDomination), e.get(I::TwoDomination), "gamma_I = gamma_2");
                    });
            return r;
        }
    }

    auto registry() -> const std::vector<TheoremCheck> &
    {
        static const std::vector<TheoremCheck> checks = build_registry();
        return checks;
    }

    auto find_check(std::string_view id) -> const TheoremCheck &
    {
        for (auto & c : registry())
            if (c.id == id)
                return c;
        throw UnknownTheorem(std::string(id));
    }

    auto select_checks(std::string_view ids) -> std::vector<TheoremCheck>
    {
        if (ids == "all")
            return registry();
        std::vector<TheoremCheck> out;
        std::unordered_set<std::string> seen;
        while (true)
        {
            auto comma = ids.find(',');
            auto id = ids.substr(0, comma);
            if (seen.insert(std::string(id)).second)
                out.push_back(find_check(id));
            if (comma == std::string_view::npos)
                break;
            ids = ids.substr(comma + 1);
        }
        return out;
    }

    auto evaluate(const TheoremCheck & check, InvariantCache & cache, const CheckContext & context) -> CheckOutcome
    {
        Evaluation e(cache, context);
        auto met = check.hypothesis ? check.hypothesis(e) : Tri::Yes;
        if (met == Tri::No)
        {
            CheckOutcome out;
            out.id = check.id;
            out.status = CheckStatus::HypothesisNotMet;
            out.detail = "hypothesis not met: " + check.hypothesis_text;
            return out;
        }
        if (met == Tri::Unknown)
        {
            e.undecided("hypothesis undecided within the exhaustive guard");
            return e.outcome(check.id);
        }
        check.claim(e);
        return e.outcome(check.id);
    }

    auto check(const Graph & g, std::string_view id, const SolverConfig & cfg, const CheckContext & context) -> CheckOutcome
    {
        auto & c = find_check(id);
        InvariantCache cache(g, cfg);
        return evaluate(c, cache, context);
    }

    auto check_all(const Graph & g, const std::vector<TheoremCheck> & checks, const SolverConfig & cfg,
            const CheckContext & context) -> std::vector<CheckOutcome>
    {
        InvariantCache cache(g, cfg);
        std::vector<CheckOutcome> out;
        out.reserve(checks.size());
        for (auto & c : checks)
            out.push_back(evaluate(c, cache, context));
        return out;
    }

    auto certificates_valid(const Counterexample & c) -> bool
    {
        for (auto & cert : c.certificates)
        {
            if (auto which = parse_invariant(cert.label))
            {
                InvariantResult r {*which, cert.value, cert.witness, std::nullopt, Method::BranchAndBound};
                if (!witness_is_valid(c.graph, r))
                    return false;
                continue;
            }
            auto * set = std::get_if<VertexSet>(&cert.witness);
            if (!set || set->universe() != c.graph.order())
                return false;
            if (breakdown(c.graph, *set).strong_differential != cert.value)
                return false;
        }
        return true;
    }
}

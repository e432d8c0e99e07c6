#include <strongdiff/error.hpp>
#include <strongdiff/families.hpp>
#include <strongdiff/io.hpp>
#include <strongdiff/set_calculus.hpp>
#include <strongdiff/solvers.hpp>
#include <strongdiff/theorems.hpp>

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace strongdiff;

namespace
{
    enum Exit
    {
        ok = 0,
        violated = 1,
        usage = 2,
        guard = 3
    };

    struct GuardStop
    {
        std::string message;
    };

    struct InputOptions
    {
        std::string input;
        std::string family;
        std::string format;
        std::optional<std::size_t> count;
        std::optional<std::uint64_t> seed;
    };

    struct GuardOptions
    {
        std::optional<std::size_t> guard;
        bool force = false;

        auto config() const -> SolverConfig
        {
            auto cfg = SolverConfig::from_environment();
            if (guard)
                cfg.size_guard = *guard;
            cfg.allow_guard_override = force;
            return cfg;
        }
    };

    void add_input_options(CLI::App * cmd, InputOptions & in, bool streams)
    {
        auto * input = cmd->add_option("--input", in.input, "Graph file (graph6 lines or an edge list), '-' for stdin");
        auto * family = cmd->add_option("--family", in.family, "Family description, e.g. corona(path:3,complete:2)");
        input->excludes(family);
        cmd->add_option("--format", in.format, "Input format: graph6 or edgelist (detected when omitted)")
                ->check(CLI::IsMember({"graph6", "edgelist"}));
        if (streams)
        {
            cmd->add_option("--count", in.count, "Number of graphs drawn from a random family");
            cmd->add_option("--seed", in.seed, "Base seed for random families");
        }
    }

    void add_guard_options(CLI::App * cmd, GuardOptions & g)
    {
        cmd->add_option("--guard", g.guard, "Largest order solved without --force (default 20 or STRONGDIFF_GUARD)");
        cmd->add_flag("--force", g.force, "Solve graphs above the size guard (up to 64 vertices)");
    }

    auto read_text(const std::string & path) -> std::string
    {
        std::ostringstream buffer;
        if (path == "-")
        {
            buffer << std::cin.rdbuf();
            return buffer.str();
        }
        std::ifstream file(path, std::ios::binary);
        if (!file)
            throw InvalidArgument("cannot open '" + path + "'");
        buffer << file.rdbuf();
        return buffer.str();
    }

    auto load(const InputOptions & in) -> std::vector<SourcedGraph>
    {
        if (!in.family.empty())
            return expand_stream(in.family, in.count, in.seed);
        if (in.input.empty())
            throw InvalidArgument("one of --input or --family is required");
        auto text = read_text(in.input);
        auto format = in.format.empty() ? detect_format(text) : *parse_graph_format(in.format);
        std::vector<SourcedGraph> out;
        if (format == GraphFormat::EdgeList)
        {
            out.push_back({in.input, parse_edgelist(text), std::nullopt});
            return out;
        }
        std::istringstream lines(text);
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(lines, line))
        {
            ++line_no;
            if (line.find_first_not_of(" \t\r") == std::string::npos)
                continue;
            try
            {
                out.push_back({in.input + ":" + std::to_string(line_no), parse_graph6(line), std::nullopt});
            }
            catch (const ParseError & e)
            {
                throw ParseError(std::string(e.what()) + " (line " + std::to_string(line_no) + ")", e.offset(), line_no);
            }
        }
        if (out.empty())
            throw ParseError("graph6: no graph in input", 0, 1);
        return out;
    }

    void enforce_guard(const std::vector<SourcedGraph> & graphs, const SolverConfig & cfg)
    {
        for (auto & item : graphs)
            if (item.graph.order() > cfg.size_guard && !cfg.allow_guard_override)
                throw GuardStop {"graph '" + item.source + "' has order " + std::to_string(item.graph.order()) +
                                 " above the size guard " + std::to_string(cfg.size_guard) + "; pass --force or raise --guard"};
    }

    auto elapsed_ms(std::chrono::steady_clock::time_point start) -> double
    {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }

    auto pretty(const Witness & w) -> std::string
    {
        std::string out = "{";
        if (auto * s = std::get_if<VertexSet>(&w))
        {
            for (auto v : s->members())
                out += (out.size() > 1 ? ", " : "") + std::to_string(v);
        }
        else
        {
            auto & f = std::get<WeightFunction>(w);
            for (std::size_t v = 0; v < f.order(); ++v)
                if (f[v] != 0)
                    out += (out.size() > 1 ? ", " : "") + std::to_string(v) + ":" + std::to_string(int(f[v]));
        }
        return out + "}";
    }

    auto pretty(const VertexSet & s) -> std::string
    {
        return pretty(Witness {s});
    }

    void emit_reports(const std::vector<Report> & reports, const std::map<std::string, StatusCounts> & summary, bool json)
    {
        if (!json)
            return;
        if (reports.size() == 1 && summary.empty())
        {
            std::cout << report_to_json(reports.front()) << "\n";
            return;
        }
        BatchReport batch;
        batch.reports = reports;
        batch.summary = summary;
        std::cout << batch_to_json(batch) << "\n";
    }

    auto run_compute(const InputOptions & in, const GuardOptions & g, const std::string & which, const std::string & method_text,
            bool json, bool csv) -> int
    {
        auto cfg = g.config();
        auto graphs = load(in);
        enforce_guard(graphs, cfg);
        std::vector<Invariant> invariants;
        if (which == "all")
            invariants.assign(all_invariants().begin(), all_invariants().end());
        else if (auto inv = parse_invariant(which))
            invariants.push_back(*inv);
        else
            throw InvalidArgument("unknown invariant '" + which + "'");
        auto method = parse_method(method_text);
        if (!method)
            throw InvalidArgument("unknown method '" + method_text + "'");

        std::vector<Report> reports;
        for (auto & item : graphs)
        {
            Report report;
            report.graph = describe(item.graph, item.source);
            if (!json && !csv)
                std::cout << "# " << item.source << " (n=" << item.graph.order() << ", m=" << item.graph.size() << ")\n";
            for (auto inv : invariants)
            {
                if (inv == Invariant::SemitotalDomination && has_isolated_vertex(item.graph))
                {
                    if (which != "all")
                        throw UndefinedInvariant("semitotal domination is undefined for graphs with isolated vertices");
                    if (!json && !csv)
                        std::cout << invariant_name(inv) << " = undefined (isolated vertex)\n";
                    continue;
                }
                auto start = std::chrono::steady_clock::now();
                auto result = *method == Method::BranchAndBound ? solve(item.graph, inv, cfg)
                            : *method == Method::BruteForce     ? solve_oracle(item.graph, inv, cfg)
                                                                : gallai_derived(item.graph, inv, cfg);
                auto ms = elapsed_ms(start);
                if (!json && !csv)
                    std::cout << invariant_name(inv) << " = " << result.value << "  witness " << pretty(result.witness) << "\n";
                report.results.push_back({std::move(result), ms});
            }
            reports.push_back(std::move(report));
        }
        if (csv)
            std::cout << reports_to_csv(reports);
        emit_reports(reports, {}, json);
        return ok;
    }

    auto parse_set(const std::string & text, std::size_t n) -> VertexSet
    {
        VertexSet s(n);
        std::stringstream stream(text);
        std::string item;
        while (std::getline(stream, item, ','))
        {
            auto begin = item.find_first_not_of(' ');
            if (begin == std::string::npos)
                continue;
            std::size_t pos = 0;
            unsigned long v = 0;
            try
            {
                v = std::stoul(item.substr(begin), &pos);
            }
            catch (const std::exception &)
            {
                throw InvalidArgument("--set expects comma-separated vertex indices");
            }
            if (begin + pos != item.size())
                throw InvalidArgument("--set expects comma-separated vertex indices");
            s.insert(v);
        }
        return s;
    }

    auto run_certify(const InputOptions & in, const std::string & set_text, bool json) -> int
    {
        auto graphs = load(in);
        if (graphs.size() != 1)
            throw InvalidArgument("certify works on exactly one graph");
        auto & g = graphs.front().graph;
        auto d = parse_set(set_text, g.order());
        auto b = breakdown(g, d);
        if (json)
        {
            TimedResult t;
            t.result = {Invariant::StrongDifferential, b.strong_differential, d, b, Method::BranchAndBound};
            Report report;
            report.graph = describe(g, graphs.front().source);
            report.results.push_back(std::move(t));
            std::cout << report_to_json(report) << "\n";
            return ok;
        }
        std::cout << "set " << pretty(b.set) << " size " << b.set.size() << "\n"
                  << "external " << pretty(b.external) << " size " << b.external.size() << "\n"
                  << "weak " << pretty(b.weak) << " size " << b.weak.size() << "\n"
                  << "strong " << pretty(b.strong) << " size " << b.strong.size() << "\n"
                  << "dominating " << (is_dominating(g, d) ? "yes" : "no") << "\n"
                  << "differential " << b.differential << "\n"
                  << "strong-differential " << b.strong_differential << "\n";
        return ok;
    }

    void print_counts_table(const std::vector<TheoremCheck> & checks, const std::map<std::string, StatusCounts> & counts)
    {
        std::size_t width = 2;
        for (auto & c : checks)
            width = std::max(width, c.id.size());
        std::cout << std::left << std::setw(int(width)) << "id" << "  holds  n/a  violated  inconclusive\n";
        for (auto & c : checks)
        {
            auto & k = counts.at(c.id);
            std::cout << std::left << std::setw(int(width)) << c.id << "  " << std::right << std::setw(5) << k.holds << "  "
                      << std::setw(3) << k.hypothesis_not_met << "  " << std::setw(8) << k.violated << "  " << std::setw(12)
                      << k.inconclusive << "\n";
        }
    }

    auto run_checks(const std::vector<SourcedGraph> & graphs, const std::vector<TheoremCheck> & checks, const SolverConfig & cfg,
            bool json, bool table_style) -> int
    {
        std::vector<Report> reports;
        std::map<std::string, StatusCounts> summary;
        for (auto & c : checks)
            summary[c.id];
        std::vector<std::pair<std::string, CheckOutcome>> findings;
        for (auto & item : graphs)
        {
            Report report;
            report.graph = describe(item.graph, item.source);
            InvariantCache cache(item.graph, cfg);
            CheckContext context {item.spec};
            for (auto & c : checks)
            {
                auto start = std::chrono::steady_clock::now();
                auto outcome = evaluate(c, cache, context);
                auto ms = elapsed_ms(start);
                summary[c.id].add(outcome.status);
                if (outcome.status == CheckStatus::Violated || outcome.status == CheckStatus::Inconclusive)
                    findings.emplace_back(item.source, outcome);
                report.checks.push_back({std::move(outcome), ms});
            }
            reports.push_back(std::move(report));
        }
        std::size_t violations = 0;
        for (auto & [id, k] : summary)
            violations += k.violated;
        if (json)
        {
            emit_reports(reports, summary, true);
        }
        else
        {
            if (table_style)
            {
                std::cout << "relation                                                                    result\n";
                for (auto & c : checks)
                {
                    auto & k = summary.at(c.id);
                    std::string verdict = k.violated ? "FAIL" : k.inconclusive ? "INCONCLUSIVE" : "pass";
                    std::cout << std::left << std::setw(76) << c.description << verdict << " (" << k.holds << " holds, "
                              << k.hypothesis_not_met << " n/a)\n";
                }
            }
            else
            {
                print_counts_table(checks, summary);
            }
            for (auto & [source, outcome] : findings)
                std::cout << status_name(outcome.status) << " " << outcome.id << " on " << source << ": " << outcome.detail << "\n";
            std::cout << graphs.size() << " graphs, " << violations << " violated\n";
        }
        return violations ? violated : ok;
    }

    auto injected_false_check() -> TheoremCheck
    {
        TheoremCheck c;
        c.id = "injected-false";
        c.kind = ClaimKind::Identity;
        c.description = "strong differential = n (deliberately false)";
        c.hypothesis = [](Evaluation &) { return Tri::Yes; };
        c.claim = [](Evaluation & e) {
            auto ds = e.get(Invariant::StrongDifferential);
            e.set_sides(ds, e.n());
            e.require(ds == e.n(), "strong differential = n fails");
        };
        return c;
    }

    auto run_verify(const InputOptions & in, const GuardOptions & g, const std::string & ids, std::optional<std::size_t> budget,
            bool json, bool inject) -> int
    {
        auto cfg = g.config();
        auto checks = select_checks(ids);
        if (inject)
            checks.push_back(injected_false_check());
        auto graphs = load(in);
        if (budget && graphs.size() > *budget)
            graphs.resize(*budget);
        enforce_guard(graphs, cfg);
        return run_checks(graphs, checks, cfg, json, false);
    }

    auto run_generate(const InputOptions & in, const std::string & format_text) -> int
    {
        auto graphs = load(in);
        auto format = *parse_graph_format(format_text);
        if (format == GraphFormat::EdgeList && graphs.size() != 1)
            throw InvalidArgument("the edge list format holds one graph; use graph6 for streams");
        for (auto & item : graphs)
            std::cout << write_graph(item.graph, format);
        return ok;
    }

    auto table_corpus() -> std::vector<SourcedGraph>
    {
        auto corpus = expand_stream("graphs:n=1-6;figure-a;figure-b;corona(path:3,complete:2);corona(cycle:4,path:2)");
        for (std::size_t r = 1; r <= 5; ++r)
        {
            auto more = expand_stream("bipartite:2," + std::to_string(r));
            corpus.push_back(std::move(more.front()));
        }
        return corpus;
    }

    auto run_table(const GuardOptions & g, bool json) -> int
    {
        std::vector<TheoremCheck> rows;
        for (auto & c : registry())
            if (c.id.rfind("table-", 0) == 0)
                rows.push_back(c);
        return run_checks(table_corpus(), rows, g.config(), json, true);
    }
}

int main(int argc, char ** argv)
{
    CLI::App app {"Strong differential and Italian domination toolkit"};
    app.require_subcommand(1);
    app.set_version_flag("--version", "strongdiff 1.0.0");

    InputOptions in;
    GuardOptions guard_opts;
    bool json = false;
    bool csv = false;

    std::string invariant = "all";
    std::string method = "branch-and-bound";
    auto * compute = app.add_subcommand("compute", "Compute invariants with witnesses");
    add_input_options(compute, in, true);
    add_guard_options(compute, guard_opts);
    compute->add_option("--invariant", invariant, "Invariant name or 'all'");
    compute->add_option("--method", method, "branch-and-bound, brute-force or gallai-derived");
    auto * json_flag = compute->add_flag("--json", json, "JSON report");
    compute->add_flag("--csv", csv, "CSV rows")->excludes(json_flag);

    std::string set_text;
    auto * certify = app.add_subcommand("certify", "Break down the differentials of a given set");
    add_input_options(certify, in, false);
    certify->add_option("--set", set_text, "Comma-separated vertex indices")->required();
    certify->add_flag("--json", json, "JSON report");

    std::string ids = "all";
    std::optional<std::size_t> budget;
    auto * verify = app.add_subcommand("verify", "Run theorem checks over graphs");
    add_input_options(verify, in, true);
    add_guard_options(verify, guard_opts);
    verify->add_option("--check", ids, "Check id, comma-separated ids, or 'all'");
    verify->add_option("--budget", budget, "Evaluate at most this many graphs");
    verify->add_flag("--json", json, "JSON report");
    bool inject = false;
    verify->add_flag("--inject-false-check", inject, "Add a check that is false on every graph with an edge")->group("");

    std::string out_format = "graph6";
    auto * generate_cmd = app.add_subcommand("generate", "Emit graphs of a family");
    generate_cmd->add_option("--family", in.family, "Family description")->required();
    generate_cmd->add_option("--count", in.count, "Number of graphs drawn from a random family");
    generate_cmd->add_option("--seed", in.seed, "Base seed for random families");
    generate_cmd->add_option("--format", out_format, "Output format: graph6 or edgelist")->check(CLI::IsMember({"graph6", "edgelist"}));

    auto * table = app.add_subcommand("table", "Check the Italian domination relations over a small built-in corpus");
    add_guard_options(table, guard_opts);
    table->add_flag("--json", json, "JSON report");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError & e)
    {
        auto code = app.exit(e);
        return code == 0 ? ok : usage;
    }

    try
    {
        if (compute->parsed())
            return run_compute(in, guard_opts, invariant, method, json, csv);
        if (certify->parsed())
            return run_certify(in, set_text, json);
        if (verify->parsed())
            return run_verify(in, guard_opts, ids, budget, json, inject);
        if (generate_cmd->parsed())
            return run_generate(in, out_format);
        if (table->parsed())
            return run_table(guard_opts, json);
    }
    catch (const GuardStop & e)
    {
        std::cerr << "error: " << e.message << "\n";
        return guard;
    }
    catch (const SizeGuardExceeded & e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return guard;
    }
    catch (const std::exception & e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return usage;
    }
    return usage;
}

#include <strongdiff/error.hpp>
#include <strongdiff/io.hpp>
#include <strongdiff/set_calculus.hpp>

#include <json.hpp>

namespace strongdiff
{
    using nlohmann::json;

    namespace
    {
        auto set_json(const VertexSet & s) -> json
        {
            return s.members();
        }

        auto set_from(const json & j, std::size_t n) -> VertexSet
        {
            VertexSet s(n);
            for (auto & v : j)
                s.insert(v.get<Vertex>());
            return s;
        }

        auto witness_json(const Witness & w) -> json
        {
            if (auto * s = std::get_if<VertexSet>(&w))
                return {{"kind", "set"}, {"vertices", set_json(*s)}};
            auto & f = std::get<WeightFunction>(w);
            return {{"kind", "weights"}, {"weights", f.weights()}};
        }

        auto witness_from(const json & j, std::size_t n) -> Witness
        {
            auto kind = j.at("kind").get<std::string>();
            if (kind == "set")
                return set_from(j.at("vertices"), n);
            if (kind == "weights")
                return WeightFunction(j.at("weights").get<std::vector<std::uint8_t>>());
            throw InvalidArgument("unknown witness kind '" + kind + "'");
        }

        auto edges_json(const std::vector<Edge> & edges) -> json
        {
            json out = json::array();
            for (auto [u, v] : edges)
                out.push_back({u, v});
            return out;
        }

        auto edges_from(const json & j) -> std::vector<Edge>
        {
            std::vector<Edge> edges;
            for (auto & e : j)
                edges.emplace_back(e.at(0).get<Vertex>(), e.at(1).get<Vertex>());
            return edges;
        }

        auto result_json(const TimedResult & t) -> json
        {
            auto & r = t.result;
            json j {
                {"invariant", invariant_name(r.invariant)},
                {"value", r.value},
                {"method", method_name(r.method)},
                {"witness", witness_json(r.witness)},
                {"elapsed_ms", t.elapsed_ms},
            };
            if (r.breakdown)
            {
                auto & b = *r.breakdown;
                j["breakdown"] = {
                    {"set", set_json(b.set)},
                    {"external", set_json(b.external)},
                    {"weak", set_json(b.weak)},
                    {"strong", set_json(b.strong)},
                    {"differential", b.differential},
                    {"strong_differential", b.strong_differential},
                };
            }
            return j;
        }

        auto result_from(const json & j, std::size_t n) -> TimedResult
        {
            TimedResult t;
            auto & r = t.result;
            auto inv = parse_invariant(j.at("invariant").get<std::string>());
            auto method = parse_method(j.at("method").get<std::string>());
            if (!inv || !method)
                throw InvalidArgument("unknown invariant or method in report");
            r.invariant = *inv;
            r.method = *method;
            r.value = j.at("value").get<std::int64_t>();
            r.witness = witness_from(j.at("witness"), n);
            t.elapsed_ms = j.at("elapsed_ms").get<double>();
            if (j.contains("breakdown"))
            {
                auto & b = j.at("breakdown");
                r.breakdown = DifferentialBreakdown {
                    set_from(b.at("set"), n),
                    set_from(b.at("external"), n),
                    set_from(b.at("weak"), n),
                    set_from(b.at("strong"), n),
                    b.at("differential").get<std::int64_t>(),
                    b.at("strong_differential").get<std::int64_t>(),
                };
            }
            return t;
        }

        auto optional_json(const std::optional<std::int64_t> & v) -> json
        {
            return v ? json(*v) : json(nullptr);
        }

        auto optional_from(const json & j) -> std::optional<std::int64_t>
        {
            return j.is_null() ? std::nullopt : std::optional<std::int64_t>(j.get<std::int64_t>());
        }

        auto check_json(const TimedCheck & t) -> json
        {
            auto & o = t.outcome;
            json j {
                {"id", o.id},
                {"status", status_name(o.status)},
                {"lhs", optional_json(o.lhs)},
                {"rhs", optional_json(o.rhs)},
                {"values", o.values},
                {"detail", o.detail},
                {"elapsed_ms", t.elapsed_ms},
            };
            if (o.counterexample)
            {
                auto & c = *o.counterexample;
                json certs = json::array();
                for (auto & cert : c.certificates)
                    certs.push_back({{"label", cert.label}, {"value", cert.value}, {"witness", witness_json(cert.witness)}});
                j["counterexample"] = {
                    {"n", c.graph.order()},
                    {"edges", edges_json(c.graph.edges())},
                    {"certificates", certs},
                };
            }
            return j;
        }

        auto check_from(const json & j) -> TimedCheck
        {
            TimedCheck t;
            auto & o = t.outcome;
            o.id = j.at("id").get<std::string>();
            auto status = parse_status(j.at("status").get<std::string>());
            if (!status)
                throw InvalidArgument("unknown check status in report");
            o.status = *status;
            o.lhs = optional_from(j.at("lhs"));
            o.rhs = optional_from(j.at("rhs"));
            o.values = j.at("values").get<std::map<std::string, std::int64_t>>();
            o.detail = j.at("detail").get<std::string>();
            t.elapsed_ms = j.at("elapsed_ms").get<double>();
            if (j.contains("counterexample"))
            {
                auto & c = j.at("counterexample");
                auto n = c.at("n").get<std::size_t>();
                auto edges = edges_from(c.at("edges"));
                Counterexample ce {Graph(n, edges), {}};
                for (auto & cert : c.at("certificates"))
                    ce.certificates.push_back({cert.at("label").get<std::string>(), cert.at("value").get<std::int64_t>(),
                            witness_from(cert.at("witness"), n)});
                o.counterexample = std::move(ce);
            }
            return t;
        }

        auto report_json(const Report & r) -> json
        {
            json results = json::array();
            for (auto & t : r.results)
                results.push_back(result_json(t));
            json checks = json::array();
            for (auto & t : r.checks)
                checks.push_back(check_json(t));
            return {
                {"schema_version", r.schema_version},
                {"graph", {{"n", r.graph.n}, {"edges", edges_json(r.graph.edges)}, {"source", r.graph.source}}},
                {"results", results},
                {"checks", checks},
            };
        }

        auto report_from(const json & j) -> Report
        {
            Report r;
            r.schema_version = j.at("schema_version").get<std::string>();
            auto & g = j.at("graph");
            r.graph.n = g.at("n").get<std::size_t>();
            r.graph.edges = edges_from(g.at("edges"));
            r.graph.source = g.at("source").get<std::string>();
            for (auto & t : j.at("results"))
                r.results.push_back(result_from(t, r.graph.n));
            for (auto & t : j.at("checks"))
                r.checks.push_back(check_from(t));
            return r;
        }

        auto parse(std::string_view text) -> json
        {
            try
            {
                return json::parse(text);
            }
            catch (const json::parse_error & e)
            {
                throw ParseError(std::string("json: ") + e.what(), e.byte, 0);
            }
        }
    }

    auto describe(const Graph & g, std::string source) -> GraphInfo
    {
        return {g.order(), g.edges(), std::move(source)};
    }

    auto operator==(const TimedResult & a, const TimedResult & b) -> bool
    {
        return a.result.invariant == b.result.invariant && a.result.value == b.result.value &&
               a.result.witness == b.result.witness && a.result.breakdown == b.result.breakdown &&
               a.result.method == b.result.method && a.elapsed_ms == b.elapsed_ms;
    }

    auto operator==(const TimedCheck & a, const TimedCheck & b) -> bool
    {
        return a.outcome == b.outcome && a.elapsed_ms == b.elapsed_ms;
    }

    auto operator==(const Report & a, const Report & b) -> bool
    {
        return a.schema_version == b.schema_version && a.graph == b.graph && a.results == b.results && a.checks == b.checks;
    }

    auto operator==(const BatchReport & a, const BatchReport & b) -> bool
    {
        return a.schema_version == b.schema_version && a.reports == b.reports && a.summary == b.summary;
    }

    auto report_to_json(const Report & report) -> std::string
    {
        return report_json(report).dump(2);
    }

    auto report_from_json(std::string_view text) -> Report
    {
        return report_from(parse(text));
    }

    auto batch_to_json(const BatchReport & batch) -> std::string
    {
        json reports = json::array();
        for (auto & r : batch.reports)
            reports.push_back(report_json(r));
        json summary = json::object();
        for (auto & [id, c] : batch.summary)
            summary[id] = {{"holds", c.holds}, {"hypothesis_not_met", c.hypothesis_not_met}, {"violated", c.violated},
                    {"inconclusive", c.inconclusive}};
        return json {{"schema_version", batch.schema_version}, {"reports", reports}, {"summary", summary}}.dump(2);
    }

    auto batch_from_json(std::string_view text) -> BatchReport
    {
        auto j = parse(text);
        BatchReport b;
        b.schema_version = j.at("schema_version").get<std::string>();
        for (auto & r : j.at("reports"))
            b.reports.push_back(report_from(r));
        for (auto & [id, c] : j.at("summary").items())
            b.summary[id] = {c.at("holds").get<std::size_t>(), c.at("hypothesis_not_met").get<std::size_t>(),
                    c.at("violated").get<std::size_t>(), c.at("inconclusive").get<std::size_t>()};
        return b;
    }

    auto witness_text(const Witness & w) -> std::string
    {
        std::string out;
        if (auto * s = std::get_if<VertexSet>(&w))
        {
            for (auto v : s->members())
                out += (out.empty() ? "" : ";") + std::to_string(v);
            return out;
        }
        auto & f = std::get<WeightFunction>(w);
        for (std::size_t v = 0; v < f.order(); ++v)
            if (f[v] != 0)
                out += (out.empty() ? "" : ";") + std::to_string(v) + "=" + std::to_string(int(f[v]));
        return out;
    }

    auto reports_to_csv(const std::vector<Report> & reports) -> std::string
    {
        std::string out = "graph-id,invariant,value,witness\n";
        for (auto & r : reports)
        {
            std::string id = r.graph.source;
            if (id.find_first_of(",\"") != std::string::npos)
            {
                std::string quoted = "\"";
                for (char c : id)
                    quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
                id = quoted + "\"";
            }
            for (auto & t : r.results)
                out += id + "," + std::string(invariant_name(t.result.invariant)) + "," + std::to_string(t.result.value) + "," +
                       witness_text(t.result.witness) + "\n";
        }
        return out;
    }
}

#include <strongdiff/error.hpp>
#include <strongdiff/families.hpp>

#include <charconv>
#include <cctype>

namespace strongdiff
{
    namespace
    {
        struct Parsed
        {
            FamilySpec spec;
            std::optional<std::size_t> count;
        };

        auto is_token_char(char c) -> bool
        {
            return std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' || c == '=' || c == '_';
        }

        auto parse_unsigned(std::string_view text, std::string_view what) -> std::uint64_t
        {
            std::uint64_t value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc {} || ptr != text.data() + text.size() || text.empty())
                throw InvalidSpec("expected a non-negative integer for " + std::string(what) + ", got '" + std::string(text) + "'");
            return value;
        }

        auto parse_probability(std::string_view text) -> double
        {
            double value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc {} || ptr != text.data() + text.size() || text.empty())
                throw InvalidSpec("expected a probability, got '" + std::string(text) + "'");
            if (!(value >= 0.0 && value <= 1.0))
                throw InvalidSpec("probability must lie in [0, 1]");
            return value;
        }

        class SpecParser
        {
            public:
                explicit SpecParser(std::string_view text) : _text(text) {}

                auto parse_all() -> Parsed
                {
                    auto parsed = parse();
                    if (_pos != _text.size())
                        fail("unexpected trailing input");
                    return parsed;
                }

            private:
                std::string_view _text;
                std::size_t _pos = 0;

                [[noreturn]] void fail(const std::string & message) const
                {
                    throw InvalidSpec(message + " at position " + std::to_string(_pos) + " in '" + std::string(_text) + "'");
                }

                auto peek() const -> char
                {
                    return _pos < _text.size() ? _text[_pos] : '\0';
                }

                void expect(char c)
                {
                    if (peek() != c)
                        fail(std::string("expected '") + c + "'");
                    ++_pos;
                }

                auto token_at(std::size_t pos) const -> std::string_view
                {
                    auto end = pos;
                    while (end < _text.size() && is_token_char(_text[end]))
                        ++end;
                    return _text.substr(pos, end - pos);
                }

                auto read_token() -> std::string_view
                {
                    auto token = token_at(_pos);
                    if (token.empty())
                        fail("expected a name or parameter");
                    _pos += token.size();
                    return token;
                }

                auto starts_new_spec(std::size_t pos) const -> bool
                {
                    auto token = token_at(pos);
                    auto after = pos + token.size();
                    char next = after < _text.size() ? _text[after] : '\0';
                    return next == ':' || next == '(' || token == "figure-a" || token == "figure-b";
                }

                auto parse() -> Parsed
                {
                    auto name = read_token();
                    Parsed parsed;
                    auto & spec = parsed.spec;
                    if (name == "corona" || name == "union")
                    {
                        spec.family = name == "corona" ? Family::Corona : Family::Union;
                        expect('(');
                        auto a = parse();
                        expect(',');
                        auto b = parse();
                        expect(')');
                        if (a.count || b.count)
                            fail("count is not allowed inside a compound family");
                        spec.operands = {std::move(a.spec), std::move(b.spec)};
                        return parsed;
                    }
                    if (name == "figure-a" || name == "figure-b")
                    {
                        spec.family = name == "figure-a" ? Family::FigureA : Family::FigureB;
                        return parsed;
                    }
                    expect(':');
                    std::vector<std::string_view> params {read_token()};
                    while (peek() == ',' && !starts_new_spec(_pos + 1))
                    {
                        ++_pos;
                        params.push_back(read_token());
                    }
                    interpret(name, params, parsed);
                    return parsed;
                }

                void interpret(std::string_view name, const std::vector<std::string_view> & params, Parsed & parsed)
                {
                    auto & spec = parsed.spec;
                    std::vector<std::size_t> positional;
                    std::optional<std::size_t> n;
                    std::optional<double> p;
                    std::optional<std::uint64_t> seed;
                    std::optional<SupportLayout> layout;
                    for (auto param : params)
                    {
                        auto eq = param.find('=');
                        if (eq == std::string_view::npos)
                        {
                            positional.push_back(parse_unsigned(param, name));
                            continue;
                        }
                        auto key = param.substr(0, eq);
                        auto value = param.substr(eq + 1);
                        if (key == "n")
                            n = parse_unsigned(value, "n");
                        else if (key == "p")
                            p = parse_probability(value);
                        else if (key == "seed")
                            seed = parse_unsigned(value, "seed");
                        else if (key == "count")
                            parsed.count = parse_unsigned(value, "count");
                        else if (key == "supports")
                        {
                            if (value == "path")
                                layout = SupportLayout::Path;
                            else if (value == "none")
                                layout = SupportLayout::None;
                            else if (value == "complete")
                                layout = SupportLayout::Complete;
                            else
                                fail("unknown support layout '" + std::string(value) + "'");
                        }
                        else
                            fail("unknown parameter '" + std::string(key) + "'");
                    }

                    auto require_positional = [&](std::size_t count) {
                        if (positional.size() != count || n || p || seed || layout || parsed.count)
                            fail("family '" + std::string(name) + "' takes " + std::to_string(count) + " integer parameter(s)");
                    };

                    if (name == "path" || name == "cycle" || name == "star" || name == "complete" || name == "empty" || name == "substar")
                    {
                        require_positional(1);
                        spec.family = name == "path"       ? Family::Path
                                    : name == "cycle"      ? Family::Cycle
                                    : name == "star"       ? Family::Star
                                    : name == "complete"   ? Family::Complete
                                    : name == "empty"      ? Family::Empty
                                                           : Family::SubdividedStar;
                        spec.params = positional;
                    }
                    else if (name == "bipartite")
                    {
                        require_positional(2);
                        spec.family = Family::CompleteBipartite;
                        spec.params = positional;
                    }
                    else if (name == "family-g")
                    {
                        if (positional.empty() || n || p || seed || parsed.count)
                            fail("family-g takes leaf counts and an optional supports= layout");
                        spec.family = Family::FamilyG;
                        spec.params = positional;
                        spec.supports = layout.value_or(SupportLayout::Path);
                    }
                    else if (name == "gnp" || name == "tree")
                    {
                        bool gnp = name == "gnp";
                        if (!positional.empty() || layout || !n || (gnp && !p) || (!gnp && p))
                            fail(gnp ? "gnp needs n= and p=" : "tree needs n=");
                        spec.family = gnp ? Family::RandomGnp : Family::RandomTree;
                        spec.params = {*n};
                        spec.probability = p.value_or(0.0);
                        spec.seed = seed.value_or(0);
                    }
                    else
                        fail("unknown family '" + std::string(name) + "'");
                }
        };

        auto format_probability(double p) -> std::string
        {
            char buffer[64];
            auto [ptr, ec] = std::to_chars(buffer, buffer + sizeof(buffer), p);
            return std::string(buffer, ptr);
        }

        auto parse_range(std::string_view text) -> std::pair<std::size_t, std::size_t>
        {
            auto dash = text.find('-');
            if (dash == std::string_view::npos)
            {
                auto n = parse_unsigned(text, "n");
                return {n, n};
            }
            auto lo = parse_unsigned(text.substr(0, dash), "n");
            auto hi = parse_unsigned(text.substr(dash + 1), "n");
            if (lo > hi)
                throw InvalidSpec("empty order range '" + std::string(text) + "'");
            return {lo, hi};
        }

        auto trim(std::string_view s) -> std::string_view
        {
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
                s.remove_prefix(1);
            while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
                s.remove_suffix(1);
            return s;
        }

        void expand_catalog(std::string_view body, bool trees, std::vector<SourcedGraph> & out)
        {
            std::optional<std::pair<std::size_t, std::size_t>> range;
            bool connected = false;
            while (!body.empty())
            {
                auto comma = body.find(',');
                auto item = body.substr(0, comma);
                body = comma == std::string_view::npos ? std::string_view {} : body.substr(comma + 1);
                if (item.substr(0, 2) == "n=")
                    range = parse_range(item.substr(2));
                else if (!trees && item == "connected")
                    connected = true;
                else
                    throw InvalidSpec("unknown catalog parameter '" + std::string(item) + "'");
            }
            if (!range)
                throw InvalidSpec("catalog needs n=");
            for (auto n = range->first; n <= range->second; ++n)
            {
                std::string prefix = (trees ? "trees:n=" : connected ? "graphs:connected,n=" : "graphs:n=") + std::to_string(n) + "#";
                std::size_t index = 0;
                if (trees)
                {
                    TreeStream stream(n);
                    while (auto t = stream.next())
                        out.push_back({prefix + std::to_string(index++), std::move(*t), std::nullopt});
                }
                else
                {
                    for (auto & g : enumerate_graphs(n, connected))
                        out.push_back({prefix + std::to_string(index++), std::move(g), std::nullopt});
                }
            }
        }
    }

    auto parse_family_spec(std::string_view text) -> FamilySpec
    {
        auto parsed = SpecParser(trim(text)).parse_all();
        if (parsed.count)
            throw InvalidSpec("count= describes a stream, not a single graph");
        return parsed.spec;
    }

    auto to_string(const FamilySpec & spec) -> std::string
    {
        auto one = [&](const char * name) { return std::string(name) + ":" + std::to_string(spec.params.at(0)); };
        switch (spec.family)
        {
            case Family::Path: return one("path");
            case Family::Cycle: return one("cycle");
            case Family::Star: return one("star");
            case Family::Complete: return one("complete");
            case Family::Empty: return one("empty");
            case Family::SubdividedStar: return one("substar");
            case Family::CompleteBipartite:
                return "bipartite:" + std::to_string(spec.params.at(0)) + "," + std::to_string(spec.params.at(1));
            case Family::Corona:
                return "corona(" + to_string(spec.operands.at(0)) + "," + to_string(spec.operands.at(1)) + ")";
            case Family::Union:
                return "union(" + to_string(spec.operands.at(0)) + "," + to_string(spec.operands.at(1)) + ")";
            case Family::FamilyG:
            {
                std::string text = "family-g:";
                for (std::size_t i = 0; i < spec.params.size(); ++i)
                    text += (i ? "," : "") + std::to_string(spec.params[i]);
                if (spec.supports == SupportLayout::None)
                    text += ",supports=none";
                else if (spec.supports == SupportLayout::Complete)
                    text += ",supports=complete";
                return text;
            }
            case Family::FigureA: return "figure-a";
            case Family::FigureB: return "figure-b";
            case Family::RandomGnp:
                return "gnp:n=" + std::to_string(spec.params.at(0)) + ",p=" + format_probability(spec.probability) +
                       ",seed=" + std::to_string(spec.seed);
            case Family::RandomTree:
                return "tree:n=" + std::to_string(spec.params.at(0)) + ",seed=" + std::to_string(spec.seed);
        }
        throw InvalidSpec("unknown family");
    }

    auto generate(const FamilySpec & spec) -> Graph
    {
        auto param = [&](std::size_t i) {
            if (spec.params.size() <= i)
                throw InvalidSpec("missing family parameter");
            return spec.params[i];
        };
        switch (spec.family)
        {
            case Family::Path: return path_graph(param(0));
            case Family::Cycle: return cycle_graph(param(0));
            case Family::Star: return star_graph(param(0));
            case Family::Complete: return complete_graph(param(0));
            case Family::Empty:
                if (param(0) == 0)
                    throw InvalidSpec("empty: order must be positive");
                return Graph(param(0), {});
            case Family::CompleteBipartite: return complete_bipartite_graph(param(0), param(1));
            case Family::SubdividedStar: return subdivided_star(param(0));
            case Family::Corona:
            case Family::Union:
            {
                if (spec.operands.size() != 2)
                    throw InvalidSpec("compound family needs two operands");
                auto a = generate(spec.operands[0]);
                auto b = generate(spec.operands[1]);
                return spec.family == Family::Corona ? corona(a, b) : disjoint_union(a, b);
            }
            case Family::FamilyG: return family_g_member(spec.params, spec.supports);
            case Family::FigureA: return figure_a();
            case Family::FigureB: return figure_b();
            case Family::RandomGnp: return random_gnp(param(0), spec.probability, spec.seed);
            case Family::RandomTree: return random_tree(param(0), spec.seed);
        }
        throw InvalidSpec("unknown family");
    }

    auto expand_stream(std::string_view text, std::optional<std::size_t> count_override,
            std::optional<std::uint64_t> seed_override) -> std::vector<SourcedGraph>
    {
        std::vector<SourcedGraph> out;
        while (true)
        {
            auto semi = text.find(';');
            auto part = trim(text.substr(0, semi));
            if (part.empty())
                throw InvalidSpec("empty graph description");
            if (part.substr(0, 6) == "trees:")
                expand_catalog(part.substr(6), true, out);
            else if (part.substr(0, 7) == "graphs:")
                expand_catalog(part.substr(7), false, out);
            else if (part == "corpus:mixed")
            {
                auto corpus = mixed_corpus(seed_override.value_or(1));
                std::move(corpus.begin(), corpus.end(), std::back_inserter(out));
            }
            else
            {
                auto parsed = SpecParser(part).parse_all();
                auto spec = parsed.spec;
                bool random = spec.family == Family::RandomGnp || spec.family == Family::RandomTree;
                if (!random && parsed.count)
                    throw InvalidSpec("count= only applies to random families");
                auto count = random ? count_override.value_or(parsed.count.value_or(1)) : 1;
                auto base = random && seed_override ? *seed_override : spec.seed;
                for (std::size_t i = 0; i < count; ++i)
                {
                    spec.seed = base + i;
                    out.push_back({to_string(spec), generate(spec), spec});
                }
            }
            if (semi == std::string_view::npos)
                break;
            text = text.substr(semi + 1);
        }
        return out;
    }
}

#include <strongdiff/error.hpp>
#include <strongdiff/io.hpp>

#include <charconv>
#include <set>

namespace strongdiff
{
    namespace
    {
        auto fields(std::string_view line) -> std::vector<std::string_view>
        {
            std::vector<std::string_view> out;
            std::size_t pos = 0;
            while (true)
            {
                pos = line.find_first_not_of(" \t\r", pos);
                if (pos == std::string_view::npos)
                    return out;
                auto end = line.find_first_of(" \t\r", pos);
                out.push_back(line.substr(pos, end - pos));
                if (end == std::string_view::npos)
                    return out;
                pos = end;
            }
        }

        auto number(std::string_view s, std::size_t line) -> std::size_t
        {
            std::size_t value = 0;
            auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
            if (ec != std::errc {} || ptr != s.data() + s.size())
                throw ParseError("edge list: expected a vertex index, got '" + std::string(s) + "'", 0, line);
            return value;
        }
    }

    auto parse_edgelist(std::string_view text) -> Graph
    {
        std::optional<std::size_t> n;
        std::vector<Edge> edges;
        std::set<Edge> seen;
        std::size_t line_no = 0;
        while (!text.empty())
        {
            ++line_no;
            auto eol = text.find('\n');
            auto line = text.substr(0, eol);
            text = eol == std::string_view::npos ? std::string_view {} : text.substr(eol + 1);
            line = line.substr(0, line.find('#'));
            auto f = fields(line);
            if (f.empty())
                continue;
            if (!n)
            {
                if (f.size() != 2 || f[0] != "n")
                    throw ParseError("edge list: expected header 'n <count>'", 0, line_no);
                n = number(f[1], line_no);
                continue;
            }
            if (f.size() != 2)
                throw ParseError("edge list: expected 'u v'", 0, line_no);
            auto u = number(f[0], line_no);
            auto v = number(f[1], line_no);
            if (u >= *n || v >= *n)
                throw ParseError("edge list: vertex out of range", 0, line_no);
            if (u == v)
                throw ParseError("edge list: self-loop", 0, line_no);
            Edge e {std::min(u, v), std::max(u, v)};
            if (!seen.insert(e).second)
                throw ParseError("edge list: duplicate edge", 0, line_no);
            edges.push_back(e);
        }
        if (!n)
            throw ParseError("edge list: missing header 'n <count>'", 0, line_no == 0 ? 1 : line_no);
        return Graph(*n, edges);
    }

    auto write_edgelist(const Graph & g) -> std::string
    {
        std::string out = "n " + std::to_string(g.order()) + "\n";
        for (auto [u, v] : g.edges())
            out += std::to_string(u) + " " + std::to_string(v) + "\n";
        return out;
    }
}

#include <strongdiff/error.hpp>
#include <strongdiff/io.hpp>

namespace strongdiff
{
    namespace
    {
        constexpr std::string_view header = ">>graph6<<";
        constexpr std::uint64_t max_order = 1u << 16;

        struct Reader
        {
            std::string_view text;
            std::size_t pos;

            auto next(const char * what) -> std::uint64_t
            {
                if (pos >= text.size())
                    throw ParseError(std::string("graph6: truncated ") + what, pos, 1);
                auto c = static_cast<unsigned char>(text[pos]);
                if (c < 63 || c > 126)
                    throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", pos, 1);
                ++pos;
                return c - 63u;
            }
        };

        void append_order(std::string & out, std::uint64_t n)
        {
            auto put = [&](std::uint64_t value, int groups) {
                for (int g = groups - 1; g >= 0; --g)
                    out += static_cast<char>(63 + ((value >> (6 * g)) & 63));
            };
            if (n <= 62)
                put(n, 1);
            else if (n <= 258047)
            {
                out += '~';
                put(n, 3);
            }
            else
            {
                out += "~~";
                put(n, 6);
            }
        }
    }

    auto parse_graph6(std::string_view text) -> Graph
    {
        while (!text.empty() && (text.back() == '\n' || text.back() == '\r'))
            text.remove_suffix(1);
        std::size_t start = text.substr(0, header.size()) == header ? header.size() : 0;
        Reader r {text, start};
        std::uint64_t n = r.next("order");
        if (n == 63)
        {
            if (r.pos < text.size() && text[r.pos] == '~')
            {
                ++r.pos;
                n = 0;
                for (int i = 0; i < 6; ++i)
                    n = (n << 6) | r.next("order");
            }
            else
            {
                n = 0;
                for (int i = 0; i < 3; ++i)
                    n = (n << 6) | r.next("order");
            }
        }
        if (n > max_order)
            throw ParseError("graph6: order " + std::to_string(n) + " is too large", start, 1);
        auto pairs = n * (n > 0 ? n - 1 : 0) / 2;
        auto bytes = (pairs + 5) / 6;
        if (text.size() - r.pos < bytes)
            throw ParseError("graph6: truncated adjacency payload", text.size(), 1);
        if (text.size() - r.pos > bytes)
            throw ParseError("graph6: trailing data after adjacency payload", r.pos + bytes, 1);
        std::vector<Edge> edges;
        std::uint64_t k = 0;
        std::uint64_t chunk = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++k)
            {
                if (k % 6 == 0)
                    chunk = r.next("adjacency payload");
                if ((chunk >> (5 - k % 6)) & 1)
                    edges.emplace_back(i, j);
            }
        return Graph(static_cast<std::size_t>(n), edges);
    }

    auto write_graph6(const Graph & g) -> std::string
    {
        std::string out;
        auto n = g.order();
        append_order(out, n);
        unsigned chunk = 0;
        std::size_t k = 0;
        for (Vertex j = 1; j < n; ++j)
            for (Vertex i = 0; i < j; ++i, ++k)
            {
                chunk = (chunk << 1) | (g.adjacent(i, j) ? 1u : 0u);
                if (k % 6 == 5)
                {
                    out += static_cast<char>(63 + chunk);
                    chunk = 0;
                }
            }
        if (k % 6 != 0)
            out += static_cast<char>(63 + (chunk << (6 - k % 6)));
        return out;
    }

    auto parse_graph_format(std::string_view text) -> std::optional<GraphFormat>
    {
        if (text == "graph6")
            return GraphFormat::Graph6;
        if (text == "edgelist")
            return GraphFormat::EdgeList;
        return std::nullopt;
    }

    auto detect_format(std::string_view text) -> GraphFormat
    {
        auto pos = text.find_first_not_of(" \t\r\n");
        if (pos != std::string_view::npos && (text[pos] == 'n' || text[pos] == '#'))
            return GraphFormat::EdgeList;
        return GraphFormat::Graph6;
    }

    auto parse_graph(std::string_view text, GraphFormat format) -> Graph
    {
        return format == GraphFormat::Graph6 ? parse_graph6(text) : parse_edgelist(text);
    }

    auto write_graph(const Graph & g, GraphFormat format) -> std::string
    {
        return format == GraphFormat::Graph6 ? write_graph6(g) + "\n" : write_edgelist(g);
    }
}

#include <gallai/coloring.hh>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <istream>
#include <numeric>
#include <random>
#include <sstream>

using std::size_t;
using std::string;
using std::to_string;
using std::uint8_t;
using std::vector;

namespace gallai
{
    ParseError::ParseError(int line, int column, const string & what) :
        std::runtime_error("line " + to_string(line) + ", column " + to_string(column) + ": " + what),
        _line(line),
        _column(column)
    {
    }

    EdgeColoring::EdgeColoring(int n, int k, vector<uint8_t> colors) :
        _n(n),
        _k(k),
        _colors(std::move(colors))
    {
        if (n < 2)
            throw std::invalid_argument("coloring needs at least 2 vertices, got " + to_string(n));
        if (k < 1 || k > max_palette)
            throw ColorOutOfRange("palette size " + to_string(k) + " outside [1, " + to_string(max_palette) + "]");
        if (_colors.size() != pair_count(n))
            throw MissingEdge("expected " + to_string(pair_count(n)) + " edge colors, got " + to_string(_colors.size()));
        for (auto c : _colors)
            if (c < 1 || c > k)
                throw ColorOutOfRange("color " + to_string(c) + " outside [1, " + to_string(k) + "]");
    }

    auto EdgeColoring::used_colors() const -> vector<Color>
    {
        vector<bool> seen(_k + 1, false);
        for (auto c : _colors)
            seen[c] = true;
        vector<Color> result;
        for (Color c = 1; c <= _k; ++c)
            if (seen[c])
                result.push_back(c);
        return result;
    }

    auto make_coloring(int n, int k, const std::map<std::pair<Vertex, Vertex>, Color> & assignment) -> EdgeColoring
    {
        if (n < 2)
            throw std::invalid_argument("coloring needs at least 2 vertices");
        vector<uint8_t> colors(pair_count(n), 0);
        vector<bool> assigned(pair_count(n), false);
        for (auto & [edge, color] : assignment) {
            auto [u, v] = edge;
            if (u == v || u < 0 || v < 0 || u >= n || v >= n)
                throw std::invalid_argument("bad pair (" + to_string(u) + ", " + to_string(v) + ")");
            if (color < 1 || color > k)
                throw ColorOutOfRange("pair (" + to_string(u) + ", " + to_string(v) + ") has color " + to_string(color));
            auto i = pair_index(n, u, v);
            colors[i] = static_cast<uint8_t>(color);
            assigned[i] = true;
        }
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (! assigned[pair_index(n, u, v)])
                    throw MissingEdge("pair (" + to_string(u) + ", " + to_string(v) + ") has no color");
        return EdgeColoring{n, k, std::move(colors)};
    }

    auto tabulate_coloring(int n, int k, const std::function<Color(Vertex, Vertex)> & color_of) -> EdgeColoring
    {
        if (n < 2)
            throw std::invalid_argument("coloring needs at least 2 vertices");
        vector<uint8_t> colors;
        colors.reserve(pair_count(n));
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) {
                auto c = color_of(u, v);
                if (c < 1 || c > k)
                    throw ColorOutOfRange("pair (" + to_string(u) + ", " + to_string(v) + ") has color " + to_string(c));
                colors.push_back(static_cast<uint8_t>(c));
            }
        return EdgeColoring{n, k, std::move(colors)};
    }

    auto find_rainbow_triangle(const EdgeColoring & c) -> std::optional<RainbowTriangle>
    {
        int n = c.order();
        for (Vertex a = 0; a < n; ++a)
            for (Vertex b = a + 1; b < n; ++b) {
                auto ab = c.color(a, b);
                for (Vertex x = b + 1; x < n; ++x) {
                    auto ax = c.color(a, x), bx = c.color(b, x);
                    if (ab != ax && ab != bx && ax != bx)
                        return RainbowTriangle{a, b, x};
                }
            }
        return std::nullopt;
    }

    namespace
    {
        struct GallaiGenerator
        {
            int k;
            std::mt19937_64 rng;
            vector<uint8_t> & colors;
            int n;

            auto uniform(int lo, int hi) -> int
            {
                return std::uniform_int_distribution<int>{lo, hi}(rng);
            }

            auto fill(std::span<const Vertex> block) -> void
            {
                int size = static_cast<int>(block.size());
                if (size < 2)
                    return;

                int parts = uniform(2, std::min(size, 6));

                // uniform composition of size into `parts` positive summands
                vector<int> cuts(size - 1);
                std::iota(cuts.begin(), cuts.end(), 1);
                std::shuffle(cuts.begin(), cuts.end(), rng);
                cuts.resize(parts - 1);
                std::sort(cuts.begin(), cuts.end());
                cuts.insert(cuts.begin(), 0);
                cuts.push_back(size);

                Color first = uniform(1, k), second = first;
                if (k >= 2)
                    while (second == first)
                        second = uniform(1, k);

                vector<Color> reduced(pair_count(parts));
                for (auto & r : reduced)
                    r = uniform(0, 1) ? second : first;

                for (int i = 0; i < parts; ++i)
                    for (int j = i + 1; j < parts; ++j) {
                        auto colour = reduced[pair_index(parts, i, j)];
                        for (int x = cuts[i]; x < cuts[i + 1]; ++x)
                            for (int y = cuts[j]; y < cuts[j + 1]; ++y)
                                colors[pair_index(n, block[x], block[y])] = static_cast<uint8_t>(colour);
                    }

                for (int i = 0; i < parts; ++i)
                    fill(block.subspan(cuts[i], cuts[i + 1] - cuts[i]));
            }
        };
    }

    auto random_gallai(int n, int k, std::uint64_t seed) -> EdgeColoring
    {
        if (n < 2)
            throw std::invalid_argument("coloring needs at least 2 vertices");
        if (k < 1 || k > max_palette)
            throw ColorOutOfRange("palette size " + to_string(k));

        vector<uint8_t> colors(pair_count(n), 0);
        GallaiGenerator gen{k, std::mt19937_64{seed}, colors, n};

        vector<Vertex> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), gen.rng);
        gen.fill(order);

        return EdgeColoring{n, k, std::move(colors)};
    }

    auto induced(const EdgeColoring & c, std::span<const Vertex> vertices) -> EdgeColoring
    {
        int m = static_cast<int>(vertices.size());
        return tabulate_coloring(m, c.palette(), [&](Vertex u, Vertex v) { return c.color(vertices[u], vertices[v]); });
    }

    auto permute_vertices(const EdgeColoring & c, std::span<const Vertex> perm) -> EdgeColoring
    {
        int n = c.order();
        if (static_cast<int>(perm.size()) != n)
            throw std::invalid_argument("permutation size mismatch");
        vector<Vertex> inverse(n, -1);
        for (Vertex v = 0; v < n; ++v) {
            if (perm[v] < 0 || perm[v] >= n || inverse[perm[v]] != -1)
                throw std::invalid_argument("not a permutation");
            inverse[perm[v]] = v;
        }
        return tabulate_coloring(n, c.palette(), [&](Vertex u, Vertex v) { return c.color(inverse[u], inverse[v]); });
    }

    auto permute_colors(const EdgeColoring & c, std::span<const Color> color_map) -> EdgeColoring
    {
        if (static_cast<int>(color_map.size()) != c.palette())
            throw std::invalid_argument("color map size mismatch");
        vector<uint8_t> colors(c.colors().begin(), c.colors().end());
        for (auto & x : colors)
            x = static_cast<uint8_t>(color_map[x - 1]);
        return EdgeColoring{c.order(), c.palette(), std::move(colors)};
    }

    namespace
    {
        struct Token
        {
            string text;
            int line;
            int column;
        };

        auto parse_int(const Token & t) -> long long
        {
            long long value = 0;
            size_t used = 0;
            try {
                value = std::stoll(t.text, &used);
            }
            catch (const std::exception &) {
                used = 0;
            }
            if (used != t.text.size() || used == 0)
                throw ParseError(t.line, t.column, "expected an integer, found '" + t.text + "'");
            return value;
        }
    }

    auto read_coloring(std::istream & in) -> EdgeColoring
    {
        vector<Token> tokens;
        string line;
        int line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            auto first = line.find_first_not_of(" \t\r");
            if (first != string::npos && line[first] == '#')
                continue;
            size_t pos = 0;
            while (pos < line.size()) {
                while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos])))
                    ++pos;
                if (pos == line.size())
                    break;
                auto start = pos;
                while (pos < line.size() && ! std::isspace(static_cast<unsigned char>(line[pos])))
                    ++pos;
                tokens.push_back(Token{line.substr(start, pos - start), line_no, static_cast<int>(start) + 1});
            }
        }
        int end_line = std::max(line_no, 1), end_column = static_cast<int>(line.size()) + 1;

        if (tokens.size() < 2)
            throw ParseError(end_line, end_column, "missing header 'n k'");

        auto n = parse_int(tokens[0]);
        if (n < 2 || n > 100000)
            throw ParseError(tokens[0].line, tokens[0].column, "vertex count must be at least 2");
        auto k = parse_int(tokens[1]);
        if (k < 1 || k > max_palette)
            throw ParseError(tokens[1].line, tokens[1].column, "palette size must be in [1, " + to_string(max_palette) + "]");

        auto expected = pair_count(static_cast<int>(n));
        vector<uint8_t> colors;
        colors.reserve(expected);
        for (size_t i = 2; i < tokens.size(); ++i) {
            if (colors.size() == expected)
                throw ParseError(tokens[i].line, tokens[i].column, "unexpected extra token '" + tokens[i].text + "'");
            auto c = parse_int(tokens[i]);
            if (c < 1 || c > k)
                throw ParseError(tokens[i].line, tokens[i].column, "color " + tokens[i].text + " outside [1, " + to_string(k) + "]");
            colors.push_back(static_cast<uint8_t>(c));
        }
        if (colors.size() != expected)
            throw ParseError(end_line, end_column,
                "missing edge colors: expected " + to_string(expected) + ", found " + to_string(colors.size()));

        return EdgeColoring{static_cast<int>(n), static_cast<int>(k), std::move(colors)};
    }

    auto read_coloring(std::string_view text) -> EdgeColoring
    {
        std::istringstream in{string{text}};
        return read_coloring(in);
    }

    auto write_coloring(const EdgeColoring & c) -> string
    {
        string out = to_string(c.order()) + " " + to_string(c.palette()) + "\n";
        bool first = true;
        for (auto x : c.colors()) {
            if (! first)
                out += ' ';
            out += to_string(x);
            first = false;
        }
        out += '\n';
        return out;
    }

    auto load_coloring(const string & path) -> EdgeColoring
    {
        std::ifstream in{path};
        if (! in)
            throw std::runtime_error("cannot open '" + path + "'");
        return read_coloring(in);
    }

    auto save_coloring(const string & path, const EdgeColoring & c) -> void
    {
        std::ofstream out{path};
        if (! out)
            throw std::runtime_error("cannot write '" + path + "'");
        out << write_coloring(c);
    }
}

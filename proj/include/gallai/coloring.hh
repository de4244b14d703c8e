#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gallai
{
    using Vertex = int;

    // Colors are 1-based: a k-coloring uses colors 1..k.
    using Color = int;

    inline constexpr int max_palette = 255;

    class MissingEdge : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ColorOutOfRange : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class ParseError : public std::runtime_error
    {
    public:
        ParseError(int line, int column, const std::string & what);

        auto line() const -> int { return _line; }
        auto column() const -> int { return _column; }

    private:
        int _line;
        int _column;
    };

    // Rank of the pair {u, v} in lexicographic order (0,1),(0,2),...,(n-2,n-1).
    inline auto pair_index(int n, Vertex u, Vertex v) -> std::size_t
    {
        if (u > v)
            std::swap(u, v);
        return static_cast<std::size_t>(u) * (2 * n - u - 1) / 2 + (v - u - 1);
    }

    inline auto pair_count(int n) -> std::size_t
    {
        return static_cast<std::size_t>(n) * (n - 1) / 2;
    }

    /// An edge coloring of K_n with palette [1, k]. Immutable once built; the
    /// colors live in a flat triangular array indexed by pair_index().
    class EdgeColoring
    {
    public:
        EdgeColoring(int n, int k, std::vector<std::uint8_t> colors);

        auto order() const -> int { return _n; }
        auto palette() const -> int { return _k; }

        auto color(Vertex u, Vertex v) const -> Color
        {
            return _colors[pair_index(_n, u, v)];
        }

        auto colors() const -> std::span<const std::uint8_t> { return _colors; }

        // Distinct colors that actually occur, ascending.
        auto used_colors() const -> std::vector<Color>;

        friend auto operator==(const EdgeColoring &, const EdgeColoring &) -> bool = default;

    private:
        int _n;
        int _k;
        std::vector<std::uint8_t> _colors;
    };

    auto make_coloring(int n, int k, const std::map<std::pair<Vertex, Vertex>, Color> & assignment) -> EdgeColoring;

    auto tabulate_coloring(int n, int k, const std::function<Color(Vertex, Vertex)> & color_of) -> EdgeColoring;

    struct RainbowTriangle
    {
        Vertex a, b, c;

        friend auto operator==(const RainbowTriangle &, const RainbowTriangle &) -> bool = default;
    };

    // Lexicographically least triple a < b < c spanning three distinct colors.
    auto find_rainbow_triangle(const EdgeColoring &) -> std::optional<RainbowTriangle>;

    inline auto is_gallai(const EdgeColoring & c) -> bool
    {
        return ! find_rainbow_triangle(c).has_value();
    }

    /// Random Gallai coloring built by recursive substitution: split the
    /// vertices into 2..min(n,6) parts, 2-color the reduced complete graph
    /// with two palette colors, and recurse inside each part with the full
    /// palette. Deterministic for a given seed.
    auto random_gallai(int n, int k, std::uint64_t seed) -> EdgeColoring;

    // Coloring induced on the listed vertices, relabelled 0..size-1 in list order.
    auto induced(const EdgeColoring &, std::span<const Vertex> vertices) -> EdgeColoring;

    // New coloring in which vertex v takes the role of vertex perm[v].
    auto permute_vertices(const EdgeColoring &, std::span<const Vertex> perm) -> EdgeColoring;

    // Recolors every edge of color j with color_map[j - 1].
    auto permute_colors(const EdgeColoring &, std::span<const Color> color_map) -> EdgeColoring;

    auto read_coloring(std::istream &) -> EdgeColoring;
    auto read_coloring(std::string_view text) -> EdgeColoring;
    auto write_coloring(const EdgeColoring &) -> std::string;

    auto load_coloring(const std::string & path) -> EdgeColoring;
    auto save_coloring(const std::string & path, const EdgeColoring &) -> void;
}

#pragma once

#include <gallai/coloring.hh>

#include <optional>
#include <span>
#include <stdexcept>
#include <variant>
#include <vector>

namespace gallai
{
    class NotAPartition : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Partition of V(K_n) into p >= 2 parts such that every pair of parts is
    /// joined by edges of a single color, and at most two colors occur between
    /// parts. Parts are sorted by their least vertex; each part is sorted.
    struct GallaiPartition
    {
        std::vector<std::vector<Vertex>> parts;
        std::vector<Color> between_colors;
        // Indexed by pair_index(parts.size(), i, j).
        std::vector<Color> pair_colors;

        auto part_count() const -> int { return static_cast<int>(parts.size()); }

        auto pair_color(int i, int j) const -> Color
        {
            return pair_colors[pair_index(part_count(), i, j)];
        }

        friend auto operator==(const GallaiPartition &, const GallaiPartition &) -> bool = default;
    };

    struct Edge
    {
        Vertex u, v;

        friend auto operator==(const Edge &, const Edge &) -> bool = default;
    };

    struct NonHomogeneousPair
    {
        int part_i, part_j;
        Edge first, second;
    };

    struct ExtraBetweenColor
    {
        std::vector<Color> colors;
        // One between-part edge per color in `colors`.
        std::vector<Edge> witnesses;
    };

    using ViolationReport = std::variant<NonHomogeneousPair, ExtraBetweenColor>;

    // Tries candidate between-color pairs S in ascending order: parts start as
    // the components of the edges colored outside S, and any two parts joined
    // by more than one color are merged until all part pairs are homogeneous.
    // The first S leaving at least two parts wins. Always succeeds on Gallai
    // colorings.
    auto gallai_partition(const EdgeColoring &) -> std::optional<GallaiPartition>;

    auto validate_partition(const EdgeColoring &, const std::vector<std::vector<Vertex>> & parts)
        -> std::variant<GallaiPartition, ViolationReport>;

    // The complete graph on the parts, colored by pair color. Keeps the source palette.
    auto reduced_graph(const GallaiPartition &, int palette) -> EdgeColoring;

    // Internal coloring of each part, or nothing for singleton parts.
    auto part_colorings(const EdgeColoring &, const GallaiPartition &) -> std::vector<std::optional<EdgeColoring>>;

    // Inverse of the quotient: rebuild the full coloring from the reduced
    // graph and the parts' internal colorings.
    auto substitute(const GallaiPartition &, const EdgeColoring & reduced,
        std::span<const std::optional<EdgeColoring>> blocks) -> EdgeColoring;
}

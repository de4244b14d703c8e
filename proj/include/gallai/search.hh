#pragma once

#include <gallai/coloring.hh>
#include <gallai/targets.hh>

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace gallai
{
    // Hosts for subgraph search are limited to one 64-bit adjacency word per vertex.
    inline constexpr int max_search_order = 64;

    using Bitset = std::uint64_t;

    class SpecLengthMismatch : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    /// Certificate for a monochromatic copy of a target. Paths list their
    /// vertices in order, cycles list them in cyclic order, and matchings list
    /// the matched pairs consecutively: (v1,v2),(v3,v4),...
    struct Embedding
    {
        TargetGraph target;
        Color color;
        std::vector<Vertex> vertices;

        friend auto operator==(const Embedding &, const Embedding &) -> bool = default;
    };

    // Adjacency rows of the subgraph formed by one color class.
    auto color_class(const EdgeColoring &, Color) -> std::vector<Bitset>;

    // Lexicographically least vertex sequence embedding `target` in the graph
    // given by `adj`, or nothing.
    auto find_in_graph(std::span<const Bitset> adj, TargetGraph target) -> std::optional<std::vector<Vertex>>;

    // Whether some copy of `target` uses the edge {u, v}, which must be present in `adj`.
    auto has_target_through_edge(std::span<const Bitset> adj, TargetGraph target, Vertex u, Vertex v) -> bool;

    auto find_mono(const EdgeColoring &, Color, TargetGraph) -> std::optional<Embedding>;

    // First color j (ascending) whose target targets[j - 1] appears in color j.
    auto contains_required(const EdgeColoring &, std::span<const TargetGraph> targets) -> std::optional<Embedding>;

    auto verify_embedding(const EdgeColoring &, const Embedding &) -> bool;
}

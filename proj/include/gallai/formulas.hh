#pragma once

#include <gallai/coloring.hh>
#include <gallai/targets.hh>

#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace gallai
{
    class InvalidSpec : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class IndexOutOfRange : public InvalidSpec
    {
    public:
        using InvalidSpec::InvalidSpec;
    };

    class Unsupported : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    class OutOfHypotheses : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    // How the top member G_{n-1} of the target family is read.
    enum class HeadKind
    {
        Cycle,   // C_{2n}
        LongPath // P_{2n+1}
    };

    /// The family G_0, ..., G_{n-1}: G_i = P_{2i+3} for i <= n-2, and
    /// G_{n-1} = C_{2n} or P_{2n+1} depending on the head kind.
    auto family_member(int n, HeadKind head, int index) -> TargetGraph;

    /// A choice of one family member per color, i_1 >= i_2 >= ... >= i_k.
    class TargetSpec
    {
    public:
        TargetSpec(int n, HeadKind head, std::vector<int> indices);

        auto n() const -> int { return _n; }
        auto k() const -> int { return static_cast<int>(_indices.size()); }
        auto head() const -> HeadKind { return _head; }
        auto indices() const -> const std::vector<int> & { return _indices; }

        // Target for color j in [1, k].
        auto target(Color j) const -> TargetGraph;
        auto targets() const -> std::vector<TargetGraph>;

        auto to_string() const -> std::string;

        friend auto operator==(const TargetSpec &, const TargetSpec &) -> bool = default;

    private:
        int _n;
        HeadKind _head;
        std::vector<int> _indices;
    };

    /// A spec sorted into non-increasing order, remembering which caller color
    /// each sorted color came from: caller_color[j - 1] is the caller's color
    /// for sorted color j.
    struct SortedSpec
    {
        TargetSpec spec;
        std::vector<Color> caller_color;

        auto is_identity() const -> bool;
    };

    auto sorted_spec(std::span<const int> raw_indices, int n, int k, HeadKind head) -> SortedSpec;

    // "n=3 k=3 head=cycle i=2,2,2"; k and head are optional.
    auto parse_spec(std::string_view) -> SortedSpec;

    // Recognises a target list such as "P5,P5,P3" or "C6,P3" as a family spec.
    auto spec_from_targets(std::span<const TargetGraph>) -> SortedSpec;

    // Maps a coloring in sorted color order back to the caller's colors.
    auto to_caller_colors(const EdgeColoring &, const SortedSpec &) -> EdgeColoring;

    // |G_{i_1}| + i_2 + ... + i_k.
    auto predicted_gr(const TargetSpec &) -> long long;

    // Two-color Ramsey numbers of even cycles and paths:
    // R(C_2n, C_2n) = 3n - 1 (n >= 3), R(P_m, C_2n) = 2n + floor(m/2) - 1
    // (2n >= m >= 3), R(P_m, P_n) = n + floor(m/2) - 1 (n >= m >= 2).
    // Arguments may come in either order.
    auto classical_ramsey(TargetGraph, TargetGraph) -> long long;

    enum class Family
    {
        Triangle, // K_3; parameter ignored
        Path,     // P_m
        Cycle,    // C_L, odd or even
        Matching  // M_s
    };

    struct GrBounds
    {
        long long lower;
        long long upper;

        auto exact() const -> bool { return lower == upper; }

        friend auto operator==(const GrBounds &, const GrBounds &) -> bool = default;
    };

    // GR_k(H) for the families with known closed forms, or a (lower, upper)
    // pair where only bounds are known.
    auto known_gr(Family, int parameter, int k) -> GrBounds;

    // Parses "K3", "P5", "C8", "M3" into (family, parameter).
    auto parse_family(std::string_view) -> std::pair<Family, int>;

    /// Layered lower-bound coloring: blocks V_1, ..., V_k with |V_1| =
    /// |G_{i_1}| - 1 and |V_j| = i_j, laid out consecutively. Edges inside V_j
    /// and edges from V_j to earlier blocks get color j.
    auto build_lower_bound_coloring(const TargetSpec &) -> EdgeColoring;

    // Block boundaries of build_lower_bound_coloring: block j is [offsets[j-1], offsets[j]).
    auto lower_bound_layers(const TargetSpec &) -> std::vector<int>;
}

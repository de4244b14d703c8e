#pragma once

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gallai
{
    class InvalidTarget : public std::invalid_argument
    {
    public:
        using std::invalid_argument::invalid_argument;
    };

    enum class TargetKind
    {
        Path,
        EvenCycle,
        Matching
    };

    // Path(m) on m >= 2 vertices, EvenCycle(L) with even L >= 4, Matching(s)
    // with s >= 1 edges.
    struct TargetGraph
    {
        TargetKind kind;
        int size;

        static auto path(int vertices) -> TargetGraph;
        static auto even_cycle(int length) -> TargetGraph;
        static auto matching(int edges) -> TargetGraph;

        // Number of vertices an embedding uses.
        auto order() const -> int { return kind == TargetKind::Matching ? 2 * size : size; }

        // "P5", "C8", "M3".
        auto name() const -> std::string;

        friend auto operator<=>(const TargetGraph &, const TargetGraph &) = default;
    };

    auto parse_target(std::string_view) -> TargetGraph;

    // Comma-separated list of P<m>|C<L>|M<s>.
    auto parse_target_list(std::string_view) -> std::vector<TargetGraph>;

    auto format_target_list(const std::vector<TargetGraph> &) -> std::string;
}

#pragma once

#include <gallai/coloring.hh>
#include <gallai/formulas.hh>
#include <gallai/targets.hh>

#include <chrono>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace gallai
{
    enum class VerdictKind
    {
        AllForced,
        BadColoring,
        BudgetExceeded
    };

    auto verdict_name(VerdictKind) -> const char *;

    struct Verdict
    {
        VerdictKind kind;
        // Present for BadColoring: a Gallai coloring avoiding every target.
        std::optional<EdgeColoring> witness;
        // Nodes explored when the budget ran out.
        std::uint64_t nodes = 0;
    };

    struct SearchStats
    {
        std::uint64_t nodes = 0;
        std::uint64_t prunes_rainbow = 0;
        std::uint64_t prunes_mono = 0;
        std::uint64_t prunes_symmetry = 0;
        std::chrono::duration<double> elapsed{0};

        auto operator+=(const SearchStats &) -> SearchStats &;
    };

    struct SearchOptions
    {
        std::uint64_t budget = 1'000'000'000;
        bool symmetry = true;
        unsigned threads = 1;
        // Number of leading edges fixed per parallel subtask.
        int split_depth = 6;
        // 0 assigns edges in lexicographic pair order; any other value shuffles
        // the edge order with this seed (the vertex-0 row rule is then skipped).
        std::uint64_t edge_order_seed = 0;
    };

    struct UpperResult
    {
        Verdict verdict;
        SearchStats stats;
    };

    /// Exhaustive search over Gallai colorings of K_N with colors 1..k,
    /// k = targets.size(), for one avoiding targets[j - 1] in every color j.
    /// Edges are assigned in lexicographic pair order, colors ascending; a
    /// branch is cut as soon as it closes a rainbow triangle or completes a
    /// monochromatic target. With symmetry enabled, colors with equal targets
    /// must first appear in increasing order and the colors on edges at vertex
    /// 0 must be non-decreasing.
    auto decide_upper(int vertices, std::span<const TargetGraph> targets, const SearchOptions & = {}) -> UpperResult;

    auto decide_upper(int vertices, const TargetSpec & spec, const SearchOptions & = {}) -> UpperResult;

    struct LowerCertificate
    {
        bool holds;
        EdgeColoring witness;
    };

    // Builds the layered coloring on predicted_gr - 1 vertices and checks it
    // is Gallai and avoids every target.
    auto verify_lower(const TargetSpec &) -> LowerCertificate;

    enum class GrStatus
    {
        Confirmed,
        Discrepancy,
        Inconclusive
    };

    auto status_name(GrStatus) -> const char *;

    struct GrReport
    {
        long long predicted;
        LowerCertificate lower;
        UpperResult upper;
        GrStatus status;
    };

    // predicted_gr(spec), certified below by verify_lower and above by decide_upper.
    auto compute_gr(const TargetSpec &, const SearchOptions & = {}) -> GrReport;
}

#pragma once

#include <gallai/formulas.hh>
#include <gallai/partition.hh>
#include <gallai/search.hh>
#include <gallai/verifier.hh>

#include <json.hpp>

#include <optional>
#include <string>

namespace gallai
{
    // {"target": "P5", "color": j, "vertices": [...]}
    auto to_json(nlohmann::json &, const Embedding &) -> void;

    // {"parts": [[...]], "between_colors": [...], "pair_colors": [{"i":0,"j":1,"color":2}, ...]}
    auto to_json(nlohmann::json &, const GallaiPartition &) -> void;

    auto to_json(nlohmann::json &, const ViolationReport &) -> void;
    auto to_json(nlohmann::json &, const RainbowTriangle &) -> void;
    auto to_json(nlohmann::json &, const SearchStats &) -> void;
    auto to_json(nlohmann::json &, const GrBounds &) -> void;

    // {"N": ..., "targets": [...], "verdict": "all_forced"|"bad_coloring"|"budget", "witness_file": ..., "stats": {...}}
    auto upper_report(int vertices, const std::vector<TargetGraph> & targets, const UpperResult &,
        const std::optional<std::string> & witness_file) -> nlohmann::json;
}

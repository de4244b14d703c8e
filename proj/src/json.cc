#include <gallai/json.hh>

using nlohmann::json;

namespace gallai
{
    namespace
    {
        auto edge_json(const Edge & e) -> json { return json::array({e.u, e.v}); }

        auto target_names(const std::vector<TargetGraph> & targets) -> json
        {
            auto names = json::array();
            for (auto & t : targets)
                names.push_back(t.name());
            return names;
        }
    }

    auto to_json(json & j, const Embedding & e) -> void
    {
        j = json{{"target", e.target.name()}, {"color", e.color}, {"vertices", e.vertices}};
    }

    auto to_json(json & j, const GallaiPartition & p) -> void
    {
        auto pairs = json::array();
        for (int a = 0; a < p.part_count(); ++a)
            for (int b = a + 1; b < p.part_count(); ++b)
                pairs.push_back(json{{"i", a}, {"j", b}, {"color", p.pair_color(a, b)}});
        j = json{{"parts", p.parts}, {"between_colors", p.between_colors}, {"pair_colors", pairs}};
    }

    auto to_json(json & j, const ViolationReport & report) -> void
    {
        if (auto * pair = std::get_if<NonHomogeneousPair>(&report))
            j = json{{"violation", "non_homogeneous_pair"}, {"i", pair->part_i}, {"j", pair->part_j},
                {"witnesses", json::array({edge_json(pair->first), edge_json(pair->second)})}};
        else {
            auto & extra = std::get<ExtraBetweenColor>(report);
            auto witnesses = json::array();
            for (auto & e : extra.witnesses)
                witnesses.push_back(edge_json(e));
            j = json{{"violation", "too_many_between_colors"}, {"colors", extra.colors}, {"witnesses", witnesses}};
        }
    }

    auto to_json(json & j, const RainbowTriangle & t) -> void
    {
        j = json::array({t.a, t.b, t.c});
    }

    auto to_json(json & j, const SearchStats & s) -> void
    {
        j = json{{"nodes", s.nodes}, {"prunes_rainbow", s.prunes_rainbow}, {"prunes_mono", s.prunes_mono},
            {"prunes_symmetry", s.prunes_symmetry}, {"elapsed_seconds", s.elapsed.count()}};
    }

    auto to_json(json & j, const GrBounds & b) -> void
    {
        if (b.exact())
            j = b.lower;
        else
            j = json{{"lower", b.lower}, {"upper", b.upper}};
    }

    auto upper_report(int vertices, const std::vector<TargetGraph> & targets, const UpperResult & result,
        const std::optional<std::string> & witness_file) -> json
    {
        json report{{"N", vertices}, {"targets", target_names(targets)},
            {"verdict", verdict_name(result.verdict.kind)}, {"stats", result.stats}};
        report["witness_file"] = witness_file ? json(*witness_file) : json(nullptr);
        return report;
    }
}

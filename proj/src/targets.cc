#include <gallai/targets.hh>

#include <charconv>

using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace gallai
{
    auto TargetGraph::path(int vertices) -> TargetGraph
    {
        if (vertices < 2)
            throw InvalidTarget("a path needs at least 2 vertices, got " + to_string(vertices));
        return {TargetKind::Path, vertices};
    }

    auto TargetGraph::even_cycle(int length) -> TargetGraph
    {
        if (length < 4 || length % 2 != 0)
            throw InvalidTarget("cycle length must be even and at least 4, got " + to_string(length));
        return {TargetKind::EvenCycle, length};
    }

    auto TargetGraph::matching(int edges) -> TargetGraph
    {
        if (edges < 1)
            throw InvalidTarget("a matching needs at least 1 edge, got " + to_string(edges));
        return {TargetKind::Matching, edges};
    }

    auto TargetGraph::name() const -> string
    {
        switch (kind) {
        case TargetKind::Path: return "P" + to_string(size);
        case TargetKind::EvenCycle: return "C" + to_string(size);
        case TargetKind::Matching: return "M" + to_string(size);
        }
        return "?";
    }

    auto parse_target(string_view text) -> TargetGraph
    {
        while (! text.empty() && text.front() == ' ')
            text.remove_prefix(1);
        while (! text.empty() && text.back() == ' ')
            text.remove_suffix(1);
        if (text.size() < 2)
            throw InvalidTarget("bad target '" + string{text} + "'");

        int value = 0;
        auto digits = text.substr(1);
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
        if (ec != std::errc{} || ptr != digits.data() + digits.size())
            throw InvalidTarget("bad target '" + string{text} + "'");

        switch (text.front()) {
        case 'P': return TargetGraph::path(value);
        case 'C': return TargetGraph::even_cycle(value);
        case 'M': return TargetGraph::matching(value);
        default: throw InvalidTarget("unknown target kind in '" + string{text} + "'");
        }
    }

    auto parse_target_list(string_view text) -> vector<TargetGraph>
    {
        vector<TargetGraph> result;
        while (true) {
            auto comma = text.find(',');
            result.push_back(parse_target(text.substr(0, comma)));
            if (comma == string_view::npos)
                break;
            text.remove_prefix(comma + 1);
        }
        return result;
    }

    auto format_target_list(const vector<TargetGraph> & targets) -> string
    {
        string out;
        for (auto & t : targets) {
            if (! out.empty())
                out += ',';
            out += t.name();
        }
        return out;
    }
}

#include <gallai/formulas.hh>

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

using std::span;
using std::string;
using std::string_view;
using std::to_string;
using std::vector;

namespace gallai
{
    namespace
    {
        auto checked_mul(long long a, long long b) -> long long
        {
            long long r;
            if (__builtin_mul_overflow(a, b, &r))
                throw OutOfHypotheses("value does not fit in 64 bits");
            return r;
        }

        auto checked_pow(long long base, int exp) -> long long
        {
            long long r = 1;
            for (int i = 0; i < exp; ++i)
                r = checked_mul(r, base);
            return r;
        }

        auto exact(long long v) -> GrBounds { return {v, v}; }

        auto parse_int(string_view text, const char * what) -> int
        {
            int value = 0;
            auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
            if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty())
                throw InvalidSpec(string{"bad "} + what + " '" + string{text} + "'");
            return value;
        }

        // Chung-Graham: largest order of a k-coloring where every triangle sees exactly two colors.
        auto two_colored_triangles_order(int k) -> long long
        {
            if (k % 2 == 0)
                return checked_pow(5, k / 2);
            return checked_mul(2, checked_pow(5, (k - 1) / 2));
        }
    }

    auto family_member(int n, HeadKind head, int index) -> TargetGraph
    {
        if (index < 0 || index > n - 1)
            throw IndexOutOfRange("index " + to_string(index) + " outside [0, " + to_string(n - 1) + "]");
        if (index <= n - 2)
            return TargetGraph::path(2 * index + 3);
        return head == HeadKind::Cycle ? TargetGraph::even_cycle(2 * n) : TargetGraph::path(2 * n + 1);
    }

    TargetSpec::TargetSpec(int n, HeadKind head, vector<int> indices) :
        _n(n),
        _head(head),
        _indices(std::move(indices))
    {
        if (n < 3)
            throw InvalidSpec("n must be at least 3, got " + std::to_string(n));
        if (_indices.size() < 2)
            throw InvalidSpec("need at least 2 colors, got " + std::to_string(_indices.size()));
        if (_indices.size() > static_cast<std::size_t>(max_palette))
            throw InvalidSpec("too many colors");
        for (auto i : _indices)
            if (i < 0 || i > n - 1)
                throw IndexOutOfRange("index " + std::to_string(i) + " outside [0, " + std::to_string(n - 1) + "]");
        if (! std::is_sorted(_indices.begin(), _indices.end(), std::greater<>{}))
            throw InvalidSpec("indices must be non-increasing");
    }

    auto TargetSpec::target(Color j) const -> TargetGraph
    {
        return family_member(_n, _head, _indices.at(j - 1));
    }

    auto TargetSpec::targets() const -> vector<TargetGraph>
    {
        vector<TargetGraph> result;
        for (Color j = 1; j <= k(); ++j)
            result.push_back(target(j));
        return result;
    }

    auto TargetSpec::to_string() const -> string
    {
        string out = "n=" + std::to_string(_n) + " k=" + std::to_string(k()) +
            " head=" + (_head == HeadKind::Cycle ? "cycle" : "longpath") + " i=";
        for (std::size_t j = 0; j < _indices.size(); ++j)
            out += (j ? "," : "") + std::to_string(_indices[j]);
        return out;
    }

    auto SortedSpec::is_identity() const -> bool
    {
        for (std::size_t j = 0; j < caller_color.size(); ++j)
            if (caller_color[j] != static_cast<Color>(j + 1))
                return false;
        return true;
    }

    auto sorted_spec(span<const int> raw_indices, int n, int k, HeadKind head) -> SortedSpec
    {
        if (static_cast<int>(raw_indices.size()) != k)
            throw InvalidSpec("expected " + to_string(k) + " indices, got " + to_string(raw_indices.size()));
        for (auto i : raw_indices)
            if (i < 0 || i > n - 1)
                throw IndexOutOfRange("index " + to_string(i) + " outside [0, " + to_string(n - 1) + "]");

        vector<int> order(raw_indices.size());
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return raw_indices[a] > raw_indices[b]; });

        vector<int> sorted;
        vector<Color> caller;
        for (auto pos : order) {
            sorted.push_back(raw_indices[pos]);
            caller.push_back(pos + 1);
        }
        return SortedSpec{TargetSpec{n, head, std::move(sorted)}, std::move(caller)};
    }

    auto parse_spec(string_view text) -> SortedSpec
    {
        int n = -1, k = -1;
        HeadKind head = HeadKind::Cycle;
        vector<int> indices;
        bool have_indices = false;

        std::istringstream in{string{text}};
        string field;
        while (in >> field) {
            auto eq = field.find('=');
            if (eq == string::npos)
                throw InvalidSpec("expected key=value, found '" + field + "'");
            auto key = string_view{field}.substr(0, eq), value = string_view{field}.substr(eq + 1);
            if (key == "n")
                n = parse_int(value, "n");
            else if (key == "k")
                k = parse_int(value, "k");
            else if (key == "head") {
                if (value == "cycle")
                    head = HeadKind::Cycle;
                else if (value == "longpath" || value == "path")
                    head = HeadKind::LongPath;
                else
                    throw InvalidSpec("head must be 'cycle' or 'longpath', found '" + string{value} + "'");
            }
            else if (key == "i") {
                have_indices = true;
                while (true) {
                    auto comma = value.find(',');
                    indices.push_back(parse_int(value.substr(0, comma), "index"));
                    if (comma == string_view::npos)
                        break;
                    value.remove_prefix(comma + 1);
                }
            }
            else
                throw InvalidSpec("unknown key '" + string{key} + "'");
        }
        if (n == -1)
            throw InvalidSpec("missing n=");
        if (! have_indices)
            throw InvalidSpec("missing i=");
        if (k == -1)
            k = static_cast<int>(indices.size());
        return sorted_spec(indices, n, k, head);
    }

    auto spec_from_targets(span<const TargetGraph> targets) -> SortedSpec
    {
        int k = static_cast<int>(targets.size());
        int cycle_length = 0, longest_path = 3;
        for (auto & t : targets) {
            switch (t.kind) {
            case TargetKind::EvenCycle:
                if (cycle_length != 0 && cycle_length != t.size)
                    throw InvalidSpec("target list mixes cycle lengths");
                cycle_length = t.size;
                break;
            case TargetKind::Path:
                if (t.size < 3 || t.size % 2 == 0)
                    throw InvalidSpec(t.name() + " is not a member of the family (odd paths from P3)");
                longest_path = std::max(longest_path, t.size);
                break;
            case TargetKind::Matching:
                throw InvalidSpec(t.name() + " is not a member of the family");
            }
        }

        int n = cycle_length ? cycle_length / 2 : std::max(3, (longest_path - 3) / 2 + 2);
        if (n < 3)
            throw InvalidSpec("C" + to_string(cycle_length) + " is not a member of the family");

        vector<int> raw;
        for (auto & t : targets) {
            if (t.kind == TargetKind::EvenCycle)
                raw.push_back(n - 1);
            else {
                int i = (t.size - 3) / 2;
                if (i > n - 2)
                    throw InvalidSpec(t.name() + " cannot be combined with C" + to_string(cycle_length));
                raw.push_back(i);
            }
        }
        return sorted_spec(raw, n, k, HeadKind::Cycle);
    }

    auto to_caller_colors(const EdgeColoring & c, const SortedSpec & s) -> EdgeColoring
    {
        return permute_colors(c, s.caller_color);
    }

    auto predicted_gr(const TargetSpec & spec) -> long long
    {
        long long total = spec.target(1).order();
        for (int j = 1; j < spec.k(); ++j)
            total += spec.indices()[j];
        return total;
    }

    auto classical_ramsey(TargetGraph a, TargetGraph b) -> long long
    {
        auto unsupported = [&] {
            return Unsupported("no two-color formula for (" + a.name() + ", " + b.name() + ")");
        };
        if (a.kind == TargetKind::Matching || b.kind == TargetKind::Matching)
            throw unsupported();

        if (a.kind == TargetKind::EvenCycle && b.kind == TargetKind::EvenCycle) {
            int half = a.size / 2;
            if (a.size != b.size || half < 3)
                throw unsupported();
            return 3LL * half - 1;
        }

        if (a.kind == TargetKind::EvenCycle || b.kind == TargetKind::EvenCycle) {
            auto cycle = a.kind == TargetKind::EvenCycle ? a : b;
            auto path = a.kind == TargetKind::Path ? a : b;
            int m = path.size;
            if (! (cycle.size >= m && m >= 3))
                throw unsupported();
            return cycle.size + m / 2 - 1;
        }

        int m = std::min(a.size, b.size), longer = std::max(a.size, b.size);
        return longer + m / 2 - 1;
    }

    auto known_gr(Family family, int parameter, int k) -> GrBounds
    {
        auto outside = [&](const string & why) {
            return OutOfHypotheses(why + " (parameter " + to_string(parameter) + ", k=" + to_string(k) + ")");
        };
        if (k < 1)
            throw outside("k must be at least 1");

        if (family == Family::Cycle && parameter == 3)
            family = Family::Triangle;

        switch (family) {
        case Family::Triangle:
            return exact(two_colored_triangles_order(k) + 1);

        case Family::Path: {
            int m = parameter;
            if (m < 3)
                throw outside("paths need at least 3 vertices");
            if (k == 1)
                return exact(m);
            if (m <= 6)
                return exact(static_cast<long long>((m - 2) / 2) * k + (m + 1) / 2 + 1);
            int half = m / 2;
            long long lower = m % 2 == 0 ? static_cast<long long>(half - 1) * k + half + 1
                                         : static_cast<long long>(half - 1) * k + half + 2;
            if (half <= 4)
                return exact(lower);
            long long upper = static_cast<long long>((m - 2) / 2) * k + 3LL * (m / 2);
            return {lower, upper};
        }

        case Family::Cycle: {
            int length = parameter;
            if (length < 3)
                throw outside("cycles need at least 3 vertices");
            if (k == 1)
                return exact(length);
            if (length % 2 == 1) {
                if (length == 5)
                    return exact(checked_pow(2, k + 1) + 1);
                int half = length / 2;
                if (half < 3 || half > 7)
                    throw outside("odd cycle values are known for C_5 and C_7..C_15 only");
                return exact(checked_mul(half, checked_pow(2, k)) + 1);
            }
            int half = length / 2;
            if (half == 2)
                return exact(k + 4LL);
            long long lower = static_cast<long long>(half - 1) * k + half + 1;
            if (half <= 4)
                return exact(lower);
            return {lower, static_cast<long long>(half - 1) * k + 3LL * half};
        }

        case Family::Matching: {
            int s = parameter;
            if (s < 1)
                throw outside("matchings need at least 1 edge");
            if (k == 1)
                return exact(2LL * s);
            if (s < 3)
                throw outside("matching values are covered for M_3 and larger");
            long long lower = static_cast<long long>(s - 1) * k + s + 1;
            if (s <= 4)
                return exact(lower);
            return {lower, static_cast<long long>(s - 1) * k + 3LL * s};
        }
        }
        throw outside("unknown family");
    }

    auto parse_family(string_view text) -> std::pair<Family, int>
    {
        if (text == "K3")
            return {Family::Triangle, 3};
        if (text.size() < 2)
            throw InvalidSpec("bad family '" + string{text} + "'");
        int value = parse_int(text.substr(1), "family parameter");
        switch (text.front()) {
        case 'P': return {Family::Path, value};
        case 'C': return {Family::Cycle, value};
        case 'M': return {Family::Matching, value};
        default: throw InvalidSpec("bad family '" + string{text} + "'");
        }
    }

    auto lower_bound_layers(const TargetSpec & spec) -> vector<int>
    {
        vector<int> offsets{0, spec.target(1).order() - 1};
        for (int j = 1; j < spec.k(); ++j)
            offsets.push_back(offsets.back() + spec.indices()[j]);
        return offsets;
    }

    auto build_lower_bound_coloring(const TargetSpec & spec) -> EdgeColoring
    {
        auto offsets = lower_bound_layers(spec);
        int n = offsets.back();
        vector<Color> layer(n);
        for (Color j = 1; j <= spec.k(); ++j)
            for (int v = offsets[j - 1]; v < offsets[j]; ++v)
                layer[v] = j;
        return tabulate_coloring(n, spec.k(), [&](Vertex u, Vertex v) { return std::max(layer[u], layer[v]); });
    }
}

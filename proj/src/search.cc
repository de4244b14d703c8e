#include <gallai/search.hh>

#include <bit>
#include <string>
#include <unordered_set>

using std::optional;
using std::span;
using std::to_string;
using std::vector;

namespace gallai
{
    namespace
    {
        constexpr auto bit(Vertex v) -> Bitset { return Bitset{1} << v; }

        struct StateKey
        {
            Bitset mask;
            int extra;

            friend auto operator==(const StateKey &, const StateKey &) -> bool = default;
        };

        struct StateKeyHash
        {
            auto operator()(const StateKey & k) const noexcept -> std::size_t
            {
                return std::hash<Bitset>{}(k.mask * 0x9e3779b97f4a7c15ULL + static_cast<Bitset>(k.extra));
            }
        };

        using DeadStates = std::unordered_set<StateKey, StateKeyHash>;

        auto check_host(std::size_t n) -> void
        {
            if (n > static_cast<std::size_t>(max_search_order))
                throw std::invalid_argument("subgraph search supports at most " + to_string(max_search_order) +
                    " vertices, got " + to_string(n));
        }

        // DFS for a path (or a cycle closing back to seq.front()) of `length`
        // vertices. Failed (last vertex, visited set) states are remembered;
        // the remaining length is implied by the visited set's size.
        struct PathSearch
        {
            span<const Bitset> adj;
            int length;
            bool closed;
            vector<Vertex> seq;
            DeadStates dead;

            auto extend(Vertex last, Bitset visited) -> bool
            {
                if (static_cast<int>(seq.size()) == length)
                    return ! closed || (adj[last] & bit(seq.front()));
                if (dead.contains({visited, last}))
                    return false;
                for (Bitset cand = adj[last] & ~visited; cand; cand &= cand - 1) {
                    Vertex w = std::countr_zero(cand);
                    seq.push_back(w);
                    if (extend(w, visited | bit(w)))
                        return true;
                    seq.pop_back();
                }
                dead.insert({visited, last});
                return false;
            }
        };

        auto find_path(span<const Bitset> adj, int length) -> optional<vector<Vertex>>
        {
            int n = static_cast<int>(adj.size());
            PathSearch search{adj, length, false, {}, {}};
            for (Vertex s = 0; s < n; ++s) {
                search.seq.assign(1, s);
                if (search.extend(s, bit(s)))
                    return search.seq;
            }
            return std::nullopt;
        }

        auto find_cycle(span<const Bitset> adj, int length) -> optional<vector<Vertex>>
        {
            int n = static_cast<int>(adj.size());
            for (Vertex s = 0; s < n; ++s) {
                // The least cycle starts at its smallest vertex, so smaller vertices are excluded.
                PathSearch search{adj, length, true, {s}, {}};
                if (search.extend(s, ~Bitset{0} >> (63 - s)))
                    return search.seq;
            }
            return std::nullopt;
        }

        // Exact test for a matching of `edges` edges inside the vertex set `avail`.
        struct MatchingSearch
        {
            span<const Bitset> adj;
            DeadStates dead;

            auto strip_isolated(Bitset avail) const -> Bitset
            {
                Bitset keep = 0;
                for (Bitset rest = avail; rest; rest &= rest - 1) {
                    Vertex v = std::countr_zero(rest);
                    if (adj[v] & avail)
                        keep |= bit(v);
                }
                return keep;
            }

            auto feasible(Bitset avail, int edges) -> bool
            {
                if (edges <= 0)
                    return true;
                avail = strip_isolated(avail);
                if (std::popcount(avail) < 2 * edges)
                    return false;
                if (dead.contains({avail, edges}))
                    return false;

                Vertex v = std::countr_zero(avail);
                for (Bitset cand = adj[v] & avail; cand; cand &= cand - 1) {
                    Vertex w = std::countr_zero(cand);
                    if (feasible(avail & ~bit(v) & ~bit(w), edges - 1))
                        return true;
                }
                if (feasible(avail & ~bit(v), edges))
                    return true;

                dead.insert({avail, edges});
                return false;
            }
        };

        auto all_vertices(std::size_t n) -> Bitset
        {
            return n == 64 ? ~Bitset{0} : bit(static_cast<Vertex>(n)) - 1;
        }

        auto find_matching(span<const Bitset> adj, int edges) -> optional<vector<Vertex>>
        {
            MatchingSearch search{adj, {}};
            Bitset avail = all_vertices(adj.size());
            if (! search.feasible(avail, edges))
                return std::nullopt;

            vector<Vertex> seq;
            for (int placed = 0; placed < edges; ++placed) {
                bool done = false;
                for (Bitset as = avail; as && ! done; as &= as - 1) {
                    Vertex a = std::countr_zero(as);
                    for (Bitset bs = adj[a] & avail; bs && ! done; bs &= bs - 1) {
                        Vertex b = std::countr_zero(bs);
                        if (search.feasible(avail & ~bit(a) & ~bit(b), edges - placed - 1)) {
                            seq.push_back(a);
                            seq.push_back(b);
                            avail &= ~bit(a) & ~bit(b);
                            done = true;
                        }
                    }
                }
            }
            return seq;
        }

        struct AnchoredPath
        {
            span<const Bitset> adj;
            int length;
            Vertex anchor;

            auto grow(Vertex end, Bitset visited, int remaining) const -> bool
            {
                if (remaining == 0)
                    return true;
                for (Bitset cand = adj[end] & ~visited; cand; cand &= cand - 1) {
                    Vertex w = std::countr_zero(cand);
                    if (grow(w, visited | bit(w), remaining - 1))
                        return true;
                }
                return false;
            }

            // Extend one side from `end`; at every size try to finish the other side from `anchor`.
            auto tail(Vertex end, Bitset visited) const -> bool
            {
                int have = std::popcount(visited);
                if (grow(anchor, visited, length - have))
                    return true;
                if (have == length)
                    return false;
                for (Bitset cand = adj[end] & ~visited; cand; cand &= cand - 1) {
                    Vertex w = std::countr_zero(cand);
                    if (tail(w, visited | bit(w)))
                        return true;
                }
                return false;
            }
        };

        auto cycle_through(span<const Bitset> adj, int length, Vertex u, Vertex last, Bitset visited) -> bool
        {
            if (std::popcount(visited) == length)
                return (adj[last] & bit(u)) != 0;
            for (Bitset cand = adj[last] & ~visited; cand; cand &= cand - 1) {
                Vertex w = std::countr_zero(cand);
                if (cycle_through(adj, length, u, w, visited | bit(w)))
                    return true;
            }
            return false;
        }
    }

    auto color_class(const EdgeColoring & c, Color color) -> vector<Bitset>
    {
        int n = c.order();
        check_host(n);
        vector<Bitset> adj(n, 0);
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (c.color(u, v) == color) {
                    adj[u] |= bit(v);
                    adj[v] |= bit(u);
                }
        return adj;
    }

    auto find_in_graph(span<const Bitset> adj, TargetGraph target) -> optional<vector<Vertex>>
    {
        check_host(adj.size());
        if (target.order() > static_cast<int>(adj.size()))
            return std::nullopt;
        switch (target.kind) {
        case TargetKind::Path: return find_path(adj, target.size);
        case TargetKind::EvenCycle: return find_cycle(adj, target.size);
        case TargetKind::Matching: return find_matching(adj, target.size);
        }
        return std::nullopt;
    }

    auto has_target_through_edge(span<const Bitset> adj, TargetGraph target, Vertex u, Vertex v) -> bool
    {
        if (target.order() > static_cast<int>(adj.size()))
            return false;
        switch (target.kind) {
        case TargetKind::Path: {
            AnchoredPath search{adj, target.size, u};
            return search.tail(v, bit(u) | bit(v));
        }
        case TargetKind::EvenCycle:
            return cycle_through(adj, target.size, u, v, bit(u) | bit(v));
        case TargetKind::Matching: {
            MatchingSearch search{adj, {}};
            return search.feasible(all_vertices(adj.size()) & ~bit(u) & ~bit(v), target.size - 1);
        }
        }
        return false;
    }

    auto find_mono(const EdgeColoring & c, Color color, TargetGraph target) -> optional<Embedding>
    {
        if (color < 1 || color > c.palette())
            throw ColorOutOfRange("color " + to_string(color) + " outside [1, " + to_string(c.palette()) + "]");
        if (target.order() > c.order())
            return std::nullopt;
        auto adj = color_class(c, color);
        if (auto seq = find_in_graph(adj, target))
            return Embedding{target, color, std::move(*seq)};
        return std::nullopt;
    }

    auto contains_required(const EdgeColoring & c, span<const TargetGraph> targets) -> optional<Embedding>
    {
        if (static_cast<int>(targets.size()) != c.palette())
            throw SpecLengthMismatch("coloring has " + to_string(c.palette()) + " colors but " +
                to_string(targets.size()) + " targets were given");
        for (Color j = 1; j <= c.palette(); ++j)
            if (auto hit = find_mono(c, j, targets[j - 1]))
                return hit;
        return std::nullopt;
    }

    auto verify_embedding(const EdgeColoring & c, const Embedding & e) -> bool
    {
        auto & vs = e.vertices;
        int n = c.order();
        if (static_cast<int>(vs.size()) != e.target.order())
            return false;
        vector<bool> seen(n, false);
        for (auto v : vs) {
            if (v < 0 || v >= n || seen[v])
                return false;
            seen[v] = true;
        }
        auto on = [&](Vertex a, Vertex b) { return c.color(a, b) == e.color; };
        int len = static_cast<int>(vs.size());
        switch (e.target.kind) {
        case TargetKind::Path:
            for (int i = 0; i + 1 < len; ++i)
                if (! on(vs[i], vs[i + 1]))
                    return false;
            return true;
        case TargetKind::EvenCycle:
            for (int i = 0; i < len; ++i)
                if (! on(vs[i], vs[(i + 1) % len]))
                    return false;
            return true;
        case TargetKind::Matching:
            for (int i = 0; i < len; i += 2)
                if (! on(vs[i], vs[i + 1]))
                    return false;
            return true;
        }
        return false;
    }
}

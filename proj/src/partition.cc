#include <gallai/partition.hh>

#include <algorithm>
#include <numeric>
#include <string>

using std::optional;
using std::to_string;
using std::vector;

namespace gallai
{
    namespace
    {
        struct UnionFind
        {
            vector<int> parent;

            explicit UnionFind(int n) : parent(n)
            {
                std::iota(parent.begin(), parent.end(), 0);
            }

            auto find(int x) -> int
            {
                while (parent[x] != x)
                    x = parent[x] = parent[parent[x]];
                return x;
            }

            auto unite(int a, int b) -> void
            {
                a = find(a);
                b = find(b);
                if (a != b)
                    parent[std::max(a, b)] = std::min(a, b);
            }
        };

        // part_of[v] for parts numbered by their least vertex.
        auto canonical_labels(vector<int> raw) -> std::pair<vector<int>, int>
        {
            vector<int> relabel(raw.size(), -1);
            int next = 0;
            for (auto & label : raw) {
                if (relabel[label] == -1)
                    relabel[label] = next++;
                label = relabel[label];
            }
            return {raw, next};
        }

        auto build(const EdgeColoring & c, const vector<int> & part_of, int p) -> GallaiPartition
        {
            GallaiPartition result;
            result.parts.resize(p);
            for (Vertex v = 0; v < c.order(); ++v)
                result.parts[part_of[v]].push_back(v);
            result.pair_colors.resize(pair_count(p));
            for (int i = 0; i < p; ++i)
                for (int j = i + 1; j < p; ++j)
                    result.pair_colors[pair_index(p, i, j)] = c.color(result.parts[i].front(), result.parts[j].front());
            result.between_colors = result.pair_colors;
            std::sort(result.between_colors.begin(), result.between_colors.end());
            result.between_colors.erase(std::unique(result.between_colors.begin(), result.between_colors.end()),
                result.between_colors.end());
            return result;
        }

        // Finest partition whose between-part edges all use colors in `allowed`
        // and whose part pairs are homogeneous; the result may be a single part.
        auto closure(const EdgeColoring & c, const vector<Color> & allowed) -> std::pair<vector<int>, int>
        {
            int n = c.order();
            UnionFind uf(n);
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    if (std::find(allowed.begin(), allowed.end(), c.color(u, v)) == allowed.end())
                        uf.unite(u, v);

            vector<int> roots(n);
            for (Vertex v = 0; v < n; ++v)
                roots[v] = uf.find(v);
            auto [part_of, p] = canonical_labels(roots);

            constexpr int unseen = 0, conflict = -1;
            while (p >= 2) {
                vector<int> seen(static_cast<std::size_t>(p) * p, unseen);
                for (Vertex u = 0; u < n; ++u)
                    for (Vertex v = u + 1; v < n; ++v) {
                        int a = part_of[u], b = part_of[v];
                        if (a == b)
                            continue;
                        auto & cell = seen[std::min(a, b) * p + std::max(a, b)];
                        Color col = c.color(u, v);
                        if (cell == unseen)
                            cell = col;
                        else if (cell != col)
                            cell = conflict;
                    }

                auto first = std::find(seen.begin(), seen.end(), conflict);
                if (first == seen.end())
                    break;
                int i = static_cast<int>(first - seen.begin()) / p, j = static_cast<int>(first - seen.begin()) % p;
                for (auto & label : part_of)
                    if (label == j)
                        label = i;
                std::tie(part_of, p) = canonical_labels(part_of);
            }
            return {part_of, p};
        }
    }

    auto gallai_partition(const EdgeColoring & c) -> optional<GallaiPartition>
    {
        // Success for S implies success for any superset of S, so only sets of
        // size min(2, #used colors) need to be tried.
        auto used = c.used_colors();
        vector<vector<Color>> candidates;
        if (used.size() == 1)
            candidates.push_back(used);
        for (std::size_t a = 0; a < used.size(); ++a)
            for (std::size_t b = a + 1; b < used.size(); ++b)
                candidates.push_back({used[a], used[b]});

        for (auto & allowed : candidates) {
            auto [part_of, p] = closure(c, allowed);
            if (p >= 2)
                return build(c, part_of, p);
        }
        return std::nullopt;
    }

    auto validate_partition(const EdgeColoring & c, const vector<vector<Vertex>> & parts)
        -> std::variant<GallaiPartition, ViolationReport>
    {
        int n = c.order();
        int p = static_cast<int>(parts.size());
        if (p < 2)
            throw NotAPartition("need at least 2 parts, got " + to_string(p));
        vector<bool> covered(n, false);
        for (auto & part : parts) {
            if (part.empty())
                throw NotAPartition("empty part");
            for (auto v : part) {
                if (v < 0 || v >= n)
                    throw NotAPartition("vertex " + to_string(v) + " out of range");
                if (covered[v])
                    throw NotAPartition("vertex " + to_string(v) + " appears twice");
                covered[v] = true;
            }
        }
        if (auto missing = std::find(covered.begin(), covered.end(), false); missing != covered.end())
            throw NotAPartition("vertex " + to_string(missing - covered.begin()) + " is in no part");

        GallaiPartition result;
        result.parts = parts;
        result.pair_colors.resize(pair_count(p));
        ExtraBetweenColor seen_colors;
        for (int i = 0; i < p; ++i)
            for (int j = i + 1; j < p; ++j) {
                Edge first{parts[i].front(), parts[j].front()};
                Color col = c.color(first.u, first.v);
                for (auto u : parts[i])
                    for (auto v : parts[j])
                        if (c.color(u, v) != col)
                            return ViolationReport{NonHomogeneousPair{i, j, first, Edge{u, v}}};
                result.pair_colors[pair_index(p, i, j)] = col;
                if (std::find(seen_colors.colors.begin(), seen_colors.colors.end(), col) == seen_colors.colors.end()) {
                    seen_colors.colors.push_back(col);
                    seen_colors.witnesses.push_back(first);
                }
            }

        if (seen_colors.colors.size() > 2)
            return ViolationReport{seen_colors};

        result.between_colors = seen_colors.colors;
        std::sort(result.between_colors.begin(), result.between_colors.end());
        return result;
    }

    auto reduced_graph(const GallaiPartition & partition, int palette) -> EdgeColoring
    {
        return tabulate_coloring(partition.part_count(), palette,
            [&](Vertex i, Vertex j) { return partition.pair_color(i, j); });
    }

    auto part_colorings(const EdgeColoring & c, const GallaiPartition & partition) -> vector<optional<EdgeColoring>>
    {
        vector<optional<EdgeColoring>> blocks;
        for (auto & part : partition.parts)
            if (part.size() >= 2)
                blocks.emplace_back(induced(c, part));
            else
                blocks.emplace_back(std::nullopt);
        return blocks;
    }

    auto substitute(const GallaiPartition & partition, const EdgeColoring & reduced,
        std::span<const optional<EdgeColoring>> blocks) -> EdgeColoring
    {
        int p = partition.part_count();
        if (reduced.order() != p || static_cast<int>(blocks.size()) != p)
            throw std::invalid_argument("reduced graph and blocks must match the partition");

        int n = 0;
        for (auto & part : partition.parts)
            n += static_cast<int>(part.size());
        vector<int> part_of(n, -1), position(n, -1);
        for (int i = 0; i < p; ++i) {
            auto & part = partition.parts[i];
            if (part.size() >= 2 && (! blocks[i] || blocks[i]->order() != static_cast<int>(part.size())))
                throw std::invalid_argument("block " + to_string(i) + " does not match its part");
            for (std::size_t x = 0; x < part.size(); ++x) {
                part_of[part[x]] = i;
                position[part[x]] = static_cast<int>(x);
            }
        }

        return tabulate_coloring(n, reduced.palette(), [&](Vertex u, Vertex v) {
            if (part_of[u] == part_of[v])
                return blocks[part_of[u]]->color(position[u], position[v]);
            return reduced.color(part_of[u], part_of[v]);
        });
    }
}

#include <gallai/verifier.hh>
#include <gallai/search.hh>

#include <atomic>
#include <bit>
#include <algorithm>
#include <climits>
#include <random>
#include <string>
#include <thread>

using std::size_t;
using std::span;
using std::string;
using std::to_string;
using std::uint64_t;
using std::uint8_t;
using std::vector;

namespace gallai
{
    auto verdict_name(VerdictKind kind) -> const char *
    {
        switch (kind) {
        case VerdictKind::AllForced: return "all_forced";
        case VerdictKind::BadColoring: return "bad_coloring";
        case VerdictKind::BudgetExceeded: return "budget";
        }
        return "?";
    }

    auto status_name(GrStatus status) -> const char *
    {
        switch (status) {
        case GrStatus::Confirmed: return "confirmed";
        case GrStatus::Discrepancy: return "discrepancy";
        case GrStatus::Inconclusive: return "inconclusive";
        }
        return "?";
    }

    auto SearchStats::operator+=(const SearchStats & other) -> SearchStats &
    {
        nodes += other.nodes;
        prunes_rainbow += other.prunes_rainbow;
        prunes_mono += other.prunes_mono;
        prunes_symmetry += other.prunes_symmetry;
        return *this;
    }

    namespace
    {
        constexpr auto bit(Vertex v) -> Bitset { return Bitset{1} << v; }

        constexpr uint64_t budget_chunk = 1 << 14;

        struct Budget
        {
            std::atomic<uint64_t> remaining;
            std::atomic<bool> exhausted{false};

            // Claims up to one chunk of nodes; zero once the budget is spent.
            auto claim() -> uint64_t
            {
                auto have = remaining.load(std::memory_order_relaxed);
                while (have > 0) {
                    auto take = std::min(have, budget_chunk);
                    if (remaining.compare_exchange_weak(have, have - take, std::memory_order_relaxed))
                        return take;
                }
                exhausted.store(true, std::memory_order_relaxed);
                return 0;
            }
        };

        enum class Outcome
        {
            Exhausted,
            Found,
            OutOfBudget,
            Cancelled
        };

        struct Problem
        {
            int n;
            int k;
            vector<TargetGraph> targets;
            vector<std::pair<Vertex, Vertex>> edges;
            // Previous color with the same target, or 0.
            vector<Color> group_prev;
            bool symmetry;
            bool lexicographic;
        };

        class Search
        {
        public:
            Search(const Problem & problem, Budget & budget) :
                _p(problem),
                _budget(budget),
                _adj(static_cast<size_t>(problem.k + 1) * problem.n, 0),
                _usage(problem.k + 1, 0),
                _assigned(problem.edges.size(), 0),
                _touched(problem.n, 0)
            {
            }

            SearchStats stats;
            // Set by the parallel driver; a task aborts once a smaller task found a witness.
            const std::atomic<int> * best_task = nullptr;
            int task_index = 0;

            auto assigned() const -> const vector<uint8_t> & { return _assigned; }

            auto replay(span<const uint8_t> prefix) -> void
            {
                for (size_t i = 0; i < prefix.size(); ++i)
                    place(static_cast<int>(i), prefix[i]);
            }

            // Depth-first search from edge `index`. When `stop` is below the edge
            // count, every surviving prefix of length `stop` is handed to `on_prefix`
            // instead of being searched further.
            template <typename OnPrefix>
            auto run(int index, int stop, OnPrefix && on_prefix) -> Outcome
            {
                if (index == stop) {
                    if (stop == static_cast<int>(_p.edges.size()))
                        return Outcome::Found;
                    on_prefix(span<const uint8_t>{_assigned.data(), static_cast<size_t>(stop)});
                    return Outcome::Exhausted;
                }

                auto [u, v] = _p.edges[index];
                for (Color c = 1; c <= _p.k; ++c) {
                    if (_p.symmetry && breaks_symmetry(index, u, c)) {
                        ++stats.prunes_symmetry;
                        continue;
                    }
                    if (_allowance == 0) {
                        _allowance = _budget.claim();
                        if (_allowance == 0)
                            return Outcome::OutOfBudget;
                    }
                    --_allowance;
                    ++stats.nodes;
                    if (best_task && best_task->load(std::memory_order_relaxed) < task_index)
                        return Outcome::Cancelled;

                    if (closes_rainbow(u, v, c)) {
                        ++stats.prunes_rainbow;
                        continue;
                    }
                    place(index, c);
                    if (has_target_through_edge(row(c), _p.targets[c - 1], u, v)) {
                        ++stats.prunes_mono;
                        unplace(index, c);
                        continue;
                    }
                    auto outcome = run(index + 1, stop, on_prefix);
                    if (outcome != Outcome::Exhausted)
                        return outcome;
                    unplace(index, c);
                }
                return Outcome::Exhausted;
            }

        private:
            const Problem & _p;
            Budget & _budget;
            uint64_t _allowance = 0;
            vector<Bitset> _adj;
            vector<int> _usage;
            vector<uint8_t> _assigned;
            // Vertices joined to v by an already colored edge.
            vector<Bitset> _touched;

            auto row(Color c) const -> span<const Bitset>
            {
                return {_adj.data() + static_cast<size_t>(c) * _p.n, static_cast<size_t>(_p.n)};
            }

            auto adj(Color c, Vertex v) -> Bitset & { return _adj[static_cast<size_t>(c) * _p.n + v]; }

            auto place(int index, Color c) -> void
            {
                auto [u, v] = _p.edges[index];
                adj(c, u) |= bit(v);
                adj(c, v) |= bit(u);
                ++_usage[c];
                _assigned[index] = static_cast<uint8_t>(c);
                _touched[u] |= bit(v);
                _touched[v] |= bit(u);
            }

            auto unplace(int index, Color c) -> void
            {
                auto [u, v] = _p.edges[index];
                adj(c, u) &= ~bit(v);
                adj(c, v) &= ~bit(u);
                --_usage[c];
                _assigned[index] = 0;
                _touched[u] &= ~bit(v);
                _touched[v] &= ~bit(u);
            }

            auto breaks_symmetry(int index, Vertex u, Color c) const -> bool
            {
                if (_p.group_prev[c] != 0 && _usage[_p.group_prev[c]] == 0)
                    return true;
                // in lexicographic order edges (0,1),(0,2),... come first and must be non-decreasing
                return _p.lexicographic && u == 0 && index > 0 && c < _assigned[index - 1];
            }

            // Triangles closed by {u, v} are those through a w already joined to both.
            auto closes_rainbow(Vertex u, Vertex v, Color c) -> bool
            {
                Bitset earlier = _touched[u] & _touched[v];
                Bitset neither = earlier & ~adj(c, u) & ~adj(c, v);
                if (! neither)
                    return false;
                Bitset agree = 0;
                for (Color x = 1; x <= _p.k; ++x)
                    agree |= adj(x, u) & adj(x, v);
                return (neither & ~agree) != 0;
            }
        };

        auto make_problem(int n, span<const TargetGraph> targets, const SearchOptions & options) -> Problem
        {
            Problem p{n, static_cast<int>(targets.size()), {targets.begin(), targets.end()}, {}, {}, options.symmetry,
                options.edge_order_seed == 0};
            for (Vertex u = 0; u < n; ++u)
                for (Vertex v = u + 1; v < n; ++v)
                    p.edges.emplace_back(u, v);
            if (! p.lexicographic) {
                std::mt19937_64 rng{options.edge_order_seed};
                std::shuffle(p.edges.begin(), p.edges.end(), rng);
            }
            p.group_prev.assign(p.k + 1, 0);
            for (Color c = 1; c <= p.k; ++c)
                for (Color d = c - 1; d >= 1; --d)
                    if (p.targets[d - 1] == p.targets[c - 1]) {
                        p.group_prev[c] = d;
                        break;
                    }
            return p;
        }

        auto coloring_of(const Problem & p, const vector<uint8_t> & assigned) -> EdgeColoring
        {
            vector<uint8_t> colors(assigned.size());
            for (size_t i = 0; i < assigned.size(); ++i)
                colors[pair_index(p.n, p.edges[i].first, p.edges[i].second)] = assigned[i];
            return EdgeColoring{p.n, p.k, std::move(colors)};
        }

        struct TaskResult
        {
            Outcome outcome = Outcome::Cancelled;
            vector<uint8_t> witness;
            SearchStats stats;
        };

        auto finish(const Problem & p, Outcome outcome, const vector<uint8_t> & witness, const SearchStats & stats)
            -> Verdict
        {
            switch (outcome) {
            case Outcome::Found:
                return Verdict{VerdictKind::BadColoring, coloring_of(p, witness), 0};
            case Outcome::OutOfBudget:
                return Verdict{VerdictKind::BudgetExceeded, std::nullopt, stats.nodes};
            default:
                return Verdict{VerdictKind::AllForced, std::nullopt, 0};
            }
        }

        auto run_parallel(const Problem & p, Budget & budget, const SearchOptions & options, SearchStats & stats)
            -> Verdict
        {
            vector<vector<uint8_t>> prefixes;
            Search splitter(p, budget);
            auto split = splitter.run(0, options.split_depth,
                [&](span<const uint8_t> prefix) { prefixes.emplace_back(prefix.begin(), prefix.end()); });
            stats += splitter.stats;
            if (split == Outcome::OutOfBudget)
                return Verdict{VerdictKind::BudgetExceeded, std::nullopt, stats.nodes};

            vector<TaskResult> results(prefixes.size());
            std::atomic<size_t> next{0};
            std::atomic<int> best{INT_MAX};

            auto worker = [&] {
                while (true) {
                    auto task = next.fetch_add(1);
                    if (task >= prefixes.size())
                        return;
                    if (best.load() < static_cast<int>(task))
                        continue;
                    Search search(p, budget);
                    search.best_task = &best;
                    search.task_index = static_cast<int>(task);
                    search.replay(prefixes[task]);
                    auto & result = results[task];
                    result.outcome = search.run(options.split_depth, static_cast<int>(p.edges.size()), [](auto) {});
                    result.stats = search.stats;
                    if (result.outcome == Outcome::Found) {
                        result.witness = search.assigned();
                        int current = best.load();
                        while (static_cast<int>(task) < current && ! best.compare_exchange_weak(current, static_cast<int>(task)))
                            ;
                    }
                }
            };

            vector<std::thread> pool;
            for (unsigned t = 0; t < options.threads; ++t)
                pool.emplace_back(worker);
            for (auto & t : pool)
                t.join();

            for (auto & r : results)
                stats += r.stats;

            // Least task with a witness wins, unless an earlier task ran out of budget.
            for (auto & r : results) {
                if (r.outcome == Outcome::Found)
                    return finish(p, r.outcome, r.witness, stats);
                if (r.outcome == Outcome::OutOfBudget)
                    return finish(p, r.outcome, {}, stats);
            }
            return Verdict{VerdictKind::AllForced, std::nullopt, 0};
        }
    }

    auto decide_upper(int vertices, span<const TargetGraph> targets, const SearchOptions & options) -> UpperResult
    {
        if (vertices < 2 || vertices > max_search_order)
            throw std::invalid_argument("vertex count must be in [2, " + to_string(max_search_order) + "], got " +
                to_string(vertices));
        if (targets.empty() || targets.size() > static_cast<size_t>(max_palette))
            throw std::invalid_argument("need between 1 and " + to_string(max_palette) + " targets");
        if (options.budget < 1)
            throw std::invalid_argument("budget must be at least 1");

        auto start = std::chrono::steady_clock::now();
        auto problem = make_problem(vertices, targets, options);
        Budget budget{options.budget};

        UpperResult result{Verdict{VerdictKind::AllForced, std::nullopt, 0}, {}};
        int edge_count = static_cast<int>(problem.edges.size());
        if (options.threads > 1 && options.split_depth > 0 && options.split_depth < edge_count)
            result.verdict = run_parallel(problem, budget, options, result.stats);
        else {
            Search search(problem, budget);
            auto outcome = search.run(0, edge_count, [](auto) {});
            result.stats = search.stats;
            result.verdict = finish(problem, outcome, search.assigned(), result.stats);
        }
        result.stats.elapsed = std::chrono::steady_clock::now() - start;
        return result;
    }

    auto decide_upper(int vertices, const TargetSpec & spec, const SearchOptions & options) -> UpperResult
    {
        auto targets = spec.targets();
        return decide_upper(vertices, targets, options);
    }

    auto verify_lower(const TargetSpec & spec) -> LowerCertificate
    {
        auto witness = build_lower_bound_coloring(spec);
        auto targets = spec.targets();
        bool holds = is_gallai(witness) && ! contains_required(witness, targets);
        return LowerCertificate{holds, std::move(witness)};
    }

    auto compute_gr(const TargetSpec & spec, const SearchOptions & options) -> GrReport
    {
        auto predicted = predicted_gr(spec);
        auto lower = verify_lower(spec);
        auto upper = decide_upper(static_cast<int>(predicted), spec, options);

        GrStatus status;
        if (upper.verdict.kind == VerdictKind::BudgetExceeded)
            status = lower.holds ? GrStatus::Inconclusive : GrStatus::Discrepancy;
        else if (lower.holds && upper.verdict.kind == VerdictKind::AllForced)
            status = GrStatus::Confirmed;
        else
            status = GrStatus::Discrepancy;

        return GrReport{predicted, std::move(lower), std::move(upper), status};
    }
}

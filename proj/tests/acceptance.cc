// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <gallai/formulas.hh>
#include <gallai/partition.hh>
#include <gallai/search.hh>
#include <gallai/verifier.hh>

#include "oracles.hh"

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace gallai;

namespace
{
    using Clock = std::chrono::steady_clock;

    struct Outcome
    {
        bool ok = true;
        std::ostringstream detail;
        std::vector<std::string> failures;

        auto expect(bool condition, const std::string & what) -> void
        {
            if (! condition) {
                ok = false;
                if (failures.size() < 10)
                    failures.push_back(what);
            }
        }
    };

    auto criterion(int number, const char * title, double limit_seconds, const std::function<void(Outcome &)> & body) -> bool
    {
        Outcome outcome;
        auto start = Clock::now();
        try {
            body(outcome);
        }
        catch (const std::exception & e) {
            outcome.expect(false, std::string{"exception: "} + e.what());
        }
        double seconds = std::chrono::duration<double>(Clock::now() - start).count();
        outcome.expect(seconds < limit_seconds, "took " + std::to_string(seconds) + " s, limit " + std::to_string(limit_seconds) + " s");

        std::printf("%s criterion %d: %s (%.3f s, limit %.0f s)%s%s\n", outcome.ok ? "PASS" : "FAIL", number, title, seconds,
            limit_seconds, outcome.detail.str().empty() ? "" : " | ", outcome.detail.str().c_str());
        for (auto & f : outcome.failures)
            std::printf("    %s\n", f.c_str());
        std::fflush(stdout);
        return outcome.ok;
    }

    auto exact_value(Family family, int parameter, int k) -> long long
    {
        auto b = known_gr(family, parameter, k);
        return b.exact() ? b.lower : -1;
    }

    auto formula_suite(Outcome & o) -> void
    {
        auto check = [&](long long got, long long want, const std::string & what) {
            o.expect(got == want, what + " = " + std::to_string(got) + ", expected " + std::to_string(want));
        };
        auto p = [](int m) { return TargetGraph::path(m); };
        auto c = [](int len) { return TargetGraph::even_cycle(len); };

        check(classical_ramsey(c(8), c(8)), 11, "R(C8,C8)");
        check(classical_ramsey(p(7), c(8)), 10, "R(P7,C8)");
        check(classical_ramsey(p(5), p(5)), 6, "R(P5,P5)");
        check(classical_ramsey(c(6), c(6)), 8, "R(C6,C6)");
        check(classical_ramsey(p(3), p(3)), 3, "R(P3,P3)");
        check(classical_ramsey(p(3), c(6)), 6, "R(P3,C6)");
        check(exact_value(Family::Cycle, 6, 2), 8, "GR_2(C6)");
        check(exact_value(Family::Cycle, 6, 3), 10, "GR_3(C6)");
        check(exact_value(Family::Triangle, 3, 4), 26, "GR_4(K3)");

        int values = 9;
        for (int k = 1; k <= 6; ++k) {
            auto ks = std::to_string(k);
            if (k >= 2) {
                check(exact_value(Family::Cycle, 8, k), 3 * k + 5, "GR_" + ks + "(C8)");
                check(exact_value(Family::Cycle, 4, k), k + 4, "GR_" + ks + "(C4)");
                check(exact_value(Family::Cycle, 6, k), 2 * k + 4, "GR_" + ks + "(C6)");
                values += 3;
            }
            // GR_k(P_n) = floor((n-2)/2) k + ceil(n/2) + 1
            int table[] = {0, 0, 0, 3, k + 3, k + 4, 2 * k + 4};
            for (int n = 3; n <= 6; ++n, ++values)
                check(exact_value(Family::Path, n, k), table[n], "GR_" + ks + "(P" + std::to_string(n) + ")");
            check(exact_value(Family::Cycle, 5, k), (1LL << (k + 1)) + 1, "GR_" + ks + "(C5)");
            for (int h = 3; h <= 7; ++h, ++values)
                check(exact_value(Family::Cycle, 2 * h + 1, k), h * (1LL << k) + 1,
                    "GR_" + ks + "(C" + std::to_string(2 * h + 1) + ")");
            values += 1;
        }
        long long triangle[] = {0, 3, 6, 11, 26, 51, 126};
        for (int k = 1; k <= 6; ++k, ++values)
            check(exact_value(Family::Triangle, 3, k), triangle[k], "GR_" + std::to_string(k) + "(K3)");
        for (int n = 3; n <= 4; ++n)
            for (int k = 2; k <= 6; ++k, values += 4) {
                auto tag = "_" + std::to_string(k) + "(n=" + std::to_string(n) + ")";
                check(exact_value(Family::Cycle, 2 * n, k), (n - 1) * k + n + 1, "GR" + tag + " even cycle");
                check(exact_value(Family::Path, 2 * n, k), (n - 1) * k + n + 1, "GR" + tag + " even path");
                check(exact_value(Family::Matching, n, k), (n - 1) * k + n + 1, "GR" + tag + " matching");
                check(exact_value(Family::Path, 2 * n + 1, k), (n - 1) * k + n + 2, "GR" + tag + " odd path");
            }
        for (int n = 5; n <= 8; ++n)
            for (int k = 2; k <= 6; ++k, ++values)
                check(known_gr(Family::Cycle, 2 * n, k).upper, (n - 1) * k + 3 * n, "upper bound C" + std::to_string(2 * n));
        o.detail << values << " values";
    }

    auto all_index_vectors(int n, int k) -> std::vector<std::vector<int>>
    {
        std::vector<std::vector<int>> out;
        std::vector<int> current;
        std::function<void(int)> extend = [&](int cap) {
            if (static_cast<int>(current.size()) == k) {
                out.push_back(current);
                return;
            }
            for (int i = cap; i >= 0; --i) {
                current.push_back(i);
                extend(i);
                current.pop_back();
            }
        };
        extend(n - 1);
        return out;
    }

    auto lower_bound_suite(Outcome & o) -> void
    {
        int specs = 0;
        for (int n = 3; n <= 4; ++n)
            for (int k = 2; k <= 6; ++k)
                for (auto head : {HeadKind::Cycle, HeadKind::LongPath})
                    for (auto & idx : all_index_vectors(n, k)) {
                        TargetSpec spec{n, head, idx};
                        auto c = build_lower_bound_coloring(spec);
                        auto targets = spec.targets();
                        auto name = spec.to_string();
                        o.expect(c.order() == predicted_gr(spec) - 1, name + ": wrong order");
                        o.expect(is_gallai(c), name + ": not Gallai");
                        o.expect(! contains_required(c, targets), name + ": contains a target");
                        ++specs;
                    }
        o.detail << specs << " specs";
    }

    struct UpperCase
    {
        const char * targets;
        int order;
    };

    const std::vector<UpperCase> upper_cases{
        {"P3,P3,P3", 3}, {"P5,P3", 5}, {"P5,P5", 6}, {"P7,P3", 7}, {"C6,P3", 6}, {"P5,P5,P3", 6}, {"P5,P3,P3", 5},
    };

    auto witness_ok(const Verdict & v, const std::vector<TargetGraph> & targets) -> bool
    {
        return v.kind == VerdictKind::BadColoring && v.witness && is_gallai(*v.witness) &&
               ! contains_required(*v.witness, targets);
    }

    auto upper_bound_suite(Outcome & o) -> void
    {
        double slowest = 0;
        for (auto [text, order] : upper_cases) {
            auto targets = parse_target_list(text);
            auto start = Clock::now();
            auto forced = decide_upper(order, targets);
            auto below = decide_upper(order - 1, targets);
            double seconds = std::chrono::duration<double>(Clock::now() - start).count();
            slowest = std::max(slowest, seconds);
            std::string name = std::string{text} + " at " + std::to_string(order);
            o.expect(forced.verdict.kind == VerdictKind::AllForced,
                name + ": " + verdict_name(forced.verdict.kind) + ", expected all_forced");
            o.expect(witness_ok(below.verdict, targets), name + " - 1: no valid bad coloring");
            o.expect(seconds < 60, name + ": over 60 s");
        }
        o.detail << upper_cases.size() << " cases, slowest " << slowest << " s";

        UpperCase stretch[] = {{"C6,C6", 8}, {"P5,P5,P5", 7}};
        for (auto [text, order] : stretch) {
            auto targets = parse_target_list(text);
            auto start = Clock::now();
            auto forced = decide_upper(order, targets);
            auto below = decide_upper(order - 1, targets);
            double seconds = std::chrono::duration<double>(Clock::now() - start).count();
            std::string name = std::string{text} + " at " + std::to_string(order);
            auto kind = forced.verdict.kind;
            o.expect(kind != VerdictKind::BadColoring, name + ": bad coloring at the predicted value");
            o.expect(below.verdict.kind == VerdictKind::BudgetExceeded || witness_ok(below.verdict, targets),
                name + " - 1: no valid bad coloring");
            o.expect(seconds < 1800, name + ": over 30 minutes");
            o.detail << "; stretch " << name << " " << verdict_name(kind) << " in " << seconds << " s";
        }
    }

    auto partition_suite(Outcome & o) -> void
    {
        std::mt19937_64 rng{20240601};
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 2 + static_cast<int>(rng() % 39);
            int k = 1 + static_cast<int>(rng() % 6);
            auto seed = rng();
            auto c = random_gallai(n, k, seed);
            auto name = "n=" + std::to_string(n) + " k=" + std::to_string(k) + " seed=" + std::to_string(seed);
            auto p = gallai_partition(c);
            o.expect(p.has_value(), name + ": no partition");
            if (! p)
                continue;
            auto confirmed = validate_partition(c, p->parts);
            o.expect(std::holds_alternative<GallaiPartition>(confirmed), name + ": rejected by validate_partition");
            auto reduced = reduced_graph(*p, c.palette());
            o.expect(reduced.used_colors().size() <= 2, name + ": reduced graph uses more than 2 colors");
            auto blocks = part_colorings(c, *p);
            o.expect(substitute(*p, reduced, blocks) == c, name + ": substitution does not rebuild the input");
        }
        o.detail << "1000 colorings";
    }

    auto search_suite(Outcome & o) -> void
    {
        std::vector<TargetGraph> targets;
        for (int m = 2; m <= 8; ++m)
            targets.push_back(TargetGraph::path(m));
        for (int len = 4; len <= 8; len += 2)
            targets.push_back(TargetGraph::even_cycle(len));
        for (int s = 1; s <= 4; ++s)
            targets.push_back(TargetGraph::matching(s));

        std::mt19937_64 rng{99};
        long long queries = 0;
        for (int trial = 0; trial < 500; ++trial) {
            int n = 2 + static_cast<int>(rng() % 7);
            int k = 1 + static_cast<int>(rng() % 3);
            auto c = trial % 2 ? random_gallai(n, k, rng()) : oracle::random_coloring(n, k, rng);
            for (Color j = 1; j <= k; ++j)
                for (auto t : targets) {
                    auto found = find_mono(c, j, t);
                    auto expected = oracle::least_embedding(c, j, t);
                    bool same = found.has_value() == expected.has_value() && (! found || found->vertices == *expected);
                    o.expect(same, "trial " + std::to_string(trial) + " color " + std::to_string(j) + " " + t.name());
                    ++queries;
                }
        }
        o.detail << "500 colorings, " << queries << " queries";
    }

    auto consistency_suite(Outcome & o) -> void
    {
        for (auto [text, order] : upper_cases) {
            auto list = parse_target_list(text);
            auto s = spec_from_targets(list);
            auto predicted = predicted_gr(s.spec);
            auto report = compute_gr(s.spec);
            std::string name = text;
            o.expect(predicted == order, name + ": predicted " + std::to_string(predicted));
            o.expect(report.predicted == predicted && report.status == GrStatus::Confirmed,
                name + ": compute_gr " + status_name(report.status));
            if (list.size() == 2)
                o.expect(classical_ramsey(list[0], list[1]) == predicted, name + ": classical value differs");
        }
        o.detail << upper_cases.size() << " specs";
    }
}

int main()
{
    bool all = true;
    all &= criterion(1, "formula suite", 1, formula_suite);
    all &= criterion(2, "lower-bound constructions", 120, lower_bound_suite);
    all &= criterion(3, "exhaustive upper bounds", 60 * 7 + 3600, upper_bound_suite);
    all &= criterion(4, "Gallai partition properties", 60, partition_suite);
    all &= criterion(5, "search agrees with enumeration", 120, search_suite);
    all &= criterion(6, "consistency of predicted, computed and classical values", 60, consistency_suite);
    return all ? 0 : 1;
}

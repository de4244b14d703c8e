#include <gallai/search.hh>
#include <gallai/verifier.hh>

#include "oracles.hh"

#include <doctest.h>

using namespace gallai;

namespace
{
    auto targets_of(const char * text) -> std::vector<TargetGraph> { return parse_target_list(text); }

    auto verdict(int n, const char * text, SearchOptions options = {}) -> UpperResult
    {
        auto targets = targets_of(text);
        return decide_upper(n, targets, options);
    }

    auto check_witness(const UpperResult & r, const std::vector<TargetGraph> & targets) -> void
    {
        REQUIRE(r.verdict.kind == VerdictKind::BadColoring);
        REQUIRE(r.verdict.witness);
        auto & w = *r.verdict.witness;
        CHECK(w.palette() == static_cast<int>(targets.size()));
        CHECK(is_gallai(w));
        CHECK(oracle::rainbow_free(w));
        CHECK_FALSE(contains_required(w, targets));
        if (w.order() <= 7)
            CHECK(oracle::avoids_all(w, targets));
    }
}

TEST_CASE("decide_upper examples")
{
    CHECK(verdict(3, "P3,P3,P3").verdict.kind == VerdictKind::AllForced);
    CHECK(verdict(5, "P5,P3").verdict.kind == VerdictKind::AllForced);
    check_witness(verdict(4, "P5,P3"), targets_of("P5,P3"));
    CHECK(verdict(6, "P5,P5,P3").verdict.kind == VerdictKind::AllForced);
    check_witness(verdict(5, "P5,P5,P3"), targets_of("P5,P5,P3"));
    CHECK(verdict(8, "C6,C6").verdict.kind == VerdictKind::AllForced);
    check_witness(verdict(7, "C6,C6"), targets_of("C6,C6"));
}

TEST_CASE("decide_upper on specs and matchings")
{
    CHECK(decide_upper(6, TargetSpec{3, HeadKind::Cycle, {1, 1}}).verdict.kind == VerdictKind::AllForced);
    // GR_2(M_3) = 2 * 2 + 3 + 1
    CHECK(verdict(8, "M3,M3").verdict.kind == VerdictKind::AllForced);
    check_witness(verdict(7, "M3,M3"), targets_of("M3,M3"));
    // GR_3(C_4) = 3 + 4
    CHECK(verdict(7, "C4,C4,C4").verdict.kind == VerdictKind::AllForced);
    check_witness(verdict(6, "C4,C4,C4"), targets_of("C4,C4,C4"));
}

TEST_CASE("agreement with enumeration of all colorings")
{
    std::vector<std::pair<int, const char *>> cases{
        {3, "P3,P3"}, {4, "P3,P4"}, {4, "P4,P4"}, {5, "P4,P4"}, {4, "C4,P3"}, {5, "C4,P3"},
        {4, "M2,M2"}, {5, "M2,M2"}, {3, "P3,P3,P3"}, {4, "P3,P3,P4"}, {4, "P4,P3,P3"}, {4, "P3,P3,P3,P3"},
        {5, "P3,P3,P3,P3"}, {4, "C4,C4,C4"}, {4, "M2,P3,P3"},
    };
    for (auto [n, text] : cases) {
        CAPTURE(n);
        CAPTURE(text);
        auto targets = targets_of(text);
        bool bad_exists = oracle::exists_bad_coloring(n, targets);
        for (bool symmetry : {true, false}) {
            SearchOptions options;
            options.symmetry = symmetry;
            auto r = decide_upper(n, targets, options);
            CHECK((r.verdict.kind == VerdictKind::BadColoring) == bad_exists);
            CHECK(r.verdict.kind != VerdictKind::BudgetExceeded);
            if (bad_exists)
                check_witness(r, targets);
        }
    }
}

TEST_CASE("symmetry breaking and edge order never change the verdict")
{
    std::vector<std::pair<int, const char *>> cases{
        {6, "P5,P5"}, {5, "P5,P5"}, {7, "P7,P3"}, {6, "C6,P3"}, {5, "C6,P3"}, {6, "P5,P5,P3"},
        {5, "P5,P3,P3"}, {4, "P5,P3,P3"}, {7, "P5,P5,P5"}, {6, "P5,P5,P5"}, {6, "P5,P3,P5"}, {7, "M3,M3"},
    };
    for (auto [n, text] : cases) {
        CAPTURE(n);
        CAPTURE(text);
        auto targets = targets_of(text);
        auto reference = decide_upper(n, targets).verdict.kind;
        REQUIRE(reference != VerdictKind::BudgetExceeded);

        SearchOptions plain;
        plain.symmetry = false;
        auto unbroken = decide_upper(n, targets, plain);
        CHECK(unbroken.verdict.kind == reference);

        for (std::uint64_t seed : {1u, 2u, 3u})
            for (bool symmetry : {true, false}) {
                SearchOptions shuffled;
                shuffled.edge_order_seed = seed;
                shuffled.symmetry = symmetry;
                auto r = decide_upper(n, targets, shuffled);
                CHECK(r.verdict.kind == reference);
                if (r.verdict.kind == VerdictKind::BadColoring)
                    check_witness(r, targets);
            }
    }
}

TEST_CASE("symmetry breaking shrinks the tree")
{
    SearchOptions plain;
    plain.symmetry = false;
    auto with = verdict(8, "C6,C6");
    auto without = verdict(8, "C6,C6", plain);
    CHECK(with.stats.prunes_symmetry > 0);
    CHECK(without.stats.prunes_symmetry == 0);
    CHECK(with.stats.nodes < without.stats.nodes);
}

TEST_CASE("parallel search matches the sequential result")
{
    std::vector<std::pair<int, const char *>> cases{{8, "C6,C6"}, {7, "C6,C6"}, {6, "P5,P5,P5"}, {7, "P5,P5,P5"}, {9, "P5,P5,P5"}};
    for (auto [n, text] : cases) {
        CAPTURE(n);
        CAPTURE(text);
        auto sequential = verdict(n, text);
        for (int depth : {1, 3, 6}) {
            SearchOptions options;
            options.threads = 4;
            options.split_depth = depth;
            auto parallel = verdict(n, text, options);
            CHECK(parallel.verdict.kind == sequential.verdict.kind);
            CHECK(parallel.verdict.witness == sequential.verdict.witness);
        }
    }
}

TEST_CASE("budget exhaustion is reported, not an error")
{
    SearchOptions tiny;
    tiny.budget = 10;
    auto r = verdict(8, "C6,C6", tiny);
    CHECK(r.verdict.kind == VerdictKind::BudgetExceeded);
    CHECK(r.verdict.nodes == 10);
    CHECK_FALSE(r.verdict.witness);

    tiny.threads = 3;
    CHECK(verdict(8, "C6,C6", tiny).verdict.kind == VerdictKind::BudgetExceeded);

    SearchOptions zero;
    zero.budget = 0;
    CHECK_THROWS(verdict(5, "P5,P3", zero));
    CHECK_THROWS(verdict(1, "P5,P3"));
    CHECK_THROWS(verdict(65, "P5,P3"));
}

TEST_CASE("stats")
{
    auto r = verdict(6, "P5,P5,P3");
    CHECK(r.stats.nodes >= 1);
    CHECK(r.stats.prunes_mono > 0);
    CHECK(r.stats.prunes_rainbow > 0);
    CHECK(r.stats.elapsed.count() >= 0);
    CHECK(verdict(6, "P5,P5,P3").stats.nodes == r.stats.nodes);
}

TEST_CASE("verify_lower")
{
    auto a = verify_lower(TargetSpec{3, HeadKind::Cycle, {2, 2, 2, 2}});
    CHECK(a.holds);
    CHECK(a.witness.order() == 11);

    auto b = verify_lower(TargetSpec{4, HeadKind::Cycle, {3, 3}});
    CHECK(b.holds);
    CHECK(b.witness.order() == 10);

    auto c = verify_lower(TargetSpec{3, HeadKind::Cycle, {1, 0}});
    CHECK(c.holds);
    CHECK(c.witness.order() == 4);
}

TEST_CASE("compute_gr")
{
    auto check = [](TargetSpec spec, long long expected) {
        CAPTURE(spec.to_string());
        auto report = compute_gr(spec);
        CHECK(report.predicted == expected);
        CHECK(report.lower.holds);
        CHECK(report.upper.verdict.kind == VerdictKind::AllForced);
        CHECK(report.status == GrStatus::Confirmed);
    };
    check(TargetSpec{3, HeadKind::Cycle, {1, 0}}, 5);
    check(TargetSpec{3, HeadKind::Cycle, {1, 1, 0}}, 6);
    check(TargetSpec{3, HeadKind::Cycle, {2, 0}}, 6);
    check(TargetSpec{3, HeadKind::LongPath, {2, 0}}, 7);

    SearchOptions tiny;
    tiny.budget = 5;
    auto report = compute_gr(TargetSpec{3, HeadKind::Cycle, {2, 2}}, tiny);
    CHECK(report.status == GrStatus::Inconclusive);
    CHECK(std::string{status_name(report.status)} == "inconclusive");
}

TEST_CASE("names")
{
    CHECK(std::string{verdict_name(VerdictKind::AllForced)} == "all_forced");
    CHECK(std::string{verdict_name(VerdictKind::BadColoring)} == "bad_coloring");
    CHECK(std::string{verdict_name(VerdictKind::BudgetExceeded)} == "budget");
    CHECK(std::string{status_name(GrStatus::Confirmed)} == "confirmed");
    CHECK(std::string{status_name(GrStatus::Discrepancy)} == "discrepancy");
}

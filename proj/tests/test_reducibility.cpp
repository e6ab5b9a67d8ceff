#include <doctest.h>

#include "gsq/configurations.hpp"
#include "gsq/error.hpp"
#include "gsq/ruleset.hpp"
#include "hosts.hpp"
#include "oracles.hpp"

using namespace gsq;

namespace {

ConfigurationInstance only(const Graph& g, int k, ConfigurationKind kind, DetectScope scope = DetectScope::lemma) {
    const auto found = detect(g, k, kind, scope);
    REQUIRE(found.size() >= 1);
    return found.front();
}

int initial(const ReducibilityReport& r, Vertex v) {
    for (const auto& a : r.availability)
        if (a.vertex == v) return a.initial;
    FAIL("vertex not reported");
    return 0;
}

void check_against_oracle(const Graph& g, const ConfigurationInstance& inst, int k) {
    const Reduction red = reduction_of(inst);
    const auto expected = oracle::reducible(g, red.remove, k, red.recolor);
    const auto brute = verify_reducible(g, inst, k, ReducibilityMode::brute_force, {true});
    const auto counted = verify_reducible(g, inst, k, ReducibilityMode::count_check);
    // the library replays the plan, which may be stricter than the oracle's
    // exact extension, never weaker
    if (brute.reducible) CHECK(expected.reducible);
    if (counted.reducible) CHECK(brute.reducible);
}

}  // namespace

TEST_SUITE("reducibility") {

TEST_CASE("reductions per kind") {
    const Graph g = hosts::thread_host(4, 3, 3);
    const auto c1 = only(g, 5, ConfigurationKind::C1);
    const Reduction r = reduction_of(c1);
    CHECK(r.order == std::vector<Vertex>{c1.role("u"), c1.role("v")});
    CHECK(r.greedy());
    const auto c4 = only(hosts::theta({3, 3, 3}), 5, ConfigurationKind::C4);
    const Reduction r4 = reduction_of(c4);
    CHECK(r4.remove.size() == 6);
    CHECK_FALSE(r4.greedy());
}

TEST_CASE("C1 C2 C3 at k = 5 agree with the oracle") {
    const int k = 5;
    struct Case {
        Graph g;
        ConfigurationKind kind;
    };
    const std::vector<Case> cases = {
        {hosts::thread_host(4, 3, 3), ConfigurationKind::C1},
        {hosts::thread_host(5, 3, 4), ConfigurationKind::C1},
        {hosts::thread_host(3, 4, 5), ConfigurationKind::C2},
        {hosts::thread_host(3, 3, 3), ConfigurationKind::C2},
        {hosts::thread_host(2, 4, 3), ConfigurationKind::C3},
        {hosts::thread_host(2, 3, 3), ConfigurationKind::C3},
    };
    for (const auto& c : cases) {
        const auto inst = only(c.g, k, c.kind);
        const auto brute = verify_reducible(c.g, inst, k, ReducibilityMode::brute_force);
        const auto full = verify_reducible(c.g, inst, k, ReducibilityMode::brute_force, {true});
        CHECK(brute.reducible);
        CHECK(full.reducible);
        CHECK(brute.colorings > 0);
        CHECK(oracle::reducible(c.g, reduction_of(inst).remove, k).reducible);
        const auto counted = verify_reducible(c.g, inst, k, ReducibilityMode::count_check);
        CHECK(counted.reducible);
        const int need_u = c.kind == ConfigurationKind::C1 ? 2 : 1;
        CHECK(initial(counted, inst.role("u")) >= need_u);
        CHECK(initial(counted, inst.role("v")) >= 2);
    }
}

TEST_CASE("a 4-thread at k = 2 is not reducible") {
    const Graph g = hosts::theta({4, 1, 1});
    const auto inst = only(g, 2, ConfigurationKind::C1, DetectScope::relaxed);
    const auto brute = verify_reducible(g, inst, 2, ReducibilityMode::brute_force);
    CHECK_FALSE(brute.reducible);
    CHECK(brute.stuck.has_value());
    CHECK_FALSE(verify_reducible(g, inst, 2, ReducibilityMode::count_check).reducible);
    CHECK_FALSE(oracle::reducible(g, reduction_of(inst).remove, 2).reducible);
}

TEST_CASE("cycle kinds") {
    const Graph g4 = hosts::theta({3, 3, 1});
    const auto c4 = only(g4, 5, ConfigurationKind::C4);
    CHECK(verify_reducible(g4, c4, 5, ReducibilityMode::count_check).reducible);
    CHECK(verify_reducible(g4, c4, 5, ReducibilityMode::brute_force).reducible);
    check_against_oracle(g4, c4, 5);

    const Graph g5 = hosts::theta({2, 2, 1});
    const auto c5 = only(g5, 5, ConfigurationKind::C5);
    CHECK(verify_reducible(g5, c5, 5, ReducibilityMode::brute_force).reducible);
    check_against_oracle(g5, c5, 5);

    const Graph s(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {0, 4}});
    const auto cs = only(s, 5, ConfigurationKind::Cshort);
    CHECK(verify_reducible(s, cs, 5, ReducibilityMode::brute_force).reducible);
    check_against_oracle(s, cs, 5);
}

TEST_CASE("C6 on a once-subdivided K4") {
    const Graph g = hosts::subdivided(graphs::complete(4), 1);
    const auto inst = only(g, 5, ConfigurationKind::C6);
    CHECK(verify_reducible(g, inst, 5, ReducibilityMode::count_check).reducible);
    CHECK(verify_reducible(g, inst, 5, ReducibilityMode::brute_force).reducible);
    check_against_oracle(g, inst, 5);
}

TEST_CASE("guards") {
    const Graph big = hosts::thread_host(4, 6, 6);
    const auto inst = only(big, 6, ConfigurationKind::C1);
    CHECK_THROWS_AS(verify_reducible(big, inst, 6, ReducibilityMode::brute_force), GuardError);
    CHECK(verify_reducible(big, inst, 6, ReducibilityMode::count_check).reducible);
    auto broken = inst;
    broken.roles["v"] = {0};
    CHECK_THROWS_AS(verify_reducible(big, broken, 6, ReducibilityMode::count_check), PreconditionError);
}

TEST_CASE("local patterns on their hosts") {
    std::vector<RuleSet> sets = {builtin_ruleset(Theorem::delta5), builtin_ruleset(Theorem::delta6),
                                 builtin_ruleset(Theorem::delta7)};
    for (int k : {8, 9, 11, 15, 19, 23}) sets.push_back(builtin_ruleset(Theorem::deltaK, k));
    for (const RuleSet& rules : sets) {
        for (const auto& p : rules.patterns) {
            CAPTURE(p.id);
            CAPTURE(rules.k);
            const Graph g = hosts::pattern_host(p, rules.k);
            std::optional<ConfigurationInstance> inst;
            for (auto& found : detect_local(g, rules))
                if (found.role("v") == 0 && found.pattern->id == p.id) inst = found;
            REQUIRE(inst.has_value());
            const bool small = g.vertex_count() <= 12 && rules.k <= 6;
            const auto mode = small ? ReducibilityMode::brute_force : ReducibilityMode::count_check;
            const auto report = verify_reducible(g, *inst, rules.k, mode);
            CAPTURE(report.detail);
            CHECK(report.reducible);
            if (small) check_against_oracle(g, *inst, rules.k);
        }
    }
}

}

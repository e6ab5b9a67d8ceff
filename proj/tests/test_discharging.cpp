#include <doctest.h>

#include <set>
#include <sstream>

#include "gsq/discharging.hpp"
#include "gsq/error.hpp"
#include "gsq/extremal.hpp"
#include "hosts.hpp"

using namespace gsq;

namespace {

Rational total(const std::vector<Rational>& xs) {
    Rational s = 0;
    for (const auto& x : xs) s += x;
    return s;
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep)) out.push_back(cur);
    return out;
}

// The endpoint sponsoring the only sponsored thread.
Vertex sponsor_of(const ChargeLedger& ledger) {
    for (const auto& t : ledger.transfers)
        if (t.rule == "sponsor") return t.sender;
    FAIL("no sponsorship");
    return -1;
}

}  // namespace

TEST_SUITE("discharging") {

TEST_CASE("classes") {
    const Graph g = hosts::theta({1, 1, 1, 1, 1});
    const RuleSet d6 = builtin_ruleset(Theorem::delta6);
    CHECK(classify(g, 0, d6).kind == VertexClassKind::high);
    CHECK(classify(g, 2, d6).kind == VertexClassKind::two_vertex);
    CHECK(classify(hosts::theta({1, 1, 1}), 0, d6).kind == VertexClassKind::medium);
    const RuleSet d5 = builtin_ruleset(Theorem::delta5);
    CHECK(classify(g, 0, d5).kind == VertexClassKind::unclassified);
    CHECK(to_string(VertexClassKind::two_vertex) == "two");
    CHECK_THROWS_AS(classify(hosts::theta({1, 1, 1, 1, 1, 1, 1}), 0, d6), PreconditionError);
}

TEST_CASE("sponsorship on a forest and on a cycle") {
    // a path of three 6-vertices joined by 3-threads: two sponsorships
    hosts::Builder b;
    const Vertex x = b.add(), y = b.add(), z = b.add();
    b.thread(x, y, 3);
    b.thread(y, z, 3);
    b.thread(z, x, 1);
    for (Vertex v : {x, y, z}) b.leaves(v, 4);
    Graph g = b.build();
    ThreadSet ts(g);
    auto map = assign_sponsors(g, ts, 3, {6, 6});
    CHECK(map.sponsor.size() == 2);
    std::set<Vertex> sponsors;
    for (auto [t, s] : map.sponsor) sponsors.insert(s);
    CHECK(sponsors.size() == 2);

    // three 3-threads between two vertices: more links than nodes
    const Graph over = hosts::theta({3, 3, 3});
    CHECK_THROWS_AS(assign_sponsors(over, ThreadSet(over), 3, {3, 3}), ReducibleConfigurationError);
    // two of them form a cycle and each end sponsors one
    const Graph two = hosts::theta({3, 3, 1});
    const auto m2 = assign_sponsors(two, ThreadSet(two), 3, {3, 3});
    REQUIRE(m2.sponsor.size() == 2);
    CHECK(m2.sponsor.begin()->second != std::next(m2.sponsor.begin())->second);
}

TEST_CASE("six directions and a sponsorship leave 5/2 at a 6-vertex") {
    const Graph g = hosts::theta({3, 1, 1, 1, 1, 1});
    const RuleSet rules = builtin_ruleset(Theorem::delta6);
    const ChargeLedger ledger = apply(g, rules);
    const Vertex s = sponsor_of(ledger);
    CHECK(ledger.final_charge[s] == Rational(6) - 6 * Rational(1, 2) - Rational(1, 2));
    CHECK(ledger.final_charge[s] == Rational(5, 2));
    CHECK(ledger.sent(s) == Rational(7, 2));
    CHECK(total(ledger.final_charge) == Rational(2 * static_cast<long long>(g.edge_count())));
}

TEST_CASE("five threads and a sponsorship at a 5-vertex") {
    const Graph g = hosts::theta({3, 1, 1, 1, 1});
    const ChargeLedger ledger = apply(g, builtin_ruleset(Theorem::delta5));
    const Vertex s = sponsor_of(ledger);
    CHECK(ledger.final_charge[s] == Rational(5) - 5 * Rational(13, 29) - Rational(10, 29));
    CHECK(ledger.final_charge[s] == Rational(2) + Rational(12, 29));
}

TEST_CASE("a 3-thread between 7-vertices") {
    const Graph g = hosts::theta({3, 1, 1, 1, 1, 1, 1});
    const ChargeLedger ledger = apply(g, builtin_ruleset(Theorem::delta7));
    int three = -1;
    for (std::size_t t = 0; t < ledger.threads.threads().size(); ++t)
        if (ledger.threads.threads()[t].length() == 3) three = static_cast<int>(t);
    REQUIRE(three >= 0);
    CHECK(ledger.thread_charge[three] == 3 * (Rational(2) + Rational(20, 37)));
    CHECK(ledger.received({Recipient::Kind::thread, three}) == Rational(60, 37));
}

TEST_CASE("preconditions") {
    const RuleSet d6 = builtin_ruleset(Theorem::delta6);
    CHECK_THROWS_AS(apply(graphs::path(4), d6), PreconditionError);
    CHECK_THROWS_AS(apply(graphs::cycle(6), d6), PreconditionError);
    CHECK_THROWS_AS(apply(hosts::theta({1, 1, 1, 1, 1, 1, 1}), d6), PreconditionError);
}

TEST_CASE("conservation on the examples") {
    for (bool contracted : {false, true}) {
        const auto c = example2(8, 3, 4, contracted);
        const ChargeLedger ledger = apply(c.graph, builtin_ruleset(Theorem::deltaK, 8));
        CHECK(total(ledger.final_charge) == Rational(2 * static_cast<long long>(c.graph.edge_count())));
        Rational threads = 0;
        for (std::size_t t = 0; t < ledger.threads.threads().size(); ++t) {
            Rational share = 0;
            for (Vertex x : ledger.threads.threads()[t].internal) share += ledger.final_charge[x];
            CHECK(share == ledger.thread_charge[t]);
        }
    }
}

TEST_CASE("verify passes on contracted witnesses") {
    const auto e8 = example2(8, 3, 1, true);
    const auto r8 = verify(e8.graph, builtin_ruleset(Theorem::deltaK, 8));
    CHECK(r8.pass);
    CHECK(*r8.min_charge == Rational(18, 7));
    const auto e6 = example2(6, 3, 1, true);
    const auto r6 = verify(e6.graph, builtin_ruleset(Theorem::delta6));
    CHECK(r6.pass);
    CHECK(*r6.min_charge >= Rational(5, 2));
}

TEST_CASE("deficient entities name nearby configurations") {
    const Graph g = hosts::theta({2, 2, 2});
    const RuleSet d6 = builtin_ruleset(Theorem::delta6);
    const auto report = verify(g, d6);
    CHECK_FALSE(report.pass);
    REQUIRE_FALSE(report.deficient.empty());
    bool named = false;
    for (const auto& d : report.deficient) named |= !d.configurations.empty();
    CHECK(named);
    const std::string text = format_report(g, d6, report, ReportFormat::text);
    CHECK(text.find("FAIL: min charge") != std::string::npos);
    CHECK(text.find("below 2+1/2") != std::string::npos);
}

TEST_CASE("tsv report parses back") {
    const auto c = example2(6, 2, 9, true);
    const RuleSet rules = builtin_ruleset(Theorem::delta6);
    const auto report = verify(c.graph, rules);
    std::istringstream in(format_report(c.graph, rules, report, ReportFormat::tsv));
    std::string line;
    std::getline(in, line);
    CHECK(line == "vertex\tdegree\tclass\tcharge");
    Rational sum = 0;
    int rows = 0;
    while (std::getline(in, line)) {
        const auto f = split(line, '\t');
        if (f[0] == "PASS" || f[0] == "FAIL") {
            CHECK((f[0] == "PASS") == report.pass);
            CHECK(f[2] == to_mixed_string(rules.threshold));
            break;
        }
        if (f[0] == "deficient") continue;
        REQUIRE(f.size() == 4);
        const Vertex v = std::stoi(f[0]);
        CHECK(v == rows);
        CHECK(std::stoi(f[1]) == c.graph.degree(v));
        CHECK(parse_rational(f[3]) == report.ledger.final_charge[v]);
        sum += parse_rational(f[3]);
        ++rows;
    }
    CHECK(rows == c.graph.vertex_count());
    CHECK(sum == Rational(2 * static_cast<long long>(c.graph.edge_count())));
}

}

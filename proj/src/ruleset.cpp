#include "gsq/ruleset.hpp"

#include <algorithm>

#include "gsq/error.hpp"
#include "gsq/mad.hpp"

namespace gsq {

std::string to_string(Theorem t) {
    switch (t) {
        case Theorem::delta5: return "delta5";
        case Theorem::delta6: return "delta6";
        case Theorem::delta7: return "delta7";
        case Theorem::deltaK: return "deltaK";
    }
    return "?";
}

std::optional<Theorem> parse_theorem(const std::string& name) {
    if (name == "delta5") return Theorem::delta5;
    if (name == "delta6") return Theorem::delta6;
    if (name == "delta7") return Theorem::delta7;
    if (name == "deltaK") return Theorem::deltaK;
    return std::nullopt;
}

Theorem theorem_for_degree(int k) {
    if (k < 5) throw PreconditionError("no discharging program for maximum degree " + std::to_string(k));
    if (k == 5) return Theorem::delta5;
    if (k == 6) return Theorem::delta6;
    if (k == 7) return Theorem::delta7;
    return Theorem::deltaK;
}

bool selects(const Selector& s, const Graph& g, const Direction& d) {
    switch (s.kind) {
        case SelectorKind::each_direction: return true;
        case SelectorKind::each_direction_except_2_thread: return !(d.enters_thread() && d.thread_length == 2);
        case SelectorKind::incident_thread:
            return d.enters_thread() && (s.thread_length == 0 || d.thread_length == s.thread_length) &&
                   (!s.target || s.target->contains(g.degree(d.far)));
        case SelectorKind::adjacent_vertex:
            return !d.enters_thread() && (!s.target || s.target->contains(g.degree(d.neighbor)));
    }
    return false;
}

std::optional<DegreeRange> RuleSet::class_range(const std::string& name) const {
    for (const auto& [n, r] : classes)
        if (n == name) return r;
    return std::nullopt;
}

namespace {

std::string range_key(const DegreeRange& r) { return std::to_string(r.lo) + ".." + std::to_string(r.hi); }

std::string selector_key(const Selector& s) {
    std::string out = std::to_string(static_cast<int>(s.kind)) + ":" + std::to_string(s.thread_length);
    if (s.target) out += ":" + range_key(*s.target);
    return out;
}

std::string rule_key(const Rule& r) {
    return r.label + "|" + range_key(r.sender) + "|" + selector_key(r.selector) + "|" + to_string(r.amount);
}

}  // namespace

void RuleSet::canonicalize() {
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    std::stable_sort(rules.begin(), rules.end(),
                     [](const Rule& a, const Rule& b) { return rule_key(a) < rule_key(b); });
    std::stable_sort(sponsors.begin(), sponsors.end(), [](const Sponsorship& a, const Sponsorship& b) {
        return std::make_pair(a.thread_length, range_key(a.sponsor)) <
               std::make_pair(b.thread_length, range_key(b.sponsor));
    });
    std::stable_sort(patterns.begin(), patterns.end(),
                     [](const LocalPattern& a, const LocalPattern& b) { return a.id < b.id; });
}

namespace {

DegreeRange deg(int lo, int hi) { return {lo, hi}; }
DegreeRange deg(int d) { return {d, d}; }

Selector each() { return {SelectorKind::each_direction, 0, std::nullopt}; }
Selector each_but_2_thread() { return {SelectorKind::each_direction_except_2_thread, 0, std::nullopt}; }
Selector thread(int length = 0) { return {SelectorKind::incident_thread, length, std::nullopt}; }
Selector thread_to(int length, DegreeRange weak) { return {SelectorKind::incident_thread, length, weak}; }
Selector vertex(DegreeRange r) { return {SelectorKind::adjacent_vertex, 0, r}; }

LocalPattern pattern(std::string id, int root, std::vector<Selector> slots, ReductionPlan plan) {
    return {std::move(id), deg(root), std::move(slots), std::move(plan)};
}

// Reduction plans shared by several patterns.
ReductionPlan recolor_root_then(const std::string& slot) { return {{slot}, {"v"}, {"v", slot}}; }
ReductionPlan slot_then_recolor_root(const std::string& slot) { return {{slot}, {"v"}, {slot, "v"}}; }
ReductionPlan remove_and_order(std::vector<std::string> order) {
    std::vector<std::string> removed = order;
    std::sort(removed.begin(), removed.end());
    return {removed, {}, std::move(order)};
}

RuleSet delta5() {
    RuleSet rs;
    rs.theorem = Theorem::delta5;
    rs.k = 5;
    rs.threshold = mad_threshold(5);
    rs.rules = {
        {"R1", deg(5), thread(), Rational(13, 29)},
        {"R1", deg(5), vertex(deg(3)), Rational(13, 29)},
        {"R2", deg(4), thread(), Rational(11, 29)},
        {"R2", deg(4), vertex(deg(3)), Rational(11, 29)},
        {"R3", deg(3), thread(2), Rational(11, 29)},
        {"R3", deg(3), thread_to(1, deg(4)), Rational(1, 29)},
    };
    rs.sponsors = {
        {3, deg(5), Rational(10, 29)},
        {2, deg(4), Rational(2, 29)},
        {1, deg(3), Rational(12, 29)},
    };
    rs.patterns = {
        // 3-vertex whose three neighbors are 2-vertices, one of them on a 2-thread
        pattern("D5-3a", 3, {thread(2), thread(), thread()}, recolor_root_then("s0")),
        // 3-neighbor plus two incident 2-threads
        pattern("D5-3b", 3, {vertex(deg(3)), thread(2), thread(2)}, remove_and_order({"v", "s2", "s1"})),
        // 3-neighbor, a 2-thread and a 1-thread to a weak 3-neighbor
        pattern("D5-3c", 3, {vertex(deg(3)), thread(2), thread_to(1, deg(3))},
                remove_and_order({"v", "s2", "s1"})),
    };
    rs.canonicalize();
    return rs;
}

RuleSet delta6() {
    RuleSet rs;
    rs.theorem = Theorem::delta6;
    rs.k = 6;
    rs.threshold = mad_threshold(6);
    const DegreeRange high = deg(5, 6), medium = deg(3, 4);
    rs.classes = {{"high", high}, {"medium", medium}};
    rs.rules = {
        {"R1", high, each(), Rational(1, 2)},
        {"R3", medium, thread(2), Rational(1, 2)},
        {"R3", medium, thread_to(1, medium), Rational(1, 4)},
    };
    rs.sponsors = {{3, deg(6), Rational(1, 2)}};
    rs.patterns = {
        // 4-vertex giving 1/2 in at least three directions and charge in all four
        pattern("D6-4a", 4, {thread(2), thread(2), thread(2), thread(2)},
                remove_and_order({"v", "s0", "s1", "s2", "s3"})),
        pattern("D6-4b", 4, {thread_to(1, medium), thread(2), thread(2), thread(2)},
                remove_and_order({"s0", "v", "s1", "s2", "s3"})),
        // 3-vertex with three 2-neighbors, one on a 2-thread
        pattern("D6-3a", 3, {thread(2), thread(), thread()}, recolor_root_then("s0")),
        // 3-vertex with three 1-threads to medium weak neighbors
        pattern("D6-3b", 3, {thread_to(1, medium), thread_to(1, medium), thread_to(1, medium)},
                remove_and_order({"s0", "s1", "s2", "v"})),
        // one medium neighbor, a 2-thread and a 2-thread or a 1-thread to a medium vertex
        pattern("D6-3c", 3, {vertex(medium), thread(2), thread(2)}, remove_and_order({"v", "s2", "s1"})),
        pattern("D6-3d", 3, {vertex(medium), thread(2), thread_to(1, medium)},
                remove_and_order({"v", "s2", "s1"})),
    };
    rs.canonicalize();
    return rs;
}

RuleSet delta7() {
    RuleSet rs;
    rs.theorem = Theorem::delta7;
    rs.k = 7;
    rs.threshold = mad_threshold(7);
    const DegreeRange high = deg(6, 7), medium = deg(4, 5);
    rs.classes = {{"high", high}, {"medium", medium}};
    rs.rules = {
        {"R1", high, each(), Rational(21, 37)},
        {"R3", deg(5), thread(2), Rational(20, 37)},
        {"R3", deg(5), each_but_2_thread(), Rational(10, 37)},
        {"R4", deg(4), thread(2), Rational(20, 37)},
        {"R4", deg(4), thread(1), Rational(10, 37)},
        {"R4", deg(4), vertex(deg(3)), Rational(4, 37)},
        {"R5", deg(3), thread(2), Rational(19, 37)},
        {"R5", deg(3), thread_to(1, deg(3, 5)), Rational(10, 37)},
    };
    rs.sponsors = {{3, deg(7), Rational(18, 37)}};
    rs.patterns = {
        pattern("D7-5a", 5, {thread(2), thread(2), thread(2), thread(2), thread(2)},
                remove_and_order({"v", "s0", "s1", "s2", "s3", "s4"})),
        pattern("D7-4a", 4, {thread(2), thread(2), thread(1), thread(1)}, recolor_root_then("s0")),
        pattern("D7-4b", 4, {thread(2), thread(2), thread(2), thread()},
                {{"v"}, {"s0", "s1", "s2"}, {"v", "s0", "s1", "s2"}}),
        pattern("D7-4c", 4, {thread(2), thread(2), thread(2), vertex(deg(3, 4))},
                {{"v"}, {"s0", "s1", "s2"}, {"v", "s0", "s1", "s2"}}),
        pattern("D7-3a", 3, {thread(2), thread(), thread()}, recolor_root_then("s0")),
        pattern("D7-3b", 3, {thread_to(1, deg(3, 5)), thread(), thread()}, slot_then_recolor_root("s0")),
        pattern("D7-3c", 3, {thread(2), vertex(deg(3)), vertex(deg(3))}, recolor_root_then("s0")),
        pattern("D7-3d", 3, {thread(2), thread(2), vertex(deg(3, 5))}, remove_and_order({"v", "s0", "s1"})),
        pattern("D7-3e", 3, {thread(2), thread(1), vertex(deg(3, 4))}, recolor_root_then("s0")),
        pattern("D7-3f", 3, {thread(2), thread_to(1, deg(3, 5)), vertex(deg(3, 5))},
                remove_and_order({"v", "s1", "s0"})),
        pattern("D7-3g", 3, {thread_to(1, deg(3, 5)), thread_to(1, deg(3, 5)), vertex(deg(3))},
                remove_and_order({"s0", "s1", "v"})),
    };
    rs.canonicalize();
    return rs;
}

RuleSet deltaK(int k) {
    RuleSet rs;
    rs.theorem = Theorem::deltaK;
    rs.k = k;
    rs.threshold = mad_threshold(k);
    const Rational alpha = main_threshold(k);
    const Rational b = beta(k);
    const int medium_lo = 7 - 16 / (k + 2);
    const DegreeRange high = deg(k - 1, k), medium = deg(medium_lo, k - 2), low = deg(3, medium_lo - 1);
    const DegreeRange mid_or_low = deg(3, k - 2);
    rs.classes = {{"high", high}, {"low", low}, {"medium", medium}};
    rs.rules = {
        {"R1", high, each(), b},
        {"R3", medium, each(), 2 * alpha - b},
        {"R4", low, thread(2), 2 * alpha - b},
        {"R4", low, thread_to(1, low), alpha / 2},
        {"R4", low, thread_to(1, medium), b - alpha},
        {"R5", deg(5), vertex(deg(3)), Rational(8, 5 * k + 2)},
        {"R5", deg(4), vertex(deg(3)), Rational(4, 5 * k + 2)},
    };
    rs.sponsors = {{3, deg(k), 3 * alpha - 2 * b}};

    auto& p = rs.patterns;
    if (k >= 15)
        p.push_back(pattern("DK-6a", 6, {thread(2), thread(2), thread(2), thread(2), thread(2), thread()},
                            remove_and_order({"v", "s0", "s1", "s2", "s3", "s4"})));
    p.push_back(pattern("DK-5a", 5, {thread(2), thread(2), thread(), thread(), thread()},
                        {{"s0", "s1"}, {"v"}, {"v", "s0", "s1"}}));
    if (k >= 15)
        p.push_back(pattern("DK-5b", 5, {thread(2), thread(2), thread(2), thread(2), vertex(low)},
                            remove_and_order({"v", "s0", "s1", "s2", "s3"})));
    p.push_back(pattern("DK-4a", 4, {thread(2), thread(), thread(), thread()}, recolor_root_then("s0")));
    if (k >= 15)
        p.push_back(pattern("DK-4b", 4, {thread_to(1, low), thread(1), thread(1), thread(1)},
                            recolor_root_then("s0")));
    p.push_back(pattern("DK-4c", 4, {thread(2), thread(2), thread(2), vertex(low)},
                        remove_and_order({"v", "s0", "s1", "s2"})));
    if (k >= 19)
        p.push_back(pattern("DK-4d", 4, {thread(2), thread(1), thread(1), vertex(low)}, recolor_root_then("s0")));
    p.push_back(pattern("DK-4e", 4, {thread(2), thread(2), thread(1), vertex(deg(3))}, recolor_root_then("s0")));
    if (k >= 11)
        p.push_back(pattern("DK-4f", 4, {thread(2), thread(2), thread(1), vertex(deg(4, medium_lo - 1))},
                            recolor_root_then("s0")));
    p.push_back(pattern("DK-3a", 3, {thread(2), thread(), thread()}, slot_then_recolor_root("s0")));
    p.push_back(pattern("DK-3b", 3, {thread_to(1, mid_or_low), thread(), thread()}, slot_then_recolor_root("s0")));
    p.push_back(pattern("DK-3c", 3, {thread(2), thread(2), vertex(mid_or_low)}, remove_and_order({"v", "s0", "s1"})));
    p.push_back(pattern("DK-3d", 3, {thread(2), thread(1), vertex(low)}, recolor_root_then("s0")));
    p.push_back(pattern("DK-3e", 3, {thread(2), thread_to(1, low), vertex(medium)}, remove_and_order({"v", "s1", "s0"})));
    p.push_back(pattern("DK-3f", 3, {thread_to(1, low), thread(1), vertex(low)}, recolor_root_then("s0")));
    if (k >= 23)
        p.push_back(pattern("DK-3g", 3, {thread_to(1, medium), thread_to(1, medium), vertex(low)},
                            remove_and_order({"s0", "s1", "v"})));
    if (k >= 15)
        p.push_back(pattern("DK-3h", 3, {thread_to(1, mid_or_low), vertex(low), vertex(low)},
                            slot_then_recolor_root("s0")));
    if (k >= 11)
        p.push_back(pattern("DK-3i", 3, {thread(2), vertex(low), vertex(low)}, recolor_root_then("s0")));
    if (k >= 9 && k <= 10)
        p.push_back(pattern("DK-3j", 3, {thread(2), vertex(deg(3, 4)), vertex(deg(3, 4))}, recolor_root_then("s0")));
    p.push_back(pattern("DK-3k", 3, {thread(2), vertex(deg(3)), vertex(deg(3))}, recolor_root_then("s0")));
    rs.canonicalize();
    return rs;
}

}  // namespace

RuleSet builtin_ruleset(Theorem theorem, std::optional<int> k) {
    auto fixed = [&](int expected) {
        if (k && *k != expected)
            throw PreconditionError(to_string(theorem) + " is defined for k = " + std::to_string(expected));
    };
    switch (theorem) {
        case Theorem::delta5: fixed(5); return delta5();
        case Theorem::delta6: fixed(6); return delta6();
        case Theorem::delta7: fixed(7); return delta7();
        case Theorem::deltaK:
            if (!k || *k < 8) throw PreconditionError("deltaK needs k >= 8");
            return deltaK(*k);
    }
    throw PreconditionError("unknown theorem");
}

}  // namespace gsq

#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gsq/rational.hpp"
#include "gsq/threads.hpp"

namespace gsq {

/// The four discharging programs: maximum degree 5, 6, 7 and k >= 8.
enum class Theorem { delta5, delta6, delta7, deltaK };

std::string to_string(Theorem t);
std::optional<Theorem> parse_theorem(const std::string& name);

/// Theorem whose rule set covers maximum degree `k` (k >= 5).
Theorem theorem_for_degree(int k);

/// Inclusive degree interval; empty when lo > hi.
struct DegreeRange {
    int lo = 0;
    int hi = -1;

    bool contains(int d) const noexcept { return lo <= d && d <= hi; }
    bool empty() const noexcept { return lo > hi; }
    friend bool operator==(const DegreeRange&, const DegreeRange&) = default;
};

/// Which directions of a sender a rule (or a pattern slot) addresses.
///
/// A direction is one incident edge. It enters a thread when the neighbor
/// is a 2-vertex, and otherwise leads to the adjacent 3+-vertex.
enum class SelectorKind {
    each_direction,                  // every incident edge
    each_direction_except_2_thread,  // every edge not entering a 2-thread
    incident_thread,                 // edges entering a thread
    adjacent_vertex,                 // edges to a 3+-vertex
};

struct Selector {
    SelectorKind kind = SelectorKind::each_direction;
    /// incident_thread only: required thread length, 0 for any.
    int thread_length = 0;
    /// incident_thread: degree range of the weak neighbor at the far end.
    /// adjacent_vertex: degree range of the neighbor (always set).
    std::optional<DegreeRange> target;

    friend bool operator==(const Selector&, const Selector&) = default;
};

/// Whether direction `d` of a vertex of `g` is addressed by `s`.
bool selects(const Selector& s, const Graph& g, const Direction& d);

struct Rule {
    std::string label;
    DegreeRange sender;
    Selector selector;
    Rational amount;

    friend bool operator==(const Rule&, const Rule&) = default;
};

/// Threads of `thread_length` with both endpoints in `sponsor` get one
/// endpoint assigned as sponsor, which sends them `amount` extra.
struct Sponsorship {
    int thread_length = 0;
    DegreeRange sponsor;
    Rational amount;

    friend bool operator==(const Sponsorship&, const Sponsorship&) = default;
};

/// How a local pattern is reduced: delete `remove` from the graph, color the
/// rest by minimality, uncolor `recolor`, then color `order` greedily.
/// Roles are "v" (the root) and "s<i>" (the neighbor matched by slot i).
struct ReductionPlan {
    std::vector<std::string> remove;
    std::vector<std::string> recolor;
    std::vector<std::string> order;

    friend bool operator==(const ReductionPlan&, const ReductionPlan&) = default;
};

/// A rooted degree/thread template. Matches a vertex v with degree in
/// `root` when the slots can be assigned to distinct directions of v.
/// Slots use incident_thread or adjacent_vertex selectors.
struct LocalPattern {
    std::string id;
    DegreeRange root;
    std::vector<Selector> slots;
    ReductionPlan plan;

    friend bool operator==(const LocalPattern&, const LocalPattern&) = default;
};

/// A discharging program instantiated at a fixed maximum degree k.
struct RuleSet {
    Theorem theorem = Theorem::delta5;
    int k = 5;
    Rational threshold;
    /// Named degree classes, sorted by name ("high", "medium", "low", ...).
    std::vector<std::pair<std::string, DegreeRange>> classes;
    std::vector<Rule> rules;
    std::vector<Sponsorship> sponsors;
    /// Local reducible patterns active at this k.
    std::vector<LocalPattern> patterns;

    std::optional<DegreeRange> class_range(const std::string& name) const;

    /// Sorts every list into the canonical order used for comparison.
    void canonicalize();

    friend bool operator==(const RuleSet&, const RuleSet&) = default;
};

/// The built-in rule set for a theorem. `k` is required for deltaK
/// (k >= 8) and must be omitted or equal to 5/6/7 for the others.
RuleSet builtin_ruleset(Theorem theorem, std::optional<int> k = std::nullopt);

}  // namespace gsq

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsq/graph.hpp"
#include "gsq/ruleset.hpp"

namespace gsq {

/// C0 is a 1^- -vertex; C1-C6 are the lemma configurations; Cshort is a
/// 3-, 4- or 5-cycle with at most one 3^+-vertex; Local is a pattern from a
/// rule set's catalog.
enum class ConfigurationKind { C0, C1, C2, C3, C4, C5, C6, Cshort, Local };

std::string to_string(ConfigurationKind kind);
std::optional<ConfigurationKind> parse_configuration_kind(const std::string& name);

/// A located configuration. Roles by kind:
///   C0      v
///   C1      thread, ends, u, v      (u, v: the middle pair of a 4-subpath)
///   C2      thread, ends, u, v, w   (u next to an end of degree <= k-1)
///   C3      thread, ends, u, v      (u, v next to ends of degree <= k-1, <= k-2)
///   C4, C5  cycle                   (v_1 ... v_n; anchors at every 4th / 3rd place)
///   C6      cycle, pivot, extra     (cycle alternates 2- and 3-vertices,
///                                    starting with a 2-vertex; extra = the
///                                    pivot's third 2-neighbor and its far end)
///   Cshort  cycle, anchor           (anchor: the 3^+-vertex, when present)
///   Local   v, s0, s1, ...          (root and the neighbor matched by each slot)
struct ConfigurationInstance {
    ConfigurationKind kind = ConfigurationKind::C0;
    std::map<std::string, std::vector<Vertex>> roles;
    /// Local only: the matched pattern.
    std::optional<LocalPattern> pattern;

    Vertex role(const std::string& name) const;
    friend bool operator==(const ConfigurationInstance&, const ConfigurationInstance&) = default;
};

/// lemma: reject k outside the lemma scopes (k >= 4 for C0-C3 and Cshort,
/// k >= 5 for C4-C6). relaxed: accept any k >= 2.
enum class DetectScope { lemma, relaxed };

std::vector<ConfigurationInstance> detect(const Graph& g, int k, ConfigurationKind kind,
                                          DetectScope scope = DetectScope::lemma);

/// C0-C6 and Cshort, in that order.
std::vector<ConfigurationInstance> detect_all(const Graph& g, int k, DetectScope scope = DetectScope::lemma);

/// Instances of the local patterns of `rules`, by root then catalog order.
std::vector<ConfigurationInstance> detect_local(const Graph& g, const RuleSet& rules);

/// Re-checks the role constraints of `inst` against `g`; throws
/// PreconditionError naming the first violated constraint.
void revalidate(const Graph& g, const ConfigurationInstance& inst, int k);

/// The recoloring argument attached to an instance: delete `remove`, color
/// the rest by minimality, uncolor `recolor`, then either color `order`
/// greedily or (when `order` is empty) color the uncolored part at once.
struct Reduction {
    std::vector<Vertex> remove;
    std::vector<Vertex> recolor;
    std::vector<Vertex> order;

    bool greedy() const noexcept { return !order.empty(); }
};

Reduction reduction_of(const ConfigurationInstance& inst);

enum class ReducibilityMode { count_check, brute_force };

/// Availability of one vertex that the reduction leaves uncolored.
struct Availability {
    Vertex vertex;
    /// k+1 minus the G^2-neighbors colored before the reduction starts.
    int initial;
    /// Greedy plans: k+1 minus the G^2-neighbors colored at its turn.
    std::optional<int> at_turn;
};

struct ReducibilityReport {
    bool reducible = false;
    ReducibilityMode mode = ReducibilityMode::count_check;
    std::vector<Availability> availability;
    /// First vertex that can be left without a color.
    std::optional<Vertex> stuck;
    /// Brute force: boundary colorings examined.
    long long colorings = 0;
    std::string detail;
};

struct BruteForceOptions {
    /// Use |V|(k+1) boundary colors instead of k+3.
    bool full_universe = false;
};

/// Checks that every (k+1)-list coloring of the reduced graph's square
/// extends to G^2 along the instance's reduction.
///
/// count_check works from worst-case neighbor counts. brute_force
/// enumerates every coloring of the colored G^2-neighbors of the reduction
/// up to color renaming and replays the extension against adversarial
/// lists; it requires |V(g)| <= 12 and k <= 6.
ReducibilityReport verify_reducible(const Graph& g, const ConfigurationInstance& inst, int k,
                                    ReducibilityMode mode, BruteForceOptions options = {});

}  // namespace gsq

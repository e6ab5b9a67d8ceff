#include "gsq/configurations.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "gsq/error.hpp"
#include "gsq/threads.hpp"

namespace gsq {

namespace {

const char* const kind_names[] = {"C0", "C1", "C2", "C3", "C4", "C5", "C6", "Cshort", "Local"};

}  // namespace

std::string to_string(ConfigurationKind kind) { return kind_names[static_cast<int>(kind)]; }

std::optional<ConfigurationKind> parse_configuration_kind(const std::string& name) {
    for (int i = 0; i < 9; ++i)
        if (name == kind_names[i]) return static_cast<ConfigurationKind>(i);
    return std::nullopt;
}

Vertex ConfigurationInstance::role(const std::string& name) const {
    auto it = roles.find(name);
    if (it == roles.end() || it->second.size() != 1)
        throw PreconditionError("instance has no single-vertex role '" + name + "'");
    return it->second.front();
}

namespace {

void check_scope(int k, ConfigurationKind kind, DetectScope scope) {
    if (scope == DetectScope::relaxed) {
        if (k < 2) throw PreconditionError("k must be at least 2");
        return;
    }
    const bool cycle_kind =
        kind == ConfigurationKind::C4 || kind == ConfigurationKind::C5 || kind == ConfigurationKind::C6;
    const int least = cycle_kind ? 5 : 4;
    if (k < least)
        throw PreconditionError(to_string(kind) + " is reducible only for k >= " + std::to_string(least));
}

// Internal vertices listed from the end `from`.
std::vector<Vertex> oriented_internal(const Thread& t, Vertex from) {
    if (t.first == from) return t.internal;
    return {t.internal.rbegin(), t.internal.rend()};
}

ConfigurationInstance thread_instance(ConfigurationKind kind, const Thread& t) {
    ConfigurationInstance inst;
    inst.kind = kind;
    inst.roles["thread"] = t.internal;
    inst.roles["ends"] = {t.first, t.last};
    return inst;
}

// Closed vertex sequence of a multigraph cycle: each link's internal
// vertices followed by the node it arrives at.
std::vector<Vertex> cycle_sequence(const ThreadSet& ts, const ThreadMultigraph& mg, const MultigraphCycle& c) {
    std::vector<Vertex> seq;
    const std::size_t m = c.nodes.size();
    for (std::size_t i = 0; i < m; ++i) {
        const Thread& t = ts.threads()[mg.links[c.links[i]]];
        const Vertex from = c.nodes[i], to = c.nodes[(i + 1) % m];
        const auto inner = oriented_internal(t, from);
        seq.insert(seq.end(), inner.begin(), inner.end());
        seq.push_back(to);
    }
    return seq;
}

std::vector<ConfigurationInstance> cycle_instances(const Graph& g, const ThreadSet& ts, ConfigurationKind kind,
                                                   int length, const std::function<bool(Vertex)>& accept) {
    const auto mg = thread_multigraph(g, ts, length, accept);
    std::vector<ConfigurationInstance> out;
    for (const auto& c : fundamental_cycles(mg)) {
        ConfigurationInstance inst;
        inst.kind = kind;
        inst.roles["cycle"] = cycle_sequence(ts, mg, c);
        out.push_back(std::move(inst));
    }
    return out;
}

std::vector<ConfigurationInstance> detect_c6(const Graph& g, const ThreadSet& ts) {
    const auto mg = thread_multigraph(g, ts, 1, [&](Vertex v) { return g.degree(v) == 3; });
    std::vector<ConfigurationInstance> out;
    for (const auto& c : fundamental_cycles(mg)) {
        std::set<int> on_cycle(c.links.begin(), c.links.end());
        for (std::size_t i = 0; i < c.nodes.size(); ++i) {
            const Vertex v = c.nodes[i];
            if (mg.degree(v) < 3) continue;
            // the pivot's link that is not on the cycle
            std::optional<std::size_t> extra;
            for (std::size_t l = 0; l < mg.links.size() && !extra; ++l) {
                if (on_cycle.count(static_cast<int>(l))) continue;
                if (mg.ends[l].first == v || mg.ends[l].second == v) extra = l;
            }
            if (!extra) continue;
            const Thread& t = ts.threads()[mg.links[*extra]];
            // rotate the cycle to start at the pivot's outgoing link
            MultigraphCycle rotated;
            for (std::size_t j = 0; j < c.nodes.size(); ++j) {
                rotated.nodes.push_back(c.nodes[(i + j) % c.nodes.size()]);
                rotated.links.push_back(c.links[(i + j) % c.nodes.size()]);
            }
            auto seq = cycle_sequence(ts, mg, rotated);
            ConfigurationInstance inst;
            inst.kind = ConfigurationKind::C6;
            inst.roles["cycle"] = seq;
            inst.roles["pivot"] = {v};
            inst.roles["extra"] = {t.internal.front(), t.other_end(v)};
            out.push_back(std::move(inst));
            break;
        }
    }
    return out;
}

std::vector<ConfigurationInstance> detect_short(const Graph& g, const ThreadSet& ts) {
    std::vector<ConfigurationInstance> out;
    for (const Thread& t : ts.threads()) {
        if (!t.is_loop() || t.length() < 2 || t.length() > 4 || g.degree(t.first) < 3) continue;
        ConfigurationInstance inst;
        inst.kind = ConfigurationKind::Cshort;
        inst.roles["cycle"] = t.internal;
        inst.roles["cycle"].push_back(t.first);
        inst.roles["anchor"] = {t.first};
        out.push_back(std::move(inst));
    }
    for (const auto& c : ts.two_vertex_cycles()) {
        if (c.size() < 3 || c.size() > 5) continue;
        ConfigurationInstance inst;
        inst.kind = ConfigurationKind::Cshort;
        inst.roles["cycle"] = c;
        out.push_back(std::move(inst));
    }
    return out;
}

}  // namespace

std::vector<ConfigurationInstance> detect(const Graph& g, int k, ConfigurationKind kind, DetectScope scope) {
    if (kind == ConfigurationKind::Local) throw PreconditionError("local patterns are found by detect_local");
    check_scope(k, kind, scope);
    const ThreadSet ts(g);
    std::vector<ConfigurationInstance> out;
    switch (kind) {
        case ConfigurationKind::C0:
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                if (g.degree(v) > 1) continue;
                ConfigurationInstance inst;
                inst.roles["v"] = {v};
                out.push_back(std::move(inst));
            }
            break;
        case ConfigurationKind::C1:
            for (const Thread& t : ts.threads()) {
                if (t.length() < 4) continue;
                auto inst = thread_instance(kind, t);
                inst.roles["u"] = {t.internal[1]};
                inst.roles["v"] = {t.internal[2]};
                out.push_back(std::move(inst));
            }
            break;
        case ConfigurationKind::C2:
            for (const Thread& t : ts.threads()) {
                if (t.length() != 3 || t.is_loop()) continue;
                const bool first_low = g.degree(t.first) <= k - 1, last_low = g.degree(t.last) <= k - 1;
                if (!first_low && !last_low) continue;
                auto inner = first_low ? t.internal : oriented_internal(t, t.last);
                auto inst = thread_instance(kind, t);
                inst.roles["u"] = {inner[0]};
                inst.roles["v"] = {inner[1]};
                inst.roles["w"] = {inner[2]};
                out.push_back(std::move(inst));
            }
            break;
        case ConfigurationKind::C3:
            for (const Thread& t : ts.threads()) {
                if (t.length() != 2 || t.is_loop()) continue;
                const int a = g.degree(t.first), b = g.degree(t.last);
                std::optional<std::vector<Vertex>> inner;
                if (a <= k - 1 && b <= k - 2) inner = t.internal;
                else if (b <= k - 1 && a <= k - 2) inner = oriented_internal(t, t.last);
                if (!inner) continue;
                auto inst = thread_instance(kind, t);
                inst.roles["u"] = {(*inner)[0]};
                inst.roles["v"] = {(*inner)[1]};
                out.push_back(std::move(inst));
            }
            break;
        case ConfigurationKind::C4:
            out = cycle_instances(g, ts, kind, 3, [&](Vertex v) { return g.degree(v) <= k; });
            break;
        case ConfigurationKind::C5:
            out = cycle_instances(g, ts, kind, 2, [&](Vertex v) { return g.degree(v) <= k - 1; });
            break;
        case ConfigurationKind::C6: out = detect_c6(g, ts); break;
        case ConfigurationKind::Cshort: out = detect_short(g, ts); break;
        case ConfigurationKind::Local: break;
    }
    for (auto& inst : out) inst.kind = kind;
    return out;
}

std::vector<ConfigurationInstance> detect_all(const Graph& g, int k, DetectScope scope) {
    std::vector<ConfigurationInstance> out;
    for (int i = 0; i <= static_cast<int>(ConfigurationKind::Cshort); ++i) {
        auto part = detect(g, k, static_cast<ConfigurationKind>(i), scope);
        out.insert(out.end(), part.begin(), part.end());
    }
    return out;
}

namespace {

// Injective assignment of slots to directions; returns the direction index
// per slot.
std::optional<std::vector<int>> match_slots(const Graph& g, const std::vector<Direction>& dirs,
                                            const std::vector<Selector>& slots) {
    std::vector<int> chosen(slots.size(), -1);
    std::vector<char> used(dirs.size(), 0);
    std::function<bool(std::size_t)> assign = [&](std::size_t i) {
        if (i == slots.size()) return true;
        for (std::size_t d = 0; d < dirs.size(); ++d) {
            if (used[d] || !selects(slots[i], g, dirs[d])) continue;
            used[d] = 1;
            chosen[i] = static_cast<int>(d);
            if (assign(i + 1)) return true;
            used[d] = 0;
        }
        return false;
    };
    if (!assign(0)) return std::nullopt;
    return chosen;
}

}  // namespace

std::vector<ConfigurationInstance> detect_local(const Graph& g, const RuleSet& rules) {
    const ThreadSet ts(g);
    std::vector<ConfigurationInstance> out;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 3) continue;
        const auto dirs = directions(g, ts, v);
        for (const auto& p : rules.patterns) {
            if (!p.root.contains(g.degree(v))) continue;
            auto chosen = match_slots(g, dirs, p.slots);
            if (!chosen) continue;
            ConfigurationInstance inst;
            inst.kind = ConfigurationKind::Local;
            inst.pattern = p;
            inst.roles["v"] = {v};
            for (std::size_t i = 0; i < chosen->size(); ++i)
                inst.roles["s" + std::to_string(i)] = {dirs[(*chosen)[i]].neighbor};
            out.push_back(std::move(inst));
        }
    }
    return out;
}

namespace {

[[noreturn]] void invalid(const ConfigurationInstance& inst, const std::string& why) {
    throw PreconditionError(to_string(inst.kind) + " instance fails re-validation: " + why);
}

const std::vector<Vertex>& role_list(const ConfigurationInstance& inst, const std::string& name) {
    auto it = inst.roles.find(name);
    if (it == inst.roles.end()) invalid(inst, "missing role '" + name + "'");
    return it->second;
}

void check_vertices(const Graph& g, const ConfigurationInstance& inst) {
    for (const auto& [name, vs] : inst.roles)
        for (Vertex v : vs)
            if (!g.has_vertex(v)) invalid(inst, "role '" + name + "' names a vertex outside the graph");
}

// `seq` is a cycle of distinct vertices in g.
void check_cycle(const Graph& g, const ConfigurationInstance& inst, const std::vector<Vertex>& seq) {
    if (seq.size() < 3) invalid(inst, "cycle is shorter than 3");
    std::set<Vertex> distinct(seq.begin(), seq.end());
    if (distinct.size() != seq.size()) invalid(inst, "cycle repeats a vertex");
    for (std::size_t i = 0; i < seq.size(); ++i)
        if (!g.adjacent(seq[i], seq[(i + 1) % seq.size()])) invalid(inst, "cycle is not closed in the graph");
}

// Role "thread" with ends is a maximal thread; returns it.
Thread check_thread(const Graph& g, const ConfigurationInstance& inst) {
    const auto& inner = role_list(inst, "thread");
    const auto& ends = role_list(inst, "ends");
    if (inner.empty() || ends.size() != 2) invalid(inst, "malformed thread roles");
    Thread t{ends[0], ends[1], inner};
    for (Vertex x : inner)
        if (g.degree(x) != 2) invalid(inst, "thread vertex " + std::to_string(x) + " is not a 2-vertex");
    for (std::size_t i = 0; i + 1 < inner.size(); ++i)
        if (!g.adjacent(inner[i], inner[i + 1])) invalid(inst, "thread is not a path");
    if (!g.adjacent(t.first, inner.front()) || !g.adjacent(t.last, inner.back()))
        invalid(inst, "thread ends are not attached");
    if (g.degree(t.first) == 2 || g.degree(t.last) == 2) invalid(inst, "thread is not maximal");
    return t;
}

// Neighbor of `x` among the thread ends.
Vertex end_next_to(const Graph& g, const ConfigurationInstance& inst, const Thread& t, Vertex x) {
    if (x == t.internal.front() && g.adjacent(x, t.first)) return t.first;
    if (x == t.internal.back() && g.adjacent(x, t.last)) return t.last;
    invalid(inst, "vertex " + std::to_string(x) + " is not next to a thread end");
}

}  // namespace

void revalidate(const Graph& g, const ConfigurationInstance& inst, int k) {
    check_vertices(g, inst);
    switch (inst.kind) {
        case ConfigurationKind::C0:
            if (g.degree(inst.role("v")) > 1) invalid(inst, "vertex has degree above 1");
            return;
        case ConfigurationKind::C1: {
            const Thread t = check_thread(g, inst);
            if (t.length() < 4) invalid(inst, "thread is shorter than 4");
            const Vertex u = inst.role("u"), v = inst.role("v");
            auto it = std::find(t.internal.begin(), t.internal.end(), u);
            if (it == t.internal.end() || it == t.internal.begin() || it + 1 == t.internal.end() ||
                it + 2 == t.internal.end() || *(it + 1) != v)
                invalid(inst, "u, v are not the middle of a 4-subthread");
            return;
        }
        case ConfigurationKind::C2: {
            const Thread t = check_thread(g, inst);
            if (t.length() != 3 || t.is_loop()) invalid(inst, "not a 3-thread with distinct ends");
            const Vertex u = inst.role("u"), v = inst.role("v"), w = inst.role("w");
            if (v != t.internal[1]) invalid(inst, "v is not the middle vertex");
            if (g.degree(end_next_to(g, inst, t, u)) > k - 1) invalid(inst, "the end next to u has degree above k-1");
            if (w == u || (w != t.internal[0] && w != t.internal[2])) invalid(inst, "w is not the far vertex");
            return;
        }
        case ConfigurationKind::C3: {
            const Thread t = check_thread(g, inst);
            if (t.length() != 2 || t.is_loop()) invalid(inst, "not a 2-thread with distinct ends");
            const Vertex u = inst.role("u"), v = inst.role("v");
            if (u == v) invalid(inst, "u and v coincide");
            if (g.degree(end_next_to(g, inst, t, u)) > k - 1) invalid(inst, "the end next to u has degree above k-1");
            if (g.degree(end_next_to(g, inst, t, v)) > k - 2) invalid(inst, "the end next to v has degree above k-2");
            return;
        }
        case ConfigurationKind::C4:
        case ConfigurationKind::C5: {
            const auto& seq = role_list(inst, "cycle");
            check_cycle(g, inst, seq);
            const int period = inst.kind == ConfigurationKind::C4 ? 4 : 3;
            const int cap = inst.kind == ConfigurationKind::C4 ? k : k - 1;
            if (seq.size() % period != 0) invalid(inst, "cycle length is not a multiple of " + std::to_string(period));
            for (std::size_t i = 0; i < seq.size(); ++i) {
                const bool anchor = (i + 1) % period == 0;
                const int d = g.degree(seq[i]);
                if (anchor ? d > cap : d != 2) invalid(inst, "vertex " + std::to_string(seq[i]) + " has the wrong degree");
            }
            return;
        }
        case ConfigurationKind::C6: {
            const auto& seq = role_list(inst, "cycle");
            check_cycle(g, inst, seq);
            if (seq.size() % 2 != 0) invalid(inst, "cycle does not alternate");
            for (std::size_t i = 0; i < seq.size(); ++i)
                if (g.degree(seq[i]) != (i % 2 == 0 ? 2 : 3)) invalid(inst, "cycle does not alternate 2- and 3-vertices");
            const Vertex pivot = inst.role("pivot");
            if (std::find(seq.begin(), seq.end(), pivot) == seq.end() || g.degree(pivot) != 3)
                invalid(inst, "pivot is not a 3-vertex of the cycle");
            const auto& extra = role_list(inst, "extra");
            if (extra.size() != 2) invalid(inst, "malformed extra role");
            if (std::find(seq.begin(), seq.end(), extra[0]) != seq.end() || !g.adjacent(pivot, extra[0]) ||
                g.degree(extra[0]) != 2 || !g.adjacent(extra[0], extra[1]) || g.degree(extra[1]) != 3)
                invalid(inst, "pivot has no third 1-thread to a 3-vertex");
            return;
        }
        case ConfigurationKind::Cshort: {
            const auto& seq = role_list(inst, "cycle");
            check_cycle(g, inst, seq);
            if (seq.size() > 5) invalid(inst, "cycle is longer than 5");
            int big = 0;
            for (Vertex x : seq) big += g.degree(x) != 2;
            if (big > 1) invalid(inst, "cycle has more than one 3+-vertex");
            for (Vertex a : inst.roles.count("anchor") ? role_list(inst, "anchor") : std::vector<Vertex>{})
                if (std::find(seq.begin(), seq.end(), a) == seq.end()) invalid(inst, "anchor is off the cycle");
            for (Vertex x : seq)
                if (g.degree(x) != 2 && !(inst.roles.count("anchor") && role_list(inst, "anchor") == std::vector<Vertex>{x}))
                    invalid(inst, "the 3+-vertex of the cycle is not its anchor");
            return;
        }
        case ConfigurationKind::Local: {
            if (!inst.pattern) invalid(inst, "no pattern attached");
            const LocalPattern& p = *inst.pattern;
            const Vertex v = inst.role("v");
            if (g.degree(v) == 2 || !p.root.contains(g.degree(v))) invalid(inst, "root degree outside the pattern");
            const ThreadSet ts(g);
            const auto dirs = directions(g, ts, v);
            std::set<Vertex> seen;
            for (std::size_t i = 0; i < p.slots.size(); ++i) {
                const Vertex s = inst.role("s" + std::to_string(i));
                if (!seen.insert(s).second) invalid(inst, "two slots share a neighbor");
                auto d = std::find_if(dirs.begin(), dirs.end(), [&](const Direction& x) { return x.neighbor == s; });
                if (d == dirs.end()) invalid(inst, "slot " + std::to_string(i) + " is not a neighbor of the root");
                if (!selects(p.slots[i], g, *d)) invalid(inst, "slot " + std::to_string(i) + " does not match");
            }
            return;
        }
    }
}

}  // namespace gsq

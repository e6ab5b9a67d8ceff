#include "gsq/discharging.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "gsq/error.hpp"

namespace gsq {

std::string to_string(VertexClassKind kind) {
    switch (kind) {
        case VertexClassKind::high: return "high";
        case VertexClassKind::medium: return "medium";
        case VertexClassKind::low: return "low";
        case VertexClassKind::two_vertex: return "two";
        case VertexClassKind::unclassified: return "-";
    }
    return "?";
}

VertexClass classify(const Graph& g, Vertex v, const RuleSet& rules) {
    const int d = g.degree(v);
    if (d > rules.k)
        throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(d) +
                                " above the rule set's maximum degree " + std::to_string(rules.k));
    if (d == 2) return {VertexClassKind::two_vertex, rules.theorem, {2, 2}};
    for (const auto& [name, range] : rules.classes) {
        if (!range.contains(d)) continue;
        VertexClassKind kind = VertexClassKind::unclassified;
        if (name == "high") kind = VertexClassKind::high;
        else if (name == "medium") kind = VertexClassKind::medium;
        else if (name == "low") kind = VertexClassKind::low;
        else continue;
        return {kind, rules.theorem, range};
    }
    return {VertexClassKind::unclassified, rules.theorem, {d, d}};
}

SponsorshipMap assign_sponsors(const Graph& g, const ThreadSet& threads, int thread_length, DegreeRange scope) {
    SponsorshipMap out;
    out.thread_length = thread_length;
    out.scope = scope;
    const auto mg = thread_multigraph(g, threads, thread_length, [&](Vertex v) { return scope.contains(g.degree(v)); });
    for (const auto& comp : components(mg)) {
        if (comp.links.size() > comp.nodes.size()) {
            std::string names;
            for (Vertex v : comp.nodes) names += (names.empty() ? "" : " ") + std::to_string(v);
            throw ReducibleConfigurationError("the " + std::to_string(thread_length) +
                                              "-threads on vertices {" + names + "} contain two cycles");
        }
        std::map<Vertex, std::set<int>> incident;  // node -> link positions
        for (Vertex v : comp.nodes) incident[v];
        for (int l : comp.links) {
            incident[mg.ends[l].first].insert(l);
            incident[mg.ends[l].second].insert(l);
        }
        auto take = [&](Vertex v, int l) {
            out.sponsor[mg.links[l]] = v;
            incident[mg.ends[l].first].erase(l);
            incident[mg.ends[l].second].erase(l);
        };
        // peel leaves, smallest first
        for (bool peeled = true; peeled;) {
            peeled = false;
            for (auto& [v, links] : incident) {
                if (links.size() != 1) continue;
                const int l = *links.begin();
                if (mg.ends[l].first == mg.ends[l].second) continue;  // a loop is a cycle
                take(v, l);
                peeled = true;
                break;
            }
        }
        // what remains is empty or a single cycle
        auto start = std::find_if(incident.begin(), incident.end(), [](const auto& e) { return !e.second.empty(); });
        if (start == incident.end()) continue;
        Vertex v = start->first;
        while (!incident[v].empty()) {
            const int l = *incident[v].begin();
            const Vertex next = mg.ends[l].first == v ? mg.ends[l].second : mg.ends[l].first;
            take(v, l);
            v = next;
        }
    }
    return out;
}

Rational ChargeLedger::sent(Vertex v) const {
    Rational total = 0;
    for (const auto& t : transfers)
        if (t.sender == v) total += t.amount;
    return total;
}

Rational ChargeLedger::received(Recipient r) const {
    Rational total = 0;
    for (const auto& t : transfers)
        if (t.recipient == r) total += t.amount;
    return total;
}

namespace {

void check_preconditions(const Graph& g, const RuleSet& rules, const ThreadSet& ts) {
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) <= 1)
            throw PreconditionError("vertex " + std::to_string(v) + " has degree " + std::to_string(g.degree(v)) +
                                    "; remove 1^- -vertices (C0) before discharging");
    if (!ts.two_vertex_cycles().empty())
        throw PreconditionError("a component is a cycle of 2-vertices with no 3+-vertex to anchor its threads");
    if (g.max_degree() > rules.k)
        throw PreconditionError("maximum degree " + std::to_string(g.max_degree()) + " exceeds k = " +
                                std::to_string(rules.k));
}

}  // namespace

ChargeLedger apply(const Graph& g, const RuleSet& rules) {
    ChargeLedger ledger;
    ledger.threads = ThreadSet(g);
    const ThreadSet& ts = ledger.threads;
    check_preconditions(g, rules, ts);

    const int n = g.vertex_count();
    for (Vertex v = 0; v < n; ++v) ledger.initial.push_back(g.degree(v));

    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) < 3) continue;
        const auto dirs = directions(g, ts, v);
        for (const Rule& rule : rules.rules) {
            if (!rule.sender.contains(g.degree(v))) continue;
            for (const Direction& d : dirs) {
                if (!selects(rule.selector, g, d)) continue;
                Recipient to = d.enters_thread() ? Recipient{Recipient::Kind::thread, *d.thread}
                                                 : Recipient{Recipient::Kind::vertex, d.neighbor};
                ledger.transfers.push_back({v, to, rule.label, rule.amount});
            }
        }
    }
    for (const Sponsorship& s : rules.sponsors) {
        auto map = assign_sponsors(g, ts, s.thread_length, s.sponsor);
        for (auto [thread, sponsor] : map.sponsor)
            ledger.transfers.push_back({sponsor, {Recipient::Kind::thread, thread}, "sponsor", s.amount});
        ledger.sponsorships.push_back(std::move(map));
    }
    std::stable_sort(ledger.transfers.begin(), ledger.transfers.end(), [](const Transfer& a, const Transfer& b) {
        return std::tie(a.sender, a.recipient, a.rule) < std::tie(b.sender, b.recipient, b.rule);
    });

    ledger.final_charge = ledger.initial;
    ledger.thread_charge.assign(ts.threads().size(), 0);
    for (std::size_t t = 0; t < ts.threads().size(); ++t) ledger.thread_charge[t] = 2 * ts.threads()[t].length();
    for (const auto& tr : ledger.transfers) {
        ledger.final_charge[tr.sender] -= tr.amount;
        if (tr.recipient.kind == Recipient::Kind::vertex) ledger.final_charge[tr.recipient.id] += tr.amount;
        else ledger.thread_charge[tr.recipient.id] += tr.amount;
    }
    for (std::size_t t = 0; t < ts.threads().size(); ++t) {
        const Thread& th = ts.threads()[t];
        const Rational share = (ledger.thread_charge[t] - 2 * th.length()) / th.length();
        for (Vertex x : th.internal) ledger.final_charge[x] += share;
    }
    return ledger;
}

namespace {

std::vector<ConfigurationInstance> touching(const std::vector<ConfigurationInstance>& all,
                                            const std::vector<Vertex>& entity) {
    std::vector<ConfigurationInstance> out;
    for (const auto& inst : all) {
        bool hit = false;
        for (const auto& [name, vs] : inst.roles) {
            if (inst.kind == ConfigurationKind::Local && name != "v") continue;
            for (Vertex x : vs)
                if (std::find(entity.begin(), entity.end(), x) != entity.end()) hit = true;
        }
        if (hit) out.push_back(inst);
    }
    return out;
}

}  // namespace

VerifyReport verify(const Graph& g, const RuleSet& rules) {
    VerifyReport report;
    report.threshold = rules.threshold;
    report.ledger = apply(g, rules);
    const ChargeLedger& ledger = report.ledger;

    auto consider = [&](const Rational& normalized) {
        if (!report.min_charge || normalized < *report.min_charge) report.min_charge = normalized;
    };
    std::vector<Deficiency> deficient;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) < 3) continue;
        consider(ledger.final_charge[v]);
        if (ledger.final_charge[v] < rules.threshold)
            deficient.push_back({{Recipient::Kind::vertex, v}, ledger.final_charge[v], rules.threshold, {}});
    }
    const auto& threads = ledger.threads.threads();
    for (std::size_t t = 0; t < threads.size(); ++t) {
        const int len = threads[t].length();
        consider(ledger.thread_charge[t] / len);
        if (ledger.thread_charge[t] < len * rules.threshold)
            deficient.push_back({{Recipient::Kind::thread, static_cast<int>(t)}, ledger.thread_charge[t],
                                 len * rules.threshold, {}});
    }
    if (!deficient.empty()) {
        auto all = detect_all(g, rules.k);
        auto local = detect_local(g, rules);
        all.insert(all.end(), local.begin(), local.end());
        for (auto& d : deficient) {
            std::vector<Vertex> entity;
            if (d.entity.kind == Recipient::Kind::vertex) entity = {d.entity.id};
            else entity = threads[d.entity.id].internal;
            d.configurations = touching(all, entity);
        }
    }
    report.deficient = std::move(deficient);
    report.pass = report.deficient.empty();
    return report;
}

namespace {

std::string describe(const ConfigurationInstance& inst) {
    std::string s = to_string(inst.kind);
    if (inst.pattern) s += ":" + inst.pattern->id;
    return s;
}

}  // namespace

std::string format_report(const Graph& g, const RuleSet& rules, const VerifyReport& report, ReportFormat format) {
    std::ostringstream out;
    const bool tsv = format == ReportFormat::tsv;
    const auto& ledger = report.ledger;
    if (tsv) out << "vertex\tdegree\tclass\tcharge\n";
    else out << "vertex  degree  class   charge\n";
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const std::string cls = to_string(classify(g, v, rules).kind);
        const std::string charge = to_string(ledger.final_charge[v]);
        if (tsv) {
            out << v << '\t' << g.degree(v) << '\t' << cls << '\t' << charge << '\n';
        } else {
            std::string row = std::to_string(v);
            row.resize(8, ' ');
            std::string deg = std::to_string(g.degree(v));
            deg.resize(8, ' ');
            std::string c = cls;
            c.resize(8, ' ');
            out << row << deg << c << charge << '\n';
        }
    }
    for (const auto& d : report.deficient) {
        const bool is_thread = d.entity.kind == Recipient::Kind::thread;
        std::string what = is_thread ? "thread " : "vertex ";
        if (is_thread) {
            const Thread& t = ledger.threads.threads()[d.entity.id];
            what += std::to_string(t.first) + "-" + std::to_string(t.last) + " (length " + std::to_string(t.length()) + ")";
        } else {
            what += std::to_string(d.entity.id);
        }
        std::string configs;
        for (const auto& inst : d.configurations) configs += (configs.empty() ? "" : ",") + describe(inst);
        if (tsv)
            out << "deficient\t" << what << '\t' << to_string(d.charge) << '\t' << to_string(d.required) << '\t'
                << (configs.empty() ? "-" : configs) << '\n';
        else
            out << "deficient " << what << ": " << to_string(d.charge) << " < " << to_string(d.required)
                << (configs.empty() ? "" : " [" + configs + "]") << '\n';
    }
    const std::string min = report.min_charge ? to_mixed_string(*report.min_charge) : "-";
    if (tsv) out << (report.pass ? "PASS" : "FAIL") << '\t' << min << '\t' << to_mixed_string(report.threshold) << '\n';
    else if (report.pass) out << "PASS: min charge " << min << '\n';
    else out << "FAIL: min charge " << min << " below " << to_mixed_string(report.threshold) << '\n';
    return out.str();
}

}  // namespace gsq

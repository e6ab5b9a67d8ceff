// gsq: command-line front end for the square-coloring toolkit.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "gsq/coloring.hpp"
#include "gsq/configurations.hpp"
#include "gsq/discharging.hpp"
#include "gsq/error.hpp"
#include "gsq/extremal.hpp"
#include "gsq/graph_io.hpp"
#include "gsq/mad.hpp"
#include "gsq/rules_format.hpp"

using namespace gsq;

namespace {

enum Exit { ok = 0, check_failed = 1, input_error = 2 };

struct Options {
    std::string graph;
    std::string output;
    std::optional<int> k;
    std::string theorem;
    std::string rules;
    std::string lists;
    std::string kind;
    std::string construction;
    int M = 2;
    std::uint64_t seed = 1;
    bool contract = false;
    bool untight = false;
    bool on_square = false;
    bool relaxed = false;
    std::string check = "none";
    std::string format = "text";
};

GraphFile read_graph(const std::string& path) {
    if (path == "-") {
        const std::string text{std::istreambuf_iterator<char>(std::cin), {}};
        return parse_graph(text);
    }
    return load_graph(path);
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw Error("cannot write '" + o.output + "'");
    out << text;
}

int require_k(const Options& o) {
    if (!o.k) throw PreconditionError("--k is required");
    return *o.k;
}

// Rule set from --rules, else --theorem, else the theorem covering k.
RuleSet rule_set(const Options& o) {
    if (!o.rules.empty()) {
        const RulesDocument doc = load_rules_file(o.rules);
        int k = 0;
        if (o.k) k = *o.k;
        else if (doc.k_lo && doc.k_hi && *doc.k_lo == *doc.k_hi) k = *doc.k_lo;
        else throw PreconditionError("--k is required for a rules file covering several k");
        return compile_rules(doc, k);
    }
    const int k = require_k(o);
    if (!o.theorem.empty()) {
        const auto t = parse_theorem(o.theorem);
        if (!t) throw PreconditionError("unknown theorem '" + o.theorem + "'");
        return builtin_ruleset(*t, *t == Theorem::deltaK ? std::optional<int>(k) : std::nullopt);
    }
    const Theorem t = theorem_for_degree(k);
    return builtin_ruleset(t, t == Theorem::deltaK ? std::optional<int>(k) : std::nullopt);
}

std::string join(const std::vector<Vertex>& vs, const char* sep = " ") {
    std::string out;
    for (std::size_t i = 0; i < vs.size(); ++i) out += (i ? sep : "") + std::to_string(vs[i]);
    return out;
}

std::string describe(const ConfigurationInstance& inst) {
    std::string s = to_string(inst.kind);
    if (inst.pattern) s += " " + inst.pattern->id;
    for (const auto& [role, vs] : inst.roles) s += " " + role + "=" + join(vs, ",");
    return s;
}

std::string describe(const Coloring& c) {
    std::string s;
    for (std::size_t v = 0; v < c.colors.size(); ++v)
        s += (v ? " " : "") + (c.colors[v] ? std::to_string(*c.colors[v]) : std::string("-"));
    return s;
}

int cmd_mad(const Options& o) {
    const Graph g = read_graph(o.graph).graph;
    const MadResult r = mad_exact(g);
    std::cout << "mad = " << to_string(r.mad) << '\n';
    std::cout << "witness: " << join(r.certificate.subset) << '\n';
    return ok;
}

int cmd_square(const Options& o) {
    GraphFile f = read_graph(o.graph);
    f.graph = square(f.graph);
    emit(o, format_graph(f));
    return ok;
}

int cmd_color(const Options& o) {
    Graph g = read_graph(o.graph).graph;
    if (o.on_square) g = square(g);
    if (o.lists.empty()) {
        const int chi = chromatic_number(g);
        std::cout << "chromatic number = " << chi << '\n';
        const auto r = list_color(g, ListAssignment::uniform(g.vertex_count(), chi));
        std::cout << "coloring: " << describe(*r.coloring) << '\n';
        return ok;
    }
    const ListAssignment lists = load_lists(o.lists);
    if (lists.vertex_count() != g.vertex_count())
        throw PreconditionError("lists file has " + std::to_string(lists.vertex_count()) + " lines for " +
                                std::to_string(g.vertex_count()) + " vertices");
    const auto r = list_color(g, lists);
    if (!r.satisfiable()) {
        std::cout << "not colorable from the given lists";
        if (r.empty_list) std::cout << " (vertex " << *r.empty_list << " has an empty list)";
        std::cout << '\n';
        return check_failed;
    }
    std::cout << "coloring: " << describe(*r.coloring) << '\n';
    return ok;
}

int cmd_choosable(const Options& o) {
    Graph g = read_graph(o.graph).graph;
    if (o.on_square) g = square(g);
    const int k = require_k(o);
    const bool yes = is_choosable(g, k);
    std::cout << (yes ? "" : "not ") << k << "-choosable\n";
    return yes ? ok : check_failed;
}

int cmd_detect(const Options& o) {
    const Graph g = read_graph(o.graph).graph;
    const int k = require_k(o);
    const DetectScope scope = o.relaxed ? DetectScope::relaxed : DetectScope::lemma;
    std::vector<ConfigurationInstance> found;
    if (o.kind.empty() || o.kind == "all") {
        found = detect_all(g, k, scope);
    } else if (o.kind != "Local") {
        const auto kind = parse_configuration_kind(o.kind);
        if (!kind) throw PreconditionError("unknown configuration kind '" + o.kind + "'");
        found = detect(g, k, *kind, scope);
    }
    if (!o.theorem.empty() || !o.rules.empty() || o.kind == "Local") {
        const auto local = detect_local(g, rule_set(o));
        found.insert(found.end(), local.begin(), local.end());
    }
    for (const auto& inst : found) {
        std::cout << describe(inst);
        if (o.check != "none") {
            const auto mode = o.check == "brute" ? ReducibilityMode::brute_force : ReducibilityMode::count_check;
            const auto r = verify_reducible(g, inst, k, mode);
            std::cout << (r.reducible ? "  reducible" : "  NOT reducible");
            if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        }
        std::cout << '\n';
    }
    std::cout << found.size() << " instance" << (found.size() == 1 ? "" : "s") << '\n';
    return found.empty() ? ok : check_failed;
}

int cmd_discharge(const Options& o) {
    const Graph g = read_graph(o.graph).graph;
    const RuleSet rules = rule_set(o);
    const VerifyReport report = verify(g, rules);
    std::cout << format_report(g, rules, report, o.format == "tsv" ? ReportFormat::tsv : ReportFormat::text);
    return report.pass ? ok : check_failed;
}

int cmd_generate(const Options& o) {
    const int k = require_k(o);
    Construction c;
    if (o.construction == "example1") c = example1(k, o.seed, o.contract, o.untight);
    else c = example2(k, o.M, o.seed, o.contract);
    emit(o, format_graph({c.graph, provenance_header(c.recipe)}));
    return ok;
}

int cmd_verify_theorem(const Options& o) {
    const Graph g = read_graph(o.graph).graph;
    const int k = require_k(o);
    const RuleSet rules = rule_set(o);
    bool failed = false;
    auto line = [](const std::string& name, bool good, const std::string& what) {
        std::cout << (good ? "ok    " : "FAIL  ") << name << ": " << what << '\n';
    };

    const int delta = g.max_degree();
    const bool degree_ok = delta <= k;
    line("max degree", degree_ok, std::to_string(delta) + " <= " + std::to_string(k));
    const Rational mad = mad_exact(g).mad;
    const bool mad_ok = mad < rules.threshold;
    line("mad", mad_ok, to_string(mad) + " < " + to_string(rules.threshold));
    if (!degree_ok || !mad_ok) {
        std::cout << "hypothesis not satisfied\n";
        return check_failed;
    }
    std::cout << "hypothesis satisfied\n";

    auto found = detect_all(g, k, DetectScope::relaxed);
    const auto local = detect_local(g, rules);
    found.insert(found.end(), local.begin(), local.end());
    std::cout << "info  configurations: " << found.size() << " found\n";

    // A configuration-free graph satisfying the hypothesis would have to
    // fail discharging; that is the contradiction the proof relies on.
    try {
        const VerifyReport report = verify(g, rules);
        const std::string min = report.min_charge ? to_mixed_string(*report.min_charge) : "-";
        if (found.empty()) {
            line("discharge", report.pass, "min charge " + min);
            failed |= !report.pass;
        } else {
            std::cout << "info  discharge: " << (report.pass ? "pass" : "fail") << ", min charge " << min << '\n';
        }
    } catch (const PreconditionError& e) {
        std::cout << "info  discharge: not applicable (" << e.what() << ")\n";
    } catch (const ReducibleConfigurationError& e) {
        std::cout << "info  discharge: not applicable (" << e.what() << ")\n";
    }

    if (o.lists.empty()) {
        std::cout << "info  list coloring: skipped (no --lists)\n";
    } else {
        const ListAssignment lists = load_lists(o.lists);
        if (lists.vertex_count() != g.vertex_count())
            throw PreconditionError("lists file has " + std::to_string(lists.vertex_count()) + " lines for " +
                                    std::to_string(g.vertex_count()) + " vertices");
        for (Vertex v = 0; v < g.vertex_count(); ++v)
            if (lists.list_size(v) < static_cast<std::size_t>(k + 1))
                throw PreconditionError("vertex " + std::to_string(v) + " has fewer than k+1 colors");
        const auto r = list_color(square(g), lists);
        line("list coloring of the square", r.satisfiable(), r.satisfiable() ? describe(*r.coloring) : "none found");
        failed |= !r.satisfiable();
    }
    std::cout << (failed ? "FAIL" : "PASS") << '\n';
    return failed ? check_failed : ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Tools for list coloring the square of sparse graphs"};
    app.require_subcommand(1);
    Options o;

    auto graph_arg = [&](CLI::App* c) { c->add_option("graph", o.graph, "Graph file ('-' for stdin)")->required(); };
    auto k_opt = [&](CLI::App* c) { c->add_option("--k", o.k, "Maximum degree k"); };
    auto rules_opts = [&](CLI::App* c) {
        c->add_option("--theorem", o.theorem, "Built-in rule set")
            ->check(CLI::IsMember({"delta5", "delta6", "delta7", "deltaK"}));
        c->add_option("--rules", o.rules, "Rule set from a .rules file");
    };

    auto* mad = app.add_subcommand("mad", "Maximum average degree with a densest subgraph");
    graph_arg(mad);

    auto* sq = app.add_subcommand("square", "Write the square of a graph");
    graph_arg(sq);
    sq->add_option("-o,--output", o.output, "Output file");

    auto* color = app.add_subcommand("color", "Chromatic number, or a coloring from lists");
    graph_arg(color);
    color->add_option("--lists", o.lists, "Lists file");
    color->add_flag("--square", o.on_square, "Work on the square of the graph");

    auto* choos = app.add_subcommand("choosable", "Exhaustive k-choosability test (small graphs)");
    graph_arg(choos);
    choos->add_option("--k", o.k, "List size")->required();
    choos->add_flag("--square", o.on_square, "Work on the square of the graph");

    auto* det = app.add_subcommand("detect", "List reducible configurations");
    graph_arg(det);
    k_opt(det);
    rules_opts(det);
    det->add_option("--kind", o.kind, "C0..C6, Cshort, Local or all");
    det->add_flag("--relaxed", o.relaxed, "Allow k outside the lemma range");
    det->add_option("--check", o.check, "Verify each instance")->check(CLI::IsMember({"none", "count", "brute"}));

    auto* dis = app.add_subcommand("discharge", "Run a discharging rule set");
    graph_arg(dis);
    k_opt(dis);
    rules_opts(dis);
    dis->add_option("--format", o.format, "text or tsv")->check(CLI::IsMember({"text", "tsv"}));

    auto* gen = app.add_subcommand("generate", "Generate an extremal example");
    gen->add_option("construction", o.construction, "example1 or example2")
        ->required()
        ->check(CLI::IsMember({"example1", "example2"}));
    k_opt(gen);
    gen->add_option("--M", o.M, "example2: number of B-vertices");
    gen->add_option("--seed", o.seed, "Random seed");
    gen->add_flag("--contract", o.contract, "Contract one edge on each spanning cycle");
    gen->add_flag("--untight", o.untight, "example1: allow k outside 4..5");
    gen->add_option("-o,--output", o.output, "Output file");

    auto* vt = app.add_subcommand("verify-theorem", "Check the hypothesis and run the proof steps");
    graph_arg(vt);
    k_opt(vt);
    rules_opts(vt);
    vt->add_option("--lists", o.lists, "(k+1)-lists for coloring the square");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return input_error;
    }

    try {
        const CLI::App* sub = app.get_subcommands().front();
        const std::string name = sub->get_name();
        if (name == "mad") return cmd_mad(o);
        if (name == "square") return cmd_square(o);
        if (name == "color") return cmd_color(o);
        if (name == "choosable") return cmd_choosable(o);
        if (name == "detect") return cmd_detect(o);
        if (name == "discharge") return cmd_discharge(o);
        if (name == "generate") return cmd_generate(o);
        return cmd_verify_theorem(o);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << '\n';
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
    }
    return input_error;
}

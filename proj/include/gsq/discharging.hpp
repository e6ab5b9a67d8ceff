#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gsq/configurations.hpp"
#include "gsq/graph.hpp"
#include "gsq/rational.hpp"
#include "gsq/ruleset.hpp"
#include "gsq/threads.hpp"

namespace gsq {

enum class VertexClassKind { high, medium, low, two_vertex, unclassified };

std::string to_string(VertexClassKind kind);

struct VertexClass {
    VertexClassKind kind = VertexClassKind::unclassified;
    Theorem theorem = Theorem::delta5;
    /// Degree bounds of the class; {2, 2} for 2-vertices.
    DegreeRange bounds;
};

/// Class of `v` under the named classes of `rules`. Degree-2 vertices are
/// two_vertex; degrees in no class (every degree under delta5) are
/// unclassified. Throws PreconditionError if deg(v) > rules.k.
VertexClass classify(const Graph& g, Vertex v, const RuleSet& rules);

/// Threads of one length, each assigned to one of its endpoints so that no
/// vertex sponsors two of them.
struct SponsorshipMap {
    int thread_length = 0;
    DegreeRange scope;
    std::map<int, Vertex> sponsor;  // thread index -> sponsoring endpoint
};

/// Sponsors for the `thread_length`-threads whose ends both lie in `scope`.
/// Trees are oriented by repeatedly peeling the smallest leaf; a component
/// with one cycle has its cycle oriented from its smallest node. Throws
/// ReducibleConfigurationError on a component with more links than nodes.
SponsorshipMap assign_sponsors(const Graph& g, const ThreadSet& threads, int thread_length, DegreeRange scope);

/// A charge receiver: a vertex or a whole thread.
struct Recipient {
    enum class Kind { vertex, thread } kind = Kind::vertex;
    int id = 0;  // vertex id or thread index

    friend auto operator<=>(const Recipient&, const Recipient&) = default;
};

struct Transfer {
    Vertex sender;
    Recipient recipient;
    std::string rule;  // rule label, or "sponsor"
    Rational amount;
};

/// Itemized result of running a rule set. Transfers are sorted by
/// (sender, recipient, rule). Charge given to a thread is shared equally by
/// its 2-vertices.
struct ChargeLedger {
    ThreadSet threads;
    std::vector<Rational> initial;
    std::vector<Transfer> transfers;
    std::vector<Rational> final_charge;
    /// mu*(P) = 2l + received, per thread index.
    std::vector<Rational> thread_charge;
    std::vector<SponsorshipMap> sponsorships;

    Rational sent(Vertex v) const;
    Rational received(Recipient r) const;
};

/// Runs `rules` on `g`. Requires minimum degree 2, no component made only of
/// 2-vertices, Delta(g) <= rules.k, and satisfiable sponsorships.
ChargeLedger apply(const Graph& g, const RuleSet& rules);

struct Deficiency {
    Recipient entity;
    /// Final charge of the vertex, or mu*(P) of the thread.
    Rational charge;
    Rational required;
    /// Detected configurations touching the entity.
    std::vector<ConfigurationInstance> configurations;
};

struct VerifyReport {
    bool pass = false;
    Rational threshold;
    /// Least final charge of a 3+-vertex or least mu*(P)/l of a thread.
    std::optional<Rational> min_charge;
    std::vector<Deficiency> deficient;
    ChargeLedger ledger;
};

/// Passes iff every 3+-vertex ends with at least the threshold and every
/// l-thread with mu*(P) >= l * threshold.
VerifyReport verify(const Graph& g, const RuleSet& rules);

enum class ReportFormat { text, tsv };

/// Per-vertex table (vertex, degree, class, final charge as p/q) followed by
/// the deficient entities and a PASS/FAIL line.
std::string format_report(const Graph& g, const RuleSet& rules, const VerifyReport& report, ReportFormat format);

}  // namespace gsq

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gsq/rational.hpp"
#include "gsq/ruleset.hpp"

namespace gsq {

/// Rational expression over the symbol k: integers, k, + - * /, unary
/// minus, floor(...) and parentheses.
struct Expr {
    enum class Op { number, k, add, sub, mul, div, neg, floor };

    Op op = Op::number;
    std::int64_t value = 0;  // number only
    std::vector<Expr> args;

    static Expr number(std::int64_t v) { return {Op::number, v, {}}; }
    static Expr symbol_k() { return {Op::k, 0, {}}; }
    static Expr binary(Op op, Expr a, Expr b) { return {op, 0, {std::move(a), std::move(b)}}; }
    /// p/q as a literal (a number when q = 1).
    static Expr constant(const Rational& r);

    /// Throws PreconditionError on division by zero.
    Rational evaluate(int k) const;
    bool uses_k() const;

    friend bool operator==(const Expr&, const Expr&) = default;
};

/// Canonical text: minimal parentheses that keep the tree shape.
std::string to_string(const Expr& e);

/// A degree interval written as a class name or as LO..HI.
struct RangeRef {
    std::string name;  // empty for an explicit range
    Expr lo, hi;

    friend bool operator==(const RangeRef&, const RangeRef&) = default;
};

struct SelectorSpec {
    SelectorKind kind = SelectorKind::each_direction;
    int thread_length = 0;
    std::optional<RangeRef> target;

    friend bool operator==(const SelectorSpec&, const SelectorSpec&) = default;
};

struct ClassDecl {
    std::string name;
    Expr lo, hi;
    friend bool operator==(const ClassDecl&, const ClassDecl&) = default;
};

struct RuleStmt {
    std::string label;
    RangeRef sender;
    SelectorSpec selector;
    Expr amount;
    friend bool operator==(const RuleStmt&, const RuleStmt&) = default;
};

struct SponsorStmt {
    int thread_length = 0;
    RangeRef sponsor;
    Expr amount;
    friend bool operator==(const SponsorStmt&, const SponsorStmt&) = default;
};

struct PatternStmt {
    std::string id;
    /// Active for k in [when_lo, when_hi]; absent bounds are open.
    std::optional<int> when_lo, when_hi;
    Expr root;
    std::vector<SelectorSpec> slots;
    ReductionPlan plan;
    friend bool operator==(const PatternStmt&, const PatternStmt&) = default;
};

struct RulesDocument {
    int version = 1;
    std::optional<Theorem> theorem;
    /// Declared k range; k_hi absent means unbounded.
    std::optional<int> k_lo, k_hi;
    std::vector<ClassDecl> classes;
    std::optional<Expr> threshold;
    std::vector<RuleStmt> rules;
    std::vector<SponsorStmt> sponsors;
    std::vector<PatternStmt> patterns;

    /// Classes by name, rules by label, sponsors by thread length and
    /// patterns by id; ties keep their order.
    void canonicalize();
    friend bool operator==(const RulesDocument&, const RulesDocument&) = default;
};

/// Parses a .rules document into canonical order. Throws ParseError with
/// the 1-based line and column of the first problem.
RulesDocument parse_rules(const std::string& text);

/// Canonical text; parse_rules(serialize_rules(d)) == d for parsed d.
std::string serialize_rules(const RulesDocument& doc);

/// The document at a fixed k: every expression a constant, the domain k..k,
/// and only the patterns active at k.
RulesDocument instantiate(const RulesDocument& doc, int k);

/// The rule set the document describes at `k`. Throws PreconditionError
/// when k is outside the domain, an amount is not positive, or a degree
/// bound is not an integer.
RuleSet compile_rules(const RulesDocument& doc, int k);

/// Reads a .rules file; ParseError messages are prefixed with the path.
RulesDocument load_rules_file(const std::string& path);

}  // namespace gsq

#include "gsq/rules_format.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "gsq/error.hpp"

namespace gsq {

// ---------------------------------------------------------------- expressions

Expr Expr::constant(const Rational& r) {
    const std::int64_t p = r.numerator() < 0 ? -r.numerator() : r.numerator();
    Expr e = r.denominator() == 1 ? number(p) : binary(Op::div, number(p), number(r.denominator()));
    if (r.numerator() < 0) return {Op::neg, 0, {std::move(e)}};
    return e;
}

Rational Expr::evaluate(int k) const {
    switch (op) {
        case Op::number: return Rational(value);
        case Op::k: return Rational(k);
        case Op::add: return args[0].evaluate(k) + args[1].evaluate(k);
        case Op::sub: return args[0].evaluate(k) - args[1].evaluate(k);
        case Op::mul: return args[0].evaluate(k) * args[1].evaluate(k);
        case Op::div: {
            const Rational d = args[1].evaluate(k);
            if (d.numerator() == 0) throw PreconditionError("division by zero at k = " + std::to_string(k));
            return args[0].evaluate(k) / d;
        }
        case Op::neg: return -args[0].evaluate(k);
        case Op::floor: {
            const Rational x = args[0].evaluate(k);
            std::int64_t q = x.numerator() / x.denominator();
            if (x.numerator() < 0 && q * x.denominator() != x.numerator()) --q;
            return Rational(q);
        }
    }
    return 0;
}

bool Expr::uses_k() const {
    if (op == Op::k) return true;
    return std::any_of(args.begin(), args.end(), [](const Expr& a) { return a.uses_k(); });
}

namespace {

int precedence(const Expr& e) {
    switch (e.op) {
        case Expr::Op::add:
        case Expr::Op::sub: return 1;
        case Expr::Op::mul:
        case Expr::Op::div: return 2;
        default: return 3;
    }
}

std::string render(const Expr& e, int min_prec, bool strict) {
    std::string s;
    switch (e.op) {
        case Expr::Op::number: s = std::to_string(e.value); break;
        case Expr::Op::k: s = "k"; break;
        case Expr::Op::neg: s = "-" + render(e.args[0], 3, false); break;
        case Expr::Op::floor: s = "floor(" + render(e.args[0], 0, false) + ")"; break;
        default: {
            const int p = precedence(e);
            const char* sym = e.op == Expr::Op::add ? "+" : e.op == Expr::Op::sub ? "-" : e.op == Expr::Op::mul ? "*" : "/";
            s = render(e.args[0], p, false) + sym + render(e.args[1], p, true);
        }
    }
    const int own = precedence(e);
    if (own < min_prec || (strict && own == min_prec)) return "(" + s + ")";
    return s;
}

}  // namespace

std::string to_string(const Expr& e) { return render(e, 0, false); }

// ---------------------------------------------------------------- canonical order

void RulesDocument::canonicalize() {
    std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.name < b.name; });
    std::stable_sort(rules.begin(), rules.end(), [](const auto& a, const auto& b) { return a.label < b.label; });
    std::stable_sort(sponsors.begin(), sponsors.end(),
                     [](const auto& a, const auto& b) { return a.thread_length < b.thread_length; });
    std::stable_sort(patterns.begin(), patterns.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
}

// ---------------------------------------------------------------- parser

namespace {

struct Position {
    std::size_t line, column;
};

class LineParser {
public:
    LineParser(const std::string& text, std::size_t line) : s_(text), line_(line) {}

    [[noreturn]] void fail(const std::string& message) const { fail_at(pos_, message); }
    [[noreturn]] void fail_at(std::size_t pos, const std::string& message) const {
        throw ParseError(line_, pos + 1, message);
    }

    Position here() {
        skip_ws();
        return {line_, pos_ + 1};
    }
    std::size_t pos() {
        skip_ws();
        return pos_;
    }
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool at_end() {
        skip_ws();
        return pos_ >= s_.size();
    }
    bool peek(const std::string& token) {
        skip_ws();
        return s_.compare(pos_, token.size(), token) == 0;
    }
    bool accept(const std::string& token) {
        if (!peek(token)) return false;
        pos_ += token.size();
        return true;
    }
    void expect(const std::string& token) {
        if (!accept(token)) fail("expected '" + token + "'");
    }
    void expect_end() {
        if (!at_end()) fail("unexpected text '" + s_.substr(pos_) + "'");
    }

    // Letters, digits, '_' and '-', starting with a letter.
    std::string word() {
        skip_ws();
        std::size_t end = pos_;
        if (end < s_.size() && std::isalpha(static_cast<unsigned char>(s_[end])))
            while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_' || s_[end] == '-'))
                ++end;
        std::string w = s_.substr(pos_, end - pos_);
        pos_ = end;
        return w;
    }

    // Identifier without '-'.
    std::string identifier() {
        skip_ws();
        std::size_t end = pos_;
        if (end < s_.size() && (std::isalpha(static_cast<unsigned char>(s_[end])) || s_[end] == '_'))
            while (end < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[end])) || s_[end] == '_')) ++end;
        std::string w = s_.substr(pos_, end - pos_);
        pos_ = end;
        return w;
    }

    std::string peek_identifier() {
        const std::size_t save = pos_;
        std::string w = identifier();
        pos_ = save;
        return w;
    }

    std::int64_t integer() {
        skip_ws();
        std::size_t end = pos_;
        while (end < s_.size() && std::isdigit(static_cast<unsigned char>(s_[end]))) ++end;
        if (end == pos_) fail("expected an integer");
        if (end - pos_ > 15) fail("integer too large");
        const std::int64_t v = std::stoll(s_.substr(pos_, end - pos_));
        pos_ = end;
        return v;
    }

    Expr expression() {
        Expr e = term();
        for (;;) {
            if (peek("..") || peek("->")) return e;
            if (accept("+")) e = Expr::binary(Expr::Op::add, std::move(e), term());
            else if (accept("-")) e = Expr::binary(Expr::Op::sub, std::move(e), term());
            else return e;
        }
    }

private:
    Expr term() {
        Expr e = factor();
        for (;;) {
            if (accept("*")) e = Expr::binary(Expr::Op::mul, std::move(e), factor());
            else if (accept("/")) e = Expr::binary(Expr::Op::div, std::move(e), factor());
            else return e;
        }
    }

    Expr factor() {
        skip_ws();
        if (accept("-")) return {Expr::Op::neg, 0, {factor()}};
        if (accept("(")) {
            Expr e = expression();
            expect(")");
            return e;
        }
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) return Expr::number(integer());
        const std::size_t start = pos_;
        const std::string id = identifier();
        if (id == "k") return Expr::symbol_k();
        if (id == "floor") {
            expect("(");
            Expr inner = expression();
            expect(")");
            return {Expr::Op::floor, 0, {std::move(inner)}};
        }
        fail_at(start, id.empty() ? "expected an expression" : "unknown symbol '" + id + "'");
    }

    const std::string& s_;
    std::size_t line_;
    std::size_t pos_ = 0;
};

struct PendingCheck {
    Position where;
    std::string name;
};

struct AmountCheck {
    Position where;
    const Expr* amount;
};

class DocumentParser {
public:
    RulesDocument run(const std::string& text) {
        std::istringstream in(text);
        std::string raw;
        std::size_t line = 0;
        while (std::getline(in, raw)) {
            ++line;
            if (!raw.empty() && raw.back() == '\r') raw.pop_back();
            const auto hash = raw.find('#');
            const std::string body = hash == std::string::npos ? raw : raw.substr(0, hash);
            LineParser p(body, line);
            if (p.at_end()) continue;
            statement(p);
        }
        check_references();
        check_amounts();
        doc_.canonicalize();
        return std::move(doc_);
    }

private:
    void statement(LineParser& p) {
        const std::size_t start = p.pos();
        const std::string kw = p.word();
        if (kw == "format") {
            const auto v = p.integer();
            if (v != 1) p.fail_at(start, "unsupported format version " + std::to_string(v));
            doc_.version = static_cast<int>(v);
        } else if (kw == "theorem") {
            if (doc_.theorem) p.fail_at(start, "theorem declared twice");
            const std::size_t at = p.pos();
            const std::string name = p.identifier();
            auto t = parse_theorem(name);
            if (!t) p.fail_at(at, "unknown theorem '" + name + "'");
            doc_.theorem = t;
        } else if (kw == "domain") {
            if (doc_.k_lo) p.fail_at(start, "domain declared twice");
            if (p.identifier() != "k") p.fail("expected 'k'");
            doc_.k_lo = static_cast<int>(p.integer());
            p.expect("..");
            if (!p.at_end()) doc_.k_hi = static_cast<int>(p.integer());
            if (doc_.k_hi && *doc_.k_hi < *doc_.k_lo) p.fail_at(start, "empty domain");
        } else if (kw == "class") {
            ClassDecl c;
            const std::size_t at = p.pos();
            c.name = p.identifier();
            if (c.name.empty() || c.name == "k" || c.name == "floor") p.fail_at(at, "expected a class name");
            for (const auto& other : doc_.classes)
                if (other.name == c.name) p.fail_at(at, "class '" + c.name + "' declared twice");
            p.expect("=");
            c.lo = p.expression();
            p.expect("..");
            c.hi = p.expression();
            doc_.classes.push_back(std::move(c));
        } else if (kw == "threshold") {
            if (doc_.threshold) p.fail_at(start, "threshold declared twice");
            doc_.threshold = p.expression();
        } else if (kw == "rule") {
            RuleStmt r;
            if (p.accept("[")) {
                r.label = p.word();
                if (r.label.empty()) p.fail("expected a rule label");
                p.expect("]");
            }
            r.sender = range_ref(p);
            p.expect("->");
            r.selector = selector(p, false);
            p.expect(":");
            amount_positions_.push_back(p.here());
            r.amount = p.expression();
            doc_.rules.push_back(std::move(r));
        } else if (kw == "sponsor") {
            SponsorStmt s;
            s.thread_length = static_cast<int>(p.integer());
            if (s.thread_length < 1) p.fail("thread length must be positive");
            if (p.word() != "by") p.fail("expected 'by'");
            s.sponsor = range_ref(p);
            p.expect(":");
            sponsor_positions_.push_back(p.here());
            s.amount = p.expression();
            doc_.sponsors.push_back(std::move(s));
        } else if (kw == "pattern") {
            pattern(p);
        } else {
            p.fail_at(start, kw.empty() ? "expected a statement" : "unknown statement '" + kw + "'");
        }
        p.expect_end();
    }

    void pattern(LineParser& p) {
        PatternStmt s;
        const std::size_t at = p.pos();
        s.id = p.word();
        if (s.id.empty()) p.fail_at(at, "expected a pattern id");
        if (p.peek_identifier() == "when") {
            p.identifier();
            if (p.identifier() != "k") p.fail("expected 'k'");
            s.when_lo = static_cast<int>(p.integer());
            p.expect("..");
            if (!p.peek(":")) s.when_hi = static_cast<int>(p.integer());
        }
        p.expect(":");
        s.root = p.expression();
        p.expect("->");
        do {
            s.slots.push_back(selector(p, true));
        } while (p.accept(","));
        while (p.accept(";")) {
            const std::size_t clause_at = p.pos();
            const std::string clause = p.word();
            std::vector<std::string>* target = nullptr;
            if (clause == "remove") target = &s.plan.remove;
            else if (clause == "recolor") target = &s.plan.recolor;
            else if (clause == "order") target = &s.plan.order;
            else p.fail_at(clause_at, "expected remove, recolor or order");
            if (!target->empty()) p.fail_at(clause_at, "clause '" + clause + "' given twice");
            while (!p.at_end() && !p.peek(";")) {
                const std::size_t role_at = p.pos();
                const std::string role = p.word();
                if (!valid_role(role, s.slots.size())) p.fail_at(role_at, "unknown role '" + role + "'");
                target->push_back(role);
            }
            if (target->empty()) p.fail("clause '" + clause + "' lists no roles");
        }
        if (s.plan.order.empty()) p.fail("pattern needs an order clause");
        for (const auto& existing : doc_.patterns)
            if (existing.id == s.id) p.fail_at(at, "pattern '" + s.id + "' declared twice");
        doc_.patterns.push_back(std::move(s));
    }

    static bool valid_role(const std::string& role, std::size_t slots) {
        if (role == "v") return true;
        if (role.size() < 2 || role[0] != 's') return false;
        if (!std::all_of(role.begin() + 1, role.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
            return false;
        return std::stoul(role.substr(1)) < slots;
    }

    RangeRef range_ref(LineParser& p) {
        RangeRef r;
        const Position where = p.here();
        const std::string id = p.peek_identifier();
        if (!id.empty() && id != "k" && id != "floor") {
            p.identifier();
            r.name = id;
            references_.push_back({where, id});
            return r;
        }
        r.lo = p.expression();
        p.expect("..");
        r.hi = p.expression();
        return r;
    }

    SelectorSpec selector(LineParser& p, bool slot) {
        SelectorSpec s;
        const std::size_t at = p.pos();
        const std::string w = p.word();
        if (w.empty()) p.fail_at(at, "expected a selector");
        if (w == "each-direction" || w == "each-direction-except-2-thread") {
            if (slot) p.fail_at(at, "pattern slots take incident-thread or adjacent-vertex selectors");
            s.kind = w == "each-direction" ? SelectorKind::each_direction : SelectorKind::each_direction_except_2_thread;
            return s;
        }
        if (w == "adjacent-vertex") {
            s.kind = SelectorKind::adjacent_vertex;
            s.target = range_ref(p);
            return s;
        }
        const std::string prefix = "incident-", suffix = "thread";
        if (w.rfind(prefix, 0) == 0 && w.size() >= prefix.size() + suffix.size() &&
            w.compare(w.size() - suffix.size(), suffix.size(), suffix) == 0) {
            const std::string middle = w.substr(prefix.size(), w.size() - prefix.size() - suffix.size());
            s.kind = SelectorKind::incident_thread;
            if (!middle.empty()) {
                if (middle.back() != '-' || middle.size() < 2 ||
                    !std::all_of(middle.begin(), middle.end() - 1, [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
                    p.fail_at(at, "unknown selector '" + w + "'");
                s.thread_length = std::stoi(middle.substr(0, middle.size() - 1));
                if (s.thread_length < 1) p.fail_at(at, "thread length must be positive");
            }
            if (p.peek_identifier() == "to") {
                p.identifier();
                s.target = range_ref(p);
            }
            return s;
        }
        p.fail_at(at, "unknown selector '" + w + "'");
    }

    void check_references() const {
        std::set<std::string> declared;
        for (const auto& c : doc_.classes) declared.insert(c.name);
        for (const auto& ref : references_)
            if (!declared.count(ref.name))
                throw ParseError(ref.where.line, ref.where.column, "undeclared class '" + ref.name + "'");
    }

    // Amounts must be positive wherever the document applies.
    void check_amounts() const {
        std::vector<int> ks;
        if (doc_.k_lo) {
            const int hi = doc_.k_hi ? *doc_.k_hi : *doc_.k_lo + 200;
            for (int k = *doc_.k_lo; k <= hi; ++k) ks.push_back(k);
        }
        auto check = [&](const Expr& e, Position where) {
            std::vector<int> points = ks;
            if (!e.uses_k() && points.empty()) points.push_back(0);
            for (int k : points) {
                Rational v;
                try {
                    v = e.evaluate(k);
                } catch (const PreconditionError& err) {
                    throw ParseError(where.line, where.column, err.what());
                }
                if (v <= Rational(0))
                    throw ParseError(where.line, where.column,
                                     "amount " + to_string(v) + " is not positive" +
                                         (e.uses_k() ? " at k = " + std::to_string(k) : ""));
            }
        };
        for (std::size_t i = 0; i < doc_.rules.size(); ++i) check(doc_.rules[i].amount, amount_positions_[i]);
        for (std::size_t i = 0; i < doc_.sponsors.size(); ++i) check(doc_.sponsors[i].amount, sponsor_positions_[i]);
    }

    RulesDocument doc_;
    std::vector<PendingCheck> references_;
    std::vector<Position> amount_positions_;
    std::vector<Position> sponsor_positions_;
};

}  // namespace

RulesDocument parse_rules(const std::string& text) { return DocumentParser().run(text); }

// ---------------------------------------------------------------- serializer

namespace {

std::string render(const RangeRef& r) {
    if (!r.name.empty()) return r.name;
    return to_string(r.lo) + ".." + to_string(r.hi);
}

std::string render(const SelectorSpec& s) {
    std::string out;
    switch (s.kind) {
        case SelectorKind::each_direction: return "each-direction";
        case SelectorKind::each_direction_except_2_thread: return "each-direction-except-2-thread";
        case SelectorKind::adjacent_vertex: return "adjacent-vertex " + render(*s.target);
        case SelectorKind::incident_thread:
            out = s.thread_length ? "incident-" + std::to_string(s.thread_length) + "-thread" : "incident-thread";
            if (s.target) out += " to " + render(*s.target);
            return out;
    }
    return out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
    return out;
}

}  // namespace

std::string serialize_rules(const RulesDocument& input) {
    RulesDocument doc = input;
    doc.canonicalize();
    std::ostringstream out;
    out << "format " << doc.version << '\n';
    if (doc.theorem) out << "theorem " << to_string(*doc.theorem) << '\n';
    if (doc.k_lo) out << "domain k " << *doc.k_lo << ".." << (doc.k_hi ? std::to_string(*doc.k_hi) : "") << '\n';
    for (const auto& c : doc.classes) out << "class " << c.name << " = " << to_string(c.lo) << ".." << to_string(c.hi) << '\n';
    if (doc.threshold) out << "threshold " << to_string(*doc.threshold) << '\n';
    for (const auto& r : doc.rules) {
        out << "rule ";
        if (!r.label.empty()) out << '[' << r.label << "] ";
        out << render(r.sender) << " -> " << render(r.selector) << " : " << to_string(r.amount) << '\n';
    }
    for (const auto& s : doc.sponsors)
        out << "sponsor " << s.thread_length << " by " << render(s.sponsor) << " : " << to_string(s.amount) << '\n';
    for (const auto& p : doc.patterns) {
        out << "pattern " << p.id;
        if (p.when_lo) out << " when k " << *p.when_lo << ".." << (p.when_hi ? std::to_string(*p.when_hi) : "");
        std::vector<std::string> slots;
        for (const auto& s : p.slots) slots.push_back(render(s));
        out << " : " << to_string(p.root) << " -> " << join(slots, ", ");
        out << " ; remove " << join(p.plan.remove, " ");
        if (!p.plan.recolor.empty()) out << " ; recolor " << join(p.plan.recolor, " ");
        out << " ; order " << join(p.plan.order, " ") << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------- instantiate / compile

namespace {

bool in_domain(const RulesDocument& doc, int k) {
    return (!doc.k_lo || k >= *doc.k_lo) && (!doc.k_hi || k <= *doc.k_hi);
}

bool active(const PatternStmt& p, int k) { return (!p.when_lo || k >= *p.when_lo) && (!p.when_hi || k <= *p.when_hi); }

void require_domain(const RulesDocument& doc, int k) {
    if (in_domain(doc, k)) return;
    throw PreconditionError("k = " + std::to_string(k) + " is outside the document's domain " +
                            std::to_string(doc.k_lo.value_or(0)) + ".." +
                            (doc.k_hi ? std::to_string(*doc.k_hi) : std::string()));
}

RangeRef fixed(const RangeRef& r, int k) {
    if (!r.name.empty()) return r;
    return {"", Expr::constant(r.lo.evaluate(k)), Expr::constant(r.hi.evaluate(k))};
}

SelectorSpec fixed(const SelectorSpec& s, int k) {
    SelectorSpec out = s;
    if (s.target) out.target = fixed(*s.target, k);
    return out;
}

}  // namespace

RulesDocument instantiate(const RulesDocument& doc, int k) {
    require_domain(doc, k);
    RulesDocument out;
    out.version = doc.version;
    out.theorem = doc.theorem;
    out.k_lo = k;
    out.k_hi = k;
    for (const auto& c : doc.classes) out.classes.push_back({c.name, Expr::constant(c.lo.evaluate(k)), Expr::constant(c.hi.evaluate(k))});
    if (doc.threshold) out.threshold = Expr::constant(doc.threshold->evaluate(k));
    for (const auto& r : doc.rules)
        out.rules.push_back({r.label, fixed(r.sender, k), fixed(r.selector, k), Expr::constant(r.amount.evaluate(k))});
    for (const auto& s : doc.sponsors)
        out.sponsors.push_back({s.thread_length, fixed(s.sponsor, k), Expr::constant(s.amount.evaluate(k))});
    for (const auto& p : doc.patterns) {
        if (!active(p, k)) continue;
        PatternStmt q{p.id, std::nullopt, std::nullopt, Expr::constant(p.root.evaluate(k)), {}, p.plan};
        for (const auto& s : p.slots) q.slots.push_back(fixed(s, k));
        out.patterns.push_back(std::move(q));
    }
    out.canonicalize();
    return out;
}

namespace {

int integral(const Rational& r, const std::string& what) {
    if (r.denominator() != 1) throw PreconditionError(what + " evaluates to the non-integer " + to_string(r));
    return static_cast<int>(r.numerator());
}

class Compiler {
public:
    Compiler(const RulesDocument& doc, int k) : doc_(doc), k_(k) {}

    DegreeRange range(const RangeRef& r) const {
        if (!r.name.empty()) {
            for (const auto& c : doc_.classes)
                if (c.name == r.name) return bounds(c.lo, c.hi, "class " + c.name);
            throw PreconditionError("undeclared class '" + r.name + "'");
        }
        return bounds(r.lo, r.hi, "degree range");
    }

    Selector selector(const SelectorSpec& s) const {
        Selector out{s.kind, s.thread_length, std::nullopt};
        if (s.target) out.target = range(*s.target);
        return out;
    }

    Rational amount(const Expr& e, const std::string& what) const {
        const Rational v = e.evaluate(k_);
        if (v <= Rational(0)) throw PreconditionError(what + " is not positive at k = " + std::to_string(k_));
        return v;
    }

private:
    DegreeRange bounds(const Expr& lo, const Expr& hi, const std::string& what) const {
        return {integral(lo.evaluate(k_), what + " lower bound"), integral(hi.evaluate(k_), what + " upper bound")};
    }

    const RulesDocument& doc_;
    int k_;
};

}  // namespace

RuleSet compile_rules(const RulesDocument& doc, int k) {
    require_domain(doc, k);
    if (!doc.theorem) throw PreconditionError("document declares no theorem");
    if (!doc.threshold) throw PreconditionError("document declares no threshold");
    const Compiler c(doc, k);
    RuleSet rs;
    rs.theorem = *doc.theorem;
    rs.k = k;
    rs.threshold = doc.threshold->evaluate(k);
    for (const auto& cls : doc.classes) rs.classes.emplace_back(cls.name, c.range({cls.name, {}, {}}));
    for (const auto& r : doc.rules)
        rs.rules.push_back({r.label, c.range(r.sender), c.selector(r.selector), c.amount(r.amount, "rule " + r.label)});
    for (const auto& s : doc.sponsors)
        rs.sponsors.push_back({s.thread_length, c.range(s.sponsor), c.amount(s.amount, "sponsor amount")});
    for (const auto& p : doc.patterns) {
        if (!active(p, k)) continue;
        const int root = integral(p.root.evaluate(k), "pattern " + p.id + " root degree");
        LocalPattern lp{p.id, {root, root}, {}, p.plan};
        for (const auto& s : p.slots) lp.slots.push_back(c.selector(s));
        rs.patterns.push_back(std::move(lp));
    }
    rs.canonicalize();
    return rs;
}

RulesDocument load_rules_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot read rules file '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_rules(buf.str());
    } catch (const ParseError& e) {
        throw ParseError(e.line(), e.column(), path + ": " + e.message());
    }
}

}  // namespace gsq

#include <algorithm>
#include <cctype>

#include "indep/error.hpp"
#include "indep/il.hpp"

namespace indep::il {

Term Term::var(std::string name) {
    Term t;
    t.kind = Kind::variable;
    t.name = std::move(name);
    return t;
}

Term Term::empty_set() { return Term{}; }

Term Term::complement(Term operand) {
    Term t;
    t.kind = Kind::complement;
    t.operands.push_back(std::move(operand));
    return t;
}

Term Term::set_union(Term lhs, Term rhs) {
    Term t;
    t.kind = Kind::set_union;
    t.operands.push_back(std::move(lhs));
    t.operands.push_back(std::move(rhs));
    return t;
}

Term Term::set_intersection(Term lhs, Term rhs) {
    Term t;
    t.kind = Kind::set_intersection;
    t.operands.push_back(std::move(lhs));
    t.operands.push_back(std::move(rhs));
    return t;
}

Formula Formula::make_atom(Atom a) {
    Formula f;
    f.atom = std::move(a);
    return f;
}

Formula Formula::negation(Formula operand) {
    Formula f;
    f.kind = Kind::negation;
    f.operands.push_back(std::move(operand));
    return f;
}

Formula Formula::conjunction(Formula lhs, Formula rhs) {
    Formula f;
    f.kind = Kind::conjunction;
    f.operands.push_back(std::move(lhs));
    f.operands.push_back(std::move(rhs));
    return f;
}

Formula Formula::disjunction(Formula lhs, Formula rhs) {
    Formula f;
    f.kind = Kind::disjunction;
    f.operands.push_back(std::move(lhs));
    f.operands.push_back(std::move(rhs));
    return f;
}

Formula Formula::implies(Formula lhs, Formula rhs) {
    Formula f = disjunction(negation(std::move(lhs)), std::move(rhs));
    f.implication = true;
    return f;
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Formula formula() {
        Formula lhs = disj();
        if (accept("->")) return Formula::implies(std::move(lhs), formula());
        return lhs;
    }

    Term term() {
        Term lhs = iterm();
        while (accept("+")) lhs = Term::set_union(std::move(lhs), iterm());
        return lhs;
    }

    void finish() {
        skip_space();
        if (pos_ != text_.size()) error("unexpected '" + std::string(1, text_[pos_]) + "'");
    }

private:
    Formula disj() {
        Formula lhs = conj();
        while (peek_is("|")) {
            accept("|");
            lhs = Formula::disjunction(std::move(lhs), conj());
        }
        return lhs;
    }

    Formula conj() {
        Formula lhs = neg();
        while (accept("&")) lhs = Formula::conjunction(std::move(lhs), neg());
        return lhs;
    }

    Formula neg() {
        if (accept("!")) return Formula::negation(neg());
        if (accept("(")) {
            Formula inner = formula();
            expect(")");
            return inner;
        }
        skip_space();
        const std::size_t at = pos_;
        if (identifier() == "I") {
            expect("(");
            Atom a;
            a.first = term();
            expect(",");
            a.second = term();
            expect(",");
            a.third = term();
            expect(")");
            return Formula::make_atom(std::move(a));
        }
        pos_ = at;
        error("expected '!', '(' or an atom I(...)");
    }

    Term iterm() {
        Term lhs = cterm();
        while (accept("*")) lhs = Term::set_intersection(std::move(lhs), cterm());
        return lhs;
    }

    Term cterm() {
        if (accept("~")) return Term::complement(cterm());
        if (accept("(")) {
            Term inner = term();
            expect(")");
            return inner;
        }
        skip_space();
        const std::size_t at = pos_;
        std::string name = identifier();
        if (name.empty()) error("expected a term");
        if (name == "empty") return Term::empty_set();
        if (name == "I") {
            pos_ = at;
            error("'I' is reserved and cannot name a variable");
        }
        return Term::var(std::move(name));
    }

    std::string identifier() {
        skip_space();
        const std::size_t start = pos_;
        if (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
            ++pos_;
            while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        }
        return std::string(text_.substr(start, pos_ - start));
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool peek_is(std::string_view tok) {
        skip_space();
        if (text_.substr(pos_, tok.size()) != tok) return false;
        return true;
    }

    bool accept(std::string_view tok) {
        if (!peek_is(tok)) return false;
        pos_ += tok.size();
        return true;
    }

    void expect(std::string_view tok) {
        if (!accept(tok)) error("expected '" + std::string(tok) + "'");
    }

    [[noreturn]] void error(const std::string& message) {
        skip_space();
        throw ParseError("offset " + std::to_string(pos_ + 1) + ": " + message, 0, pos_ + 1);
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

// Binding strength, loosest first.
enum TermPrec { kUnion = 0, kIntersection = 1, kTermPrimary = 2 };
enum FormulaPrec { kImplies = 0, kOr = 1, kAnd = 2, kFormulaPrimary = 3 };

int precedence(const Term& t) {
    switch (t.kind) {
        case Term::Kind::set_union: return kUnion;
        case Term::Kind::set_intersection: return kIntersection;
        default: return kTermPrimary;
    }
}

void print_term(const Term& t, int context, std::string& out) {
    const bool parens = precedence(t) < context;
    if (parens) out += '(';
    switch (t.kind) {
        case Term::Kind::variable: out += t.name; break;
        case Term::Kind::empty: out += "empty"; break;
        case Term::Kind::complement:
            out += '~';
            print_term(t.operands[0], kTermPrimary, out);
            break;
        case Term::Kind::set_union:
            print_term(t.operands[0], kUnion, out);
            out += " + ";
            print_term(t.operands[1], kIntersection, out);
            break;
        case Term::Kind::set_intersection:
            print_term(t.operands[0], kIntersection, out);
            out += " * ";
            print_term(t.operands[1], kTermPrimary, out);
            break;
    }
    if (parens) out += ')';
}

void print_atom(const Atom& a, std::string& out) {
    out += "I(";
    print_term(a.first, kUnion, out);
    out += ", ";
    print_term(a.second, kUnion, out);
    out += ", ";
    print_term(a.third, kUnion, out);
    out += ')';
}

int precedence(const Formula& f) {
    switch (f.kind) {
        case Formula::Kind::disjunction: return f.implication ? kImplies : kOr;
        case Formula::Kind::conjunction: return kAnd;
        default: return kFormulaPrimary;
    }
}

void print_formula(const Formula& f, int context, std::string& out) {
    const bool parens = precedence(f) < context;
    if (parens) out += '(';
    switch (f.kind) {
        case Formula::Kind::atom: print_atom(f.atom, out); break;
        case Formula::Kind::negation:
            out += '!';
            print_formula(f.operands[0], kFormulaPrimary, out);
            break;
        case Formula::Kind::conjunction:
            print_formula(f.operands[0], kAnd, out);
            out += " & ";
            print_formula(f.operands[1], kFormulaPrimary, out);
            break;
        case Formula::Kind::disjunction:
            if (f.implication) {
                print_formula(f.operands[0].operands[0], kOr, out);
                out += " -> ";
                print_formula(f.operands[1], kImplies, out);
            } else {
                print_formula(f.operands[0], kOr, out);
                out += " | ";
                print_formula(f.operands[1], kAnd, out);
            }
            break;
    }
    if (parens) out += ')';
}

void collect_atoms(const Formula& f, std::vector<Atom>& out) {
    if (f.kind == Formula::Kind::atom) {
        out.push_back(f.atom);
        return;
    }
    for (const auto& op : f.operands) collect_atoms(op, out);
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
    if (t.kind == Term::Kind::variable) out.push_back(t.name);
    for (const auto& op : t.operands) collect_variables(op, out);
}

bool conjunction_of_atoms(const Formula& f, std::vector<Atom>& out) {
    if (f.kind == Formula::Kind::atom) {
        out.push_back(f.atom);
        return true;
    }
    if (f.kind != Formula::Kind::conjunction) return false;
    return conjunction_of_atoms(f.operands[0], out) && conjunction_of_atoms(f.operands[1], out);
}

bool disjuncts_into(const Formula& f, Clause& c) {
    switch (f.kind) {
        case Formula::Kind::atom: c.positives.push_back(f.atom); return true;
        case Formula::Kind::negation: return conjunction_of_atoms(f.operands[0], c.negatives);
        case Formula::Kind::disjunction:
            return disjuncts_into(f.operands[0], c) && disjuncts_into(f.operands[1], c);
        case Formula::Kind::conjunction: return false;
    }
    return false;
}

Formula join(const std::vector<Atom>& atoms, bool conjunctive, bool negate) {
    auto literal = [&](const Atom& a) {
        Formula f = Formula::make_atom(a);
        return negate ? Formula::negation(std::move(f)) : f;
    };
    Formula out = literal(atoms.front());
    for (std::size_t i = 1; i < atoms.size(); ++i) {
        out = conjunctive ? Formula::conjunction(std::move(out), literal(atoms[i]))
                          : Formula::disjunction(std::move(out), literal(atoms[i]));
    }
    return out;
}

}  // namespace

Formula parse_formula(std::string_view text) {
    Parser p(text);
    Formula f = p.formula();
    p.finish();
    return f;
}

Term parse_term(std::string_view text) {
    Parser p(text);
    Term t = p.term();
    p.finish();
    return t;
}

Clause parse_clause(std::string_view text) {
    auto c = clause_of_formula(parse_formula(text));
    if (!c) throw ParseError("formula is not a clause", 0, 0);
    return *c;
}

std::string print(const Formula& f) {
    std::string out;
    print_formula(f, kImplies, out);
    return out;
}

std::string print(const Term& t) {
    std::string out;
    print_term(t, kUnion, out);
    return out;
}

std::string print(const Atom& a) {
    std::string out;
    print_atom(a, out);
    return out;
}

std::string print(const Clause& c) { return print(formula_of_clause(c)); }

std::vector<Atom> atoms(const Formula& f) {
    std::vector<Atom> out;
    collect_atoms(f, out);
    return out;
}

std::vector<std::string> variables(const Formula& f) {
    std::vector<std::string> out;
    for (const auto& a : atoms(f)) {
        collect_variables(a.first, out);
        collect_variables(a.second, out);
        collect_variables(a.third, out);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_horn(const Clause& c) { return c.positives.size() <= 1; }

Formula formula_of_clause(const Clause& c) {
    if (c.negatives.empty() && c.positives.empty()) throw InvalidArgument("clause has no literals");
    if (c.negatives.empty()) return join(c.positives, false, false);
    if (c.positives.empty()) return join(c.negatives, false, true);
    return Formula::implies(join(c.negatives, true, false), join(c.positives, false, false));
}

std::optional<Clause> clause_of_formula(const Formula& f) {
    Clause c;
    if (!disjuncts_into(f, c)) return std::nullopt;
    return c;
}

}  // namespace indep::il

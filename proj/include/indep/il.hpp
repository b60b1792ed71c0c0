#pragma once

// Independency logic: set-valued terms, I(.,.,.) atoms, propositional
// formulas over them, and their satisfaction in finite independency models.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indep/model.hpp"
#include "indep/universe.hpp"
#include "indep/varset.hpp"

namespace indep::il {

struct Term {
    enum class Kind { variable, empty, complement, set_union, set_intersection };

    Kind kind = Kind::empty;
    std::string name;            // variable only
    std::vector<Term> operands;  // 1 for complement, 2 for union/intersection

    static Term var(std::string name);
    static Term empty_set();
    static Term complement(Term t);
    static Term set_union(Term lhs, Term rhs);
    static Term set_intersection(Term lhs, Term rhs);

    friend bool operator==(const Term&, const Term&) = default;
};

/// I(first, second, third): `first` independent of `third` given `second`.
struct Atom {
    Term first;
    Term second;
    Term third;

    friend bool operator==(const Atom&, const Atom&) = default;
};

struct Formula {
    enum class Kind { atom, negation, conjunction, disjunction };

    Kind kind = Kind::atom;
    Atom atom;                      // atom only
    std::vector<Formula> operands;  // 1 for negation, 2 for conjunction/disjunction
    /// Set on disjunctions built as `lhs -> rhs`, i.e. (!lhs) | rhs. Only
    /// affects printing.
    bool implication = false;

    static Formula make_atom(Atom a);
    static Formula negation(Formula f);
    static Formula conjunction(Formula lhs, Formula rhs);
    static Formula disjunction(Formula lhs, Formula rhs);
    /// Stored as disjunction(negation(lhs), rhs) with `implication` set.
    static Formula implies(Formula lhs, Formula rhs);

    friend bool operator==(const Formula&, const Formula&) = default;
};

/// A disjunction of literals, read as (/\ negatives) -> (\/ positives).
struct Clause {
    std::vector<Atom> negatives;
    std::vector<Atom> positives;

    friend bool operator==(const Clause&, const Clause&) = default;
};

using Valuation = std::map<std::string, VarSet, std::less<>>;

// Concrete syntax (whitespace-insensitive):
//
//   formula := disj ( "->" formula )?        right-associative
//   disj    := conj ( "|" conj )*
//   conj    := neg ( "&" neg )*
//   neg     := "!" neg | "I" "(" term "," term "," term ")" | "(" formula ")"
//   term    := iterm ( "+" iterm )*          union
//   iterm   := cterm ( "*" cterm )*          intersection
//   cterm   := "~" cterm | "empty" | IDENT | "(" term ")"
//   IDENT   := letter ( letter | digit )*    ("I" and "empty" are reserved)
//
// Binary operators associate to the left. Errors throw ParseError with the
// 1-based position of the offending token; end of input is length + 1.

Formula parse_formula(std::string_view text);
Term parse_term(std::string_view text);
/// Parses a formula and converts it with clause_of_formula; throws
/// ParseError if it is not a clause.
Clause parse_clause(std::string_view text);

/// Canonical text with minimal parentheses; parse(print(f)) == f.
std::string print(const Formula& f);
std::string print(const Term& t);
std::string print(const Atom& a);
std::string print(const Clause& c);

/// Distinct variable names of f, sorted.
std::vector<std::string> variables(const Formula& f);
/// Atom occurrences of f, left to right.
std::vector<Atom> atoms(const Formula& f);

/// Complement is taken relative to `u`. Throws InvalidArgument on unbound
/// variables or values outside `u`.
VarSet eval_term(const Term& t, const Valuation& v, const Universe& u);

/// True iff every atom of f evaluates to three pairwise-disjoint sets.
bool is_valid_valuation(const Valuation& v, const Formula& f, const IndependencyModel& m);

/// Truth of f under v in M. Throws InvalidArgument if v is not valid for f.
bool satisfies(const Valuation& v, const Formula& f, const IndependencyModel& m);

/// Upper bound on (valuations x atoms) examined by one model-checking call.
inline constexpr std::uint64_t kDefaultEvaluationBudget = std::uint64_t{1} << 24;

/// M |= f: every valid valuation of f's variables in M satisfies f.
/// Vacuously true when no valid valuation exists. Throws LimitExceeded
/// when (2^n)^k * atoms exceeds `budget`.
bool model_satisfies(const IndependencyModel& m, const Formula& f,
                     std::uint64_t budget = kDefaultEvaluationBudget);

/// Clause check done directly: for every valid valuation, if all negative
/// atoms hold in M then some positive atom holds.
bool check_clause(const IndependencyModel& m, const Clause& c, std::uint64_t budget = kDefaultEvaluationBudget);

/// At most one positive literal.
bool is_horn(const Clause& c);

/// Implication form when both sides are nonempty, a disjunction of
/// positive atoms when there are no negatives, and a disjunction of
/// negated atoms when there are no positives. Throws InvalidArgument for
/// a clause with no literals.
Formula formula_of_clause(const Clause& c);

/// Recognizes disjunctions (including implications) whose disjuncts are
/// atoms or negated conjunctions of atoms. Returns nullopt otherwise.
std::optional<Clause> clause_of_formula(const Formula& f);

enum class ModelFamily { causal, graph_isomorph, all_models };

inline constexpr std::size_t kEntailsCausalMaxSize = 4;
inline constexpr std::size_t kEntailsGraphMaxSize = 5;

/// "causal", "graph-isomorph" or "all-models"; throws InvalidArgument otherwise.
ModelFamily parse_family(std::string_view name);
std::string_view family_name(ModelFamily family);

/// Semantic entailment over a model family on `u`: every model of the
/// family containing all of `given` also contains `query`. Throws
/// LimitExceeded above the family's enumeration gate and InvalidArgument
/// for malformed triples.
bool entails(ModelFamily family, std::span<const Triple> given, const Triple& query, const Universe& u);

/// The semi-graphoid axioms as formulas, in the order symmetry,
/// decomposition, weak union, contraction.
std::vector<Formula> semigraphoid_axiom_formulas();

}  // namespace indep::il

#include <algorithm>
#include <array>

#include "indep/dag.hpp"
#include "indep/error.hpp"
#include "indep/il.hpp"
#include "indep/ugraph.hpp"

namespace indep::il {

namespace {

// Terms and formulas are flattened to postfix programs so the valuation
// sweep does no name lookups or allocation.

struct TermOp {
    Term::Kind kind;
    std::size_t var = 0;
};

using TermProgram = std::vector<TermOp>;

struct AtomProgram {
    std::array<TermProgram, 3> terms;
};

struct FormulaOp {
    Formula::Kind kind;
    std::size_t atom = 0;
};

class Compiled {
public:
    Compiled(const std::vector<Atom>& atoms, std::vector<std::string> vars) : vars_(std::move(vars)) {
        for (const auto& a : atoms) {
            AtomProgram p;
            compile(a.first, p.terms[0]);
            compile(a.second, p.terms[1]);
            compile(a.third, p.terms[2]);
            atoms_.push_back(std::move(p));
        }
    }

    std::size_t variable_count() const { return vars_.size(); }
    std::size_t atom_count() const { return atoms_.size(); }

    /// Evaluates every atom under `values`. Returns false if some atom's
    /// sets are not pairwise disjoint (invalid valuation).
    bool evaluate_atoms(std::span<const VarSet> values, VarSet universe, std::vector<Triple>& out) const {
        out.resize(atoms_.size());
        for (std::size_t i = 0; i < atoms_.size(); ++i) {
            const auto& p = atoms_[i];
            out[i] = Triple{run(p.terms[0], values, universe), run(p.terms[1], values, universe),
                            run(p.terms[2], values, universe)};
            if (!out[i].pairwise_disjoint()) return false;
        }
        return true;
    }

private:
    void compile(const Term& t, TermProgram& prog) const {
        for (const auto& op : t.operands) compile(op, prog);
        TermOp op{t.kind};
        if (t.kind == Term::Kind::variable) {
            op.var = static_cast<std::size_t>(
                std::lower_bound(vars_.begin(), vars_.end(), t.name) - vars_.begin());
        }
        prog.push_back(op);
    }

    VarSet run(const TermProgram& prog, std::span<const VarSet> values, VarSet universe) const {
        auto& stack = scratch_;
        stack.clear();
        for (const auto& op : prog) {
            switch (op.kind) {
                case Term::Kind::variable: stack.push_back(values[op.var]); break;
                case Term::Kind::empty: stack.push_back(VarSet{}); break;
                case Term::Kind::complement: stack.back() = universe - stack.back(); break;
                case Term::Kind::set_union: {
                    const VarSet rhs = stack.back();
                    stack.pop_back();
                    stack.back() = stack.back() | rhs;
                    break;
                }
                case Term::Kind::set_intersection: {
                    const VarSet rhs = stack.back();
                    stack.pop_back();
                    stack.back() = stack.back() & rhs;
                    break;
                }
            }
        }
        return stack.back();
    }

    std::vector<std::string> vars_;
    std::vector<AtomProgram> atoms_;
    mutable std::vector<VarSet> scratch_;
};

void compile_formula(const Formula& f, std::vector<FormulaOp>& prog, std::size_t& next_atom) {
    if (f.kind == Formula::Kind::atom) {
        prog.push_back({f.kind, next_atom++});
        return;
    }
    for (const auto& op : f.operands) compile_formula(op, prog, next_atom);
    prog.push_back({f.kind});
}

bool run_formula(const std::vector<FormulaOp>& prog, const std::vector<char>& truth, std::vector<char>& stack) {
    stack.clear();
    for (const auto& op : prog) {
        switch (op.kind) {
            case Formula::Kind::atom: stack.push_back(truth[op.atom]); break;
            case Formula::Kind::negation: stack.back() = !stack.back(); break;
            case Formula::Kind::conjunction: {
                const char rhs = stack.back();
                stack.pop_back();
                stack.back() = stack.back() && rhs;
                break;
            }
            case Formula::Kind::disjunction: {
                const char rhs = stack.back();
                stack.pop_back();
                stack.back() = stack.back() || rhs;
                break;
            }
        }
    }
    return stack.back();
}

/// Calls f(values) for every assignment of subsets of an n-variable
/// universe to k variables, stopping when f returns false. Returns false
/// iff stopped early.
template <class F>
bool sweep_valuations(std::size_t n, std::size_t k, std::size_t atom_count, std::uint64_t budget, F&& f) {
    const std::size_t bits = n * k;
    const std::uint64_t checks_per = std::max<std::size_t>(atom_count, 1);
    if (bits >= 63 || ((std::uint64_t{1} << bits) > budget / checks_per)) {
        throw LimitExceeded("model checking needs 2^" + std::to_string(bits) + " valuations x " +
                            std::to_string(checks_per) + " atoms; budget is " + std::to_string(budget));
    }
    const std::uint64_t total = std::uint64_t{1} << bits;
    const VarSet::Bits mask = VarSet::full(n).bits();
    std::vector<VarSet> values(k);
    for (std::uint64_t code = 0; code < total; ++code) {
        for (std::size_t j = 0; j < k; ++j) values[j] = VarSet(static_cast<VarSet::Bits>(code >> (n * j)) & mask);
        if (!f(std::span<const VarSet>(values))) return false;
    }
    return true;
}

void check_triple(const Universe& u, const Triple& t) {
    if (!t.pairwise_disjoint()) throw InvalidArgument("triple is not pairwise disjoint");
    if (!u.covers(t.support())) throw InvalidArgument("triple mentions variables outside the universe");
}

}  // namespace

VarSet eval_term(const Term& t, const Valuation& v, const Universe& u) {
    switch (t.kind) {
        case Term::Kind::variable: {
            const auto it = v.find(t.name);
            if (it == v.end()) throw InvalidArgument("unbound variable '" + t.name + "'");
            if (!u.covers(it->second)) throw InvalidArgument("value of '" + t.name + "' is outside the universe");
            return it->second;
        }
        case Term::Kind::empty: return VarSet{};
        case Term::Kind::complement: return u.all() - eval_term(t.operands[0], v, u);
        case Term::Kind::set_union: return eval_term(t.operands[0], v, u) | eval_term(t.operands[1], v, u);
        case Term::Kind::set_intersection:
            return eval_term(t.operands[0], v, u) & eval_term(t.operands[1], v, u);
    }
    return VarSet{};
}

namespace {

Triple eval_atom(const Atom& a, const Valuation& v, const Universe& u) {
    return Triple{eval_term(a.first, v, u), eval_term(a.second, v, u), eval_term(a.third, v, u)};
}

bool truth(const Formula& f, const Valuation& v, const IndependencyModel& m) {
    switch (f.kind) {
        case Formula::Kind::atom: return m.contains(eval_atom(f.atom, v, m.universe()));
        case Formula::Kind::negation: return !truth(f.operands[0], v, m);
        case Formula::Kind::conjunction: return truth(f.operands[0], v, m) && truth(f.operands[1], v, m);
        case Formula::Kind::disjunction: return truth(f.operands[0], v, m) || truth(f.operands[1], v, m);
    }
    return false;
}

}  // namespace

bool is_valid_valuation(const Valuation& v, const Formula& f, const IndependencyModel& m) {
    const auto all = atoms(f);
    return std::all_of(all.begin(), all.end(), [&](const Atom& a) {
        return eval_atom(a, v, m.universe()).pairwise_disjoint();
    });
}

bool satisfies(const Valuation& v, const Formula& f, const IndependencyModel& m) {
    if (!is_valid_valuation(v, f, m)) throw InvalidArgument("valuation is not valid for the formula");
    return truth(f, v, m);
}

bool model_satisfies(const IndependencyModel& m, const Formula& f, std::uint64_t budget) {
    const Compiled compiled(atoms(f), variables(f));
    std::vector<FormulaOp> prog;
    std::size_t next_atom = 0;
    compile_formula(f, prog, next_atom);

    const VarSet universe = m.universe().all();
    std::vector<Triple> triples;
    std::vector<char> atom_truth(compiled.atom_count());
    std::vector<char> stack;
    return sweep_valuations(m.universe().size(), compiled.variable_count(), compiled.atom_count(), budget,
                            [&](std::span<const VarSet> values) {
                                if (!compiled.evaluate_atoms(values, universe, triples)) return true;
                                for (std::size_t i = 0; i < triples.size(); ++i) atom_truth[i] = m.contains(triples[i]);
                                return run_formula(prog, atom_truth, stack);
                            });
}

bool check_clause(const IndependencyModel& m, const Clause& c, std::uint64_t budget) {
    std::vector<Atom> all = c.negatives;
    all.insert(all.end(), c.positives.begin(), c.positives.end());
    std::vector<std::string> vars;
    for (const auto& a : all) {
        for (auto& name : variables(Formula::make_atom(a))) vars.push_back(std::move(name));
    }
    std::sort(vars.begin(), vars.end());
    vars.erase(std::unique(vars.begin(), vars.end()), vars.end());

    const Compiled compiled(all, std::move(vars));
    const std::size_t k = c.negatives.size();
    const VarSet universe = m.universe().all();
    std::vector<Triple> triples;
    return sweep_valuations(m.universe().size(), compiled.variable_count(), compiled.atom_count(), budget,
                            [&](std::span<const VarSet> values) {
                                if (!compiled.evaluate_atoms(values, universe, triples)) return true;
                                for (std::size_t i = 0; i < k; ++i) {
                                    if (!m.contains(triples[i])) return true;
                                }
                                for (std::size_t i = k; i < triples.size(); ++i) {
                                    if (m.contains(triples[i])) return true;
                                }
                                return false;
                            });
}

ModelFamily parse_family(std::string_view name) {
    if (name == "causal") return ModelFamily::causal;
    if (name == "graph-isomorph") return ModelFamily::graph_isomorph;
    if (name == "all-models") return ModelFamily::all_models;
    throw InvalidArgument("unknown model family '" + std::string(name) + "'");
}

std::string_view family_name(ModelFamily family) {
    switch (family) {
        case ModelFamily::causal: return "causal";
        case ModelFamily::graph_isomorph: return "graph-isomorph";
        case ModelFamily::all_models: return "all-models";
    }
    return "?";
}

bool entails(ModelFamily family, std::span<const Triple> given, const Triple& query, const Universe& u) {
    for (const auto& t : given) check_triple(u, t);
    check_triple(u, query);
    const std::size_t n = u.size();

    switch (family) {
        case ModelFamily::all_models:
            // `given` is itself a model, and the smallest one containing `given`.
            return std::find(given.begin(), given.end(), query) != given.end();

        case ModelFamily::causal: {
            if (n > kEntailsCausalMaxSize) {
                throw LimitExceeded("causal entailment is limited to " + std::to_string(kEntailsCausalMaxSize) +
                                    " variables");
            }
            bool entailed = true;
            for_each_dag(u, [&](const Dag& d) {
                const bool premises = std::all_of(given.begin(), given.end(),
                                                  [&](const Triple& t) { return d_separates(d, t); });
                if (premises && !d_separates(d, query)) entailed = false;
                return entailed;
            });
            return entailed;
        }

        case ModelFamily::graph_isomorph: {
            if (n > kEntailsGraphMaxSize) {
                throw LimitExceeded("graph-isomorph entailment is limited to " +
                                    std::to_string(kEntailsGraphMaxSize) + " variables");
            }
            for (const auto& g : enumerate_undirected_graphs(u)) {
                const bool premises = std::all_of(given.begin(), given.end(),
                                                  [&](const Triple& t) { return separates(g, t); });
                if (premises && !separates(g, query)) return false;
            }
            return true;
        }
    }
    return false;
}

std::vector<Formula> semigraphoid_axiom_formulas() {
    return {
        parse_formula("I(X, Z, Y) -> I(Y, Z, X)"),
        parse_formula("I(X, Z, Y + W) -> I(X, Z, Y)"),
        parse_formula("I(X, Z, Y + W) -> I(X, Z + W, Y)"),
        parse_formula("I(X, Z + Y, W) & I(X, Z, Y) -> I(X, Z, Y + W)"),
    };
}

}  // namespace indep::il

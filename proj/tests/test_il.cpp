#include <doctest.h>

#include <random>
#include <set>

#include "indep/error.hpp"
#include "indep/il.hpp"
#include "indep/representability.hpp"
#include "il_generators.hpp"

using namespace indep;
using namespace indep::il;

namespace {

Formula atom(const char* x, const char* y, const char* z) {
    return Formula::make_atom(Atom{Term::var(x), Term::var(y), Term::var(z)});
}

std::size_t parse_error_offset(std::string_view text) {
    try {
        parse_formula(text);
    } catch (const ParseError& e) {
        return e.offset();
    }
    return static_cast<std::size_t>(-1);
}

Triple tri(const Universe& u, const char* a, const char* c, const char* b) {
    return Triple{u.parse_set(a), u.parse_set(c), u.parse_set(b)};
}

}  // namespace

TEST_CASE("parse_formula examples") {
    const auto sym = parse_formula("I(X1, X2, X3) -> I(X3, X2, X1)");
    CHECK(sym == Formula::implies(atom("X1", "X2", "X3"), atom("X3", "X2", "X1")));
    CHECK(sym.implication);

    const auto a = parse_formula("I(X1 + X2, empty, ~X3)");
    REQUIRE(a.kind == Formula::Kind::atom);
    CHECK(a.atom.first == Term::set_union(Term::var("X1"), Term::var("X2")));
    CHECK(a.atom.second == Term::empty_set());
    CHECK(a.atom.third == Term::complement(Term::var("X3")));

    CHECK(parse_formula("I(A,B,C)|I(A,B,C)&I(A,B,C)").kind == Formula::Kind::disjunction);
    CHECK(parse_formula("I(A,B,C) -> I(A,B,C) -> I(A,B,C)").operands[1].implication);
    CHECK(parse_term("X + Y * Z") == Term::set_union(Term::var("X"), Term::set_intersection(Term::var("Y"), Term::var("Z"))));
    CHECK(parse_term("X + Y + Z") == Term::set_union(Term::set_union(Term::var("X"), Term::var("Y")), Term::var("Z")));
    CHECK(parse_term("~~X") == Term::complement(Term::complement(Term::var("X"))));
}

TEST_CASE("parse errors carry the offset") {
    CHECK(parse_error_offset("I(X1,") == 6);
    CHECK(parse_error_offset("") == 1);
    CHECK(parse_error_offset("I(X, Y)") == 7);
    CHECK(parse_error_offset("I(X, Y, Z) &") == 13);
    CHECK(parse_error_offset("I(X, Y, Z) I(X, Y, Z)") == 12);
    CHECK(parse_error_offset("I(I, Y, Z)") == 3);
    CHECK(parse_error_offset("I(X, Y, 3)") == 9);
    CHECK(parse_error_offset("I(X, Y, Z) - I(X, Y, Z)") == 12);
    CHECK_THROWS_AS(parse_term("X +"), ParseError);
    CHECK_THROWS_AS(parse_term("empty1 +"), ParseError);
}

TEST_CASE("print uses minimal parentheses") {
    CHECK(print(parse_formula("I(X1,X2,X3)->I(X3,X2,X1)")) == "I(X1, X2, X3) -> I(X3, X2, X1)");
    CHECK(print(parse_formula("(I(A,B,C) | I(A,B,C)) & !(I(A,B,C) & I(A,B,C))")) ==
          "(I(A, B, C) | I(A, B, C)) & !(I(A, B, C) & I(A, B, C))");
    CHECK(print(parse_formula("(I(A,B,C) -> I(A,B,C)) -> I(A,B,C)")) == "(I(A, B, C) -> I(A, B, C)) -> I(A, B, C)");
    CHECK(print(parse_term("(X + Y) * ~(Z * W)")) == "(X + Y) * ~(Z * W)");
    CHECK(print(parse_term("X + (Y + Z)")) == "X + (Y + Z)");
    CHECK(print(parse_term("((X))")) == "X");
    CHECK(print(parse_term("empty")) == "empty");
}

TEST_CASE("parse and print round-trip on random ASTs") {
    std::mt19937 rng(2024);
    const std::vector<std::string> vars{"X", "Y", "Z1", "W22", "abc"};
    for (int i = 0; i < 1500; ++i) {
        const auto f = gen::random_formula(rng, vars, 4, 3, true);
        const std::string text = print(f);
        const auto back = parse_formula(text);
        REQUIRE(back == f);
        REQUIRE(print(back) == text);
    }
}

TEST_CASE("variables and atoms") {
    const auto f = parse_formula("I(Y, empty, X) & !I(X + Z, Y, ~Y)");
    CHECK(variables(f) == std::vector<std::string>{"X", "Y", "Z"});
    REQUIRE(atoms(f).size() == 2);
    CHECK(atoms(f)[1].first == parse_term("X + Z"));
}

TEST_CASE("eval_term examples") {
    const Universe u({"a", "b", "c"});
    const Valuation v{{"X1", u.parse_set("a")}, {"X2", u.parse_set("a,b")}};
    CHECK(eval_term(parse_term("~empty"), v, u) == u.all());
    CHECK(eval_term(parse_term("X1 * X2"), v, u) == u.parse_set("a"));
    CHECK(eval_term(parse_term("~X1"), v, u) == u.parse_set("b,c"));
    CHECK(eval_term(parse_term("X1 + ~X2"), v, u) == u.parse_set("a,c"));
    CHECK_THROWS_AS(eval_term(parse_term("X3"), v, u), InvalidArgument);
}

TEST_CASE("is_valid_valuation examples") {
    const Universe u({"a", "b", "c"});
    const IndependencyModel m(u);
    const auto f = parse_formula("I(X1, X2, X3)");
    CHECK(is_valid_valuation({{"X1", u.parse_set("a")}, {"X2", u.parse_set("b")}, {"X3", u.parse_set("c")}}, f, m));
    CHECK_FALSE(is_valid_valuation({{"X1", u.parse_set("a")}, {"X2", u.parse_set("a")}, {"X3", u.parse_set("c")}}, f, m));
    CHECK_THROWS_AS(is_valid_valuation({{"X1", u.parse_set("a")}}, f, m), InvalidArgument);
}

TEST_CASE("validity of a conjunction implies validity of its conjuncts") {
    std::mt19937 rng(9);
    const Universe u = Universe::numbered(3);
    const IndependencyModel m(u);
    const std::vector<std::string> vars{"X", "Y", "Z"};
    for (int i = 0; i < 300; ++i) {
        const auto f = gen::random_formula(rng, vars, 2, 2, true);
        const auto g = gen::random_formula(rng, vars, 2, 2, true);
        Valuation v;
        for (const auto& x : vars) v[x] = VarSet(static_cast<std::uint32_t>(gen::pick(rng, 8)));
        if (is_valid_valuation(v, Formula::conjunction(f, g), m)) {
            REQUIRE(is_valid_valuation(v, f, m));
            REQUIRE(is_valid_valuation(v, g, m));
        }
    }
}

TEST_CASE("satisfies examples") {
    const Universe u({"a", "b", "c"});
    IndependencyModel m(u);
    m.insert(tri(u, "a", "-", "b"));
    const Valuation v{{"X1", u.parse_set("a")}, {"X2", VarSet{}}, {"X3", u.parse_set("b")}};
    CHECK(satisfies(v, parse_formula("I(X1, X2, X3)"), m));
    CHECK_FALSE(satisfies(v, parse_formula("!I(X1, X2, X3)"), m));
    CHECK_FALSE(satisfies(v, parse_formula("I(X1, X2, X3) -> I(X3, X2, X1)"), m));
    CHECK_THROWS_AS(satisfies({{"X1", u.parse_set("a")}, {"X2", u.parse_set("a")}, {"X3", VarSet{}}},
                              parse_formula("I(X1, X2, X3)"), m),
                    InvalidArgument);

    const auto col = dsep_model(parse_dag("vars: 1 2 3\n1 -> 2\n3 -> 2\n"));
    const Universe& cu = col.universe();
    const Valuation cv{{"X1", cu.parse_set("1")}, {"X2", VarSet{}}, {"X3", cu.parse_set("3")}};
    const auto symmetry = parse_formula("I(X1, X2, X3) -> I(X3, X2, X1)");
    CHECK(col.contains(tri(cu, "1", "-", "3")));
    CHECK(col.contains(tri(cu, "3", "-", "1")));
    CHECK(satisfies(cv, symmetry, col));
}

TEST_CASE("implication is material on every valid valuation") {
    std::mt19937 rng(17);
    const std::vector<std::string> vars{"X", "Y", "Z"};
    for (int i = 0; i < 300; ++i) {
        const auto m = gen::random_model_mix(rng, 3);
        const auto a = gen::random_formula(rng, vars, 2, 1, true);
        const auto b = gen::random_formula(rng, vars, 2, 1, true);
        const auto imp = Formula::implies(a, b);
        Valuation v;
        for (const auto& x : vars) v[x] = VarSet(static_cast<std::uint32_t>(gen::pick(rng, 8)));
        if (!is_valid_valuation(v, imp, m)) continue;
        REQUIRE(satisfies(v, imp, m) == (!satisfies(v, a, m) || satisfies(v, b, m)));
    }
}

TEST_CASE("model_satisfies examples") {
    const auto symmetry = parse_formula("I(X1, X2, X3) -> I(X3, X2, X1)");
    for (const auto& d : enumerate_dags(Universe::numbered(3))) CHECK(model_satisfies(dsep_model(d), symmetry));

    const Universe u({"a", "b"});
    IndependencyModel one(u);
    one.insert(tri(u, "a", "-", "b"));
    CHECK_FALSE(model_satisfies(one, symmetry));
    CHECK(model_satisfies(full_model(u), symmetry));

    // No valuation is valid: the first two slots are both the whole universe.
    const auto contradiction = parse_formula("I(~empty, ~empty, X) & !I(~empty, ~empty, X)");
    CHECK(model_satisfies(full_model(Universe::numbered(1)), contradiction));
    CHECK(model_satisfies(IndependencyModel(Universe::numbered(1)), contradiction));
}

TEST_CASE("model_satisfies evaluation budget") {
    const IndependencyModel m(Universe::numbered(8));
    const auto f = parse_formula("I(X, Y, Z) -> I(Z, Y, X)");
    CHECK_THROWS_AS(model_satisfies(m, f), LimitExceeded);
    CHECK_THROWS_AS(check_clause(m, parse_clause("I(X, Y, Z) -> I(Z, Y, X)")), LimitExceeded);
    CHECK_NOTHROW(model_satisfies(IndependencyModel(Universe::numbered(4)), f));
    CHECK_THROWS_AS(model_satisfies(IndependencyModel(Universe::numbered(4)), f, 1000), LimitExceeded);
}

TEST_CASE("check_clause examples") {
    const auto weak_union = parse_clause("I(X, Z, Y + W) -> I(X, Z + W, Y)");
    for (const auto& d : enumerate_dags(Universe::numbered(3))) CHECK(check_clause(dsep_model(d), weak_union));

    const Clause positive{{}, {Atom{Term::var("X1"), Term::var("X2"), Term::var("X3")}}};
    CHECK(check_clause(full_model(Universe::numbered(3)), positive));
    CHECK_FALSE(check_clause(IndependencyModel(Universe::numbered(3)), positive));

    // Two triples, contraction's consequent missing.
    const Universe u({"a", "b", "c"});
    IndependencyModel m(u);
    m.insert(tri(u, "a", "b", "c"));
    m.insert(tri(u, "a", "-", "b"));
    bool violated = false;
    for (const auto& v : check_semigraphoid(m)) {
        if (v.axiom == SemigraphoidAxiom::contraction && v.missing == tri(u, "a", "-", "b,c")) violated = true;
    }
    REQUIRE(violated);
    const auto contraction = parse_clause("I(X, Z + Y, W) & I(X, Z, Y) -> I(X, Z, Y + W)");
    CHECK_FALSE(check_clause(m, contraction));
}

TEST_CASE("check_clause agrees with model_satisfies on the clause's formula") {
    std::mt19937 rng(31337);
    const std::vector<std::string> vars{"X", "Y", "Z"};
    std::size_t satisfied = 0;
    for (int i = 0; i < 600; ++i) {
        const auto m = gen::random_model_mix(rng, 2 + i % 2);
        const auto c = gen::random_clause(rng, vars, 3, 2, i % 3 == 0 ? 0 : 1, i % 2 == 0);
        const bool direct = check_clause(m, c);
        REQUIRE(direct == model_satisfies(m, formula_of_clause(c)));
        satisfied += direct;
    }
    CHECK(satisfied > 0);
    CHECK(satisfied < 600);
}

TEST_CASE("is_horn") {
    CHECK(is_horn(parse_clause("I(X, Z, Y) -> I(Y, Z, X)")));
    CHECK(is_horn(parse_clause("!I(X, Z, Y) | !I(Y, Z, X)")));
    CHECK_FALSE(is_horn(parse_clause("I(X, Z, Y) -> I(Y, Z, X) | I(X, Y, Z)")));
}

TEST_CASE("clause and formula translation") {
    const auto disj = parse_formula("!I(X, Z + Y, W) | !I(X, Z, Y) | I(X, Z, Y + W)");
    const auto c = clause_of_formula(disj);
    REQUIRE(c.has_value());
    CHECK(c->negatives.size() == 2);
    CHECK(c->positives.size() == 1);
    const auto imp = formula_of_clause(*c);
    CHECK(print(imp) == "I(X, Z + Y, W) & I(X, Z, Y) -> I(X, Z, Y + W)");
    CHECK(clause_of_formula(imp) == c);
    CHECK(parse_clause(print(*c)) == *c);

    const auto single = clause_of_formula(parse_formula("I(X, Y, Z)"));
    REQUIRE(single.has_value());
    CHECK(single->negatives.empty());
    CHECK(single->positives.size() == 1);

    CHECK_FALSE(clause_of_formula(parse_formula("I(X, Y, Z) & I(Z, Y, X)")).has_value());
    CHECK_FALSE(clause_of_formula(parse_formula("I(X, Y, Z) | (I(X, Y, Z) & I(Z, Y, X))")).has_value());
    CHECK_FALSE(clause_of_formula(parse_formula("!!I(X, Y, Z)")).has_value());
    CHECK_THROWS_AS(parse_clause("I(X, Y, Z) & I(Z, Y, X)"), ParseError);

    CHECK(print(formula_of_clause(Clause{{}, {Atom{Term::var("X"), Term::var("Y"), Term::var("Z")},
                                              Atom{Term::var("Z"), Term::var("Y"), Term::var("X")}}})) ==
          "I(X, Y, Z) | I(Z, Y, X)");
    CHECK(print(formula_of_clause(Clause{{Atom{Term::var("X"), Term::var("Y"), Term::var("Z")}}, {}})) ==
          "!I(X, Y, Z)");
    CHECK_THROWS_AS(formula_of_clause(Clause{}), InvalidArgument);
}

TEST_CASE("random clauses survive the formula round-trip") {
    std::mt19937 rng(77);
    const std::vector<std::string> vars{"X", "Y", "Z"};
    for (int i = 0; i < 500; ++i) {
        const auto c = gen::random_clause(rng, vars, 3, 3, 2, true);
        REQUIRE(clause_of_formula(formula_of_clause(c)) == c);
    }
}

TEST_CASE("entails examples") {
    const Universe u({"a", "b", "c"});
    const std::vector<Triple> given{tri(u, "a", "-", "b")};
    CHECK(entails(ModelFamily::causal, given, tri(u, "b", "-", "a"), u));
    CHECK_FALSE(entails(ModelFamily::causal, {}, tri(u, "a", "-", "b"), u));
    CHECK(entails(ModelFamily::causal, given, tri(u, "a", "-", "b"), u));

    // Strong union holds in every graph model but not in every DAG model.
    CHECK(entails(ModelFamily::graph_isomorph, given, tri(u, "a", "c", "b"), u));
    CHECK_FALSE(entails(ModelFamily::causal, given, tri(u, "a", "c", "b"), u));

    CHECK(entails(ModelFamily::all_models, given, tri(u, "a", "-", "b"), u));
    CHECK_FALSE(entails(ModelFamily::all_models, given, tri(u, "b", "-", "a"), u));

    // An unsatisfiable premise set entails everything.
    const std::vector<Triple> impossible{tri(u, "a", "-", "b"), tri(u, "a", "c", "b"), tri(u, "a", "-", "c"),
                                         tri(u, "a", "b", "c")};
    CHECK(entails(ModelFamily::causal, impossible, tri(u, "b", "-", "c"), u) ==
          entails(ModelFamily::causal, impossible, tri(u, "c", "-", "b"), u));

    CHECK_THROWS_AS(entails(ModelFamily::causal, {}, tri(u, "a", "-", "b"), Universe::numbered(5)), LimitExceeded);
    CHECK_THROWS_AS(entails(ModelFamily::graph_isomorph, {}, Triple{VarSet(1), {}, VarSet(2)}, Universe::numbered(6)),
                    LimitExceeded);
    CHECK_THROWS_AS(entails(ModelFamily::causal, {}, Triple{VarSet(1), VarSet(1), VarSet(2)}, u), InvalidArgument);
}

TEST_CASE("entails agrees with a direct scan of the family") {
    std::mt19937 rng(5);
    const Universe u = Universe::numbered(3);
    const auto dags = enumerate_dags(u);
    const auto graphs = enumerate_undirected_graphs(u);
    std::vector<IndependencyModel> causal, graph;
    for (const auto& d : dags) causal.push_back(dsep_model(d));
    for (const auto& g : graphs) graph.push_back(separation_model(g));
    const auto all = enumerate_disjoint_triples(u);
    auto scan = [&](const std::vector<IndependencyModel>& family, const std::vector<Triple>& given, const Triple& q) {
        for (const auto& m : family) {
            bool has_all = true;
            for (const auto& t : given) has_all = has_all && m.contains(t);
            if (has_all && !m.contains(q)) return false;
        }
        return true;
    };
    for (int i = 0; i < 200; ++i) {
        std::vector<Triple> given;
        const std::size_t k = gen::pick(rng, 3);
        for (std::size_t j = 0; j < k; ++j) given.push_back(all[gen::pick(rng, all.size())]);
        const Triple q = all[gen::pick(rng, all.size())];
        REQUIRE(entails(ModelFamily::causal, given, q, u) == scan(causal, given, q));
        REQUIRE(entails(ModelFamily::graph_isomorph, given, q, u) == scan(graph, given, q));
    }
}

TEST_CASE("family names") {
    CHECK(parse_family("causal") == ModelFamily::causal);
    CHECK(parse_family("graph-isomorph") == ModelFamily::graph_isomorph);
    CHECK(parse_family("all-models") == ModelFamily::all_models);
    CHECK(family_name(ModelFamily::graph_isomorph) == "graph-isomorph");
    CHECK_THROWS_AS(parse_family("bayesian"), InvalidArgument);
}

TEST_CASE("conjunction introduction") {
    std::mt19937 rng(41);
    const std::vector<std::string> vars{"X", "Y", "Z"};
    std::size_t both = 0;
    for (int i = 0; i < 400; ++i) {
        const auto m = gen::random_model_mix(rng, 3);
        const auto f = Formula::make_atom(gen::random_atom(rng, vars, 1, true));
        const auto g = gen::random_formula(rng, vars, 2, 1, true);
        if (model_satisfies(m, f) && model_satisfies(m, g)) {
            ++both;
            REQUIRE(model_satisfies(m, Formula::conjunction(f, g)));
        }
    }
    CHECK(both > 0);
}

TEST_CASE("satisfaction is inherited by sub-models for complement-free formulas") {
    std::mt19937 rng(123);
    const std::vector<std::string> vars{"X", "Y", "Z"};
    std::size_t premises = 0;
    for (int i = 0; i < 400; ++i) {
        const std::size_t n = 3 + i % 2;
        const auto m = gen::random_model_mix(rng, n);
        const auto f = gen::random_formula(rng, vars, 2, 1, false);
        const VarSet v(static_cast<std::uint32_t>(1 + gen::pick(rng, (std::size_t{1} << n) - 1)));
        if (!model_satisfies(m, f)) continue;
        ++premises;
        REQUIRE(model_satisfies(restrict(m, v), f));
    }
    CHECK(premises > 20);
}

TEST_CASE("complement is not inherited by sub-models") {
    // ~X is taken relative to the current universe, so it shrinks with it.
    const Universe u({"a", "b"});
    IndependencyModel m(u);
    u.all().for_each_subset([&](VarSet x) { m.insert(Triple{x, VarSet{}, x.complement(2)}); });
    const auto f = parse_formula("I(X, empty, ~X)");
    CHECK(model_satisfies(m, f));
    CHECK_FALSE(model_satisfies(restrict(m, u.parse_set("a")), f));
}

TEST_CASE("semi-graphoid formulas agree with check_semigraphoid, n = 3") {
    const auto formulas = semigraphoid_axiom_formulas();
    REQUIRE(formulas.size() == 4);
    CHECK(print(formulas[0]) == "I(X, Z, Y) -> I(Y, Z, X)");
    const SemigraphoidAxiom order[] = {SemigraphoidAxiom::symmetry, SemigraphoidAxiom::decomposition,
                                       SemigraphoidAxiom::weak_union, SemigraphoidAxiom::contraction};

    std::vector<IndependencyModel> models;
    for (const auto& d : enumerate_dags(Universe::numbered(3))) models.push_back(dsep_model(d));
    for (const auto& g : enumerate_undirected_graphs(Universe::numbered(3))) models.push_back(separation_model(g));
    std::mt19937 rng(8);
    for (int i = 0; i < 150; ++i) models.push_back(gen::random_model_mix(rng, 3));

    std::size_t failing[4] = {0, 0, 0, 0};
    for (const auto& m : models) {
        std::set<SemigraphoidAxiom> violated;
        for (const auto& v : check_semigraphoid(m)) violated.insert(v.axiom);
        for (std::size_t k = 0; k < 4; ++k) {
            const bool holds = model_satisfies(m, formulas[k]);
            REQUIRE(holds == !violated.count(order[k]));
            failing[k] += !holds;
        }
    }
    for (std::size_t k = 0; k < 4; ++k) CHECK(failing[k] > 0);
}

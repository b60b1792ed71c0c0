#include <doctest.h>

#include "indep/repro.hpp"
#include "indep/representability.hpp"
#include "oracles.hpp"

using namespace indep;

namespace {

bool dsep_by_paths(const Dag& d, std::initializer_list<std::size_t> a, std::initializer_list<std::size_t> c,
                   std::initializer_list<std::size_t> b) {
    Triple t;
    for (auto i : a) t.a = t.a.with(i);
    for (auto i : c) t.c = t.c.with(i);
    for (auto i : b) t.b = t.b.with(i);
    return oracle::d_separates_by_paths(d, t);
}

/// D(x,y): no subset of the other visible nodes separates x and y.
bool always_dependent_by_paths(const Dag& d, std::size_t x, std::size_t y) {
    const VarSet rest = counterexample_visible_set() - VarSet::single(x) - VarSet::single(y);
    bool dependent = true;
    rest.for_each_subset([&](VarSet c) {
        if (oracle::d_separates_by_paths(d, Triple{VarSet::single(x), c, VarSet::single(y)})) dependent = false;
    });
    return dependent;
}

}  // namespace

TEST_CASE("counterexample DAG shape") {
    const Dag d = build_counterexample_dag();
    CHECK(d.universe().names() == std::vector<std::string>{"0", "1", "2", "3", "4"});
    CHECK(d.arc_count() == 4);
    CHECK(d.arcs() == std::vector<Arc>{{0, 2}, {0, 3}, {1, 2}, {4, 3}});
    CHECK(counterexample_visible_set() == VarSet(0b11110));
}

TEST_CASE("the seven statements hold under the path-enumeration oracle") {
    const Dag d = build_counterexample_dag();
    CHECK(always_dependent_by_paths(d, 1, 2));
    CHECK(always_dependent_by_paths(d, 3, 4));
    CHECK(always_dependent_by_paths(d, 2, 3));
    CHECK(dsep_by_paths(d, {1}, {}, {3}));
    CHECK(dsep_by_paths(d, {1}, {4}, {3}));
    CHECK(dsep_by_paths(d, {2}, {}, {4}));
    CHECK(dsep_by_paths(d, {2}, {1}, {4}));
}

TEST_CASE("restricted model contains the listed independencies") {
    const auto sub = restrict(dsep_model(build_counterexample_dag()), counterexample_visible_set());
    const Universe& u = sub.universe();
    CHECK(u.names() == std::vector<std::string>{"1", "2", "3", "4"});
    auto has = [&](const char* a, const char* c, const char* b) {
        return sub.contains(Triple{u.parse_set(a), u.parse_set(c), u.parse_set(b)});
    };
    CHECK(has("1", "-", "3"));
    CHECK(has("1", "4", "3"));
    CHECK(has("2", "-", "4"));
    CHECK(has("2", "1", "4"));
    CHECK(dependent_always(sub, u.index_of("1"), u.index_of("2")));
    CHECK(dependent_always(sub, u.index_of("3"), u.index_of("4")));
    CHECK(dependent_always(sub, u.index_of("2"), u.index_of("3")));
}

TEST_CASE("check_counterexample_statements") {
    const auto sub = restrict(dsep_model(build_counterexample_dag()), counterexample_visible_set());
    const auto checks = check_counterexample_statements(sub);
    REQUIRE(checks.size() == 7);
    std::vector<std::string> names;
    for (const auto& c : checks) {
        CHECK(c.holds);
        names.push_back(c.statement);
    }
    CHECK(names == std::vector<std::string>{"D(1,2)", "D(3,4)", "D(2,3)", "I(1,-,3)", "I(1,4,3)", "I(2,-,4)",
                                            "I(2,1,4)"});

    // A model where every pair is always dependent fails the independencies.
    const auto empty_checks = check_counterexample_statements(IndependencyModel(sub.universe()));
    std::size_t holding = 0;
    for (const auto& c : empty_checks) holding += c.holds;
    CHECK(holding == 3);
}

TEST_CASE("verify_counterexample report") {
    const ReproReport r = verify_counterexample();
    CHECK(r.statements.size() == 7);
    CHECK(r.dag_count_scanned == kExpectedDagsOnFourNodes);
    CHECK(static_cast<std::int64_t>(r.dag_count_scanned) == oracle::dag_count(4));
    CHECK_FALSE(r.causal_witness_found);
    CHECK(r.semigraphoid_ok);
    CHECK(r.full_model_causal);
    CHECK(r.reproduced());

    ReproReport broken = r;
    broken.causal_witness_found = true;
    CHECK_FALSE(broken.reproduced());
    broken = r;
    broken.statements[3].holds = false;
    CHECK_FALSE(broken.reproduced());
    broken = r;
    broken.dag_count_scanned = 542;
    CHECK_FALSE(broken.reproduced());
    broken = r;
    broken.semigraphoid_ok = false;
    CHECK_FALSE(broken.reproduced());
}

TEST_CASE("verify_counterexample is deterministic") {
    const ReproReport a = verify_counterexample();
    const ReproReport b = verify_counterexample();
    REQUIRE(a.statements.size() == b.statements.size());
    for (std::size_t i = 0; i < a.statements.size(); ++i) {
        CHECK(a.statements[i].statement == b.statements[i].statement);
        CHECK(a.statements[i].holds == b.statements[i].holds);
    }
    CHECK(a.dag_count_scanned == b.dag_count_scanned);
}

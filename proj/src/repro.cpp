#include "indep/repro.hpp"

#include <algorithm>

#include "indep/representability.hpp"

namespace indep {

Dag build_counterexample_dag() {
    const Universe u = Universe::numbered(5);
    return Dag(u, {{1, 2}, {0, 2}, {0, 3}, {4, 3}});
}

VarSet counterexample_visible_set() {
    return VarSet::single(1) | VarSet::single(2) | VarSet::single(3) | VarSet::single(4);
}

std::vector<StatementCheck> check_counterexample_statements(const IndependencyModel& restricted) {
    const Universe& u = restricted.universe();
    auto idx = [&](const char* label) { return u.index_of(label); };
    auto set = [&](const char* text) { return u.parse_set(text); };

    std::vector<StatementCheck> out;
    const std::pair<const char*, const char*> dependent[] = {{"1", "2"}, {"3", "4"}, {"2", "3"}};
    for (auto [x, y] : dependent) {
        out.push_back({std::string("D(") + x + "," + y + ")", dependent_always(restricted, idx(x), idx(y))});
    }
    struct Stmt {
        const char* a;
        const char* c;
        const char* b;
    };
    const Stmt independent[] = {{"1", "-", "3"}, {"1", "4", "3"}, {"2", "-", "4"}, {"2", "1", "4"}};
    for (const auto& s : independent) {
        const Triple t{set(s.a), set(s.c), set(s.b)};
        out.push_back({format_triple(u, t), restricted.contains(t)});
    }
    return out;
}

bool ReproReport::reproduced() const {
    const bool all_hold = !statements.empty() &&
                          std::all_of(statements.begin(), statements.end(), [](const auto& s) { return s.holds; });
    return all_hold && dag_count_scanned == kExpectedDagsOnFourNodes && !causal_witness_found && semigraphoid_ok;
}

ReproReport verify_counterexample() {
    const Dag dag = build_counterexample_dag();
    const IndependencyModel full = dsep_model(dag);
    const IndependencyModel restricted = restrict(full, counterexample_visible_set());

    ReproReport report;
    report.statements = check_counterexample_statements(restricted);

    const auto causal = is_causal(restricted);
    report.dag_count_scanned = causal.candidates_scanned;
    report.causal_witness_found = causal.representable();
    report.semigraphoid_ok = check_semigraphoid(restricted).empty();
    report.full_model_causal = is_causal(full).representable();
    return report;
}

}  // namespace indep

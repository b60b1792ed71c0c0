#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "indep/dag.hpp"
#include "indep/model.hpp"

namespace indep {

/// The five-node DAG on {0,1,2,3,4} whose d-separation model, restricted
/// to {1,2,3,4}, is not the d-separation model of any DAG.
///
/// Arcs 1->2, 0->2, 0->3, 4->3: nodes 2 and 3 share the hidden parent 0
/// and each receives one more arc, making 2 and 3 colliders for the
/// outer pairs. Any arc set satisfying the statements in
/// counterexample_statements() works equally well.
Dag build_counterexample_dag();

/// The sub-universe {1,2,3,4} of the counterexample, as a mask over
/// build_counterexample_dag().universe().
VarSet counterexample_visible_set();

struct StatementCheck {
    std::string statement;  // "D(1,2)" or "I(1,-,3)"
    bool holds = false;
};

/// Outcome of the non-closure reproduction.
struct ReproReport {
    std::vector<StatementCheck> statements;
    /// DAGs on the four visible nodes compared with the restricted model.
    std::size_t dag_count_scanned = 0;
    bool causal_witness_found = false;
    bool semigraphoid_ok = false;
    /// The unrestricted five-node model is itself causal.
    bool full_model_causal = false;

    bool reproduced() const;
};

inline constexpr std::size_t kExpectedDagsOnFourNodes = 543;

/// Checks the dependence and independence statements that rule out a DAG
/// on {1,2,3,4} against a restricted model over labels "1".."4".
std::vector<StatementCheck> check_counterexample_statements(const IndependencyModel& restricted);

/// Builds the model, restricts it, checks the statements, scans all DAGs on
/// four nodes for a representation, and runs the semi-graphoid check on
/// the restricted model. Failures are reported, never thrown.
ReproReport verify_counterexample();

}  // namespace indep

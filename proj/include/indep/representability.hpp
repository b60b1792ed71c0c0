#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "indep/dag.hpp"
#include "indep/model.hpp"
#include "indep/ugraph.hpp"

namespace indep {

/// Outcome of a representability check. A model is representable exactly
/// when a witness structure was found.
template <class Witness>
struct RepresentabilityResult {
    std::optional<Witness> witness;
    /// For the constructive graph check: the first triple, in code order,
    /// on which the candidate graph and the model disagree.
    std::optional<Triple> first_discrepancy;
    /// Number of candidate structures compared against the model.
    std::size_t candidates_scanned = 0;

    bool representable() const { return witness.has_value(); }
};

/// True iff no triple ({alpha}, C, {beta}) or ({beta}, C, {alpha}) belongs
/// to M, for any C. Throws InvalidArgument if alpha == beta or either is
/// out of range.
bool dependent_always(const IndependencyModel& m, std::size_t alpha, std::size_t beta);

/// Decides whether M is the separation model of some undirected graph.
/// The only possible graph joins exactly the always-dependent pairs; M is
/// a graph-isomorph iff that graph's separation model equals M.
RepresentabilityResult<UndirectedGraph> is_graph_isomorph(const IndependencyModel& m);

/// Decides whether M is the d-separation model of some DAG by scanning
/// for_each_dag in order and stopping at the first match. The witness is
/// deterministic but only unique up to Markov equivalence.
/// Throws LimitExceeded above `max_size` variables.
RepresentabilityResult<Dag> is_causal(const IndependencyModel& m, std::size_t max_size = kMaxDagEnumerationSize);

enum class SemigraphoidAxiom {
    symmetry,       // I(A,C,B) -> I(B,C,A)
    decomposition,  // I(A,C,B u D) -> I(A,C,B)
    weak_union,     // I(A,C,B u D) -> I(A,C u D,B)
    contraction,    // I(A,C u B,D) & I(A,C,B) -> I(A,C,B u D)
};

std::string_view axiom_name(SemigraphoidAxiom axiom);

/// One instance of an axiom whose antecedents are in M but whose
/// consequent is not.
struct SemigraphoidViolation {
    SemigraphoidAxiom axiom;
    std::vector<Triple> antecedents;
    Triple missing;

    friend bool operator==(const SemigraphoidViolation&, const SemigraphoidViolation&) = default;
};

/// Checks the four semi-graphoid axioms over every instantiation by
/// pairwise-disjoint sets A, B, C, D (any of them possibly empty).
/// Returns every violated instance; empty means M is a semi-graphoid.
std::vector<SemigraphoidViolation> check_semigraphoid(const IndependencyModel& m);

}  // namespace indep

#pragma once

#include <cstddef>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "indep/universe.hpp"
#include "indep/varset.hpp"

namespace indep {

/// An independency model: a universe plus an explicit set of triples.
///
/// Stored extensionally. No symmetry, axiom closure or other implicit
/// membership is assumed; (A,C,B) and (B,C,A) are distinct statements.
/// Every member is pairwise disjoint and lies inside the universe.
class IndependencyModel {
public:
    using const_iterator = std::set<Triple>::const_iterator;

    explicit IndependencyModel(Universe universe) : universe_(std::move(universe)) {}
    /// Duplicates in `triples` collapse. Throws InvalidArgument for
    /// non-disjoint or out-of-universe triples.
    IndependencyModel(Universe universe, std::span<const Triple> triples);

    const Universe& universe() const { return universe_; }
    std::size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }
    bool contains(const Triple& t) const { return triples_.count(t) != 0; }
    const std::set<Triple>& triples() const { return triples_; }
    const_iterator begin() const { return triples_.begin(); }
    const_iterator end() const { return triples_.end(); }

    /// Returns false if the triple was already present.
    bool insert(const Triple& t);

    friend bool operator==(const IndependencyModel&, const IndependencyModel&) = default;

private:
    Universe universe_;
    std::set<Triple> triples_;
};

/// Number of pairwise-disjoint triples over n variables: 4^n.
constexpr std::uint64_t disjoint_triple_count(std::size_t n) { return std::uint64_t{1} << (2 * n); }

/// Decodes the code-th disjoint triple over n variables. Variable i reads
/// base-4 digit i of `code`: 0 = unused, 1 = in A, 2 = in C, 3 = in B.
Triple triple_from_code(std::uint64_t code, std::size_t n);
/// Inverse of triple_from_code; `t` must be pairwise disjoint.
std::uint64_t code_of_triple(const Triple& t);

/// Calls f(triple) for each of the 4^n disjoint triples in code order.
template <class F>
void for_each_disjoint_triple(std::size_t n, F&& f) {
    const std::uint64_t total = disjoint_triple_count(n);
    for (std::uint64_t code = 0; code < total; ++code) f(triple_from_code(code, n));
}

/// All 4^n disjoint triples over `u`, in code order (see triple_from_code).
std::vector<Triple> enumerate_disjoint_triples(const Universe& u);

/// The sub-model M|_V = {(A,C,B) in M : A u C u B is a subset of V},
/// re-indexed over u.sub_universe(V). Labels are preserved. Throws
/// InvalidArgument if V is empty or not a subset of the universe.
IndependencyModel restrict(const IndependencyModel& m, VarSet v);

/// True iff both models hold the same triples. Throws InvalidArgument when
/// the universes (label lists) differ.
bool model_equals(const IndependencyModel& m1, const IndependencyModel& m2);

/// True iff (A,C,B) in M exactly when (B,C,A) in M.
bool is_symmetric(const IndependencyModel& m);

/// The model of all 4^n disjoint triples over `u`.
IndependencyModel full_model(const Universe& u);

// Text format:
//
//   vars: a b c
//   I a | - | b
//   I a | c | b
//
// '#'-prefixed and blank lines are ignored. Sets are '-' or comma-separated
// labels. Duplicate triples are rejected.

IndependencyModel parse_model(std::string_view text);
/// Parses "<set> | <set> | <set>" (as on a model line, without the leading
/// "I"). Throws InvalidArgument on malformed or non-disjoint input.
Triple parse_triple(const Universe& u, std::string_view text);
/// Canonical rendering: header, then triples sorted by (A, C, B) bitmask.
std::string print_model(const IndependencyModel& m);

}  // namespace indep

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indep/model.hpp"
#include "indep/ugraph.hpp"
#include "indep/universe.hpp"
#include "indep/varset.hpp"

namespace indep {

using Arc = std::pair<std::size_t, std::size_t>;  // (from, to)

/// Directed acyclic graph over a universe. Acyclicity is checked once at
/// construction; the arc set cannot change afterwards.
class Dag {
public:
    /// Throws InvalidArgument on self-loops, out-of-range endpoints,
    /// repeated arcs or a directed cycle.
    Dag(Universe universe, const std::vector<Arc>& arcs);

    const Universe& universe() const { return universe_; }
    std::size_t node_count() const { return universe_.size(); }
    VarSet parents(std::size_t node) const { return parents_[node]; }
    VarSet children(std::size_t node) const { return children_[node]; }
    bool has_arc(std::size_t from, std::size_t to) const { return children_[from].contains(to); }
    /// Arcs sorted by (from, to).
    std::vector<Arc> arcs() const;
    std::size_t arc_count() const;

    /// Builds a DAG from one parent set per node. Returns nullopt if the
    /// parent sets contain a directed cycle; throws InvalidArgument on
    /// self-loops or out-of-range parents.
    static std::optional<Dag> from_parents(Universe universe, std::vector<VarSet> parents);

    friend bool operator==(const Dag&, const Dag&) = default;

private:
    Dag(Universe universe, std::vector<VarSet> parents);

    Universe universe_;
    std::vector<VarSet> parents_;
    std::vector<VarSet> children_;
};

/// Strict descendants of w (w itself excluded).
VarSet descendants(const Dag& d, std::size_t w);
/// Strict ancestors of w.
VarSet ancestors(const Dag& d, std::size_t w);
/// `s` together with all ancestors of its members.
VarSet ancestral_closure(const Dag& d, VarSet s);

/// <A|C|B>_D: every trail between A and B is blocked by C. True when A or
/// B is empty. Throws InvalidArgument unless the sets are pairwise disjoint
/// subsets of the universe.
///
/// Explores (node, direction-of-arrival) states from A: a trail may pass a
/// non-collider only outside C, and a collider only if it is C or has a
/// descendant in C.
bool d_separates(const Dag& d, VarSet a, VarSet c, VarSet b);
inline bool d_separates(const Dag& d, const Triple& t) { return d_separates(d, t.a, t.c, t.b); }

/// Same relation computed independently: separation by C in the moral
/// graph of the sub-DAG induced by the ancestral closure of A u B u C.
bool d_separates_moral(const Dag& d, VarSet a, VarSet c, VarSet b);
inline bool d_separates_moral(const Dag& d, const Triple& t) { return d_separates_moral(d, t.a, t.c, t.b); }

/// Moral graph of the sub-DAG induced by `nodes` (parents married, arcs
/// undirected), as a graph over the full universe.
UndirectedGraph moral_graph(const Dag& d, VarSet nodes);

/// All 4^n disjoint triples d-separated in D.
IndependencyModel dsep_model(const Dag& d);

/// True iff alpha and beta are joined by an arc in either direction.
/// Throws InvalidArgument if alpha == beta.
bool dag_pair_connected(const Dag& d, std::size_t alpha, std::size_t beta);

inline constexpr std::size_t kMaxDagEnumerationSize = 5;

/// Calls visit(dag) for every labelled DAG on `u`, in increasing order of
/// the arc bitmask, where bit k stands for the k-th ordered pair (i, j),
/// i != j, in lexicographic order. Stops early when visit returns false.
/// Throws LimitExceeded for universes larger than `max_size`.
void for_each_dag(const Universe& u, const std::function<bool(const Dag&)>& visit,
                  std::size_t max_size = kMaxDagEnumerationSize);

/// Materialized for_each_dag.
std::vector<Dag> enumerate_dags(const Universe& u, std::size_t max_size = kMaxDagEnumerationSize);

/// Text format: `vars:` header, then one `a -> b` arc per line.
Dag parse_dag(std::string_view text);
std::string print_dag(const Dag& d);

}  // namespace indep

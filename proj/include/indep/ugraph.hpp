#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "indep/model.hpp"
#include "indep/universe.hpp"
#include "indep/varset.hpp"

namespace indep {

/// Simple undirected graph over a universe. Adjacency is kept as one
/// neighbour bitmask per node.
class UndirectedGraph {
public:
    explicit UndirectedGraph(Universe universe);
    /// Throws InvalidArgument on self-loops or out-of-range endpoints.
    /// Repeated edges collapse.
    UndirectedGraph(Universe universe, const std::vector<std::pair<std::size_t, std::size_t>>& edges);

    const Universe& universe() const { return universe_; }
    std::size_t node_count() const { return universe_.size(); }
    VarSet neighbours(std::size_t node) const { return adjacency_[node]; }
    bool adjacent(std::size_t u, std::size_t v) const { return adjacency_[u].contains(v); }
    std::size_t edge_count() const;
    /// Edges as (u, v) with u < v, sorted.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const;

    /// Returns false if the edge already existed.
    bool add_edge(std::size_t u, std::size_t v);

    /// Nodes reachable from `from` using only nodes in `allowed`
    /// (`from` itself is included when allowed).
    VarSet reachable(VarSet from, VarSet allowed) const;

    friend bool operator==(const UndirectedGraph&, const UndirectedGraph&) = default;

private:
    Universe universe_;
    std::vector<VarSet> adjacency_;
};

/// <A|C|B>_G: every path from A to B meets C. True when A or B is empty.
/// Throws InvalidArgument unless A, C, B are pairwise disjoint subsets of
/// the universe.
bool separates(const UndirectedGraph& g, VarSet a, VarSet c, VarSet b);
inline bool separates(const UndirectedGraph& g, const Triple& t) { return separates(g, t.a, t.c, t.b); }

/// All 4^n disjoint triples separated in g.
IndependencyModel separation_model(const UndirectedGraph& g);

/// Graph on the sub-universe V with an edge between x and y whenever g has
/// a path x..y whose interior avoids V. Separation statements over V are
/// preserved exactly. Throws InvalidArgument if V is empty.
UndirectedGraph marginal_graph(const UndirectedGraph& g, VarSet v);

inline constexpr std::size_t kMaxGraphEnumerationSize = 6;

/// Every labelled graph on `u`, ordered by edge bitmask, where bit k
/// stands for the k-th pair (i, j), i < j, in lexicographic order.
/// Throws LimitExceeded for universes larger than `max_size`.
std::vector<UndirectedGraph> enumerate_undirected_graphs(const Universe& u,
                                                         std::size_t max_size = kMaxGraphEnumerationSize);

/// Text format: `vars:` header, then one `a -- b` edge per line.
UndirectedGraph parse_graph(std::string_view text);
std::string print_graph(const UndirectedGraph& g);

}  // namespace indep

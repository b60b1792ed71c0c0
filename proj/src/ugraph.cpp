#include "indep/ugraph.hpp"

#include "indep/error.hpp"
#include "text_format.hpp"

namespace indep {

UndirectedGraph::UndirectedGraph(Universe universe)
    : universe_(std::move(universe)), adjacency_(universe_.size()) {}

UndirectedGraph::UndirectedGraph(Universe universe, const std::vector<std::pair<std::size_t, std::size_t>>& edges)
    : UndirectedGraph(std::move(universe)) {
    for (auto [u, v] : edges) add_edge(u, v);
}

bool UndirectedGraph::add_edge(std::size_t u, std::size_t v) {
    if (u >= node_count() || v >= node_count()) throw InvalidArgument("edge endpoint out of range");
    if (u == v) throw InvalidArgument("self-loop on '" + universe_.name(u) + "'");
    if (adjacency_[u].contains(v)) return false;
    adjacency_[u] = adjacency_[u].with(v);
    adjacency_[v] = adjacency_[v].with(u);
    return true;
}

std::size_t UndirectedGraph::edge_count() const {
    std::size_t twice = 0;
    for (auto nb : adjacency_) twice += nb.size();
    return twice / 2;
}

std::vector<std::pair<std::size_t, std::size_t>> UndirectedGraph::edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < node_count(); ++u) {
        adjacency_[u].for_each([&](std::size_t v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

VarSet UndirectedGraph::reachable(VarSet from, VarSet allowed) const {
    VarSet seen = from & allowed;
    VarSet frontier = seen;
    while (!frontier.empty()) {
        VarSet next;
        frontier.for_each([&](std::size_t node) { next |= adjacency_[node]; });
        frontier = (next & allowed) - seen;
        seen |= frontier;
    }
    return seen;
}

bool separates(const UndirectedGraph& g, VarSet a, VarSet c, VarSet b) {
    const Triple t{a, c, b};
    if (!t.pairwise_disjoint()) throw InvalidArgument("separation query sets are not pairwise disjoint");
    if (!g.universe().covers(t.support())) throw InvalidArgument("separation query outside the universe");
    if (a.empty() || b.empty()) return true;
    const VarSet allowed = g.universe().all() - c;
    return g.reachable(a, allowed).disjoint(b);
}

IndependencyModel separation_model(const UndirectedGraph& g) {
    IndependencyModel m(g.universe());
    for_each_disjoint_triple(g.node_count(), [&](const Triple& t) {
        if (separates(g, t)) m.insert(t);
    });
    return m;
}

UndirectedGraph marginal_graph(const UndirectedGraph& g, VarSet v) {
    UndirectedGraph out(g.universe().sub_universe(v));
    const VarSet hidden = g.universe().all() - v;
    v.for_each([&](std::size_t x) {
        // Neighbours of x, or of the hidden component reached from x, that lie in V.
        VarSet via_hidden = g.neighbours(x);
        const VarSet hidden_reach = g.reachable(g.neighbours(x) & hidden, hidden);
        hidden_reach.for_each([&](std::size_t h) { via_hidden |= g.neighbours(h); });
        (via_hidden & v).without(x).for_each([&](std::size_t y) {
            if (x < y) out.add_edge(compress(VarSet::single(x), v).lowest(), compress(VarSet::single(y), v).lowest());
        });
    });
    return out;
}

std::vector<UndirectedGraph> enumerate_undirected_graphs(const Universe& u, std::size_t max_size) {
    const std::size_t n = u.size();
    if (n > max_size) {
        throw LimitExceeded("graph enumeration is limited to " + std::to_string(max_size) + " variables");
    }
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    }
    const std::uint64_t total = std::uint64_t{1} << pairs.size();
    std::vector<UndirectedGraph> out;
    out.reserve(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        UndirectedGraph g(u);
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if ((mask >> k) & 1U) g.add_edge(pairs[k].first, pairs[k].second);
        }
        out.push_back(std::move(g));
    }
    return out;
}

UndirectedGraph parse_graph(std::string_view text) {
    const auto lines = detail::content_lines(text);
    UndirectedGraph g(detail::parse_header(lines));
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto tok = detail::split_whitespace(line.text);
        if (tok.size() != 3 || tok[1] != "--") detail::fail(line, "expected '<label> -- <label>'");
        const auto u = g.universe().find(tok[0]);
        const auto v = g.universe().find(tok[2]);
        if (!u) detail::fail(line, "unknown variable '" + std::string(tok[0]) + "'");
        if (!v) detail::fail(line, "unknown variable '" + std::string(tok[2]) + "'");
        if (*u == *v) detail::fail(line, "self-loop");
        if (!g.add_edge(*u, *v)) detail::fail(line, "duplicate edge");
    }
    return g;
}

std::string print_graph(const UndirectedGraph& g) {
    std::string out = detail::header_line(g.universe());
    for (auto [u, v] : g.edges()) out += g.universe().name(u) + " -- " + g.universe().name(v) + "\n";
    return out;
}

}  // namespace indep

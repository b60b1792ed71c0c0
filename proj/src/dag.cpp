#include "indep/dag.hpp"

#include <algorithm>

#include "indep/error.hpp"
#include "text_format.hpp"

namespace indep {

namespace {

bool acyclic(const std::vector<VarSet>& parents) {
    VarSet remaining = VarSet::full(parents.size());
    while (!remaining.empty()) {
        VarSet sources;
        remaining.for_each([&](std::size_t v) {
            if (parents[v].disjoint(remaining)) sources = sources.with(v);
        });
        if (sources.empty()) return false;
        remaining = remaining - sources;
    }
    return true;
}

std::vector<VarSet> children_of(const std::vector<VarSet>& parents) {
    std::vector<VarSet> children(parents.size());
    for (std::size_t v = 0; v < parents.size(); ++v) {
        parents[v].for_each([&](std::size_t p) { children[p] = children[p].with(v); });
    }
    return children;
}

void check_query(const Dag& d, const Triple& t) {
    if (!t.pairwise_disjoint()) throw InvalidArgument("d-separation query sets are not pairwise disjoint");
    if (!d.universe().covers(t.support())) throw InvalidArgument("d-separation query outside the universe");
}

}  // namespace

Dag::Dag(Universe universe, std::vector<VarSet> parents)
    : universe_(std::move(universe)), parents_(std::move(parents)), children_(children_of(parents_)) {}

Dag::Dag(Universe universe, const std::vector<Arc>& arcs) : universe_(std::move(universe)) {
    const std::size_t n = universe_.size();
    parents_.assign(n, VarSet{});
    for (auto [from, to] : arcs) {
        if (from >= n || to >= n) throw InvalidArgument("arc endpoint out of range");
        if (from == to) throw InvalidArgument("self-loop on '" + universe_.name(from) + "'");
        if (parents_[to].contains(from)) {
            throw InvalidArgument("duplicate arc " + universe_.name(from) + " -> " + universe_.name(to));
        }
        parents_[to] = parents_[to].with(from);
    }
    if (!acyclic(parents_)) throw InvalidArgument("arc set contains a directed cycle");
    children_ = children_of(parents_);
}

std::optional<Dag> Dag::from_parents(Universe universe, std::vector<VarSet> parents) {
    if (parents.size() != universe.size()) throw InvalidArgument("one parent set per node is required");
    for (std::size_t v = 0; v < parents.size(); ++v) {
        if (!universe.covers(parents[v])) throw InvalidArgument("parent out of range");
        if (parents[v].contains(v)) throw InvalidArgument("self-loop on '" + universe.name(v) + "'");
    }
    if (!acyclic(parents)) return std::nullopt;
    return Dag(std::move(universe), std::move(parents));
}

std::vector<Arc> Dag::arcs() const {
    std::vector<Arc> out;
    for (std::size_t from = 0; from < node_count(); ++from) {
        children_[from].for_each([&](std::size_t to) { out.emplace_back(from, to); });
    }
    return out;
}

std::size_t Dag::arc_count() const {
    std::size_t count = 0;
    for (auto p : parents_) count += p.size();
    return count;
}

VarSet descendants(const Dag& d, std::size_t w) {
    VarSet seen;
    VarSet frontier = d.children(w);
    while (!frontier.empty()) {
        seen |= frontier;
        VarSet next;
        frontier.for_each([&](std::size_t v) { next |= d.children(v); });
        frontier = next - seen;
    }
    return seen;
}

VarSet ancestors(const Dag& d, std::size_t w) {
    return ancestral_closure(d, d.parents(w));
}

VarSet ancestral_closure(const Dag& d, VarSet s) {
    VarSet seen = s;
    VarSet frontier = s;
    while (!frontier.empty()) {
        VarSet next;
        frontier.for_each([&](std::size_t v) { next |= d.parents(v); });
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

bool d_separates(const Dag& d, VarSet a, VarSet c, VarSet b) {
    check_query(d, Triple{a, c, b});
    if (a.empty() || b.empty()) return true;

    // Colliders on an active trail must be in C or have a descendant in C,
    // i.e. lie in the ancestral closure of C.
    const VarSet open_colliders = ancestral_closure(d, c);

    // Visited states: arrived from a child (moving up) / from a parent (moving down).
    VarSet up = a;
    VarSet down;
    VarSet frontier_up = a;
    VarSet frontier_down;
    VarSet reached = a;
    while (!frontier_up.empty() || !frontier_down.empty()) {
        VarSet next_up;
        VarSet next_down;
        // Arriving from a child: the node is a non-collider on the trail.
        (frontier_up - c).for_each([&](std::size_t v) {
            next_up |= d.parents(v);
            next_down |= d.children(v);
        });
        frontier_down.for_each([&](std::size_t v) {
            // Arriving from a parent: continuing down keeps v a non-collider,
            // turning back up makes v a collider.
            if (!c.contains(v)) next_down |= d.children(v);
            if (open_colliders.contains(v)) next_up |= d.parents(v);
        });
        frontier_up = next_up - up;
        frontier_down = next_down - down;
        up |= frontier_up;
        down |= frontier_down;
        reached |= (frontier_up | frontier_down) - c;
        if (!reached.disjoint(b)) return false;
    }
    return true;
}

UndirectedGraph moral_graph(const Dag& d, VarSet nodes) {
    UndirectedGraph g(d.universe());
    nodes.for_each([&](std::size_t v) {
        const VarSet pa = d.parents(v) & nodes;
        pa.for_each([&](std::size_t p) {
            g.add_edge(p, v);
            (pa - VarSet::single(p)).for_each([&](std::size_t q) {
                if (p < q) g.add_edge(p, q);
            });
        });
    });
    return g;
}

bool d_separates_moral(const Dag& d, VarSet a, VarSet c, VarSet b) {
    check_query(d, Triple{a, c, b});
    if (a.empty() || b.empty()) return true;
    const VarSet relevant = ancestral_closure(d, a | b | c);
    const UndirectedGraph moral = moral_graph(d, relevant);
    return moral.reachable(a, relevant - c).disjoint(b);
}

IndependencyModel dsep_model(const Dag& d) {
    IndependencyModel m(d.universe());
    for_each_disjoint_triple(d.node_count(), [&](const Triple& t) {
        if (d_separates(d, t)) m.insert(t);
    });
    return m;
}

bool dag_pair_connected(const Dag& d, std::size_t alpha, std::size_t beta) {
    if (alpha == beta) throw InvalidArgument("dag_pair_connected needs two distinct nodes");
    if (alpha >= d.node_count() || beta >= d.node_count()) throw InvalidArgument("node out of range");
    return d.has_arc(alpha, beta) || d.has_arc(beta, alpha);
}

void for_each_dag(const Universe& u, const std::function<bool(const Dag&)>& visit, std::size_t max_size) {
    const std::size_t n = u.size();
    if (n > max_size) {
        throw LimitExceeded("DAG enumeration is limited to " + std::to_string(max_size) + " variables");
    }
    std::vector<Arc> slots;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) slots.emplace_back(i, j);
        }
    }
    const std::uint64_t total = std::uint64_t{1} << slots.size();
    std::vector<VarSet> parents(n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        std::fill(parents.begin(), parents.end(), VarSet{});
        for (std::uint64_t rest = mask; rest != 0; rest &= rest - 1) {
            const auto [from, to] = slots[static_cast<std::size_t>(std::countr_zero(rest))];
            parents[to] = parents[to].with(from);
        }
        auto dag = Dag::from_parents(u, parents);
        if (dag && !visit(*dag)) return;
    }
}

std::vector<Dag> enumerate_dags(const Universe& u, std::size_t max_size) {
    std::vector<Dag> out;
    for_each_dag(u, [&](const Dag& d) {
        out.push_back(d);
        return true;
    }, max_size);
    return out;
}

Dag parse_dag(std::string_view text) {
    const auto lines = detail::content_lines(text);
    const Universe u = detail::parse_header(lines);
    std::vector<Arc> arcs;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        const auto& line = lines[i];
        const auto tok = detail::split_whitespace(line.text);
        if (tok.size() != 3 || tok[1] != "->") detail::fail(line, "expected '<label> -> <label>'");
        const auto from = u.find(tok[0]);
        const auto to = u.find(tok[2]);
        if (!from) detail::fail(line, "unknown variable '" + std::string(tok[0]) + "'");
        if (!to) detail::fail(line, "unknown variable '" + std::string(tok[2]) + "'");
        if (*from == *to) detail::fail(line, "self-loop");
        for (const auto& arc : arcs) {
            if (arc == Arc{*from, *to}) detail::fail(line, "duplicate arc");
        }
        arcs.emplace_back(*from, *to);
    }
    try {
        return Dag(u, arcs);
    } catch (const InvalidArgument& e) {
        throw ParseError(e.what(), 0);
    }
}

std::string print_dag(const Dag& d) {
    std::string out = detail::header_line(d.universe());
    for (auto [from, to] : d.arcs()) out += d.universe().name(from) + " -> " + d.universe().name(to) + "\n";
    return out;
}

}  // namespace indep

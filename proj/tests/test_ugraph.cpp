#include <doctest.h>

#include <random>

#include "indep/error.hpp"
#include "indep/ugraph.hpp"
#include "oracles.hpp"

using namespace indep;

namespace {

UndirectedGraph path_abc() {
    return UndirectedGraph(Universe({"a", "b", "c"}), {{0, 1}, {1, 2}});
}

VarSet s(const UndirectedGraph& g, const char* text) { return g.universe().parse_set(text); }

}  // namespace

TEST_CASE("separates: path a-b-c") {
    const auto g = path_abc();
    CHECK(separates(g, s(g, "a"), s(g, "b"), s(g, "c")));
    CHECK_FALSE(separates(g, s(g, "a"), s(g, "-"), s(g, "c")));
    CHECK(separates(g, s(g, "-"), s(g, "-"), s(g, "c")));
    CHECK(separates(g, s(g, "a"), s(g, "-"), s(g, "-")));
    CHECK_THROWS_AS(separates(g, s(g, "a"), s(g, "a"), s(g, "c")), InvalidArgument);
    CHECK_THROWS_AS(separates(g, s(g, "a,b"), s(g, "-"), s(g, "b")), InvalidArgument);
}

TEST_CASE("separates: two components") {
    const UndirectedGraph g(Universe::numbered(5), {{0, 1}, {0, 2}, {3, 4}});
    CHECK(separates(g, VarSet::single(1), VarSet::single(0), VarSet::single(2)));
    CHECK(separates(g, VarSet::single(1), VarSet{}, VarSet::single(3)));
    CHECK_FALSE(separates(g, VarSet::single(1), VarSet{}, VarSet::single(2)));
}

TEST_CASE("graph construction invariants") {
    UndirectedGraph g(Universe::numbered(3));
    CHECK_THROWS_AS(g.add_edge(1, 1), InvalidArgument);
    CHECK_THROWS_AS(g.add_edge(0, 3), InvalidArgument);
    CHECK(g.add_edge(0, 2));
    CHECK_FALSE(g.add_edge(2, 0));
    CHECK(g.edge_count() == 1);
}

TEST_CASE("separation_model examples") {
    const auto empty2 = separation_model(UndirectedGraph(Universe::numbered(2)));
    CHECK(empty2.size() == 16);

    const auto complete3 = separation_model(UndirectedGraph(Universe::numbered(3), {{0, 1}, {0, 2}, {1, 2}}));
    for (const auto& t : complete3) CHECK((t.a.empty() || t.b.empty()));
    // Every triple with an empty side is present: 4^3 - (triples with both A, B nonempty).
    std::size_t vacuous = 0;
    for_each_disjoint_triple(3, [&](const Triple& t) { vacuous += (t.a.empty() || t.b.empty()); });
    CHECK(complete3.size() == vacuous);

    const auto g = path_abc();
    const auto m = separation_model(g);
    CHECK(m.contains(Triple{s(g, "a"), s(g, "b"), s(g, "c")}));
    CHECK(m.contains(Triple{s(g, "c"), s(g, "b"), s(g, "a")}));
    CHECK_FALSE(m.contains(Triple{s(g, "a"), s(g, "-"), s(g, "c")}));
}

TEST_CASE("separates agrees with path enumeration, exhaustively for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        for (const auto& g : enumerate_undirected_graphs(Universe::numbered(n))) {
            for_each_disjoint_triple(n, [&](const Triple& t) {
                REQUIRE(separates(g, t) == oracle::separates_by_paths(g, t));
            });
        }
    }
}

TEST_CASE("symmetry and strong union, exhaustively for n <= 4") {
    for (std::size_t n = 1; n <= 4; ++n) {
        const VarSet all = VarSet::full(n);
        for (const auto& g : enumerate_undirected_graphs(Universe::numbered(n))) {
            for_each_disjoint_triple(n, [&](const Triple& t) {
                const bool sep = separates(g, t);
                REQUIRE(sep == separates(g, t.mirrored()));
                if (sep) {
                    (all - t.a - t.b - t.c).for_each_subset([&](VarSet d) {
                        REQUIRE(separates(g, t.a, t.c | d, t.b));
                    });
                }
            });
        }
    }
}

TEST_CASE("marginal_graph examples") {
    const Universe u = Universe::numbered(3);
    const UndirectedGraph g(u, {{0, 1}, {0, 2}});
    const auto m = marginal_graph(g, VarSet(0b110));
    CHECK(m.universe().names() == std::vector<std::string>{"1", "2"});
    CHECK(m.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});

    CHECK(marginal_graph(g, u.all()) == g);
    CHECK_THROWS_AS(marginal_graph(g, VarSet{}), InvalidArgument);

    const UndirectedGraph g4(Universe::numbered(4), {{1, 0}, {0, 2}});
    const auto m4 = marginal_graph(g4, VarSet(0b1110));
    // labels 1,2,3 -> indices 0,1,2; only 1--2
    CHECK(m4.edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
}

TEST_CASE("marginal graph preserves pairwise separation within V, n <= 4") {
    for (std::size_t n = 2; n <= 4; ++n) {
        const Universe u = Universe::numbered(n);
        for (const auto& g : enumerate_undirected_graphs(u)) {
            u.all().for_each_subset([&](VarSet v) {
                if (v.empty()) return;
                const auto gm = marginal_graph(g, v);
                v.for_each([&](std::size_t x) {
                    v.for_each([&](std::size_t y) {
                        if (x >= y) return;
                        const VarSet pair = VarSet::single(x) | VarSet::single(y);
                        (v - pair).for_each_subset([&](VarSet c) {
                            REQUIRE(separates(g, VarSet::single(x), c, VarSet::single(y)) ==
                                    separates(gm, compress(VarSet::single(x), v), compress(c, v),
                                              compress(VarSet::single(y), v)));
                        });
                    });
                });
            });
        }
    }
}

TEST_CASE("sub-models of separation models are induced by the marginal graph, random n = 5..7") {
    std::mt19937 rng(5);
    for (int iter = 0; iter < 60; ++iter) {
        const std::size_t n = 5 + iter % 3;
        const Universe u = Universe::numbered(n);
        const auto g = oracle::random_graph(u, 0.35, rng);
        std::uniform_int_distribution<std::uint32_t> pick(1, (1U << n) - 1);
        const VarSet v(pick(rng));
        CHECK(model_equals(restrict(separation_model(g), v), separation_model(marginal_graph(g, v))));
    }
}

TEST_CASE("enumerate_undirected_graphs") {
    CHECK(enumerate_undirected_graphs(Universe::numbered(1)).size() == 1);
    CHECK(enumerate_undirected_graphs(Universe::numbered(2)).size() == 2);
    CHECK(enumerate_undirected_graphs(Universe::numbered(3)).size() == 8);
    CHECK(enumerate_undirected_graphs(Universe::numbered(4)).size() == 64);
    CHECK(enumerate_undirected_graphs(Universe::numbered(6)).size() == 32768);
    CHECK_THROWS_AS(enumerate_undirected_graphs(Universe::numbered(7)), LimitExceeded);

    const auto all3 = enumerate_undirected_graphs(Universe::numbered(3));
    CHECK(all3[0].edge_count() == 0);
    CHECK(all3[1].edges() == std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}});
    CHECK(all3[7].edge_count() == 3);
}

TEST_CASE("graph text format") {
    const auto g = parse_graph("vars: x y z\n# comment\nz -- x\ny -- z\n");
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(0, 2));
    const std::string canonical = print_graph(g);
    CHECK(canonical == "vars: x y z\nx -- z\ny -- z\n");
    CHECK(parse_graph(canonical) == g);

    CHECK_THROWS_AS(parse_graph("vars: x y\nx -- x\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vars: x y\nx -- q\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vars: x y\nx -> y\n"), ParseError);
    CHECK_THROWS_AS(parse_graph("vars: x y\nx -- y\ny -- x\n"), ParseError);
}

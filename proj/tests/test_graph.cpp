#include <catch2/catch_amalgamated.hpp>

#include <domhg/oracle.hpp>

#include "support.hpp"

using namespace testing_support;

namespace {

Graph c5(const GroundSet& g) { return graph(g, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}); }

}  // namespace

TEST_CASE("minimal closed neighborhoods", "[graph]") {
    const auto g5 = omega(5);
    CHECK(minimal_closed_neighborhoods(c5(g5)) == hyper(g5, {{5, 1, 2}, {1, 2, 3}, {2, 3, 4}, {3, 4, 5}, {4, 5, 1}}));
    CHECK(minimal_closed_neighborhoods(Graph::empty(g5)) == uniform(1, g5));
    const auto star = graph(omega(4), {{1, 2}, {1, 3}, {1, 4}});
    CHECK(minimal_closed_neighborhoods(star) == hyper(omega(4), {{1, 2}, {1, 3}, {1, 4}}));
}

TEST_CASE("dominating sets", "[graph]") {
    const auto g4 = omega(4);
    const auto k4 = Graph::complete(g4);
    CHECK(is_dominating(k4, g4.full()));
    for (int x = 0; x < 4; ++x) CHECK(is_dominating(k4, VertexSet::single(x)));
    const auto lonely = graph(g4, {{1, 2}, {2, 3}});
    CHECK_FALSE(is_dominating(lonely, set_of(g4, {1, 2, 3})));

    CHECK(minimal_dominating_sets(graph(g4, {{1, 2}, {3, 4}})) == hyper(g4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));
    CHECK(minimal_dominating_sets(Graph::empty(g4)) == uniform(4, g4));
    CHECK(minimal_dominating_sets(k4) == uniform(1, g4));
}

TEST_CASE("eight-vertex star forest has eight minimal dominating sets", "[graph]") {
    const auto g8 = omega(8);
    const auto g0 = graph(g8, {{1, 2}, {3, 4}, {5, 6}, {5, 7}, {5, 8}});
    CHECK(minimal_dominating_sets(g0) == hyper(g8, {{1, 3, 5}, {1, 3, 6, 7, 8}, {1, 4, 5}, {1, 4, 6, 7, 8},
                                                     {2, 3, 5}, {2, 3, 6, 7, 8}, {2, 4, 5}, {2, 4, 6, 7, 8}}));
}

TEST_CASE("dominating sets agree with the brute-force oracle", "[graph][oracle]") {
    oracle::Random rng(11);
    for (int k = 0; k < 200; ++k) {
        const auto g = rng.graph(omega(rng.between(1, 7)));
        const auto d = minimal_dominating_sets(g);
        CHECK(oracle::edges_of(d) == oracle::dominating_sets(g));
        CHECK(transversal(d) == minimal_closed_neighborhoods(g));
    }
}

TEST_CASE("isolated vertices", "[graph]") {
    const auto g3 = omega(3);
    CHECK(isolated_vertices(Graph::empty(g3)) == g3.full());
    CHECK(isolated_vertices(Graph::complete(g3)).empty());
    CHECK(isolated_vertices(graph(g3, {{1, 2}})) == set_of(g3, {3}));
}

TEST_CASE("disjoint union and join", "[graph]") {
    const auto a = graph(GroundSet({"1", "2"}), {{1, 2}});
    const auto b = graph(GroundSet({"3", "4"}), {{3, 4}});
    const auto sum = disjoint_union({a, b});
    CHECK(sum.ground().labels() == std::vector<std::string>{"1", "2", "3", "4"});
    CHECK(minimal_dominating_sets(sum) == hyper(omega(4), {{1, 3}, {1, 4}, {2, 3}, {2, 4}}));

    const auto e1 = Graph::empty(GroundSet({"1", "2"})), e2 = Graph::empty(GroundSet({"3", "4"}));
    CHECK(minimal_dominating_sets(join({e1, e2})) == uniform(2, omega(4)));

    // A universal vertex joined to a graph with no universal vertex.
    const auto rest = graph(GroundSet({"2", "3", "4", "5"}), {{2, 3}, {4, 5}});
    const auto joined = join({Graph::complete(GroundSet({"1"})), rest});
    std::vector<VertexSet> expected{VertexSet::single(0)};
    const auto rest_sets = minimal_dominating_sets(rest);
    for (auto e : rest_sets.edges()) expected.push_back(VertexSet{e.bits() << 1});
    CHECK(minimal_dominating_sets(joined) == Hypergraph::from_antichain(joined.ground(), expected));

    CHECK_THROWS_AS(join({a, a}), Error);
    try {
        disjoint_union({a, a});
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::OverlappingLabels);
    }
}

TEST_CASE("induced subgraph", "[graph]") {
    const auto g = c5(omega(5));
    const auto sub = induced_subgraph(g, set_of(omega(5), {2, 3, 4}));
    CHECK(sub.ground().labels() == std::vector<std::string>{"2", "3", "4"});
    CHECK(edge_list(sub) == "2-3,3-4");
}

TEST_CASE("star forest predicate", "[graph]") {
    CHECK(is_star_forest(graph(omega(4), {{1, 2}, {1, 3}, {1, 4}})));
    CHECK_FALSE(is_star_forest(c5(omega(5))));
    CHECK_FALSE(is_star_forest(graph(omega(5), {{1, 2}, {3, 4}})));
    CHECK(is_star_forest(graph(omega(4), {{1, 2}, {3, 4}})));
    CHECK_FALSE(is_star_forest(graph(omega(4), {{1, 2}, {2, 3}, {3, 4}})));
}

TEST_CASE("spanning star forest", "[graph]") {
    const auto k13 = graph(omega(4), {{1, 2}, {1, 3}, {1, 4}});
    CHECK(spanning_star_forest(k13) == k13);

    const auto cycle = c5(omega(5));
    const auto f = spanning_star_forest(cycle);
    CHECK(is_star_forest(f));
    CHECK(edge_list(f) == "1-5,2-3,3-4");
    CHECK(is_leq(minimal_dominating_sets(f), minimal_dominating_sets(cycle)));

    const auto path = graph(omega(6), {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}});
    const auto pf = spanning_star_forest(path);
    CHECK(is_star_forest(pf));
    CHECK(is_leq(minimal_dominating_sets(pf), minimal_dominating_sets(path)));

    try {
        spanning_star_forest(graph(omega(3), {{1, 2}}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::HasIsolatedVertex);
    }
}

TEST_CASE("edge codes round-trip", "[graph]") {
    const auto g5 = omega(5);
    for (std::uint64_t c = 0; c < 1024; c += 37) CHECK(Graph::from_edge_code(g5, c).edge_code() == c);
    CHECK(graph(omega(3), {{1, 2}}).edge_code() == 1);
    CHECK(graph(omega(3), {{2, 3}}).edge_code() == 4);
}

TEST_CASE("isomorphism code identifies relabelings", "[graph]") {
    const auto g5 = omega(5);
    const auto a = c5(g5);
    const auto b = graph(g5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}});
    CHECK(isomorphism_code(a) == isomorphism_code(b));
    CHECK(isomorphism_code(a) != isomorphism_code(graph(g5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}})));
}

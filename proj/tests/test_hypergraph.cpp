#include <catch2/catch_amalgamated.hpp>

#include <domhg/oracle.hpp>

#include "support.hpp"

using namespace testing_support;

TEST_CASE("minimize keeps the inclusion-minimal sets in canonical order", "[hypergraph]") {
    const auto g3 = omega(3);
    CHECK(minimize(family(g3, {{1, 2}, {1}, {2, 3}}), g3) == hyper(g3, {{1}, {2, 3}}));
    CHECK(minimize(family(g3, {{1, 2}, {1, 3}, {2, 3}, {1, 2, 3}}), g3) == uniform(2, g3));

    const auto h = minimize(family(g3, {{2, 3}, {1}}), g3);
    REQUIRE(h.size() == 2);
    CHECK(h.edges()[0] == set_of(g3, {1}));
    CHECK(minimize(std::vector<VertexSet>(h.edges().begin(), h.edges().end()), g3) == h);
}

TEST_CASE("minimize and from_antichain reject malformed families", "[hypergraph][errors]") {
    const auto g2 = omega(2);
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvariantViolated;
    };
    CHECK(kind_of([&] { minimize({}, g2); }) == ErrorKind::EmptyFamily);
    CHECK(kind_of([&] { minimize({VertexSet{}}, g2); }) == ErrorKind::EmptySetMember);
    CHECK(kind_of([&] { minimize({VertexSet{0b100}}, g2); }) == ErrorKind::OutOfGround);
    CHECK(kind_of([&] { Hypergraph::from_antichain(g2, family(g2, {{1}, {1, 2}})); }) == ErrorKind::NotAnAntichain);
    CHECK(kind_of([&] { uniform(3, g2); }) == ErrorKind::RankOutOfRange);
    CHECK(kind_of([&] { GroundSet({"a", "a"}); }) == ErrorKind::DuplicateLabel);
    CHECK(kind_of([&] { is_leq(uniform(1, g2), uniform(1, omega(3))); }) == ErrorKind::GroundMismatch);
    CHECK(kind_of([&] { meet(std::span<const Hypergraph>{}); }) == ErrorKind::EmptyList);
}

TEST_CASE("transversal", "[hypergraph]") {
    const auto g4 = omega(4);
    CHECK(transversal(uniform(2, g4)) == uniform(3, g4));
    CHECK(transversal(hyper(omega(1), {{1}})) == hyper(omega(1), {{1}}));
    const auto g3 = omega(3);
    CHECK(transversal(hyper(g3, {{1, 2}, {3}})) == hyper(g3, {{1, 3}, {2, 3}}));
    for (int n = 1; n <= 6; ++n)
        for (int r = 1; r <= n; ++r) CHECK(transversal(uniform(r, omega(n))) == uniform(n - r + 1, omega(n)));
}

TEST_CASE("transversal matches the subset sweep and is an involution", "[hypergraph][oracle]") {
    oracle::Random rng(7);
    for (int k = 0; k < 300; ++k) {
        const auto ground = omega(rng.between(1, 6));
        const auto h = rng.antichain(ground);
        const auto tr = transversal(h);
        CHECK(oracle::edges_of(tr) == oracle::transversal(h));
        CHECK(transversal(tr) == h);
    }
}

TEST_CASE("order between hypergraphs", "[hypergraph]") {
    const auto g3 = omega(3);
    const auto u2 = uniform(2, g3);
    const auto split = hyper(g3, {{1}, {2, 3}});
    CHECK(is_leq(u2, hyper(g3, {{1, 2}, {3}})));
    CHECK(is_leq(split, split));
    CHECK(is_leq(u2, split));
    CHECK_FALSE(is_leq(split, u2));
}

TEST_CASE("meet", "[hypergraph]") {
    const auto g3 = omega(3);
    const auto a = hyper(g3, {{1}, {2, 3}}), b = hyper(g3, {{2}, {1, 3}});
    CHECK(meet(a, b) == uniform(2, g3));
    CHECK(meet(a, a) == a);
    CHECK(meet(a, b) == meet(b, a));

    const auto g4 = omega(4);
    const auto stars = star_decomposition_witness(g4);
    REQUIRE(stars.size() == 3);
    CHECK(meet(stars) == uniform(3, g4));
    CHECK(oracle::edges_of(uniform(3, g4)) == oracle::meet(stars));
}

TEST_CASE("uniform hypergraphs", "[hypergraph]") {
    const auto g3 = omega(3);
    CHECK(uniform(2, g3) == hyper(g3, {{1, 2}, {1, 3}, {2, 3}}));
    CHECK(uniform(3, g3) == hyper(g3, {{1, 2, 3}}));
    CHECK(uniform(1, g3) == hyper(g3, {{1}, {2}, {3}}));
    CHECK(uniform(3, omega(6)).size() == 20);
}

TEST_CASE("restriction and ground", "[hypergraph]") {
    const auto g5 = omega(5), g4 = omega(4);
    const auto r = restrict(uniform(3, g5), set_of(g5, {1, 2, 3, 4}));
    REQUIRE(r);
    CHECK(*r == uniform(3, g4));

    const auto g3 = omega(3);
    const auto h = hyper(g3, {{1}, {2, 3}});
    CHECK(restrict(h, g3.full()) == h);
    const auto small = restrict(h, set_of(g3, {1, 2}));
    REQUIRE(small);
    CHECK(small->ground().labels() == std::vector<std::string>{"1", "2"});
    CHECK(small->size() == 1);
    CHECK_FALSE(restrict(hyper(g3, {{1, 2}}), set_of(g3, {3})));

    CHECK(ground_of(h) == g3.full());
    CHECK(ground_of(hyper(g3, {{1, 2}})) == set_of(g3, {1, 2}));
}

TEST_CASE("relabeling keeps the edges", "[hypergraph]") {
    const GroundSet abc({"a", "b", "c"}), cab({"c", "a", "b"});
    const auto h = Hypergraph::from_antichain(abc, {VertexSet{0b001}, VertexSet{0b110}});
    const auto moved = h.with_ground(cab);
    CHECK(moved.ground() == cab);
    CHECK(moved.contains_edge(VertexSet{0b010}));
    CHECK(moved.contains_edge(VertexSet{0b101}));
    CHECK(moved.with_ground(abc) == h);
}

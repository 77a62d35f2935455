#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

#include "support.hpp"

using namespace testing_support;

TEST_CASE("family sizes", "[families]") {
    const auto g5 = omega(5);
    CHECK(enumerate_family(GraphFamilyKind::CycleC5, g5).size() == 12);
    CHECK(enumerate_family(GraphFamilyKind::CompleteBipartite23, g5).size() == 10);
    CHECK(enumerate_family(GraphFamilyKind::MatchingComplements, omega(4)).size() == 3);
    CHECK(enumerate_family(GraphFamilyKind::MatchingComplements, omega(6)).size() == 15);
    CHECK(enumerate_family(GraphFamilyKind::AllGraphs, omega(4)).size() == 64);
    CHECK(enumerate_family(GraphFamilyKind::Complete, g5).at(0) == Graph::complete(g5));
    CHECK(enumerate_family(GraphFamilyKind::Empty, g5).at(0) == Graph::empty(g5));
}

TEST_CASE("star forests", "[families]") {
    CHECK(star_forests(omega(4)).size() == 7);
    CHECK(star_forests(omega(5)).size() == 35);
    CHECK(star_forests(omega(8)).size() == 5041);
    CHECK(star_forests(omega(1)).empty());

    for (int n = 2; n <= 6; ++n) {
        const auto ground = omega(n);
        const auto all = enumerate_family(GraphFamilyKind::AllGraphs, ground);
        std::vector<Graph> filtered;
        for (std::uint64_t c = 0; c < all.size(); ++c)
            if (is_star_forest(all.at(c))) filtered.push_back(all.at(c));
        CHECK(star_forests(ground) == filtered);
    }
}

TEST_CASE("distinct star forests have distinct dominating hypergraphs", "[families]") {
    for (int n = 2; n <= 6; ++n) {
        std::vector<Hypergraph> ds;
        for (const auto& f : star_forests(omega(n))) ds.push_back(minimal_dominating_sets(f));
        std::sort(ds.begin(), ds.end(), HypergraphOrder{});
        CHECK(std::adjacent_find(ds.begin(), ds.end()) == ds.end());
    }
}

TEST_CASE("families are in ascending edge-code order", "[families]") {
    const auto g5 = omega(5);
    for (auto kind : {GraphFamilyKind::CycleC5, GraphFamilyKind::CompleteBipartite23, GraphFamilyKind::StarForests}) {
        const auto members = enumerate_family(kind, g5).materialize();
        for (std::size_t i = 1; i < members.size(); ++i)
            CHECK(members[i - 1].edge_code() < members[i].edge_code());
    }
}

TEST_CASE("family preconditions", "[families][errors]") {
    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvariantViolated;
    };
    CHECK(kind_of([] { enumerate_family(GraphFamilyKind::CycleC5, omega(4)); }) == ErrorKind::FamilyArityMismatch);
    CHECK(kind_of([] { enumerate_family(GraphFamilyKind::CompleteBipartite23, omega(6)); }) == ErrorKind::FamilyArityMismatch);
    CHECK(kind_of([] { enumerate_family(GraphFamilyKind::MatchingComplements, omega(5)); }) == ErrorKind::FamilyArityMismatch);
    CHECK(kind_of([] { enumerate_family(GraphFamilyKind::AllGraphs, omega(8)); }) == ErrorKind::GroundTooLarge);

    RunOptions wide;
    wide.cap = 8;
    CHECK(enumerate_family(GraphFamilyKind::AllGraphs, omega(8), wide).size() == (std::uint64_t{1} << 28));
    wide.cap = 12;
    CHECK(kind_of([&] { enumerate_family(GraphFamilyKind::AllGraphs, omega(12), wide); }) == ErrorKind::GroundTooLarge);
}

TEST_CASE("environment cap overrides larger requests", "[families]") {
    setenv("DOMHG_MAX_N", "4", 1);
    RunOptions wide;
    wide.cap = 7;
    CHECK_THROWS_AS(enumerate_family(GraphFamilyKind::AllGraphs, omega(5), wide), Error);
    unsetenv("DOMHG_MAX_N");
    CHECK(enumerate_family(GraphFamilyKind::AllGraphs, omega(5), wide).size() == 1024);
}

#include <catch2/catch_amalgamated.hpp>

#include <domhg/oracle.hpp>

#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<std::string> edge_lists(const std::vector<Graph>& gs) {
    std::vector<std::string> out;
    for (const auto& g : gs) out.push_back(edge_list(g));
    return out;
}

}  // namespace

TEST_CASE("four-set hypergraph has five realizations", "[recognition]") {
    const auto g4 = omega(4);
    const auto h = hyper(g4, {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    const auto r = recognize(h);
    CHECK(r.is_domination);
    CHECK_FALSE(r.rejected_by_necessary_condition);
    const std::vector<std::string> expected{"1-2,3-4", "1-2,1-3,3-4", "1-2,1-4,3-4", "1-2,2-3,3-4", "1-2,2-4,3-4"};
    CHECK(edge_lists(r.realizations) == expected);
    CHECK(recognize_by_sweep(h).realizations == r.realizations);
}

TEST_CASE("uniform hypergraphs", "[recognition]") {
    const auto g3 = omega(3), g4 = omega(4);
    CHECK_FALSE(recognize(uniform(2, g3)).is_domination);

    const auto rejected = recognize(uniform(3, g4));
    CHECK(rejected.rejected_by_necessary_condition);
    CHECK_FALSE(rejected.is_domination);
    CHECK(transversal(uniform(3, g4)).size() == 6);

    const auto full = recognize(uniform(4, g4));
    REQUIRE(full.realizations.size() == 1);
    CHECK(full.realizations[0] == Graph::empty(g4));

    CHECK(uniform_recognition(2, g4).realizations.size() == 3);
    CHECK(uniform_recognition(2, omega(6)).realizations.size() == 15);
    CHECK_FALSE(uniform_recognition(3, omega(5)).is_domination);
    const auto one = uniform_recognition(1, omega(5));
    REQUIRE(one.realizations.size() == 1);
    CHECK(one.realizations[0] == Graph::complete(omega(5)));
    CHECK_THROWS_AS(uniform_recognition(0, g4), Error);
}

TEST_CASE("search matches the sweep on every dominating hypergraph up to five vertices", "[recognition][oracle]") {
    for (int n = 1; n <= 5; ++n) {
        const auto ground = omega(n);
        std::vector<Hypergraph> seen;
        const auto all = enumerate_family(GraphFamilyKind::AllGraphs, ground);
        for (std::uint64_t c = 0; c < all.size(); ++c) seen.push_back(minimal_dominating_sets(all.at(c)));
        std::sort(seen.begin(), seen.end(), HypergraphOrder{});
        seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
        for (const auto& h : seen) {
            const auto searched = recognize(h);
            CHECK(searched.is_domination);
            CHECK_FALSE(searched.rejected_by_necessary_condition);
            CHECK(searched.realizations == recognize_by_sweep(h).realizations);
        }
    }
}

TEST_CASE("search matches the sweep on random antichains", "[recognition][oracle]") {
    oracle::Random rng(5);
    for (int k = 0; k < 300; ++k) {
        const auto h = rng.antichain(omega(rng.between(1, 5)), 6);
        const auto searched = recognize(h);
        const auto swept = recognize_by_sweep(h);
        CHECK(searched.realizations == swept.realizations);
        if (searched.rejected_by_necessary_condition) CHECK_FALSE(swept.is_domination);
    }
}

TEST_CASE("recognition searches only the union of the edges", "[recognition]") {
    const auto g4 = omega(4);
    const auto r = recognize(hyper(g4, {{1}, {2}}));
    REQUIRE(r.realizations.size() == 1);
    CHECK(r.realizations[0].ground().labels() == std::vector<std::string>{"1", "2"});
    CHECK(edge_list(r.realizations[0]) == "1-2");
}

TEST_CASE("recognition respects caps and worker counts", "[recognition]") {
    const auto g8 = omega(8);
    CHECK_THROWS_AS(recognize(uniform(1, g8)), Error);
    RunOptions opts;
    opts.cap = 8;
    opts.workers = 3;
    const auto r = recognize(uniform(1, g8), opts);
    REQUIRE(r.realizations.size() == 1);
    CHECK(r.realizations[0] == Graph::complete(g8));

    const auto h = hyper(omega(4), {{1, 3}, {1, 4}, {2, 3}, {2, 4}});
    RunOptions many;
    many.workers = 8;
    CHECK(recognize(h, many).realizations == recognize(h).realizations);
}

TEST_CASE("realization expansion", "[recognition]") {
    const auto g8 = omega(8);
    const auto g0 = graph(g8, {{1, 2}, {3, 4}, {5, 6}, {5, 7}, {5, 8}});
    const auto all = realization_expansion(g0);
    CHECK(all.size() == 25);
    CHECK(std::find(all.begin(), all.end(), g0) != all.end());

    const auto k13 = graph(omega(4), {{1, 2}, {1, 3}, {1, 4}});
    CHECK(realization_expansion(k13) == std::vector<Graph>{k13});

    const auto two = graph(omega(4), {{1, 2}, {3, 4}});
    const auto expanded = realization_expansion(two);
    CHECK(expanded == recognize(minimal_dominating_sets(two)).realizations);
    CHECK(expanded.size() == 5);

    try {
        realization_expansion(graph(omega(3), {{1, 2}, {2, 3}, {1, 3}}));
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NotAStarForest);
    }
}

TEST_CASE("expansion equals recognition for every star forest up to six vertices", "[recognition][oracle]") {
    RunOptions opts;
    opts.workers = 2;
    for (int n = 2; n <= 6; ++n)
        for (const auto& f : star_forests(omega(n)))
            CHECK(realization_expansion(f) == recognize(minimal_dominating_sets(f), opts).realizations);
}

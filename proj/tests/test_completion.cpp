#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"

using namespace testing_support;

namespace {

std::vector<Hypergraph> sorted(std::vector<Hypergraph> hs) {
    std::sort(hs.begin(), hs.end(), HypergraphOrder{});
    return hs;
}

std::vector<Hypergraph> hypergraphs(const std::vector<MinimalCompletion>& ms) {
    std::vector<Hypergraph> out;
    for (const auto& m : ms) out.push_back(m.hypergraph);
    return out;
}

}  // namespace

TEST_CASE("completions of rank 2 on three elements", "[completion]") {
    const auto g3 = omega(3);
    const auto list = completions(2, g3);
    std::vector<Hypergraph> got;
    for (const auto& c : list) {
        got.push_back(c.hypergraph);
        CHECK(minimal_dominating_sets(c.witness) == c.hypergraph);
    }
    CHECK(sorted(got) == sorted({hyper(g3, {{1}, {2, 3}}), hyper(g3, {{2}, {1, 3}}), hyper(g3, {{3}, {1, 2}}), uniform(1, g3)}));

    const auto minimal = minimal_completions(2, g3);
    CHECK(sorted(hypergraphs(minimal)) == sorted({hyper(g3, {{1}, {2, 3}}), hyper(g3, {{2}, {1, 3}}), hyper(g3, {{3}, {1, 2}})}));
    CHECK(verify_meet_decomposition(hypergraphs(minimal), 2, g3));
}

TEST_CASE("rank 1 and even rank 2 have a single completion", "[completion]") {
    for (int n = 1; n <= 4; ++n) {
        const auto list = completions(1, omega(n));
        REQUIRE(list.size() == 1);
        CHECK(list[0].hypergraph == uniform(1, omega(n)));
    }
    const auto m = minimal_completions(2, omega(4));
    REQUIRE(m.size() == 1);
    CHECK(m[0].hypergraph == uniform(2, omega(4)));
    CHECK(m[0].witnesses.size() == 3);
}

TEST_CASE("rank n-1 minimal completions come from star forests", "[completion]") {
    const auto g4 = omega(4);
    std::vector<Hypergraph> stars;
    for (const auto& f : star_forests(g4)) stars.push_back(minimal_dominating_sets(f));
    CHECK(sorted(hypergraphs(minimal_completions(3, g4))) == sorted(stars));
    CHECK(structured_minimal_completions(4, omega(5))->size() == 35);
}

TEST_CASE("rank 3 on five elements", "[completion]") {
    const auto g5 = omega(5);
    const auto minimal = minimal_completions(3, g5);
    CHECK(minimal.size() == 22);
    CHECK(structured_minimal_completions(3, g5) == std::optional(sorted(hypergraphs(minimal))));

    const auto shapes = realization_shapes(minimal);
    REQUIRE(shapes.size() == 2);
    int total = 0;
    for (const auto& s : shapes) total += s.count;
    CHECK(total == 22);
    CHECK(((shapes[0].count == 12 && shapes[1].count == 10) || (shapes[0].count == 10 && shapes[1].count == 12)));

    const auto cycles = enumerate_family(GraphFamilyKind::CycleC5, g5).materialize();
    const auto a = minimal_dominating_sets(graph(g5, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 1}}));
    const auto b = minimal_dominating_sets(graph(g5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}}));
    const auto c = minimal_dominating_sets(graph(g5, {{1, 2}, {2, 4}, {4, 3}, {3, 5}, {5, 1}}));
    CHECK(verify_meet_decomposition(std::vector{a, b}, 3, g5));
    CHECK_FALSE(verify_meet_decomposition(std::vector{a, c}, 3, g5));
}

TEST_CASE("structured families", "[completion]") {
    const auto g5 = omega(5);
    const auto pointed = structured_minimal_completions(2, g5);
    REQUIRE(pointed);
    CHECK(pointed->size() == 5);
    CHECK(std::find(pointed->begin(), pointed->end(), hyper(g5, {{1}, {2, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}, {4, 5}})) !=
          pointed->end());
    CHECK(structured_minimal_completions(7, omega(8))->size() == 5041);
    CHECK_FALSE(structured_minimal_completions(3, omega(6)));
    CHECK(structured_minimal_completions(2, omega(6)) == std::optional(std::vector{uniform(2, omega(6))}));
    for (int n = 1; n <= 5; ++n)
        for (int r = 1; r <= n; ++r)
            if (auto s = structured_minimal_completions(r, omega(n)))
                CHECK(*s == sorted(hypergraphs(minimal_completions(r, omega(n)))));
}

TEST_CASE("poset facts for every rank up to five elements", "[completion]") {
    for (int n = 1; n <= 5; ++n) {
        for (int r = 1; r <= n; ++r) {
            const auto ground = omega(n);
            const auto report = completion_report(r, ground);
            const auto minimal = hypergraphs(report.minimal_completions);
            CHECK(meet(minimal) == uniform(r, ground));
            CHECK((minimal.size() == 1) == uniform_recognition(r, ground).is_domination);
            CHECK((report.decomposition_parameter == 1) == (minimal.size() == 1));
            CHECK(verify_meet_decomposition(report.decomposition_witness, r, ground));
            for (const auto& c : report.completions) {
                CHECK(ground_of(c.hypergraph) == ground.full());
                CHECK(is_leq(uniform(r, ground), c.hypergraph));
                CHECK(std::any_of(minimal.begin(), minimal.end(), [&](const Hypergraph& m) { return is_leq(m, c.hypergraph); }));
            }
            for (std::size_t i = 0; i < minimal.size(); ++i)
                for (std::size_t j = 0; j < minimal.size(); ++j)
                    if (i != j) CHECK_FALSE(is_leq(minimal[i], minimal[j]));
        }
    }
}

TEST_CASE("separating completion", "[completion]") {
    const auto g3 = omega(3);
    const auto sep = separating_completion(hyper(g3, {{1}, {2, 3}}), 2);
    CHECK(sep == hyper(g3, {{1, 2}, {3}}));
    CHECK(is_leq(uniform(2, g3), sep));
    CHECK_FALSE(is_leq(hyper(g3, {{1}, {2, 3}}), sep));

    CHECK(separating_completion(uniform(1, g3), 3) == uniform(3, g3));

    auto kind_of = [](auto&& f) {
        try {
            f();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::InvariantViolated;
    };
    CHECK(kind_of([&] { separating_completion(uniform(2, g3), 2); }) == ErrorKind::PreconditionViolated);
    CHECK(kind_of([&] { separating_completion(uniform(3, g3), 2); }) == ErrorKind::PreconditionViolated);
}

TEST_CASE("decomposition parameter", "[completion]") {
    const auto g3 = omega(3);
    const auto d23 = decomposition_parameter(2, g3);
    CHECK(d23.value == 2);
    CHECK(verify_meet_decomposition(d23.witness, 2, g3));

    const auto d35 = decomposition_parameter(3, omega(5));
    CHECK(d35.value == 2);
    for (const auto& h : d35.witness) CHECK(h.size() == 5);

    const auto d45 = decomposition_parameter(4, omega(5));
    CHECK(d45.value == 4);
    REQUIRE(d45.star_upper_bound);
    CHECK(d45.star_upper_bound->size() == 4);

    const auto d24 = decomposition_parameter(2, omega(4));
    CHECK(d24.value == 1);
    CHECK(d24.witness == std::vector{uniform(2, omega(4))});

    const auto large = decomposition_parameter(2, omega(7));
    CHECK(large.source == DecompositionSource::ClosedForm);
    CHECK(large.value == 2);

    CHECK_THROWS_AS(decomposition_parameter(3, omega(6)), Error);
    RunOptions tight;
    tight.search_budget = 10;
    try {
        decomposition_parameter(4, omega(5), tight);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::SearchSpaceExceeded);
    }
}

TEST_CASE("sweep output does not depend on the worker count", "[completion]") {
    const auto g5 = omega(5);
    RunOptions one, many;
    many.workers = 7;
    const auto a = minimal_completions(3, g5, one), b = minimal_completions(3, g5, many);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].hypergraph == b[i].hypergraph);
        CHECK(a[i].witnesses == b[i].witnesses);
    }
}

TEST_CASE("completion sweep cap", "[completion]") {
    CHECK_THROWS_AS(completions(3, omega(6)), Error);
}

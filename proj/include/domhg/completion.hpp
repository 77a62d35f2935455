#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "families.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "parallel.hpp"

namespace domhg {

inline constexpr int kCompletionsDefaultCap = 5;

struct Completion {
    Hypergraph hypergraph;
    Graph witness;
};

struct MinimalCompletion {
    Hypergraph hypergraph;
    /// Every graph of the sweep realizing the hypergraph, ascending edge order.
    std::vector<Graph> witnesses;
};

enum class DecompositionSource {
    /// Minimal completions taken from the exhaustive graph sweep.
    Sweep,
    /// Minimal completions taken from the closed-form families; the value is
    /// exact given the characterization those families come from.
    ClosedForm,
};

struct DecompositionResult {
    int value = 0;
    std::vector<Hypergraph> witness;
    DecompositionSource source = DecompositionSource::Sweep;
    /// For rank n-1: the n-1 maximal stars centered at the first n-1 elements.
    std::optional<std::vector<Hypergraph>> star_upper_bound;
};

struct CompletionReport {
    int r = 0;
    GroundSet ground;
    std::vector<Completion> completions;
    std::vector<MinimalCompletion> minimal_completions;
    int decomposition_parameter = 0;
    std::vector<Hypergraph> decomposition_witness;
};

namespace detail {

struct EdgeListLess {
    bool operator()(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) const {
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(), CanonicalOrder{});
    }
};

using SweepMap = std::map<std::vector<VertexSet>, std::vector<std::uint64_t>, EdgeListLess>;

inline void require_rank(int r, int n) {
    if (r < 1 || r > n)
        fail(ErrorKind::RankOutOfRange, "rank " + std::to_string(r) + " outside 1.." + std::to_string(n));
}

// Every distinct D(G) above the uniform hypergraph, with all realizing edge codes.
inline SweepMap sweep(int r, const GroundSet& ground, const RunOptions& opts) {
    const int n = ground.size();
    require_rank(r, n);
    require_within_cap(n, kCompletionsDefaultCap, opts, "completion sweep");
    const auto family = enumerate_family(GraphFamilyKind::AllGraphs, ground, opts);
    const Hypergraph target = uniform(r, ground);
    auto parts = parallel_chunks<SweepMap>(family.size(), opts.workers, [&](std::uint64_t b, std::uint64_t e) {
        SweepMap local;
        for (std::uint64_t code = b; code < e; ++code) {
            const Graph g = family.at(code);
            // Every r-set dominates iff every vertex has degree >= n - r.
            bool dense = true;
            for (int x = 0; x < n && dense; ++x) dense = g.degree(x) >= n - r;
            if (!dense) continue;
            const Hypergraph d = minimal_dominating_sets(g);
            if (!is_leq(target, d)) continue;
            local[std::vector<VertexSet>(d.edges().begin(), d.edges().end())].push_back(code);
        }
        return local;
    });
    SweepMap merged;
    for (auto& part : parts)
        for (auto& [edges, codes] : part) {
            auto& slot = merged[edges];
            slot.insert(slot.end(), codes.begin(), codes.end());
        }
    return merged;
}

inline std::vector<std::size_t> minimal_indices(const std::vector<Hypergraph>& hs) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < hs.size(); ++i) {
        bool minimal = true;
        for (std::size_t j = 0; j < hs.size() && minimal; ++j)
            if (j != i && is_leq(hs[j], hs[i])) minimal = false;
        if (minimal) out.push_back(i);
    }
    return out;
}

inline Hypergraph hypergraph_of(const GroundSet& ground, const std::vector<VertexSet>& edges) {
    return Hypergraph::from_antichain(ground, edges);
}

}  // namespace detail

/// Distinct domination hypergraphs on the ground set lying above the rank-r
/// uniform hypergraph, each with the first realizing graph of the sweep.
inline std::vector<Completion> completions(int r, const GroundSet& ground, const RunOptions& opts = {}) {
    std::vector<Completion> out;
    for (const auto& [edges, codes] : detail::sweep(r, ground, opts))
        out.push_back({detail::hypergraph_of(ground, edges), Graph::from_edge_code(ground, codes.front())});
    return out;
}

namespace detail {

inline std::vector<MinimalCompletion> minimal_from_sweep(const SweepMap& swept, const GroundSet& ground) {
    std::vector<Hypergraph> hs;
    std::vector<const std::vector<std::uint64_t>*> codes;
    for (const auto& [edges, c] : swept) {
        hs.push_back(hypergraph_of(ground, edges));
        codes.push_back(&c);
    }
    std::vector<MinimalCompletion> out;
    for (auto i : minimal_indices(hs)) {
        MinimalCompletion m{hs[i], {}};
        for (auto c : *codes[i]) m.witnesses.push_back(Graph::from_edge_code(ground, c));
        out.push_back(std::move(m));
    }
    return out;
}

}  // namespace detail

/// The <=-minimal completions with all of their realizations.
inline std::vector<MinimalCompletion> minimal_completions(int r, const GroundSet& ground, const RunOptions& opts = {}) {
    return detail::minimal_from_sweep(detail::sweep(r, ground, opts), ground);
}

/// {w} together with every pair avoiding w.
inline Hypergraph pointed_pairs(int omega, const GroundSet& ground) {
    std::vector<VertexSet> edges{VertexSet::single(omega)};
    for_each_subset_of_size(ground.size(), 2, [&](VertexSet s) {
        if (!s.contains(omega)) edges.push_back(s);
    });
    return Hypergraph::from_antichain(ground, std::move(edges));
}

/// Minimal completions where a closed form is known: ranks 1, n, 2 (even and
/// odd n), n-1 (star forests) and rank 3 on five elements (5-cycles and K23).
inline std::optional<std::vector<Hypergraph>> structured_minimal_completions(int r, const GroundSet& ground) {
    const int n = ground.size();
    if (r < 1 || r > n) return std::nullopt;
    std::vector<Hypergraph> out;
    auto from_graphs = [&](const std::vector<Graph>& graphs) {
        for (const auto& g : graphs) out.push_back(minimal_dominating_sets(g));
    };
    if (r == 1 || r == n || (r == 2 && n % 2 == 0)) {
        out.push_back(uniform(r, ground));
    } else if (r == 2) {
        for (int w = 0; w < n; ++w) out.push_back(pointed_pairs(w, ground));
    } else if (r == n - 1) {
        from_graphs(star_forests(ground));
    } else if (r == 3 && n == 5) {
        from_graphs(enumerate_family(GraphFamilyKind::CycleC5, ground).materialize());
        from_graphs(enumerate_family(GraphFamilyKind::CompleteBipartite23, ground).materialize());
    } else {
        return std::nullopt;
    }
    std::sort(out.begin(), out.end(), HypergraphOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// A completion that `h` does not lie below: for r < n, extend an edge of h
/// smaller than r by the lowest unused indices to a block B of size r and
/// return {B} together with the singletons outside B (the minimal dominating
/// sets of the empty graph on B joined with the complete graph on the rest).
inline Hypergraph separating_completion(const Hypergraph& h, int r) {
    const GroundSet& ground = h.ground();
    const int n = ground.size();
    if (r < 2 || r > n) fail(ErrorKind::PreconditionViolated, "rank must lie in 2..n");
    const Hypergraph target = uniform(r, ground);
    if (!is_leq(target, h)) fail(ErrorKind::PreconditionViolated, "hypergraph is not above the uniform hypergraph");
    if (h == target) fail(ErrorKind::PreconditionViolated, "hypergraph equals the uniform hypergraph");

    Hypergraph result = target;
    if (r < n) {
        auto small = std::find_if(h.edges().begin(), h.edges().end(), [&](VertexSet e) { return e.size() < r; });
        if (small == h.edges().end()) fail(ErrorKind::InvariantViolated, "no edge smaller than the rank");
        VertexSet block = *small;
        for (int i = 0; block.size() < r; ++i) block = block.with(i);
        std::vector<VertexSet> edges{block};
        (ground.full() - block).for_each([&](int w) { edges.push_back(VertexSet::single(w)); });
        result = Hypergraph::from_antichain(ground, std::move(edges));
    }
    if (!is_leq(target, result) || is_leq(h, result))
        fail(ErrorKind::InvariantViolated, "separating completion postcondition failed");
    return result;
}

inline bool verify_meet_decomposition(std::span<const Hypergraph> hs, int r, const GroundSet& ground) {
    if (hs.empty()) fail(ErrorKind::EmptyList, "empty decomposition");
    for (const auto& h : hs)
        if (!(h.ground() == ground)) fail(ErrorKind::GroundMismatch, "decomposition member on another ground set");
    return meet(hs) == uniform(r, ground);
}

/// D(S_i) for the stars S_i centered at each of the first n-1 elements.
inline std::vector<Hypergraph> star_decomposition_witness(const GroundSet& ground) {
    const int n = ground.size();
    if (n < 3) fail(ErrorKind::PreconditionViolated, "star decomposition needs at least 3 elements");
    std::vector<Hypergraph> out;
    for (int c = 0; c < n - 1; ++c) {
        std::vector<Edge> edges;
        for (int y = 0; y < n; ++y)
            if (y != c) edges.emplace_back(std::min(c, y), std::max(c, y));
        out.push_back(minimal_dominating_sets(Graph::from_edges(ground, edges)));
    }
    return out;
}

namespace detail {

inline long double binomial(std::size_t s, std::size_t t) {
    long double c = 1;
    for (std::size_t i = 1; i <= t; ++i) c = c * static_cast<long double>(s - t + i) / static_cast<long double>(i);
    return c;
}

// Depth-first over t-subsets in lexicographic order, carrying the prefix meet.
inline bool search_decomposition(const std::vector<Hypergraph>& pool, const Hypergraph& target, std::size_t t,
                                 std::size_t start, const std::optional<Hypergraph>& prefix,
                                 std::vector<std::size_t>& chosen) {
    if (chosen.size() == t) return *prefix == target;
    for (std::size_t i = start; i + (t - chosen.size()) <= pool.size(); ++i) {
        const Hypergraph next = prefix ? meet(*prefix, pool[i]) : pool[i];
        chosen.push_back(i);
        if (search_decomposition(pool, target, t, i + 1, next, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace detail

/// Smallest number of minimal completions whose meet is the uniform
/// hypergraph, with the lexicographically first witness of that size.
inline DecompositionResult decomposition_from(const std::vector<Hypergraph>& pool, int r, const GroundSet& ground,
                                              DecompositionSource source, const RunOptions& opts = {}) {
    const Hypergraph target = uniform(r, ground);
    DecompositionResult result;
    result.source = source;
    if (r == ground.size() - 1 && ground.size() >= 3) result.star_upper_bound = star_decomposition_witness(ground);
    for (std::size_t t = 1; t <= pool.size(); ++t) {
        if (detail::binomial(pool.size(), t) > static_cast<long double>(opts.search_budget))
            fail(ErrorKind::SearchSpaceExceeded, "C(" + std::to_string(pool.size()) + "," + std::to_string(t) +
                                                     ") exceeds the search budget");
        std::vector<std::size_t> chosen;
        if (detail::search_decomposition(pool, target, t, 0, std::nullopt, chosen)) {
            result.value = static_cast<int>(t);
            for (auto i : chosen) result.witness.push_back(pool[i]);
            return result;
        }
    }
    fail(ErrorKind::InvariantViolated, "the minimal completions do not meet to the uniform hypergraph");
}

inline DecompositionResult decomposition_parameter(int r, const GroundSet& ground, const RunOptions& opts = {}) {
    const int n = ground.size();
    detail::require_rank(r, n);
    if (n <= effective_cap(kCompletionsDefaultCap, opts)) {
        std::vector<Hypergraph> pool;
        for (auto& m : minimal_completions(r, ground, opts)) pool.push_back(m.hypergraph);
        return decomposition_from(pool, r, ground, DecompositionSource::Sweep, opts);
    }
    auto structured = structured_minimal_completions(r, ground);
    if (!structured)
        fail(ErrorKind::GroundTooLarge, "no sweep at this size and no closed form for this rank");
    return decomposition_from(*structured, r, ground, DecompositionSource::ClosedForm, opts);
}

inline CompletionReport completion_report(int r, const GroundSet& ground, const RunOptions& opts = {}) {
    const auto swept = detail::sweep(r, ground, opts);
    CompletionReport report{r, ground, {}, {}, 0, {}};
    for (const auto& [edges, codes] : swept)
        report.completions.push_back({detail::hypergraph_of(ground, edges), Graph::from_edge_code(ground, codes.front())});
    report.minimal_completions = detail::minimal_from_sweep(swept, ground);
    std::vector<Hypergraph> pool;
    for (const auto& m : report.minimal_completions) pool.push_back(m.hypergraph);
    auto decomposition = decomposition_from(pool, r, ground, DecompositionSource::Sweep, opts);
    report.decomposition_parameter = decomposition.value;
    report.decomposition_witness = std::move(decomposition.witness);
    return report;
}

struct ShapeTally {
    std::uint64_t isomorphism_code = 0;
    std::vector<Edge> representative;
    int count = 0;
};

/// Groups minimal completions by the isomorphism class of their sparsest
/// realization (fewest edges, then smallest edge code).
inline std::vector<ShapeTally> realization_shapes(const std::vector<MinimalCompletion>& minimal) {
    std::map<std::pair<std::size_t, std::uint64_t>, ShapeTally> tallies;
    for (const auto& m : minimal) {
        const Graph* best = &m.witnesses.front();
        for (const auto& w : m.witnesses)
            if (w.edge_count() < best->edge_count()) best = &w;
        const auto code = isomorphism_code(*best);
        auto& slot = tallies[{best->edge_count(), code}];
        slot.isomorphism_code = code;
        slot.representative = Graph::from_edge_code(best->ground(), code).edges();
        ++slot.count;
    }
    std::vector<ShapeTally> out;
    for (auto& [key, t] : tallies) out.push_back(std::move(t));
    return out;
}

}  // namespace domhg

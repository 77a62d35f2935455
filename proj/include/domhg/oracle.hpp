#pragma once

// Brute-force reference computations and random instance generators. Every
// oracle works from the definitions by sweeping all subsets of the ground set
// and never calls the transversal, meet or neighborhood code it is used to
// check.

#include <cstdint>
#include <random>
#include <vector>

#include "graph.hpp"
#include "hypergraph.hpp"

namespace domhg::oracle {

using Family = std::vector<VertexSet>;

inline Family canonical(Family f) {
    std::sort(f.begin(), f.end(), CanonicalOrder{});
    f.erase(std::unique(f.begin(), f.end()), f.end());
    return f;
}

inline Family edges_of(const Hypergraph& h) { return Family(h.edges().begin(), h.edges().end()); }

// Members of an up-closed predicate with no member one element smaller.
template <class Pred>
Family minimal_members(int n, Pred&& in_family) {
    Family out;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < total; ++bits) {
        const VertexSet s{bits};
        if (!in_family(s)) continue;
        bool minimal = true;
        s.for_each([&](int x) {
            if (minimal && in_family(s.without(x))) minimal = false;
        });
        if (minimal) out.push_back(s);
    }
    return canonical(std::move(out));
}

inline bool dominates(const Graph& g, VertexSet d) {
    for (int v = 0; v < g.order(); ++v) {
        if (d.contains(v)) continue;
        bool adjacent = false;
        d.for_each([&](int u) { adjacent = adjacent || g.adjacent(u, v); });
        if (!adjacent) return false;
    }
    return true;
}

inline Family dominating_sets(const Graph& g) {
    return minimal_members(g.order(), [&](VertexSet d) { return dominates(g, d); });
}

inline Family transversal(const Hypergraph& h) {
    return minimal_members(h.order(), [&](VertexSet x) {
        for (auto e : h.edges())
            if ((x & e).empty()) return false;
        return true;
    });
}

inline bool in_up_closure(const Hypergraph& h, VertexSet s) {
    for (auto e : h.edges())
        if (e.subset_of(s)) return true;
    return false;
}

/// h1 <= h2 through the up-closures: every superset of an h1 edge is a superset of an h2 edge.
inline bool leq(const Hypergraph& h1, const Hypergraph& h2) {
    const std::uint64_t total = std::uint64_t{1} << h1.order();
    for (std::uint64_t bits = 0; bits < total; ++bits)
        if (in_up_closure(h1, VertexSet{bits}) && !in_up_closure(h2, VertexSet{bits})) return false;
    return true;
}

/// Minimal sets in every up-closure.
inline Family meet(std::span<const Hypergraph> hs) {
    return minimal_members(hs.front().order(), [&](VertexSet s) {
        for (const auto& h : hs)
            if (!in_up_closure(h, s)) return false;
        return true;
    });
}

/// Every non-empty antichain of non-empty subsets of an n-set (n <= 4).
inline std::vector<Hypergraph> all_antichains(const GroundSet& ground) {
    const int n = ground.size();
    const int subsets = (1 << n) - 1;  // non-empty subsets, indexed bits-1
    std::vector<Hypergraph> out;
    const std::uint64_t total = std::uint64_t{1} << subsets;
    for (std::uint64_t choice = 1; choice < total; ++choice) {
        Family f;
        for (int k = 0; k < subsets; ++k)
            if ((choice >> k) & 1u) f.push_back(VertexSet{static_cast<std::uint64_t>(k + 1)});
        bool antichain = true;
        for (std::size_t i = 0; i < f.size() && antichain; ++i)
            for (std::size_t j = 0; j < f.size() && antichain; ++j)
                if (i != j && f[i].subset_of(f[j])) antichain = false;
        if (antichain) out.push_back(Hypergraph::from_antichain(ground, f));
    }
    return out;
}

/// Deterministic generator; draws use raw engine bits only.
class Random {
public:
    explicit Random(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t bits() { return engine_(); }
    int below(int bound) { return static_cast<int>(engine_() % static_cast<std::uint64_t>(bound)); }
    int between(int lo, int hi) { return lo + below(hi - lo + 1); }
    bool coin(int num = 1, int den = 2) { return below(den) < num; }

    VertexSet nonempty_subset(int n) {
        const std::uint64_t mask = VertexSet::prefix(n).bits();
        std::uint64_t s = 0;
        while (s == 0) s = engine_() & mask;
        return VertexSet{s};
    }

    Hypergraph antichain(const GroundSet& ground, int max_sets = 8) {
        Family f;
        const int k = between(1, max_sets);
        for (int i = 0; i < k; ++i) f.push_back(nonempty_subset(ground.size()));
        return minimize(std::move(f), ground);
    }

    /// Each pair is an edge with probability num/den.
    Graph graph(const GroundSet& ground, int num = 1, int den = 2) {
        std::vector<Edge> edges;
        for (int i = 0; i < ground.size(); ++i)
            for (int j = i + 1; j < ground.size(); ++j)
                if (coin(num, den)) edges.emplace_back(i, j);
        return Graph::from_edges(ground, edges);
    }

private:
    std::mt19937_64 engine_;
};

/// Ground set of `n` labels starting at `first` ("first", "first+1", ...).
inline GroundSet labels_from(int first, int n) {
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) labels.push_back(std::to_string(first + i));
    return GroundSet(std::move(labels));
}

}  // namespace domhg::oracle

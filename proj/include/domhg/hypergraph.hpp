#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <vector>

#include "vertex_set.hpp"

namespace domhg {

namespace detail {

// Sorts canonically, removes duplicates and every set that contains another.
inline void minimize_in_place(std::vector<VertexSet>& sets) {
    std::sort(sets.begin(), sets.end(), CanonicalOrder{});
    sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
    std::size_t kept = 0;
    for (std::size_t i = 0; i < sets.size(); ++i) {
        const VertexSet candidate = sets[i];
        bool dominated = false;
        for (std::size_t k = 0; k < kept; ++k) {
            if (sets[k].subset_of(candidate)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) sets[kept++] = candidate;
    }
    sets.resize(kept);
}

}  // namespace detail

/// Sperner system over an explicit ground set. Edges are non-empty, pairwise
/// incomparable and kept in CanonicalOrder, so value equality is list equality.
class Hypergraph {
public:
    /// Validates an antichain; the edges may be given in any order.
    static Hypergraph from_antichain(GroundSet ground, std::vector<VertexSet> edges) {
        validate_members(ground, edges);
        std::sort(edges.begin(), edges.end(), CanonicalOrder{});
        for (std::size_t i = 0; i < edges.size(); ++i) {
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                if (edges[i].subset_of(edges[j]))
                    fail(ErrorKind::NotAnAntichain, "an edge is contained in another edge");
            }
        }
        return Hypergraph(std::move(ground), std::move(edges));
    }

    const GroundSet& ground() const noexcept { return ground_; }
    std::span<const VertexSet> edges() const& noexcept { return edges_; }
    // A view into a temporary would dangle.
    std::span<const VertexSet> edges() const&& = delete;
    std::size_t size() const noexcept { return edges_.size(); }
    int order() const noexcept { return ground_.size(); }

    bool contains_edge(VertexSet e) const {
        return std::binary_search(edges_.begin(), edges_.end(), e, CanonicalOrder{});
    }

    /// The same edges over a ground set holding the same labels in another order.
    Hypergraph with_ground(const GroundSet& target) const {
        if (target.size() != ground_.size()) fail(ErrorKind::GroundMismatch, "ground sizes differ");
        const auto map = ground_.mapping_into(target);
        std::vector<VertexSet> out;
        out.reserve(edges_.size());
        for (auto e : edges_) out.push_back(remap(e, map));
        std::sort(out.begin(), out.end(), CanonicalOrder{});
        return Hypergraph(target, std::move(out));
    }

    friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
        return a.edges_ == b.edges_ && a.ground_ == b.ground_;
    }

private:
    template <class... A>
    friend Hypergraph make_hypergraph_unchecked(A&&...);
    friend Hypergraph minimize(std::vector<VertexSet>, const GroundSet&);

    Hypergraph(GroundSet ground, std::vector<VertexSet> edges)
        : ground_(std::move(ground)), edges_(std::move(edges)) {}

    static void validate_members(const GroundSet& ground, const std::vector<VertexSet>& family) {
        if (family.empty()) fail(ErrorKind::EmptyFamily, "a hypergraph needs at least one edge");
        for (auto e : family) {
            if (e.empty()) fail(ErrorKind::EmptySetMember, "the empty set cannot be an edge");
            ground.require_within(e);
        }
    }

    GroundSet ground_;
    std::vector<VertexSet> edges_;
};

// Callers guarantee a non-empty minimized canonical antichain.
template <class... A>
Hypergraph make_hypergraph_unchecked(A&&... args) {
    return Hypergraph(std::forward<A>(args)...);
}

/// Inclusion-minimal members of `family`, deduplicated, in canonical order.
inline Hypergraph minimize(std::vector<VertexSet> family, const GroundSet& ground) {
    Hypergraph::validate_members(ground, family);
    detail::minimize_in_place(family);
    return Hypergraph(ground, std::move(family));
}

/// Lexicographic over canonical edge lists; used to order lists of hypergraphs.
struct HypergraphOrder {
    bool operator()(const Hypergraph& a, const Hypergraph& b) const {
        auto ea = a.edges(), eb = b.edges();
        return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end(), CanonicalOrder{});
    }
};

inline void require_same_ground(const Hypergraph& a, const Hypergraph& b) {
    if (!(a.ground() == b.ground())) fail(ErrorKind::GroundMismatch, "hypergraphs live on different ground sets");
}

/// Minimal sets meeting every edge. Edges are absorbed one at a time; partial
/// transversals missing the next edge are extended by each of its elements and
/// the partial family is minimized after every step.
inline Hypergraph transversal(const Hypergraph& h) {
    std::vector<VertexSet> partial{VertexSet{}};
    std::vector<VertexSet> next;
    for (VertexSet edge : h.edges()) {
        next.clear();
        for (VertexSet x : partial) {
            if (x.intersects(edge)) {
                next.push_back(x);
            } else {
                edge.for_each([&](int y) { next.push_back(x.with(y)); });
            }
        }
        detail::minimize_in_place(next);
        partial.swap(next);
    }
    return make_hypergraph_unchecked(h.ground(), std::move(partial));
}

/// h1 <= h2: every edge of h1 contains an edge of h2.
inline bool is_leq(const Hypergraph& h1, const Hypergraph& h2) {
    require_same_ground(h1, h2);
    for (VertexSet a1 : h1.edges()) {
        bool covered = false;
        for (VertexSet a2 : h2.edges()) {
            if (a2.subset_of(a1)) {
                covered = true;
                break;
            }
        }
        if (!covered) return false;
    }
    return true;
}

/// Minimized cross-unions A1 | ... | Al with Ai taken from hs[i].
inline Hypergraph meet(std::span<const Hypergraph> hs) {
    if (hs.empty()) fail(ErrorKind::EmptyList, "meet of an empty list");
    for (const auto& h : hs) require_same_ground(hs.front(), h);
    std::vector<VertexSet> acc(hs.front().edges().begin(), hs.front().edges().end());
    std::vector<VertexSet> next;
    for (std::size_t i = 1; i < hs.size(); ++i) {
        next.clear();
        for (VertexSet a : acc)
            for (VertexSet b : hs[i].edges()) next.push_back(a | b);
        detail::minimize_in_place(next);
        acc.swap(next);
    }
    return make_hypergraph_unchecked(hs.front().ground(), std::move(acc));
}

inline Hypergraph meet(const Hypergraph& a, const Hypergraph& b) {
    const Hypergraph pair[] = {a, b};
    return meet(std::span<const Hypergraph>(pair));
}

/// Iterates the r-subsets of the first n indices in ascending bitmask order.
template <class F>
void for_each_subset_of_size(int n, int r, F&& f) {
    if (r == 0) {
        f(VertexSet{});
        return;
    }
    if (r > n) return;
    const std::uint64_t limit = VertexSet::prefix(n).bits();
    std::uint64_t s = VertexSet::prefix(r).bits();
    while (true) {
        f(VertexSet{s});
        if (s == (limit & ~VertexSet::prefix(n - r).bits())) break;
        // Gosper's hack
        const std::uint64_t c = s & (~s + 1);
        const std::uint64_t rr = s + c;
        s = (((rr ^ s) >> 2) / c) | rr;
    }
}

/// All r-subsets of the ground set.
inline Hypergraph uniform(int r, const GroundSet& ground) {
    const int n = ground.size();
    if (r < 1 || r > n)
        fail(ErrorKind::RankOutOfRange, "rank " + std::to_string(r) + " outside 1.." + std::to_string(n));
    std::vector<VertexSet> edges;
    for_each_subset_of_size(n, r, [&](VertexSet s) { edges.push_back(s); });
    return make_hypergraph_unchecked(ground, std::move(edges));
}

/// Union of all edges.
inline VertexSet ground_of(const Hypergraph& h) {
    VertexSet out;
    for (auto e : h.edges()) out |= e;
    return out;
}

/// Edges contained in `sub`, re-indexed over the sub-ground (labels of `sub` in
/// ground order). Empty when no edge fits.
inline std::optional<Hypergraph> restrict(const Hypergraph& h, VertexSet sub) {
    if (sub.empty()) fail(ErrorKind::OutOfGround, "restriction to the empty set");
    h.ground().require_within(sub);
    std::vector<VertexSet> kept;
    for (auto e : h.edges())
        if (e.subset_of(sub)) kept.push_back(compress(e, sub));
    if (kept.empty()) return std::nullopt;
    std::sort(kept.begin(), kept.end(), CanonicalOrder{});
    return make_hypergraph_unchecked(h.ground().subset(sub), std::move(kept));
}

}  // namespace domhg

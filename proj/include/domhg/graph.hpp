#pragma once

#include <algorithm>
#include <initializer_list>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hypergraph.hpp"

namespace domhg {

using Edge = std::pair<int, int>;

/// Labeled simple graph stored as per-vertex neighbor masks.
class Graph {
public:
    explicit Graph(GroundSet ground)
        : ground_(std::move(ground)), adj_(static_cast<std::size_t>(ground_.size())) {}

    static Graph from_edges(GroundSet ground, std::span<const Edge> edges) {
        Graph g(std::move(ground));
        for (auto [x, y] : edges) g.connect(x, y);
        return g;
    }

    static Graph from_edges(GroundSet ground, std::initializer_list<Edge> edges) {
        return from_edges(std::move(ground), std::span<const Edge>(edges.begin(), edges.size()));
    }

    static Graph complete(GroundSet ground) {
        Graph g(std::move(ground));
        const VertexSet all = g.ground_.full();
        for (int x = 0; x < g.order(); ++x) g.adj_[static_cast<std::size_t>(x)] = all.without(x);
        return g;
    }

    static Graph empty(GroundSet ground) { return Graph(std::move(ground)); }

    /// Number of vertex pairs; bit k of an edge code is the k-th pair in
    /// lexicographic order (0,1),(0,2),...,(1,2),...
    static int pair_count(int n) noexcept { return n * (n - 1) / 2; }

    /// Edge code of the graph; requires pair_count(n) <= 64.
    static Graph from_edge_code(GroundSet ground, std::uint64_t code) {
        Graph g(std::move(ground));
        const int n = g.order();
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if ((code >> k) & 1u) g.connect(i, j);
        return g;
    }

    std::uint64_t edge_code() const {
        const int n = order();
        if (pair_count(n) > 64) fail(ErrorKind::GroundTooLarge, "edge code needs at most 11 vertices");
        std::uint64_t code = 0;
        int k = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j, ++k)
                if (adjacent(i, j)) code |= std::uint64_t{1} << k;
        return code;
    }

    const GroundSet& ground() const noexcept { return ground_; }
    int order() const noexcept { return ground_.size(); }
    VertexSet vertices() const noexcept { return ground_.full(); }
    VertexSet neighbors(int x) const { return adj_.at(static_cast<std::size_t>(x)); }
    VertexSet closed_neighborhood(int x) const { return neighbors(x).with(x); }
    int degree(int x) const { return neighbors(x).size(); }
    bool adjacent(int x, int y) const { return neighbors(x).contains(y); }

    std::vector<Edge> edges() const {
        std::vector<Edge> out;
        for (int i = 0; i < order(); ++i)
            (neighbors(i) - VertexSet::prefix(i + 1)).for_each([&](int j) { out.emplace_back(i, j); });
        return out;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (auto a : adj_) twice += static_cast<std::size_t>(a.size());
        return twice / 2;
    }

    Graph with_edges(std::span<const Edge> extra) const {
        Graph g = *this;
        for (auto [x, y] : extra) g.connect(x, y);
        return g;
    }

    Graph without_edges(std::span<const Edge> removed) const {
        Graph g = *this;
        for (auto [x, y] : removed) {
            g.adj_[static_cast<std::size_t>(x)] = g.adj_[static_cast<std::size_t>(x)].without(y);
            g.adj_[static_cast<std::size_t>(y)] = g.adj_[static_cast<std::size_t>(y)].without(x);
        }
        return g;
    }

    /// The same graph over a ground set holding the same labels in another order.
    Graph with_ground(const GroundSet& target) const {
        if (target.size() != order()) fail(ErrorKind::GroundMismatch, "ground sizes differ");
        const auto map = ground_.mapping_into(target);
        Graph g(target);
        for (auto [x, y] : edges()) g.connect(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]);
        return g;
    }

    /// Edge-code order generalized to any order: compares the upper rows of
    /// the adjacency matrix from the last vertex down.
    friend bool edge_order_less(const Graph& a, const Graph& b) noexcept {
        const int n = std::min(a.order(), b.order());
        for (int i = n - 1; i >= 0; --i) {
            const auto ra = (a.adj_[static_cast<std::size_t>(i)] - VertexSet::prefix(i + 1)).bits();
            const auto rb = (b.adj_[static_cast<std::size_t>(i)] - VertexSet::prefix(i + 1)).bits();
            if (ra != rb) return ra < rb;
        }
        return a.order() < b.order();
    }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.adj_ == b.adj_ && a.ground_ == b.ground_;
    }

private:
    void connect(int x, int y) {
        const int n = order();
        if (x < 0 || y < 0 || x >= n || y >= n) fail(ErrorKind::OutOfGround, "edge endpoint outside the ground set");
        if (x == y) fail(ErrorKind::PreconditionViolated, "self-loops are not allowed");
        adj_[static_cast<std::size_t>(x)] = adj_[static_cast<std::size_t>(x)].with(y);
        adj_[static_cast<std::size_t>(y)] = adj_[static_cast<std::size_t>(y)].with(x);
    }

    GroundSet ground_;
    std::vector<VertexSet> adj_;
};

struct GraphEdgeOrder {
    bool operator()(const Graph& a, const Graph& b) const noexcept { return edge_order_less(a, b); }
};

inline void sort_and_dedupe(std::vector<Graph>& graphs) {
    std::sort(graphs.begin(), graphs.end(), GraphEdgeOrder{});
    graphs.erase(std::unique(graphs.begin(), graphs.end()), graphs.end());
}

/// min of the closed neighborhoods N[x].
inline Hypergraph minimal_closed_neighborhoods(const Graph& g) {
    std::vector<VertexSet> family;
    family.reserve(static_cast<std::size_t>(g.order()));
    for (int x = 0; x < g.order(); ++x) family.push_back(g.closed_neighborhood(x));
    return minimize(std::move(family), g.ground());
}

inline bool is_dominating(const Graph& g, VertexSet d) {
    g.ground().require_within(d);
    VertexSet covered;
    d.for_each([&](int x) { covered |= g.closed_neighborhood(x); });
    return covered == g.vertices();
}

/// Minimal dominating sets, as the transversal of the minimal closed neighborhoods.
inline Hypergraph minimal_dominating_sets(const Graph& g) {
    return transversal(minimal_closed_neighborhoods(g));
}

inline VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (int x = 0; x < g.order(); ++x)
        if (g.neighbors(x).empty()) out = out.with(x);
    return out;
}

namespace detail {

inline std::vector<VertexSet> offsets_of(const std::vector<Graph>& gs) {
    std::vector<VertexSet> blocks;
    int offset = 0;
    for (const auto& g : gs) {
        blocks.push_back(VertexSet{g.vertices().bits() << offset});
        offset += g.order();
    }
    return blocks;
}

inline Graph combine(const std::vector<Graph>& gs, bool join_blocks) {
    if (gs.size() < 2) fail(ErrorKind::PreconditionViolated, "graph operations need at least two graphs");
    std::vector<GroundSet> grounds;
    for (const auto& g : gs) grounds.push_back(g.ground());
    GroundSet ground = GroundSet::concat(grounds);
    std::vector<Edge> edges;
    int offset = 0;
    for (const auto& g : gs) {
        for (auto [x, y] : g.edges()) edges.emplace_back(x + offset, y + offset);
        offset += g.order();
    }
    if (join_blocks) {
        const auto blocks = offsets_of(gs);
        for (std::size_t i = 0; i < blocks.size(); ++i)
            for (std::size_t j = i + 1; j < blocks.size(); ++j)
                blocks[i].for_each([&](int x) { blocks[j].for_each([&](int y) { edges.emplace_back(x, y); }); });
    }
    return Graph::from_edges(std::move(ground), edges);
}

}  // namespace detail

/// Ground is the concatenation of the parts' label lists.
inline Graph disjoint_union(const std::vector<Graph>& gs) { return detail::combine(gs, false); }

/// Disjoint union plus every edge between different parts.
inline Graph join(const std::vector<Graph>& gs) { return detail::combine(gs, true); }

/// Subgraph induced on `keep`, over the sub-ground of its labels.
inline Graph induced_subgraph(const Graph& g, VertexSet keep) {
    GroundSet sub = g.ground().subset(keep);
    std::vector<Edge> edges;
    for (auto [x, y] : g.edges())
        if (keep.contains(x) && keep.contains(y))
            edges.emplace_back(compress(VertexSet::single(x), keep).first(), compress(VertexSet::single(y), keep).first());
    return Graph::from_edges(std::move(sub), edges);
}

/// Vertex sets of the connected components, ordered by smallest vertex.
inline std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int s = 0; s < g.order(); ++s) {
        if (seen.contains(s)) continue;
        VertexSet comp = VertexSet::single(s), frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int x) { next |= g.neighbors(x); });
            frontier = next - comp;
            comp |= frontier;
        }
        seen |= comp;
        comps.push_back(comp);
    }
    return comps;
}

/// No isolated vertices and the minimal closed neighborhoods are exactly the edges.
inline bool is_star_forest(const Graph& g) {
    if (!isolated_vertices(g).empty()) return false;
    const Hypergraph nbhd = minimal_closed_neighborhoods(g);
    const auto edges = g.edges();
    if (nbhd.size() != edges.size()) return false;
    for (auto [x, y] : edges)
        if (!nbhd.contains_edge(VertexSet::single(x).with(y))) return false;
    return true;
}

namespace detail {

// Tree given by its edge list; splits until every part is a star.
inline void split_into_stars(std::vector<Edge> tree, int n, std::vector<Edge>& out) {
    std::vector<int> deg(static_cast<std::size_t>(n), 0);
    for (auto [x, y] : tree) {
        ++deg[static_cast<std::size_t>(x)];
        ++deg[static_cast<std::size_t>(y)];
    }
    std::vector<int> hubs;
    for (int v = 0; v < n; ++v)
        if (deg[static_cast<std::size_t>(v)] >= 2) hubs.push_back(v);
    if (hubs.size() <= 1) {
        out.insert(out.end(), tree.begin(), tree.end());
        return;
    }
    const int a = hubs[0], b = hubs[1];
    // Walk from a to b; the tree path is unique.
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> stack{a};
    parent[static_cast<std::size_t>(a)] = a;
    while (!stack.empty()) {
        const int x = stack.back();
        stack.pop_back();
        for (auto [u, v] : tree) {
            const int y = u == x ? v : (v == x ? u : -1);
            if (y >= 0 && parent[static_cast<std::size_t>(y)] < 0) {
                parent[static_cast<std::size_t>(y)] = x;
                stack.push_back(y);
            }
        }
    }
    int step = b;
    while (parent[static_cast<std::size_t>(step)] != a) step = parent[static_cast<std::size_t>(step)];
    const Edge cut{std::min(a, step), std::max(a, step)};
    tree.erase(std::find(tree.begin(), tree.end(), cut));

    // Separate the two sides of the cut.
    VertexSet side = VertexSet::single(a);
    for (bool grew = true; grew;) {
        grew = false;
        for (auto [u, v] : tree) {
            if (side.contains(u) != side.contains(v)) {
                side = side.with(u).with(v);
                grew = true;
            }
        }
    }
    std::vector<Edge> left, right;
    for (auto e : tree) (side.contains(e.first) ? left : right).push_back(e);
    split_into_stars(std::move(left), n, out);
    split_into_stars(std::move(right), n, out);
}

}  // namespace detail

/// Spanning subgraph that is a star forest. Per component a spanning tree is
/// grown from the smallest vertex by always taking the lexicographically
/// smallest crossing edge; a non-star tree is cut at the first edge of the
/// path between its two smallest vertices of degree >= 2.
inline Graph spanning_star_forest(const Graph& g) {
    if (!isolated_vertices(g).empty()) fail(ErrorKind::HasIsolatedVertex, "graph has an isolated vertex");
    const int n = g.order();
    std::vector<Edge> forest;
    for (VertexSet comp : connected_components(g)) {
        VertexSet in_tree = VertexSet::single(comp.first());
        std::vector<Edge> tree;
        while (in_tree != comp) {
            Edge best{n, n};
            in_tree.for_each([&](int x) {
                (g.neighbors(x) - in_tree).for_each([&](int y) {
                    const Edge e{std::min(x, y), std::max(x, y)};
                    if (e < best) best = e;
                });
            });
            tree.push_back(best);
            in_tree = in_tree.with(best.first).with(best.second);
        }
        detail::split_into_stars(std::move(tree), n, forest);
    }
    return Graph::from_edges(g.ground(), forest);
}

/// Smallest edge code over all relabelings; equal exactly for isomorphic
/// graphs. Brute force over permutations, so meant for small orders.
inline std::uint64_t isomorphism_code(const Graph& g) {
    const int n = g.order();
    if (n > 9) fail(ErrorKind::GroundTooLarge, "isomorphism code limited to 9 vertices");
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const auto edges = g.edges();
    std::uint64_t best = ~std::uint64_t{0};
    auto pair_index = [n](int i, int j) {
        if (i > j) std::swap(i, j);
        return i * n - i * (i + 1) / 2 + (j - i - 1);
    };
    do {
        std::uint64_t code = 0;
        for (auto [x, y] : edges)
            code |= std::uint64_t{1} << pair_index(perm[static_cast<std::size_t>(x)], perm[static_cast<std::size_t>(y)]);
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

}  // namespace domhg

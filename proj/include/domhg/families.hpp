#pragma once

#include <string_view>
#include <variant>
#include <vector>

#include "graph.hpp"
#include "parallel.hpp"

namespace domhg {

enum class GraphFamilyKind { AllGraphs, StarForests, CycleC5, CompleteBipartite23, MatchingComplements, Complete, Empty };

inline constexpr int kAllGraphsDefaultCap = 7;
// Edge codes are 64-bit words.
inline constexpr int kAllGraphsHardCap = 11;

constexpr std::string_view family_name(GraphFamilyKind kind) noexcept {
    switch (kind) {
        case GraphFamilyKind::AllGraphs: return "all";
        case GraphFamilyKind::StarForests: return "star-forests";
        case GraphFamilyKind::CycleC5: return "c5";
        case GraphFamilyKind::CompleteBipartite23: return "k23";
        case GraphFamilyKind::MatchingComplements: return "matching-complements";
        case GraphFamilyKind::Complete: return "complete";
        case GraphFamilyKind::Empty: return "empty";
    }
    return "?";
}

/// Indexable family of labeled graphs in ascending edge order. AllGraphs is
/// produced on demand from the index; the other families are materialized.
/// Index ranges may be split across workers.
class GraphFamily {
public:
    GraphFamily(GroundSet ground, std::uint64_t all_graphs_count) : ground_(std::move(ground)), count_(all_graphs_count) {}
    GraphFamily(GroundSet ground, std::vector<Graph> members)
        : ground_(std::move(ground)), count_(members.size()), members_(std::move(members)) {}

    std::uint64_t size() const noexcept { return count_; }
    const GroundSet& ground() const noexcept { return ground_; }

    Graph at(std::uint64_t index) const {
        if (members_) return (*members_)[static_cast<std::size_t>(index)];
        return Graph::from_edge_code(ground_, index);
    }

    std::vector<Graph> materialize() const {
        if (members_) return *members_;
        std::vector<Graph> out;
        out.reserve(static_cast<std::size_t>(count_));
        for (std::uint64_t i = 0; i < count_; ++i) out.push_back(at(i));
        return out;
    }

private:
    GroundSet ground_;
    std::uint64_t count_;
    std::optional<std::vector<Graph>> members_;
};

namespace detail {

inline void star_forests_rec(int n, VertexSet remaining, std::vector<Edge>& edges, const GroundSet& ground,
                             std::vector<Graph>& out) {
    if (remaining.empty()) {
        out.push_back(Graph::from_edges(ground, edges));
        return;
    }
    const int v = remaining.first();
    const VertexSet rest = remaining.without(v);
    // Every block containing v: v plus a non-empty subset of the rest.
    const std::uint64_t r = rest.bits();
    for (std::uint64_t sub = r; sub != 0; sub = (sub - 1) & r) {
        const VertexSet block = VertexSet{sub}.with(v);
        const std::size_t mark = edges.size();
        if (block.size() == 2) {
            edges.emplace_back(v, VertexSet{sub}.first());
            star_forests_rec(n, remaining - block, edges, ground, out);
            edges.resize(mark);
            continue;
        }
        block.for_each([&](int center) {
            (block.without(center)).for_each([&](int leaf) {
                edges.emplace_back(std::min(center, leaf), std::max(center, leaf));
            });
            star_forests_rec(n, remaining - block, edges, ground, out);
            edges.resize(mark);
        });
    }
}

inline void matchings_rec(VertexSet remaining, std::vector<Edge>& matching, const GroundSet& ground,
                          std::vector<Graph>& out) {
    if (remaining.empty()) {
        out.push_back(Graph::complete(ground).without_edges(matching));
        return;
    }
    const int v = remaining.first();
    remaining.without(v).for_each([&](int w) {
        matching.emplace_back(v, w);
        matchings_rec(remaining.without(v).without(w), matching, ground, out);
        matching.pop_back();
    });
}

}  // namespace detail

/// Labeled star forests spanning the ground set: one per set partition into
/// blocks of size >= 2 and center choice for blocks of size >= 3.
inline std::vector<Graph> star_forests(const GroundSet& ground) {
    std::vector<Graph> out;
    std::vector<Edge> edges;
    if (ground.size() >= 2) detail::star_forests_rec(ground.size(), ground.full(), edges, ground, out);
    sort_and_dedupe(out);
    return out;
}

inline GraphFamily enumerate_family(GraphFamilyKind kind, const GroundSet& ground, const RunOptions& opts = {}) {
    const int n = ground.size();
    std::vector<Graph> members;
    switch (kind) {
        case GraphFamilyKind::AllGraphs: {
            require_within_cap(n, kAllGraphsDefaultCap, opts, "AllGraphs");
            if (n > kAllGraphsHardCap) fail(ErrorKind::GroundTooLarge, "AllGraphs supports at most 11 vertices");
            const int pairs = Graph::pair_count(n);
            return GraphFamily(ground, pairs >= 64 ? ~std::uint64_t{0} : std::uint64_t{1} << pairs);
        }
        case GraphFamilyKind::StarForests:
            members = star_forests(ground);
            break;
        case GraphFamilyKind::CycleC5: {
            if (n != 5) fail(ErrorKind::FamilyArityMismatch, "C5 family needs exactly 5 vertices");
            std::vector<int> p{1, 2, 3, 4};
            do {
                if (p[0] > p[3]) continue;  // each cycle once, not once per direction
                const std::vector<Edge> e{{0, p[0]}, {p[0], p[1]}, {p[1], p[2]}, {p[2], p[3]}, {p[3], 0}};
                members.push_back(Graph::from_edges(ground, e));
            } while (std::next_permutation(p.begin(), p.end()));
            break;
        }
        case GraphFamilyKind::CompleteBipartite23: {
            if (n != 5) fail(ErrorKind::FamilyArityMismatch, "K23 family needs exactly 5 vertices");
            for_each_subset_of_size(5, 2, [&](VertexSet pair) {
                std::vector<Edge> e;
                pair.for_each([&](int x) { (ground.full() - pair).for_each([&](int y) { e.emplace_back(x, y); }); });
                members.push_back(Graph::from_edges(ground, e));
            });
            break;
        }
        case GraphFamilyKind::MatchingComplements: {
            if (n % 2 != 0) fail(ErrorKind::FamilyArityMismatch, "perfect matchings need an even number of vertices");
            std::vector<Edge> matching;
            detail::matchings_rec(ground.full(), matching, ground, members);
            break;
        }
        case GraphFamilyKind::Complete:
            members.push_back(Graph::complete(ground));
            break;
        case GraphFamilyKind::Empty:
            members.push_back(Graph::empty(ground));
            break;
    }
    sort_and_dedupe(members);
    return GraphFamily(ground, std::move(members));
}

}  // namespace domhg

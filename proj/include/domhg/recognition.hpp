#pragma once

#include <map>
#include <vector>

#include "families.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "parallel.hpp"

namespace domhg {

inline constexpr int kRecognizeDefaultCap = 7;

struct RecognitionResult {
    bool is_domination = false;
    bool rejected_by_necessary_condition = false;
    /// Realizations in ascending edge order; empty iff not a domination hypergraph.
    std::vector<Graph> realizations;
};

namespace detail {

inline void check_realizations(const std::vector<Graph>& graphs, const Hypergraph& target) {
    for (const auto& g : graphs)
        if (!(minimal_dominating_sets(g) == target))
            fail(ErrorKind::InvariantViolated, "emitted realization does not reproduce the hypergraph");
}

// Assigns neighborhoods vertex by vertex. When vertex i is reached its
// neighbors below i are fixed; choosing the ones above i fixes N[i], which must
// contain a member of `targets`. Every target t has to appear as N[x] for some
// x in t, which is checked once all of t is fixed.
class NeighborhoodSearch {
public:
    NeighborhoodSearch(int n, std::vector<VertexSet> targets) : n_(n), targets_(std::move(targets)), adj_(static_cast<std::size_t>(n)) {
        for (auto t : targets_) closing_.push_back(t.last());
    }

    // Runs the search with vertex 0's upper neighborhood restricted to the
    // subset indices [begin, end) of the 2^(n-1) choices.
    std::vector<std::uint64_t> run(std::uint64_t begin, std::uint64_t end) {
        found_.clear();
        std::fill(adj_.begin(), adj_.end(), VertexSet{});
        matched_.assign(targets_.size(), false);
        if (n_ == 1) {
            if (begin == 0 && end > 0) visit(0, VertexSet{});
            return found_;
        }
        const VertexSet upper = VertexSet::prefix(n_) - VertexSet::prefix(1);
        for (std::uint64_t k = begin; k < end; ++k) visit(0, VertexSet{k << 1} & upper);
        return found_;
    }

private:
    void descend(int i) {
        if (i == n_) {
            found_.push_back(code());
            return;
        }
        const std::uint64_t upper = (VertexSet::prefix(n_) - VertexSet::prefix(i + 1)).bits();
        for (std::uint64_t s = upper;; s = (s - 1) & upper) {
            visit(i, VertexSet{s});
            if (s == 0) break;
        }
    }

    void visit(int i, VertexSet up) {
        const VertexSet closed = adj_[static_cast<std::size_t>(i)] | up | VertexSet::single(i);
        bool covers = false;
        for (auto t : targets_)
            if (t.subset_of(closed)) { covers = true; break; }
        if (!covers) return;

        const auto saved = adj_;
        const auto saved_matched = matched_;
        adj_[static_cast<std::size_t>(i)] |= up;
        up.for_each([&](int j) { adj_[static_cast<std::size_t>(j)] = adj_[static_cast<std::size_t>(j)].with(i); });
        for (std::size_t k = 0; k < targets_.size(); ++k)
            if (targets_[k] == closed) matched_[k] = true;
        bool ok = true;
        for (std::size_t k = 0; k < targets_.size() && ok; ++k)
            if (closing_[k] == i && !matched_[k]) ok = false;
        if (ok) descend(i + 1);
        adj_ = saved;
        matched_ = saved_matched;
    }

    std::uint64_t code() const {
        std::uint64_t c = 0;
        int k = 0;
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j, ++k)
                if (adj_[static_cast<std::size_t>(i)].contains(j)) c |= std::uint64_t{1} << k;
        return c;
    }

    int n_;
    std::vector<VertexSet> targets_;
    std::vector<int> closing_;
    std::vector<VertexSet> adj_;
    std::vector<bool> matched_;
    std::vector<std::uint64_t> found_;
};

struct RecognitionSetup {
    GroundSet vertices;
    Hypergraph target;
    Hypergraph blocker;
};

inline RecognitionSetup prepare_recognition(const Hypergraph& h, const RunOptions& opts) {
    const VertexSet used = ground_of(h);
    require_within_cap(used.size(), kRecognizeDefaultCap, opts, "recognition");
    if (used.size() > kAllGraphsHardCap) fail(ErrorKind::GroundTooLarge, "recognition supports at most 11 vertices");
    Hypergraph target = *restrict(h, used);
    Hypergraph blocker = transversal(target);
    return {target.ground(), std::move(target), std::move(blocker)};
}

}  // namespace detail

/// Decides whether `h` is the family of minimal dominating sets of a graph on
/// the union of its edges, and lists every such graph. Realizations live on
/// that vertex set (labels in ground order).
inline RecognitionResult recognize(const Hypergraph& h, const RunOptions& opts = {}) {
    auto setup = detail::prepare_recognition(h, opts);
    const int n = setup.vertices.size();
    RecognitionResult result;
    if (setup.blocker.size() > static_cast<std::size_t>(n)) {
        result.rejected_by_necessary_condition = true;
        return result;
    }
    const std::vector<VertexSet> targets(setup.blocker.edges().begin(), setup.blocker.edges().end());
    const std::uint64_t first_row = n == 1 ? 1 : std::uint64_t{1} << (n - 1);
    auto parts = parallel_chunks<std::vector<std::uint64_t>>(first_row, opts.workers, [&](std::uint64_t b, std::uint64_t e) {
        detail::NeighborhoodSearch search(n, targets);
        return search.run(b, e);
    });
    std::vector<std::uint64_t> codes;
    for (auto& p : parts) codes.insert(codes.end(), p.begin(), p.end());
    std::sort(codes.begin(), codes.end());
    for (auto c : codes) result.realizations.push_back(Graph::from_edge_code(setup.vertices, c));
    if (opts.check_realizations) detail::check_realizations(result.realizations, setup.target);
    result.is_domination = !result.realizations.empty();
    return result;
}

/// Reference path: filters every labeled graph on the vertex set.
inline RecognitionResult recognize_by_sweep(const Hypergraph& h, const RunOptions& opts = {}) {
    auto setup = detail::prepare_recognition(h, opts);
    const auto family = enumerate_family(GraphFamilyKind::AllGraphs, setup.vertices, opts);
    auto parts = parallel_chunks<std::vector<std::uint64_t>>(family.size(), opts.workers, [&](std::uint64_t b, std::uint64_t e) {
        std::vector<std::uint64_t> hits;
        for (std::uint64_t c = b; c < e; ++c)
            if (minimal_dominating_sets(family.at(c)) == setup.target) hits.push_back(c);
        return hits;
    });
    RecognitionResult result;
    result.rejected_by_necessary_condition = setup.blocker.size() > static_cast<std::size_t>(setup.vertices.size());
    for (auto& p : parts)
        for (auto c : p) result.realizations.push_back(family.at(c));
    result.is_domination = !result.realizations.empty();
    return result;
}

/// Closed form for the uniform hypergraph of rank r: realizable iff r = 1,
/// r = n, or r = 2 with n even; realizations are the complete graph, the
/// empty graph, and the complements of perfect matchings respectively.
inline RecognitionResult uniform_recognition(int r, const GroundSet& ground) {
    const int n = ground.size();
    if (r < 1 || r > n)
        fail(ErrorKind::RankOutOfRange, "rank " + std::to_string(r) + " outside 1.." + std::to_string(n));
    RecognitionResult result;
    if (r == 1) result.realizations.push_back(Graph::complete(ground));
    if (r == n) result.realizations.push_back(Graph::empty(ground));
    if (r == 2 && n % 2 == 0) {
        // Joins of two-vertex empty graphs, i.e. K_n minus a perfect matching.
        auto family = enumerate_family(GraphFamilyKind::MatchingComplements, ground).materialize();
        result.realizations.insert(result.realizations.end(), family.begin(), family.end());
    }
    sort_and_dedupe(result.realizations);
    result.is_domination = !result.realizations.empty();
    return result;
}

/// All graphs with the same minimal dominating sets as the star forest `f`:
/// pick one center per component (either end of a K2) and add any set of
/// edges among the chosen centers.
inline std::vector<Graph> realization_expansion(const Graph& f, const RunOptions& opts = {}) {
    if (!is_star_forest(f)) fail(ErrorKind::NotAStarForest, "realization expansion needs a star forest");
    std::vector<std::vector<int>> center_choices;
    for (VertexSet comp : connected_components(f)) {
        std::vector<int> centers;
        if (comp.size() == 2) {
            centers = comp.indices();
        } else {
            comp.for_each([&](int x) {
                if (f.degree(x) >= 2) centers.push_back(x);
            });
        }
        center_choices.push_back(std::move(centers));
    }
    std::vector<Graph> out;
    std::vector<std::size_t> pick(center_choices.size(), 0);
    while (true) {
        std::vector<int> chosen;
        for (std::size_t c = 0; c < pick.size(); ++c) chosen.push_back(center_choices[c][pick[c]]);
        std::vector<Edge> candidates;
        for (std::size_t a = 0; a < chosen.size(); ++a)
            for (std::size_t b = a + 1; b < chosen.size(); ++b)
                candidates.emplace_back(std::min(chosen[a], chosen[b]), std::max(chosen[a], chosen[b]));
        if (candidates.size() >= 63) fail(ErrorKind::GroundTooLarge, "too many components to expand");
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << candidates.size()); ++mask) {
            std::vector<Edge> extra;
            for (std::size_t k = 0; k < candidates.size(); ++k)
                if ((mask >> k) & 1u) extra.push_back(candidates[k]);
            out.push_back(f.with_edges(extra));
        }
        std::size_t c = 0;
        while (c < pick.size() && ++pick[c] == center_choices[c].size()) pick[c++] = 0;
        if (c == pick.size()) break;
    }
    sort_and_dedupe(out);
    if (opts.check_realizations) detail::check_realizations(out, minimal_dominating_sets(f));
    return out;
}

}  // namespace domhg

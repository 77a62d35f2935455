#pragma once

// The acceptance suite. Each criterion is an exact, enumerative check of a
// structural fact about domination hypergraphs; random instances come from
// fixed seeds so the rendered report is reproducible.

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "completion.hpp"
#include "families.hpp"
#include "graph.hpp"
#include "hypergraph.hpp"
#include "io.hpp"
#include "oracle.hpp"
#include "parallel.hpp"
#include "recognition.hpp"

namespace domhg::verify {

struct Check {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

using oracle::Family;

// Counts checked facts and keeps the first few failures.
class Tally {
public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (!ok && failures_.size() < 3) failures_.push_back(what);
        if (!ok) ++failed_;
    }
    void merge(const Tally& other) {
        checked_ += other.checked_;
        failed_ += other.failed_;
        for (const auto& f : other.failures_)
            if (failures_.size() < 3) failures_.push_back(f);
    }
    bool ok() const { return failed_ == 0; }
    std::uint64_t checked() const { return checked_; }
    std::string summary(const std::string& note) const {
        if (ok()) return std::to_string(checked_) + " checks; " + note;
        std::string out = std::to_string(failed_) + " of " + std::to_string(checked_) + " checks failed:";
        for (const auto& f : failures_) out += " [" + f + "]";
        return out;
    }

private:
    std::uint64_t checked_ = 0, failed_ = 0;
    std::vector<std::string> failures_;
};

inline Check run_check(int id, std::string name, const std::function<std::string(Tally&)>& body) {
    Check c{id, std::move(name), false, {}};
    Tally tally;
    try {
        const std::string note = body(tally);
        c.passed = tally.ok() && tally.checked() > 0;
        c.detail = tally.summary(note);
    } catch (const std::exception& e) {
        c.detail = std::string("exception: ") + e.what();
    }
    return c;
}

inline std::string show(const Hypergraph& h) { return io::brief(h); }
inline std::string show(const Graph& g) { return "[" + io::format_edge_list(g) + "]"; }

inline Family edges_of(const Hypergraph& h) { return oracle::edges_of(h); }

inline std::vector<Hypergraph> sorted(std::vector<Hypergraph> hs) {
    std::sort(hs.begin(), hs.end(), HypergraphOrder{});
    return hs;
}

inline std::vector<Hypergraph> hypergraphs_of(const std::vector<MinimalCompletion>& ms) {
    std::vector<Hypergraph> out;
    for (const auto& m : ms) out.push_back(m.hypergraph);
    return out;
}

inline Hypergraph hg(const GroundSet& ground, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<VertexSet> edges;
    for (auto s : sets) {
        VertexSet e;
        for (int label : s) e = e.with(ground.index_of(std::to_string(label)));
        edges.push_back(e);
    }
    return Hypergraph::from_antichain(ground, std::move(edges));
}

// Every graph on n <= 5 plus 500 random graphs at n = 6 and at n = 7.
inline std::vector<Graph> oracle_graphs() {
    std::vector<Graph> out;
    for (int n = 1; n <= 5; ++n) {
        const auto ground = GroundSet::range(n);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << Graph::pair_count(n)); ++c)
            out.push_back(Graph::from_edge_code(ground, c));
    }
    oracle::Random rng(0xD0E5);
    for (int n : {6, 7}) {
        const auto ground = GroundSet::range(n);
        for (int k = 0; k < 500; ++k) out.push_back(rng.graph(ground, rng.between(1, 3), 4));
    }
    return out;
}

inline std::string criterion_oracle(Tally& t, const RunOptions& opts) {
    const auto graphs = oracle_graphs();
    auto parts = parallel_chunks<Tally>(graphs.size(), opts.workers, [&](std::uint64_t b, std::uint64_t e) {
        Tally local;
        for (auto i = b; i < e; ++i) {
            const Graph& g = graphs[static_cast<std::size_t>(i)];
            const Hypergraph d = minimal_dominating_sets(g);
            const Hypergraph nbhd = minimal_closed_neighborhoods(g);
            local.expect(edges_of(d) == oracle::dominating_sets(g), "brute force " + show(g));
            local.expect(d == transversal(nbhd), "tr(N[G]) " + show(g));
            local.expect(nbhd == transversal(d), "N[G] = tr(D) " + show(g));
        }
        return local;
    });
    for (const auto& p : parts) t.merge(p);
    return std::to_string(graphs.size()) + " graphs";
}

inline std::string criterion_order_laws(Tally& t) {
    std::size_t exhaustive = 0;
    std::vector<std::vector<Hypergraph>> by_size(5);
    for (int n = 1; n <= 4; ++n) by_size[static_cast<std::size_t>(n)] = oracle::all_antichains(GroundSet::range(n));

    for (int n = 1; n <= 4; ++n) {
        const auto& all = by_size[static_cast<std::size_t>(n)];
        exhaustive += all.size();
        for (const auto& h : all) {
            const Hypergraph tr = transversal(h);
            t.expect(edges_of(tr) == oracle::transversal(h), "tr vs brute force " + show(h));
            t.expect(transversal(tr) == h, "tr(tr(H)) = H " + show(h));
        }
    }

    // Partial order axioms, agreement with the up-closure definition and the
    // meet as greatest lower bound, over every antichain on three elements.
    const auto& small = by_size[3];
    for (const auto& a : small) {
        t.expect(is_leq(a, a), "reflexive " + show(a));
        for (const auto& b : small) {
            const bool ab = is_leq(a, b);
            t.expect(ab == oracle::leq(a, b), "leq vs up-closures " + show(a) + " " + show(b));
            if (ab && is_leq(b, a)) t.expect(a == b, "antisymmetric " + show(a) + " " + show(b));
            const Hypergraph m = meet(a, b);
            const std::vector<Hypergraph> pair{a, b};
            t.expect(edges_of(m) == oracle::meet(pair), "meet vs brute force " + show(a) + " " + show(b));
            t.expect(is_leq(m, a) && is_leq(m, b), "meet is a lower bound " + show(a) + " " + show(b));
            for (const auto& c : small) {
                const bool bc = is_leq(b, c);
                if (ab && bc) t.expect(is_leq(a, c), "transitive");
                if (is_leq(c, a) && is_leq(c, b)) t.expect(is_leq(c, m), "meet is greatest " + show(c));
            }
        }
    }
    const auto& four = by_size[4];
    for (std::size_t i = 0; i < four.size(); i += 3)
        for (const auto& b : four) t.expect(is_leq(four[i], b) == oracle::leq(four[i], b), "leq vs up-closures on 4");

    oracle::Random rng(0x0DE5);
    for (int k = 0; k < 1000; ++k) {
        const auto ground = GroundSet::range(rng.between(1, 6));
        const Hypergraph h = rng.antichain(ground);
        const Hypergraph tr = transversal(h);
        t.expect(transversal(tr) == h, "tr(tr(H)) = H " + show(h));
        t.expect(edges_of(tr) == oracle::transversal(h), "tr vs brute force " + show(h));
        const std::vector<Hypergraph> trio{h, rng.antichain(ground), rng.antichain(ground)};
        const Hypergraph m = meet(trio);
        t.expect(edges_of(m) == oracle::meet(trio), "meet of three vs brute force " + show(h));
        for (const auto& x : trio) t.expect(is_leq(m, x), "meet below each argument");
        const Hypergraph c = rng.antichain(ground);
        if (is_leq(c, trio[0]) && is_leq(c, trio[1]) && is_leq(c, trio[2])) t.expect(is_leq(c, m), "meet is greatest");
        t.expect(is_leq(h, trio[1]) == oracle::leq(h, trio[1]), "leq vs up-closures");
    }
    return std::to_string(exhaustive) + " exhaustive antichains, 1000 random";
}

inline std::string criterion_uniform(Tally& t, const RunOptions& opts) {
    for (int n = 1; n <= 5; ++n) {
        const auto ground = GroundSet::range(n);
        for (int r = 1; r <= n; ++r) {
            const std::string tag = "(" + std::to_string(r) + "," + std::to_string(n) + ")";
            const auto closed = uniform_recognition(r, ground);
            const auto searched = recognize(uniform(r, ground), opts);
            const auto swept = recognize_by_sweep(uniform(r, ground), opts);
            t.expect(closed.is_domination == searched.is_domination, "verdict " + tag);
            t.expect(closed.realizations == searched.realizations, "realizations vs search " + tag);
            t.expect(closed.realizations == swept.realizations, "realizations vs sweep " + tag);
        }
    }
    auto pairings = [](int m) {
        std::uint64_t v = 1;  // (2m)! / (2^m m!) = (2m-1)!!
        for (int k = 1; k < 2 * m; k += 2) v *= static_cast<std::uint64_t>(k);
        return v;
    };
    for (int m : {2, 3}) {
        const auto ground = GroundSet::range(2 * m);
        const auto closed = uniform_recognition(2, ground);
        const auto searched = recognize(uniform(2, ground), opts);
        t.expect(closed.realizations.size() == pairings(m), "matching complements count n=" + std::to_string(2 * m));
        t.expect(searched.realizations == closed.realizations, "rank 2 search n=" + std::to_string(2 * m));
    }
    t.expect(pairings(2) == 3 && pairings(3) == 15, "pairing counts 3 and 15");
    for (auto [r, n] : std::vector<std::pair<int, int>>{{2, 3}, {2, 5}, {3, 4}, {3, 5}, {4, 5}}) {
        const auto ground = GroundSet::range(n);
        const std::string tag = "(" + std::to_string(r) + "," + std::to_string(n) + ")";
        t.expect(!recognize(uniform(r, ground), opts).is_domination, "non-domination " + tag);
        t.expect(!uniform_recognition(r, ground).is_domination, "closed form non-domination " + tag);
    }
    return "all ranks for n <= 5; 3 and 15 matching complements";
}

inline std::string criterion_small_example(Tally& t, const RunOptions& opts) {
    const auto ground = GroundSet::range(3);
    const auto all = completions(2, ground, opts);
    std::vector<Hypergraph> got;
    for (const auto& c : all) {
        got.push_back(c.hypergraph);
        t.expect(minimal_dominating_sets(c.witness) == c.hypergraph, "witness of " + show(c.hypergraph));
    }
    const std::vector<Hypergraph> split{hg(ground, {{1}, {2, 3}}), hg(ground, {{2}, {1, 3}}), hg(ground, {{3}, {1, 2}})};
    std::vector<Hypergraph> expected = split;
    expected.push_back(uniform(1, ground));
    t.expect(all.size() == 4, "4 completions");
    t.expect(sorted(got) == sorted(expected), "completion list");
    const auto minimal = minimal_completions(2, ground, opts);
    t.expect(minimal.size() == 3, "3 minimal completions");
    t.expect(sorted(hypergraphs_of(minimal)) == sorted(split), "minimal completions are the split hypergraphs");
    t.expect(verify_meet_decomposition(split, 2, ground), "meet of the three is U_2");
    const auto d = decomposition_parameter(2, ground, opts);
    t.expect(d.value == 2, "decomposition parameter 2");
    t.expect(d.witness.size() == 2 && verify_meet_decomposition(d.witness, 2, ground), "witness pair meets to U_2");
    return "4 completions, 3 minimal, parameter 2";
}

inline std::string criterion_rank_two(Tally& t, const RunOptions& opts) {
    for (int n : {3, 5}) {
        const auto ground = GroundSet::range(n);
        std::vector<Hypergraph> pointed;
        for (int w = 0; w < n; ++w) pointed.push_back(pointed_pairs(w, ground));
        const auto minimal = minimal_completions(2, ground, opts);
        t.expect(sorted(hypergraphs_of(minimal)) == sorted(pointed), "minimal completions are pointed pairs n=" + std::to_string(n));
        for (const auto& m : minimal) {
            const auto w = std::find(pointed.begin(), pointed.end(), m.hypergraph);
            if (w == pointed.end()) continue;
            const int omega = static_cast<int>(w - pointed.begin());
            const VertexSet rest = ground.full().without(omega);
            for (const auto& g : m.witnesses) {
                t.expect(g.degree(omega) == n - 1, "center is universal in " + show(g));
                const Graph sub = induced_subgraph(g, rest);
                t.expect(minimal_dominating_sets(sub) == uniform(2, sub.ground()), "rest realizes U_2 in " + show(g));
            }
        }
        if (n == 5) {
            for (std::size_t i = 0; i < pointed.size(); ++i)
                for (std::size_t j = i + 1; j < pointed.size(); ++j) {
                    const std::vector<Hypergraph> pair{pointed[i], pointed[j]};
                    t.expect(verify_meet_decomposition(pair, 2, ground), "pair decomposes U_2");
                }
        }
        t.expect(decomposition_parameter(2, ground, opts).value == 2, "parameter 2 n=" + std::to_string(n));
    }
    return "5 pointed-pair completions on five elements, all 10 pairs decompose";
}

inline std::vector<Hypergraph> star_forest_hypergraphs(const GroundSet& ground) {
    std::vector<Hypergraph> out;
    for (const auto& f : star_forests(ground)) out.push_back(minimal_dominating_sets(f));
    std::sort(out.begin(), out.end(), HypergraphOrder{});
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

inline std::string criterion_corank_one(Tally& t, const RunOptions& opts) {
    const std::map<int, std::size_t> expected{{3, 3}, {4, 7}, {5, 35}};
    for (auto [n, count] : expected) {
        const auto ground = GroundSet::range(n);
        const auto swept = sorted(hypergraphs_of(minimal_completions(n - 1, ground, opts)));
        const auto stars = star_forest_hypergraphs(ground);
        t.expect(swept.size() == count, "count n=" + std::to_string(n));
        t.expect(swept == stars, "sweep equals star forests n=" + std::to_string(n));
    }
    std::string counts;
    for (int n = 2; n <= 6; ++n) {
        const auto ground = GroundSet::range(n);
        const auto generated = star_forests(ground);
        std::size_t filtered = 0;
        const auto all = enumerate_family(GraphFamilyKind::AllGraphs, ground, opts);
        for (std::uint64_t c = 0; c < all.size(); ++c) filtered += is_star_forest(all.at(c)) ? 1 : 0;
        t.expect(generated.size() == filtered, "generator vs filter n=" + std::to_string(n));
        bool distinct = true, valid = true;
        for (std::size_t i = 0; i < generated.size(); ++i) {
            valid = valid && is_star_forest(generated[i]);
            if (i > 0) distinct = distinct && edge_order_less(generated[i - 1], generated[i]);
        }
        t.expect(valid && distinct, "generated forests valid and distinct n=" + std::to_string(n));
        counts += (counts.empty() ? "" : ",") + std::to_string(generated.size());
    }
    return "3/7/35 minimal completions; star forests n=2..6: " + counts;
}

inline std::string criterion_eight(Tally& t) {
    const auto ground = GroundSet::range(8);
    const auto forests = star_forests(ground);
    t.expect(forests.size() == 5041, "5041 star forests");
    const auto structured = structured_minimal_completions(7, ground);
    t.expect(structured && structured->size() == 5041, "5041 distinct hypergraphs");
    const Graph g0 = Graph::from_edges(ground, {{0, 1}, {2, 3}, {4, 5}, {4, 6}, {4, 7}});
    const Hypergraph listed = hg(ground, {{1, 3, 5}, {1, 3, 6, 7, 8}, {1, 4, 5}, {1, 4, 6, 7, 8},
                                          {2, 3, 5}, {2, 3, 6, 7, 8}, {2, 4, 5}, {2, 4, 6, 7, 8}});
    t.expect(minimal_dominating_sets(g0) == listed, "the eight listed sets");
    t.expect(realization_expansion(g0).size() == 25, "25 realizations");
    return "5041 forests, 8 dominating sets, 25 realizations";
}

inline std::string criterion_stars(Tally& t, const RunOptions& opts) {
    for (int n = 3; n <= 8; ++n) {
        const auto ground = GroundSet::range(n);
        const auto stars = star_decomposition_witness(ground);
        t.expect(static_cast<int>(stars.size()) == n - 1, "n-1 stars");
        t.expect(verify_meet_decomposition(stars, n - 1, ground), "stars decompose n=" + std::to_string(n));
    }
    for (int n = 3; n <= 5; ++n) {
        const auto d = decomposition_parameter(n - 1, GroundSet::range(n), opts);
        t.expect(d.value == n - 1, "parameter n-1 at n=" + std::to_string(n));
        t.expect(d.source == DecompositionSource::Sweep, "exact value from the sweep");
    }
    return "star witnesses n=3..8; exact n-1 for n=3..5";
}

inline std::string criterion_three_five(Tally& t, const RunOptions& opts) {
    const auto ground = GroundSet::range(5);
    const auto minimal = hypergraphs_of(minimal_completions(3, ground, opts));
    t.expect(minimal.size() == 22, "22 minimal completions");
    std::map<std::vector<VertexSet>, std::uint64_t> cycle_code;
    std::vector<Hypergraph> typed;
    for (const auto& g : enumerate_family(GraphFamilyKind::CycleC5, ground).materialize()) {
        const auto d = minimal_dominating_sets(g);
        cycle_code[edges_of(d)] = g.edge_code();
        typed.push_back(d);
    }
    std::size_t bipartite = 0;
    for (const auto& g : enumerate_family(GraphFamilyKind::CompleteBipartite23, ground).materialize()) {
        typed.push_back(minimal_dominating_sets(g));
        ++bipartite;
    }
    t.expect(cycle_code.size() == 12 && bipartite == 10, "12 cycle and 10 bipartite types");
    t.expect(sorted(minimal) == sorted(typed), "minimal completions are the typed hypergraphs");
    t.expect(structured_minimal_completions(3, ground) == std::optional(sorted(typed)), "closed form matches");
    t.expect(decomposition_parameter(3, ground, opts).value == 2, "parameter 2");

    const Hypergraph target = uniform(3, ground);
    const std::uint64_t all_pairs = (std::uint64_t{1} << Graph::pair_count(5)) - 1;
    std::size_t pairs = 0, decomposing = 0;
    for (std::size_t i = 0; i < minimal.size(); ++i) {
        for (std::size_t j = i; j < minimal.size(); ++j, ++pairs) {
            const bool meets = meet(minimal[i], minimal[j]) == target;
            const auto a = cycle_code.find(edges_of(minimal[i])), b = cycle_code.find(edges_of(minimal[j]));
            const bool complementary = a != cycle_code.end() && b != cycle_code.end() &&
                                       (a->second ^ b->second) == all_pairs && (a->second & b->second) == 0;
            decomposing += meets ? 1 : 0;
            t.expect(meets == complementary, "pair " + show(minimal[i]) + " " + show(minimal[j]));
        }
    }
    t.expect(pairs == 22 * 21 / 2 + 22, "pair count");
    return std::to_string(pairs) + " pairs, " + std::to_string(decomposing) + " decomposing";
}

// Structural property suites.

inline std::vector<Graph> all_graphs_up_to(int max_n) {
    std::vector<Graph> out;
    for (int n = 1; n <= max_n; ++n) {
        const auto ground = GroundSet::range(n);
        for (std::uint64_t c = 0; c < (std::uint64_t{1} << Graph::pair_count(n)); ++c)
            out.push_back(Graph::from_edge_code(ground, c));
    }
    return out;
}

inline void union_suite(Tally& t, oracle::Random& rng) {
    auto check = [&](const Graph& g) {
        const Hypergraph d = minimal_dominating_sets(g);
        VertexSet all, common = g.vertices();
        for (auto e : d.edges()) {
            all |= e;
            common = common & e;
        }
        t.expect(all == g.vertices(), "union is V " + show(g));
        t.expect(common == isolated_vertices(g), "intersection is isolated " + show(g));
    };
    for (const auto& g : all_graphs_up_to(4)) check(g);
    for (int k = 0; k < 500; ++k) check(rng.graph(GroundSet::range(rng.between(1, 6))));
}

inline void operations_suite(Tally& t, oracle::Random& rng) {
    auto check = [&](const std::vector<Graph>& parts) {
        const Graph sum = disjoint_union(parts), joined = join(parts);
        std::vector<VertexSet> blocks;
        int offset = 0;
        std::vector<Family> shifted;
        for (const auto& g : parts) {
            Family f;
            const Hypergraph d = minimal_dominating_sets(g);
            for (auto e : d.edges()) f.push_back(VertexSet{e.bits() << offset});
            shifted.push_back(std::move(f));
            blocks.push_back(VertexSet{g.vertices().bits() << offset});
            offset += g.order();
        }
        // Products D_1 u ... u D_r.
        Family product{VertexSet{}};
        for (const auto& f : shifted) {
            Family next;
            for (auto a : product)
                for (auto b : f) next.push_back(a | b);
            product = std::move(next);
        }
        t.expect(edges_of(minimal_dominating_sets(sum)) == oracle::canonical(product), "disjoint union formula");

        // Union of the parts' families plus cross pairs of non-universal vertices.
        Family expected;
        for (const auto& f : shifted) expected.insert(expected.end(), f.begin(), f.end());
        for (std::size_t i = 0; i < parts.size(); ++i)
            for (std::size_t j = i + 1; j < parts.size(); ++j)
                blocks[i].for_each([&](int x) {
                    if (sum.closed_neighborhood(x) == blocks[i]) return;
                    blocks[j].for_each([&](int y) {
                        if (sum.closed_neighborhood(y) != blocks[j]) expected.push_back(VertexSet::single(x).with(y));
                    });
                });
        t.expect(edges_of(minimal_dominating_sets(joined)) == oracle::canonical(expected), "join formula");
    };
    // Exhaustive: every pair of graphs with at most four vertices in total.
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; a + b <= 4; ++b) {
            const auto ga = oracle::labels_from(1, a), gb = oracle::labels_from(a + 1, b);
            for (std::uint64_t ca = 0; ca < (std::uint64_t{1} << Graph::pair_count(a)); ++ca)
                for (std::uint64_t cb = 0; cb < (std::uint64_t{1} << Graph::pair_count(b)); ++cb)
                    check({Graph::from_edge_code(ga, ca), Graph::from_edge_code(gb, cb)});
        }
    for (int k = 0; k < 500; ++k) {
        const int count = rng.between(2, 3);
        std::vector<Graph> parts;
        int next = 1;
        for (int p = 0; p < count; ++p) {
            const int size = rng.between(1, count == 2 ? 3 : 2);
            parts.push_back(rng.graph(oracle::labels_from(next, size)));
            next += size;
        }
        check(parts);
    }
}

inline void star_count_suite(Tally& t, oracle::Random& rng) {
    auto check = [&](const Graph& f) {
        const auto comps = connected_components(f);
        Family product{VertexSet{}};
        for (VertexSet comp : comps) {
            Family options;
            if (comp.size() == 2) {
                comp.for_each([&](int x) { options.push_back(VertexSet::single(x)); });
            } else {
                comp.for_each([&](int x) {
                    if (f.degree(x) >= 2) {
                        options.push_back(VertexSet::single(x));
                        options.push_back(comp.without(x));
                    }
                });
            }
            Family next;
            for (auto a : product)
                for (auto b : options) next.push_back(a | b);
            product = std::move(next);
        }
        const Hypergraph d = minimal_dominating_sets(f);
        t.expect(d.size() == (std::size_t{1} << comps.size()), "2^r sets " + show(f));
        t.expect(edges_of(d) == oracle::canonical(product), "center/leaf product " + show(f));
    };
    for (int n = 2; n <= 4; ++n)
        for (const auto& f : star_forests(GroundSet::range(n))) check(f);
    for (int k = 0; k < 500; ++k) {
        const auto forests = star_forests(GroundSet::range(rng.between(2, 6)));
        check(forests[static_cast<std::size_t>(rng.below(static_cast<int>(forests.size())))]);
    }
}

inline void spanning_suite(Tally& t, oracle::Random& rng) {
    auto check = [&](const Graph& g) {
        const Graph f = spanning_star_forest(g);
        bool subgraph = f.ground() == g.ground();
        for (auto [x, y] : f.edges()) subgraph = subgraph && g.adjacent(x, y);
        t.expect(subgraph && is_star_forest(f), "spanning star forest of " + show(g));
        t.expect(is_leq(minimal_dominating_sets(f), minimal_dominating_sets(g)), "D(F) <= D(G) " + show(g));
    };
    for (const auto& g : all_graphs_up_to(4))
        if (isolated_vertices(g).empty()) check(g);
    for (int k = 0; k < 500;) {
        const Graph g = rng.graph(GroundSet::range(rng.between(2, 6)));
        if (!isolated_vertices(g).empty()) continue;
        check(g);
        ++k;
    }
}

inline void antitone_suite(Tally& t, oracle::Random& rng) {
    for (int n = 1; n <= 3; ++n) {
        const auto all = oracle::all_antichains(GroundSet::range(n));
        for (const auto& a : all)
            for (const auto& b : all)
                t.expect(is_leq(a, b) == is_leq(transversal(b), transversal(a)), "antitone " + show(a) + " " + show(b));
    }
    for (int k = 0; k < 500; ++k) {
        const auto ground = GroundSet::range(rng.between(1, 6));
        const Hypergraph upper = rng.antichain(ground);
        // Enlarging edges of `upper` gives a hypergraph below it.
        std::vector<VertexSet> grown;
        for (auto e : upper.edges()) grown.push_back(e | VertexSet{rng.bits() & ground.full().bits()});
        const Hypergraph lower = minimize(grown, ground);
        t.expect(is_leq(lower, upper), "constructed pair is ordered");
        t.expect(is_leq(transversal(upper), transversal(lower)), "antitone " + show(lower) + " " + show(upper));
        const Hypergraph other = rng.antichain(ground);
        t.expect(is_leq(other, upper) == is_leq(transversal(upper), transversal(other)), "antitone both ways");
    }
}

inline void restriction_suite(Tally& t, oracle::Random& rng) {
    auto check = [&](const Hypergraph& h, VertexSet part, const Graph& local) {
        const GroundSet& ground = h.ground();
        const auto restricted = restrict(h, part);
        if (!restricted) return;
        const Graph big = join({local, Graph::complete(ground.subset(ground.full() - part))}).with_ground(ground);
        t.expect(is_leq(*restricted, minimal_dominating_sets(local)) == is_leq(h, minimal_dominating_sets(big)),
                 "restriction " + show(h) + " on " + show(local));
    };
    for (int n = 2; n <= 4; ++n) {
        const auto ground = GroundSet::range(n);
        const auto antichains = oracle::all_antichains(ground);
        for (std::uint64_t p = 1; p < (std::uint64_t{1} << n) - 1; ++p) {
            const GroundSet sub = ground.subset(VertexSet{p});
            for (std::uint64_t c = 0; c < (std::uint64_t{1} << Graph::pair_count(sub.size())); ++c) {
                const Graph local = Graph::from_edge_code(sub, c);
                for (const auto& h : antichains) check(h, VertexSet{p}, local);
            }
        }
    }
    for (int k = 0; k < 500;) {
        const auto ground = GroundSet::range(rng.between(2, 6));
        VertexSet part{rng.bits() & ground.full().bits()};
        if (part.empty() || part == ground.full()) continue;
        const Hypergraph h = rng.antichain(ground);
        if (!restrict(h, part)) continue;
        const GroundSet sub = ground.subset(part);
        Graph local = rng.graph(sub);
        if (sub.size() >= 2 && rng.coin()) {
            const auto forests = star_forests(sub);
            local = forests[static_cast<std::size_t>(rng.below(static_cast<int>(forests.size())))];
        }
        check(h, part, local);
        ++k;
    }
}

inline void transversal_size_suite(Tally& t, const RunOptions& opts) {
    for (const auto& c : completions(3, GroundSet::range(5), opts)) {
        const Hypergraph blocker = transversal(c.hypergraph);
        for (auto x : blocker.edges())
            t.expect(x.size() >= 3, "blocker member of size >= 3 in " + show(c.hypergraph));
    }
}

inline void separation_suite(Tally& t, oracle::Random& rng) {
    auto check = [&](const Hypergraph& h, int r) {
        const GroundSet& ground = h.ground();
        const Hypergraph target = uniform(r, ground);
        const Hypergraph sep = separating_completion(h, r);
        t.expect(is_leq(target, sep), "U_r below the separating completion " + show(h));
        t.expect(!is_leq(h, sep), "h not below the separating completion " + show(h));
        VertexSet block = ground.full();
        for (auto e : sep.edges())
            if (e.size() == r) block = e;
        Graph realized = Graph::empty(ground);
        if (block != ground.full())
            realized = join({Graph::empty(ground.subset(block)), Graph::complete(ground.subset(ground.full() - block))})
                           .with_ground(ground);
        t.expect(minimal_dominating_sets(realized) == sep, "realized by an empty-complete join " + show(sep));
    };
    for (int n = 2; n <= 4; ++n) {
        const auto ground = GroundSet::range(n);
        const auto antichains = oracle::all_antichains(ground);
        for (int r = 2; r <= n; ++r) {
            const Hypergraph target = uniform(r, ground);
            for (const auto& h : antichains)
                if (is_leq(target, h) && !(h == target)) check(h, r);
        }
    }
    for (int k = 0; k < 1000;) {
        const int n = rng.between(2, 6), r = rng.between(2, n);
        const auto ground = GroundSet::range(n);
        auto edges = edges_of(uniform(r, ground));
        const int extra = rng.between(1, 3);
        for (int i = 0; i < extra; ++i) {
            VertexSet s = rng.nonempty_subset(n);
            while (s.size() >= r) s = s.without(s.last());
            edges.push_back(s);
        }
        const Hypergraph h = minimize(std::move(edges), ground);
        if (h == uniform(r, ground)) continue;
        check(h, r);
        ++k;
    }
}

inline std::string criterion_properties(Tally& t, const RunOptions& opts) {
    std::string out;
    auto suite = [&](const std::string& name, auto&& body) {
        Tally local;
        body(local);
        t.merge(local);
        if (!local.ok()) {
            out += (out.empty() ? "" : ", ") + name + " FAILED";
            return;
        }
        out += (out.empty() ? "" : ", ") + name + " " + std::to_string(local.checked());
    };
    oracle::Random rng(0x1E44A);
    suite("union", [&](Tally& x) { union_suite(x, rng); });
    suite("operations", [&](Tally& x) { operations_suite(x, rng); });
    suite("star-forest-count", [&](Tally& x) { star_count_suite(x, rng); });
    suite("spanning-forest", [&](Tally& x) { spanning_suite(x, rng); });
    suite("antitone-transversal", [&](Tally& x) { antitone_suite(x, rng); });
    suite("restriction", [&](Tally& x) { restriction_suite(x, rng); });
    suite("blocker-size", [&](Tally& x) { transversal_size_suite(x, opts); });
    suite("separation", [&](Tally& x) { separation_suite(x, rng); });
    return out;
}

// JSON of every parallelized computation, to compare across worker counts.
inline std::string parallel_outputs(const RunOptions& opts) {
    std::string out;
    for (int n = 1; n <= 5; ++n) {
        const auto ground = GroundSet::range(n);
        for (int r = 1; r <= n; ++r) {
            out += io::to_json(completion_report(r, ground, opts)).dump() + "\n";
            out += io::to_json(recognize(uniform(r, ground), opts)).dump() + "\n";
        }
    }
    return out;
}

}  // namespace detail

/// Criteria 1-10 with the given options.
inline std::vector<Check> run_criteria(const RunOptions& opts) {
    using detail::Tally;
    std::vector<Check> out;
    out.push_back(detail::run_check(1, "oracle equivalence", [&](Tally& t) { return detail::criterion_oracle(t, opts); }));
    out.push_back(detail::run_check(2, "involution and order laws", [&](Tally& t) { return detail::criterion_order_laws(t); }));
    out.push_back(detail::run_check(3, "uniform recognition", [&](Tally& t) { return detail::criterion_uniform(t, opts); }));
    out.push_back(detail::run_check(4, "rank 2 on three elements", [&](Tally& t) { return detail::criterion_small_example(t, opts); }));
    out.push_back(detail::run_check(5, "rank 2 pointed pairs", [&](Tally& t) { return detail::criterion_rank_two(t, opts); }));
    out.push_back(detail::run_check(6, "rank n-1 star forests", [&](Tally& t) { return detail::criterion_corank_one(t, opts); }));
    out.push_back(detail::run_check(7, "eight-vertex star forest", [&](Tally& t) { return detail::criterion_eight(t); }));
    out.push_back(detail::run_check(8, "maximal star decomposition", [&](Tally& t) { return detail::criterion_stars(t, opts); }));
    out.push_back(detail::run_check(9, "rank 3 on five elements", [&](Tally& t) { return detail::criterion_three_five(t, opts); }));
    out.push_back(detail::run_check(10, "structural property suites", [&](Tally& t) { return detail::criterion_properties(t, opts); }));
    return out;
}

inline std::string render(const std::vector<Check>& checks) {
    std::string out;
    for (const auto& c : checks) {
        std::string id = std::to_string(c.id);
        if (id.size() < 2) id = " " + id;
        out += std::string(c.passed ? "PASS" : "FAIL") + " " + id + "  " + c.name + ": " + c.detail + "\n";
    }
    return out;
}

/// All eleven criteria; the last reruns 1-10 with 1, 2 and 8 workers and
/// compares the reports and the parallel computations byte for byte.
inline std::vector<Check> run_verification(unsigned workers = 1) {
    RunOptions opts;
    opts.workers = workers;
    auto checks = run_criteria(opts);
    checks.push_back(detail::run_check(11, "determinism across worker counts", [&](detail::Tally& t) {
        const std::string reference = render(checks);
        std::string baseline;
        for (unsigned w : {1u, 2u, 8u}) {
            RunOptions o;
            o.workers = w;
            const std::string criteria = render(run_criteria(o));
            const std::string report = criteria + detail::parallel_outputs(o);
            if (baseline.empty()) baseline = report;
            t.expect(report == baseline, "workers=" + std::to_string(w) + " differs from workers=1");
            t.expect(criteria == reference, "workers=" + std::to_string(w) + " differs from the main report");
        }
        return "workers 1, 2, 8 identical";
    }));
    return checks;
}

inline bool all_passed(const std::vector<Check>& checks) {
    return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

}  // namespace domhg::verify

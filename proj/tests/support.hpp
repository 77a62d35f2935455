#pragma once

#include <initializer_list>
#include <string>
#include <vector>

#include <domhg/domhg.hpp>

namespace testing_support {

using namespace domhg;

inline GroundSet omega(int n) { return GroundSet::range(n); }

inline VertexSet set_of(const GroundSet& ground, std::initializer_list<int> labels) {
    VertexSet s;
    for (int l : labels) s = s.with(ground.index_of(std::to_string(l)));
    return s;
}

inline Hypergraph hyper(const GroundSet& ground, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<VertexSet> edges;
    for (auto s : sets) edges.push_back(set_of(ground, s));
    return Hypergraph::from_antichain(ground, std::move(edges));
}

inline std::vector<VertexSet> family(const GroundSet& ground, std::initializer_list<std::initializer_list<int>> sets) {
    std::vector<VertexSet> out;
    for (auto s : sets) out.push_back(set_of(ground, s));
    return out;
}

inline Graph graph(const GroundSet& ground, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<Edge> out;
    for (auto [a, b] : edges) out.emplace_back(ground.index_of(std::to_string(a)), ground.index_of(std::to_string(b)));
    return Graph::from_edges(ground, out);
}

inline std::string edge_list(const Graph& g) { return io::format_edge_list(g); }

}  // namespace testing_support

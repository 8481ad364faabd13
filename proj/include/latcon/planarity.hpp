#pragma once

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "latcon/lattice.hpp"

namespace latcon {

inline bool is_planar_graph(int n, const std::vector<Edge>& edges) {
    using Graph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    Graph g(n);
    for (auto [a, b] : edges) boost::add_edge(a, b, g);
    return boost::boyer_myrvold_planarity_test(g);
}

// Platt's criterion: a finite lattice is planar iff its cover graph together
// with the extra edge {0, 1} is a planar graph.
inline bool is_planar(const FiniteLattice& l) {
    std::vector<Edge> edges = l.base().covers();
    if (!l.is_cover(l.bottom(), l.top()) && l.bottom() != l.top())
        edges.push_back({l.bottom(), l.top()});
    return is_planar_graph(l.size(), edges);
}

}  // namespace latcon

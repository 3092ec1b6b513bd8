#pragma once

#include <vector>

#include "planarlab/graph.hpp"

namespace planarlab {

// Largest edge count a planar graph on n vertices can have.
inline long long max_planar_edges(int n) noexcept {
    if (n < 3) return static_cast<long long>(pair_count(n));
    return 3LL * n - 6;
}

bool is_planar(const LabeledGraph& g);

// Non-edges e with G+e planar, each tested on its own, in lexicographic order.
// Throws NotPlanarInput when G itself is not planar.
std::vector<Edge> addable_nonedges(const LabeledGraph& g);
int add_count(const LabeledGraph& g);

namespace detail {
// Boyer-Myrvold on the whole graph, without the cheap reductions.
bool boyer_myrvold_planar(const LabeledGraph& g);
}  // namespace detail

}  // namespace planarlab

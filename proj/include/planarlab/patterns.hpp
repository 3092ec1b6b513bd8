#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "planarlab/graph.hpp"

namespace planarlab {

enum class PatternClass { Tree, Unicyclic, Multicyclic };

const char* to_string(PatternClass c) noexcept;

inline constexpr int kMaxPatternSize = 16;

// A fixed connected planar graph H on {1..|H|}. The labelling matters: the
// appearance condition maps 1..|H| increasingly onto the witness set.
class Pattern {
public:
    const LabeledGraph& graph() const noexcept { return h_; }
    int size() const noexcept { return h_.order(); }
    int edge_count() const noexcept { return h_.size(); }
    PatternClass klass() const noexcept { return klass_; }
    std::uint64_t aut_count() const noexcept { return aut_; }
    const std::string& name() const noexcept { return name_; }

private:
    friend Pattern make_pattern(const LabeledGraph& h, std::string name);
    Pattern(LabeledGraph h, PatternClass k, std::uint64_t aut, std::string name)
        : h_(std::move(h)), klass_(k), aut_(aut), name_(std::move(name)) {}

    LabeledGraph h_;
    PatternClass klass_;
    std::uint64_t aut_;
    std::string name_;
};

// Throws Disconnected, NotPlanar, or PatternTooLarge (|H| > 16). An empty
// name defaults to the graph's encoding.
Pattern make_pattern(const LabeledGraph& h, std::string name = {});

// Named presets: vertex, edge, triangle, k4, path<k>, cycle<k>, star<k>
// (k written as digits, e.g. "path3"; star<k> has k vertices), or a raw
// "n:HEX" encoding. Throws UnknownPattern.
Pattern pattern_preset(std::string_view spec);

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b);
std::uint64_t automorphism_count(const LabeledGraph& h);

bool is_two_edge_connected(const LabeledGraph& h);

enum class AppearanceAlgorithm { SubsetScan, BridgeDriven };

// Witness sets W (sorted, in lexicographic order) at which H appears in G.
// Throws PatternTooLarge when |H| >= n.
std::vector<std::vector<int>> appearance_sets(const LabeledGraph& g, const Pattern& h,
                                              AppearanceAlgorithm algo = AppearanceAlgorithm::BridgeDriven);

// f_H(G).
std::uint64_t count_appearances(const LabeledGraph& g, const Pattern& h,
                                AppearanceAlgorithm algo = AppearanceAlgorithm::BridgeDriven);

int count_components_isomorphic(const LabeledGraph& g, const Pattern& h);

// Injective maps V(H) -> V(G) carrying every edge of H onto an edge of G.
std::uint64_t count_embeddings(const LabeledGraph& g, const LabeledGraph& h);

// Subgraph copies of H: embeddings / |Aut(H)|.
std::uint64_t count_copies(const LabeledGraph& g, const Pattern& h);
bool has_copy(const LabeledGraph& g, const Pattern& h);

// Triangles with at least one vertex of degree <= 6 in G.
int count_good_triangles(const LabeledGraph& g);

// Edges with an endpoint of degree 1; an isolated edge counts once.
int count_pendant_edges(const LabeledGraph& g);

}  // namespace planarlab

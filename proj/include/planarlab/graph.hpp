#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "planarlab/error.hpp"

namespace planarlab {

// An unordered vertex pair stored with u < v. Labels are 1-based.
struct Edge {
    int u = 0;
    int v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Index of the pair (u,v), u < v, in the row-major upper-triangle order
// (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n).
inline std::size_t pair_slot(int n, int u, int v) noexcept {
    const auto nn = static_cast<std::size_t>(n);
    const auto uu = static_cast<std::size_t>(u - 1);
    return uu * nn - uu * (uu + 1) / 2 + static_cast<std::size_t>(v - u - 1);
}

inline std::size_t pair_count(int n) noexcept {
    return n < 2 ? 0 : static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

// All pairs of {1..n} in slot order.
std::vector<Edge> all_pairs(int n);

// Simple undirected graph on {1..n}. Adjacency is kept as one bit row per
// vertex; the edge count is cached. Instances are values: the modifying
// helpers return new graphs.
class LabeledGraph {
public:
    explicit LabeledGraph(int n);

    int order() const noexcept { return n_; }
    int size() const noexcept { return m_; }

    bool has_edge(int u, int v) const;
    int degree(int v) const;

    std::vector<Edge> edges() const;
    std::vector<Edge> non_edges() const;
    std::vector<int> neighbors(int v) const;

    template <typename F>
    void for_each_neighbor(int v, F&& f) const {
        const std::uint64_t* row = row_ptr(v);
        for (int w = 0; w < words_; ++w) {
            std::uint64_t bits = row[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                bits &= bits - 1;
                f(w * 64 + bit + 1);
            }
        }
    }

    // Checked edits; throw LoopEdge / VertexOutOfRange / DuplicateEdge /
    // MissingEdge as appropriate.
    LabeledGraph with_edge(int u, int v) const;
    LabeledGraph without_edge(int u, int v) const;

    // Subgraph induced on `vertices`, relabelled 1..k in the given order.
    LabeledGraph induced(std::span<const int> vertices) const;

    friend bool operator==(const LabeledGraph& a, const LabeledGraph& b) {
        return a.n_ == b.n_ && a.m_ == b.m_ && a.bits_ == b.bits_;
    }

private:
    friend class GraphBuilder;

    void check_vertex(int v) const;
    void set_bit(int u, int v, bool on) noexcept;
    const std::uint64_t* row_ptr(int v) const noexcept {
        return bits_.data() + static_cast<std::size_t>(v - 1) * static_cast<std::size_t>(words_);
    }

    int n_;
    int m_ = 0;
    int words_;
    std::vector<std::uint64_t> bits_;
};

// Unchecked incremental construction for hot loops (enumeration, decoding).
// The caller guarantees u != v, labels in range and no duplicates.
class GraphBuilder {
public:
    explicit GraphBuilder(int n) : g_(n) {}

    void add(int u, int v) noexcept {
        g_.set_bit(u, v, true);
        ++g_.m_;
    }
    void remove(int u, int v) noexcept {
        g_.set_bit(u, v, false);
        --g_.m_;
    }
    const LabeledGraph& graph() const noexcept { return g_; }
    LabeledGraph take() { return std::move(g_); }

private:
    LabeledGraph g_;
};

// Validated construction. The edge list must not contain the same unordered
// pair twice; duplicates are an error rather than being merged.
LabeledGraph build_graph(int n, std::span<const std::pair<int, int>> edge_list);
LabeledGraph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list);

// "n:HEX" interchange format: the upper-triangle adjacency bits in slot
// order, right-padded with zeros to a multiple of four, uppercase hex.
std::string encode(const LabeledGraph& g);
LabeledGraph decode(std::string_view s);

std::vector<std::vector<int>> components(const LabeledGraph& g);
int kappa(const LabeledGraph& g);

// Cut edges, in lexicographic order.
std::vector<Edge> bridges(const LabeledGraph& g);

struct DegreeHistogram {
    std::map<int, int> counts;  // degree -> number of vertices

    int at(int degree) const {
        auto it = counts.find(degree);
        return it == counts.end() ? 0 : it->second;
    }
    int vertices() const;
    int degree_sum() const;
    friend bool operator==(const DegreeHistogram&, const DegreeHistogram&) = default;
};

DegreeHistogram degree_histogram(const LabeledGraph& g);

// Common shapes, used by pattern presets, tests and the sampler.
LabeledGraph edgeless_graph(int n);
LabeledGraph complete_graph(int n);
LabeledGraph path_graph(int n);
LabeledGraph cycle_graph(int n);
LabeledGraph star_graph(int n);  // vertex 1 joined to 2..n
LabeledGraph complete_bipartite_graph(int a, int b);

}  // namespace planarlab

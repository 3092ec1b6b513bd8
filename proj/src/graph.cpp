#include "planarlab/graph.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace planarlab {

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    out.reserve(pair_count(n));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) out.push_back({u, v});
    return out;
}

LabeledGraph::LabeledGraph(int n) : n_(n), words_((n + 63) / 64) {
    if (n < 1) throw Error(Errc::InvalidVertexCount, "vertex count must be positive, got " + std::to_string(n));
    bits_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(words_), 0);
}

void LabeledGraph::check_vertex(int v) const {
    if (v < 1 || v > n_)
        throw Error(Errc::VertexOutOfRange, "vertex " + std::to_string(v) + " not in 1.." + std::to_string(n_));
}

void LabeledGraph::set_bit(int u, int v, bool on) noexcept {
    auto flip = [&](int a, int b) {
        std::uint64_t& word = bits_[static_cast<std::size_t>(a - 1) * static_cast<std::size_t>(words_) +
                                    static_cast<std::size_t>((b - 1) / 64)];
        const std::uint64_t mask = std::uint64_t{1} << ((b - 1) % 64);
        if (on)
            word |= mask;
        else
            word &= ~mask;
    };
    flip(u, v);
    flip(v, u);
}

bool LabeledGraph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return (row_ptr(u)[(v - 1) / 64] >> ((v - 1) % 64)) & 1U;
}

int LabeledGraph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    const std::uint64_t* row = row_ptr(v);
    for (int w = 0; w < words_; ++w) d += std::popcount(row[w]);
    return d;
}

std::vector<Edge> LabeledGraph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 1; u <= n_; ++u)
        for_each_neighbor(u, [&](int v) {
            if (v > u) out.push_back({u, v});
        });
    return out;
}

std::vector<Edge> LabeledGraph::non_edges() const {
    std::vector<Edge> out;
    for (int u = 1; u <= n_; ++u)
        for (int v = u + 1; v <= n_; ++v)
            if (!has_edge(u, v)) out.push_back({u, v});
    return out;
}

std::vector<int> LabeledGraph::neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for_each_neighbor(v, [&](int w) { out.push_back(w); });
    return out;
}

LabeledGraph LabeledGraph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw Error(Errc::LoopEdge, "loop at vertex " + std::to_string(u));
    if (has_edge(u, v))
        throw Error(Errc::DuplicateEdge, "edge " + std::to_string(u) + "-" + std::to_string(v) + " already present");
    LabeledGraph g = *this;
    g.set_bit(u, v, true);
    ++g.m_;
    return g;
}

LabeledGraph LabeledGraph::without_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v || !has_edge(u, v))
        throw Error(Errc::MissingEdge, "edge " + std::to_string(u) + "-" + std::to_string(v) + " not present");
    LabeledGraph g = *this;
    g.set_bit(u, v, false);
    --g.m_;
    return g;
}

LabeledGraph LabeledGraph::induced(std::span<const int> vertices) const {
    const int k = static_cast<int>(vertices.size());
    for (int v : vertices) check_vertex(v);
    GraphBuilder b(k);
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (has_edge(vertices[i], vertices[j])) b.add(i + 1, j + 1);
    return b.take();
}

LabeledGraph build_graph(int n, std::span<const std::pair<int, int>> edge_list) {
    LabeledGraph g(n);
    for (auto [a, b] : edge_list) g = g.with_edge(a, b);
    return g;
}

LabeledGraph build_graph(int n, std::initializer_list<std::pair<int, int>> edge_list) {
    return build_graph(n, std::span<const std::pair<int, int>>(edge_list.begin(), edge_list.size()));
}

std::vector<std::vector<int>> components(const LabeledGraph& g) {
    const int n = g.order();
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    std::vector<std::vector<int>> parts;
    std::vector<int> stack;
    for (int s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        std::vector<int> part;
        seen[s] = 1;
        stack.push_back(s);
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            part.push_back(v);
            g.for_each_neighbor(v, [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
            });
        }
        std::sort(part.begin(), part.end());
        parts.push_back(std::move(part));
    }
    return parts;
}

int kappa(const LabeledGraph& g) { return static_cast<int>(components(g).size()); }

std::vector<Edge> bridges(const LabeledGraph& g) {
    const int n = g.order();
    std::vector<int> disc(static_cast<std::size_t>(n) + 1, 0), low(static_cast<std::size_t>(n) + 1, 0);
    std::vector<Edge> out;
    int timer = 0;

    // Iterative lowpoint DFS; the frame keeps the parent so the tree edge
    // back to it is skipped (the graph is simple, so no parallel edges).
    struct Frame {
        int v;
        int parent;
        std::vector<int> nbrs;
        std::size_t next = 0;
    };
    for (int root = 1; root <= n; ++root) {
        if (disc[root] != 0) continue;
        std::vector<Frame> stack;
        disc[root] = low[root] = ++timer;
        stack.push_back({root, 0, g.neighbors(root)});
        while (!stack.empty()) {
            Frame& f = stack.back();
            if (f.next < f.nbrs.size()) {
                const int w = f.nbrs[f.next++];
                if (w == f.parent) continue;
                if (disc[w] != 0) {
                    low[f.v] = std::min(low[f.v], disc[w]);
                } else {
                    disc[w] = low[w] = ++timer;
                    const int parent = f.v;
                    stack.push_back({w, parent, g.neighbors(w)});
                }
            } else {
                const int v = f.v;
                const int parent = f.parent;
                stack.pop_back();
                if (parent != 0) {
                    low[parent] = std::min(low[parent], low[v]);
                    if (low[v] > disc[parent]) out.push_back({std::min(v, parent), std::max(v, parent)});
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int DegreeHistogram::vertices() const {
    int s = 0;
    for (auto [d, c] : counts) s += c;
    return s;
}

int DegreeHistogram::degree_sum() const {
    int s = 0;
    for (auto [d, c] : counts) s += d * c;
    return s;
}

DegreeHistogram degree_histogram(const LabeledGraph& g) {
    DegreeHistogram h;
    for (int v = 1; v <= g.order(); ++v) ++h.counts[g.degree(v)];
    return h;
}

LabeledGraph edgeless_graph(int n) { return LabeledGraph(n); }

LabeledGraph complete_graph(int n) {
    GraphBuilder b(n);
    for (auto e : all_pairs(n)) b.add(e.u, e.v);
    return b.take();
}

LabeledGraph path_graph(int n) {
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add(v, v + 1);
    return b.take();
}

LabeledGraph cycle_graph(int n) {
    if (n < 3) throw Error(Errc::InvalidArgument, "cycle needs at least 3 vertices");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v) b.add(v, v + 1);
    b.add(1, n);
    return b.take();
}

LabeledGraph star_graph(int n) {
    GraphBuilder b(n);
    for (int v = 2; v <= n; ++v) b.add(1, v);
    return b.take();
}

LabeledGraph complete_bipartite_graph(int a, int b) {
    GraphBuilder g(a + b);
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) g.add(i, j);
    return g.take();
}

}  // namespace planarlab

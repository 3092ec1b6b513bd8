#include "planarlab/planarity.hpp"

#include <array>
#include <bit>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace planarlab {

namespace {

using BoostGraph = boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                                         boost::property<boost::vertex_index_t, int>>;

// Vertices of degree <= 1 are deleted and degree-2 vertices are smoothed
// (u-w-v becomes u-v, or just disappears when u-v already exists). Neither
// step changes planarity. Returns the rows of the reduced graph.
struct Kernel {
    std::array<std::uint64_t, 64> adj{};
    std::uint64_t alive = 0;
    int vertices = 0;
    int edges = 0;
};

Kernel reduce(const LabeledGraph& g) {
    Kernel k;
    const int n = g.order();
    for (int v = 1; v <= n; ++v)
        g.for_each_neighbor(v, [&](int w) { k.adj[v - 1] |= std::uint64_t{1} << (w - 1); });
    k.alive = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;

    auto drop = [&](int v) {
        std::uint64_t nb = k.adj[v];
        while (nb) {
            const int w = std::countr_zero(nb);
            nb &= nb - 1;
            k.adj[w] &= ~(std::uint64_t{1} << v);
        }
        k.adj[v] = 0;
        k.alive &= ~(std::uint64_t{1} << v);
    };

    bool changed = true;
    while (changed) {
        changed = false;
        std::uint64_t scan = k.alive;
        while (scan) {
            const int v = std::countr_zero(scan);
            scan &= scan - 1;
            const int d = std::popcount(k.adj[v]);
            if (d > 2) continue;
            if (d == 2) {
                const int a = std::countr_zero(k.adj[v]);
                const int b = std::countr_zero(k.adj[v] & (k.adj[v] - 1));
                drop(v);
                k.adj[a] |= std::uint64_t{1} << b;
                k.adj[b] |= std::uint64_t{1} << a;
            } else {
                drop(v);
            }
            changed = true;
        }
    }
    k.vertices = std::popcount(k.alive);
    for (int v = 0; v < n; ++v) k.edges += std::popcount(k.adj[v]);
    k.edges /= 2;
    return k;
}

bool kernel_planar(const Kernel& k) {
    if (k.vertices <= 4 || k.edges < 9) return true;
    if (k.edges > 3 * k.vertices - 6) return false;
    std::array<int, 64> index{};
    int next = 0;
    for (std::uint64_t s = k.alive; s; s &= s - 1) index[std::countr_zero(s)] = next++;
    BoostGraph bg(static_cast<std::size_t>(k.vertices));
    for (std::uint64_t s = k.alive; s; s &= s - 1) {
        const int v = std::countr_zero(s);
        for (std::uint64_t nb = k.adj[v] & ~((std::uint64_t{2} << v) - 1); nb; nb &= nb - 1)
            boost::add_edge(static_cast<std::size_t>(index[v]), static_cast<std::size_t>(index[std::countr_zero(nb)]), bg);
    }
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace

namespace detail {

bool boyer_myrvold_planar(const LabeledGraph& g) {
    BoostGraph bg(static_cast<std::size_t>(g.order()));
    for (int u = 1; u <= g.order(); ++u)
        g.for_each_neighbor(u, [&](int v) {
            if (v > u) boost::add_edge(static_cast<std::size_t>(u - 1), static_cast<std::size_t>(v - 1), bg);
        });
    return boost::boyer_myrvold_planarity_test(bg);
}

}  // namespace detail

bool is_planar(const LabeledGraph& g) {
    const int n = g.order();
    if (n <= 4) return true;
    if (g.size() > max_planar_edges(n)) return false;
    // A Kuratowski subdivision has at least nine edges (K3,3).
    if (g.size() < 9) return true;
    if (n > 64) return detail::boyer_myrvold_planar(g);
    return kernel_planar(reduce(g));
}

std::vector<Edge> addable_nonedges(const LabeledGraph& g) {
    if (!is_planar(g)) throw Error(Errc::NotPlanarInput, encode(g) + " is not planar");
    std::vector<Edge> out;
    for (const Edge& e : g.non_edges())
        if (is_planar(g.with_edge(e.u, e.v))) out.push_back(e);
    return out;
}

int add_count(const LabeledGraph& g) { return static_cast<int>(addable_nonedges(g).size()); }

}  // namespace planarlab

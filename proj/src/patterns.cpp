#include "planarlab/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <limits>
#include <numeric>

#include "planarlab/planarity.hpp"

namespace planarlab {

const char* to_string(PatternClass c) noexcept {
    switch (c) {
        case PatternClass::Tree: return "Tree";
        case PatternClass::Unicyclic: return "Unicyclic";
        case PatternClass::Multicyclic: return "Multicyclic";
    }
    return "?";
}

namespace {

// Per-vertex refinement key: degree followed by the sorted neighbour degrees.
std::vector<std::vector<int>> vertex_keys(const LabeledGraph& g) {
    std::vector<std::vector<int>> keys(static_cast<std::size_t>(g.order()) + 1);
    for (int v = 1; v <= g.order(); ++v) {
        auto& key = keys[v];
        key.push_back(g.degree(v));
        g.for_each_neighbor(v, [&](int w) { key.push_back(g.degree(w)); });
        std::sort(key.begin() + 1, key.end());
    }
    return keys;
}

// Vertices of g in BFS order per component, each component started at a
// vertex of maximum degree, so most candidates are constrained by an already
// mapped neighbour.
std::vector<int> search_order(const LabeledGraph& g) {
    const int n = g.order();
    std::vector<int> order;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    while (static_cast<int>(order.size()) < n) {
        int start = 0;
        for (int v = 1; v <= n; ++v)
            if (!seen[v] && (start == 0 || g.degree(v) > g.degree(start))) start = v;
        seen[start] = 1;
        std::size_t head = order.size();
        order.push_back(start);
        while (head < order.size()) {
            const int v = order[head++];
            g.for_each_neighbor(v, [&](int w) {
                if (!seen[w]) {
                    seen[w] = 1;
                    order.push_back(w);
                }
            });
        }
    }
    return order;
}

// Counts bijections a -> b preserving adjacency and non-adjacency, stopping
// once `limit` have been found.
std::uint64_t count_isomorphisms(const LabeledGraph& a, const LabeledGraph& b, std::uint64_t limit) {
    const int n = a.order();
    if (n != b.order() || a.size() != b.size()) return 0;
    const auto keys_a = vertex_keys(a);
    const auto keys_b = vertex_keys(b);
    {
        auto sa = std::vector(keys_a.begin() + 1, keys_a.end());
        auto sb = std::vector(keys_b.begin() + 1, keys_b.end());
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) return 0;
    }
    const auto order = search_order(a);
    std::vector<int> image(static_cast<std::size_t>(n) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t found = 0;

    std::function<void(std::size_t)> extend = [&](std::size_t depth) {
        if (found >= limit) return;
        if (depth == order.size()) {
            ++found;
            return;
        }
        const int x = order[depth];
        for (int y = 1; y <= n; ++y) {
            if (used[y] || keys_a[x] != keys_b[y]) continue;
            bool ok = true;
            for (std::size_t i = 0; i < depth && ok; ++i) {
                const int p = order[i];
                ok = a.has_edge(x, p) == b.has_edge(y, image[p]);
            }
            if (!ok) continue;
            used[y] = 1;
            image[x] = y;
            extend(depth + 1);
            used[y] = 0;
        }
    };
    extend(0);
    return found;
}

bool is_connected(const LabeledGraph& g) { return kappa(g) == 1; }

// Condition (a): the increasing bijection 1..k -> W is an isomorphism onto G[W].
bool matches_labeled(const LabeledGraph& g, const LabeledGraph& h, const std::vector<int>& w) {
    const int k = h.order();
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (h.has_edge(i + 1, j + 1) != g.has_edge(w[i], w[j])) return false;
    return true;
}

std::vector<std::vector<int>> appearances_by_subsets(const LabeledGraph& g, const LabeledGraph& h) {
    const int n = g.order();
    const int k = h.order();
    std::vector<std::vector<int>> out;
    std::vector<int> w(static_cast<std::size_t>(k));
    std::vector<char> inside(static_cast<std::size_t>(n) + 1, 0);

    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == k) {
            if (!matches_labeled(g, h, w)) return;
            for (int v : w) inside[v] = 1;
            int leaving = 0;
            bool at_root = true;
            for (int v : w)
                g.for_each_neighbor(v, [&](int x) {
                    if (!inside[x]) {
                        ++leaving;
                        at_root = at_root && v == w.front();
                    }
                });
            for (int v : w) inside[v] = 0;
            if (leaving == 1 && at_root) out.push_back(w);
            return;
        }
        for (int v = start; v <= n - (k - depth - 1); ++v) {
            w[depth] = v;
            rec(v + 1, depth + 1);
        }
    };
    rec(1, 0);
    return out;
}

// An appearance of a connected H has exactly one leaving edge, which is then
// a bridge of G and W is the whole side of it that contains the root. So it
// suffices to look at the two sides of every bridge.
std::vector<std::vector<int>> appearances_by_bridges(const LabeledGraph& g, const LabeledGraph& h) {
    const int n = g.order();
    const int k = h.order();
    std::vector<std::vector<int>> out;
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);

    auto side = [&](int root, int across) {
        std::vector<int> part{root};
        std::fill(seen.begin(), seen.end(), 0);
        seen[root] = 1;
        seen[across] = 1;
        for (std::size_t head = 0; head < part.size() && static_cast<int>(part.size()) <= k; ++head)
            g.for_each_neighbor(part[head], [&](int x) {
                if (!seen[x]) {
                    seen[x] = 1;
                    part.push_back(x);
                }
            });
        return part;
    };

    for (const Edge& e : bridges(g)) {
        for (auto [root, across] : {std::pair{e.u, e.v}, std::pair{e.v, e.u}}) {
            auto w = side(root, across);
            if (static_cast<int>(w.size()) != k) continue;
            std::sort(w.begin(), w.end());
            if (w.front() != root) continue;
            if (matches_labeled(g, h, w)) out.push_back(std::move(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

bool isomorphic(const LabeledGraph& a, const LabeledGraph& b) { return count_isomorphisms(a, b, 1) == 1; }

std::uint64_t automorphism_count(const LabeledGraph& h) {
    return count_isomorphisms(h, h, std::numeric_limits<std::uint64_t>::max());
}

bool is_two_edge_connected(const LabeledGraph& h) { return is_connected(h) && bridges(h).empty(); }

Pattern make_pattern(const LabeledGraph& h, std::string name) {
    if (h.order() > kMaxPatternSize)
        throw Error(Errc::PatternTooLarge, "patterns are limited to " + std::to_string(kMaxPatternSize) + " vertices");
    if (!is_connected(h)) throw Error(Errc::Disconnected, encode(h) + " is not connected");
    if (!is_planar(h)) throw Error(Errc::NotPlanar, encode(h) + " is not planar");
    const int k = h.order();
    const int e = h.size();
    const PatternClass klass = e == k - 1 ? PatternClass::Tree : e == k ? PatternClass::Unicyclic : PatternClass::Multicyclic;
    if (name.empty()) name = encode(h);
    return Pattern(h, klass, automorphism_count(h), std::move(name));
}

Pattern pattern_preset(std::string_view spec) {
    auto sized = [&](std::string_view prefix, int min_k) -> int {
        if (!spec.starts_with(prefix)) return 0;
        auto digits = spec.substr(prefix.size());
        int k = 0;
        auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
        if (digits.empty() || ec != std::errc{} || ptr != digits.data() + digits.size() || k < min_k ||
            k > kMaxPatternSize)
            throw Error(Errc::UnknownPattern, "bad size in pattern '" + std::string(spec) + "'");
        return k;
    };
    const std::string name(spec);
    if (spec == "vertex") return make_pattern(edgeless_graph(1), name);
    if (spec == "edge") return make_pattern(complete_graph(2), name);
    if (spec == "triangle") return make_pattern(complete_graph(3), name);
    if (spec == "k4") return make_pattern(complete_graph(4), name);
    if (spec.find(':') != std::string_view::npos) return make_pattern(decode(spec), name);
    if (int k = sized("path", 1)) return make_pattern(path_graph(k), name);
    if (int k = sized("cycle", 3)) return make_pattern(cycle_graph(k), name);
    if (int k = sized("star", 1)) return make_pattern(star_graph(k), name);
    throw Error(Errc::UnknownPattern, "unknown pattern '" + name + "'");
}

std::vector<std::vector<int>> appearance_sets(const LabeledGraph& g, const Pattern& h, AppearanceAlgorithm algo) {
    if (h.size() >= g.order())
        throw Error(Errc::PatternTooLarge, "appearances need |H| < n (|H| = " + std::to_string(h.size()) +
                                               ", n = " + std::to_string(g.order()) + ")");
    return algo == AppearanceAlgorithm::SubsetScan ? appearances_by_subsets(g, h.graph())
                                                   : appearances_by_bridges(g, h.graph());
}

std::uint64_t count_appearances(const LabeledGraph& g, const Pattern& h, AppearanceAlgorithm algo) {
    return appearance_sets(g, h, algo).size();
}

int count_components_isomorphic(const LabeledGraph& g, const Pattern& h) {
    int count = 0;
    for (const auto& part : components(g)) {
        if (static_cast<int>(part.size()) != h.size()) continue;
        const auto c = g.induced(part);
        if (c.size() == h.edge_count() && isomorphic(c, h.graph())) ++count;
    }
    return count;
}

std::uint64_t count_embeddings(const LabeledGraph& g, const LabeledGraph& h) {
    const int k = h.order();
    const int n = g.order();
    if (k > n) return 0;
    const auto order = search_order(h);
    std::vector<int> position(static_cast<std::size_t>(k) + 1, 0);
    for (int i = 0; i < k; ++i) position[order[i]] = i;
    std::vector<int> h_degree(static_cast<std::size_t>(k) + 1), g_degree(static_cast<std::size_t>(n) + 1);
    for (int x = 1; x <= k; ++x) h_degree[x] = h.degree(x);
    for (int v = 1; v <= n; ++v) g_degree[v] = g.degree(v);

    std::vector<int> image(static_cast<std::size_t>(k) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t total = 0;

    std::function<void(int)> extend = [&](int depth) {
        if (depth == k) {
            ++total;
            return;
        }
        const int x = order[depth];
        std::vector<int> mapped_nbrs;
        h.for_each_neighbor(x, [&](int y) {
            if (position[y] < depth) mapped_nbrs.push_back(y);
        });
        auto consider = [&](int v) {
            if (used[v] || g_degree[v] < h_degree[x]) return;
            for (int y : mapped_nbrs)
                if (!g.has_edge(v, image[y])) return;
            used[v] = 1;
            image[x] = v;
            extend(depth + 1);
            used[v] = 0;
        };
        if (mapped_nbrs.empty()) {
            for (int v = 1; v <= n; ++v) consider(v);
        } else {
            const std::vector<int> candidates = g.neighbors(image[mapped_nbrs.front()]);
            for (int v : candidates) consider(v);
        }
    };
    extend(0);
    return total;
}

std::uint64_t count_copies(const LabeledGraph& g, const Pattern& h) { return count_embeddings(g, h.graph()) / h.aut_count(); }

bool has_copy(const LabeledGraph& g, const Pattern& h) { return count_copies(g, h) > 0; }

int count_good_triangles(const LabeledGraph& g) {
    const int n = g.order();
    std::vector<int> deg(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) deg[v] = g.degree(v);
    int count = 0;
    for (int a = 1; a <= n; ++a)
        g.for_each_neighbor(a, [&](int b) {
            if (b <= a) return;
            g.for_each_neighbor(b, [&](int c) {
                if (c <= b || !g.has_edge(a, c)) return;
                if (deg[a] <= 6 || deg[b] <= 6 || deg[c] <= 6) ++count;
            });
        });
    return count;
}

int count_pendant_edges(const LabeledGraph& g) {
    int count = 0;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 1 || g.degree(e.v) == 1) ++count;
    return count;
}

}  // namespace planarlab

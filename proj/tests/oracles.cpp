#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace planarlab::oracle {

namespace {

// Route each branch pair along a path whose interior avoids branch vertices
// and every interior vertex used so far.
bool route(const LabeledGraph& g, const std::vector<std::pair<int, int>>& pairs, std::size_t i,
           std::vector<char>& blocked) {
    if (i == pairs.size()) return true;
    const auto [a, b] = pairs[i];
    if (g.has_edge(a, b) && route(g, pairs, i + 1, blocked)) return true;

    std::vector<int> interior;
    std::function<bool(int)> extend = [&](int at) -> bool {
        for (int w = 1; w <= g.order(); ++w) {
            if (!g.has_edge(at, w)) continue;
            if (w == b && !interior.empty()) {
                if (route(g, pairs, i + 1, blocked)) return true;
                continue;
            }
            if (blocked[w]) continue;
            blocked[w] = 1;
            interior.push_back(w);
            if (extend(w)) return true;
            interior.pop_back();
            blocked[w] = 0;
        }
        return false;
    };
    return extend(a);
}

bool has_subdivision(const LabeledGraph& g, const std::vector<int>& branch,
                     const std::vector<std::pair<int, int>>& pairs) {
    std::vector<char> blocked(static_cast<std::size_t>(g.order()) + 1, 0);
    for (int v : branch) blocked[v] = 1;
    for (auto [a, b] : pairs)
        if (g.degree(a) < 3 || g.degree(b) < 3) return false;
    return route(g, pairs, 0, blocked);
}

void for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
    std::vector<int> pick(static_cast<std::size_t>(k));
    std::function<bool(int, int)> rec = [&](int start, int depth) -> bool {
        if (depth == k) return f(pick);
        for (int v = start; v <= n; ++v) {
            pick[depth] = v;
            if (rec(v + 1, depth + 1)) return true;
        }
        return false;
    };
    rec(1, 0);
}

}  // namespace

bool kuratowski_planar(const LabeledGraph& g) {
    const int n = g.order();
    bool found = false;
    if (n >= 5) {
        for_each_subset(n, 5, [&](const std::vector<int>& s) {
            std::vector<std::pair<int, int>> pairs;
            for (int i = 0; i < 5; ++i)
                for (int j = i + 1; j < 5; ++j) pairs.emplace_back(s[i], s[j]);
            found = has_subdivision(g, s, pairs);
            return found;
        });
    }
    if (!found && n >= 6) {
        for_each_subset(n, 6, [&](const std::vector<int>& s) {
            // Side A always contains s[0]; choose its two other members.
            for (int x = 1; x < 6 && !found; ++x) {
                for (int y = x + 1; y < 6 && !found; ++y) {
                    std::vector<int> side_a{s[0], s[x], s[y]}, side_b;
                    for (int k = 1; k < 6; ++k)
                        if (k != x && k != y) side_b.push_back(s[k]);
                    std::vector<std::pair<int, int>> pairs;
                    for (int a : side_a)
                        for (int b : side_b) pairs.emplace_back(a, b);
                    found = has_subdivision(g, s, pairs);
                }
            }
            return found;
        });
    }
    return !found;
}

std::uint64_t edge_preserving_injections(const LabeledGraph& g, const LabeledGraph& h) {
    const int k = h.order();
    const int n = g.order();
    if (k > n) return 0;
    std::vector<int> image(static_cast<std::size_t>(k) + 1, 0);
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    const auto h_edges = h.edges();
    std::uint64_t total = 0;
    std::function<void(int)> rec = [&](int x) {
        if (x > k) {
            for (const Edge& e : h_edges)
                if (!g.has_edge(image[e.u], image[e.v])) return;
            ++total;
            return;
        }
        for (int v = 1; v <= n; ++v) {
            if (used[v]) continue;
            used[v] = 1;
            image[x] = v;
            rec(x + 1);
            used[v] = 0;
        }
    };
    rec(1);
    return total;
}

std::uint64_t kuratowski_class_count(int n, int m) {
    const auto pairs = all_pairs(n);
    const int slots = static_cast<int>(pairs.size());
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        if (std::popcount(mask) != m) continue;
        GraphBuilder b(n);
        for (int s = 0; s < slots; ++s)
            if ((mask >> s) & 1U) b.add(pairs[s].u, pairs[s].v);
        if (kuratowski_planar(b.graph())) ++count;
    }
    return count;
}

}  // namespace planarlab::oracle

#include <random>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "planarlab/patterns.hpp"
#include "planarlab/planarity.hpp"

using namespace planarlab;

namespace {

LabeledGraph graph_from_mask(int n, std::uint64_t mask) {
    const auto pairs = all_pairs(n);
    GraphBuilder b(n);
    for (std::size_t s = 0; s < pairs.size(); ++s)
        if ((mask >> s) & 1U) b.add(pairs[s].u, pairs[s].v);
    return b.take();
}

LabeledGraph random_graph(int n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    GraphBuilder b(n);
    for (auto e : all_pairs(n))
        if (coin(rng)) b.add(e.u, e.v);
    return b.take();
}

LabeledGraph relabel(const LabeledGraph& g, const std::vector<int>& perm) {
    GraphBuilder b(g.order());
    for (auto e : g.edges()) b.add(perm[e.u - 1], perm[e.v - 1]);
    return b.take();
}

// The pattern H and host graph drawn in the appearance figure.
LabeledGraph figure_pattern() { return build_graph(4, {{1, 4}, {2, 4}, {3, 4}, {1, 3}}); }
LabeledGraph figure_host() {
    return build_graph(8, {{3, 6}, {2, 3}, {2, 7}, {4, 7}, {1, 8}, {1, 6}, {3, 8}, {5, 7}, {2, 5}});
}

std::vector<Pattern> test_patterns() {
    return {pattern_preset("vertex"), pattern_preset("edge"), pattern_preset("path3"),
            pattern_preset("triangle"), pattern_preset("k4"), make_pattern(figure_pattern(), "fig")};
}

}  // namespace

TEST_CASE("make_pattern classifies and counts automorphisms") {
    auto p4 = make_pattern(path_graph(4));
    CHECK(p4.klass() == PatternClass::Tree);
    CHECK(p4.aut_count() == 2);
    auto tri = make_pattern(complete_graph(3));
    CHECK(tri.klass() == PatternClass::Unicyclic);
    CHECK(tri.aut_count() == 6);
    auto k4 = make_pattern(complete_graph(4));
    CHECK(k4.klass() == PatternClass::Multicyclic);
    CHECK(k4.aut_count() == 24);
    CHECK(k4.name() == "4:FC");

    CHECK_THROWS_AS(make_pattern(edgeless_graph(2)), Error);
    try {
        make_pattern(edgeless_graph(2));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::Disconnected);
    }
    try {
        make_pattern(complete_graph(5));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::NotPlanar);
    }
    try {
        make_pattern(path_graph(17));
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PatternTooLarge);
    }
}

TEST_CASE("presets") {
    CHECK(pattern_preset("vertex").size() == 1);
    CHECK(pattern_preset("edge").graph() == complete_graph(2));
    CHECK(pattern_preset("path3").graph() == path_graph(3));
    CHECK(pattern_preset("cycle5").graph() == cycle_graph(5));
    CHECK(pattern_preset("star4").graph() == star_graph(4));
    CHECK(pattern_preset("star4").aut_count() == 6);
    CHECK(pattern_preset("4:FC").graph() == complete_graph(4));
    for (const char* bad : {"", "hexagon", "path", "path0", "cycle2", "path17", "pathx"}) {
        try {
            pattern_preset(bad);
            FAIL("accepted " << bad);
        } catch (const Error& e) {
            CHECK(e.code() == Errc::UnknownPattern);
        }
    }
}

TEST_CASE("automorphism counts") {
    CHECK(automorphism_count(cycle_graph(4)) == 8);
    CHECK(automorphism_count(complete_graph(2)) == 2);
    CHECK(automorphism_count(complete_graph(4)) == 24);
    CHECK(automorphism_count(cycle_graph(7)) == 14);
    CHECK(automorphism_count(star_graph(6)) == 120);
    CHECK(automorphism_count(edgeless_graph(4)) == 24);
    CHECK(automorphism_count(figure_pattern()) == 2);
}

TEST_CASE("isomorphism") {
    CHECK_FALSE(isomorphic(cycle_graph(4), path_graph(4)));
    CHECK(isomorphic(complete_graph(3), build_graph(3, {{3, 1}, {1, 2}, {3, 2}})));
    CHECK_FALSE(isomorphic(star_graph(4), path_graph(4)));
    // Same degree sequence, different structure: C6 vs two triangles.
    CHECK_FALSE(isomorphic(cycle_graph(6), build_graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}})));
}

TEST_CASE("isomorphism is an equivalence relation on a random pool") {
    std::mt19937_64 rng(99);
    std::vector<LabeledGraph> pool;
    for (int i = 0; i < 40; ++i) {
        auto g = random_graph(6, 0.4, rng);
        std::vector<int> perm{1, 2, 3, 4, 5, 6};
        std::shuffle(perm.begin(), perm.end(), rng);
        pool.push_back(g);
        pool.push_back(relabel(g, perm));
    }
    for (std::size_t i = 0; i < pool.size(); i += 2) CHECK(isomorphic(pool[i], pool[i + 1]));
    for (const auto& a : pool) {
        CHECK(isomorphic(a, a));
        for (const auto& b : pool) {
            const bool ab = isomorphic(a, b);
            CHECK(ab == isomorphic(b, a));
            if (!ab) continue;
            for (const auto& c : pool)
                if (isomorphic(b, c)) CHECK(isomorphic(a, c));
        }
    }
}

TEST_CASE("appearance counting examples") {
    auto star = star_graph(4);
    CHECK(count_appearances(star, pattern_preset("vertex")) == 3);

    // On the path 1-2-3-4 only W = {3,4} is an appearance of an edge; for
    // W = {1,2} the leaving edge 2-3 misses the root 1.
    auto p4 = path_graph(4);
    auto edge = pattern_preset("edge");
    CHECK(appearance_sets(p4, edge, AppearanceAlgorithm::SubsetScan) == std::vector<std::vector<int>>{{3, 4}});
    CHECK(appearance_sets(p4, edge, AppearanceAlgorithm::BridgeDriven) == std::vector<std::vector<int>>{{3, 4}});

    auto fig = make_pattern(figure_pattern());
    CHECK(appearance_sets(figure_host(), fig) == std::vector<std::vector<int>>{{2, 4, 5, 7}});
    CHECK(count_appearances(figure_host(), fig, AppearanceAlgorithm::SubsetScan) == 1);

    // The labelled condition is stricter than isomorphism: relabelling the
    // pattern so that the pendant vertex becomes 1 kills the appearance.
    auto relabelled = make_pattern(relabel(figure_pattern(), {2, 1, 3, 4}));
    CHECK(isomorphic(relabelled.graph(), fig.graph()));
    CHECK(count_appearances(figure_host(), relabelled) == 0);

    try {
        count_appearances(complete_graph(4), pattern_preset("k4"));
        FAIL("expected PatternTooLarge");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::PatternTooLarge);
    }
}

TEST_CASE("subset and bridge appearance algorithms agree on all graphs with n <= 6") {
    const auto patterns = test_patterns();
    for (int n = 2; n <= 6; ++n) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pair_count(n)); ++mask) {
            auto g = graph_from_mask(n, mask);
            for (const auto& h : patterns) {
                if (h.size() >= n) continue;
                REQUIRE(appearance_sets(g, h, AppearanceAlgorithm::SubsetScan) ==
                        appearance_sets(g, h, AppearanceAlgorithm::BridgeDriven));
            }
        }
    }
}

TEST_CASE("subset and bridge appearance algorithms agree on random graphs up to n = 30") {
    const auto patterns = test_patterns();
    std::mt19937_64 rng(17);
    std::uint64_t nonzero = 0;
    for (int trial = 0; trial < 1500; ++trial) {
        const int n = 7 + static_cast<int>(rng() % 24);
        auto g = random_graph(n, 1.3 / n, rng);
        for (const auto& h : patterns) {
            const auto a = appearance_sets(g, h, AppearanceAlgorithm::SubsetScan);
            REQUIRE(a == appearance_sets(g, h, AppearanceAlgorithm::BridgeDriven));
            nonzero += a.empty() ? 0 : 1;
        }
    }
    CHECK(nonzero > 100);
}

TEST_CASE("appearances of 2-edge-connected patterns are vertex-disjoint") {
    std::mt19937_64 rng(23);
    const std::vector<Pattern> cyclic{pattern_preset("triangle"), pattern_preset("k4"), pattern_preset("cycle4")};
    for (const auto& h : cyclic) REQUIRE(is_two_edge_connected(h.graph()));
    for (int trial = 0; trial < 2000; ++trial) {
        // A random core with pendant triangles and K4s hung off it.
        const int core = 3 + static_cast<int>(rng() % 12);
        const int triangles = static_cast<int>(rng() % 3);
        const int k4s = static_cast<int>(rng() % 3);
        const int n = core + 3 * triangles + 4 * k4s;
        GraphBuilder b(n);
        std::bernoulli_distribution coin(1.6 / core);
        for (int u = 1; u <= core; ++u)
            for (int v = u + 1; v <= core; ++v)
                if (coin(rng)) b.add(u, v);
        int next = core + 1;
        for (int t = 0; t < triangles + k4s; ++t) {
            const int k = t < triangles ? 3 : 4;
            for (int i = 0; i < k; ++i)
                for (int j = i + 1; j < k; ++j) b.add(next + i, next + j);
            b.add(1 + static_cast<int>(rng() % core), next);
            next += k;
        }
        auto g = b.take();
        for (const auto& h : cyclic) {
            if (h.size() >= n) continue;
            std::set<int> used;
            for (const auto& w : appearance_sets(g, h))
                for (int v : w) CHECK(used.insert(v).second);
        }
    }
    CHECK_FALSE(is_two_edge_connected(path_graph(3)));
}

TEST_CASE("component isomorphism counts") {
    auto two_triangles = build_graph(6, {{1, 2}, {2, 3}, {1, 3}, {4, 5}, {5, 6}, {4, 6}});
    CHECK(count_components_isomorphic(two_triangles, pattern_preset("triangle")) == 2);
    CHECK(count_components_isomorphic(complete_graph(4), pattern_preset("triangle")) == 0);
    CHECK(count_components_isomorphic(edgeless_graph(3), pattern_preset("vertex")) == 3);
    CHECK(count_components_isomorphic(build_graph(5, {{1, 5}, {2, 3}}), pattern_preset("edge")) == 2);
}

TEST_CASE("component census adds up to n") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 14);
        auto g = random_graph(n, 1.2 / n, rng);
        if (!is_planar(g)) continue;
        std::vector<LabeledGraph> reps;
        for (const auto& part : components(g)) {
            auto c = g.induced(part);
            bool seen = false;
            for (const auto& r : reps) seen = seen || isomorphic(r, c);
            if (!seen) reps.push_back(c);
        }
        int covered = 0;
        for (const auto& r : reps) {
            auto h = make_pattern(r);
            const int comps = count_components_isomorphic(g, h);
            covered += comps * h.size();
            CHECK(comps <= static_cast<int>(count_copies(g, h)));
        }
        CHECK(covered == n);
    }
}

TEST_CASE("copy counting") {
    CHECK(count_copies(complete_graph(4), pattern_preset("triangle")) == 4);
    CHECK(count_copies(cycle_graph(4), pattern_preset("triangle")) == 0);
    CHECK_FALSE(has_copy(cycle_graph(4), pattern_preset("triangle")));
    CHECK(oracle::edge_preserving_injections(complete_graph(4), path_graph(3)) == 24);
    CHECK(count_copies(complete_graph(4), pattern_preset("path3")) == 12);
    CHECK(count_copies(cycle_graph(5), pattern_preset("cycle5")) == 1);
    CHECK(count_copies(complete_graph(4), pattern_preset("cycle4")) == 3);
}

TEST_CASE("copy count times automorphisms equals injection count for n <= 6") {
    const std::vector<Pattern> patterns{pattern_preset("triangle"), pattern_preset("path3"), pattern_preset("k4"),
                                        pattern_preset("star4")};
    std::mt19937_64 rng(41);
    for (int n = 3; n <= 6; ++n) {
        for (int trial = 0; trial < 400; ++trial) {
            auto g = graph_from_mask(n, rng() & ((std::uint64_t{1} << pair_count(n)) - 1));
            for (const auto& h : patterns) {
                const auto inj = oracle::edge_preserving_injections(g, h.graph());
                CHECK(count_embeddings(g, h.graph()) == inj);
                CHECK(count_copies(g, h) * h.aut_count() == inj);
            }
        }
    }
}

TEST_CASE("good triangles") {
    CHECK(count_good_triangles(complete_graph(4)) == 4);
    CHECK(count_good_triangles(cycle_graph(5)) == 0);

    // Wheel with hub 1 and rim 2..8.
    GraphBuilder b(8);
    for (int v = 2; v <= 8; ++v) b.add(1, v);
    for (int v = 2; v < 8; ++v) b.add(v, v + 1);
    b.add(2, 8);
    auto wheel = b.take();
    int brute = 0;
    for (int x = 1; x <= 8; ++x)
        for (int y = x + 1; y <= 8; ++y)
            for (int z = y + 1; z <= 8; ++z)
                if (wheel.has_edge(x, y) && wheel.has_edge(y, z) && wheel.has_edge(x, z) &&
                    std::min({wheel.degree(x), wheel.degree(y), wheel.degree(z)}) <= 6)
                    ++brute;
    CHECK(brute == 7);
    CHECK(count_good_triangles(wheel) == 7);

    // Triangles whose vertices all have degree 7 are not good: K8 has none.
    CHECK(count_good_triangles(complete_graph(8)) == 0);
    CHECK(count_good_triangles(complete_graph(7)) == 35);
}

TEST_CASE("pendant edges") {
    CHECK(count_pendant_edges(star_graph(5)) == 4);
    CHECK(count_pendant_edges(complete_graph(2)) == 1);
    CHECK(count_pendant_edges(path_graph(5)) == 2);
    CHECK(count_pendant_edges(complete_graph(4)) == 0);
}

#include <set>

#include "doctest.h"
#include "planarlab/planarity.hpp"
#include "planarlab/sampler.hpp"

using namespace planarlab;

namespace {

Errc error_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an error");
    return Errc::InvalidArgument;
}

}  // namespace

TEST_CASE("Rng is deterministic and bounded draws stay in range") {
    Rng a(42), b(42), c(43);
    for (int i = 0; i < 100; ++i) {
        const auto x = a.next();
        CHECK(x == b.next());
    }
    CHECK(Rng(42).next() != c.next());
    Rng r(5);
    std::vector<int> hist(7, 0);
    for (int i = 0; i < 70000; ++i) ++hist[r.below(7)];
    for (int h : hist) CHECK(std::abs(h - 10000) < 500);
    CHECK(derive_seed(1, 0) != derive_seed(1, 1));
    CHECK(derive_seed(1, 0) == derive_seed(1, 0));
}

TEST_CASE("exact_sample") {
    auto census = build_census(4, {3, 6}, true);
    census.put(census_record(5, 10, true));
    CHECK(exact_sample(4, 6, 1, census) == complete_graph(4));
    CHECK(exact_sample(4, 6, 999, census) == complete_graph(4));
    CHECK(error_of([&] { exact_sample(5, 10, 1, census); }) == Errc::EmptyClass);
    CHECK(error_of([&] { exact_sample(4, 4, 1, census); }) == Errc::CensusMissing);
    CensusStore counts_only;
    counts_only.put(census_record(4, 3, false));
    CHECK(error_of([&] { exact_sample(4, 3, 1, counts_only); }) == Errc::CensusMissing);
}

TEST_CASE("exact sampler is uniform on P(4,3)") {
    auto census = build_census(4, {3}, true);
    SamplerParams p;
    p.method = SampleMethod::Exact;
    p.count = 20000;
    p.seed = 7;
    p.census = &census;
    const auto batch = sample_many(4, 3, p);
    const auto fit = chi_square_uniformity(batch, census);
    CHECK(fit.degrees_of_freedom == 19);
    CHECK(fit.p_value > 0.001);
    CHECK(tv_distance_to_uniform(batch, census) < 0.03);
}

TEST_CASE("mcmc_init") {
    CHECK(mcmc_init(4, 6) == complete_graph(4));
    CHECK(mcmc_init(7, 0) == edgeless_graph(7));
    CHECK(mcmc_init(5, 4) == star_graph(5));
    CHECK(mcmc_init(1, 0) == edgeless_graph(1));
    CHECK(mcmc_init(2, 1) == complete_graph(2));
    for (int n = 3; n <= 12; ++n) {
        const auto full = mcmc_init(n, 3 * n - 6);
        CHECK(full.size() == 3 * n - 6);
        CHECK(is_planar(full));
    }
    CHECK(error_of([] { mcmc_init(5, 10); }) == Errc::EmptyClassBound);
    CHECK(error_of([] { mcmc_init(2, 2); }) == Errc::EmptyClassBound);
}

TEST_CASE("mcmc_step on single-state chains is a no-op") {
    ChainState empty(edgeless_graph(5), 1);
    auto after = mcmc_step(empty);
    CHECK(after.current() == empty.current());
    CHECK(after.steps_taken() == 1);

    ChainState full(complete_graph(3), 1);
    for (int i = 0; i < 10; ++i) full.step();
    CHECK(full.current() == complete_graph(3));
    CHECK(full.steps_taken() == 10);
    CHECK(full.accepted() == 0);
}

TEST_CASE("the chain stays inside P(n,m)") {
    for (auto [n, m] : {std::pair{8, 14}, std::pair{10, 24}, std::pair{12, 12}, std::pair{9, 21}}) {
        ChainState chain(mcmc_init(n, m), 3);
        for (int i = 0; i < 5000; ++i) {
            chain.step();
            REQUIRE(chain.current().size() == m);
            REQUIRE(chain.current().order() == n);
            REQUIRE(is_planar(chain.current()));
        }
        CHECK(chain.accepted() > 0);
    }
}

TEST_CASE("swap proposals are symmetric") {
    const auto g = build_census(5, {5}, true);
    const auto& graphs = *g.find(5, 5)->graphs;
    int pairs = 0;
    for (std::size_t i = 0; i < graphs.size(); i += 7) {
        const auto a = decode(graphs[i]);
        for (const auto& e : a.edges())
            for (const auto& f : a.non_edges()) {
                const auto b = a.without_edge(e.u, e.v).with_edge(f.u, f.v);
                const double forward = proposal_probability(a, b);
                CHECK(forward == doctest::Approx(1.0 / (5.0 * 5.0)));
                CHECK(forward == proposal_probability(b, a));
                ++pairs;
            }
    }
    CHECK(pairs > 0);
    CHECK(proposal_probability(path_graph(4), path_graph(4)) == 0.0);
    CHECK(proposal_probability(cycle_graph(5), build_graph(5, {{1, 3}, {3, 5}, {5, 2}, {2, 4}, {4, 1}})) == 0.0);
}

TEST_CASE("mcmc long run is close to uniform on P(4,3)") {
    auto census = build_census(4, {3}, true);
    SamplerParams p;
    p.method = SampleMethod::Mcmc;
    p.count = 20000;
    p.burn_in = 1000;
    p.thinning = 25;
    p.seed = 11;
    const auto batch = sample_many(4, 3, p);
    CHECK(batch.diagnostic());
    CHECK(chi_square_uniformity(batch, census).p_value > 0.001);
    CHECK(tv_distance_to_uniform(batch, census) < 0.03);
}

TEST_CASE("sample_many") {
    SamplerParams exact;
    exact.method = SampleMethod::Exact;
    exact.count = 10;
    exact.seed = 3;
    const auto k4s = sample_many(4, 6, exact);
    CHECK(k4s.samples == std::vector<std::string>(10, "4:FC"));
    CHECK_FALSE(k4s.diagnostic());

    SamplerParams mcmc;
    mcmc.method = SampleMethod::Mcmc;
    mcmc.count = 1000;
    mcmc.burn_in = 10000;
    mcmc.thinning = 50;
    mcmc.seed = 1;
    const auto batch = sample_many(5, 5, mcmc);
    CHECK(batch.samples.size() == 1000);
    for (const auto& s : batch.samples) {
        const auto g = decode(s);
        CHECK(g.order() == 5);
        CHECK(g.size() == 5);
        CHECK(is_planar(g));
    }
    CHECK(sample_many(5, 5, mcmc) == batch);
    CHECK(sample_many(5, 5, exact) == sample_many(5, 5, exact));
    mcmc.seed = 2;
    CHECK(sample_many(5, 5, mcmc).samples != batch.samples);

    SamplerParams defaults;
    defaults.method = SampleMethod::Mcmc;
    defaults.count = 2;
    const auto d = sample_many(6, 7, defaults);
    CHECK(d.burn_in == 50 * 6 * 7);
    CHECK(d.thinning == 6 * 7);
    CHECK(sample_many(6, 0, defaults).thinning == 1);

    exact.count = 1;
    CHECK(error_of([&] { sample_many(5, 10, exact); }) == Errc::EmptyClass);
}

TEST_CASE("tv distance") {
    auto census = build_census(4, {3, 6}, true);
    SampleBatch single{4, 6, SampleMethod::Exact, 0, 0, 0, {"4:FC", "4:FC"}};
    CHECK(tv_distance_to_uniform(single, census) == 0.0);

    const auto& graphs = *census.find(4, 3)->graphs;
    SampleBatch stuck{4, 3, SampleMethod::Mcmc, 0, 0, 0, std::vector<std::string>(50, graphs[4])};
    CHECK(tv_distance_to_uniform(stuck, census) == doctest::Approx(0.95));

    SampleBatch even{4, 3, SampleMethod::Exact, 0, 0, 0, graphs};
    CHECK(tv_distance_to_uniform(even, census) == doctest::Approx(0.0));

    CHECK(error_of([&] { tv_distance_to_uniform(stuck, CensusStore{}); }) == Errc::CensusMissing);
}

TEST_CASE("the swap chain reaches every member of P(n,m) for n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        const int max_m = static_cast<int>(max_planar_edges(n));
        for (int m = 0; m <= max_m; ++m) {
            const auto census = build_census(n, {m}, true);
            const auto& graphs = *census.find(n, m)->graphs;
            std::set<std::string> seen{encode(mcmc_init(n, m))};
            ChainState chain(mcmc_init(n, m), derive_seed(99, static_cast<std::uint64_t>(n * 100 + m)));
            for (std::uint64_t step = 0; step < 4'000'000 && seen.size() < graphs.size(); ++step) {
                chain.step();
                seen.insert(encode(chain.current()));
            }
            CHECK_MESSAGE(seen.size() == graphs.size(), "n=" << n << " m=" << m);
        }
    }
}

#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "planarlab/census.hpp"
#include "planarlab/graph.hpp"

namespace planarlab {

// SplitMix64 finaliser; used to turn user seeds into generator seeds and to
// derive independent per-stream seeds.
std::uint64_t splitmix64(std::uint64_t x) noexcept;
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept;

// std::mt19937_64 seeded with splitmix64(seed). Bounded draws use rejection
// on the raw 64-bit output, so trajectories do not depend on the standard
// library's distribution implementations.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    std::uint64_t next() { return engine_(); }
    std::uint64_t below(std::uint64_t bound);

    friend bool operator==(const Rng&, const Rng&) = default;

private:
    std::mt19937_64 engine_;
};

// Uniform draw from a stored census record. Throws CensusMissing when the
// record or its graph list is absent, EmptyClass when the class is empty.
LabeledGraph exact_sample(int n, int m, Rng& rng, const CensusStore& census);
LabeledGraph exact_sample(int n, int m, std::uint64_t seed, const CensusStore& census);

// Edges of the triangulation where vertices 1 and 2 are joined to everything
// and 3-4-...-n is a path, in lexicographic order.
std::vector<Edge> fan_triangulation_edges(int n);

// First m edges of fan_triangulation_edges(n). Throws EmptyClassBound when
// m exceeds the planar maximum.
LabeledGraph mcmc_init(int n, int m);

// Edge-swap Metropolis chain on P(n,m): pick a uniform edge and a uniform
// non-edge, swap them if the result is planar, otherwise stay. Every step
// counts, accepted or not.
class ChainState {
public:
    ChainState(const LabeledGraph& start, std::uint64_t seed);

    const LabeledGraph& current() const noexcept { return graph_; }
    std::uint64_t steps_taken() const noexcept { return steps_; }
    std::uint64_t accepted() const noexcept { return accepted_; }

    void step();

    friend bool operator==(const ChainState&, const ChainState&) = default;

private:
    LabeledGraph graph_;
    std::vector<Edge> edges_;
    std::vector<Edge> non_edges_;
    Rng rng_;
    std::uint64_t steps_ = 0;
    std::uint64_t accepted_ = 0;
};

ChainState mcmc_step(ChainState state);

// Probability that one proposal of the chain at `from` is the swap leading to
// `to`; zero unless they differ by exactly one swap.
double proposal_probability(const LabeledGraph& from, const LabeledGraph& to);

enum class SampleMethod { Exact, Mcmc };

const char* to_string(SampleMethod m) noexcept;
SampleMethod parse_sample_method(const std::string& s);

std::uint64_t default_burn_in(int n, int m);
std::uint64_t default_thinning(int n, int m);

struct SamplerParams {
    SampleMethod method = SampleMethod::Exact;
    std::size_t count = 0;
    std::optional<std::uint64_t> burn_in;   // mcmc only; default 50·n·m
    std::optional<std::uint64_t> thinning;  // mcmc only; default n·m (at least 1)
    std::uint64_t seed = 1;
    // Exact sampling uses this census when it holds the record; otherwise
    // the class is enumerated on the spot.
    const CensusStore* census = nullptr;
};

struct SampleBatch {
    int n = 0;
    int m = 0;
    SampleMethod method = SampleMethod::Exact;
    std::uint64_t seed = 0;
    std::uint64_t burn_in = 0;
    std::uint64_t thinning = 0;
    std::vector<std::string> samples;

    // MCMC output is not known to be exactly uniform.
    bool diagnostic() const noexcept { return method == SampleMethod::Mcmc; }

    friend bool operator==(const SampleBatch&, const SampleBatch&) = default;
};

SampleBatch sample_many(int n, int m, const SamplerParams& params);

// (1/2) Σ_G |empirical(G) − 1/|P(n,m)|| over the census class (plus any
// sampled graphs outside it).
double tv_distance_to_uniform(const SampleBatch& batch, const CensusStore& census);

struct ChiSquareResult {
    double statistic = 0;
    int degrees_of_freedom = 0;
    double p_value = 1;
};

// Pearson goodness-of-fit of the batch against the uniform law on the class.
ChiSquareResult chi_square_uniformity(const SampleBatch& batch, const CensusStore& census);

}  // namespace planarlab

#include "planarlab/sampler.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>
#include <map>

#include <boost/math/distributions/chi_squared.hpp>

#include "planarlab/planarity.hpp"

namespace planarlab {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    return splitmix64(seed ^ splitmix64(stream + 0x632BE59BD9B4E019ULL));
}

std::uint64_t Rng::below(std::uint64_t bound) {
    if (bound == 0) throw Error(Errc::InvalidArgument, "empty range");
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % bound;
}

namespace {

const CensusRecord& stored_record(int n, int m, const CensusStore& census) {
    const CensusRecord* r = census.find(n, m);
    if (r == nullptr)
        throw Error(Errc::CensusMissing, "no census record for (" + std::to_string(n) + "," + std::to_string(m) + ")");
    if (!r->graphs)
        throw Error(Errc::CensusMissing,
                    "census record (" + std::to_string(n) + "," + std::to_string(m) + ") has no stored graphs");
    return *r;
}

}  // namespace

LabeledGraph exact_sample(int n, int m, Rng& rng, const CensusStore& census) {
    const auto& r = stored_record(n, m, census);
    if (r.graphs->empty())
        throw Error(Errc::EmptyClass, "P(" + std::to_string(n) + "," + std::to_string(m) + ") is empty");
    return decode((*r.graphs)[rng.below(r.graphs->size())]);
}

LabeledGraph exact_sample(int n, int m, std::uint64_t seed, const CensusStore& census) {
    Rng rng(seed);
    return exact_sample(n, m, rng, census);
}

std::vector<Edge> fan_triangulation_edges(int n) {
    std::vector<Edge> out;
    for (int v = 2; v <= n; ++v) out.push_back({1, v});
    for (int v = 3; v <= n; ++v) out.push_back({2, v});
    for (int v = 3; v < n; ++v) out.push_back({v, v + 1});
    return out;
}

LabeledGraph mcmc_init(int n, int m) {
    if (n < 1) throw Error(Errc::InvalidVertexCount, "vertex count must be positive");
    if (m < 0 || m > max_planar_edges(n))
        throw Error(Errc::EmptyClassBound, "no planar graph on " + std::to_string(n) + " vertices has " +
                                               std::to_string(m) + " edges");
    const auto edges = fan_triangulation_edges(n);
    GraphBuilder b(n);
    for (int i = 0; i < m; ++i) b.add(edges[static_cast<std::size_t>(i)].u, edges[static_cast<std::size_t>(i)].v);
    return b.take();
}

ChainState::ChainState(const LabeledGraph& start, std::uint64_t seed)
    : graph_(start), edges_(start.edges()), non_edges_(start.non_edges()), rng_(seed) {
    if (!is_planar(start)) throw Error(Errc::NotPlanarInput, encode(start) + " is not planar");
}

void ChainState::step() {
    ++steps_;
    if (edges_.empty() || non_edges_.empty()) return;
    const auto i = rng_.below(edges_.size());
    const auto j = rng_.below(non_edges_.size());
    const Edge out = edges_[i];
    const Edge in = non_edges_[j];
    auto proposal = graph_.without_edge(out.u, out.v).with_edge(in.u, in.v);
    if (!is_planar(proposal)) return;
    graph_ = std::move(proposal);
    edges_[i] = in;
    non_edges_[j] = out;
    ++accepted_;
    assert(is_planar(graph_) && graph_.size() == static_cast<int>(edges_.size()));
}

ChainState mcmc_step(ChainState state) {
    state.step();
    return state;
}

double proposal_probability(const LabeledGraph& from, const LabeledGraph& to) {
    if (from.order() != to.order() || from.size() != to.size()) return 0.0;
    int removed = 0;
    int added = 0;
    for (const Edge& e : from.edges()) removed += to.has_edge(e.u, e.v) ? 0 : 1;
    for (const Edge& e : to.edges()) added += from.has_edge(e.u, e.v) ? 0 : 1;
    if (removed != 1 || added != 1) return 0.0;
    const double m = from.size();
    const double free_pairs = static_cast<double>(pair_count(from.order())) - m;
    return 1.0 / (m * free_pairs);
}

const char* to_string(SampleMethod m) noexcept { return m == SampleMethod::Exact ? "exact" : "mcmc"; }

SampleMethod parse_sample_method(const std::string& s) {
    if (s == "exact") return SampleMethod::Exact;
    if (s == "mcmc") return SampleMethod::Mcmc;
    throw Error(Errc::InvalidArgument, "unknown sampling method '" + s + "'");
}

std::uint64_t default_burn_in(int n, int m) { return 50ULL * static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m); }

std::uint64_t default_thinning(int n, int m) {
    return std::max<std::uint64_t>(1, static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(m));
}

SampleBatch sample_many(int n, int m, const SamplerParams& params) {
    SampleBatch batch{n, m, params.method, params.seed, 0, 0, {}};
    batch.samples.reserve(params.count);
    if (params.method == SampleMethod::Exact) {
        CensusStore local;
        const CensusStore* census = params.census;
        if (census == nullptr || census->find(n, m) == nullptr || !census->find(n, m)->graphs) {
            local.put(census_record(n, m, true));
            census = &local;
        }
        const auto& graphs = *stored_record(n, m, *census).graphs;
        if (graphs.empty()) throw Error(Errc::EmptyClass, "P(" + std::to_string(n) + "," + std::to_string(m) + ") is empty");
        Rng rng(params.seed);
        for (std::size_t i = 0; i < params.count; ++i) batch.samples.push_back(graphs[rng.below(graphs.size())]);
        return batch;
    }

    batch.burn_in = params.burn_in.value_or(default_burn_in(n, m));
    batch.thinning = std::max<std::uint64_t>(1, params.thinning.value_or(default_thinning(n, m)));
    ChainState chain(mcmc_init(n, m), params.seed);
    for (std::uint64_t s = 0; s < batch.burn_in; ++s) chain.step();
    for (std::size_t i = 0; i < params.count; ++i) {
        for (std::uint64_t s = 0; s < batch.thinning; ++s) chain.step();
        batch.samples.push_back(encode(chain.current()));
    }
    return batch;
}

namespace {

std::map<std::string, std::uint64_t> tally(const SampleBatch& batch) {
    std::map<std::string, std::uint64_t> counts;
    for (const auto& s : batch.samples) ++counts[s];
    return counts;
}

}  // namespace

double tv_distance_to_uniform(const SampleBatch& batch, const CensusStore& census) {
    const auto& graphs = *stored_record(batch.n, batch.m, census).graphs;
    if (graphs.empty() || batch.samples.empty()) throw Error(Errc::EmptyClass, "nothing to compare");
    auto counts = tally(batch);
    const double k = static_cast<double>(batch.samples.size());
    const double uniform = 1.0 / static_cast<double>(graphs.size());
    double sum = 0.0;
    for (const auto& g : graphs) {
        auto it = counts.find(g);
        const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second) / k;
        sum += std::abs(observed - uniform);
        if (it != counts.end()) counts.erase(it);
    }
    for (const auto& [g, c] : counts) sum += static_cast<double>(c) / k;
    return 0.5 * sum;
}

ChiSquareResult chi_square_uniformity(const SampleBatch& batch, const CensusStore& census) {
    const auto& graphs = *stored_record(batch.n, batch.m, census).graphs;
    if (graphs.empty() || batch.samples.empty()) throw Error(Errc::EmptyClass, "nothing to compare");
    auto counts = tally(batch);
    const double expected = static_cast<double>(batch.samples.size()) / static_cast<double>(graphs.size());
    ChiSquareResult r;
    std::uint64_t matched = 0;
    for (const auto& g : graphs) {
        auto it = counts.find(g);
        const double observed = it == counts.end() ? 0.0 : static_cast<double>(it->second);
        matched += it == counts.end() ? 0 : it->second;
        r.statistic += (observed - expected) * (observed - expected) / expected;
    }
    r.degrees_of_freedom = static_cast<int>(graphs.size()) - 1;
    if (matched != batch.samples.size()) {
        // Samples outside the class: the fit is rejected outright.
        r.statistic = std::numeric_limits<double>::infinity();
        r.p_value = 0.0;
        return r;
    }
    if (r.degrees_of_freedom == 0) return r;
    boost::math::chi_squared dist(r.degrees_of_freedom);
    r.p_value = boost::math::cdf(boost::math::complement(dist, r.statistic));
    return r;
}

}  // namespace planarlab

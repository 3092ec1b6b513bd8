#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "planarlab/census.hpp"
#include "planarlab/patterns.hpp"
#include "planarlab/sampler.hpp"
#include "planarlab/verify.hpp"

namespace planarlab {

namespace event {
struct Connected {};
struct HasComponentIso {
    Pattern h;
};
struct HasCopy {
    Pattern h;
};
struct HasIsolatedVertex {};
struct MinPendantEdges {
    int t;
};
struct MinAppearances {
    Pattern h;
    int t;
};
struct MinComponentsIso {
    Pattern h;
    int t;
};
}  // namespace event

using EventKind = std::variant<event::Connected, event::HasComponentIso, event::HasCopy, event::HasIsolatedVertex,
                               event::MinPendantEdges, event::MinAppearances, event::MinComponentsIso>;

// Accepts the forms produced by describe(), e.g. "Connected",
// "HasCopy(k4)", "MinPendantEdges(3)", and "MinAppearances(triangle,2)" or
// "MinAppearances(triangle>=2)". Patterns go through pattern_preset.
EventKind parse_event(const std::string& text);

// Splits a comma-separated list, ignoring commas inside parentheses.
std::vector<EventKind> parse_event_list(const std::string& text);

// Comma-free description, e.g. "MinAppearances(triangle>=2)".
std::string describe(const EventKind& ev);

bool evaluate_event(const LabeledGraph& g, const EventKind& ev);

struct ExactProbability {
    BigInt hits = 0;
    BigInt total = 0;
    Rational value;
    double approx() const;
};

// |{G in P(n,m) : ev(G)}| / |P(n,m)|. Uses stored census graphs when
// available, otherwise enumerates. Throws EmptyClass.
ExactProbability exact_probability(int n, int m, const EventKind& ev, const CensusStore* census = nullptr,
                                   const EnumerateOptions& opts = {});

// Several events in one pass over the class.
std::vector<ExactProbability> exact_probabilities(int n, int m, const std::vector<EventKind>& events,
                                                  const CensusStore* census = nullptr,
                                                  const EnumerateOptions& opts = {});

struct Estimate {
    double p = 0;
    double stderr_ = 0;
    std::size_t k = 0;
    bool diagnostic = false;
};

// Frequency of ev over a sample batch, with binomial standard error.
Estimate estimate_from_batch(const SampleBatch& batch, const EventKind& ev);
Estimate estimate_probability(int n, int m, const EventKind& ev, const SamplerParams& params);

enum class RegimeLabel { Sparse, Critical, Middle, Saturated };

const char* to_string(RegimeLabel r) noexcept;

struct RegimeThresholds {
    Rational delta{1, 20};
    Rational gamma{1, 20};
};

struct DensityRegime {
    RegimeLabel label = RegimeLabel::Sparse;
    Rational ratio;
};

// Tested in order: Sparse (m/n < 1-δ), Critical (|m/n - 1| <= δ),
// Saturated (m >= 3n-6-γn), otherwise Middle.
DensityRegime regime_of(int n, int m, const RegimeThresholds& t = {});

struct ExperimentSpec {
    std::vector<std::pair<int, int>> grid;
    std::vector<EventKind> events;
    SampleMethod method = SampleMethod::Exact;  // Exact: probabilities over the whole class
    std::size_t k = 1000;                       // samples per (n,m) for mcmc
    std::uint64_t seed = 1;
    std::optional<std::uint64_t> burn_in;
    std::optional<std::uint64_t> thinning;
    RegimeThresholds thresholds;
    EnumerateOptions enumerate;
    const CensusStore* census = nullptr;
};

// Every (n,m) with n in ns and m in ms; an empty ms means m = 0..max planar.
std::vector<std::pair<int, int>> make_grid(const std::vector<int>& ns, const std::vector<int>& ms);

struct PhaseRow {
    int n = 0;
    int m = 0;
    DensityRegime regime;
    std::string event;
    double prob = 0;
    double stderr_ = 0;
    std::optional<Rational> exact;
    std::string method;
    std::uint64_t k = 0;
    std::optional<std::uint64_t> seed;
};

struct ExperimentResult {
    std::vector<PhaseRow> rows;
};

// One row per (n, m, event) in grid order. Mcmc rows draw one batch per
// (n,m) with seed derive_seed(spec.seed, grid index) and are marked
// "mcmc(diagnostic)".
ExperimentResult phase_table(const ExperimentSpec& spec);

// Columns n,m,ratio,regime,event,prob,stderr,method,k,seed.
std::string phase_table_csv(const ExperimentResult& result);

struct GraphStatistics {
    std::string graph;
    int n = 0;
    int m = 0;
    std::optional<std::string> pattern;
    std::optional<std::uint64_t> f_h;
    int pendant_edges = 0;
    std::optional<int> add_count;  // absent when G is not planar
    int kappa = 0;
    std::vector<Edge> bridges;
    int isolated = 0;
    int good_triangles = 0;
    DegreeHistogram degrees;
};

GraphStatistics graph_statistics(const LabeledGraph& g, const std::optional<Pattern>& h = std::nullopt);
std::string to_json(const GraphStatistics& s, int indent = 2);

}  // namespace planarlab

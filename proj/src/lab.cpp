#include "planarlab/lab.hpp"

#include <cmath>
#include <cstdio>

#include <nlohmann/json.hpp>

#include "planarlab/planarity.hpp"

namespace planarlab {

namespace {

template <class... Fs>
struct overloaded : Fs... {
    using Fs::operator()...;
};
template <class... Fs>
overloaded(Fs...) -> overloaded<Fs...>;

std::string trim(const std::string& s) {
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

int parse_threshold(const std::string& s, const std::string& text) {
    const auto t = trim(s);
    if (t.empty() || t.size() > 9 || t.find_first_not_of("0123456789") != std::string::npos)
        throw Error(Errc::InvalidArgument, "bad threshold in event '" + text + "'");
    return std::stoi(t);
}

// "h,t" or "h>=t"
std::pair<Pattern, int> pattern_and_threshold(const std::string& arg, const std::string& text) {
    auto cut = arg.rfind(">=");
    std::size_t width = 2;
    if (cut == std::string::npos) {
        cut = arg.rfind(',');
        width = 1;
    }
    if (cut == std::string::npos) throw Error(Errc::InvalidArgument, "event '" + text + "' needs a threshold");
    return {pattern_preset(trim(arg.substr(0, cut))), parse_threshold(arg.substr(cut + width), text)};
}

std::uint64_t appearances_or_zero(const LabeledGraph& g, const Pattern& h) {
    return h.size() >= g.order() ? 0 : count_appearances(g, h);
}

std::string fixed(double x, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, x);
    return buf;
}

}  // namespace

EventKind parse_event(const std::string& raw) {
    const std::string text = trim(raw);
    const auto open = text.find('(');
    const std::string head = text.substr(0, open);
    std::string arg;
    if (open != std::string::npos) {
        if (text.back() != ')') throw Error(Errc::InvalidArgument, "unbalanced event '" + text + "'");
        arg = trim(text.substr(open + 1, text.size() - open - 2));
    }
    const bool has_arg = open != std::string::npos;
    auto need = [&](bool want) {
        if (want != has_arg)
            throw Error(Errc::InvalidArgument, "event '" + text + (want ? "' needs an argument" : "' takes no argument"));
    };
    if (head == "Connected") return need(false), event::Connected{};
    if (head == "HasIsolatedVertex") return need(false), event::HasIsolatedVertex{};
    if (head == "HasComponentIso") return need(true), event::HasComponentIso{pattern_preset(arg)};
    if (head == "HasCopy") return need(true), event::HasCopy{pattern_preset(arg)};
    if (head == "MinPendantEdges") return need(true), event::MinPendantEdges{parse_threshold(arg, text)};
    if (head == "MinAppearances") {
        need(true);
        auto [h, t] = pattern_and_threshold(arg, text);
        return event::MinAppearances{std::move(h), t};
    }
    if (head == "MinComponentsIso") {
        need(true);
        auto [h, t] = pattern_and_threshold(arg, text);
        return event::MinComponentsIso{std::move(h), t};
    }
    throw Error(Errc::InvalidArgument, "unknown event '" + text + "'");
}

std::vector<EventKind> parse_event_list(const std::string& text) {
    std::vector<EventKind> out;
    int depth = 0;
    std::string cur;
    for (char c : text) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == ',' && depth == 0) {
            out.push_back(parse_event(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty()) out.push_back(parse_event(cur));
    return out;
}

std::string describe(const EventKind& ev) {
    return std::visit(overloaded{
                          [](const event::Connected&) -> std::string { return "Connected"; },
                          [](const event::HasIsolatedVertex&) -> std::string { return "HasIsolatedVertex"; },
                          [](const event::HasComponentIso& e) { return "HasComponentIso(" + e.h.name() + ")"; },
                          [](const event::HasCopy& e) { return "HasCopy(" + e.h.name() + ")"; },
                          [](const event::MinPendantEdges& e) {
                              return "MinPendantEdges(" + std::to_string(e.t) + ")";
                          },
                          [](const event::MinAppearances& e) {
                              return "MinAppearances(" + e.h.name() + ">=" + std::to_string(e.t) + ")";
                          },
                          [](const event::MinComponentsIso& e) {
                              return "MinComponentsIso(" + e.h.name() + ">=" + std::to_string(e.t) + ")";
                          },
                      },
                      ev);
}

bool evaluate_event(const LabeledGraph& g, const EventKind& ev) {
    return std::visit(
        overloaded{
            [&](const event::Connected&) { return kappa(g) == 1; },
            [&](const event::HasIsolatedVertex&) {
                for (int v = 1; v <= g.order(); ++v)
                    if (g.degree(v) == 0) return true;
                return false;
            },
            [&](const event::HasComponentIso& e) { return count_components_isomorphic(g, e.h) >= 1; },
            [&](const event::HasCopy& e) { return has_copy(g, e.h); },
            [&](const event::MinPendantEdges& e) { return count_pendant_edges(g) >= e.t; },
            [&](const event::MinAppearances& e) {
                return appearances_or_zero(g, e.h) >= static_cast<std::uint64_t>(e.t);
            },
            [&](const event::MinComponentsIso& e) { return count_components_isomorphic(g, e.h) >= e.t; },
        },
        ev);
}

double ExactProbability::approx() const { return value.convert_to<double>(); }

std::vector<ExactProbability> exact_probabilities(int n, int m, const std::vector<EventKind>& events,
                                                  const CensusStore* census, const EnumerateOptions& opts) {
    std::vector<std::uint64_t> hits(events.size(), 0);
    std::uint64_t total = 0;
    auto absorb = [&](const LabeledGraph& g) {
        ++total;
        for (std::size_t i = 0; i < events.size(); ++i)
            if (evaluate_event(g, events[i])) ++hits[i];
    };
    const CensusRecord* stored = census ? census->find(n, m) : nullptr;
    if (stored && stored->graphs) {
        for (const auto& code : *stored->graphs) absorb(decode(code));
    } else {
        enumerate_class(n, m, absorb, opts);
    }
    if (total == 0) throw Error(Errc::EmptyClass, "P(" + std::to_string(n) + "," + std::to_string(m) + ") is empty");
    std::vector<ExactProbability> out;
    for (auto h : hits) out.push_back({h, total, Rational(BigInt(h), BigInt(total))});
    return out;
}

ExactProbability exact_probability(int n, int m, const EventKind& ev, const CensusStore* census,
                                   const EnumerateOptions& opts) {
    return exact_probabilities(n, m, {ev}, census, opts).front();
}

Estimate estimate_from_batch(const SampleBatch& batch, const EventKind& ev) {
    if (batch.samples.empty()) throw Error(Errc::EmptyClass, "empty sample batch");
    std::size_t hits = 0;
    for (const auto& s : batch.samples) hits += evaluate_event(decode(s), ev) ? 1 : 0;
    Estimate e;
    e.k = batch.samples.size();
    e.p = static_cast<double>(hits) / static_cast<double>(e.k);
    e.stderr_ = std::sqrt(e.p * (1 - e.p) / static_cast<double>(e.k));
    e.diagnostic = batch.diagnostic();
    return e;
}

Estimate estimate_probability(int n, int m, const EventKind& ev, const SamplerParams& params) {
    return estimate_from_batch(sample_many(n, m, params), ev);
}

const char* to_string(RegimeLabel r) noexcept {
    switch (r) {
        case RegimeLabel::Sparse: return "Sparse";
        case RegimeLabel::Critical: return "Critical";
        case RegimeLabel::Middle: return "Middle";
        case RegimeLabel::Saturated: return "Saturated";
    }
    return "?";
}

DensityRegime regime_of(int n, int m, const RegimeThresholds& t) {
    if (n < 1) throw Error(Errc::InvalidVertexCount, "vertex count must be positive");
    DensityRegime r{RegimeLabel::Middle, Rational(m, n)};
    if (r.ratio < 1 - t.delta)
        r.label = RegimeLabel::Sparse;
    else if (r.ratio - 1 <= t.delta && 1 - r.ratio <= t.delta)
        r.label = RegimeLabel::Critical;
    else if (Rational(m) >= Rational(3 * n - 6) - t.gamma * n)
        r.label = RegimeLabel::Saturated;
    return r;
}

std::vector<std::pair<int, int>> make_grid(const std::vector<int>& ns, const std::vector<int>& ms) {
    std::vector<std::pair<int, int>> grid;
    for (int n : ns) {
        if (ms.empty()) {
            for (int m = 0; m <= max_planar_edges(n); ++m) grid.emplace_back(n, m);
        } else {
            for (int m : ms) grid.emplace_back(n, m);
        }
    }
    return grid;
}

ExperimentResult phase_table(const ExperimentSpec& spec) {
    ExperimentResult result;
    for (std::size_t gi = 0; gi < spec.grid.size(); ++gi) {
        const auto [n, m] = spec.grid[gi];
        const auto regime = regime_of(n, m, spec.thresholds);
        if (spec.method == SampleMethod::Exact) {
            const auto probs = exact_probabilities(n, m, spec.events, spec.census, spec.enumerate);
            for (std::size_t i = 0; i < spec.events.size(); ++i) {
                PhaseRow row{n, m, regime, describe(spec.events[i]), probs[i].approx(), 0.0, probs[i].value,
                             "exact", probs[i].total.convert_to<std::uint64_t>(), std::nullopt};
                result.rows.push_back(std::move(row));
            }
            continue;
        }
        SamplerParams params;
        params.method = SampleMethod::Mcmc;
        params.count = spec.k;
        params.burn_in = spec.burn_in;
        params.thinning = spec.thinning;
        params.seed = derive_seed(spec.seed, gi);
        const auto batch = sample_many(n, m, params);
        for (const auto& ev : spec.events) {
            const auto est = estimate_from_batch(batch, ev);
            result.rows.push_back({n, m, regime, describe(ev), est.p, est.stderr_, std::nullopt, "mcmc(diagnostic)",
                                   est.k, params.seed});
        }
    }
    return result;
}

std::string phase_table_csv(const ExperimentResult& result) {
    std::string out = "n,m,ratio,regime,event,prob,stderr,method,k,seed\n";
    for (const auto& r : result.rows) {
        out += std::to_string(r.n) + "," + std::to_string(r.m) + "," + fixed(r.regime.ratio.convert_to<double>(), 6) +
               "," + to_string(r.regime.label) + "," + r.event + "," + fixed(r.prob, 12) + "," + fixed(r.stderr_, 12) +
               "," + r.method + "," + std::to_string(r.k) + "," + (r.seed ? std::to_string(*r.seed) : "") + "\n";
    }
    return out;
}

GraphStatistics graph_statistics(const LabeledGraph& g, const std::optional<Pattern>& h) {
    GraphStatistics s;
    s.graph = encode(g);
    s.n = g.order();
    s.m = g.size();
    if (h) {
        s.pattern = h->name();
        s.f_h = appearances_or_zero(g, *h);
    }
    s.pendant_edges = count_pendant_edges(g);
    if (is_planar(g)) s.add_count = add_count(g);
    s.kappa = kappa(g);
    s.bridges = bridges(g);
    s.degrees = degree_histogram(g);
    s.isolated = s.degrees.at(0);
    s.good_triangles = count_good_triangles(g);
    return s;
}

std::string to_json(const GraphStatistics& s, int indent) {
    nlohmann::ordered_json j;
    j["graph"] = s.graph;
    j["n"] = s.n;
    j["m"] = s.m;
    if (s.pattern) {
        j["pattern"] = *s.pattern;
        j["f_H"] = *s.f_h;
    } else {
        j["pattern"] = nullptr;
        j["f_H"] = nullptr;
    }
    j["pendant_edges"] = s.pendant_edges;
    j["add_count"] = s.add_count ? nlohmann::ordered_json(*s.add_count) : nlohmann::ordered_json(nullptr);
    j["kappa"] = s.kappa;
    auto br = nlohmann::ordered_json::array();
    for (const auto& e : s.bridges) br.push_back({e.u, e.v});
    j["bridges"] = br;
    j["isolated"] = s.isolated;
    j["good_triangles"] = s.good_triangles;
    auto hist = nlohmann::ordered_json::object();
    for (auto [d, c] : s.degrees.counts) hist[std::to_string(d)] = c;
    j["degree_histogram"] = hist;
    return j.dump(indent);
}

}  // namespace planarlab

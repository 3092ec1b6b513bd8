#include "planarlab/verify.hpp"

#include <algorithm>
#include <set>

#include "planarlab/planarity.hpp"

namespace planarlab {

std::string to_string(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

namespace {

void require_planar(const LabeledGraph& g) {
    if (!is_planar(g)) throw Error(Errc::NotPlanarInput, encode(g) + " is not planar");
}

}  // namespace

Check check_component_bound(const LabeledGraph& g) {
    const int k = kappa(g);
    const int bound = g.order() - g.size();
    return {"component_bound", k >= bound, k, bound, ">=", {}};
}

Check check_addable_cross_component(const LabeledGraph& g) {
    require_planar(g);
    const auto addable = addable_nonedges(g);
    const auto parts = components(g);
    std::vector<int> part_of(static_cast<std::size_t>(g.order()) + 1);
    for (std::size_t i = 0; i < parts.size(); ++i)
        for (int v : parts[i]) part_of[v] = static_cast<int>(i);

    long long cross = 0;
    long long missing = 0;
    for (int u = 1; u <= g.order(); ++u)
        for (int v = u + 1; v <= g.order(); ++v) {
            if (part_of[u] == part_of[v]) continue;
            ++cross;
            if (!std::binary_search(addable.begin(), addable.end(), Edge{u, v})) ++missing;
        }
    const auto add = static_cast<long long>(addable.size());
    Check c{"addable_cross_component", add >= cross && missing == 0, add, cross, ">=", {}};
    if (missing != 0) c.detail = std::to_string(missing) + " cross-component pairs not addable";
    return c;
}

Check check_cutedge_bound(const LabeledGraph& g) {
    require_planar(g);
    const auto cut = static_cast<long long>(bridges(g).size());
    const Rational bound(3LL * g.order() - g.size(), 2);
    return {"cutedge_bound", Rational(cut) < bound, cut, bound, "<", {}};
}

Check check_triangulation_degrees(const LabeledGraph& g) {
    const int n = g.order();
    if (n < 3 || g.size() != 3 * n - 6 || !is_planar(g))
        throw Error(Errc::NotTriangulation, encode(g) + " is not a triangulation");
    const auto hist = degree_histogram(g);
    int low = 0;
    for (auto [d, count] : hist.counts)
        if (d <= 6) low += count;
    const Rational bound(n, 7);
    const int good = count_good_triangles(g);
    const bool holds = Rational(low) > bound && Rational(good) >= bound;
    return {"triangulation_degrees", holds, low, bound, ">",
            "good_triangles=" + std::to_string(good) + " >= " + to_string(bound)};
}

Check check_appearance_disjointness(const LabeledGraph& g, const Pattern& h) {
    if (!is_two_edge_connected(h.graph()))
        throw Error(Errc::PatternNotTwoEdgeConnected, h.name() + " is not 2-edge-connected");
    const std::string name = "appearance_disjoint_" + h.name();
    if (h.size() >= g.order()) return {name, true, 0, 0, "overlaps", "vacuous: |H| >= n"};
    const auto sets = appearance_sets(g, h);
    std::set<int> used;
    long long overlaps = 0;
    for (const auto& w : sets)
        for (int v : w)
            if (!used.insert(v).second) ++overlaps;
    return {name, overlaps == 0, overlaps, 0, "==", std::to_string(sets.size()) + " appearances"};
}

const std::vector<Pattern>& default_disjointness_patterns() {
    static const std::vector<Pattern> patterns{pattern_preset("triangle"), pattern_preset("k4")};
    return patterns;
}

VerificationReport verify_graph(const LabeledGraph& g, const std::vector<Pattern>& patterns) {
    VerificationReport r;
    r.graph = encode(g);
    r.checks.push_back(check_component_bound(g));
    if (is_planar(g)) {
        r.checks.push_back(check_addable_cross_component(g));
        r.checks.push_back(check_cutedge_bound(g));
        if (g.order() >= 3 && g.size() == 3 * g.order() - 6) r.checks.push_back(check_triangulation_degrees(g));
    }
    for (const auto& h : patterns)
        if (h.size() < g.order()) r.checks.push_back(check_appearance_disjointness(g, h));
    for (const auto& c : r.checks) r.all_pass = r.all_pass && c.holds;
    return r;
}

ClassReport verify_class(int n, int m, const EnumerateOptions& opts, const CensusStore* census) {
    ClassReport report{n, m, 0, {}, true};
    auto absorb = [&](const LabeledGraph& g) {
        ++report.graphs;
        for (const auto& c : verify_graph(g).checks) {
            auto it = std::find_if(report.tallies.begin(), report.tallies.end(),
                                   [&](const CheckTally& t) { return t.name == c.name; });
            if (it == report.tallies.end()) {
                report.tallies.push_back({c.name, 0, 0, {}});
                it = std::prev(report.tallies.end());
            }
            ++it->applicable;
            if (!c.holds) {
                if (it->violations++ == 0) it->first_violation = encode(g);
                report.all_pass = false;
            }
        }
    };
    const CensusRecord* stored = census ? census->find(n, m) : nullptr;
    if (stored && stored->graphs) {
        for (const auto& code : *stored->graphs) absorb(decode(code));
    } else {
        enumerate_class(n, m, absorb, opts);
    }
    return report;
}

std::string class_reports_csv(const std::vector<ClassReport>& reports) {
    std::string out = "n,m,graphs,check,applicable,violations\n";
    for (const auto& r : reports) {
        const std::string prefix = std::to_string(r.n) + "," + std::to_string(r.m) + "," + std::to_string(r.graphs) + ",";
        if (r.tallies.empty()) out += prefix + "none,0,0\n";
        for (const auto& t : r.tallies)
            out += prefix + t.name + "," + std::to_string(t.applicable) + "," + std::to_string(t.violations) + "\n";
    }
    return out;
}

}  // namespace planarlab

#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "planarlab/census.hpp"
#include "planarlab/graph.hpp"
#include "planarlab/patterns.hpp"

namespace planarlab {

using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const Rational& q);

// One deterministic inequality evaluated on one graph. `lhs relation rhs`
// is what was tested; bounds are compared exactly.
struct Check {
    std::string name;
    bool holds = false;
    Rational lhs;
    Rational rhs;
    std::string relation;
    std::string detail;
};

struct VerificationReport {
    std::string graph;
    std::vector<Check> checks;
    bool all_pass = true;
};

// κ(G) >= n - m.
Check check_component_bound(const LabeledGraph& g);

// add(G) >= number of pairs in different components, and each such pair is
// itself addable. Throws NotPlanarInput.
Check check_addable_cross_component(const LabeledGraph& g);

// Number of bridges < (3n - m)/2. Throws NotPlanarInput.
Check check_cutedge_bound(const LabeledGraph& g);

// For a triangulation (n >= 3, m = 3n-6, planar): Σ_{i<=6} d_i > n/7 and at
// least n/7 good triangles. Throws NotTriangulation.
Check check_triangulation_degrees(const LabeledGraph& g);

// Witness sets of the appearances of H are pairwise disjoint. Throws
// PatternNotTwoEdgeConnected. Vacuous when |H| >= n.
Check check_appearance_disjointness(const LabeledGraph& g, const Pattern& h);

// Patterns used for the disjointness checks by default: triangle and K4.
const std::vector<Pattern>& default_disjointness_patterns();

// Every check that applies to G.
VerificationReport verify_graph(const LabeledGraph& g,
                                const std::vector<Pattern>& patterns = default_disjointness_patterns());

struct CheckTally {
    std::string name;
    std::uint64_t applicable = 0;
    std::uint64_t violations = 0;
    std::string first_violation;  // encoding of the first failing graph
};

struct ClassReport {
    int n = 0;
    int m = 0;
    std::uint64_t graphs = 0;
    std::vector<CheckTally> tallies;
    bool all_pass = true;
};

// Runs verify_graph over all of P(n,m): from the census when it stores the
// class, otherwise by enumeration.
ClassReport verify_class(int n, int m, const EnumerateOptions& opts = {}, const CensusStore* census = nullptr);

// CSV with columns n,m,graphs,check,applicable,violations.
std::string class_reports_csv(const std::vector<ClassReport>& reports);

}  // namespace planarlab

#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "planarlab/graph.hpp"

namespace planarlab {

using BigInt = boost::multiprecision::cpp_int;

struct EnumerateOptions {
    // Search-tree nodes allowed before ResourceLimit is raised; 0 = unlimited.
    std::uint64_t node_budget = 0;
    // Run the full planarity test on insertions once the partial graph has at
    // least this many edges; -1 means n. Untested branches are re-checked
    // before a graph is reported, so any value gives the same result.
    int prune_from = -1;
    // Worker threads for counting; subtrees are split on the first few edge
    // decisions and merged in order, so results do not depend on this.
    unsigned workers = 1;
};

using GraphVisitor = std::function<void(const LabeledGraph&)>;

// |P(n,m)| by depth-first augmentation over edge slots with planarity pruning.
BigInt count_class(int n, int m, const EnumerateOptions& opts = {});

// Calls `visit` once per member of P(n,m), in increasing order of encoding.
// Exceptions thrown by the visitor propagate and stop the enumeration.
void enumerate_class(int n, int m, const GraphVisitor& visit, const EnumerateOptions& opts = {});

// Every labelled planar graph on {1..n} (all edge counts), in increasing order
// of encoding.
void enumerate_planar(int n, const GraphVisitor& visit, const EnumerateOptions& opts = {});

// Class sizes for m = 0..C(n,2) from a single enumeration pass.
std::vector<BigInt> count_by_edges(int n, const EnumerateOptions& opts = {});

// Test oracle: filters every m-subset of the C(n,2) pairs through is_planar.
// Only n <= 6 is accepted (ResourceLimit otherwise).
std::uint64_t brute_force_count(int n, int m);

struct CensusRecord {
    int n = 0;
    int m = 0;
    BigInt count = 0;
    std::optional<std::vector<std::string>> graphs;  // sorted encodings, when stored

    friend bool operator==(const CensusRecord&, const CensusRecord&) = default;
};

// CRC-32 of the record's serialised form.
std::uint32_t record_checksum(const CensusRecord& r);

class CensusStore {
public:
    static constexpr int kFormatVersion = 1;

    void put(CensusRecord record);
    const CensusRecord* find(int n, int m) const;
    const std::map<std::pair<int, int>, CensusRecord>& records() const noexcept { return records_; }
    bool empty() const noexcept { return records_.empty(); }

    friend bool operator==(const CensusStore&, const CensusStore&) = default;

private:
    std::map<std::pair<int, int>, CensusRecord> records_;
};

CensusRecord census_record(int n, int m, bool store_graphs, const EnumerateOptions& opts = {});

// One record per requested m (all m = 0..C(n,2) when `edge_counts` is empty).
CensusStore build_census(int n, const std::vector<int>& edge_counts, bool store_graphs,
                         const EnumerateOptions& opts = {});

// Line-oriented text: "planarlab-census v1", then "n m count" per record with
// stored encodings on indented lines, then "checksum XXXXXXXX" (CRC-32 of
// everything above it).
void save_census(const CensusStore& store, const std::filesystem::path& path);
CensusStore load_census(const std::filesystem::path& path);

std::string serialize_census(const CensusStore& store);
CensusStore parse_census(const std::string& text);

}  // namespace planarlab

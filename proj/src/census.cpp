#include "planarlab/census.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdio>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include <boost/crc.hpp>

#include "planarlab/planarity.hpp"

namespace planarlab {

namespace {

constexpr int kAllEdgeCounts = -1;

bool same_component(const LabeledGraph& g, int u, int v) {
    if (g.order() > 64) {
        for (const auto& part : components(g))
            if (std::binary_search(part.begin(), part.end(), u)) return std::binary_search(part.begin(), part.end(), v);
        return false;
    }
    std::uint64_t seen = std::uint64_t{1} << (u - 1);
    int stack[64];
    int top = 0;
    stack[top++] = u;
    while (top > 0) {
        const int x = stack[--top];
        if (x == v) return true;
        g.for_each_neighbor(x, [&](int y) {
            const std::uint64_t bit = std::uint64_t{1} << (y - 1);
            if (!(seen & bit)) {
                seen |= bit;
                stack[top++] = y;
            }
        });
    }
    return false;
}

// Include/exclude search over edge slots in pair order. Excluding a slot is
// explored before including it, which yields graphs in increasing order of
// their encodings (slot 0 is the most significant bit).
template <typename Emit>
class SlotSearch {
public:
    SlotSearch(int n, int target, const EnumerateOptions& opts, std::atomic<std::uint64_t>& nodes, Emit& emit)
        : pairs_(all_pairs(n)),
          target_(target),
          prune_from_(opts.prune_from < 0 ? n : opts.prune_from),
          max_edges_(max_planar_edges(n)),
          budget_(opts.node_budget),
          nodes_(nodes),
          emit_(emit),
          builder_(n) {}

    // Preloads the decisions for the first `prefix_len` slots (bit i of
    // `prefix` set = slot prefix_len-1-i included). Returns false when the
    // prefix cannot lead to any reported graph.
    bool load_prefix(std::size_t prefix_len, std::uint64_t prefix) {
        for (std::size_t s = 0; s < prefix_len; ++s) {
            if ((prefix >> (prefix_len - 1 - s)) & 1U) {
                builder_.add(pairs_[s].u, pairs_[s].v);
                ++have_;
            }
        }
        if (target_ != kAllEdgeCounts && have_ > target_) return false;
        return is_planar(builder_.graph());
    }

    void run(std::size_t first_slot) { visit(first_slot, false); }

private:
    void tick() {
        const auto used = nodes_.fetch_add(1, std::memory_order_relaxed) + 1;
        if (budget_ != 0 && used > budget_)
            throw Error(Errc::ResourceLimit, "enumeration exceeded the node budget of " + std::to_string(budget_));
    }

    void report(bool dirty) {
        if (dirty && !is_planar(builder_.graph())) return;
        emit_(builder_.graph());
    }

    void visit(std::size_t slot, bool dirty) {
        if (target_ != kAllEdgeCounts) {
            if (have_ == target_) return report(dirty);
            if (pairs_.size() - slot < static_cast<std::size_t>(target_ - have_)) return;
        } else if (slot == pairs_.size()) {
            return report(dirty);
        }
        tick();

        visit(slot + 1, dirty);

        const auto [u, v] = pairs_[slot];
        if (have_ + 1 > max_edges_) return;
        bool next_dirty = dirty;
        if (have_ + 1 >= prune_from_) {
            const bool bridging = !dirty && !same_component(builder_.graph(), u, v);
            builder_.add(u, v);
            if (!bridging && !is_planar(builder_.graph())) {
                builder_.remove(u, v);
                return;
            }
            next_dirty = false;
        } else {
            builder_.add(u, v);
            next_dirty = true;
        }
        ++have_;
        visit(slot + 1, next_dirty);
        --have_;
        builder_.remove(u, v);
    }

    std::vector<Edge> pairs_;
    int target_;
    int prune_from_;
    long long max_edges_;
    std::uint64_t budget_;
    std::atomic<std::uint64_t>& nodes_;
    Emit& emit_;
    GraphBuilder builder_;
    int have_ = 0;
};

void check_arguments(int n, int m) {
    if (n < 1) throw Error(Errc::InvalidVertexCount, "vertex count must be positive");
    if (m < 0 && m != kAllEdgeCounts) throw Error(Errc::InvalidArgument, "edge count must be non-negative");
}

template <typename Emit>
void run_sequential(int n, int target, const EnumerateOptions& opts, Emit& emit) {
    check_arguments(n, target);
    if (target != kAllEdgeCounts && static_cast<std::size_t>(target) > pair_count(n)) return;
    std::atomic<std::uint64_t> nodes{0};
    SlotSearch<Emit> search(n, target, opts, nodes, emit);
    search.run(0);
}

// Splits the search on the first few slots and runs the subtrees on
// `opts.workers` threads. `make_sink(task)` returns the per-task emitter;
// tasks are numbered in output order.
template <typename MakeSink>
void run_partitioned(int n, int target, const EnumerateOptions& opts, std::size_t& task_count, MakeSink make_sink) {
    check_arguments(n, target);
    const std::size_t slots = pair_count(n);
    const std::size_t prefix_len = std::min<std::size_t>(slots, 6);
    task_count = std::size_t{1} << prefix_len;
    if (target != kAllEdgeCounts && static_cast<std::size_t>(target) > slots) {
        task_count = 0;
        return;
    }
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::size_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;

    auto worker = [&] {
        try {
            for (std::size_t task = next++; task < task_count; task = next++) {
                auto sink = make_sink(task);
                SlotSearch<decltype(sink)> search(n, target, opts, nodes, sink);
                if (search.load_prefix(prefix_len, task)) search.run(prefix_len);
            }
        } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next = task_count;
        }
    };
    const unsigned threads = std::max(1U, opts.workers);
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    if (failure) std::rethrow_exception(failure);
}

}  // namespace

BigInt count_class(int n, int m, const EnumerateOptions& opts) {
    if (m < 0) throw Error(Errc::InvalidArgument, "edge count must be non-negative");
    if (opts.workers <= 1) {
        std::uint64_t count = 0;
        auto emit = [&](const LabeledGraph&) { ++count; };
        run_sequential(n, m, opts, emit);
        return BigInt(count);
    }
    std::vector<std::uint64_t> per_task(std::size_t{1} << 6, 0);
    std::size_t tasks = 0;
    run_partitioned(n, m, opts, tasks, [&](std::size_t task) {
        return [&per_task, task](const LabeledGraph&) { ++per_task[task]; };
    });
    BigInt total = 0;
    for (auto c : per_task) total += c;
    return total;
}

void enumerate_class(int n, int m, const GraphVisitor& visit, const EnumerateOptions& opts) {
    if (m < 0) throw Error(Errc::InvalidArgument, "edge count must be non-negative");
    auto emit = [&](const LabeledGraph& g) { visit(g); };
    run_sequential(n, m, opts, emit);
}

void enumerate_planar(int n, const GraphVisitor& visit, const EnumerateOptions& opts) {
    auto emit = [&](const LabeledGraph& g) { visit(g); };
    run_sequential(n, kAllEdgeCounts, opts, emit);
}

std::vector<BigInt> count_by_edges(int n, const EnumerateOptions& opts) {
    check_arguments(n, 0);
    const std::size_t slots = pair_count(n);
    std::vector<std::uint64_t> counts(slots + 1, 0);
    if (opts.workers <= 1) {
        auto emit = [&](const LabeledGraph& g) { ++counts[static_cast<std::size_t>(g.size())]; };
        run_sequential(n, kAllEdgeCounts, opts, emit);
    } else {
        std::vector<std::vector<std::uint64_t>> per_task(std::size_t{1} << 6, std::vector<std::uint64_t>(slots + 1, 0));
        std::size_t tasks = 0;
        run_partitioned(n, kAllEdgeCounts, opts, tasks, [&](std::size_t task) {
            return [&per_task, task](const LabeledGraph& g) { ++per_task[task][static_cast<std::size_t>(g.size())]; };
        });
        for (const auto& row : per_task)
            for (std::size_t m = 0; m <= slots; ++m) counts[m] += row[m];
    }
    return {counts.begin(), counts.end()};
}

std::uint64_t brute_force_count(int n, int m) {
    if (n < 1) throw Error(Errc::InvalidVertexCount, "vertex count must be positive");
    if (n > 6) throw Error(Errc::ResourceLimit, "brute force is limited to n <= 6");
    const auto pairs = all_pairs(n);
    const std::size_t slots = pairs.size();
    if (m < 0 || static_cast<std::size_t>(m) > slots) return 0;
    std::uint64_t count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots); ++mask) {
        if (std::popcount(mask) != m) continue;
        GraphBuilder b(n);
        for (std::size_t s = 0; s < slots; ++s)
            if ((mask >> s) & 1U) b.add(pairs[s].u, pairs[s].v);
        if (is_planar(b.graph())) ++count;
    }
    return count;
}

void CensusStore::put(CensusRecord record) {
    const auto key = std::pair{record.n, record.m};
    records_.insert_or_assign(key, std::move(record));
}

const CensusRecord* CensusStore::find(int n, int m) const {
    auto it = records_.find({n, m});
    return it == records_.end() ? nullptr : &it->second;
}

CensusRecord census_record(int n, int m, bool store_graphs, const EnumerateOptions& opts) {
    CensusRecord r{n, m, 0, std::nullopt};
    if (!store_graphs) {
        r.count = count_class(n, m, opts);
        return r;
    }
    std::vector<std::string> graphs;
    if (opts.workers <= 1) {
        enumerate_class(n, m, [&](const LabeledGraph& g) { graphs.push_back(encode(g)); }, opts);
    } else {
        std::vector<std::vector<std::string>> per_task(std::size_t{1} << 6);
        std::size_t tasks = 0;
        run_partitioned(n, m, opts, tasks, [&](std::size_t task) {
            return [&per_task, task](const LabeledGraph& g) { per_task[task].push_back(encode(g)); };
        });
        for (auto& chunk : per_task) graphs.insert(graphs.end(), chunk.begin(), chunk.end());
    }
    r.count = graphs.size();
    r.graphs = std::move(graphs);
    return r;
}

CensusStore build_census(int n, const std::vector<int>& edge_counts, bool store_graphs, const EnumerateOptions& opts) {
    CensusStore store;
    std::vector<int> ms = edge_counts;
    if (ms.empty())
        for (int m = 0; m <= static_cast<int>(pair_count(n)); ++m) ms.push_back(m);
    for (int m : ms) store.put(census_record(n, m, store_graphs, opts));
    return store;
}

// --- persistence -----------------------------------------------------------

namespace {

constexpr std::string_view kMagic = "planarlab-census v";

void append_record(std::string& out, const CensusRecord& r) {
    out += std::to_string(r.n) + " " + std::to_string(r.m) + " " + r.count.str() + "\n";
    if (r.graphs)
        for (const auto& g : *r.graphs) out += "  " + g + "\n";
}

std::uint32_t crc32(std::string_view bytes) {
    boost::crc_32_type crc;
    crc.process_bytes(bytes.data(), bytes.size());
    return crc.checksum();
}

std::string hex32(std::uint32_t v) {
    char buf[9];
    std::snprintf(buf, sizeof buf, "%08X", v);
    return buf;
}

[[noreturn]] void corrupt(const std::string& why) { throw Error(Errc::IoFailure, "malformed census: " + why); }

void validate(const CensusRecord& r) {
    if (!r.graphs) return;
    const auto& gs = *r.graphs;
    if (BigInt(gs.size()) != r.count) corrupt("record (" + std::to_string(r.n) + "," + std::to_string(r.m) + ") lists " +
                                              std::to_string(gs.size()) + " graphs for count " + r.count.str());
    for (std::size_t i = 0; i < gs.size(); ++i) {
        if (i > 0 && !(gs[i - 1] < gs[i])) corrupt("graph list not sorted and duplicate-free");
        const auto g = decode(gs[i]);
        if (g.order() != r.n || g.size() != r.m || !is_planar(g)) corrupt("graph " + gs[i] + " is not in its class");
    }
}

}  // namespace

std::uint32_t record_checksum(const CensusRecord& r) {
    std::string text;
    append_record(text, r);
    return crc32(text);
}

std::string serialize_census(const CensusStore& store) {
    std::string out = std::string(kMagic) + std::to_string(CensusStore::kFormatVersion) + "\n";
    for (const auto& [key, r] : store.records()) append_record(out, r);
    out += "checksum " + hex32(crc32(out)) + "\n";
    return out;
}

CensusStore parse_census(const std::string& text) {
    const auto header_end = text.find('\n');
    if (header_end == std::string::npos) throw Error(Errc::ChecksumMismatch, "census truncated before its header ends");
    const std::string_view header(text.data(), header_end);
    if (!header.starts_with(kMagic)) corrupt("missing 'planarlab-census' header");
    const auto version = header.substr(kMagic.size());
    if (version != std::to_string(CensusStore::kFormatVersion))
        throw Error(Errc::VersionUnsupported, "census format version '" + std::string(version) + "'");

    // The checksum line must be the last line of the file.
    const std::string_view body(text);
    const auto tail = body.rfind("\nchecksum ");
    if (tail == std::string_view::npos || !body.ends_with("\n"))
        throw Error(Errc::ChecksumMismatch, "census has no checksum line (truncated?)");
    const auto stated = body.substr(tail + 10, body.size() - tail - 11);
    const std::string_view payload = body.substr(0, tail + 1);
    if (stated != hex32(crc32(payload)))
        throw Error(Errc::ChecksumMismatch, "stated " + std::string(stated) + ", computed " + hex32(crc32(payload)));

    CensusStore store;
    std::istringstream in{std::string(payload.substr(header_end + 1))};
    std::string line;
    std::optional<CensusRecord> current;
    auto flush = [&] {
        if (!current) return;
        validate(*current);
        if (store.find(current->n, current->m)) corrupt("duplicate record");
        store.put(std::move(*current));
        current.reset();
    };
    while (std::getline(in, line)) {
        if (line.starts_with("  ")) {
            if (!current) corrupt("graph line before any record");
            if (!current->graphs) current->graphs.emplace();
            current->graphs->push_back(line.substr(2));
            continue;
        }
        flush();
        std::istringstream fields(line);
        CensusRecord r;
        std::string count, extra;
        if (!(fields >> r.n >> r.m >> count) || (fields >> extra) || r.n < 1 || r.m < 0)
            corrupt("bad record line '" + line + "'");
        if (count.find_first_not_of("0123456789") != std::string::npos) corrupt("bad count '" + count + "'");
        r.count = BigInt(count);
        current = std::move(r);
    }
    flush();
    return store;
}

void save_census(const CensusStore& store, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(Errc::IoFailure, "cannot open " + path.string() + " for writing");
    const auto text = serialize_census(store);
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
    if (!out.flush()) throw Error(Errc::IoFailure, "write to " + path.string() + " failed");
}

CensusStore load_census(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(Errc::IoFailure, "cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_census(buf.str());
}

}  // namespace planarlab

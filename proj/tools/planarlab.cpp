// planarlab command-line front end.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "planarlab/census.hpp"
#include "planarlab/lab.hpp"
#include "planarlab/sampler.hpp"
#include "planarlab/verify.hpp"

using namespace planarlab;

namespace {

void emit(const std::string& text, const std::string& path) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out || !(out << text)) throw Error(Errc::IoFailure, "cannot write " + path);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uniform random planar graph laboratory"};
    app.require_subcommand(1);

    int n = 0;
    int m = -1;
    std::string out;

    auto* enumerate = app.add_subcommand("enumerate", "Count P(n,m) and write a census file");
    bool store = false;
    std::uint64_t budget = 0;
    unsigned workers = 1;
    enumerate->add_option("--n", n, "vertices")->required();
    enumerate->add_option("--m", m, "edges (all m when omitted)");
    enumerate->add_flag("--store", store, "store every graph's encoding");
    enumerate->add_option("--out", out, "census file (stdout when omitted)");
    enumerate->add_option("--budget", budget, "search-tree node limit");
    enumerate->add_option("--workers", workers, "counting threads");

    auto* sample = app.add_subcommand("sample", "Draw graphs from P(n,m)");
    std::string method = "exact";
    std::size_t count = 1;
    std::optional<std::uint64_t> burnin;
    std::optional<std::uint64_t> thin;
    std::uint64_t seed = 1;
    std::string census_path;
    sample->add_option("--n", n)->required();
    sample->add_option("--m", m)->required();
    sample->add_option("--method", method)->check(CLI::IsMember({"exact", "mcmc"}));
    sample->add_option("--count", count)->required();
    sample->add_option("--burnin", burnin);
    sample->add_option("--thin", thin);
    sample->add_option("--seed", seed);
    sample->add_option("--census", census_path, "census file with stored graphs");
    sample->add_option("--out", out);

    auto* verify = app.add_subcommand("verify", "Check the deterministic inequalities over P(n,m)");
    bool all_m = false;
    verify->add_option("--n", n)->required();
    auto* m_opt = verify->add_option("--m", m);
    verify->add_flag("--all-m", all_m)->excludes(m_opt);
    verify->add_option("--census", census_path);
    verify->add_option("--out", out);

    auto* experiment = app.add_subcommand("experiment", "Phase table of event probabilities");
    std::vector<int> n_list;
    std::vector<int> m_list;
    std::string events = "Connected";
    std::size_t k = 1000;
    experiment->add_option("--n-list", n_list)->required()->delimiter(',');
    experiment->add_option("--m-list", m_list, "edge counts (all m when omitted)")->delimiter(',');
    experiment->add_option("--events", events, "comma-separated events");
    experiment->add_option("--method", method)->check(CLI::IsMember({"exact", "mcmc"}));
    experiment->add_option("--seed", seed);
    experiment->add_option("--k", k, "samples per (n,m) for mcmc");
    experiment->add_option("--burnin", burnin);
    experiment->add_option("--thin", thin);
    experiment->add_option("--census", census_path);
    experiment->add_option("--out", out);

    auto* stats = app.add_subcommand("stats", "Statistics of one graph as JSON");
    std::string graph;
    std::string pattern;
    stats->add_option("--graph", graph)->required();
    stats->add_option("--pattern", pattern);

    CLI11_PARSE(app, argc, argv);

    try {
        std::optional<CensusStore> census;
        if (!census_path.empty()) census = load_census(census_path);
        const CensusStore* census_ptr = census ? &*census : nullptr;

        if (*enumerate) {
            EnumerateOptions opts;
            opts.node_budget = budget;
            opts.workers = workers;
            std::vector<int> ms;
            if (m >= 0) ms.push_back(m);
            emit(serialize_census(build_census(n, ms, store, opts)), out);
        } else if (*sample) {
            SamplerParams params;
            params.method = parse_sample_method(method);
            params.count = count;
            params.burn_in = burnin;
            params.thinning = thin;
            params.seed = seed;
            params.census = census_ptr;
            std::string text;
            for (const auto& s : sample_many(n, m, params).samples) text += s + "\n";
            emit(text, out);
        } else if (*verify) {
            std::vector<ClassReport> reports;
            if (m >= 0 && !all_m) {
                reports.push_back(verify_class(n, m, {}, census_ptr));
            } else {
                for (int mm = 0; mm <= static_cast<int>(pair_count(n)); ++mm)
                    reports.push_back(verify_class(n, mm, {}, census_ptr));
            }
            emit(class_reports_csv(reports), out);
            for (const auto& r : reports)
                if (!r.all_pass) return 1;
        } else if (*experiment) {
            ExperimentSpec spec;
            spec.grid = make_grid(n_list, m_list);
            spec.events = parse_event_list(events);
            spec.method = parse_sample_method(method);
            spec.k = k;
            spec.seed = seed;
            spec.burn_in = burnin;
            spec.thinning = thin;
            spec.census = census_ptr;
            emit(phase_table_csv(phase_table(spec)), out);
        } else if (*stats) {
            std::optional<Pattern> h;
            if (!pattern.empty()) h = pattern_preset(pattern);
            std::cout << to_json(graph_statistics(decode(graph), h)) << "\n";
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}

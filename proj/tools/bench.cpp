// Timing harness for the kernels that carry both a serial reference path and
// an OpenMP path. Verifies that the two paths agree before reporting.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "suscept/analytics.hpp"
#include "suscept/events.hpp"
#include "suscept/history.hpp"
#include "suscept/network.hpp"
#include "suscept/nullmodel.hpp"
#include "suscept/predict.hpp"
#include "suscept/synth.hpp"

using namespace suscept;

namespace {

double time_ms(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    const auto stop = std::chrono::steady_clock::now();
    return std::chrono::duration<double, std::milli>(stop - start).count();
}

void row(const char* name, double serial_ms, double parallel_ms, bool equal) {
    std::printf("%-28s %10.1f ms %10.1f ms %8.2fx  %s\n", name, serial_ms, parallel_ms,
                serial_ms / parallel_ms, equal ? "match" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
    int n_nodes = 2000;
    int intensity = 120;
    if (argc > 1) n_nodes = std::atoi(argv[1]);
    if (argc > 2) intensity = std::atoi(argv[2]);

#ifdef _OPENMP
    std::printf("openmp threads: %d\n", omp_get_max_threads());
#else
    std::printf("built without openmp; parallel path falls back to serial\n");
#endif

    SynthConfig config;
    config.n_nodes = n_nodes;
    config.intensity = intensity;
    config.rho_ks_target = 0.3;
    config.seed = 7;
    const auto corpus = generate_corpus(config);
    const auto text = serialize_event_log(corpus.events);
    std::printf("corpus: %zu events, %zu nodes, %zu edges\n\n", corpus.events.size(),
                corpus.truth_network.node_count(), corpus.truth_network.edge_count());
    std::printf("%-28s %13s %13s %9s\n", "kernel", "serial", "openmp", "speedup");

    // Event parsing.
    std::vector<InteractionEvent> ev_s, ev_p;
    const double parse_s = time_ms([&] { ev_s = parse_event_log(text, true, nullptr, Exec::Serial); });
    const double parse_p = time_ms([&] { ev_p = parse_event_log(text, true, nullptr, Exec::Parallel); });
    row("parse_event_log", parse_s, parse_p, ev_s == ev_p);

    const auto filtered = filter_url_events(ev_p);
    const auto targets = select_target_users(filtered, 10);
    const auto window = config.window();

    // History reconstruction.
    std::map<std::string, UserHistory> h_s, h_p;
    const double hist_s =
        time_ms([&] { h_s = build_histories(filtered, targets, window, Exec::Serial); });
    const double hist_p =
        time_ms([&] { h_p = build_histories(filtered, targets, window, Exec::Parallel); });
    row("build_histories", hist_s, hist_p, h_s == h_p);

    // Structural features.
    const auto net = build_friendship_network(filtered, targets, NetworkKind::Interaction);
    std::vector<NodeFeatures> f_s, f_p;
    const double feat_s = time_ms([&] { f_s = node_features(net, Exec::Serial); });
    const double feat_p = time_ms([&] { f_p = node_features(net, Exec::Parallel); });
    bool feat_eq = f_s.size() == f_p.size();
    for (std::size_t i = 0; feat_eq && i < f_s.size(); ++i) {
        feat_eq = f_s[i].eigenvector_centrality == f_p[i].eigenvector_centrality &&
                  f_s[i].clustering_coefficient == f_p[i].clustering_coefficient;
    }
    row("node_features", feat_s, feat_p, feat_eq);

    // Null-model replicates.
    std::vector<std::optional<double>> scores(corpus.planted_iar.begin(),
                                              corpus.planted_iar.end());
    NullConfig nc;
    nc.model = NullModel::EdgeSwap;
    nc.n_reps = 50;
    nc.seed = 3;
    NullSummary n_s, n_p;
    const double null_s = time_ms(
        [&] { n_s = null_distribution(corpus.truth_network, scores, NullStatistic::ParadoxP, nc, Exec::Serial); });
    const double null_p = time_ms(
        [&] { n_p = null_distribution(corpus.truth_network, scores, NullStatistic::ParadoxP, nc, Exec::Parallel); });
    row("null_distribution (50 reps)", null_s, null_p,
        n_s.null_mean == n_p.null_mean && n_s.p_value == n_p.p_value);

    // Forest training.
    Rng rng(19);
    std::vector<std::vector<double>> rows_x;
    std::vector<double> y;
    for (int i = 0; i < 4000; ++i) {
        std::vector<double> r(kFeatureColumns.size());
        for (auto& v : r) v = rng.uniform();
        y.push_back(0.2 + 0.6 * r[0] + rng.normal(0.0, 0.05));
        rows_x.push_back(std::move(r));
    }
    ForestParams params{120, 4, 16, 5, 5, 11};
    RandomForest forest_s, forest_p;
    const double fit_s = time_ms([&] { forest_s.fit(rows_x, y, params, Exec::Serial); });
    const double fit_p = time_ms([&] { forest_p.fit(rows_x, y, params, Exec::Parallel); });
    row("random_forest fit", fit_s, fit_p, forest_s.to_json() == forest_p.to_json());

    std::vector<double> pred_s, pred_p;
    const double pr_s = time_ms([&] { pred_s = forest_s.predict(rows_x, Exec::Serial); });
    const double pr_p = time_ms([&] { pred_p = forest_p.predict(rows_x, Exec::Parallel); });
    row("random_forest predict", pr_s, pr_p, pred_s == pred_p);

    return 0;
}

// suscept: batch analytics over social-interaction event logs.
//
// Staged, file-based pipeline: every subcommand reads files, writes files,
// and stamps a manifest, so each intermediate is inspectable and reruns are
// reproducible byte for byte (given the same inputs and seed).

#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "suscept/analytics.hpp"
#include "suscept/common.hpp"
#include "suscept/events.hpp"
#include "suscept/history.hpp"
#include "suscept/network.hpp"
#include "suscept/nullmodel.hpp"
#include "suscept/predict.hpp"
#include "suscept/stats.hpp"
#include "suscept/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace suscept;

namespace {

constexpr const char* kVersion = "1.0.0";

struct GlobalOpts {
    std::string out = ".";
    std::uint64_t seed = 42;
    bool strict = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const fs::path& path, const std::string& content) {
    fs::create_directories(path.parent_path().empty() ? "." : path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw DataError("cannot write '" + path.string() + "'");
    out << content;
}

std::string hex64(std::uint64_t v) {
    char buf[24];
    std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(v));
    return buf;
}

class Manifest {
public:
    Manifest(std::string subcommand, const GlobalOpts& opts)
        : start_(std::chrono::steady_clock::now()) {
        j_["subcommand"] = std::move(subcommand);
        j_["seed"] = opts.seed;
        j_["strict"] = opts.strict;
        j_["out"] = opts.out;
        j_["version"] = kVersion;
        j_["inputs"] = json::object();
        j_["flags"] = json::object();
    }

    void flag(const std::string& name, const json& value) { j_["flags"][name] = value; }

    void input(const std::string& path, const std::string& content) {
        j_["inputs"][path] = hex64(fnv1a64(content));
    }

    void write(const fs::path& dir) {
        const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
            std::chrono::steady_clock::now() - start_);
        j_["duration_ms"] = elapsed.count();
        write_file(dir / "manifest.json", j_.dump(2) + "\n");
    }

private:
    json j_;
    std::chrono::steady_clock::time_point start_;
};

struct LoadedCorpus {
    std::vector<InteractionEvent> events;  // url-filtered
    std::size_t parsed = 0;
    std::size_t dropped_urlless = 0;
    std::set<std::string> targets;
};

LoadedCorpus load_corpus(const std::string& events_path, std::int64_t threshold,
                         const GlobalOpts& opts, Manifest& manifest) {
    const auto text = read_file(events_path);
    manifest.input(events_path, text);
    ParseSummary summary;
    auto events = parse_event_log(text, opts.strict, &summary);
    LoadedCorpus corpus;
    corpus.parsed = summary.parsed;
    auto filtered = filter_url_events(events);
    corpus.dropped_urlless = events.size() - filtered.size();
    corpus.events = std::move(filtered);
    corpus.targets = select_target_users(corpus.events, threshold);
    return corpus;
}

std::vector<UserMeta> load_meta(const std::string& path, const GlobalOpts& opts,
                                Manifest& manifest) {
    if (path.empty()) return {};
    const auto text = read_file(path);
    manifest.input(path, text);
    ParseSummary summary;
    auto metas = parse_user_meta(text, opts.strict, &summary);
    if (summary.duplicate_users > 0) {
        std::cerr << "warning: " << summary.duplicate_users
                  << " duplicate user metadata record(s), last record wins\n";
    }
    return metas;
}

ScoreTable load_scores(const std::string& path, Manifest& manifest) {
    const auto text = read_file(path);
    manifest.input(path, text);
    return score_table_from_csv(text);
}

FriendshipNetwork load_network(const std::string& path, Manifest& manifest) {
    const auto text = read_file(path);
    manifest.input(path, text);
    return network_from_edge_list(text, NetworkKind::Interaction);
}

std::string network_sidecar(const FriendshipNetwork& net, const CorpusWindow* window) {
    json j;
    j["kind"] = std::string(to_string(net.kind));
    j["nodes"] = net.node_count();
    j["edges"] = net.edge_count();
    if (window) {
        j["window"] = json{{"start", window->start},
                           {"buffer_end", window->buffer_end},
                           {"end", window->end}};
    }
    return j.dump(2) + "\n";
}

json null_block_to_json(const std::vector<NullSummary>& summaries) {
    json arr = json::array();
    for (const auto& s : summaries) {
        arr.push_back(json{{"statistic", s.statistic},
                           {"observed", s.observed},
                           {"null_mean", s.null_mean},
                           {"null_sd", s.null_sd},
                           {"p_value", s.p_value},
                           {"n_reps", s.n_reps}});
    }
    return arr;
}

std::vector<NullSummary> run_null_block(const FriendshipNetwork& net,
                                        const std::vector<std::optional<double>>& scores,
                                        NullModel model, int reps, int swap_mult,
                                        std::uint64_t seed) {
    NullConfig config;
    config.model = model;
    config.n_reps = reps;
    config.swap_multiplier = swap_mult;
    config.seed = seed;
    std::vector<NullSummary> out;
    for (auto stat :
         {NullStatistic::Homophily, NullStatistic::ParadoxP, NullStatistic::MeanSNN}) {
        out.push_back(null_distribution(net, scores, stat, config));
    }
    return out;
}

std::string format_csv_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

int cmd_ingest(const GlobalOpts& opts, const std::string& events_path, std::int64_t threshold) {
    Manifest manifest("ingest", opts);
    manifest.flag("events", events_path);
    manifest.flag("threshold", threshold);

    auto corpus = load_corpus(events_path, threshold, opts, manifest);
    const fs::path out(opts.out);
    write_file(out / "filtered_events.jsonl", serialize_event_log(corpus.events));
    std::string targets_text;
    for (const auto& t : corpus.targets) {
        targets_text += t;
        targets_text += '\n';
    }
    write_file(out / "targets.txt", targets_text);
    manifest.write(out);
    std::cout << "parsed " << corpus.parsed << " events, dropped " << corpus.dropped_urlless
              << " without urls, " << corpus.targets.size() << " target users\n";
    return 0;
}

int cmd_score(const GlobalOpts& opts, const std::string& events_path,
              const std::string& meta_path, std::int64_t threshold,
              std::int64_t buffer_days) {
    Manifest manifest("score", opts);
    manifest.flag("events", events_path);
    manifest.flag("meta", meta_path);
    manifest.flag("threshold", threshold);
    manifest.flag("buffer_days", buffer_days);

    auto corpus = load_corpus(events_path, threshold, opts, manifest);
    const auto metas = load_meta(meta_path, opts, manifest);
    const auto window = infer_window(corpus.events, buffer_days);
    const auto histories = build_histories(corpus.events, corpus.targets, window);
    const auto table = score_table_from_histories(histories, window, metas);

    const fs::path out(opts.out);
    write_file(out / "scores.csv", score_table_to_csv(table));
    manifest.write(out);
    std::cout << "scored " << table.rows.size() << " target users (window " << window.start
              << ".." << window.end << ", buffer_end " << window.buffer_end << ")\n";

    // Spearman between the two metrics over users with both defined.
    std::vector<double> iar, sar;
    for (const auto& row : table.rows) {
        if (row.iar && row.sar) {
            iar.push_back(*row.iar);
            sar.push_back(*row.sar);
        }
    }
    if (iar.size() >= 3) {
        try {
            const auto rho = stats::spearman(iar, sar);
            std::cout << "IAR-SAR Spearman over " << rho.n << " users: " << rho.coefficient
                      << " (p = " << rho.p_value << ")\n";
        } catch (const DataError&) {
            // constant metric on this corpus; nothing to report
        }
    }
    return 0;
}

int cmd_network(const GlobalOpts& opts, const std::string& events_path,
                std::int64_t threshold, std::int64_t buffer_days, const std::string& kind_str) {
    Manifest manifest("network", opts);
    manifest.flag("events", events_path);
    manifest.flag("threshold", threshold);
    manifest.flag("kind", kind_str);

    const auto kind = network_kind_from_string(kind_str);
    auto corpus = load_corpus(events_path, threshold, opts, manifest);
    const auto window = infer_window(corpus.events, buffer_days);
    const auto net = build_friendship_network(corpus.events, corpus.targets, kind);

    const fs::path out(opts.out);
    const std::string stem = "network_" + kind_str;
    write_file(out / (stem + ".edges"), network_to_edge_list(net));
    write_file(out / (stem + ".json"), network_sidecar(net, &window));
    manifest.write(out);
    std::cout << "built " << kind_str << " network: " << net.node_count() << " nodes, "
              << net.edge_count() << " edges\n";
    return 0;
}

int cmd_analyze(const GlobalOpts& opts, const std::string& network_path,
                const std::string& scores_path, const std::string& metric_str,
                double grid_s_width) {
    Manifest manifest("analyze", opts);
    manifest.flag("network", network_path);
    manifest.flag("scores", scores_path);
    manifest.flag("metric", metric_str);
    manifest.flag("grid_s_width", grid_s_width);

    const auto metric = metric_from_string(metric_str);
    const auto net = load_network(network_path, manifest);
    const auto table = load_scores(scores_path, manifest);
    const auto report = analyze_gfp(net, table, metric, grid_s_width);

    const fs::path out(opts.out);
    write_file(out / ("gfp_" + metric_str + ".json"), gfp_report_to_json(report));
    write_file(out / ("grid_" + metric_str + ".csv"), paradox_grid_to_csv(report.grid));
    manifest.write(out);
    std::cout << "metric " << metric_str << ": P = " << report.paradox_probability
              << ", mean_s = " << report.mean_s << ", mean_s_nn = " << report.mean_s_nn
              << ", network gfp " << (report.network_gfp_holds ? "holds" : "does not hold")
              << "\n";
    return 0;
}

int cmd_null(const GlobalOpts& opts, const std::string& network_path,
             const std::string& scores_path, const std::string& metric_str,
             const std::string& model_str, int reps, int swap_mult,
             const std::string& report_path) {
    Manifest manifest("null", opts);
    manifest.flag("network", network_path);
    manifest.flag("scores", scores_path);
    manifest.flag("metric", metric_str);
    manifest.flag("model", model_str);
    manifest.flag("reps", reps);
    manifest.flag("swap_mult", swap_mult);
    manifest.flag("report", report_path);

    const auto metric = metric_from_string(metric_str);
    const auto model = null_model_from_string(model_str);
    const auto net = load_network(network_path, manifest);
    const auto table = load_scores(scores_path, manifest);
    const auto scores = align_scores(net, table, metric);
    const auto block = run_null_block(net, scores, model, reps, swap_mult, opts.seed);

    const fs::path out(opts.out);
    const std::string key = model == NullModel::EdgeSwap ? "baseline1" : "baseline2";
    if (!report_path.empty()) {
        const auto text = read_file(report_path);
        manifest.input(report_path, text);
        auto report = gfp_report_from_json(text);
        if (model == NullModel::EdgeSwap) {
            report.baseline1 = block;
        } else {
            report.baseline2 = block;
        }
        write_file(out / ("gfp_" + metric_str + ".json"), gfp_report_to_json(report));
    } else {
        json j;
        j["metric"] = metric_str;
        j["model"] = std::string(to_string(model));
        j[key] = null_block_to_json(block);
        write_file(out / ("null_" + metric_str + "_" + model_str + ".json"), j.dump(2) + "\n");
    }
    manifest.write(out);
    for (const auto& s : block) {
        std::cout << s.statistic << ": observed " << s.observed << ", null " << s.null_mean
                  << " +/- " << s.null_sd << ", p = " << s.p_value << "\n";
    }
    return 0;
}

int cmd_predict(const GlobalOpts& opts, const std::string& network_path,
                const std::string& scores_path, const std::string& metric_str,
                const std::string& model_str, bool search, double test_frac, int trees,
                int max_features, int max_depth, int min_split, int min_leaf) {
    Manifest manifest("predict", opts);
    manifest.flag("network", network_path);
    manifest.flag("scores", scores_path);
    manifest.flag("metric", metric_str);
    manifest.flag("model", model_str);
    manifest.flag("search", search);
    manifest.flag("test_frac", test_frac);

    const auto metric = metric_from_string(metric_str);
    if (model_str != "linear" && model_str != "forest") {
        throw UsageError("unknown model '" + model_str + "'");
    }
    const auto net = load_network(network_path, manifest);
    const auto table = load_scores(scores_path, manifest);
    const auto features = build_feature_matrix(net, table, metric);
    if (features.n_rows() < 10) throw DataError("predict: not enough complete rows");
    const auto split = split_rows(features.n_rows(), test_frac, opts.seed);

    // Friend average of the target metric is column 0 or 1 by construction.
    const std::size_t friend_col = metric == Metric::Iar ? 0 : 1;
    std::vector<double> friend_avg(features.n_rows());
    for (std::size_t i = 0; i < features.n_rows(); ++i) {
        friend_avg[i] = features.rows[i][friend_col];
    }
    const auto linear = fit_friend_linear(friend_avg, features.target, split);

    const fs::path out(opts.out);
    json j;
    j["metric"] = metric_str;
    j["model"] = model_str;
    j["n_rows"] = features.n_rows();
    j["n_dropped"] = features.n_dropped;
    j["n_train"] = linear.n_train;
    j["n_test"] = linear.n_test;
    j["linear"] = json{{"beta0", linear.fit.beta0},
                       {"beta1", linear.fit.beta1},
                       {"se_beta0", linear.fit.se_beta0},
                       {"se_beta1", linear.fit.se_beta1},
                       {"p_beta0", linear.fit.p_beta0},
                       {"p_beta1", linear.fit.p_beta1},
                       {"r2_train", linear.r2_train},
                       {"r2_test", linear.r2_test}};

    if (model_str == "forest") {
        ForestParams params = forest_defaults(metric);
        if (search) {
            params = random_search(features, 100, 5, opts.seed);
        }
        if (trees > 0) params.n_estimators = trees;
        if (max_features > 0) params.max_features = max_features;
        if (max_depth >= 0) params.max_depth = max_depth;
        if (min_split > 0) params.min_samples_split = min_split;
        if (min_leaf > 0) params.min_samples_leaf = min_leaf;
        params.seed = opts.seed;
        manifest.flag("params", json{{"n_estimators", params.n_estimators},
                                     {"max_features", params.max_features},
                                     {"max_depth", params.max_depth},
                                     {"min_samples_split", params.min_samples_split},
                                     {"min_samples_leaf", params.min_samples_leaf}});

        const auto vif = compute_vif(features);
        const auto forest_report = fit_forest(features, split, params, 5);

        json vif_json = json::object();
        for (std::size_t c = 0; c < features.columns.size(); ++c) {
            if (vif[c]) {
                vif_json[features.columns[c]] = *vif[c];
            } else {
                vif_json[features.columns[c]] = nullptr;  // flagged infinite
            }
        }
        j["vif"] = vif_json;
        j["forest"] = json{{"r2_train", forest_report.r2_train},
                           {"r2_test", forest_report.r2_test},
                           {"r2_defined", forest_report.r2_defined},
                           {"delta_r2_test", forest_report.r2_test - linear.r2_test},
                           {"params", json{{"n_estimators", params.n_estimators},
                                           {"max_features", params.max_features},
                                           {"max_depth", params.max_depth},
                                           {"min_samples_split", params.min_samples_split},
                                           {"min_samples_leaf", params.min_samples_leaf},
                                           {"seed", params.seed}}}};

        std::string importances_csv = "feature,importance\n";
        json imp = json::array();
        for (const auto& [name, value] : forest_report.importances) {
            imp.push_back(json{{"feature", name}, {"importance", value}});
            importances_csv += name + "," + format_csv_double(value) + "\n";
        }
        j["importances"] = imp;
        write_file(out / ("importances_" + metric_str + ".csv"), importances_csv);

        // Refit on the training split only, persisted for reuse.
        std::vector<std::vector<double>> train_rows;
        std::vector<double> train_y;
        for (std::size_t i : split.train) {
            train_rows.push_back(features.rows[i]);
            train_y.push_back(features.target[i]);
        }
        RandomForest forest;
        forest.fit(train_rows, train_y, params);
        write_file(out / ("model_" + metric_str + ".json"), forest.to_json());
    }

    write_file(out / ("fit_" + metric_str + "_" + model_str + ".json"), j.dump(2) + "\n");
    manifest.write(out);
    std::cout << "linear r2_test = " << linear.r2_test;
    if (j.contains("forest")) {
        std::cout << ", forest r2_test = " << j["forest"]["r2_test"].get<double>();
    }
    std::cout << "\n";
    return 0;
}

int cmd_synth(const GlobalOpts& opts, const std::string& config_path) {
    Manifest manifest("synth", opts);
    manifest.flag("config", config_path);

    SynthConfig config;
    if (!config_path.empty()) {
        const auto text = read_file(config_path);
        manifest.input(config_path, text);
        config = synth_config_from_json(text);
    }
    if (config.seed == 0) config.seed = opts.seed;

    const auto corpus = generate_corpus(config);
    const fs::path out(opts.out);
    write_file(out / "events.jsonl", serialize_event_log(corpus.events));
    write_file(out / "meta.jsonl", serialize_user_meta(corpus.metas));
    write_file(out / "truth_network.edges", network_to_edge_list(corpus.truth_network));

    ScoreTable truth;
    for (std::size_t v = 0; v < corpus.truth_network.node_count(); ++v) {
        ScoreRow row;
        row.user = corpus.truth_network.nodes[v];
        row.iar = corpus.planted_iar[v];
        row.sar = corpus.planted_sar[v];
        truth.rows.push_back(row);
    }
    std::sort(truth.rows.begin(), truth.rows.end(),
              [](const ScoreRow& a, const ScoreRow& b) { return a.user < b.user; });
    write_file(out / "truth_scores.csv", score_table_to_csv(truth));

    json summary;
    summary["config"] = json::parse(synth_config_to_json(config));
    summary["achieved_rho_ks"] = corpus.attributes.achieved_rho_ks;
    summary["achieved_homophily"] = corpus.attributes.achieved_homophily;
    summary["nodes"] = corpus.truth_network.node_count();
    summary["edges"] = corpus.truth_network.edge_count();
    summary["events"] = corpus.events.size();
    write_file(out / "synth_summary.json", summary.dump(2) + "\n");
    manifest.write(out);
    std::cout << "generated " << corpus.events.size() << " events over "
              << corpus.truth_network.node_count() << " nodes ("
              << corpus.truth_network.edge_count() << " edges), achieved rho_ks "
              << corpus.attributes.achieved_rho_ks << ", homophily "
              << corpus.attributes.achieved_homophily << "\n";
    return 0;
}

int cmd_report(const GlobalOpts& opts, const std::string& events_path,
               const std::string& meta_path, std::int64_t threshold,
               std::int64_t buffer_days, int reps, int swap_mult, double grid_s_width) {
    Manifest manifest("report", opts);
    manifest.flag("events", events_path);
    manifest.flag("meta", meta_path);
    manifest.flag("threshold", threshold);
    manifest.flag("buffer_days", buffer_days);
    manifest.flag("reps", reps);
    manifest.flag("swap_mult", swap_mult);

    auto corpus = load_corpus(events_path, threshold, opts, manifest);
    const auto metas = load_meta(meta_path, opts, manifest);
    const auto window = infer_window(corpus.events, buffer_days);
    const auto histories = build_histories(corpus.events, corpus.targets, window);
    const auto table = score_table_from_histories(histories, window, metas);

    json rows = json::array();
    std::string csv =
        "network,metric,rho_ks,P_real,P_baseline1,P_baseline2,"
        "mean_s,mean_s_nn_real,mean_s_nn_baseline1,mean_s_nn_baseline2\n";

    for (const auto kind : {NetworkKind::Interaction, NetworkKind::Retweet,
                            NetworkKind::Mention}) {
        const auto net = build_friendship_network(corpus.events, corpus.targets, kind);
        for (const auto metric : {Metric::Iar, Metric::Sar}) {
            json row;
            row["network"] = std::string(to_string(kind));
            row["metric"] = std::string(to_string(metric));
            try {
                const auto report = analyze_gfp(net, table, metric, grid_s_width);
                const auto scores = align_scores(net, table, metric);
                const auto b1 = run_null_block(net, scores, NullModel::EdgeSwap, reps,
                                               swap_mult, opts.seed);
                const auto b2 = run_null_block(net, scores, NullModel::NeighborReassign,
                                               reps, swap_mult, opts.seed);
                row["rho_ks"] = report.rho_ks.coefficient;
                row["rho_ks_p"] = report.rho_ks.p_value;
                row["P_real"] = report.paradox_probability;
                row["P_baseline1"] = b1[1].null_mean;
                row["P_baseline2"] = b2[1].null_mean;
                row["mean_s"] = report.mean_s;
                row["mean_s_nn_real"] = report.mean_s_nn;
                row["mean_s_nn_baseline1"] = b1[2].null_mean;
                row["mean_s_nn_baseline2"] = b2[2].null_mean;
                row["network_gfp_holds"] = report.network_gfp_holds;
                row["homophily"] = report.homophily.coefficient;
                row["homophily_p_baseline1"] = b1[0].p_value;
                row["homophily_p_baseline2"] = b2[0].p_value;
                row["n_nodes_used"] = report.n_nodes_used;
                csv += std::string(to_string(kind)) + "," + std::string(to_string(metric)) +
                       "," + format_csv_double(report.rho_ks.coefficient) + "," +
                       format_csv_double(report.paradox_probability) + "," +
                       format_csv_double(b1[1].null_mean) + "," +
                       format_csv_double(b2[1].null_mean) + "," +
                       format_csv_double(report.mean_s) + "," +
                       format_csv_double(report.mean_s_nn) + "," +
                       format_csv_double(b1[2].null_mean) + "," +
                       format_csv_double(b2[2].null_mean) + "\n";
            } catch (const DataError& ex) {
                row["error"] = ex.what();
                csv += std::string(to_string(kind)) + "," + std::string(to_string(metric)) +
                       ",,,,,,,,\n";
            }
            rows.push_back(std::move(row));
        }
    }

    json j;
    j["window"] = json{{"start", window.start},
                       {"buffer_end", window.buffer_end},
                       {"end", window.end}};
    j["threshold"] = threshold;
    j["rows"] = rows;
    const fs::path out(opts.out);
    write_file(out / "report.json", j.dump(2) + "\n");
    write_file(out / "report.csv", csv);
    manifest.write(out);
    std::cout << "report written for " << rows.size() << " network/metric combinations\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Influence-susceptibility analytics over interaction event logs"};
    app.require_subcommand(1);

    GlobalOpts opts;
    app.add_option("--out", opts.out, "Output directory")->envname("SUSCEPT_OUT");
    app.add_option("--seed", opts.seed, "Random seed")->envname("SUSCEPT_SEED");
    app.add_flag("--strict", opts.strict, "Abort on malformed input lines")
        ->envname("SUSCEPT_STRICT");

    std::string events_path, meta_path, network_path, scores_path, config_path, report_path;
    std::string kind_str = "interaction", metric_str = "iar", model_str = "swap";
    std::int64_t threshold = 10, buffer_days = 60;
    double grid_s_width = 0.05, test_frac = 0.2;
    int reps = 100, swap_mult = 10;
    bool search = false;
    int trees = 0, max_features = 0, max_depth = -1, min_split = 0, min_leaf = 0;

    auto* ingest = app.add_subcommand("ingest", "Parse, filter and select target users");
    ingest->add_option("--events", events_path, "Event log (jsonl)")->required()
        ->envname("SUSCEPT_EVENTS");
    ingest->add_option("--threshold", threshold, "Minimum shared URLs per target user")
        ->envname("SUSCEPT_THRESHOLD");

    auto* score = app.add_subcommand("score", "Compute IAR/SAR susceptibility scores");
    score->add_option("--events", events_path, "Event log (jsonl)")->required()
        ->envname("SUSCEPT_EVENTS");
    score->add_option("--meta", meta_path, "User metadata (jsonl)")->envname("SUSCEPT_META");
    score->add_option("--threshold", threshold, "Minimum shared URLs per target user")
        ->envname("SUSCEPT_THRESHOLD");
    score->add_option("--buffer-days", buffer_days, "Adoption buffer length in days")
        ->envname("SUSCEPT_BUFFER_DAYS");

    auto* network = app.add_subcommand("network", "Build a reciprocal friendship network");
    network->add_option("--events", events_path, "Event log (jsonl)")->required()
        ->envname("SUSCEPT_EVENTS");
    network->add_option("--threshold", threshold, "Minimum shared URLs per target user")
        ->envname("SUSCEPT_THRESHOLD");
    network->add_option("--buffer-days", buffer_days, "Adoption buffer length in days")
        ->envname("SUSCEPT_BUFFER_DAYS");
    network->add_option("--kind", kind_str, "interaction|retweet|mention")
        ->envname("SUSCEPT_KIND");

    auto* analyze = app.add_subcommand("analyze", "Homophily and friendship-paradox report");
    analyze->add_option("--network", network_path, "Edge list file")->required()
        ->envname("SUSCEPT_NETWORK");
    analyze->add_option("--scores", scores_path, "Score table csv")->required()
        ->envname("SUSCEPT_SCORES");
    analyze->add_option("--metric", metric_str, "iar|sar")->envname("SUSCEPT_METRIC");
    analyze->add_option("--grid-s-width", grid_s_width, "Score bin width for the paradox grid")
        ->envname("SUSCEPT_GRID_S_WIDTH");

    auto* null_cmd = app.add_subcommand("null", "Null-model significance baselines");
    null_cmd->add_option("--network", network_path, "Edge list file")->required()
        ->envname("SUSCEPT_NETWORK");
    null_cmd->add_option("--scores", scores_path, "Score table csv")->required()
        ->envname("SUSCEPT_SCORES");
    null_cmd->add_option("--metric", metric_str, "iar|sar")->envname("SUSCEPT_METRIC");
    null_cmd->add_option("--model", model_str, "swap|reassign")->envname("SUSCEPT_MODEL");
    null_cmd->add_option("--reps", reps, "Number of null replicates")
        ->envname("SUSCEPT_REPS");
    null_cmd->add_option("--swap-mult", swap_mult, "Attempted swaps per edge")
        ->envname("SUSCEPT_SWAP_MULT");
    null_cmd->add_option("--report", report_path, "Existing gfp report to extend")
        ->envname("SUSCEPT_REPORT");

    auto* predict = app.add_subcommand("predict", "Linear and random-forest prediction");
    predict->add_option("--network", network_path, "Edge list file")->required()
        ->envname("SUSCEPT_NETWORK");
    predict->add_option("--scores", scores_path, "Score table csv")->required()
        ->envname("SUSCEPT_SCORES");
    predict->add_option("--metric", metric_str, "iar|sar")->envname("SUSCEPT_METRIC");
    predict->add_option("--model", model_str, "linear|forest")->envname("SUSCEPT_MODEL");
    predict->add_flag("--search", search, "Random-search forest parameters (100 x 5-fold)")
        ->envname("SUSCEPT_SEARCH");
    predict->add_option("--test-frac", test_frac, "Held-out fraction")
        ->envname("SUSCEPT_TEST_FRAC");
    predict->add_option("--trees", trees, "Override n_estimators")->envname("SUSCEPT_TREES");
    predict->add_option("--max-features", max_features, "Override max_features")
        ->envname("SUSCEPT_MAX_FEATURES");
    predict->add_option("--max-depth", max_depth, "Override max_depth (0 = unlimited)")
        ->envname("SUSCEPT_MAX_DEPTH");
    predict->add_option("--min-split", min_split, "Override min_samples_split")
        ->envname("SUSCEPT_MIN_SPLIT");
    predict->add_option("--min-leaf", min_leaf, "Override min_samples_leaf")
        ->envname("SUSCEPT_MIN_LEAF");

    auto* synth = app.add_subcommand("synth", "Generate a synthetic ground-truth corpus");
    synth->add_option("--config", config_path, "Synth config (json)")
        ->envname("SUSCEPT_CONFIG");

    auto* report_cmd = app.add_subcommand("report", "Aggregate summary across networks/metrics");
    report_cmd->add_option("--events", events_path, "Event log (jsonl)")->required()
        ->envname("SUSCEPT_EVENTS");
    report_cmd->add_option("--meta", meta_path, "User metadata (jsonl)")
        ->envname("SUSCEPT_META");
    report_cmd->add_option("--threshold", threshold, "Minimum shared URLs per target user")
        ->envname("SUSCEPT_THRESHOLD");
    report_cmd->add_option("--buffer-days", buffer_days, "Adoption buffer length in days")
        ->envname("SUSCEPT_BUFFER_DAYS");
    report_cmd->add_option("--reps", reps, "Null replicates per baseline")
        ->envname("SUSCEPT_REPS");
    report_cmd->add_option("--swap-mult", swap_mult, "Attempted swaps per edge")
        ->envname("SUSCEPT_SWAP_MULT");
    report_cmd->add_option("--grid-s-width", grid_s_width, "Score bin width")
        ->envname("SUSCEPT_GRID_S_WIDTH");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (ingest->parsed()) return cmd_ingest(opts, events_path, threshold);
        if (score->parsed()) {
            return cmd_score(opts, events_path, meta_path, threshold, buffer_days);
        }
        if (network->parsed()) {
            return cmd_network(opts, events_path, threshold, buffer_days, kind_str);
        }
        if (analyze->parsed()) {
            return cmd_analyze(opts, network_path, scores_path, metric_str, grid_s_width);
        }
        if (null_cmd->parsed()) {
            return cmd_null(opts, network_path, scores_path, metric_str, model_str, reps,
                            swap_mult, report_path);
        }
        if (predict->parsed()) {
            return cmd_predict(opts, network_path, scores_path, metric_str, model_str, search,
                               test_frac, trees, max_features, max_depth, min_split, min_leaf);
        }
        if (synth->parsed()) return cmd_synth(opts, config_path);
        if (report_cmd->parsed()) {
            return cmd_report(opts, events_path, meta_path, threshold, buffer_days, reps,
                              swap_mult, grid_s_width);
        }
        throw UsageError("no subcommand");
    } catch (const UsageError& ex) {
        std::cerr << "usage error: " << ex.what() << "\n";
        return 1;
    } catch (const DataError& ex) {
        std::cerr << "data error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "internal error: " << ex.what() << "\n";
        return 3;
    }
}

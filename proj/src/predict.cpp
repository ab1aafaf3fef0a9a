#include "suscept/predict.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include <json.hpp>

namespace suscept {

namespace {

using nlohmann::json;

// Least-squares R2 of y on the selected columns plus an intercept. Modified
// Gram-Schmidt over the design columns; linearly dependent columns drop out
// of the basis, so perfect collinearity among the regressors is harmless.
double regression_r2(const std::vector<std::vector<double>>& rows,
                     const std::vector<int>& cols, const std::vector<double>& y) {
    const std::size_t n = rows.size();
    const std::size_t p = cols.size() + 1;  // intercept first
    if (n <= p) throw DataError("regression_r2: not enough rows");

    std::vector<std::vector<long double>> basis;
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<long double> v(n);
        long double norm0 = 0.0L;
        for (std::size_t i = 0; i < n; ++i) {
            v[i] = j == 0 ? 1.0L : rows[i][static_cast<std::size_t>(cols[j - 1])];
            norm0 += v[i] * v[i];
        }
        for (const auto& b : basis) {
            long double dot = 0.0L;
            for (std::size_t i = 0; i < n; ++i) dot += v[i] * b[i];
            for (std::size_t i = 0; i < n; ++i) v[i] -= dot * b[i];
        }
        long double norm = 0.0L;
        for (std::size_t i = 0; i < n; ++i) norm += v[i] * v[i];
        if (norm <= norm0 * 1e-24L) continue;  // dependent column
        const long double inv = 1.0L / std::sqrt(norm);
        for (auto& x : v) x *= inv;
        basis.push_back(std::move(v));
    }

    std::vector<long double> fit(n, 0.0L);
    for (const auto& b : basis) {
        long double dot = 0.0L;
        for (std::size_t i = 0; i < n; ++i) dot += y[i] * b[i];
        for (std::size_t i = 0; i < n; ++i) fit[i] += dot * b[i];
    }

    long double mean_y = 0.0L;
    for (double v : y) mean_y += v;
    mean_y /= n;
    long double sse = 0.0L, sst = 0.0L;
    for (std::size_t i = 0; i < n; ++i) {
        const long double r = y[i] - fit[i];
        sse += r * r;
        const long double d = y[i] - mean_y;
        sst += d * d;
    }
    if (sst <= 0.0L) throw DataError("regression_r2: constant response");
    return static_cast<double>(1.0L - sse / sst);
}

struct SplitChoice {
    bool found = false;
    int column = -1;
    double threshold = 0.0;
    double gain = 0.0;  // SSE reduction
};

// Greedy CART split over the sampled columns. Threshold is the midpoint
// between adjacent distinct values. Columns are scanned in ascending index
// order and thresholds ascending, so requiring a strictly better gain breaks
// ties toward the lowest column index, then the lowest threshold.
SplitChoice best_split(const std::vector<std::vector<double>>& rows,
                       std::span<const double> target,
                       const std::vector<std::size_t>& samples,
                       const std::vector<int>& columns, int min_samples_leaf,
                       std::vector<std::size_t>& scratch) {
    const std::size_t m = samples.size();
    SplitChoice best;

    long double total = 0.0L, total_sq = 0.0L;
    for (std::size_t i : samples) {
        total += target[i];
        total_sq += target[i] * target[i];
    }
    const long double parent_sse = total_sq - total * total / static_cast<long double>(m);

    std::vector<int> ordered_columns = columns;
    std::sort(ordered_columns.begin(), ordered_columns.end());

    for (int col : ordered_columns) {
        scratch = samples;
        std::sort(scratch.begin(), scratch.end(), [&](std::size_t a, std::size_t b) {
            const double va = rows[a][static_cast<std::size_t>(col)];
            const double vb = rows[b][static_cast<std::size_t>(col)];
            if (va != vb) return va < vb;
            return a < b;
        });

        long double left_sum = 0.0L, left_sq = 0.0L;
        for (std::size_t k = 0; k + 1 < m; ++k) {
            const double y = target[scratch[k]];
            left_sum += y;
            left_sq += y * y;
            const std::size_t nl = k + 1;
            const std::size_t nr = m - nl;
            if (nl < static_cast<std::size_t>(min_samples_leaf) ||
                nr < static_cast<std::size_t>(min_samples_leaf)) {
                continue;
            }
            const double lo = rows[scratch[k]][static_cast<std::size_t>(col)];
            const double hi = rows[scratch[k + 1]][static_cast<std::size_t>(col)];
            if (lo == hi) continue;

            const long double right_sum = total - left_sum;
            const long double right_sq = total_sq - left_sq;
            const long double child_sse =
                (left_sq - left_sum * left_sum / static_cast<long double>(nl)) +
                (right_sq - right_sum * right_sum / static_cast<long double>(nr));
            const double gain = static_cast<double>(parent_sse - child_sse);
            if (gain > best.gain) {
                best.found = true;
                best.column = col;
                best.threshold = lo + 0.5 * (hi - lo);
                best.gain = gain;
            }
        }
    }
    return best;
}

void grow_tree(const std::vector<std::vector<double>>& rows, std::span<const double> target,
               std::vector<std::size_t> samples, const ForestParams& params, Rng& rng,
               std::vector<TreeNode>& nodes, int depth, int node_index) {
    auto make_leaf = [&](int idx, const std::vector<std::size_t>& s) {
        long double sum = 0.0L;
        for (std::size_t i : s) sum += target[i];
        nodes[static_cast<std::size_t>(idx)].column = -1;
        nodes[static_cast<std::size_t>(idx)].leaf_value =
            static_cast<double>(sum / static_cast<long double>(s.size()));
    };

    const std::size_t m = samples.size();
    const bool depth_ok = params.max_depth == 0 || depth < params.max_depth;
    if (!depth_ok || m < static_cast<std::size_t>(params.min_samples_split) ||
        m < 2 * static_cast<std::size_t>(params.min_samples_leaf)) {
        make_leaf(node_index, samples);
        return;
    }

    const int n_cols = static_cast<int>(rows.front().size());
    const int k = std::min(params.max_features, n_cols);
    const auto sampled = rng.sample_indices(static_cast<std::size_t>(n_cols),
                                            static_cast<std::size_t>(k));
    std::vector<int> columns(sampled.begin(), sampled.end());

    std::vector<std::size_t> scratch;
    const SplitChoice split = best_split(rows, target, samples, columns,
                                         params.min_samples_leaf, scratch);
    if (!split.found) {
        make_leaf(node_index, samples);
        return;
    }

    std::vector<std::size_t> left, right;
    left.reserve(m);
    right.reserve(m);
    for (std::size_t i : samples) {
        if (rows[i][static_cast<std::size_t>(split.column)] <= split.threshold) {
            left.push_back(i);
        } else {
            right.push_back(i);
        }
    }

    const int left_index = static_cast<int>(nodes.size());
    nodes.emplace_back();
    const int right_index = static_cast<int>(nodes.size());
    nodes.emplace_back();
    nodes[static_cast<std::size_t>(node_index)].column = split.column;
    nodes[static_cast<std::size_t>(node_index)].threshold = split.threshold;
    nodes[static_cast<std::size_t>(node_index)].left = left_index;
    nodes[static_cast<std::size_t>(node_index)].right = right_index;

    grow_tree(rows, target, std::move(left), params, rng, nodes, depth + 1, left_index);
    grow_tree(rows, target, std::move(right), params, rng, nodes, depth + 1, right_index);
}

std::vector<TreeNode> fit_tree(const std::vector<std::vector<double>>& rows,
                               std::span<const double> target, const ForestParams& params,
                               std::uint64_t tree_seed) {
    Rng rng(tree_seed);
    const std::size_t n = rows.size();
    std::vector<std::size_t> samples(n);
    for (std::size_t i = 0; i < n; ++i) samples[i] = rng.index(n);  // bootstrap

    std::vector<TreeNode> nodes;
    nodes.emplace_back();
    grow_tree(rows, target, std::move(samples), params, rng, nodes, 0, 0);
    return nodes;
}

double tree_predict(const std::vector<TreeNode>& nodes, std::span<const double> row) {
    int idx = 0;
    while (nodes[static_cast<std::size_t>(idx)].column >= 0) {
        const auto& node = nodes[static_cast<std::size_t>(idx)];
        idx = row[static_cast<std::size_t>(node.column)] <= node.threshold ? node.left
                                                                           : node.right;
    }
    return nodes[static_cast<std::size_t>(idx)].leaf_value;
}

void validate_params(const ForestParams& params, std::size_t n_cols) {
    if (params.n_estimators < 1) throw DataError("forest: n_estimators must be >= 1");
    if (params.max_features < 1 ||
        params.max_features > static_cast<int>(n_cols)) {
        throw DataError("forest: max_features out of range");
    }
    if (params.max_depth < 0) throw DataError("forest: max_depth must be >= 0");
    if (params.min_samples_split < 2) throw DataError("forest: min_samples_split must be >= 2");
    if (params.min_samples_leaf < 1) throw DataError("forest: min_samples_leaf must be >= 1");
}

}  // namespace

FeatureMatrix build_feature_matrix(const FriendshipNetwork& net, const ScoreTable& table,
                                   Metric target, Exec exec) {
    const auto iar = align_scores(net, table, Metric::Iar);
    const auto sar = align_scores(net, table, Metric::Sar);
    const auto friends_iar = weighted_friend_average(net, iar);
    const auto friends_sar = weighted_friend_average(net, sar);
    const auto structural = node_features(net, exec);

    FeatureMatrix fm;
    fm.columns = kFeatureColumns;
    fm.target_metric = target;
    for (std::size_t v = 0; v < net.nodes.size(); ++v) {
        const std::string& user = net.nodes[v];
        const ScoreRow* row = table.find(user);
        const auto own = target == Metric::Iar ? iar[v] : sar[v];
        const auto fi = friends_iar.find(user);
        const auto fs = friends_sar.find(user);
        const bool complete = row && own.has_value() && fi != friends_iar.end() &&
                              fs != friends_sar.end() && row->followers_count &&
                              row->friends_count && row->statuses_count &&
                              row->favorites_count;
        if (!complete) {
            ++fm.n_dropped;
            continue;
        }
        fm.users.push_back(user);
        fm.rows.push_back({fi->second, fs->second,
                           static_cast<double>(*row->followers_count),
                           static_cast<double>(*row->friends_count),
                           static_cast<double>(*row->favorites_count),
                           static_cast<double>(*row->statuses_count),
                           structural[v].degree_centrality,
                           structural[v].eigenvector_centrality,
                           structural[v].clustering_coefficient});
        fm.target.push_back(*own);
    }
    return fm;
}

ForestParams forest_defaults(Metric metric) {
    if (metric == Metric::Iar) return {750, 4, 70, 5, 2, 0};
    return {800, 4, 80, 10, 2, 0};
}

TrainTestSplit split_rows(std::size_t n, double test_frac, std::uint64_t seed) {
    if (!(test_frac > 0.0 && test_frac < 1.0)) throw DataError("split_rows: bad test fraction");
    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    Rng rng(seed);
    rng.shuffle(idx);
    const std::size_t n_test = std::max<std::size_t>(1, static_cast<std::size_t>(
                                                            std::llround(test_frac * n)));
    if (n_test >= n) throw DataError("split_rows: not enough rows for the split");
    TrainTestSplit split;
    split.test.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(n_test));
    split.train.assign(idx.begin() + static_cast<std::ptrdiff_t>(n_test), idx.end());
    return split;
}

std::optional<double> r_squared(std::span<const double> truth,
                                std::span<const double> prediction) {
    if (truth.size() != prediction.size() || truth.empty()) {
        throw DataError("r_squared: size mismatch");
    }
    long double mean = 0.0L;
    for (double v : truth) mean += v;
    mean /= truth.size();
    long double sse = 0.0L, sst = 0.0L;
    for (std::size_t i = 0; i < truth.size(); ++i) {
        const long double r = truth[i] - prediction[i];
        sse += r * r;
        const long double d = truth[i] - mean;
        sst += d * d;
    }
    if (sst <= 0.0L) return std::nullopt;
    return static_cast<double>(1.0L - sse / sst);
}

LinearFitReport fit_friend_linear(std::span<const double> friend_avg,
                                  std::span<const double> own, const TrainTestSplit& split) {
    if (friend_avg.size() != own.size()) throw DataError("fit_friend_linear: size mismatch");
    std::vector<double> x_train, y_train;
    for (std::size_t i : split.train) {
        x_train.push_back(friend_avg[i]);
        y_train.push_back(own[i]);
    }
    LinearFitReport report;
    report.fit = stats::ols_simple(x_train, y_train);
    report.n_train = split.train.size();
    report.n_test = split.test.size();
    report.r2_train = report.fit.r2;

    std::vector<double> y_test, pred;
    for (std::size_t i : split.test) {
        y_test.push_back(own[i]);
        pred.push_back(report.fit.beta0 + report.fit.beta1 * friend_avg[i]);
    }
    report.r2_test = r_squared(y_test, pred).value_or(0.0);
    return report;
}

std::vector<std::optional<double>> compute_vif(const FeatureMatrix& features) {
    const std::size_t p = features.n_cols();
    if (features.n_rows() < p + 2) throw DataError("compute_vif: not enough rows");
    for (std::size_t j = 0; j < p; ++j) {
        const double first = features.rows.front()[j];
        bool constant = true;
        for (const auto& row : features.rows) {
            if (row[j] != first) {
                constant = false;
                break;
            }
        }
        if (constant) throw DataError("compute_vif: constant column " + features.columns[j]);
    }

    std::vector<std::optional<double>> vif(p);
    for (std::size_t j = 0; j < p; ++j) {
        std::vector<int> others;
        for (std::size_t k = 0; k < p; ++k) {
            if (k != j) others.push_back(static_cast<int>(k));
        }
        std::vector<double> y;
        y.reserve(features.n_rows());
        for (const auto& row : features.rows) y.push_back(row[j]);
        const double r2 = regression_r2(features.rows, others, y);
        if (r2 >= 1.0 - 1e-12) {
            vif[j] = std::nullopt;  // flagged infinite
        } else {
            vif[j] = 1.0 / (1.0 - r2);
        }
    }
    return vif;
}

void RandomForest::fit(const std::vector<std::vector<double>>& rows,
                       std::span<const double> target, const ForestParams& params, Exec exec) {
    if (rows.empty()) throw DataError("forest: empty training set");
    if (rows.size() != target.size()) throw DataError("forest: row/target size mismatch");
    validate_params(params, rows.front().size());

    params_ = params;
    trees_.assign(static_cast<std::size_t>(params.n_estimators), {});
    const int n_trees = params.n_estimators;
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int t = 0; t < n_trees; ++t) {
            trees_[static_cast<std::size_t>(t)] =
                fit_tree(rows, target, params,
                         splitmix64(params.seed ^ (0x9e3779b97f4a7c15ULL * (t + 1))));
        }
    } else {
        for (int t = 0; t < n_trees; ++t) {
            trees_[static_cast<std::size_t>(t)] =
                fit_tree(rows, target, params,
                         splitmix64(params.seed ^ (0x9e3779b97f4a7c15ULL * (t + 1))));
        }
    }
}

double RandomForest::predict_row(std::span<const double> row) const {
    if (trees_.empty()) throw InternalError("forest: predict before fit");
    long double sum = 0.0L;
    for (const auto& tree : trees_) sum += tree_predict(tree, row);
    return static_cast<double>(sum / static_cast<long double>(trees_.size()));
}

std::vector<double> RandomForest::predict(const std::vector<std::vector<double>>& rows,
                                          Exec exec) const {
    std::vector<double> out(rows.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < rows.size(); ++i) out[i] = predict_row(rows[i]);
    } else {
        for (std::size_t i = 0; i < rows.size(); ++i) out[i] = predict_row(rows[i]);
    }
    return out;
}

std::string RandomForest::to_json() const {
    json j;
    j["format"] = "suscept-forest";
    j["version"] = 1;
    j["params"] = json{{"n_estimators", params_.n_estimators},
                       {"max_features", params_.max_features},
                       {"max_depth", params_.max_depth},
                       {"min_samples_split", params_.min_samples_split},
                       {"min_samples_leaf", params_.min_samples_leaf},
                       {"seed", params_.seed}};
    json trees = json::array();
    for (const auto& tree : trees_) {
        json nodes = json::array();
        for (const auto& n : tree) {
            nodes.push_back(json{{"column", n.column},
                                 {"threshold", n.threshold},
                                 {"left", n.left},
                                 {"right", n.right},
                                 {"leaf_value", n.leaf_value}});
        }
        trees.push_back(std::move(nodes));
    }
    j["trees"] = std::move(trees);
    return j.dump() + "\n";
}

RandomForest RandomForest::from_json(std::string_view text) {
    json j = json::parse(text);
    if (j.at("format").get<std::string>() != "suscept-forest" ||
        j.at("version").get<int>() != 1) {
        throw DataError("forest: unsupported model file");
    }
    RandomForest forest;
    const auto& p = j.at("params");
    forest.params_.n_estimators = p.at("n_estimators").get<int>();
    forest.params_.max_features = p.at("max_features").get<int>();
    forest.params_.max_depth = p.at("max_depth").get<int>();
    forest.params_.min_samples_split = p.at("min_samples_split").get<int>();
    forest.params_.min_samples_leaf = p.at("min_samples_leaf").get<int>();
    forest.params_.seed = p.at("seed").get<std::uint64_t>();
    for (const auto& tree : j.at("trees")) {
        std::vector<TreeNode> nodes;
        for (const auto& n : tree) {
            nodes.push_back({n.at("column").get<int>(), n.at("threshold").get<double>(),
                             n.at("left").get<int>(), n.at("right").get<int>(),
                             n.at("leaf_value").get<double>()});
        }
        forest.trees_.push_back(std::move(nodes));
    }
    return forest;
}

ForestFitReport fit_forest(const FeatureMatrix& features, const TrainTestSplit& split,
                           const ForestParams& params, int importance_shuffles, Exec exec) {
    if (split.train.empty() || split.test.empty()) throw DataError("fit_forest: empty split");

    std::vector<std::vector<double>> train_rows, test_rows;
    std::vector<double> train_y, test_y;
    for (std::size_t i : split.train) {
        train_rows.push_back(features.rows[i]);
        train_y.push_back(features.target[i]);
    }
    for (std::size_t i : split.test) {
        test_rows.push_back(features.rows[i]);
        test_y.push_back(features.target[i]);
    }

    RandomForest forest;
    forest.fit(train_rows, train_y, params, exec);

    ForestFitReport report;
    report.params = params;
    report.n_train = split.train.size();
    report.n_test = split.test.size();

    const auto train_pred = forest.predict(train_rows, exec);
    const auto test_pred = forest.predict(test_rows, exec);
    const auto r2_train = r_squared(train_y, train_pred);
    const auto r2_test = r_squared(test_y, test_pred);
    report.r2_defined = r2_train.has_value() && r2_test.has_value();
    report.r2_train = r2_train.value_or(0.0);
    report.r2_test = r2_test.value_or(0.0);

    if (importance_shuffles > 0) {
        report.importances = permutation_importance(forest, features, split.test,
                                                    importance_shuffles, params.seed, exec);
    }
    return report;
}

std::vector<std::pair<std::string, double>> permutation_importance(
    const RandomForest& forest, const FeatureMatrix& features,
    const std::vector<std::size_t>& eval_rows, int n_shuffles, std::uint64_t seed,
    Exec exec) {
    if (eval_rows.empty()) throw DataError("permutation_importance: empty evaluation set");
    std::vector<std::vector<double>> rows;
    std::vector<double> truth;
    for (std::size_t i : eval_rows) {
        rows.push_back(features.rows[i]);
        truth.push_back(features.target[i]);
    }
    const auto base_pred = forest.predict(rows, exec);
    const auto base_r2 = r_squared(truth, base_pred);
    if (!base_r2) throw DataError("permutation_importance: constant evaluation target");

    const std::size_t p = features.n_cols();
    std::vector<double> drop(p, 0.0);
    const int n_cols = static_cast<int>(p);

    auto column_drop = [&](int j) {
        Rng rng(splitmix64(seed ^ (0x2545f4914f6cdd1dULL * (j + 1))));
        std::vector<std::vector<double>> permuted = rows;
        long double acc = 0.0L;
        for (int s = 0; s < n_shuffles; ++s) {
            std::vector<std::size_t> order(rows.size());
            std::iota(order.begin(), order.end(), 0);
            rng.shuffle(order);
            for (std::size_t i = 0; i < rows.size(); ++i) {
                permuted[i][static_cast<std::size_t>(j)] =
                    rows[order[i]][static_cast<std::size_t>(j)];
            }
            const auto pred = forest.predict(permuted, Exec::Serial);
            acc += *base_r2 - r_squared(truth, pred).value_or(0.0);
        }
        drop[static_cast<std::size_t>(j)] = static_cast<double>(acc / n_shuffles);
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int j = 0; j < n_cols; ++j) column_drop(j);
    } else {
        for (int j = 0; j < n_cols; ++j) column_drop(j);
    }

    std::vector<std::pair<std::string, double>> out;
    for (std::size_t j = 0; j < p; ++j) out.emplace_back(features.columns[j], drop[j]);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.second != b.second) return a.second > b.second;
        return a.first < b.first;
    });
    return out;
}

double cross_val_r2(const FeatureMatrix& features, const ForestParams& params, int folds,
                    std::uint64_t fold_seed, Exec exec) {
    if (folds < 2) throw DataError("cross_val_r2: folds must be >= 2");
    const std::size_t n = features.n_rows();
    if (n < static_cast<std::size_t>(folds) * 2) {
        throw DataError("cross_val_r2: not enough rows for the folds");
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    Rng fold_rng(fold_seed);
    fold_rng.shuffle(order);

    long double acc = 0.0L;
    int used_folds = 0;
    for (int f = 0; f < folds; ++f) {
        std::vector<std::vector<double>> train_rows, test_rows;
        std::vector<double> train_y, test_y;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t row = order[i];
            if (static_cast<int>(i % static_cast<std::size_t>(folds)) == f) {
                test_rows.push_back(features.rows[row]);
                test_y.push_back(features.target[row]);
            } else {
                train_rows.push_back(features.rows[row]);
                train_y.push_back(features.target[row]);
            }
        }
        RandomForest forest;
        forest.fit(train_rows, train_y, params, exec);
        const auto r2 = r_squared(test_y, forest.predict(test_rows, exec));
        if (r2) {
            acc += *r2;
            ++used_folds;
        }
    }
    if (used_folds == 0) throw DataError("cross_val_r2: constant target in every fold");
    return static_cast<double>(acc / used_folds);
}

ForestParams random_search(const FeatureMatrix& features, int n_settings, int folds,
                           std::uint64_t seed, Exec exec) {
    if (n_settings < 1) throw DataError("random_search: n_settings must be >= 1");

    Rng rng(seed);
    std::vector<ForestParams> candidates;
    for (int s = 0; s < n_settings; ++s) {
        ForestParams p;
        p.n_estimators = static_cast<int>(100 + 50 * rng.uniform_int(0, 18));
        p.max_features = static_cast<int>(rng.uniform_int(1, static_cast<int>(features.n_cols())));
        const std::int64_t depth_pick = rng.uniform_int(0, 10);  // 10..100 step 10, then unlimited
        p.max_depth = depth_pick == 10 ? 0 : static_cast<int>(10 * (depth_pick + 1));
        const std::int64_t split_pick = rng.uniform_int(0, 2);
        p.min_samples_split = split_pick == 0 ? 2 : split_pick == 1 ? 5 : 10;
        const std::int64_t leaf_pick = rng.uniform_int(0, 2);
        p.min_samples_leaf = leaf_pick == 0 ? 1 : leaf_pick == 1 ? 2 : 4;
        p.seed = splitmix64(seed ^ static_cast<std::uint64_t>(s));
        candidates.push_back(p);
    }

    const std::uint64_t fold_seed = splitmix64(seed ^ 0xf01d5eedULL);
    double best_score = -std::numeric_limits<double>::infinity();
    std::size_t best_index = 0;
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        const double score = cross_val_r2(features, candidates[c], folds, fold_seed, exec);
        if (score > best_score) {
            best_score = score;
            best_index = c;
        }
    }
    return candidates[best_index];
}

}  // namespace suscept

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "suscept/analytics.hpp"
#include "suscept/common.hpp"
#include "suscept/history.hpp"
#include "suscept/network.hpp"
#include "suscept/stats.hpp"

namespace suscept {

// Fixed feature column order for the regression models.
inline const std::vector<std::string> kFeatureColumns = {
    "friends_iar",          "friends_sar",          "followers_count",
    "friends_count",        "favorites_count",      "statuses_count",
    "degree_centrality",    "eigenvector_centrality", "clustering_coefficient",
};

struct FeatureMatrix {
    std::vector<std::string> columns;  // == kFeatureColumns
    std::vector<std::string> users;    // row order
    std::vector<std::vector<double>> rows;
    std::vector<double> target;
    Metric target_metric = Metric::Iar;
    std::size_t n_dropped = 0;  // rows removed for undefined entries

    std::size_t n_rows() const { return rows.size(); }
    std::size_t n_cols() const { return columns.size(); }
};

/// Joins score table, friend averages, metadata, and structural features;
/// rows with any undefined entry (or undefined target) are dropped.
FeatureMatrix build_feature_matrix(const FriendshipNetwork& net, const ScoreTable& table,
                                   Metric target, Exec exec = Exec::Parallel);

struct ForestParams {
    int n_estimators = 0;
    int max_features = 0;
    int max_depth = 0;  // 0 = unlimited
    int min_samples_split = 2;
    int min_samples_leaf = 1;
    std::uint64_t seed = 0;
};

/// Tuned defaults per target metric.
ForestParams forest_defaults(Metric metric);

struct LinearFitReport {
    stats::OlsFit fit;
    double r2_train = 0.0;
    double r2_test = 0.0;
    std::size_t n_train = 0;
    std::size_t n_test = 0;
};

struct TrainTestSplit {
    std::vector<std::size_t> train;
    std::vector<std::size_t> test;
};

/// Seeded shuffle split; test_frac in (0, 1).
TrainTestSplit split_rows(std::size_t n, double test_frac, std::uint64_t seed);

/// Eq.-style simple regression of the metric on the friend average.
LinearFitReport fit_friend_linear(std::span<const double> friend_avg,
                                  std::span<const double> own,
                                  const TrainTestSplit& split);

/// Variance inflation factors: VIF_j = 1 / (1 - R2_j) from regressing column
/// j on the remaining columns with an intercept. Perfect collinearity is
/// reported as an unset value (flagged infinite).
std::vector<std::optional<double>> compute_vif(const FeatureMatrix& features);

// CART regression tree node; leaves have column == -1.
struct TreeNode {
    int column = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    double leaf_value = 0.0;
};

class RandomForest {
public:
    void fit(const std::vector<std::vector<double>>& rows, std::span<const double> target,
             const ForestParams& params, Exec exec = Exec::Parallel);

    double predict_row(std::span<const double> row) const;
    std::vector<double> predict(const std::vector<std::vector<double>>& rows,
                                Exec exec = Exec::Parallel) const;

    const std::vector<std::vector<TreeNode>>& trees() const { return trees_; }
    const ForestParams& params() const { return params_; }

    std::string to_json() const;
    static RandomForest from_json(std::string_view text);

private:
    std::vector<std::vector<TreeNode>> trees_;
    ForestParams params_;
};

struct ForestFitReport {
    ForestParams params;
    double r2_train = 0.0;
    double r2_test = 0.0;
    bool r2_defined = true;  // false when the test target is constant
    std::size_t n_train = 0;
    std::size_t n_test = 0;
    std::vector<std::pair<std::string, double>> importances;  // sorted descending
};

/// Fits a forest on the train split and evaluates on the test split.
/// Permutation importances are computed on the test split.
ForestFitReport fit_forest(const FeatureMatrix& features, const TrainTestSplit& split,
                           const ForestParams& params, int importance_shuffles = 5,
                           Exec exec = Exec::Parallel);

/// Mean k-fold cross-validated R2 for one parameter tuple. The fold
/// assignment is derived from fold_seed only, so scores are comparable
/// across tuples.
double cross_val_r2(const FeatureMatrix& features, const ForestParams& params, int folds,
                    std::uint64_t fold_seed, Exec exec = Exec::Parallel);

/// Uniformly samples n_settings parameter tuples from the search grid and
/// returns the tuple with the best mean k-fold cross-validated R2.
ForestParams random_search(const FeatureMatrix& features, int n_settings, int folds,
                           std::uint64_t seed, Exec exec = Exec::Parallel);

/// Mean R2 drop over n_shuffles per permuted column, evaluated on the given
/// rows. May be negative for useless columns.
std::vector<std::pair<std::string, double>> permutation_importance(
    const RandomForest& forest, const FeatureMatrix& features,
    const std::vector<std::size_t>& eval_rows, int n_shuffles, std::uint64_t seed,
    Exec exec = Exec::Parallel);

/// R2 of predictions against truth; unset when truth is constant.
std::optional<double> r_squared(std::span<const double> truth,
                                std::span<const double> prediction);

}  // namespace suscept

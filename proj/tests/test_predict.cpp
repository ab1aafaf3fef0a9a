#include <doctest.h>

#include <cmath>
#include <numeric>
#include <vector>

#include "suscept/predict.hpp"
#include "suscept/synth.hpp"

using namespace suscept;

namespace {

// Centered, pairwise-orthogonal columns via Gram-Schmidt on seeded noise.
std::vector<std::vector<double>> orthogonal_columns(std::size_t n, std::size_t p,
                                                    std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> cols(p, std::vector<double>(n));
    for (auto& col : cols) {
        double mean = 0.0;
        for (auto& v : col) {
            v = rng.normal();
            mean += v;
        }
        mean /= n;
        for (auto& v : col) v -= mean;
    }
    for (std::size_t j = 0; j < p; ++j) {
        for (std::size_t k = 0; k < j; ++k) {
            double dot = 0.0, nk = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                dot += cols[j][i] * cols[k][i];
                nk += cols[k][i] * cols[k][i];
            }
            for (std::size_t i = 0; i < n; ++i) cols[j][i] -= dot / nk * cols[k][i];
        }
        double norm = 0.0;
        for (double v : cols[j]) norm += v * v;
        norm = std::sqrt(norm);
        for (auto& v : cols[j]) v /= norm;
    }
    return cols;
}

FeatureMatrix matrix_from_columns(const std::vector<std::vector<double>>& cols,
                                  std::vector<double> target) {
    FeatureMatrix fm;
    fm.columns = kFeatureColumns;
    const std::size_t n = cols.front().size();
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<double> row(cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) row[j] = cols[j][i];
        fm.rows.push_back(std::move(row));
        fm.users.push_back("u" + std::to_string(i));
    }
    fm.target = std::move(target);
    return fm;
}

FeatureMatrix copy_feature_fixture(std::size_t n, std::uint64_t seed) {
    Rng rng(seed);
    std::vector<std::vector<double>> cols(kFeatureColumns.size(), std::vector<double>(n));
    for (auto& col : cols) {
        for (auto& v : col) v = rng.uniform();
    }
    std::vector<double> target(n);
    for (std::size_t i = 0; i < n; ++i) target[i] = cols[3][i];
    return matrix_from_columns(cols, std::move(target));
}

}  // namespace

TEST_CASE("vif of orthogonal centered columns is exactly one") {
    const auto cols = orthogonal_columns(64, kFeatureColumns.size(), 5);
    auto fm = matrix_from_columns(cols, std::vector<double>(64, 0.0));
    const auto vif = compute_vif(fm);
    for (const auto& v : vif) {
        REQUIRE(v.has_value());
        CHECK(*v == doctest::Approx(1.0).epsilon(1e-9));
    }
}

TEST_CASE("vif flags a duplicated column as infinite") {
    auto cols = orthogonal_columns(64, kFeatureColumns.size(), 6);
    cols[1] = cols[0];
    auto fm = matrix_from_columns(cols, std::vector<double>(64, 0.0));
    const auto vif = compute_vif(fm);
    CHECK_FALSE(vif[0].has_value());
    CHECK_FALSE(vif[1].has_value());
    REQUIRE(vif[2].has_value());
    CHECK(*vif[2] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("vif of a correlation-0.8 pair is 1/(1-0.64)") {
    auto cols = orthogonal_columns(64, kFeatureColumns.size() + 1, 7);
    std::vector<std::vector<double>> built(kFeatureColumns.size());
    built[0] = cols[0];
    built[1].resize(64);
    for (std::size_t i = 0; i < 64; ++i) built[1][i] = 0.8 * cols[0][i] + 0.6 * cols[1][i];
    for (std::size_t j = 2; j < built.size(); ++j) built[j] = cols[j + 1];
    auto fm = matrix_from_columns(built, std::vector<double>(64, 0.0));
    const auto vif = compute_vif(fm);
    REQUIRE(vif[0].has_value());
    REQUIRE(vif[1].has_value());
    CHECK(*vif[0] == doctest::Approx(1.0 / 0.36).epsilon(1e-6));
    CHECK(*vif[1] == doctest::Approx(1.0 / 0.36).epsilon(1e-6));
    CHECK(*vif[2] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("vif rejects constant columns") {
    auto cols = orthogonal_columns(64, kFeatureColumns.size(), 8);
    for (auto& v : cols[4]) v = 2.5;
    auto fm = matrix_from_columns(cols, std::vector<double>(64, 0.0));
    CHECK_THROWS_AS((void)compute_vif(fm), DataError);
}

TEST_CASE("fit_friend_linear recovers a planted model") {
    Rng rng(12);
    const std::size_t n = 10000;
    std::vector<double> x(n), y(n);
    for (std::size_t i = 0; i < n; ++i) {
        x[i] = rng.uniform();
        y[i] = 0.1 + 0.6 * x[i] + rng.normal(0.0, 0.01);
    }
    const auto split = split_rows(n, 0.2, 99);
    const auto report = fit_friend_linear(x, y, split);
    CHECK(report.fit.beta1 > 0.58);
    CHECK(report.fit.beta1 < 0.62);
    CHECK(report.fit.beta0 == doctest::Approx(0.1).epsilon(0.05));
    CHECK(report.fit.p_beta1 < 1e-6);
    CHECK(report.r2_test > 0.9);
}

TEST_CASE("perfectly homophilous fixture gives slope one") {
    std::vector<double> x{0.1, 0.4, 0.2, 0.8, 0.6, 0.3, 0.9, 0.5};
    const auto split = split_rows(x.size(), 0.25, 3);
    const auto report = fit_friend_linear(x, x, split);
    CHECK(report.fit.beta1 == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(report.fit.beta0 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(report.fit.r2 == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("forest learns an exact copy feature") {
    const auto fm = copy_feature_fixture(400, 21);
    const auto split = split_rows(fm.n_rows(), 0.2, 4);
    ForestParams params{100, static_cast<int>(fm.n_cols()), 0, 2, 1, 11};
    const auto report = fit_forest(fm, split, params, 0);
    CHECK(report.r2_test > 0.95);
    CHECK(report.r2_train > 0.99);
}

TEST_CASE("forest on pure noise explains nothing") {
    double mean_r2 = 0.0;
    const int seeds = 20;
    for (int s = 0; s < seeds; ++s) {
        Rng rng(1000 + s);
        std::vector<std::vector<double>> cols(kFeatureColumns.size(),
                                              std::vector<double>(200));
        for (auto& col : cols) {
            for (auto& v : col) v = rng.uniform();
        }
        std::vector<double> target(200);
        for (auto& v : target) v = rng.uniform();
        const auto fm = matrix_from_columns(cols, std::move(target));
        const auto split = split_rows(fm.n_rows(), 0.25, 77 + s);
        ForestParams params{40, 3, 8, 5, 2, static_cast<std::uint64_t>(s)};
        mean_r2 += fit_forest(fm, split, params, 0).r2_test;
    }
    mean_r2 /= seeds;
    CHECK(mean_r2 <= 0.05);
}

TEST_CASE("degenerate single tree predicts the global mean") {
    const auto fm = copy_feature_fixture(200, 31);
    const auto split = split_rows(fm.n_rows(), 0.2, 5);
    ForestParams params{1, 4, 0, 2, static_cast<int>(split.train.size()), 7};
    const auto report = fit_forest(fm, split, params, 0);
    CHECK(report.r2_test < 0.02);
}

TEST_CASE("forest fits are bit-reproducible per seed") {
    const auto fm = copy_feature_fixture(150, 41);
    std::vector<std::vector<double>> rows;
    std::vector<double> y;
    for (std::size_t i = 0; i < fm.n_rows(); ++i) {
        rows.push_back(fm.rows[i]);
        y.push_back(fm.target[i]);
    }
    ForestParams params{30, 4, 10, 2, 2, 1234};
    RandomForest a, b, c;
    a.fit(rows, y, params, Exec::Parallel);
    b.fit(rows, y, params, Exec::Parallel);
    c.fit(rows, y, params, Exec::Serial);
    CHECK(a.to_json() == b.to_json());
    CHECK(a.to_json() == c.to_json());

    const auto pa = a.predict(rows, Exec::Parallel);
    const auto pc = c.predict(rows, Exec::Serial);
    CHECK(pa == pc);
}

TEST_CASE("forest model persists through json") {
    const auto fm = copy_feature_fixture(120, 51);
    std::vector<std::vector<double>> rows = fm.rows;
    std::vector<double> y = fm.target;
    ForestParams params{10, 4, 6, 2, 2, 9};
    RandomForest forest;
    forest.fit(rows, y, params);
    const auto text = forest.to_json();
    const auto loaded = RandomForest::from_json(text);
    CHECK(loaded.predict(rows, Exec::Serial) == forest.predict(rows, Exec::Serial));
    CHECK(loaded.to_json() == text);
}

TEST_CASE("permutation importance singles out the copied feature") {
    auto fm = copy_feature_fixture(300, 61);
    for (auto& row : fm.rows) row[7] = 1.0;  // constant column: importance must be ~0
    const auto split = split_rows(fm.n_rows(), 0.2, 6);
    ForestParams params{60, 9, 0, 2, 1, 15};
    const auto report = fit_forest(fm, split, params, 5);

    REQUIRE_FALSE(report.importances.empty());
    CHECK(report.importances.front().first == kFeatureColumns[3]);
    CHECK(report.importances.front().second > 0.5);
    for (const auto& [name, value] : report.importances) {
        if (name == kFeatureColumns[7]) CHECK(value == doctest::Approx(0.0));
    }
}

TEST_CASE("forest is not grossly worse than the linear fit on linear truth") {
    Rng rng(71);
    const std::size_t n = 2000;
    std::vector<std::vector<double>> cols(kFeatureColumns.size(), std::vector<double>(n));
    for (auto& col : cols) {
        for (auto& v : col) v = rng.uniform();
    }
    std::vector<double> target(n);
    for (std::size_t i = 0; i < n; ++i) {
        target[i] = 0.1 + 0.6 * cols[0][i] + rng.normal(0.0, 0.1);
    }
    const auto fm = matrix_from_columns(cols, std::move(target));
    const auto split = split_rows(n, 0.2, 8);

    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = fm.rows[i][0];
    const auto linear = fit_friend_linear(x, fm.target, split);

    ForestParams params{150, 4, 16, 10, 25, 3};
    const auto forest = fit_forest(fm, split, params, 3);
    CHECK(forest.r2_test >= linear.r2_test - 0.02);
    CHECK(forest.r2_test - linear.r2_test <= 0.05);

    // The friend average is the only signal, so it dominates the importances.
    REQUIRE_FALSE(forest.importances.empty());
    CHECK(forest.importances.front().first == "friends_iar");
    CHECK(forest.importances.front().second > 5.0 * std::fabs(forest.importances[1].second));
}

TEST_CASE("random_search is deterministic and beats a stump baseline") {
    const auto fm = copy_feature_fixture(150, 81);
    const auto a = random_search(fm, 5, 3, 17);
    const auto b = random_search(fm, 5, 3, 17);
    CHECK(a.n_estimators == b.n_estimators);
    CHECK(a.max_features == b.max_features);
    CHECK(a.max_depth == b.max_depth);
    CHECK(a.min_samples_split == b.min_samples_split);
    CHECK(a.min_samples_leaf == b.min_samples_leaf);
    CHECK(a.seed == b.seed);

    const std::uint64_t fold_seed = 55;
    ForestParams stump{50, 4, 1, 2, 1, 1};
    const double chosen = cross_val_r2(fm, a, 3, fold_seed);
    const double baseline = cross_val_r2(fm, stump, 3, fold_seed);
    CHECK(chosen >= baseline);

    SUBCASE("single setting returns itself") {
        const auto only = random_search(fm, 1, 3, 29);
        const auto again = random_search(fm, 1, 3, 29);
        CHECK(only.n_estimators == again.n_estimators);
        CHECK(only.seed == again.seed);
    }
}

TEST_CASE("split_rows covers every row exactly once") {
    const auto split = split_rows(100, 0.2, 5);
    CHECK(split.test.size() == 20);
    CHECK(split.train.size() == 80);
    std::vector<bool> seen(100, false);
    for (auto i : split.train) seen[i] = true;
    for (auto i : split.test) {
        CHECK_FALSE(seen[i]);
        seen[i] = true;
    }
    CHECK(std::count(seen.begin(), seen.end(), true) == 100);
}

TEST_CASE("forest defaults per metric") {
    const auto iar = forest_defaults(Metric::Iar);
    CHECK(iar.n_estimators == 750);
    CHECK(iar.max_features == 4);
    CHECK(iar.max_depth == 70);
    CHECK(iar.min_samples_split == 5);
    CHECK(iar.min_samples_leaf == 2);
    const auto sar = forest_defaults(Metric::Sar);
    CHECK(sar.n_estimators == 800);
    CHECK(sar.max_depth == 80);
    CHECK(sar.min_samples_split == 10);
}

TEST_CASE("feature matrix drops incomplete rows") {
    SynthConfig config;
    config.n_nodes = 80;
    config.seed = 31;
    const auto net = generate_graph(config).net;
    ScoreTable table;
    for (std::size_t v = 0; v < net.node_count(); ++v) {
        ScoreRow row;
        row.user = net.nodes[v];
        row.iar = 0.1 + 0.001 * static_cast<double>(v);
        row.sar = 0.9 - 0.001 * static_cast<double>(v);
        if (v != 3) {  // one user without metadata
            row.followers_count = 10;
            row.friends_count = 10;
            row.statuses_count = 10;
            row.favorites_count = 10;
        }
        if (v == 5) row.iar.reset();  // one user without the target metric
        table.rows.push_back(row);
    }
    const auto fm = build_feature_matrix(net, table, Metric::Iar);
    CHECK(fm.n_dropped >= 2);
    CHECK(fm.n_rows() + fm.n_dropped == net.node_count());
    CHECK(fm.columns == kFeatureColumns);
    for (const auto& row : fm.rows) CHECK(row.size() == kFeatureColumns.size());
}

#include <doctest.h>

#include <cmath>
#include <optional>
#include <set>
#include <vector>

#include "suscept/analytics.hpp"
#include "suscept/synth.hpp"

using namespace suscept;

namespace {

FriendshipNetwork grid_network(const std::vector<std::pair<std::string, std::string>>& edges,
                               const std::vector<std::int64_t>& weights = {}) {
    std::set<std::string> nodes;
    for (const auto& [u, v] : edges) {
        nodes.insert(u);
        nodes.insert(v);
    }
    FriendshipNetwork net;
    net.nodes.assign(nodes.begin(), nodes.end());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const int u = net.node_index(edges[i].first);
        const int v = net.node_index(edges[i].second);
        net.edges.push_back({std::min(u, v), std::max(u, v)});
        net.weights.push_back(weights.empty() ? 1 : weights[i]);
    }
    std::vector<std::size_t> order(net.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return net.edges[a] < net.edges[b]; });
    FriendshipNetwork out;
    out.nodes = net.nodes;
    for (std::size_t i : order) {
        out.edges.push_back(net.edges[i]);
        out.weights.push_back(net.weights[i]);
    }
    out.validate();
    return out;
}

std::vector<std::optional<double>> score_of(const FriendshipNetwork& net,
                                            const std::map<std::string, double>& by_user) {
    std::vector<std::optional<double>> out(net.node_count());
    for (std::size_t i = 0; i < net.node_count(); ++i) {
        if (auto it = by_user.find(net.nodes[i]); it != by_user.end()) out[i] = it->second;
    }
    return out;
}

// Star with a high-scoring hub and four low-scoring leaves.
const FriendshipNetwork kStar = grid_network(
    {{"hub", "l1"}, {"hub", "l2"}, {"hub", "l3"}, {"hub", "l4"}});
const std::vector<std::optional<double>> kStarScores = score_of(
    kStar, {{"hub", 0.9}, {"l1", 0.1}, {"l2", 0.1}, {"l3", 0.1}, {"l4", 0.1}});

}  // namespace

TEST_CASE("weighted friend averages") {
    const auto net = grid_network({{"u", "f1"}, {"u", "f2"}}, {1, 1});
    const auto scores = score_of(net, {{"f1", 0.2}, {"f2", 0.8}, {"u", 0.5}});
    const auto avg = weighted_friend_average(net, scores);
    CHECK(avg.at("u") == doctest::Approx(0.5));

    SUBCASE("weights shift the mean") {
        const auto weighted = grid_network({{"u", "f1"}, {"u", "f2"}}, {3, 1});
        const auto avg2 = weighted_friend_average(weighted, score_of(weighted,
            {{"f1", 0.2}, {"f2", 0.8}, {"u", 0.5}}));
        CHECK(avg2.at("u") == doctest::Approx(0.35));
    }
    SUBCASE("single friend") {
        const auto one = grid_network({{"u", "f1"}});
        const auto avg3 = weighted_friend_average(one, score_of(one, {{"f1", 0.7}, {"u", 0.2}}));
        CHECK(avg3.at("u") == doctest::Approx(0.7));
    }
    SUBCASE("undefined friends are skipped") {
        const auto avg4 = weighted_friend_average(net, score_of(net, {{"f1", 0.2}, {"u", 0.5}}));
        CHECK(avg4.at("u") == doctest::Approx(0.2));
        // f2 has no own score but its friend u does, so it still gets an average.
        CHECK(avg4.at("f2") == doctest::Approx(0.5));
    }
    SUBCASE("users with no scorable friend are omitted") {
        const auto only_u = weighted_friend_average(net, score_of(net, {{"u", 0.5}}));
        CHECK_FALSE(only_u.contains("u"));  // both friends undefined
        CHECK(only_u.at("f1") == doctest::Approx(0.5));
    }
}

TEST_CASE("perfect homophily and heterophily") {
    SUBCASE("two cliques, no cross edges") {
        std::vector<std::pair<std::string, std::string>> edges;
        for (int c = 0; c < 2; ++c) {
            for (int i = 0; i < 4; ++i) {
                for (int j = i + 1; j < 4; ++j) {
                    const std::string a = (c == 0 ? "a" : "b") + std::to_string(i);
                    const std::string b = (c == 0 ? "a" : "b") + std::to_string(j);
                    edges.emplace_back(a, b);
                }
            }
        }
        const auto net = grid_network(edges);
        std::map<std::string, double> by_user;
        for (int i = 0; i < 4; ++i) {
            by_user["a" + std::to_string(i)] = 0.9;
            by_user["b" + std::to_string(i)] = 0.1;
        }
        const auto r = homophily_correlation(net, score_of(net, by_user));
        CHECK(r.coefficient == doctest::Approx(1.0));
    }
    SUBCASE("complete bipartite") {
        std::vector<std::pair<std::string, std::string>> edges;
        for (int i = 0; i < 3; ++i) {
            for (int j = 0; j < 3; ++j) {
                edges.emplace_back("a" + std::to_string(i), "b" + std::to_string(j));
            }
        }
        const auto net = grid_network(edges);
        std::map<std::string, double> by_user;
        for (int i = 0; i < 3; ++i) {
            by_user["a" + std::to_string(i)] = 0.9;
            by_user["b" + std::to_string(i)] = 0.1;
        }
        const auto r = homophily_correlation(net, score_of(net, by_user));
        CHECK(r.coefficient == doctest::Approx(-1.0));
    }
}

TEST_CASE("homophily is invariant under uniform weight scaling") {
    SynthConfig config;
    config.n_nodes = 200;
    config.homophily_strength = 0.5;
    config.seed = 4;
    const auto net = generate_graph(config).net;
    const auto attrs = assign_attributes(net, config);
    std::vector<std::optional<double>> scores(attrs.values.begin(), attrs.values.end());

    auto scaled = net;
    for (auto& w : scaled.weights) w *= 7;
    const auto base = homophily_correlation(net, scores);
    const auto after = homophily_correlation(scaled, scores);
    CHECK(base.coefficient == doctest::Approx(after.coefficient).epsilon(1e-12));
}

TEST_CASE("individual paradox on the star") {
    const auto gfp = individual_gfp(kStar, kStarScores);
    CHECK(gfp.n_evaluated == 5);
    CHECK(gfp.paradox_probability == doctest::Approx(0.8));
    for (std::size_t v = 0; v < kStar.node_count(); ++v) {
        REQUIRE(gfp.holds[v].has_value());
        if (kStar.nodes[v] == "hub") {
            CHECK_FALSE(*gfp.holds[v]);
        } else {
            CHECK(*gfp.holds[v]);
        }
    }
}

TEST_CASE("equal scores never hold strictly") {
    const auto scores = score_of(kStar, {{"hub", 0.4}, {"l1", 0.4}, {"l2", 0.4},
                                         {"l3", 0.4}, {"l4", 0.4}});
    CHECK(individual_gfp(kStar, scores).paradox_probability == 0.0);
}

TEST_CASE("two connected nodes split the paradox") {
    const auto net = grid_network({{"a", "b"}});
    const auto gfp = individual_gfp(net, score_of(net, {{"a", 0.1}, {"b", 0.9}}));
    CHECK(gfp.paradox_probability == doctest::Approx(0.5));
}

TEST_CASE("network-level paradox on the star") {
    const auto ngfp = network_gfp(kStar, kStarScores);
    CHECK(ngfp.mean_s == doctest::Approx(0.26));
    CHECK(ngfp.mean_s_nn == doctest::Approx(0.5));
    CHECK(ngfp.holds);
}

TEST_CASE("regular graphs never hold at network level") {
    const auto ring = grid_network(
        {{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "f"}, {"f", "a"}});
    const auto scores = score_of(ring, {{"a", 0.1}, {"b", 0.9}, {"c", 0.3},
                                        {"d", 0.7}, {"e", 0.2}, {"f", 0.6}});
    const auto ngfp = network_gfp(ring, scores);
    CHECK(ngfp.mean_s == doctest::Approx(ngfp.mean_s_nn));
    CHECK_FALSE(ngfp.holds);
}

TEST_CASE("network paradox identity: mean_nn - mean = cov(k,s)/mean(k)") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        SynthConfig config;
        config.n_nodes = 400;
        config.rho_ks_target = (seed % 2 == 0) ? 0.4 : -0.4;
        config.seed = seed;
        const auto net = generate_graph(config).net;
        const auto attrs = assign_attributes(net, config);
        std::vector<std::optional<double>> scores(attrs.values.begin(), attrs.values.end());

        const auto ngfp = network_gfp(net, scores);
        const auto deg = degrees(net);
        long double sk = 0.0L, ss = 0.0L, sks = 0.0L;
        const std::size_t n = net.node_count();
        for (std::size_t v = 0; v < n; ++v) {
            sk += deg[v];
            ss += attrs.values[v];
            sks += static_cast<long double>(deg[v]) * attrs.values[v];
        }
        const double cov = static_cast<double>(sks / n - (sk / n) * (ss / n));
        const double mean_k = static_cast<double>(sk / n);
        const double lhs = ngfp.mean_s_nn - ngfp.mean_s;
        const double rhs = cov / mean_k;
        CHECK(std::fabs(lhs - rhs) < 1e-12 * std::max(1.0, std::fabs(ngfp.mean_s_nn)));
        CHECK(ngfp.holds == (cov > 0.0));
    }
}

TEST_CASE("sign of the planted degree correlation drives the network paradox") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        SynthConfig config;
        config.n_nodes = 500;
        config.seed = seed;
        config.rho_ks_target = 0.6;
        const auto net = generate_graph(config).net;
        const auto pos = assign_attributes(net, config);
        CHECK(network_gfp(net, {pos.values.begin(), pos.values.end()}).holds);

        config.rho_ks_target = -0.6;
        const auto neg = assign_attributes(net, config);
        CHECK_FALSE(network_gfp(net, {neg.values.begin(), neg.values.end()}).holds);
    }
}

TEST_CASE("paradox grid") {
    const auto gfp = individual_gfp(kStar, kStarScores);

    SUBCASE("single cell equals P") {
        const auto grid = paradox_grid(kStar, kStarScores, gfp, {1, 8}, {0.0, 1.0});
        REQUIRE(grid.cells.size() == 1);
        CHECK(grid.cells[0].count == 5);
        CHECK(grid.cells[0].holding_fraction == doctest::Approx(gfp.paradox_probability));
    }
    SUBCASE("two degree bins separate hub and leaves") {
        const auto grid = paradox_grid(kStar, kStarScores, gfp, {1, 2, 8}, {0.0, 1.0});
        REQUIRE(grid.cells.size() == 2);
        CHECK(grid.at(0, 0).count == 4);
        CHECK(grid.at(0, 0).holding_fraction == doctest::Approx(1.0));
        CHECK(grid.at(1, 0).count == 1);
        CHECK(grid.at(1, 0).holding_fraction == doctest::Approx(0.0));
    }
    SUBCASE("empty network yields zero counts") {
        FriendshipNetwork empty;
        IndividualGfp none;
        const auto grid = paradox_grid(empty, {}, none, {1, 2}, {0.0, 1.0});
        for (const auto& c : grid.cells) CHECK(c.count == 0);
    }
    SUBCASE("out-of-coverage degree is an error") {
        CHECK_THROWS_AS((void)paradox_grid(kStar, kStarScores, gfp, {1, 2}, {0.0, 1.0}),
                        DataError);
    }
    SUBCASE("grid mass equals P times evaluated nodes") {
        for (std::uint64_t seed = 0; seed < 5; ++seed) {
            SynthConfig config;
            config.n_nodes = 300;
            config.rho_ks_target = 0.3;
            config.seed = seed;
            const auto net = generate_graph(config).net;
            const auto attrs = assign_attributes(net, config);
            std::vector<std::optional<double>> scores(attrs.values.begin(), attrs.values.end());
            const auto g = individual_gfp(net, scores);
            const auto deg = degrees(net);
            const int max_deg = *std::max_element(deg.begin(), deg.end());
            const auto grid = paradox_grid(net, scores, g, log2_degree_edges(max_deg),
                                           uniform_s_edges(0.05));
            long double mass = 0.0L;
            std::int64_t total = 0;
            for (const auto& c : grid.cells) {
                mass += c.holding_fraction * c.count;
                total += c.count;
            }
            CHECK(total == static_cast<std::int64_t>(g.n_evaluated));
            CHECK(std::llround(static_cast<double>(mass)) ==
                  std::llround(g.paradox_probability * g.n_evaluated));
        }
    }
}

TEST_CASE("default bin builders") {
    CHECK(log2_degree_edges(1) == std::vector<std::int64_t>{1, 2});
    CHECK(log2_degree_edges(9) == std::vector<std::int64_t>{1, 2, 4, 8, 16});
    const auto s = uniform_s_edges(0.25);
    REQUIRE(s.size() == 5);
    CHECK(s.front() == 0.0);
    CHECK(s.back() == 1.0);
}

TEST_CASE("gfp report json round trip") {
    SynthConfig config;
    config.n_nodes = 120;
    config.rho_ks_target = 0.5;
    config.seed = 42;
    const auto net = generate_graph(config).net;
    const auto attrs = assign_attributes(net, config);

    ScoreTable table;
    for (std::size_t v = 0; v < net.node_count(); ++v) {
        ScoreRow row;
        row.user = net.nodes[v];
        row.iar = attrs.values[v];
        row.sar = 1.0 - attrs.values[v];
        table.rows.push_back(row);
    }

    const auto report = analyze_gfp(net, table, Metric::Iar);
    const auto text = gfp_report_to_json(report);
    const auto parsed = gfp_report_from_json(text);
    CHECK(parsed.paradox_probability == report.paradox_probability);
    CHECK(parsed.mean_s == report.mean_s);
    CHECK(parsed.mean_s_nn == report.mean_s_nn);
    CHECK(parsed.rho_ks.coefficient == report.rho_ks.coefficient);
    CHECK(parsed.homophily.coefficient == report.homophily.coefficient);
    CHECK(parsed.grid.cells.size() == report.grid.cells.size());
    CHECK(gfp_report_to_json(parsed) == text);

    // Serialization is deterministic.
    CHECK(gfp_report_to_json(analyze_gfp(net, table, Metric::Iar)) == text);
}

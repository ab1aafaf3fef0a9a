#include "suscept/nullmodel.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <unordered_set>

namespace suscept {

namespace {

std::uint64_t edge_key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(u)) << 32) |
           static_cast<std::uint32_t>(v);
}

double evaluate_statistic(const FriendshipNetwork& net,
                          const std::vector<std::optional<double>>& scores,
                          NullStatistic statistic) {
    switch (statistic) {
        case NullStatistic::Homophily:
            return homophily_correlation(net, scores).coefficient;
        case NullStatistic::ParadoxP:
            return individual_gfp(net, scores).paradox_probability;
        case NullStatistic::MeanSNN:
            return network_gfp(net, scores).mean_s_nn;
    }
    throw InternalError("evaluate_statistic: bad statistic");
}

}  // namespace

std::string_view to_string(NullModel m) {
    return m == NullModel::EdgeSwap ? "edge_swap" : "neighbor_reassign";
}

NullModel null_model_from_string(std::string_view s) {
    if (s == "swap" || s == "edge_swap") return NullModel::EdgeSwap;
    if (s == "reassign" || s == "neighbor_reassign") return NullModel::NeighborReassign;
    throw UsageError("unknown null model '" + std::string(s) + "'");
}

std::string_view to_string(NullStatistic s) {
    switch (s) {
        case NullStatistic::Homophily: return "homophily";
        case NullStatistic::ParadoxP: return "paradox_p";
        case NullStatistic::MeanSNN: return "mean_s_nn";
    }
    throw InternalError("to_string: bad NullStatistic");
}

FriendshipNetwork degree_preserving_rewire(const FriendshipNetwork& net, int swap_multiplier,
                                           std::uint64_t seed) {
    if (net.edge_count() == 0) throw DataError("degree_preserving_rewire: empty edge set");
    if (swap_multiplier < 1) throw DataError("degree_preserving_rewire: bad swap multiplier");
    if (net.edge_count() < 2) return net;  // no swappable pair

    std::vector<std::array<int, 2>> edges = net.edges;
    std::vector<std::int64_t> weights = net.weights;
    std::unordered_set<std::uint64_t> present;
    present.reserve(edges.size() * 2);
    for (const auto& [u, v] : edges) present.insert(edge_key(u, v));

    Rng rng(seed);
    const std::size_t m = edges.size();
    const std::int64_t attempts = static_cast<std::int64_t>(swap_multiplier) *
                                  static_cast<std::int64_t>(m);
    for (std::int64_t s = 0; s < attempts; ++s) {
        const std::size_t i = rng.index(m);
        std::size_t j = rng.index(m);
        if (i == j) continue;
        int a = edges[i][0], b = edges[i][1];
        int c = edges[j][0], d = edges[j][1];
        if (rng.bernoulli(0.5)) std::swap(c, d);
        // (a,b),(c,d) -> (a,d),(c,b)
        if (a == d || c == b) continue;
        const int u1 = std::min(a, d), v1 = std::max(a, d);
        const int u2 = std::min(c, b), v2 = std::max(c, b);
        if (u1 == u2 && v1 == v2) continue;
        if (present.contains(edge_key(u1, v1)) || present.contains(edge_key(u2, v2))) continue;
        present.erase(edge_key(edges[i][0], edges[i][1]));
        present.erase(edge_key(edges[j][0], edges[j][1]));
        edges[i] = {u1, v1};
        edges[j] = {u2, v2};
        present.insert(edge_key(u1, v1));
        present.insert(edge_key(u2, v2));
    }

    FriendshipNetwork out;
    out.kind = net.kind;
    out.nodes = net.nodes;
    std::vector<std::size_t> order(edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t x, std::size_t y) { return edges[x] < edges[y]; });
    for (std::size_t i : order) {
        out.edges.push_back(edges[i]);
        out.weights.push_back(weights[i]);
    }
    out.validate();
    return out;
}

ReassignOutcome random_neighbor_reassign(const FriendshipNetwork& net, std::uint64_t seed) {
    if (net.node_count() < 2) throw DataError("random_neighbor_reassign: need at least 2 nodes");

    Rng rng(seed);
    const int n = static_cast<int>(net.node_count());
    std::map<std::array<int, 2>, std::int64_t> merged;
    std::size_t collisions = 0;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        // Node ids are sorted, so the smaller index is the lexicographically
        // smaller user id.
        const int keep = net.edges[e][0];
        int other = static_cast<int>(rng.index(static_cast<std::size_t>(n - 1)));
        if (other >= keep) ++other;
        const std::array<int, 2> key{std::min(keep, other), std::max(keep, other)};
        auto [it, inserted] = merged.emplace(key, net.weights[e]);
        if (!inserted) {
            it->second += net.weights[e];
            ++collisions;
        }
    }

    ReassignOutcome out;
    out.edges_before_merge = net.edges.size();
    out.merged_collisions = collisions;
    out.net.kind = net.kind;
    out.net.nodes = net.nodes;
    for (const auto& [key, w] : merged) {
        out.net.edges.push_back(key);
        out.net.weights.push_back(w);
    }
    out.net.validate();
    return out;
}

NullSummary null_distribution(const FriendshipNetwork& net,
                              const std::vector<std::optional<double>>& scores,
                              NullStatistic statistic, const NullConfig& config,
                              Exec exec) {
    if (config.n_reps < 1) throw DataError("null_distribution: n_reps must be >= 1");

    NullSummary summary;
    summary.statistic = std::string(to_string(statistic));
    summary.n_reps = config.n_reps;
    summary.observed = evaluate_statistic(net, scores, statistic);

    std::vector<double> values(static_cast<std::size_t>(config.n_reps));
    std::vector<std::string> errors(static_cast<std::size_t>(config.n_reps));
    auto replicate = [&](int r) {
        try {
            const std::uint64_t rep_seed = config.seed + static_cast<std::uint64_t>(r);
            const FriendshipNetwork null_net =
                config.model == NullModel::EdgeSwap
                    ? degree_preserving_rewire(net, config.swap_multiplier, rep_seed)
                    : random_neighbor_reassign(net, rep_seed).net;
            values[static_cast<std::size_t>(r)] = evaluate_statistic(null_net, scores, statistic);
        } catch (const std::exception& ex) {
            errors[static_cast<std::size_t>(r)] = ex.what();
        }
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int r = 0; r < config.n_reps; ++r) replicate(r);
    } else {
        for (int r = 0; r < config.n_reps; ++r) replicate(r);
    }
    for (int r = 0; r < config.n_reps; ++r) {
        if (!errors[static_cast<std::size_t>(r)].empty()) {
            throw DataError("null replicate " + std::to_string(r) + ": " +
                            errors[static_cast<std::size_t>(r)]);
        }
    }

    long double mean = 0.0L;
    for (double v : values) mean += v;
    mean /= values.size();
    long double var = 0.0L;
    for (double v : values) {
        const long double d = v - mean;
        var += d * d;
    }
    summary.null_mean = static_cast<double>(mean);
    summary.null_sd = values.size() > 1
                          ? std::sqrt(static_cast<double>(var / (values.size() - 1)))
                          : 0.0;

    const double obs_dev = std::fabs(summary.observed - summary.null_mean);
    std::size_t at_least = 0;
    for (double v : values) {
        if (std::fabs(v - summary.null_mean) >= obs_dev) ++at_least;
    }
    summary.p_value = static_cast<double>(1 + at_least) / static_cast<double>(config.n_reps + 1);
    return summary;
}

}  // namespace suscept

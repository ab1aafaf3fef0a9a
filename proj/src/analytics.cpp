#include "suscept/analytics.hpp"

#include <algorithm>
#include <cmath>

#include <json.hpp>

namespace suscept {

namespace {

using nlohmann::json;

json correlation_to_json(const stats::CorrelationResult& c) {
    return json{{"coefficient", c.coefficient}, {"p_value", c.p_value}, {"n", c.n}};
}

stats::CorrelationResult correlation_from_json(const json& j) {
    stats::CorrelationResult c;
    c.coefficient = j.at("coefficient").get<double>();
    c.p_value = j.at("p_value").get<double>();
    c.n = j.at("n").get<std::size_t>();
    return c;
}

json null_summaries_to_json(const std::vector<NullSummary>& summaries) {
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

std::vector<NullSummary> null_summaries_from_json(const json& arr) {
    std::vector<NullSummary> out;
    for (const auto& j : arr) {
        NullSummary s;
        s.statistic = j.at("statistic").get<std::string>();
        s.observed = j.at("observed").get<double>();
        s.null_mean = j.at("null_mean").get<double>();
        s.null_sd = j.at("null_sd").get<double>();
        s.p_value = j.at("p_value").get<double>();
        s.n_reps = j.at("n_reps").get<int>();
        out.push_back(std::move(s));
    }
    return out;
}

}  // namespace

std::vector<std::optional<double>> align_scores(const FriendshipNetwork& net,
                                                const ScoreTable& table, Metric metric) {
    std::vector<std::optional<double>> out(net.nodes.size());
    for (std::size_t i = 0; i < net.nodes.size(); ++i) {
        if (const ScoreRow* row = table.find(net.nodes[i])) {
            out[i] = metric == Metric::Iar ? row->iar : row->sar;
        }
    }
    return out;
}

std::map<std::string, double> weighted_friend_average(
    const FriendshipNetwork& net, const std::vector<std::optional<double>>& scores) {
    const auto adj = adjacency(net);
    std::map<std::string, double> out;
    for (std::size_t v = 0; v < net.nodes.size(); ++v) {
        long double num = 0.0L, den = 0.0L;
        for (const auto& [w, e] : adj[v]) {
            if (!scores[w]) continue;
            const auto weight = static_cast<long double>(net.weights[e]);
            num += weight * *scores[w];
            den += weight;
        }
        if (den > 0.0L) out[net.nodes[v]] = static_cast<double>(num / den);
    }
    return out;
}

stats::CorrelationResult homophily_correlation(
    const FriendshipNetwork& net, const std::vector<std::optional<double>>& scores) {
    const auto averages = weighted_friend_average(net, scores);
    std::vector<double> own, avg;
    for (std::size_t v = 0; v < net.nodes.size(); ++v) {
        if (!scores[v]) continue;
        const auto it = averages.find(net.nodes[v]);
        if (it == averages.end()) continue;
        own.push_back(*scores[v]);
        avg.push_back(it->second);
    }
    if (own.size() < 3) throw DataError("homophily_correlation: fewer than 3 qualifying nodes");
    return stats::pearson(own, avg);
}

IndividualGfp individual_gfp(const FriendshipNetwork& net,
                             const std::vector<std::optional<double>>& scores) {
    const auto adj = adjacency(net);
    IndividualGfp out;
    out.holds.resize(net.nodes.size());
    std::size_t held = 0;
    for (std::size_t v = 0; v < net.nodes.size(); ++v) {
        if (!scores[v] || adj[v].empty()) continue;
        long double sum = 0.0L;
        std::size_t count = 0;
        for (const auto& [w, e] : adj[v]) {
            if (!scores[w]) continue;
            sum += *scores[w];
            ++count;
        }
        if (count == 0) continue;
        const bool holds = *scores[v] < static_cast<double>(sum / count);
        out.holds[v] = holds;
        ++out.n_evaluated;
        if (holds) ++held;
    }
    out.paradox_probability =
        out.n_evaluated > 0 ? static_cast<double>(held) / out.n_evaluated : 0.0;
    return out;
}

NetworkGfp network_gfp(const FriendshipNetwork& net,
                       const std::vector<std::optional<double>>& scores) {
    const auto deg = degrees(net);
    long double sum_s = 0.0L, sum_ks = 0.0L, sum_k = 0.0L;
    std::size_t n = 0;
    for (std::size_t v = 0; v < net.nodes.size(); ++v) {
        if (!scores[v]) continue;
        ++n;
        sum_s += *scores[v];
        sum_ks += static_cast<long double>(deg[v]) * *scores[v];
        sum_k += deg[v];
    }
    if (n == 0) throw DataError("network_gfp: no node with a defined score");
    if (sum_k == 0.0L) throw DataError("network_gfp: no edges among scored nodes");
    NetworkGfp out;
    out.n = n;
    out.mean_s = static_cast<double>(sum_s / n);
    out.mean_s_nn = static_cast<double>(sum_ks / sum_k);
    out.holds = out.mean_s < out.mean_s_nn;
    return out;
}

std::vector<std::int64_t> log2_degree_edges(int max_degree) {
    if (max_degree < 1) throw DataError("log2_degree_edges: max_degree must be >= 1");
    std::vector<std::int64_t> edges{1};
    std::int64_t e = 2;
    while (e <= max_degree) {
        edges.push_back(e);
        e *= 2;
    }
    edges.push_back(e);  // exclusive top edge above max_degree
    return edges;
}

std::vector<double> uniform_s_edges(double width) {
    if (!(width > 0.0) || width > 1.0) throw DataError("uniform_s_edges: bad width");
    std::vector<double> edges;
    for (double e = 0.0; e < 1.0; e += width) edges.push_back(e);
    edges.push_back(1.0);
    return edges;
}

ParadoxGrid paradox_grid(const FriendshipNetwork& net,
                         const std::vector<std::optional<double>>& scores,
                         const IndividualGfp& gfp,
                         const std::vector<std::int64_t>& degree_edges,
                         const std::vector<double>& s_edges) {
    if (degree_edges.size() < 2 || !std::is_sorted(degree_edges.begin(), degree_edges.end())) {
        throw DataError("paradox_grid: bad degree edges");
    }
    if (s_edges.size() < 2 || !std::is_sorted(s_edges.begin(), s_edges.end())) {
        throw DataError("paradox_grid: bad score edges");
    }

    ParadoxGrid grid;
    grid.degree_edges = degree_edges;
    grid.s_edges = s_edges;
    const std::size_t kb = grid.degree_bins();
    const std::size_t sb = grid.s_bins();
    grid.cells.assign(kb * sb, {});
    std::vector<std::int64_t> held(kb * sb, 0);

    const auto deg = degrees(net);
    for (std::size_t v = 0; v < net.nodes.size(); ++v) {
        if (!gfp.holds[v].has_value()) continue;
        const std::int64_t k = deg[v];
        const double s = *scores[v];

        // Half-open bins, top edge inclusive.
        auto kit = std::upper_bound(degree_edges.begin(), degree_edges.end(), k);
        std::size_t k_bin;
        if (kit == degree_edges.begin()) {
            throw DataError("paradox_grid: degree below bin coverage");
        } else if (kit == degree_edges.end()) {
            if (k == degree_edges.back()) {
                k_bin = kb - 1;
            } else {
                throw DataError("paradox_grid: degree above bin coverage");
            }
        } else {
            k_bin = static_cast<std::size_t>(kit - degree_edges.begin()) - 1;
        }

        auto sit = std::upper_bound(s_edges.begin(), s_edges.end(), s);
        std::size_t s_bin;
        if (sit == s_edges.begin()) {
            throw DataError("paradox_grid: score below bin coverage");
        } else if (sit == s_edges.end()) {
            if (s == s_edges.back()) {
                s_bin = sb - 1;
            } else {
                throw DataError("paradox_grid: score above bin coverage");
            }
        } else {
            s_bin = static_cast<std::size_t>(sit - s_edges.begin()) - 1;
        }

        const std::size_t cell = k_bin * sb + s_bin;
        ++grid.cells[cell].count;
        if (*gfp.holds[v]) ++held[cell];
    }

    for (std::size_t c = 0; c < grid.cells.size(); ++c) {
        if (grid.cells[c].count > 0) {
            grid.cells[c].holding_fraction =
                static_cast<double>(held[c]) / grid.cells[c].count;
        }
    }
    return grid;
}

GfpReport analyze_gfp(const FriendshipNetwork& net, const ScoreTable& table, Metric metric,
                      double grid_s_width) {
    const auto scores = align_scores(net, table, metric);

    GfpReport report;
    report.metric = metric;

    const auto deg = degrees(net);
    std::vector<double> ks, ss;
    for (std::size_t v = 0; v < net.nodes.size(); ++v) {
        if (!scores[v]) continue;
        ks.push_back(static_cast<double>(deg[v]));
        ss.push_back(*scores[v]);
    }
    if (ks.size() < 3) throw DataError("analyze_gfp: fewer than 3 scored nodes");
    report.rho_ks = stats::spearman(ks, ss);

    const auto gfp = individual_gfp(net, scores);
    report.paradox_probability = gfp.paradox_probability;
    report.n_nodes_used = gfp.n_evaluated;

    const auto ngfp = network_gfp(net, scores);
    report.mean_s = ngfp.mean_s;
    report.mean_s_nn = ngfp.mean_s_nn;
    report.network_gfp_holds = ngfp.holds;

    const int max_degree = *std::max_element(deg.begin(), deg.end());
    report.grid = paradox_grid(net, scores, gfp, log2_degree_edges(max_degree),
                               uniform_s_edges(grid_s_width));

    report.homophily = homophily_correlation(net, scores);
    return report;
}

std::string gfp_report_to_json(const GfpReport& report) {
    json j;
    j["metric"] = std::string(to_string(report.metric));
    j["rho_ks"] = correlation_to_json(report.rho_ks);
    j["paradox_probability"] = report.paradox_probability;
    j["mean_s"] = report.mean_s;
    j["mean_s_nn"] = report.mean_s_nn;
    j["network_gfp_holds"] = report.network_gfp_holds;
    j["n_nodes_used"] = report.n_nodes_used;
    j["homophily"] = correlation_to_json(report.homophily);

    json grid;
    grid["degree_edges"] = report.grid.degree_edges;
    grid["s_edges"] = report.grid.s_edges;
    json cells = json::array();
    for (const auto& c : report.grid.cells) {
        cells.push_back(json{{"count", c.count}, {"holding_fraction", c.holding_fraction}});
    }
    grid["cells"] = cells;
    j["grid"] = grid;

    if (!report.baseline1.empty()) j["baseline1"] = null_summaries_to_json(report.baseline1);
    if (!report.baseline2.empty()) j["baseline2"] = null_summaries_to_json(report.baseline2);
    return j.dump(2) + "\n";
}

GfpReport gfp_report_from_json(std::string_view text) {
    json j = json::parse(text);
    GfpReport report;
    report.metric = metric_from_string(j.at("metric").get<std::string>());
    report.rho_ks = correlation_from_json(j.at("rho_ks"));
    report.paradox_probability = j.at("paradox_probability").get<double>();
    report.mean_s = j.at("mean_s").get<double>();
    report.mean_s_nn = j.at("mean_s_nn").get<double>();
    report.network_gfp_holds = j.at("network_gfp_holds").get<bool>();
    report.n_nodes_used = j.at("n_nodes_used").get<std::size_t>();
    report.homophily = correlation_from_json(j.at("homophily"));

    const auto& grid = j.at("grid");
    report.grid.degree_edges = grid.at("degree_edges").get<std::vector<std::int64_t>>();
    report.grid.s_edges = grid.at("s_edges").get<std::vector<double>>();
    for (const auto& c : grid.at("cells")) {
        report.grid.cells.push_back(
            {c.at("count").get<std::int64_t>(), c.at("holding_fraction").get<double>()});
    }
    if (j.contains("baseline1")) report.baseline1 = null_summaries_from_json(j["baseline1"]);
    if (j.contains("baseline2")) report.baseline2 = null_summaries_from_json(j["baseline2"]);
    return report;
}

std::string paradox_grid_to_csv(const ParadoxGrid& grid) {
    std::string out = "k_bin_low,k_bin_high,s_bin_low,s_bin_high,count,holding_fraction\n";
    for (std::size_t kb = 0; kb < grid.degree_bins(); ++kb) {
        for (std::size_t sb = 0; sb < grid.s_bins(); ++sb) {
            const auto& cell = grid.at(kb, sb);
            char buf[160];
            std::snprintf(buf, sizeof(buf), "%lld,%lld,%.6g,%.6g,%lld,%.17g\n",
                          static_cast<long long>(grid.degree_edges[kb]),
                          static_cast<long long>(grid.degree_edges[kb + 1]),
                          grid.s_edges[sb], grid.s_edges[sb + 1],
                          static_cast<long long>(cell.count), cell.holding_fraction);
            out += buf;
        }
    }
    return out;
}

}  // namespace suscept

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "suscept/common.hpp"
#include "suscept/history.hpp"
#include "suscept/network.hpp"
#include "suscept/stats.hpp"

namespace suscept {

/// Per-node metric values aligned with net.nodes; unset where the table has
/// no row for the node or the metric is undefined there.
std::vector<std::optional<double>> align_scores(const FriendshipNetwork& net,
                                                const ScoreTable& table, Metric metric);

/// Edge-weighted mean of friends' scores, skipping friends with an undefined
/// metric. Nodes with no scorable friend are absent from the result.
std::map<std::string, double> weighted_friend_average(
    const FriendshipNetwork& net, const std::vector<std::optional<double>>& scores);

/// Pearson correlation of own score vs. weighted friend average over nodes
/// that have both. Throws DataError below 3 qualifying nodes.
stats::CorrelationResult homophily_correlation(
    const FriendshipNetwork& net, const std::vector<std::optional<double>>& scores);

struct IndividualGfp {
    // Unset where the node was not evaluated (undefined own score or no
    // scored friend).
    std::vector<std::optional<bool>> holds;
    double paradox_probability = 0.0;  // P
    std::size_t n_evaluated = 0;
};

/// Node-level paradox: own score strictly below the unweighted mean of
/// defined friend scores. P is the fraction of evaluated nodes that hold.
IndividualGfp individual_gfp(const FriendshipNetwork& net,
                             const std::vector<std::optional<double>>& scores);

struct NetworkGfp {
    double mean_s = 0.0;
    double mean_s_nn = 0.0;  // degree-weighted mean
    bool holds = false;
    std::size_t n = 0;
};

/// Network-level paradox: mean score vs. degree-weighted mean. Nodes with an
/// undefined score are excluded from both averages.
NetworkGfp network_gfp(const FriendshipNetwork& net,
                       const std::vector<std::optional<double>>& scores);

struct ParadoxGrid {
    struct Cell {
        std::int64_t count = 0;
        double holding_fraction = 0.0;
    };
    std::vector<std::int64_t> degree_edges;  // ascending, covers all degrees
    std::vector<double> s_edges;             // ascending, covers [0, 1]
    std::vector<Cell> cells;                 // row-major: degree bin x s bin

    std::size_t degree_bins() const { return degree_edges.size() - 1; }
    std::size_t s_bins() const { return s_edges.size() - 1; }
    const Cell& at(std::size_t k_bin, std::size_t s_bin) const {
        return cells[k_bin * s_bins() + s_bin];
    }
};

std::vector<std::int64_t> log2_degree_edges(int max_degree);
std::vector<double> uniform_s_edges(double width);

/// Buckets evaluated nodes by (degree, score); per-cell paradox fraction.
/// Throws DataError when a node falls outside the bin coverage.
ParadoxGrid paradox_grid(const FriendshipNetwork& net,
                         const std::vector<std::optional<double>>& scores,
                         const IndividualGfp& gfp,
                         const std::vector<std::int64_t>& degree_edges,
                         const std::vector<double>& s_edges);

struct NullSummary {
    std::string statistic;
    double observed = 0.0;
    double null_mean = 0.0;
    double null_sd = 0.0;
    double p_value = 1.0;
    int n_reps = 0;
};

struct GfpReport {
    Metric metric = Metric::Iar;
    stats::CorrelationResult rho_ks;  // Spearman degree vs. score
    double paradox_probability = 0.0;
    double mean_s = 0.0;
    double mean_s_nn = 0.0;
    bool network_gfp_holds = false;
    std::size_t n_nodes_used = 0;
    stats::CorrelationResult homophily;
    ParadoxGrid grid;
    std::vector<NullSummary> baseline1;  // degree-preserving edge swap
    std::vector<NullSummary> baseline2;  // random neighbor reassignment
};

/// Full report over one network + score table.
GfpReport analyze_gfp(const FriendshipNetwork& net, const ScoreTable& table, Metric metric,
                      double grid_s_width = 0.05);

std::string gfp_report_to_json(const GfpReport& report);
GfpReport gfp_report_from_json(std::string_view text);
std::string paradox_grid_to_csv(const ParadoxGrid& grid);

}  // namespace suscept

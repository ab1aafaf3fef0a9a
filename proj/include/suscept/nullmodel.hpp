#pragma once

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "suscept/analytics.hpp"
#include "suscept/common.hpp"
#include "suscept/network.hpp"

namespace suscept {

enum class NullModel { EdgeSwap, NeighborReassign };

std::string_view to_string(NullModel m);
NullModel null_model_from_string(std::string_view s);

enum class NullStatistic { Homophily, ParadoxP, MeanSNN };

std::string_view to_string(NullStatistic s);

struct NullConfig {
    NullModel model = NullModel::EdgeSwap;
    int n_reps = 100;
    int swap_multiplier = 10;  // attempted swaps = multiplier * |E|
    std::uint64_t seed = 0;
};

/// Degree-preserving randomization by repeated endpoint swaps. Attempts
/// swap_multiplier * |E| swaps; swaps that would create a self-loop or a
/// duplicate edge are rejected. Weights travel with the moved edges.
FriendshipNetwork degree_preserving_rewire(const FriendshipNetwork& net, int swap_multiplier,
                                           std::uint64_t seed);

struct ReassignOutcome {
    FriendshipNetwork net;
    std::size_t edges_before_merge = 0;
    std::size_t merged_collisions = 0;
};

/// Edge-count-preserving randomization: each edge keeps its lexicographically
/// smaller endpoint and gets a uniformly random other endpoint. Colliding
/// edges merge, summing weights. The node set is preserved.
ReassignOutcome random_neighbor_reassign(const FriendshipNetwork& net, std::uint64_t seed);

/// Repeated-trial null summary for one statistic. Replicate r uses seed
/// config.seed + r; the empirical two-sided p-value is
/// (1 + #{|null - mean| >= |observed - mean|}) / (n_reps + 1).
NullSummary null_distribution(const FriendshipNetwork& net,
                              const std::vector<std::optional<double>>& scores,
                              NullStatistic statistic, const NullConfig& config,
                              Exec exec = Exec::Parallel);

}  // namespace suscept

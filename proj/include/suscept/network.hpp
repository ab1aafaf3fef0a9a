#pragma once

#include <array>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "suscept/common.hpp"
#include "suscept/events.hpp"

namespace suscept {

enum class NetworkKind { Interaction, Retweet, Mention };

std::string_view to_string(NetworkKind kind);
NetworkKind network_kind_from_string(std::string_view s);

// Weighted undirected simple graph over target users. Nodes are sorted user
// ids; edges are (i, j) index pairs with i < j, sorted. Weight counts the
// qualifying events in both directions.
struct FriendshipNetwork {
    NetworkKind kind = NetworkKind::Interaction;
    std::vector<std::string> nodes;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::int64_t> weights;

    std::size_t node_count() const { return nodes.size(); }
    std::size_t edge_count() const { return edges.size(); }
    int node_index(const std::string& user) const;  // -1 when absent

    void validate() const;
};

/// Neighbor lists: adjacency()[i] holds (neighbor index, edge index) pairs.
std::vector<std::vector<std::pair<int, int>>> adjacency(const FriendshipNetwork& net);

std::vector<int> degrees(const FriendshipNetwork& net);

/// Builds the reciprocal friendship network of the given kind. An edge needs
/// at least one admissible event in each direction, both endpoints targets.
/// Isolated targets are not nodes.
FriendshipNetwork build_friendship_network(const std::vector<InteractionEvent>& events,
                                           const std::set<std::string>& targets,
                                           NetworkKind kind);

struct NodeFeatures {
    std::string user;
    int degree = 0;
    double degree_centrality = 0.0;
    double eigenvector_centrality = 0.0;
    double clustering_coefficient = 0.0;
};

/// Structural features per node, aligned with net.nodes. Eigenvector
/// centrality is computed by power iteration on the unweighted adjacency of
/// the largest component (zero elsewhere), L2-normalized.
std::vector<NodeFeatures> node_features(const FriendshipNetwork& net,
                                        Exec exec = Exec::Parallel);

/// `u v weight` per line, endpoints as user ids, edges in index order.
std::string network_to_edge_list(const FriendshipNetwork& net);
FriendshipNetwork network_from_edge_list(std::string_view text, NetworkKind kind);

}  // namespace suscept

#include "suscept/network.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <unordered_map>
#include <unordered_set>

namespace suscept {

namespace {

bool admits(NetworkKind kind, EventKind event) {
    switch (kind) {
        case NetworkKind::Interaction:
            return event == EventKind::Retweet || event == EventKind::Quote ||
                   event == EventKind::Reply;
        case NetworkKind::Retweet:
            return event == EventKind::Retweet;
        case NetworkKind::Mention:
            return event == EventKind::Quote || event == EventKind::Reply;
    }
    throw InternalError("admits: bad NetworkKind");
}

// Largest connected component; ties broken toward the component containing
// the lowest node index.
std::vector<int> largest_component(const std::vector<std::vector<std::pair<int, int>>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> comp(n, -1);
    int best_size = 0, best_id = -1;
    int next_id = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        const int id = next_id++;
        int size = 0;
        stack.push_back(s);
        comp[s] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            ++size;
            for (const auto& [w, e] : adj[v]) {
                if (comp[w] == -1) {
                    comp[w] = id;
                    stack.push_back(w);
                }
            }
        }
        if (size > best_size) {
            best_size = size;
            best_id = id;
        }
    }
    std::vector<int> members;
    members.reserve(best_size);
    for (int v = 0; v < n; ++v) {
        if (comp[v] == best_id) members.push_back(v);
    }
    return members;
}

// Power iteration on A + I restricted to one component. The identity shift
// keeps bipartite components from oscillating; the dominant eigenvector of A
// is unchanged.
std::vector<double> power_iteration(const std::vector<std::vector<std::pair<int, int>>>& adj,
                                    const std::vector<int>& members, Exec exec) {
    constexpr double kTol = 1e-8;
    constexpr int kMaxIter = 1000;

    const int n = static_cast<int>(adj.size());
    const int m = static_cast<int>(members.size());
    std::vector<int> slot(n, -1);
    for (int i = 0; i < m; ++i) slot[members[i]] = i;

    std::vector<double> x(m, 1.0 / std::sqrt(static_cast<double>(m)));
    std::vector<double> y(m, 0.0);
    for (int iter = 0; iter < kMaxIter; ++iter) {
        if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
            for (int i = 0; i < m; ++i) {
                double acc = x[i];
                for (const auto& [w, e] : adj[members[i]]) acc += x[slot[w]];
                y[i] = acc;
            }
        } else {
            for (int i = 0; i < m; ++i) {
                double acc = x[i];
                for (const auto& [w, e] : adj[members[i]]) acc += x[slot[w]];
                y[i] = acc;
            }
        }
        double norm = 0.0;
        for (int i = 0; i < m; ++i) norm += y[i] * y[i];
        norm = std::sqrt(norm);
        if (norm == 0.0) break;
        double delta = 0.0;
        for (int i = 0; i < m; ++i) {
            y[i] /= norm;
            delta = std::max(delta, std::fabs(y[i] - x[i]));
        }
        x.swap(y);
        if (delta < kTol) break;
    }
    for (double& v : x) v = std::max(v, 0.0);
    // Renormalize after the clamp.
    double norm = 0.0;
    for (double v : x) norm += v * v;
    norm = std::sqrt(norm);
    if (norm > 0.0) {
        for (double& v : x) v /= norm;
    }
    return x;
}

}  // namespace

std::string_view to_string(NetworkKind kind) {
    switch (kind) {
        case NetworkKind::Interaction: return "interaction";
        case NetworkKind::Retweet: return "retweet";
        case NetworkKind::Mention: return "mention";
    }
    throw InternalError("to_string: bad NetworkKind");
}

NetworkKind network_kind_from_string(std::string_view s) {
    if (s == "interaction") return NetworkKind::Interaction;
    if (s == "retweet") return NetworkKind::Retweet;
    if (s == "mention") return NetworkKind::Mention;
    throw UsageError("unknown network kind '" + std::string(s) + "'");
}

int FriendshipNetwork::node_index(const std::string& user) const {
    const auto it = std::lower_bound(nodes.begin(), nodes.end(), user);
    if (it != nodes.end() && *it == user) return static_cast<int>(it - nodes.begin());
    return -1;
}

void FriendshipNetwork::validate() const {
    if (edges.size() != weights.size()) throw InternalError("network: edge/weight size mismatch");
    std::set<std::array<int, 2>> seen;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        const auto [u, v] = edges[i];
        if (u < 0 || v < 0 || u >= static_cast<int>(nodes.size()) ||
            v >= static_cast<int>(nodes.size())) {
            throw InternalError("network: edge endpoint out of range");
        }
        if (u == v) throw InternalError("network: self-loop");
        if (u > v) throw InternalError("network: edge endpoints not ordered");
        if (!seen.insert(edges[i]).second) throw InternalError("network: parallel edge");
        if (weights[i] <= 0) throw InternalError("network: non-positive weight");
    }
}

std::vector<std::vector<std::pair<int, int>>> adjacency(const FriendshipNetwork& net) {
    std::vector<std::vector<std::pair<int, int>>> adj(net.nodes.size());
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        const auto [u, v] = net.edges[e];
        adj[u].emplace_back(v, static_cast<int>(e));
        adj[v].emplace_back(u, static_cast<int>(e));
    }
    return adj;
}

std::vector<int> degrees(const FriendshipNetwork& net) {
    std::vector<int> deg(net.nodes.size(), 0);
    for (const auto& [u, v] : net.edges) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

FriendshipNetwork build_friendship_network(const std::vector<InteractionEvent>& events,
                                           const std::set<std::string>& targets,
                                           NetworkKind kind) {
    // Directed counts of admissible events between target users.
    std::map<std::pair<std::string, std::string>, std::int64_t> directed;
    for (const auto& e : events) {
        if (!e.is_interaction() || !admits(kind, e.kind)) continue;
        if (!targets.contains(e.author) || !targets.contains(e.target_author)) continue;
        ++directed[{e.author, e.target_author}];
    }

    std::map<std::pair<std::string, std::string>, std::int64_t> reciprocal;
    for (const auto& [pair, count] : directed) {
        const auto& [a, b] = pair;
        if (a < b) {
            const auto back = directed.find({b, a});
            if (back != directed.end()) {
                reciprocal[{a, b}] = count + back->second;
            }
        }
    }

    FriendshipNetwork net;
    net.kind = kind;
    std::set<std::string> node_set;
    for (const auto& [pair, w] : reciprocal) {
        node_set.insert(pair.first);
        node_set.insert(pair.second);
    }
    net.nodes.assign(node_set.begin(), node_set.end());
    for (const auto& [pair, w] : reciprocal) {
        const int u = net.node_index(pair.first);
        const int v = net.node_index(pair.second);
        net.edges.push_back({std::min(u, v), std::max(u, v)});
        net.weights.push_back(w);
    }
    // node_set iteration is sorted, so edges from the sorted map are already
    // in order of (first id, second id); re-sort by index pair regardless.
    std::vector<std::size_t> order(net.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return net.edges[a] < net.edges[b];
    });
    FriendshipNetwork sorted;
    sorted.kind = kind;
    sorted.nodes = net.nodes;
    for (std::size_t i : order) {
        sorted.edges.push_back(net.edges[i]);
        sorted.weights.push_back(net.weights[i]);
    }
    sorted.validate();
    return sorted;
}

std::vector<NodeFeatures> node_features(const FriendshipNetwork& net, Exec exec) {
    if (net.nodes.empty()) throw DataError("node_features: empty network");
    const auto adj = adjacency(net);
    const int n = static_cast<int>(net.nodes.size());

    const auto members = largest_component(adj);
    const auto eig = power_iteration(adj, members, exec);
    std::vector<double> eig_full(n, 0.0);
    for (std::size_t i = 0; i < members.size(); ++i) eig_full[members[i]] = eig[i];

    std::vector<NodeFeatures> features(n);
    auto body = [&](int v) {
        NodeFeatures f;
        f.user = net.nodes[v];
        f.degree = static_cast<int>(adj[v].size());
        f.degree_centrality =
            n > 1 ? static_cast<double>(f.degree) / static_cast<double>(n - 1) : 0.0;
        f.eigenvector_centrality = eig_full[v];
        if (f.degree >= 2) {
            std::unordered_set<int> nb;
            nb.reserve(adj[v].size() * 2);
            for (const auto& [w, e] : adj[v]) nb.insert(w);
            std::int64_t triangles = 0;
            for (const auto& [w, e] : adj[v]) {
                for (const auto& [x, e2] : adj[w]) {
                    if (x > w && nb.contains(x)) ++triangles;
                }
            }
            const double wedges = 0.5 * f.degree * (f.degree - 1);
            f.clustering_coefficient = static_cast<double>(triangles) / wedges;
        }
        features[v] = std::move(f);
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (int v = 0; v < n; ++v) body(v);
    } else {
        for (int v = 0; v < n; ++v) body(v);
    }
    return features;
}

std::string network_to_edge_list(const FriendshipNetwork& net) {
    std::string out;
    for (std::size_t e = 0; e < net.edges.size(); ++e) {
        out += net.nodes[net.edges[e][0]];
        out += ' ';
        out += net.nodes[net.edges[e][1]];
        out += ' ';
        out += std::to_string(net.weights[e]);
        out += '\n';
    }
    return out;
}

FriendshipNetwork network_from_edge_list(std::string_view text, NetworkKind kind) {
    struct RawEdge {
        std::string u, v;
        std::int64_t w;
    };
    std::vector<RawEdge> raw;
    std::set<std::string> node_set;

    std::size_t pos = 0;
    std::size_t line_no = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        ++line_no;
        if (line.empty()) continue;
        const std::size_t s1 = line.find(' ');
        const std::size_t s2 = s1 == std::string_view::npos ? s1 : line.find(' ', s1 + 1);
        if (s1 == std::string_view::npos || s2 == std::string_view::npos) {
            throw DataError("edge list line " + std::to_string(line_no) + ": expected 'u v w'");
        }
        RawEdge e;
        e.u = std::string(line.substr(0, s1));
        e.v = std::string(line.substr(s1 + 1, s2 - s1 - 1));
        const std::string_view wv = line.substr(s2 + 1);
        const auto res = std::from_chars(wv.data(), wv.data() + wv.size(), e.w);
        if (res.ec != std::errc() || res.ptr != wv.data() + wv.size() || e.w <= 0) {
            throw DataError("edge list line " + std::to_string(line_no) + ": bad weight");
        }
        if (e.u == e.v) {
            throw DataError("edge list line " + std::to_string(line_no) + ": self-loop");
        }
        node_set.insert(e.u);
        node_set.insert(e.v);
        raw.push_back(std::move(e));
    }

    FriendshipNetwork net;
    net.kind = kind;
    net.nodes.assign(node_set.begin(), node_set.end());
    std::map<std::array<int, 2>, std::int64_t> acc;
    for (const auto& e : raw) {
        const int u = net.node_index(e.u);
        const int v = net.node_index(e.v);
        const std::array<int, 2> key{std::min(u, v), std::max(u, v)};
        if (acc.contains(key)) throw DataError("edge list: duplicate edge");
        acc[key] = e.w;
    }
    for (const auto& [key, w] : acc) {
        net.edges.push_back(key);
        net.weights.push_back(w);
    }
    net.validate();
    return net;
}

}  // namespace suscept

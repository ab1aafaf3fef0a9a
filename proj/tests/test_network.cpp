#include <doctest.h>

#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "suscept/events.hpp"
#include "suscept/network.hpp"
#include "suscept/synth.hpp"

using namespace suscept;

namespace {

InteractionEvent interact(std::string id, EventKind kind, std::string author,
                          std::string target, std::int64_t ts) {
    InteractionEvent e;
    e.event_id = std::move(id);
    e.kind = kind;
    e.author = std::move(author);
    e.target_author = std::move(target);
    e.timestamp = ts;
    e.urls = {"https://u.example/" + e.event_id};
    return e;
}

FriendshipNetwork make_network(const std::vector<std::pair<std::string, std::string>>& edges,
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
    FriendshipNetwork sorted;
    sorted.nodes = net.nodes;
    for (std::size_t i : order) {
        sorted.edges.push_back(net.edges[i]);
        sorted.weights.push_back(net.weights[i]);
    }
    sorted.validate();
    return sorted;
}

}  // namespace

TEST_CASE("one-directional interaction is not friendship") {
    const std::vector<InteractionEvent> events{
        interact("1", EventKind::Retweet, "u", "v", 10),
    };
    const auto net = build_friendship_network(events, {"u", "v"}, NetworkKind::Retweet);
    CHECK(net.edge_count() == 0);
    CHECK(net.node_count() == 0);
}

TEST_CASE("reciprocal retweets build a weighted edge") {
    const std::vector<InteractionEvent> events{
        interact("1", EventKind::Retweet, "u", "v", 10),
        interact("2", EventKind::Retweet, "u", "v", 20),
        interact("3", EventKind::Retweet, "v", "u", 30),
    };
    const auto net = build_friendship_network(events, {"u", "v"}, NetworkKind::Retweet);
    REQUIRE(net.edge_count() == 1);
    CHECK(net.weights[0] == 3);
}

TEST_CASE("kind filtering separates retweet and mention networks") {
    const std::vector<InteractionEvent> events{
        interact("1", EventKind::Reply, "u", "v", 10),
        interact("2", EventKind::Quote, "v", "u", 20),
    };
    CHECK(build_friendship_network(events, {"u", "v"}, NetworkKind::Retweet).edge_count() == 0);
    const auto mention = build_friendship_network(events, {"u", "v"}, NetworkKind::Mention);
    REQUIRE(mention.edge_count() == 1);
    CHECK(mention.weights[0] == 2);
    const auto interaction =
        build_friendship_network(events, {"u", "v"}, NetworkKind::Interaction);
    REQUIRE(interaction.edge_count() == 1);
    CHECK(interaction.weights[0] == 2);
}

TEST_CASE("non-target endpoints are excluded") {
    const std::vector<InteractionEvent> events{
        interact("1", EventKind::Retweet, "u", "x", 10),
        interact("2", EventKind::Retweet, "x", "u", 20),
    };
    CHECK(build_friendship_network(events, {"u"}, NetworkKind::Retweet).edge_count() == 0);
}

TEST_CASE("interaction weights dominate the split networks") {
    Rng rng(99);
    std::vector<InteractionEvent> events;
    for (int i = 0; i < 300; ++i) {
        const int a = static_cast<int>(rng.uniform_int(0, 9));
        int b = static_cast<int>(rng.uniform_int(0, 8));
        if (b >= a) ++b;
        const auto kind = static_cast<EventKind>(rng.uniform_int(1, 3));
        events.push_back(interact("e" + std::to_string(i), kind, "u" + std::to_string(a),
                                  "u" + std::to_string(b), i));
    }
    std::set<std::string> targets;
    for (int i = 0; i < 10; ++i) targets.insert("u" + std::to_string(i));

    const auto inter = build_friendship_network(events, targets, NetworkKind::Interaction);
    const auto rt = build_friendship_network(events, targets, NetworkKind::Retweet);
    const auto mn = build_friendship_network(events, targets, NetworkKind::Mention);

    auto weight_of = [](const FriendshipNetwork& net, const std::string& a,
                        const std::string& b) -> std::int64_t {
        const int u = net.node_index(a), v = net.node_index(b);
        if (u < 0 || v < 0) return 0;
        for (std::size_t e = 0; e < net.edges.size(); ++e) {
            if (net.edges[e] == std::array<int, 2>{std::min(u, v), std::max(u, v)}) {
                return net.weights[e];
            }
        }
        return 0;
    };
    for (const auto& net : {rt, mn}) {
        for (std::size_t e = 0; e < net.edges.size(); ++e) {
            const auto& a = net.nodes[net.edges[e][0]];
            const auto& b = net.nodes[net.edges[e][1]];
            CHECK(weight_of(inter, a, b) >= net.weights[e]);
        }
    }

    // Admissible event sets: retweet + mention partition interaction.
    std::map<std::pair<std::string, std::string>, int> cnt_int, cnt_rt, cnt_mn;
    for (const auto& e : events) {
        cnt_int[{e.author, e.target_author}]++;
        if (e.kind == EventKind::Retweet) cnt_rt[{e.author, e.target_author}]++;
        if (e.kind == EventKind::Quote || e.kind == EventKind::Reply) {
            cnt_mn[{e.author, e.target_author}]++;
        }
    }
    for (const auto& [pair, c] : cnt_int) {
        CHECK(c == cnt_rt[pair] + cnt_mn[pair]);
    }
}

TEST_CASE("adjacency is symmetric") {
    const auto net = make_network({{"a", "b"}, {"b", "c"}, {"a", "c"}, {"c", "d"}});
    const auto adj = adjacency(net);
    for (std::size_t v = 0; v < net.node_count(); ++v) {
        for (const auto& [w, e] : adj[v]) {
            bool found = false;
            for (const auto& [back, e2] : adj[static_cast<std::size_t>(w)]) {
                if (back == static_cast<int>(v)) found = true;
            }
            CHECK(found);
        }
    }
}

TEST_CASE("triangle features") {
    const auto net = make_network({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    const auto features = node_features(net);
    for (const auto& f : features) {
        CHECK(f.degree == 2);
        CHECK(f.degree_centrality == doctest::Approx(1.0));
        CHECK(f.clustering_coefficient == doctest::Approx(1.0));
        CHECK(f.eigenvector_centrality == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-7));
    }
}

TEST_CASE("star features") {
    const auto net = make_network(
        {{"center", "l1"}, {"center", "l2"}, {"center", "l3"}, {"center", "l4"}});
    const auto features = node_features(net);
    for (const auto& f : features) {
        if (f.user == "center") {
            CHECK(f.degree == 4);
            CHECK(f.clustering_coefficient == 0.0);
        } else {
            CHECK(f.degree_centrality == doctest::Approx(0.25));
        }
    }
}

TEST_CASE("path features match the exact eigenvector") {
    const auto net = make_network({{"a", "b"}, {"b", "c"}});
    const auto features = node_features(net);
    for (const auto& f : features) {
        if (f.user == "b") {
            CHECK(f.clustering_coefficient == 0.0);
            CHECK(f.eigenvector_centrality == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-7));
        } else {
            CHECK(f.eigenvector_centrality == doctest::Approx(0.5).epsilon(1e-7));
        }
    }
}

TEST_CASE("eigenvector centrality is zero off the largest component") {
    const auto net = make_network({{"a", "b"}, {"b", "c"}, {"x", "y"}});
    const auto features = node_features(net);
    for (const auto& f : features) {
        if (f.user == "x" || f.user == "y") {
            CHECK(f.eigenvector_centrality == 0.0);
        } else {
            CHECK(f.eigenvector_centrality > 0.0);
        }
    }
}

TEST_CASE("power iteration residual is small on random graphs") {
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
        SynthConfig config;
        config.n_nodes = 200;
        config.degree.kind = DegreeDistKind::Poisson;
        config.degree.lambda = 5.0;
        config.seed = seed;
        const auto net = generate_graph(config).net;
        const auto features = node_features(net);
        const auto adj = adjacency(net);

        std::vector<double> x(net.node_count());
        for (std::size_t v = 0; v < net.node_count(); ++v) {
            x[v] = features[v].eigenvector_centrality;
        }
        std::vector<double> ax(net.node_count(), 0.0);
        for (std::size_t v = 0; v < net.node_count(); ++v) {
            for (const auto& [w, e] : adj[v]) ax[v] += x[static_cast<std::size_t>(w)];
        }
        double lambda = 0.0;
        for (std::size_t v = 0; v < net.node_count(); ++v) lambda += x[v] * ax[v];
        double residual = 0.0;
        for (std::size_t v = 0; v < net.node_count(); ++v) {
            const double r = ax[v] - lambda * x[v];
            residual += r * r;
        }
        CHECK(std::sqrt(residual) < 1e-6);
    }
}

TEST_CASE("node_features serial equals parallel") {
    SynthConfig config;
    config.n_nodes = 300;
    config.seed = 9;
    const auto net = generate_graph(config).net;
    const auto serial = node_features(net, Exec::Serial);
    const auto parallel = node_features(net, Exec::Parallel);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].degree == parallel[i].degree);
        CHECK(serial[i].eigenvector_centrality == parallel[i].eigenvector_centrality);
        CHECK(serial[i].clustering_coefficient == parallel[i].clustering_coefficient);
    }
}

TEST_CASE("empty network features are an error") {
    FriendshipNetwork net;
    CHECK_THROWS_AS((void)node_features(net), DataError);
}

TEST_CASE("edge list round trip") {
    const auto net = make_network({{"a", "b"}, {"b", "c"}, {"a", "c"}}, {2, 4, 6});
    const auto text = network_to_edge_list(net);
    const auto parsed = network_from_edge_list(text, NetworkKind::Interaction);
    CHECK(parsed.nodes == net.nodes);
    CHECK(parsed.edges == net.edges);
    CHECK(parsed.weights == net.weights);
    CHECK(network_to_edge_list(parsed) == text);

    CHECK_THROWS_AS((void)network_from_edge_list("a a 3\n", NetworkKind::Retweet), DataError);
    CHECK_THROWS_AS((void)network_from_edge_list("a b\n", NetworkKind::Retweet), DataError);
    CHECK_THROWS_AS((void)network_from_edge_list("a b 0\n", NetworkKind::Retweet), DataError);
}

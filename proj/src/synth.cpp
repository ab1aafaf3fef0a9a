#include "suscept/synth.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <unordered_set>

#include <json.hpp>

#include "suscept/analytics.hpp"
#include "suscept/stats.hpp"

namespace suscept {

namespace {

using nlohmann::json;

constexpr std::uint64_t kGraphTag = 0x67726170680001ULL;
constexpr std::uint64_t kAttrTag = 0x6174747200002ULL;
constexpr std::uint64_t kEventTag = 0x6576656e740003ULL;
constexpr std::uint64_t kBlendTag = 0x626c656e640004ULL;

std::string node_name(int i) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "u%06d", i);
    return buf;
}

int node_index_from_name(const std::string& name) {
    return std::atoi(name.c_str() + 1);
}

std::vector<int> sample_degrees(const SynthConfig& config, Rng& rng) {
    const auto& d = config.degree;
    auto draw = [&]() -> int {
        switch (d.kind) {
            case DegreeDistKind::Regular:
                return d.k;
            case DegreeDistKind::Poisson:
                return std::max(1, rng.poisson(d.lambda));
            case DegreeDistKind::Powerlaw: {
                // Inverse CDF over the truncated integer support.
                const double u = rng.uniform();
                double total = 0.0;
                for (int k = d.k_min; k <= d.k_max; ++k) total += std::pow(k, -d.gamma);
                double acc = 0.0;
                for (int k = d.k_min; k <= d.k_max; ++k) {
                    acc += std::pow(k, -d.gamma) / total;
                    if (u < acc) return k;
                }
                return d.k_max;
            }
        }
        throw InternalError("sample_degrees: bad distribution");
    };

    std::vector<int> degrees(static_cast<std::size_t>(config.n_nodes));
    for (auto& k : degrees) k = draw();
    long long sum = std::accumulate(degrees.begin(), degrees.end(), 0LL);
    int attempts = 0;
    while (sum % 2 != 0) {
        if (d.kind == DegreeDistKind::Regular || ++attempts > 1000) {
            throw DataError("generate_graph: infeasible degree sequence (odd stub total)");
        }
        sum -= degrees.back();
        degrees.back() = draw();
        sum += degrees.back();
    }
    return degrees;
}

double marginal_draw(const Marginal& m, Rng& rng) {
    switch (m.kind) {
        case MarginalKind::Uniform: return rng.uniform();
        case MarginalKind::Beta: return rng.beta(m.a, m.b);
    }
    throw InternalError("marginal_draw: bad marginal");
}

std::uint64_t edge_key(int u, int v) {
    return (static_cast<std::uint64_t>(static_cast<std::uint32_t>(std::min(u, v))) << 32) |
           static_cast<std::uint32_t>(std::max(u, v));
}

// Latent anchors per original node index: marginal draws, rank-coupled to
// the sampled degree sequence. Pure function of the config, so both the
// wiring and the attribute assignment can derive the same anchors.
std::vector<double> latent_anchors(const SynthConfig& config, const std::vector<int>& degrees) {
    Rng rng(splitmix64(config.seed ^ kAttrTag));
    const std::size_t n = degrees.size();
    std::vector<double> anchors(n);
    for (auto& v : anchors) v = marginal_draw(config.marginal, rng);
    if (config.rho_ks_target != 0.0) {
        const std::size_t m = static_cast<std::size_t>(
            std::llround(std::fabs(config.rho_ks_target) * static_cast<double>(n)));
        if (m >= 2) {
            auto coupled = rng.sample_indices(n, m);
            std::sort(coupled.begin(), coupled.end(), [&](std::size_t a, std::size_t b) {
                if (degrees[a] != degrees[b]) return degrees[a] < degrees[b];
                return a < b;
            });
            std::vector<double> vals;
            vals.reserve(m);
            for (std::size_t i : coupled) vals.push_back(anchors[i]);
            std::sort(vals.begin(), vals.end());
            if (config.rho_ks_target < 0.0) std::reverse(vals.begin(), vals.end());
            for (std::size_t j = 0; j < m; ++j) anchors[coupled[j]] = vals[j];
        }
    }
    return anchors;
}

}  // namespace

void SynthConfig::validate() const {
    if (n_nodes < 2) throw DataError("synth: n_nodes must be >= 2");
    if (rho_ks_target < -1.0 || rho_ks_target > 1.0) throw DataError("synth: rho_ks_target out of [-1,1]");
    if (homophily_strength < 0.0 || homophily_strength > 1.0) {
        throw DataError("synth: homophily_strength out of [0,1]");
    }
    if (planted_iar < 0.0 || planted_iar > 1.0) throw DataError("synth: planted_iar out of [0,1]");
    if (planted_sar < 0.0 || planted_sar > 1.0) throw DataError("synth: planted_sar out of [0,1]");
    if (intensity < 0) throw DataError("synth: intensity must be >= 0");
    if (degree.kind == DegreeDistKind::Powerlaw) {
        if (degree.k_min < 1 || degree.k_max < degree.k_min || degree.gamma <= 1.0) {
            throw DataError("synth: bad powerlaw parameters");
        }
    }
    if (degree.kind == DegreeDistKind::Regular && degree.k < 1) {
        throw DataError("synth: regular degree must be >= 1");
    }
    if (degree.kind == DegreeDistKind::Poisson && degree.lambda <= 0.0) {
        throw DataError("synth: poisson lambda must be positive");
    }
    window().validate();
    if (intensity > 0 && window_end - (window_start + buffer_days * 86400) < 3 * 3600 + 2) {
        throw DataError("synth: window too short after the buffer for content generation");
    }
}

CorpusWindow SynthConfig::window() const {
    CorpusWindow w;
    w.start = window_start;
    w.end = window_end;
    w.buffer_end = window_start + buffer_days * 86400;
    return w;
}

SynthConfig synth_config_from_json(std::string_view text) {
    json j = json::parse(text);
    SynthConfig c;
    c.n_nodes = j.value("n_nodes", c.n_nodes);
    if (j.contains("degree")) {
        const auto& d = j["degree"];
        const std::string kind = d.value("kind", std::string("powerlaw"));
        if (kind == "powerlaw") {
            c.degree.kind = DegreeDistKind::Powerlaw;
        } else if (kind == "regular") {
            c.degree.kind = DegreeDistKind::Regular;
        } else if (kind == "poisson") {
            c.degree.kind = DegreeDistKind::Poisson;
        } else {
            throw DataError("synth config: unknown degree kind '" + kind + "'");
        }
        c.degree.gamma = d.value("gamma", c.degree.gamma);
        c.degree.k_min = d.value("k_min", c.degree.k_min);
        c.degree.k_max = d.value("k_max", c.degree.k_max);
        c.degree.k = d.value("k", c.degree.k);
        c.degree.lambda = d.value("lambda", c.degree.lambda);
    }
    c.rho_ks_target = j.value("rho_ks_target", c.rho_ks_target);
    c.homophily_strength = j.value("homophily_strength", c.homophily_strength);
    if (j.contains("marginal")) {
        const auto& m = j["marginal"];
        const std::string kind = m.value("kind", std::string("uniform"));
        if (kind == "uniform") {
            c.marginal.kind = MarginalKind::Uniform;
        } else if (kind == "beta") {
            c.marginal.kind = MarginalKind::Beta;
        } else {
            throw DataError("synth config: unknown marginal kind '" + kind + "'");
        }
        c.marginal.a = m.value("a", c.marginal.a);
        c.marginal.b = m.value("b", c.marginal.b);
    }
    c.seed = j.value("seed", c.seed);
    c.window_start = j.value("window_start", c.window_start);
    c.window_end = j.value("window_end", c.window_end);
    c.buffer_days = j.value("buffer_days", c.buffer_days);
    c.intensity = j.value("intensity", c.intensity);
    c.planted_iar = j.value("planted_iar", c.planted_iar);
    c.planted_sar = j.value("planted_sar", c.planted_sar);
    if (j.contains("attribute_metric")) {
        if (j["attribute_metric"].is_null() || j["attribute_metric"] == "none") {
            c.attribute_metric = std::nullopt;
        } else {
            c.attribute_metric = metric_from_string(j["attribute_metric"].get<std::string>());
        }
    }
    c.validate();
    return c;
}

std::string synth_config_to_json(const SynthConfig& c) {
    json d;
    switch (c.degree.kind) {
        case DegreeDistKind::Powerlaw:
            d = json{{"kind", "powerlaw"}, {"gamma", c.degree.gamma},
                     {"k_min", c.degree.k_min}, {"k_max", c.degree.k_max}};
            break;
        case DegreeDistKind::Regular:
            d = json{{"kind", "regular"}, {"k", c.degree.k}};
            break;
        case DegreeDistKind::Poisson:
            d = json{{"kind", "poisson"}, {"lambda", c.degree.lambda}};
            break;
    }
    json m;
    if (c.marginal.kind == MarginalKind::Uniform) {
        m = json{{"kind", "uniform"}};
    } else {
        m = json{{"kind", "beta"}, {"a", c.marginal.a}, {"b", c.marginal.b}};
    }
    json j{{"n_nodes", c.n_nodes},
           {"degree", d},
           {"rho_ks_target", c.rho_ks_target},
           {"homophily_strength", c.homophily_strength},
           {"marginal", m},
           {"seed", c.seed},
           {"window_start", c.window_start},
           {"window_end", c.window_end},
           {"buffer_days", c.buffer_days},
           {"intensity", c.intensity},
           {"planted_iar", c.planted_iar},
           {"planted_sar", c.planted_sar}};
    if (c.attribute_metric) {
        j["attribute_metric"] = std::string(to_string(*c.attribute_metric));
    } else {
        j["attribute_metric"] = nullptr;
    }
    return j.dump(2) + "\n";
}

GraphOutcome generate_graph(const SynthConfig& config) {
    config.validate();
    Rng rng(splitmix64(config.seed ^ kGraphTag));
    const auto degrees = sample_degrees(config, rng);

    std::vector<int> stubs;
    for (int i = 0; i < config.n_nodes; ++i) {
        for (int s = 0; s < degrees[static_cast<std::size_t>(i)]; ++s) stubs.push_back(i);
    }
    const std::size_t target_edges = stubs.size() / 2;
    const std::size_t budget = 100 * std::max<std::size_t>(target_edges, 1);

    std::unordered_set<std::uint64_t> present;
    std::vector<std::array<int, 2>> edges;
    std::size_t attempts = 0;

    std::vector<int> pool = stubs;
    if (config.homophily_strength > 0.0) {
        // Assortative first pass: stubs sorted by their node's latent anchor
        // plus jitter, adjacent stubs paired. The jitter width shrinks as the
        // homophily strength grows.
        const auto anchors = latent_anchors(config, degrees);
        const double jitter = std::max(0.02, 1.0 - config.homophily_strength);
        std::vector<std::pair<double, int>> keyed;
        keyed.reserve(pool.size());
        for (int s : pool) {
            keyed.emplace_back(anchors[static_cast<std::size_t>(s)] + rng.normal(0.0, jitter),
                               s);
        }
        std::sort(keyed.begin(), keyed.end());
        std::vector<int> rejected;
        for (std::size_t i = 0; i + 1 < keyed.size(); i += 2) {
            ++attempts;
            const int a = keyed[i].second;
            const int b = keyed[i + 1].second;
            if (a == b || present.contains(edge_key(a, b))) {
                rejected.push_back(a);
                rejected.push_back(b);
                continue;
            }
            present.insert(edge_key(a, b));
            edges.push_back({std::min(a, b), std::max(a, b)});
        }
        if (keyed.size() % 2 == 1) rejected.push_back(keyed.back().second);
        pool = std::move(rejected);
    }
    while (pool.size() >= 2 && attempts < budget) {
        rng.shuffle(pool);
        std::vector<int> rejected;
        for (std::size_t i = 0; i + 1 < pool.size(); i += 2) {
            ++attempts;
            const int a = pool[i];
            const int b = pool[i + 1];
            if (a == b || present.contains(edge_key(a, b))) {
                rejected.push_back(a);
                rejected.push_back(b);
                continue;
            }
            present.insert(edge_key(a, b));
            edges.push_back({std::min(a, b), std::max(a, b)});
        }
        if (pool.size() % 2 == 1) rejected.push_back(pool.back());
        if (rejected.size() == pool.size()) break;  // no progress possible
        pool = std::move(rejected);
    }

    GraphOutcome out;
    out.dropped_stubs = pool.size();

    // Nodes that ended isolated are not part of the network.
    std::vector<bool> connected(static_cast<std::size_t>(config.n_nodes), false);
    for (const auto& [u, v] : edges) {
        connected[static_cast<std::size_t>(u)] = true;
        connected[static_cast<std::size_t>(v)] = true;
    }
    std::vector<int> remap(static_cast<std::size_t>(config.n_nodes), -1);
    int next = 0;
    for (int i = 0; i < config.n_nodes; ++i) {
        if (connected[static_cast<std::size_t>(i)]) {
            remap[static_cast<std::size_t>(i)] = next++;
            out.net.nodes.push_back(node_name(i));
        }
    }
    for (const auto& [u, v] : edges) {
        const int ru = remap[static_cast<std::size_t>(u)];
        const int rv = remap[static_cast<std::size_t>(v)];
        out.net.edges.push_back({std::min(ru, rv), std::max(ru, rv)});
        out.net.weights.push_back(1);
    }
    std::vector<std::size_t> order(out.net.edges.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return out.net.edges[a] < out.net.edges[b];
    });
    std::vector<std::array<int, 2>> sorted_edges;
    sorted_edges.reserve(order.size());
    for (std::size_t i : order) sorted_edges.push_back(out.net.edges[i]);
    out.net.edges = std::move(sorted_edges);
    out.net.kind = NetworkKind::Interaction;
    out.net.validate();
    return out;
}

AttributeOutcome assign_attributes(const FriendshipNetwork& net, const SynthConfig& config) {
    const std::size_t n = net.node_count();
    if (n == 0) throw DataError("assign_attributes: empty network");

    const auto deg = degrees(net);
    std::vector<double> values(n);
    if (config.homophily_strength > 0.0) {
        // The wiring pass already placed similar anchors next to each other;
        // each node blends the mean of its neighbors' anchors with a fresh
        // independent draw. Anchors are re-derived from the config, matching
        // the ones generate_graph wired with.
        Rng graph_rng(splitmix64(config.seed ^ kGraphTag));
        const auto sampled = sample_degrees(config, graph_rng);
        const auto anchors = latent_anchors(config, sampled);
        Rng rng(splitmix64(config.seed ^ kBlendTag));
        const auto adj = adjacency(net);
        const double h = config.homophily_strength;
        for (std::size_t v = 0; v < n; ++v) {
            const double fresh = marginal_draw(config.marginal, rng);
            if (adj[v].empty()) {
                values[v] = fresh;
                continue;
            }
            long double sum = 0.0L;
            for (const auto& [w, e] : adj[v]) {
                sum += anchors[static_cast<std::size_t>(
                    node_index_from_name(net.nodes[static_cast<std::size_t>(w)]))];
            }
            values[v] =
                h * static_cast<double>(sum / adj[v].size()) + (1.0 - h) * fresh;
        }
    } else {
        // No homophily: marginal draws, rank-coupled to the realized degrees.
        Rng rng(splitmix64(config.seed ^ kAttrTag));
        for (auto& v : values) v = marginal_draw(config.marginal, rng);
        if (config.rho_ks_target != 0.0) {
            const std::size_t m = static_cast<std::size_t>(
                std::llround(std::fabs(config.rho_ks_target) * static_cast<double>(n)));
            if (m >= 2) {
                auto coupled = rng.sample_indices(n, m);
                std::sort(coupled.begin(), coupled.end(), [&](std::size_t a, std::size_t b) {
                    if (deg[a] != deg[b]) return deg[a] < deg[b];
                    return a < b;
                });
                std::vector<double> vals;
                vals.reserve(m);
                for (std::size_t i : coupled) vals.push_back(values[i]);
                std::sort(vals.begin(), vals.end());
                if (config.rho_ks_target < 0.0) std::reverse(vals.begin(), vals.end());
                for (std::size_t j = 0; j < m; ++j) values[coupled[j]] = vals[j];
            }
        }
    }

    AttributeOutcome out;
    out.values = values;
    std::vector<double> dd(n);
    for (std::size_t i = 0; i < n; ++i) dd[i] = deg[i];
    try {
        out.achieved_rho_ks = stats::spearman(dd, values).coefficient;
    } catch (const DataError&) {
        out.achieved_rho_ks = 0.0;  // constant degree sequence
    }
    std::vector<std::optional<double>> opt(values.begin(), values.end());
    try {
        out.achieved_homophily = homophily_correlation(net, opt).coefficient;
    } catch (const DataError&) {
        out.achieved_homophily = 0.0;
    }
    return out;
}

SynthCorpus generate_corpus(const SynthConfig& config) {
    config.validate();
    SynthCorpus corpus;
    auto graph = generate_graph(config);
    corpus.truth_network = std::move(graph.net);
    corpus.attributes = assign_attributes(corpus.truth_network, config);

    const std::size_t n = corpus.truth_network.node_count();
    corpus.planted_iar.assign(n, config.planted_iar);
    corpus.planted_sar.assign(n, config.planted_sar);
    if (config.attribute_metric == Metric::Iar) {
        corpus.planted_iar = corpus.attributes.values;
    } else if (config.attribute_metric == Metric::Sar) {
        corpus.planted_sar = corpus.attributes.values;
    }

    const CorpusWindow window = config.window();
    const std::int64_t content_start = window.buffer_end + 3600;
    const std::int64_t content_end = window.end - 2 * 3600;
    const std::int64_t t_reciprocity = window.end;
    const int posts = config.intensity;
    const std::string source = "src";

    std::vector<InteractionEvent> events;
    std::int64_t next_id = 0;
    auto make_id = [&next_id]() {
        char buf[24];
        std::snprintf(buf, sizeof(buf), "e%09lld", static_cast<long long>(next_id++));
        return std::string(buf);
    };

    std::vector<std::int64_t> authored(n + 1, 0);  // last slot: source
    std::vector<std::string> reshare_url(n);
    std::vector<std::int64_t> url_instances(n, 0);

    if (posts > 0) {
        // Content posts by the shared source; every node is exposed to all of
        // them once it has interacted with the source.
        std::vector<std::int64_t> post_times(static_cast<std::size_t>(posts));
        std::vector<std::string> post_urls(static_cast<std::size_t>(posts));
        for (int j = 0; j < posts; ++j) {
            const std::int64_t span = content_end - content_start;
            post_times[static_cast<std::size_t>(j)] =
                posts == 1 ? content_start
                           : content_start + span * j / (posts - 1);
            char buf[32];
            std::snprintf(buf, sizeof(buf), "https://content.example/%06d", j);
            post_urls[static_cast<std::size_t>(j)] = buf;
        }

        for (std::size_t i = 0; i < n; ++i) {
            InteractionEvent watch;
            watch.event_id = make_id();
            watch.kind = EventKind::Reply;
            watch.author = corpus.truth_network.nodes[i];
            watch.target_author = source;
            watch.timestamp = window.start;
            watch.urls = {"https://watch.example/" + corpus.truth_network.nodes[i]};
            events.push_back(std::move(watch));
            ++authored[i];
        }
        for (int j = 0; j < posts; ++j) {
            InteractionEvent post;
            post.event_id = make_id();
            post.kind = EventKind::Original;
            post.author = source;
            post.timestamp = post_times[static_cast<std::size_t>(j)];
            post.urls = {post_urls[static_cast<std::size_t>(j)]};
            events.push_back(std::move(post));
            ++authored[n];
        }

        for (std::size_t i = 0; i < n; ++i) {
            Rng rng(splitmix64(config.seed ^ kEventTag ^ (0x10001ULL * (i + 1))));
            const double iar = std::clamp(corpus.planted_iar[i], 0.0, 1.0);
            const double sar = std::clamp(corpus.planted_sar[i], 0.0, 1.0);

            std::int64_t n_influence = 0;
            for (int j = 0; j < posts; ++j) {
                if (!rng.bernoulli(iar)) continue;
                ++n_influence;
                InteractionEvent adopt;
                adopt.event_id = make_id();
                adopt.kind = EventKind::Original;
                adopt.author = corpus.truth_network.nodes[i];
                adopt.timestamp =
                    post_times[static_cast<std::size_t>(j)] + rng.uniform_int(60, 3600);
                adopt.urls = {post_urls[static_cast<std::size_t>(j)]};
                if (reshare_url[i].empty()) reshare_url[i] = adopt.urls.front();
                events.push_back(std::move(adopt));
                ++authored[i];
            }

            std::int64_t n_spontaneous = 0;
            if (sar > 0.0) {
                if (n_influence > 0 && sar < 1.0) {
                    n_spontaneous = std::llround(static_cast<double>(n_influence) * sar /
                                                 (1.0 - sar));
                } else {
                    // No influence-driven adoptions to balance against (or
                    // sar == 1); emit a straight share of the exposure count.
                    n_spontaneous = std::llround(static_cast<double>(posts) * sar);
                }
            }
            for (std::int64_t j = 0; j < n_spontaneous; ++j) {
                InteractionEvent spont;
                spont.event_id = make_id();
                spont.kind = EventKind::Original;
                spont.author = corpus.truth_network.nodes[i];
                spont.timestamp = content_start + rng.uniform_int(0, content_end - content_start);
                char buf[64];
                std::snprintf(buf, sizeof(buf), "https://spont.example/%s/%06lld",
                              corpus.truth_network.nodes[i].c_str(),
                              static_cast<long long>(j));
                spont.urls = {buf};
                if (reshare_url[i].empty()) reshare_url[i] = spont.urls.front();
                events.push_back(std::move(spont));
                ++authored[i];
            }

            // A node with no post-buffer adoption re-shares its pre-buffer
            // watch URL instead; the earliest share stays pre-buffer, so the
            // buffered adoption set is untouched.
            if (reshare_url[i].empty()) {
                reshare_url[i] = "https://watch.example/" + corpus.truth_network.nodes[i];
            }
            url_instances[i] = 1 + n_influence + n_spontaneous;
        }
    }

    // Reciprocity retweets along every edge, all at one shared timestamp so
    // they expose nothing; each re-shares a URL its author already adopted,
    // leaving the measured sets unchanged.
    for (std::size_t e = 0; e < corpus.truth_network.edges.size(); ++e) {
        const auto [u, v] = corpus.truth_network.edges[e];
        for (const auto& [from, to] : {std::pair(u, v), std::pair(v, u)}) {
            InteractionEvent recip;
            recip.event_id = make_id();
            recip.kind = EventKind::Retweet;
            recip.author = corpus.truth_network.nodes[static_cast<std::size_t>(from)];
            recip.target_author = corpus.truth_network.nodes[static_cast<std::size_t>(to)];
            recip.timestamp = t_reciprocity;
            if (!reshare_url[static_cast<std::size_t>(from)].empty()) {
                recip.urls = {reshare_url[static_cast<std::size_t>(from)]};
                ++url_instances[static_cast<std::size_t>(from)];
            }
            events.push_back(std::move(recip));
            ++authored[static_cast<std::size_t>(from)];
        }
    }

    // Nodes whose planted rates leave them short of the default 10-URL
    // target threshold get pre-buffer filler posts; these never reach the
    // buffered adoption sets and expose nobody.
    if (posts > 0) {
        constexpr std::int64_t kTargetFloor = 12;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::int64_t j = url_instances[i]; j < kTargetFloor; ++j) {
                InteractionEvent filler;
                filler.event_id = make_id();
                filler.kind = EventKind::Original;
                filler.author = corpus.truth_network.nodes[i];
                filler.timestamp = window.start + 60 * (j + 1);
                char buf[64];
                std::snprintf(buf, sizeof(buf), "https://filler.example/%s/%06lld",
                              corpus.truth_network.nodes[i].c_str(),
                              static_cast<long long>(j));
                filler.urls = {buf};
                events.push_back(std::move(filler));
                ++authored[i];
            }
        }
    }

    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
        return a.event_id < b.event_id;
    });
    corpus.events = std::move(events);

    // Metadata: statuses match the authored counts; the rest are plausible
    // covariates loosely tied to degree.
    const auto deg = degrees(corpus.truth_network);
    for (std::size_t i = 0; i < n; ++i) {
        Rng rng(splitmix64(config.seed ^ 0x6d657461ULL ^ (0x20002ULL * (i + 1))));
        UserMeta m;
        m.user = corpus.truth_network.nodes[i];
        m.followers_count = static_cast<std::int64_t>(
            std::llround(20.0 * deg[i] + std::fabs(rng.normal(0.0, 30.0))));
        m.friends_count = static_cast<std::int64_t>(
            std::llround(15.0 * deg[i] + std::fabs(rng.normal(0.0, 20.0))));
        m.statuses_count = authored[i];
        m.favorites_count = rng.uniform_int(0, 5000);
        corpus.metas.push_back(std::move(m));
    }
    if (posts > 0) {
        UserMeta m;
        m.user = source;
        m.followers_count = 10000;
        m.friends_count = 0;
        m.statuses_count = authored[n];
        m.favorites_count = 0;
        corpus.metas.push_back(std::move(m));
    }
    std::sort(corpus.metas.begin(), corpus.metas.end(),
              [](const UserMeta& a, const UserMeta& b) { return a.user < b.user; });
    return corpus;
}

}  // namespace suscept

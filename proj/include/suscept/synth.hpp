#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "suscept/common.hpp"
#include "suscept/events.hpp"
#include "suscept/history.hpp"
#include "suscept/network.hpp"

namespace suscept {

enum class DegreeDistKind { Powerlaw, Regular, Poisson };

struct DegreeDist {
    DegreeDistKind kind = DegreeDistKind::Powerlaw;
    double gamma = 2.5;  // powerlaw exponent
    int k_min = 2;
    int k_max = 100;
    int k = 4;            // regular degree
    double lambda = 6.0;  // poisson rate, clamped to >= 1 per draw
};

enum class MarginalKind { Beta, Uniform };

struct Marginal {
    MarginalKind kind = MarginalKind::Uniform;
    double a = 2.0;
    double b = 5.0;
};

struct SynthConfig {
    int n_nodes = 1000;
    DegreeDist degree;
    double rho_ks_target = 0.0;      // in [-1, 1]
    double homophily_strength = 0.0; // in [0, 1]
    Marginal marginal;
    std::uint64_t seed = 0;

    // Event-log generation.
    std::int64_t window_start = 0;
    std::int64_t window_end = 17280000;  // 200 days
    std::int64_t buffer_days = 60;
    int intensity = 250;            // source posts = per-node exposure count
    double planted_iar = 0.5;       // used when attribute_metric != that metric
    double planted_sar = 0.3;
    std::optional<Metric> attribute_metric = Metric::Iar;  // attribute plays this role

    void validate() const;
    CorpusWindow window() const;
};

SynthConfig synth_config_from_json(std::string_view text);
std::string synth_config_to_json(const SynthConfig& config);

struct GraphOutcome {
    FriendshipNetwork net;
    std::size_t dropped_stubs = 0;  // stubs discarded after the retry budget
};

/// Configuration-model graph: sampled degree sequence, stub matching with
/// rejection of self-loops and duplicates, unit edge weights. With
/// homophily_strength > 0 the first matching pass pairs stubs that are
/// adjacent in latent-anchor order (anchors rank-coupled to degree, plus
/// jitter that shrinks as h grows), so similar nodes end up wired together.
GraphOutcome generate_graph(const SynthConfig& config);

struct AttributeOutcome {
    std::vector<double> values;  // aligned with net.nodes
    double achieved_rho_ks = 0.0;
    double achieved_homophily = 0.0;
};

/// Attribute values per node. Without homophily: marginal draws with a |rho|
/// fraction of nodes rank-coupled to their degree ranks. With homophily: each
/// node blends the mean of its neighbors' latent anchors (the ones the graph
/// was wired with) with a fresh independent draw, weight h. Achieved
/// statistics are reported, not clipped to the targets.
AttributeOutcome assign_attributes(const FriendshipNetwork& net, const SynthConfig& config);

struct SynthCorpus {
    std::vector<InteractionEvent> events;
    std::vector<UserMeta> metas;
    FriendshipNetwork truth_network;
    std::vector<double> planted_iar;  // aligned with truth_network.nodes
    std::vector<double> planted_sar;
    AttributeOutcome attributes;
};

/// Event-log generator. Every node watches one shared source author whose
/// posts supply exactly `intensity` exposures per node; adoptions follow each
/// exposure with the node's planted IAR; spontaneous posts are injected to
/// hit the planted SAR; reciprocity retweets at a single shared timestamp
/// re-share already-adopted URLs so the measured metrics stay untouched.
/// With intensity 0 the corpus carries interactions only and zero URLs.
SynthCorpus generate_corpus(const SynthConfig& config);

}  // namespace suscept

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "suscept/common.hpp"
#include "suscept/events.hpp"

namespace suscept {

enum class Metric { Iar, Sar };

std::string_view to_string(Metric m);
Metric metric_from_string(std::string_view s);

// Per-user exposure/adoption record. Maps keep the earliest qualifying
// timestamp per key. `adoptions` is the restriction of `adoptions_all` to
// entries whose earliest share is strictly after the buffer.
struct UserHistory {
    std::string user;
    std::map<std::string, std::int64_t> first_interaction;  // source -> earliest ts
    std::map<std::string, std::int64_t> exposures;          // url -> earliest ts
    std::map<std::string, std::int64_t> adoptions;          // url -> earliest ts (> buffer_end)
    std::map<std::string, std::int64_t> adoptions_all;      // url -> earliest ts

    bool operator==(const UserHistory&) const = default;
};

struct SusceptibilityScore {
    std::string user;
    std::optional<double> iar;
    std::optional<double> sar;
    std::int64_t n_exposed = 0;
    std::int64_t n_adopted = 0;  // buffered adoption count
    std::int64_t n_influence_driven = 0;
};

/// Exposure reconstruction: after a target's first interaction with a source,
/// every URL the source posts is an exposure; earliest timestamp wins.
/// Sources are not restricted to target users. Requires time-sorted events.
std::map<std::string, UserHistory> build_exposure_index(
    const std::vector<InteractionEvent>& events, const std::set<std::string>& targets,
    const CorpusWindow& window, Exec exec = Exec::Parallel);

/// Adoption reconstruction: every URL a target authors, any event kind.
/// Fills adoptions_all plus the post-buffer restriction.
std::map<std::string, UserHistory> build_adoption_sets(
    const std::vector<InteractionEvent>& events, const std::set<std::string>& targets,
    const CorpusWindow& window, Exec exec = Exec::Parallel);

/// Both of the above in one pass structure; the per-user maps are merged.
std::map<std::string, UserHistory> build_histories(
    const std::vector<InteractionEvent>& events, const std::set<std::string>& targets,
    const CorpusWindow& window, Exec exec = Exec::Parallel);

/// IAR = influence-driven / exposed, SAR = 1 - influence-driven / adopted.
/// Influence-driven requires strictly earlier exposure. Empty denominators
/// yield disengaged (unset) metrics, never zero-fill.
SusceptibilityScore compute_scores(const UserHistory& history, const CorpusWindow& window);

struct ScoreRow {
    std::string user;
    std::optional<double> iar;
    std::optional<double> sar;
    std::int64_t n_exposed = 0;
    std::int64_t n_adopted = 0;
    std::int64_t n_influence_driven = 0;
    std::optional<std::int64_t> followers_count;
    std::optional<std::int64_t> friends_count;
    std::optional<std::int64_t> statuses_count;
    std::optional<std::int64_t> favorites_count;
};

struct ScoreTable {
    std::vector<ScoreRow> rows;  // sorted by user

    const ScoreRow* find(const std::string& user) const;
};

/// Joins scores with metadata; users without metadata keep null columns.
ScoreTable score_table(const std::vector<SusceptibilityScore>& scores,
                       const std::vector<UserMeta>& metas);

ScoreTable score_table_from_histories(const std::map<std::string, UserHistory>& histories,
                                      const CorpusWindow& window,
                                      const std::vector<UserMeta>& metas);

std::string score_table_to_csv(const ScoreTable& table);
ScoreTable score_table_from_csv(std::string_view csv);

}  // namespace suscept

#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "suscept/common.hpp"

namespace suscept {

enum class EventKind { Original, Retweet, Quote, Reply };

std::string_view to_string(EventKind kind);
EventKind event_kind_from_string(std::string_view s);

// One timestamped post/reshare/quote/reply carrying canonicalized URLs.
struct InteractionEvent {
    std::string event_id;
    EventKind kind = EventKind::Original;
    std::string author;
    std::string target_author;  // empty iff kind == Original
    std::int64_t timestamp = 0;
    std::vector<std::string> urls;

    bool is_interaction() const { return kind != EventKind::Original; }
    bool operator==(const InteractionEvent&) const = default;
};

struct UserMeta {
    std::string user;
    std::int64_t followers_count = 0;
    std::int64_t friends_count = 0;
    std::int64_t statuses_count = 0;
    std::int64_t favorites_count = 0;
};

// Observation window. The buffer is the initial stretch whose adoptions are
// not counted; start < buffer_end <= end.
struct CorpusWindow {
    std::int64_t start = 0;
    std::int64_t buffer_end = 0;
    std::int64_t end = 0;

    void validate() const;
    static CorpusWindow with_buffer_days(std::int64_t start, std::int64_t end,
                                         std::int64_t buffer_days);
};

CorpusWindow infer_window(const std::vector<InteractionEvent>& events,
                          std::int64_t buffer_days);

struct ParseSummary {
    std::size_t lines = 0;
    std::size_t parsed = 0;
    std::size_t malformed = 0;
    std::size_t duplicate_users = 0;  // user-meta records replaced by a later one
};

// Lowercases scheme and host, strips the fragment, keeps the query string.
std::string canonicalize_url(std::string_view url);

/// Parses a line-delimited event log. Well-formed lines become events; in
/// strict mode the first malformed line aborts, otherwise malformed lines are
/// counted and skipped. Duplicate event ids are always an error. Output is
/// sorted by (timestamp, event_id).
std::vector<InteractionEvent> parse_event_log(std::string_view text, bool strict,
                                              ParseSummary* summary = nullptr,
                                              Exec exec = Exec::Parallel);

std::string serialize_event(const InteractionEvent& event);
std::string serialize_event_log(const std::vector<InteractionEvent>& events);

/// Keeps exactly the events with at least one URL, order preserved.
std::vector<InteractionEvent> filter_url_events(const std::vector<InteractionEvent>& events);

/// Users whose total URL instance count across authored events reaches the
/// threshold. Throws DataError when threshold <= 0.
std::set<std::string> select_target_users(const std::vector<InteractionEvent>& events,
                                          std::int64_t threshold);

std::vector<UserMeta> parse_user_meta(std::string_view text, bool strict,
                                      ParseSummary* summary = nullptr);
std::string serialize_user_meta(const std::vector<UserMeta>& metas);

}  // namespace suscept

#include "suscept/events.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <unordered_map>
#include <unordered_set>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace suscept {

namespace {

using nlohmann::json;

std::string lower(std::string_view s) {
    std::string out(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

struct LineParse {
    bool ok = false;
    InteractionEvent event;
    std::string error;
};

LineParse parse_line(std::string_view line) {
    LineParse out;
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        out.error = "not a JSON object";
        return out;
    }
    try {
        InteractionEvent e;
        if (!j.contains("event_id") || !j["event_id"].is_string()) {
            out.error = "missing event_id";
            return out;
        }
        e.event_id = j["event_id"].get<std::string>();
        if (!j.contains("kind") || !j["kind"].is_string()) {
            out.error = "missing kind";
            return out;
        }
        const std::string kind_str = j["kind"].get<std::string>();
        if (kind_str == "original") {
            e.kind = EventKind::Original;
        } else if (kind_str == "retweet") {
            e.kind = EventKind::Retweet;
        } else if (kind_str == "quote") {
            e.kind = EventKind::Quote;
        } else if (kind_str == "reply") {
            e.kind = EventKind::Reply;
        } else {
            out.error = "unknown kind '" + kind_str + "'";
            return out;
        }
        if (!j.contains("author") || !j["author"].is_string() ||
            j["author"].get<std::string>().empty()) {
            out.error = "missing author";
            return out;
        }
        e.author = j["author"].get<std::string>();

        const bool has_target = j.contains("target_author") && !j["target_author"].is_null();
        if (e.kind == EventKind::Original) {
            if (has_target) {
                out.error = "original event carries target_author";
                return out;
            }
        } else {
            if (!has_target || !j["target_author"].is_string() ||
                j["target_author"].get<std::string>().empty()) {
                out.error = "missing target_author";
                return out;
            }
            e.target_author = j["target_author"].get<std::string>();
            if (e.target_author == e.author) {
                out.error = "self-interaction";
                return out;
            }
        }

        if (!j.contains("timestamp") || !j["timestamp"].is_number_integer()) {
            out.error = "missing timestamp";
            return out;
        }
        e.timestamp = j["timestamp"].get<std::int64_t>();
        if (e.timestamp < 0) {
            out.error = "negative timestamp";
            return out;
        }

        if (!j.contains("urls") || !j["urls"].is_array()) {
            out.error = "missing urls";
            return out;
        }
        for (const auto& u : j["urls"]) {
            if (!u.is_string()) {
                out.error = "non-string url";
                return out;
            }
            e.urls.push_back(canonicalize_url(u.get<std::string>()));
        }
        // Canonicalization can collide; keep first occurrence.
        std::unordered_set<std::string> seen;
        std::vector<std::string> unique;
        unique.reserve(e.urls.size());
        for (auto& u : e.urls) {
            if (seen.insert(u).second) unique.push_back(std::move(u));
        }
        e.urls = std::move(unique);

        out.ok = true;
        out.event = std::move(e);
        return out;
    } catch (const json::exception& ex) {
        out.error = ex.what();
        return out;
    }
}

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        if (!line.empty()) lines.push_back(line);
        pos = nl + 1;
    }
    return lines;
}

}  // namespace

std::string_view to_string(EventKind kind) {
    switch (kind) {
        case EventKind::Original: return "original";
        case EventKind::Retweet: return "retweet";
        case EventKind::Quote: return "quote";
        case EventKind::Reply: return "reply";
    }
    throw InternalError("to_string: bad EventKind");
}

EventKind event_kind_from_string(std::string_view s) {
    if (s == "original") return EventKind::Original;
    if (s == "retweet") return EventKind::Retweet;
    if (s == "quote") return EventKind::Quote;
    if (s == "reply") return EventKind::Reply;
    throw DataError("unknown event kind '" + std::string(s) + "'");
}

void CorpusWindow::validate() const {
    if (!(start < buffer_end)) throw DataError("window: start must precede buffer_end");
    if (!(buffer_end <= end)) throw DataError("window: buffer_end must not exceed end");
}

CorpusWindow CorpusWindow::with_buffer_days(std::int64_t start, std::int64_t end,
                                            std::int64_t buffer_days) {
    CorpusWindow w;
    w.start = start;
    w.end = end;
    w.buffer_end = start + buffer_days * 86400;
    w.validate();
    return w;
}

CorpusWindow infer_window(const std::vector<InteractionEvent>& events,
                          std::int64_t buffer_days) {
    if (events.empty()) throw DataError("infer_window: empty event log");
    std::int64_t lo = events.front().timestamp;
    std::int64_t hi = events.front().timestamp;
    for (const auto& e : events) {
        lo = std::min(lo, e.timestamp);
        hi = std::max(hi, e.timestamp);
    }
    return CorpusWindow::with_buffer_days(lo, hi, buffer_days);
}

std::string canonicalize_url(std::string_view url) {
    std::string s(url);
    if (const std::size_t hash = s.find('#'); hash != std::string::npos) {
        s.resize(hash);
    }
    const std::size_t scheme_end = s.find("://");
    if (scheme_end == std::string::npos) return s;
    std::size_t host_end = s.find_first_of("/?", scheme_end + 3);
    if (host_end == std::string::npos) host_end = s.size();
    return lower(std::string_view(s).substr(0, host_end)) + s.substr(host_end);
}

std::vector<InteractionEvent> parse_event_log(std::string_view text, bool strict,
                                              ParseSummary* summary, Exec exec) {
    const auto lines = split_lines(text);
    const std::size_t n = lines.size();

    std::vector<LineParse> parsed(n);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(static)
        for (std::size_t i = 0; i < n; ++i) parsed[i] = parse_line(lines[i]);
    } else {
        for (std::size_t i = 0; i < n; ++i) parsed[i] = parse_line(lines[i]);
    }

    // Serial merge: strict mode reports the first bad line in file order.
    ParseSummary sum;
    sum.lines = n;
    std::vector<InteractionEvent> events;
    events.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (parsed[i].ok) {
            events.push_back(std::move(parsed[i].event));
            ++sum.parsed;
        } else {
            if (strict) {
                throw DataError("line " + std::to_string(i + 1) + ": " + parsed[i].error);
            }
            ++sum.malformed;
        }
    }

    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
        return a.event_id < b.event_id;
    });

    {
        std::vector<const std::string*> ids;
        ids.reserve(events.size());
        for (const auto& e : events) ids.push_back(&e.event_id);
        std::sort(ids.begin(), ids.end(),
                  [](const std::string* a, const std::string* b) { return *a < *b; });
        for (std::size_t i = 1; i < ids.size(); ++i) {
            if (*ids[i] == *ids[i - 1]) {
                throw DataError("duplicate event_id '" + *ids[i] + "'");
            }
        }
    }

    if (summary) *summary = sum;
    return events;
}

std::string serialize_event(const InteractionEvent& event) {
    json j;
    j["event_id"] = event.event_id;
    j["kind"] = std::string(to_string(event.kind));
    j["author"] = event.author;
    if (event.kind == EventKind::Original) {
        j["target_author"] = nullptr;
    } else {
        j["target_author"] = event.target_author;
    }
    j["timestamp"] = event.timestamp;
    j["urls"] = event.urls;
    return j.dump();
}

std::string serialize_event_log(const std::vector<InteractionEvent>& events) {
    std::string out;
    for (const auto& e : events) {
        out += serialize_event(e);
        out += '\n';
    }
    return out;
}

std::vector<InteractionEvent> filter_url_events(const std::vector<InteractionEvent>& events) {
    std::vector<InteractionEvent> out;
    out.reserve(events.size());
    for (const auto& e : events) {
        if (!e.urls.empty()) out.push_back(e);
    }
    return out;
}

std::set<std::string> select_target_users(const std::vector<InteractionEvent>& events,
                                          std::int64_t threshold) {
    if (threshold <= 0) throw DataError("select_target_users: threshold must be positive");
    std::unordered_map<std::string, std::int64_t> counts;
    for (const auto& e : events) {
        counts[e.author] += static_cast<std::int64_t>(e.urls.size());
    }
    std::set<std::string> targets;
    for (const auto& [user, count] : counts) {
        if (count >= threshold) targets.insert(user);
    }
    return targets;
}

std::vector<UserMeta> parse_user_meta(std::string_view text, bool strict,
                                      ParseSummary* summary) {
    const auto lines = split_lines(text);
    ParseSummary sum;
    sum.lines = lines.size();

    std::vector<UserMeta> metas;
    std::unordered_map<std::string, std::size_t> by_user;
    for (std::size_t i = 0; i < lines.size(); ++i) {
        json j = json::parse(lines[i], nullptr, false);
        std::string error;
        UserMeta m;
        if (j.is_discarded() || !j.is_object()) {
            error = "not a JSON object";
        } else if (!j.contains("user") || !j["user"].is_string() ||
                   j["user"].get<std::string>().empty()) {
            error = "missing user";
        } else {
            m.user = j["user"].get<std::string>();
            auto read_count = [&](const char* key, std::int64_t& dst) {
                if (!j.contains(key) || !j[key].is_number_integer()) {
                    error = std::string("missing ") + key;
                    return;
                }
                dst = j[key].get<std::int64_t>();
                if (dst < 0) error = std::string("negative ") + key;
            };
            read_count("followers_count", m.followers_count);
            if (error.empty()) read_count("friends_count", m.friends_count);
            if (error.empty()) read_count("statuses_count", m.statuses_count);
            if (error.empty()) read_count("favorites_count", m.favorites_count);
        }
        if (!error.empty()) {
            if (strict) throw DataError("meta line " + std::to_string(i + 1) + ": " + error);
            ++sum.malformed;
            continue;
        }
        ++sum.parsed;
        if (auto it = by_user.find(m.user); it != by_user.end()) {
            metas[it->second] = m;  // last record wins
            ++sum.duplicate_users;
        } else {
            by_user.emplace(m.user, metas.size());
            metas.push_back(m);
        }
    }
    std::sort(metas.begin(), metas.end(),
              [](const UserMeta& a, const UserMeta& b) { return a.user < b.user; });
    if (summary) *summary = sum;
    return metas;
}

std::string serialize_user_meta(const std::vector<UserMeta>& metas) {
    std::string out;
    for (const auto& m : metas) {
        json j;
        j["user"] = m.user;
        j["followers_count"] = m.followers_count;
        j["friends_count"] = m.friends_count;
        j["statuses_count"] = m.statuses_count;
        j["favorites_count"] = m.favorites_count;
        out += j.dump();
        out += '\n';
    }
    return out;
}

}  // namespace suscept

#include "suscept/history.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <unordered_map>

namespace suscept {

namespace {

void require_sorted(const std::vector<InteractionEvent>& events) {
    for (std::size_t i = 1; i < events.size(); ++i) {
        if (events[i].timestamp < events[i - 1].timestamp) {
            throw DataError("events must be sorted by timestamp");
        }
    }
}

// author -> indices of their events, in time order.
std::unordered_map<std::string, std::vector<std::size_t>> index_by_author(
    const std::vector<InteractionEvent>& events) {
    std::unordered_map<std::string, std::vector<std::size_t>> by_author;
    for (std::size_t i = 0; i < events.size(); ++i) {
        by_author[events[i].author].push_back(i);
    }
    return by_author;
}

template <typename PerUser>
std::map<std::string, UserHistory> over_targets(const std::set<std::string>& targets,
                                                Exec exec, PerUser&& per_user) {
    std::vector<const std::string*> order;
    order.reserve(targets.size());
    for (const auto& t : targets) order.push_back(&t);

    std::vector<UserHistory> results(order.size());
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::size_t i = 0; i < order.size(); ++i) {
            results[i] = per_user(*order[i]);
        }
    } else {
        for (std::size_t i = 0; i < order.size(); ++i) {
            results[i] = per_user(*order[i]);
        }
    }

    std::map<std::string, UserHistory> histories;
    for (auto& h : results) {
        std::string key = h.user;
        histories.emplace(std::move(key), std::move(h));
    }
    return histories;
}

void fill_first_interactions(const std::vector<InteractionEvent>& events,
                             const std::vector<std::size_t>& authored, UserHistory& h) {
    for (std::size_t idx : authored) {
        const auto& e = events[idx];
        if (!e.is_interaction()) continue;
        auto [it, inserted] = h.first_interaction.emplace(e.target_author, e.timestamp);
        if (!inserted) it->second = std::min(it->second, e.timestamp);
    }
}

void fill_exposures(const std::vector<InteractionEvent>& events,
                    const std::unordered_map<std::string, std::vector<std::size_t>>& by_author,
                    UserHistory& h) {
    for (const auto& [source, t0] : h.first_interaction) {
        const auto it = by_author.find(source);
        if (it == by_author.end()) continue;
        for (std::size_t idx : it->second) {
            const auto& e = events[idx];
            if (e.timestamp <= t0) continue;  // strictly after the first interaction
            for (const auto& url : e.urls) {
                auto [slot, inserted] = h.exposures.emplace(url, e.timestamp);
                if (!inserted) slot->second = std::min(slot->second, e.timestamp);
            }
        }
    }
}

void fill_adoptions(const std::vector<InteractionEvent>& events,
                    const std::vector<std::size_t>& authored, const CorpusWindow& window,
                    UserHistory& h) {
    for (std::size_t idx : authored) {
        const auto& e = events[idx];
        for (const auto& url : e.urls) {
            auto [slot, inserted] = h.adoptions_all.emplace(url, e.timestamp);
            if (!inserted) slot->second = std::min(slot->second, e.timestamp);
        }
    }
    for (const auto& [url, ts] : h.adoptions_all) {
        if (ts > window.buffer_end) h.adoptions.emplace(url, ts);
    }
}

std::string format_double(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

}  // namespace

std::string_view to_string(Metric m) {
    return m == Metric::Iar ? "iar" : "sar";
}

Metric metric_from_string(std::string_view s) {
    if (s == "iar") return Metric::Iar;
    if (s == "sar") return Metric::Sar;
    throw UsageError("unknown metric '" + std::string(s) + "'");
}

std::map<std::string, UserHistory> build_exposure_index(
    const std::vector<InteractionEvent>& events, const std::set<std::string>& targets,
    const CorpusWindow& window, Exec exec) {
    window.validate();
    require_sorted(events);
    const auto by_author = index_by_author(events);
    return over_targets(targets, exec, [&](const std::string& user) {
        UserHistory h;
        h.user = user;
        if (auto it = by_author.find(user); it != by_author.end()) {
            fill_first_interactions(events, it->second, h);
        }
        fill_exposures(events, by_author, h);
        return h;
    });
}

std::map<std::string, UserHistory> build_adoption_sets(
    const std::vector<InteractionEvent>& events, const std::set<std::string>& targets,
    const CorpusWindow& window, Exec exec) {
    window.validate();
    require_sorted(events);
    const auto by_author = index_by_author(events);
    return over_targets(targets, exec, [&](const std::string& user) {
        UserHistory h;
        h.user = user;
        if (auto it = by_author.find(user); it != by_author.end()) {
            fill_adoptions(events, it->second, window, h);
        }
        return h;
    });
}

std::map<std::string, UserHistory> build_histories(
    const std::vector<InteractionEvent>& events, const std::set<std::string>& targets,
    const CorpusWindow& window, Exec exec) {
    window.validate();
    require_sorted(events);
    const auto by_author = index_by_author(events);
    return over_targets(targets, exec, [&](const std::string& user) {
        UserHistory h;
        h.user = user;
        if (auto it = by_author.find(user); it != by_author.end()) {
            fill_first_interactions(events, it->second, h);
            fill_adoptions(events, it->second, window, h);
        }
        fill_exposures(events, by_author, h);
        return h;
    });
}

SusceptibilityScore compute_scores(const UserHistory& history, const CorpusWindow& window) {
    window.validate();
    SusceptibilityScore s;
    s.user = history.user;
    s.n_exposed = static_cast<std::int64_t>(history.exposures.size());
    s.n_adopted = static_cast<std::int64_t>(history.adoptions.size());

    for (const auto& [url, adopted_at] : history.adoptions) {
        const auto it = history.exposures.find(url);
        if (it != history.exposures.end() && it->second < adopted_at) {
            ++s.n_influence_driven;
        }
    }
    if (s.n_exposed > 0) {
        s.iar = static_cast<double>(s.n_influence_driven) / static_cast<double>(s.n_exposed);
    }
    if (s.n_adopted > 0) {
        s.sar = 1.0 - static_cast<double>(s.n_influence_driven) / static_cast<double>(s.n_adopted);
    }
    return s;
}

const ScoreRow* ScoreTable::find(const std::string& user) const {
    const auto it = std::lower_bound(rows.begin(), rows.end(), user,
                                     [](const ScoreRow& r, const std::string& u) {
                                         return r.user < u;
                                     });
    if (it != rows.end() && it->user == user) return &*it;
    return nullptr;
}

ScoreTable score_table(const std::vector<SusceptibilityScore>& scores,
                       const std::vector<UserMeta>& metas) {
    std::unordered_map<std::string, const UserMeta*> meta_by_user;
    for (const auto& m : metas) meta_by_user[m.user] = &m;

    ScoreTable table;
    table.rows.reserve(scores.size());
    for (const auto& s : scores) {
        ScoreRow row;
        row.user = s.user;
        row.iar = s.iar;
        row.sar = s.sar;
        row.n_exposed = s.n_exposed;
        row.n_adopted = s.n_adopted;
        row.n_influence_driven = s.n_influence_driven;
        if (auto it = meta_by_user.find(s.user); it != meta_by_user.end()) {
            row.followers_count = it->second->followers_count;
            row.friends_count = it->second->friends_count;
            row.statuses_count = it->second->statuses_count;
            row.favorites_count = it->second->favorites_count;
        }
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const ScoreRow& a, const ScoreRow& b) { return a.user < b.user; });
    return table;
}

ScoreTable score_table_from_histories(const std::map<std::string, UserHistory>& histories,
                                      const CorpusWindow& window,
                                      const std::vector<UserMeta>& metas) {
    std::vector<SusceptibilityScore> scores;
    scores.reserve(histories.size());
    for (const auto& [user, h] : histories) scores.push_back(compute_scores(h, window));
    return score_table(scores, metas);
}

std::string score_table_to_csv(const ScoreTable& table) {
    std::string out =
        "user,iar,sar,n_exposed,n_adopted,n_influence_driven,"
        "followers_count,friends_count,statuses_count,favorites_count\n";
    for (const auto& r : table.rows) {
        out += r.user;
        out += ',';
        if (r.iar) out += format_double(*r.iar);
        out += ',';
        if (r.sar) out += format_double(*r.sar);
        out += ',';
        out += std::to_string(r.n_exposed);
        out += ',';
        out += std::to_string(r.n_adopted);
        out += ',';
        out += std::to_string(r.n_influence_driven);
        for (const auto& c :
             {r.followers_count, r.friends_count, r.statuses_count, r.favorites_count}) {
            out += ',';
            if (c) out += std::to_string(*c);
        }
        out += '\n';
    }
    return out;
}

ScoreTable score_table_from_csv(std::string_view csv) {
    ScoreTable table;
    std::size_t pos = 0;
    bool header = true;
    while (pos < csv.size()) {
        std::size_t nl = csv.find('\n', pos);
        if (nl == std::string_view::npos) nl = csv.size();
        std::string_view line = csv.substr(pos, nl - pos);
        pos = nl + 1;
        if (line.empty()) continue;
        if (header) {
            header = false;
            continue;
        }
        std::vector<std::string_view> fields;
        std::size_t f = 0;
        while (true) {
            std::size_t comma = line.find(',', f);
            if (comma == std::string_view::npos) {
                fields.push_back(line.substr(f));
                break;
            }
            fields.push_back(line.substr(f, comma - f));
            f = comma + 1;
        }
        if (fields.size() != 10) throw DataError("score csv: expected 10 fields");

        auto parse_i64 = [](std::string_view v) {
            std::int64_t out = 0;
            const auto res = std::from_chars(v.data(), v.data() + v.size(), out);
            if (res.ec != std::errc() || res.ptr != v.data() + v.size()) {
                throw DataError("score csv: bad integer field");
            }
            return out;
        };
        auto parse_opt_double = [](std::string_view v) -> std::optional<double> {
            if (v.empty()) return std::nullopt;
            return std::stod(std::string(v));
        };
        auto parse_opt_i64 = [&](std::string_view v) -> std::optional<std::int64_t> {
            if (v.empty()) return std::nullopt;
            return parse_i64(v);
        };

        ScoreRow row;
        row.user = std::string(fields[0]);
        row.iar = parse_opt_double(fields[1]);
        row.sar = parse_opt_double(fields[2]);
        row.n_exposed = parse_i64(fields[3]);
        row.n_adopted = parse_i64(fields[4]);
        row.n_influence_driven = parse_i64(fields[5]);
        row.followers_count = parse_opt_i64(fields[6]);
        row.friends_count = parse_opt_i64(fields[7]);
        row.statuses_count = parse_opt_i64(fields[8]);
        row.favorites_count = parse_opt_i64(fields[9]);
        table.rows.push_back(std::move(row));
    }
    std::sort(table.rows.begin(), table.rows.end(),
              [](const ScoreRow& a, const ScoreRow& b) { return a.user < b.user; });
    return table;
}

}  // namespace suscept

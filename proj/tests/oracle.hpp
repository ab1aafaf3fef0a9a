#pragma once

// Brute-force O(n^2) re-derivation of exposure and adoption histories,
// deliberately independent of the library implementation: no author index,
// no sorting assumptions, nested scans over all event pairs.

#include <map>
#include <set>
#include <string>
#include <vector>

#include "suscept/events.hpp"
#include "suscept/history.hpp"

namespace oracle {

inline std::map<std::string, suscept::UserHistory> brute_force_histories(
    const std::vector<suscept::InteractionEvent>& events,
    const std::set<std::string>& targets, const suscept::CorpusWindow& window) {
    std::map<std::string, suscept::UserHistory> out;
    for (const auto& user : targets) {
        suscept::UserHistory h;
        h.user = user;

        for (const auto& e : events) {
            if (e.author != user || !e.is_interaction()) continue;
            auto it = h.first_interaction.find(e.target_author);
            if (it == h.first_interaction.end() || e.timestamp < it->second) {
                h.first_interaction[e.target_author] = e.timestamp;
            }
        }

        // Exposure: for every event, re-derive the first interaction with its
        // author by scanning all events again.
        for (const auto& e : events) {
            if (e.author == user) continue;
            bool interacted_before = false;
            std::int64_t first = 0;
            for (const auto& e2 : events) {
                if (e2.author != user || !e2.is_interaction()) continue;
                if (e2.target_author != e.author) continue;
                if (!interacted_before || e2.timestamp < first) {
                    interacted_before = true;
                    first = e2.timestamp;
                }
            }
            if (!interacted_before || e.timestamp <= first) continue;
            for (const auto& url : e.urls) {
                auto it = h.exposures.find(url);
                if (it == h.exposures.end() || e.timestamp < it->second) {
                    h.exposures[url] = e.timestamp;
                }
            }
        }

        for (const auto& e : events) {
            if (e.author != user) continue;
            for (const auto& url : e.urls) {
                auto it = h.adoptions_all.find(url);
                if (it == h.adoptions_all.end() || e.timestamp < it->second) {
                    h.adoptions_all[url] = e.timestamp;
                }
            }
        }
        for (const auto& [url, ts] : h.adoptions_all) {
            if (ts > window.buffer_end) h.adoptions[url] = ts;
        }
        out[user] = std::move(h);
    }
    return out;
}

inline suscept::SusceptibilityScore brute_force_scores(const suscept::UserHistory& h) {
    suscept::SusceptibilityScore s;
    s.user = h.user;
    s.n_exposed = static_cast<std::int64_t>(h.exposures.size());
    s.n_adopted = static_cast<std::int64_t>(h.adoptions.size());
    for (const auto& [url, ts_a] : h.adoptions) {
        for (const auto& [url_e, ts_e] : h.exposures) {
            if (url_e == url && ts_e < ts_a) {
                ++s.n_influence_driven;
                break;
            }
        }
    }
    if (s.n_exposed > 0) s.iar = double(s.n_influence_driven) / double(s.n_exposed);
    if (s.n_adopted > 0) s.sar = 1.0 - double(s.n_influence_driven) / double(s.n_adopted);
    return s;
}

// Random micro event log; at most max_events events over a small user and
// URL universe. Timestamps straddle the buffer boundary.
inline std::vector<suscept::InteractionEvent> random_micro_log(
    std::uint64_t seed, const suscept::CorpusWindow& window, int max_events = 50) {
    suscept::Rng rng(seed);
    const int n_users = 2 + static_cast<int>(rng.uniform_int(0, 6));
    const int n_urls = 3 + static_cast<int>(rng.uniform_int(0, 9));
    const int n_events = 1 + static_cast<int>(rng.uniform_int(0, max_events - 1));

    std::vector<suscept::InteractionEvent> events;
    for (int i = 0; i < n_events; ++i) {
        suscept::InteractionEvent e;
        e.event_id = "m" + std::to_string(i);
        const int kind_pick = static_cast<int>(rng.uniform_int(0, 3));
        e.kind = static_cast<suscept::EventKind>(kind_pick);
        const int author = static_cast<int>(rng.uniform_int(0, n_users - 1));
        e.author = "user" + std::to_string(author);
        if (e.kind != suscept::EventKind::Original) {
            int other = static_cast<int>(rng.uniform_int(0, n_users - 2));
            if (other >= author) ++other;
            e.target_author = "user" + std::to_string(other);
        }
        e.timestamp = window.start + rng.uniform_int(0, window.end - window.start);
        const int urls = static_cast<int>(rng.uniform_int(0, 3));
        for (int u = 0; u < urls; ++u) {
            const std::string url =
                "https://url.example/" + std::to_string(rng.uniform_int(0, n_urls - 1));
            if (std::find(e.urls.begin(), e.urls.end(), url) == e.urls.end()) {
                e.urls.push_back(url);
            }
        }
        events.push_back(std::move(e));
    }
    std::sort(events.begin(), events.end(), [](const auto& a, const auto& b) {
        if (a.timestamp != b.timestamp) return a.timestamp < b.timestamp;
        return a.event_id < b.event_id;
    });
    return events;
}

}  // namespace oracle

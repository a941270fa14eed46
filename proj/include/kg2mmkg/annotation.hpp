// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <shared_mutex>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kg2mmkg/error.hpp"

namespace httplib {
class Server;
}

namespace kg2mmkg::annotation {

enum class Criterion { IQ, CIE, CIKG };

inline constexpr Criterion kCriteria[] = {Criterion::IQ, Criterion::CIE, Criterion::CIKG};

std::string_view to_string(Criterion c);
/// Throws BadRequest on an unknown name.
Criterion parse_criterion(std::string_view s);

/// Title, instructions and flaw list shown to annotators.
nlohmann::json criterion_rubric(Criterion c);

/// The method name used for the real-image slot.
inline constexpr std::string_view kRealMethod = "real";

/// Client errors, mapped to HTTP statuses by the API layer.
class BadRequest : public Error {
public:
    using Error::Error;
};
class NotFound : public Error {
public:
    using Error::Error;
};
/// Well-formed but rejected, e.g. a ranking that is not a permutation.
class Unprocessable : public Error {
public:
    using Error::Error;
};

/// Generated images of one method, read from a pipeline manifest.
struct MethodSource {
    std::string method;
    std::filesystem::path manifest;
};

/// Everything a session can draw from for one dataset tag.
struct Dataset {
    std::string tag;
    std::vector<MethodSource> methods;
    /// Directory of <slug>/<n>.png reference images.
    std::optional<std::filesystem::path> reals;
    /// Method whose manifest supplies the context facts; the first method
    /// with facts is used when empty.
    std::string context_method;
};

/// Datasets for the standard pipeline layout under `output_dir`: the VSNS
/// manifest plus the two baseline manifests written by eval.
Dataset dataset_from_output(std::string tag, const std::filesystem::path& output_dir,
                            std::optional<std::filesystem::path> reals);

struct SessionRequest {
    std::string dataset;
    std::size_t sample_size = 0;
    std::uint64_t seed = 0;
    /// Empty selects every method of the dataset.
    std::vector<std::string> methods;
    bool include_real = false;

    static SessionRequest from_json(const nlohmann::json& j);
};

/// One candidate image. `method` never leaves the server.
struct Slot {
    std::string id;
    std::string method;
    std::filesystem::path image;
    std::string sha256;
};

struct Item {
    std::string id;
    std::string entity;
    std::string name;
    std::vector<std::string> facts;
    /// Canonical order; annotators see a seeded shuffle of it.
    std::vector<Slot> slots;
};

struct Session {
    std::string id;
    SessionRequest request;
    std::vector<Item> items;
    /// Blinded arm code per method, e.g. "arm-B".
    std::map<std::string, std::string> arms;
    std::vector<std::string> warnings;
};

struct Rating {
    std::string session;
    std::string annotator;
    std::string item;
    Criterion criterion = Criterion::IQ;
    /// slot id -> rank, 1..k, higher is better.
    std::map<std::string, int> ranking;
    /// Alternative to `ranking`: ranks in the annotator's display order.
    /// Store::submit resolves it to slot ids.
    std::vector<int> ranks_in_display_order;

    /// Accepts "ranking" (slot id -> rank) or "ranks" (display order).
    static Rating from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;
};

/// Slot indices in display order for one annotator. Deterministic in
/// (session seed, annotator, item); items are keyed by entity so that equal
/// requests give equal shuffles across sessions.
std::vector<std::size_t> display_order(std::uint64_t seed, std::string_view annotator, std::string_view entity,
                                       std::size_t k);

/// Aggregated scores of one session. `table` maps criterion -> key -> mean,
/// where the key is an arm code (blinded) or a method name (unblinded).
struct Results {
    std::string session;
    std::size_t k = 0;
    std::size_t n_items = 0;
    std::size_t n_ratings = 0;
    std::map<std::string, std::map<std::string, double>> table;
    std::map<std::string, std::map<std::string, std::size_t>> counts;
    /// Ratings whose ranks do not sum to k(k+1)/2; zero unless the log was
    /// edited by hand.
    std::size_t conservation_violations = 0;
    std::vector<nlohmann::json> submissions;

    nlohmann::json to_json() const;
};

using WarningSink = std::function<void(const std::string&)>;

/// Sessions and ratings, projected from an append-only JSONL event log.
/// Thread-safe: writes are serialized, reads see a consistent snapshot.
class Store {
public:
    /// Replays `log` when it exists. Without a log, nothing is persisted.
    /// A torn final line is dropped; any other corrupt line throws Error.
    Store(std::vector<Dataset> datasets, std::optional<std::filesystem::path> log = std::nullopt,
          WarningSink warn = {});

    /// Entities missing an image for any requested slot are excluded with
    /// a warning that does not name the method.
    Session create_session(const SessionRequest& request);

    /// Client view: items with slots in the annotator's display order,
    /// criteria rubrics, progress and the annotator's own ratings.
    nlohmann::json items_view(const std::string& session, const std::string& annotator) const;

    /// PNG bytes of one slot.
    std::string image(const std::string& item, const std::string& slot) const;

    /// Idempotent upsert keyed by (annotator, item, criterion). Returns
    /// true when an earlier rating was replaced.
    bool submit(const Rating& rating);

    /// Blinded when `unblind` is false: keys are arm codes.
    Results results(const std::string& session, bool unblind = false) const;

    std::vector<std::string> session_ids() const;
    /// Server-side view including methods. Throws NotFound.
    Session session(const std::string& id) const;

private:
    struct RatingKey {
        std::string annotator;
        std::string item;
        Criterion criterion;
        auto operator<=>(const RatingKey&) const = default;
    };
    struct SessionState {
        Session session;
        std::uint64_t secret = 0;
        std::map<RatingKey, Rating> ratings;
    };

    void apply(const nlohmann::json& event);
    void persist(const nlohmann::json& event);
    const SessionState& state(const std::string& id) const;
    const Item& find_item(const std::string& item, const SessionState** owner = nullptr) const;

    std::map<std::string, Dataset> datasets_;
    std::optional<std::filesystem::path> log_;
    WarningSink warn_;
    mutable std::shared_mutex mutex_;
    std::map<std::string, SessionState> sessions_;
    std::map<std::string, std::string> item_session_;
    std::size_t next_session_ = 1;
};

nlohmann::json session_to_json(const Session& s);
Session session_from_json(const nlohmann::json& j);

/// Mounts the JSON API and, when `static_dir` is set, the UI bundle at /ui.
void mount_annotation_api(httplib::Server& server, Store& store,
                          const std::optional<std::filesystem::path>& static_dir = std::nullopt);

}  // namespace kg2mmkg::annotation

// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace kg2mmkg {

struct EntityId {
    std::uint32_t value = 0;
    auto operator<=>(const EntityId&) const = default;
};

struct RelationId {
    std::uint32_t value = 0;
    auto operator<=>(const RelationId&) const = default;
};

struct Triple {
    EntityId head;
    RelationId rel;
    EntityId tail;
    auto operator<=>(const Triple&) const = default;
};

enum class Split : std::uint8_t { train, valid, test };

std::string_view to_string(Split s);

/// Bijective label <-> dense handle map; handles are assigned in
/// first-appearance order.
class Vocabulary {
public:
    std::uint32_t intern(std::string_view label);
    std::optional<std::uint32_t> find(std::string_view label) const;
    /// Throws LookupError for out-of-range handles.
    const std::string& label(std::uint32_t handle) const;
    std::size_t size() const noexcept { return labels_.size(); }
    const std::vector<std::string>& labels() const noexcept { return labels_; }

    bool operator==(const Vocabulary& other) const { return labels_ == other.labels_; }

private:
    std::vector<std::string> labels_;
    std::unordered_map<std::string, std::uint32_t> index_;
};

using RelationSet = std::set<RelationId>;

struct Edge {
    RelationId rel;
    EntityId tail;
    auto operator<=>(const Edge&) const = default;
};

/// Immutable triple store with head and relation indices. All splits share
/// one pair of vocabularies; the indices cover every stored triple.
class KnowledgeGraph {
public:
    KnowledgeGraph() = default;

    /// Builds the indices. Every handle must resolve in its vocabulary;
    /// `splits` is either empty (all train) or parallel to `triples`.
    KnowledgeGraph(Vocabulary entities, Vocabulary relations, std::vector<Triple> triples,
                   std::vector<Split> splits = {});

    const Vocabulary& entities() const noexcept { return entities_; }
    const Vocabulary& relations() const noexcept { return relations_; }
    std::size_t num_entities() const noexcept { return entities_.size(); }
    std::size_t num_relations() const noexcept { return relations_.size(); }

    const std::vector<Triple>& triples() const noexcept { return triples_; }
    Split split_of(std::size_t position) const { return splits_.at(position); }
    std::vector<std::size_t> split_positions(Split s) const;
    std::size_t split_size(Split s) const;

    EntityId entity(std::string_view label) const;
    RelationId relation(std::string_view label) const;
    const std::string& label(EntityId e) const { return entities_.label(e.value); }
    const std::string& label(RelationId r) const { return relations_.label(r.value); }

    /// Human-readable name from the labels sidecar, falling back to the label.
    const std::string& display_name(EntityId e) const;
    const std::string& display_name(RelationId r) const;
    void set_display_names(const std::map<std::string, std::string>& names);

    /// Out-edges of `head` in (relation, tail) order.
    std::vector<Edge> neighbors(EntityId head) const;
    std::vector<Edge> neighbors(EntityId head, const RelationSet& allowed) const;

    std::vector<Triple> triples_of_relation(RelationId r) const;

    bool contains(const Triple& t) const { return known_.contains(pack(t)); }

    const std::vector<std::vector<Edge>>& out_index() const noexcept { return out_index_; }
    const std::vector<std::vector<std::size_t>>& rel_index() const noexcept { return rel_index_; }

    /// Same vocabularies, only the triples of the listed splits (all tagged
    /// with their original split).
    KnowledgeGraph restrict_to(const std::set<Split>& keep) const;

    /// Non-fatal findings from loading (e.g. cross-split duplicates).
    const std::vector<std::string>& warnings() const noexcept { return warnings_; }
    void add_warning(std::string w) { warnings_.push_back(std::move(w)); }

    /// SHA-256 over vocabularies, triples and split tags.
    std::string content_hash() const;

private:
    static std::uint64_t pack(const Triple& t) {
        return (std::uint64_t{t.head.value} << 40) ^ (std::uint64_t{t.rel.value} << 20) ^ t.tail.value;
    }
    void check_entity(EntityId e) const;

    Vocabulary entities_;
    Vocabulary relations_;
    std::vector<Triple> triples_;
    std::vector<Split> splits_;
    std::vector<std::vector<Edge>> out_index_;
    std::vector<std::vector<std::size_t>> rel_index_;
    std::unordered_set<std::uint64_t> known_;
    std::vector<std::string> entity_display_;
    std::vector<std::string> relation_display_;
    std::vector<std::string> warnings_;
};

/// Loads `head<TAB>relation<TAB>tail` files. Vocabularies come from the train
/// file; valid/test may only reference known labels.
KnowledgeGraph load_kg(const std::filesystem::path& train,
                       const std::optional<std::filesystem::path>& valid = std::nullopt,
                       const std::optional<std::filesystem::path>& test = std::nullopt);

/// Reads a `labels.json` sidecar: an object mapping identifiers to names.
std::map<std::string, std::string> load_labels(const std::filesystem::path& path);

/// Writes train.tsv (and valid.tsv / test.tsv when non-empty) into `dir`.
void save_kg(const KnowledgeGraph& g, const std::filesystem::path& dir);

}  // namespace kg2mmkg

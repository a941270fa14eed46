// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/backends.hpp"
#include "kg2mmkg/evalmetrics.hpp"
#include "kg2mmkg/kg.hpp"

namespace kg2mmkg::compare {

/// Number of whitespace-separated tokens in a display name.
std::size_t token_length(std::string_view name);

/// Ordering used by the longest-token baseline: more tokens first, then
/// more characters, then the smaller identifier.
bool prefer_longer(const KnowledgeGraph& g, EntityId a, EntityId b);

/// Name-only baseline: no neighbors.
std::vector<Edge> select_name_only(const KnowledgeGraph& g, EntityId h);

/// Longest-token baseline: per relation of h, the neighbor preferred by
/// prefer_longer. Relations in id order.
std::vector<Edge> select_longest_token(const KnowledgeGraph& g, EntityId h);

inline constexpr std::string_view kLongestTokenRule =
    "whitespace-token count of the neighbor's display name; ties by character length, then identifier order";

struct EntityEntry {
    /// (relation, tail) identifiers, in selection order.
    std::vector<std::pair<std::string, std::string>> selection;
    std::filesystem::path image;
    std::string sha256;
};

/// One method's output: entity identifier -> entry.
struct MethodRun {
    std::string name;
    std::map<std::string, EntityEntry> entities;
};

/// Reads a manifest written by the pipeline. Image paths are resolved
/// against the manifest's directory.
MethodRun load_method_run(const std::string& name, const std::filesystem::path& manifest);

/// entity identifier -> reference PNGs.
using Reals = std::map<std::string, std::vector<Bytes>>;

/// Reads <dir>/<slug(identifier)>/*.png in file-name order, keeping at most
/// `max_per_entity` per entity.
Reals load_reals(const std::filesystem::path& dir, const std::vector<std::string>& identifiers,
                 std::size_t max_per_entity);

struct PairComparison {
    std::string baseline;
    std::string method;
    std::size_t n_common = 0;
    /// Entities in the comparison set, in identifier order.
    std::vector<std::string> entities;
    evalmetrics::MetricReport baseline_report;
    evalmetrics::MetricReport method_report;
};

struct ComparisonReport {
    std::string reference;
    bool paired_only = false;
    bool has_reals = false;
    std::map<std::string, evalmetrics::MetricReport> per_method;
    std::vector<PairComparison> pairs;
    std::vector<std::string> warnings;

    nlohmann::json to_json() const;
};

/// True when two entries select the same (relation, tail) set.
bool same_selection(const EntityEntry& a, const EntityEntry& b);

/// Scores every method on the entities all runs share, then compares each
/// other run against `reference`. With `paired_only`, a pair's comparison
/// set keeps only entities whose selections differ between the two runs.
/// Entities without reference images are counted as skipped.
ComparisonReport compare_methods(const std::vector<MethodRun>& runs, const std::string& reference, const Reals& reals,
                                 backends::Embedder& embedder, bool paired_only, std::size_t workers = 1);

}  // namespace kg2mmkg::compare

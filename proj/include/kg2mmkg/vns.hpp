// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/backends.hpp"
#include "kg2mmkg/kg.hpp"

namespace kg2mmkg::vns {

struct VisualizationSample {
    Triple triple;
    std::string text;
    std::string image_sha256;
    double reward = 0.0;
    int r_score = 0;
    bool failed = false;
    std::string error;
};

struct RelationVisScore {
    RelationId relation;
    std::vector<VisualizationSample> samples;
    double r_vis = 0.0;
    double mu = 0.5;
    bool visualizable = false;
    /// Every sample failed, so the verdict is not a measurement.
    bool error = false;
    std::vector<std::string> warnings;
    // Set by finalize(); kept when samples are not loaded.
    std::size_t n_samples = 0;
    std::size_t n_failed = 0;
};

struct VnsOptions {
    std::size_t k = 10;
    double mu = 0.5;
    std::uint64_t seed = 0;
    int width = 512;
    int height = 512;
    std::size_t workers = 4;
};

/// min(k, |T_r|) distinct triples of relation r, uniform without
/// replacement. Depends only on (triples of r, k, seed).
std::vector<Triple> sample_triples(const KnowledgeGraph& g, RelationId r, std::size_t k, std::uint64_t seed);

/// "starredIn" -> "starred in", "birth_place" -> "birth place". URI
/// prefixes and angle brackets are dropped.
std::string naturalize_relation(std::string_view label);

/// "<head> <relation words> <tail>." using display names.
std::string verbalize(const Triple& t, const KnowledgeGraph& g);

/// 1 iff reward > 0. A reward of exactly zero counts as not visualizable.
inline int r_score(double reward) { return reward > 0.0 ? 1 : 0; }

/// Image seed for one sample; stable under reordering of the work.
std::uint64_t sample_seed(std::uint64_t seed, const Triple& t);

RelationVisScore score_relation(const KnowledgeGraph& g, RelationId r, backends::TextToImage& t2i,
                                backends::RewardModel& reward, const VnsOptions& opts);

/// Scores every relation of `g`; samples run in parallel.
std::vector<RelationVisScore> score_relations(const KnowledgeGraph& g, backends::TextToImage& t2i,
                                              backends::RewardModel& reward, const VnsOptions& opts);

/// Recomputes r_vis and the strict verdict from the samples.
void finalize(RelationVisScore& s);

RelationSet filter_relations(const std::vector<RelationVisScore>& scores);
/// Same, against a different threshold.
RelationSet filter_relations(const std::vector<RelationVisScore>& scores, double mu);

nlohmann::json scores_to_json(const KnowledgeGraph& g, const std::vector<RelationVisScore>& scores);
/// Reads the summary form back; samples are not restored.
std::vector<RelationVisScore> scores_from_json(const KnowledgeGraph& g, const nlohmann::json& j);
std::vector<std::string> samples_to_jsonl(const KnowledgeGraph& g, const std::vector<RelationVisScore>& scores);

}  // namespace kg2mmkg::vns

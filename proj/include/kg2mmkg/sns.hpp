// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/embed.hpp"
#include "kg2mmkg/kg.hpp"

namespace kg2mmkg::sns {

using embed::Composition;
using embed::Vector;

/// Composed representation of the neighbor t reached through r.
Vector neighbor_rep(const Vector& e_r, const Vector& e_t, Composition op = Composition::mult);

/// a.b / (|a||b|), accumulated left to right; 0 when either norm is below
/// 1e-12. Throws ShapeError on a dimension mismatch.
double cosine(const Vector& a, const Vector& b);

struct NeighborScore {
    EntityId head;
    RelationId rel;
    EntityId tail;
    Vector rep;
    double sim = 0.0;
};

struct Group {
    RelationId rel;
    std::vector<NeighborScore> scores;  // in tail order
    double group_mean = 0.0;
    std::vector<NeighborScore> selected;
};

struct SelectedNeighbors {
    EntityId head;
    std::vector<Group> groups;  // in relation order, nonempty groups only

    std::vector<Edge> selected_edges() const;
    bool empty() const { return groups.empty(); }
};

/// Groups the one-hop neighbors of h by allowed relation and keeps those
/// whose similarity to h is at least the group mean.
SelectedNeighbors select_neighbors(const KnowledgeGraph& g, const embed::EmbeddingTable& emb, EntityId h,
                                   const RelationSet& allowed, Composition op = Composition::mult);

/// select_neighbors for every entity, in entity order.
std::vector<SelectedNeighbors> select_all(const KnowledgeGraph& g, const embed::EmbeddingTable& emb,
                                          const RelationSet& allowed, Composition op, std::size_t workers = 4);

/// One JSON object per entity; similarities rounded to 6 decimals.
nlohmann::json to_json(const KnowledgeGraph& g, const SelectedNeighbors& s);

/// Reads the selected (relation, tail, sim) triples back from to_json output.
struct SelectedFact {
    RelationId rel;
    EntityId tail;
    double sim = 0.0;
};
std::vector<SelectedFact> selected_from_json(const KnowledgeGraph& g, const nlohmann::json& j);

}  // namespace kg2mmkg::sns

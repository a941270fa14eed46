// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/error.hpp"
#include "kg2mmkg/kg.hpp"

namespace kg2mmkg::mmkgc {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Fusion { none, image_add };
std::string to_string(Fusion f);
Fusion parse_fusion(const std::string& s);

struct KgcConfig {
    int dim = 32;
    double margin = 1.0;
    double learning_rate = 0.01;  // Adam step size
    int epochs = 200;
    int negatives = 1;
    std::uint64_t seed = 0;
    Fusion fusion = Fusion::none;

    void validate() const;
    nlohmann::json to_json() const;
};

/// Per-entity image features; rows of entities without an image are zero.
struct ImageFeatures {
    Matrix features;
    std::vector<bool> present;

    int dim() const { return static_cast<int>(features.cols()); }
    /// Entities missing from `by_label` get no image. All vectors must share
    /// one length.
    static ImageFeatures from_labels(const KnowledgeGraph& g, const std::map<std::string, std::vector<double>>& by_label);
};

/// struct + W * img, or struct alone when there is no image.
Vector fuse_image(const Vector& structure, const Vector* image, const Matrix& w_proj);

struct TransEModel {
    Fusion fusion = Fusion::none;
    Matrix entity;    // N x d structure vectors
    Matrix relation;  // R x d
    Matrix w_proj;    // d x d_img, empty without fusion
    Matrix image;     // N x d_img, empty without fusion
    std::vector<bool> has_image;

    /// Entity vectors after fusion.
    Matrix fused() const;
    /// -|h + r - t|
    double score(const Matrix& fused_entities, const Triple& t) const;
};

/// Same layout as the model; used for gradients and optimizer state.
struct TransEGrad {
    Matrix entity, relation, w_proj;
};

TransEModel init_model(const KnowledgeGraph& g, const KgcConfig& cfg, const ImageFeatures* images = nullptr);

/// `per_positive` corruptions per triple, replacing head or tail with a
/// different entity. Deterministic in `seed`.
std::vector<Triple> sample_corruptions(const KnowledgeGraph& g, const std::vector<Triple>& positives, int per_positive,
                                       std::uint64_t seed);

/// Mean of max(0, margin + d(pos) - d(neg)) over (positive, corruption)
/// pairs; negatives[i * per_positive + j] corrupts positives[i].
double margin_loss(const TransEModel& m, const std::vector<Triple>& positives, const std::vector<Triple>& negatives,
                   double margin, TransEGrad* grad = nullptr);

struct TrainResult {
    TransEModel model;
    double initial_loss = 0.0;
    double final_loss = 0.0;
    std::vector<double> loss_curve;
};

/// Trains on the train split of `g`. Throws when fusion is requested
/// without features, or when the loss becomes non-finite.
TrainResult train_transe(const KnowledgeGraph& g, const KgcConfig& cfg, const ImageFeatures* images = nullptr);

/// Max relative error of the analytic gradient of w_proj against central
/// differences.
double grad_check_w_proj(const TransEModel& m, const std::vector<Triple>& positives,
                         const std::vector<Triple>& negatives, double margin, double eps = 1e-6);

enum class Setting { raw, filtered };
std::string to_string(Setting s);

struct RankReport {
    double mrr = 0.0;
    std::map<int, double> hits_at;  // keys 1, 3, 10
    std::size_t n_queries = 0;
    Setting setting = Setting::filtered;

    nlohmann::json to_json() const;
};

class Scorer {
public:
    virtual ~Scorer() = default;
    /// Higher is more plausible.
    virtual double score(const Triple& t) const = 0;
};

class TransEScorer : public Scorer {
public:
    explicit TransEScorer(const TransEModel& m) : model_(m), fused_(m.fused()) {}
    double score(const Triple& t) const override { return model_.score(fused_, t); }

private:
    const TransEModel& model_;
    Matrix fused_;
};

/// Rank of a true candidate: 1 + (#better) + (#tied)/2.
double mean_tie_rank(double true_score, const std::vector<double>& other_scores);

/// Tail and head queries for every test triple. The filtered setting drops
/// other candidates that form known triples in any split.
RankReport evaluate(const KnowledgeGraph& g, const Scorer& scorer, Setting setting, std::size_t workers = 1);

}  // namespace kg2mmkg::mmkgc

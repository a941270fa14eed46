// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/error.hpp"
#include "kg2mmkg/kg.hpp"

namespace kg2mmkg::embed {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

enum class Composition { mult, sub };
enum class Activation { tanh, identity };

std::string to_string(Composition c);
std::string to_string(Activation a);
Composition parse_composition(const std::string& s);
Activation parse_activation(const std::string& s);

struct EncoderConfig {
    int dim = 32;
    int layers = 1;
    Composition composition = Composition::mult;
    Activation activation = Activation::tanh;
    double learning_rate = 0.5;
    int epochs = 200;
    int negatives_per_positive = 1;
    /// Embedding vectors start uniform in (-init_range, init_range).
    double init_range = 1.0;
    std::uint64_t seed = 0;

    /// Throws ConfigError-style kg2mmkg::Error on invalid values.
    void validate() const;
    nlohmann::json to_json() const;
    static EncoderConfig from_json(const nlohmann::json& j);
    std::string hash() const;
};

/// Elementwise product (mult) or difference (sub). Throws ShapeError on a
/// dimension mismatch.
Vector compose(const Vector& a, const Vector& r, Composition op);

/// Per-layer direction matrices: original edges, synthesized inverse edges,
/// self-loops, and the relation transform.
struct LayerWeights {
    Matrix w_orig, w_inv, w_self, w_rel;
};

/// Trainable encoder state. Rows of `entity` / `relation` are embeddings.
struct EncoderParams {
    Matrix entity;
    Matrix relation;
    Vector self_loop;
    std::vector<LayerWeights> layers;

    /// All scalars in a fixed order (used by the gradient checker).
    std::vector<double*> scalars();
    void set_zero_like(const EncoderParams& other);
    void axpy(double alpha, const EncoderParams& x);
};

/// Uniform(-init_range, init_range) vectors; identity-plus-uniform(-0.1, 0.1)
/// matrices.
EncoderParams init_params(std::size_t num_entities, std::size_t num_relations, const EncoderConfig& cfg);

struct EncoderOutput {
    Matrix entity;
    Matrix relation;  // excludes the self-loop row
};

/// Message passing over original, inverse and self-loop edges. Incoming
/// messages are summed in (direction, relation, neighbor) handle order so the
/// result does not depend on the triple list order.
EncoderOutput encode(const KnowledgeGraph& g, const EncoderParams& params, const EncoderConfig& cfg);

/// Tail-corrupted negatives, `cfg.negatives_per_positive` per triple.
std::vector<Triple> sample_negatives(const KnowledgeGraph& g, int per_positive, std::uint64_t seed);

/// Mean binary cross-entropy of the DistMult decoder on encoder outputs,
/// positives = all triples of `g`.
double loss(const KnowledgeGraph& g, const EncoderParams& params, const EncoderConfig& cfg,
            const std::vector<Triple>& negatives);

/// Same loss; fills `grad` (shaped like `params`) with its gradient.
double loss_and_grad(const KnowledgeGraph& g, const EncoderParams& params, const EncoderConfig& cfg,
                     const std::vector<Triple>& negatives, EncoderParams& grad);

struct EmbeddingTable {
    Matrix entity_vecs;
    Matrix relation_vecs;
    EncoderConfig config;
    double initial_loss = 0.0;
    double final_loss = 0.0;
    std::vector<double> loss_curve;
};

/// Full-batch gradient descent. Throws NumericError when the loss stops
/// being finite.
EmbeddingTable train(const KnowledgeGraph& g, const EncoderConfig& cfg);

/// Max relative error between analytic gradients and central differences
/// over every parameter scalar.
double grad_check(const KnowledgeGraph& g, const EncoderConfig& cfg, double epsilon);

double relative_error(double analytic, double numeric);

void save_embeddings(const std::filesystem::path& path, const EmbeddingTable& table);
EmbeddingTable load_embeddings(const std::filesystem::path& path);

}  // namespace kg2mmkg::embed

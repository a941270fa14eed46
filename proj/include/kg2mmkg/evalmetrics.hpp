// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/backends.hpp"
#include "kg2mmkg/error.hpp"
#include "kg2mmkg/png.hpp"

namespace kg2mmkg::evalmetrics {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

/// n x d feature rows.
struct FeatureSet {
    Matrix vectors;
    std::string source;

    static FeatureSet from_rows(const std::vector<std::vector<double>>& rows, std::string source = {});
    /// Throws ShapeError when empty and NumericError on non-finite values.
    void validate() const;
};

/// Frechet distance between Gaussians fitted to the two sets:
/// |mu1 - mu2|^2 + tr(S1 + S2 - 2 (S1 S2)^(1/2)). A set of one vector has a
/// zero covariance, so two singletons give the squared distance exactly.
double fid(const FeatureSet& a, const FeatureSet& b);

/// Covariances whose condition number exceeds this get kRegularization * I.
inline constexpr double kMaxCondition = 1e12;
inline constexpr double kRegularization = 1e-6;

/// The same distance from precomputed means and covariances.
double fid_from_moments(const Vector& mu1, Matrix s1, const Vector& mu2, Matrix s2);

/// Plain dot product; inputs are expected to be unit vectors.
double clipscore_pair(std::span<const double> u, std::span<const double> v);

struct BestOfReals {
    double fid_min = 0.0;
    double clip_max = 0.0;
    std::size_t n_reals = 0;
};

/// Minimum singleton FID and maximum cosine over the real features.
BestOfReals best_of_reals(const std::vector<double>& generated, const std::vector<std::vector<double>>& reals);

/// Embeds the images first. Undecodable reals are dropped and reported in
/// `warnings`; an undecodable generated image, or no usable real, throws
/// DecodeError.
BestOfReals best_of_reals(std::span<const std::uint8_t> generated, const std::vector<Bytes>& reals,
                          backends::Embedder& embedder, std::vector<std::string>* warnings = nullptr);

struct EntityMetric {
    std::string entity;
    double fid_min = 0.0;
    double clip_max = 0.0;
    std::size_t n_reals = 0;
};

struct MetricReport {
    std::string method;
    std::vector<EntityMetric> rows;
    double mean_fid = 0.0;
    double mean_clip = 0.0;
    std::size_t n_entities = 0;
    std::size_t n_skipped = 0;
    std::vector<std::string> warnings;

    /// Recomputes the aggregates from `rows`, in row order.
    void aggregate();
    nlohmann::json to_json() const;
};

}  // namespace kg2mmkg::evalmetrics

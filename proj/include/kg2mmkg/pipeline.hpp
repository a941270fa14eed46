// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "kg2mmkg/backends.hpp"
#include "kg2mmkg/config.hpp"
#include "kg2mmkg/error.hpp"
#include "kg2mmkg/kg.hpp"

namespace kg2mmkg::pipeline {

enum class Stage { load, train_embed, score_relations, select_neighbors, gen_prompts, gen_images, eval, kgc, all };

std::string_view to_string(Stage s);
/// Accepts the CLI spelling ("train-embed"). Throws ConfigError.
Stage parse_stage(std::string_view s);
/// Every stage except `all`, in execution order.
const std::vector<Stage>& stage_order();

/// A stage's input artifact is missing or was produced under a different
/// configuration. The CLI exits with status 3.
class UpstreamMissing : public Error {
public:
    UpstreamMissing(const std::string& what, Stage required) : Error(what), required_(required) {}
    Stage required() const noexcept { return required_; }

private:
    Stage required_;
};

/// Backend calls failed for some items after retries. Completed items are
/// kept for the next run. The CLI exits with status 4.
class BackendFailure : public Error {
public:
    using Error::Error;
};

struct Backends {
    std::unique_ptr<backends::TextToImage> t2i;
    std::unique_ptr<backends::RewardModel> reward;
    std::unique_ptr<backends::Embedder> embed;
    /// Null when no language model is configured.
    std::unique_ptr<backends::LanguageModel> llm;

    static Backends from_config(const PipelineConfig& cfg);
    /// Logical calls across all backends.
    std::uint64_t total_calls() const;
};

/// Append-only JSONL store of finished work items, keyed by item id. The
/// first line holds the key of the inputs the items were computed from; a
/// different key empties the log. Lines cut short by a crash are dropped
/// on open.
class ItemLog {
public:
    ItemLog(std::filesystem::path path, std::string key);

    std::optional<nlohmann::json> find(const std::string& id) const;
    void append(const std::string& id, const nlohmann::json& data);
    std::size_t size() const;
    const std::filesystem::path& path() const { return path_; }

private:
    std::filesystem::path path_;
    std::string key_;
    mutable std::mutex mu_;
    std::map<std::string, nlohmann::json> items_;
};

struct StageResult {
    Stage stage = Stage::load;
    bool cached = false;
    double seconds = 0.0;
    std::vector<std::string> warnings;
};

namespace artifacts {
inline constexpr std::string_view kg_summary = "kg_summary.json";
inline constexpr std::string_view embeddings = "embeddings.json";
inline constexpr std::string_view relation_scores = "relation_scores.json";
inline constexpr std::string_view vns_samples = "vns_samples.jsonl";
inline constexpr std::string_view selected_neighbors = "selected_neighbors.jsonl";
inline constexpr std::string_view prompts = "prompts.jsonl";
inline constexpr std::string_view manifest = "manifest.json";
inline constexpr std::string_view image_features = "image_features.json";
inline constexpr std::string_view metrics_report = "metrics_report.json";
inline constexpr std::string_view kgc_report = "kgc_report.json";
}  // namespace artifacts

inline constexpr std::string_view kManifestFormat = "kg2mmkg-manifest/1";
inline constexpr std::string_view kMethodVsns = "vsns";
inline constexpr std::string_view kMethodNameOnly = "name-only";
inline constexpr std::string_view kMethodLongestToken = "longest-token";

class Pipeline {
public:
    using Logger = std::function<void(std::string_view)>;

    /// Validates the configuration (throws ConfigError).
    Pipeline(PipelineConfig cfg, Backends& backends, Logger log = {});

    /// Runs one stage, or every stage in order for Stage::all.
    std::vector<StageResult> run(Stage s);
    StageResult run_stage(Stage s);

    std::filesystem::path path(std::string_view relative) const { return cfg_.output_dir / relative; }
    const PipelineConfig& config() const { return cfg_; }

private:
    StageResult load();
    StageResult train_embed();
    StageResult score_relations();
    StageResult select_neighbors();
    StageResult gen_prompts();
    StageResult gen_images();
    StageResult eval();
    StageResult kgc();

    /// Cache key of a stage from its configuration and the current bytes of
    /// its inputs.
    std::string stage_key(Stage s) const;
    bool cache_hit(Stage s, const std::string& key) const;
    void write_stamp(Stage s, const std::string& key, double seconds, const std::vector<std::string>& outputs,
                     bool complete) const;
    /// Throws UpstreamMissing unless `s` has run with the current inputs.
    void require(Stage s) const;
    KnowledgeGraph graph() const;
    std::map<std::string, double> stage_timings() const;
    /// Configuration hash with dataset paths replaced by content digests.
    std::string config_hash() const;
    std::vector<EntityId> targets(const KnowledgeGraph& g) const;
    void say(const std::string& msg) const;

    struct RenderItem;
    struct Rendered;
    Rendered render(const KnowledgeGraph& g, const std::vector<RenderItem>& items, const std::filesystem::path& dir,
                    ItemLog& log) const;
    void write_manifest(const std::filesystem::path& path, std::string_view method, const Rendered& r,
                        const std::map<std::string, double>& timings) const;

    PipelineConfig cfg_;
    Backends& backends_;
    Logger log_;
};

/// Manifest records compared against each other; `stage_timings` is the
/// only field allowed to differ between equivalent runs.
nlohmann::json strip_timings(nlohmann::json manifest);

/// Every record's image exists and hashes to the recorded digest. Returns
/// the problems found.
std::vector<std::string> verify_manifest(const std::filesystem::path& manifest);

}  // namespace kg2mmkg::pipeline

// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/backends.hpp"
#include "kg2mmkg/embed.hpp"
#include "kg2mmkg/error.hpp"
#include "kg2mmkg/kg.hpp"
#include "kg2mmkg/mmkgc.hpp"
#include "kg2mmkg/prompts.hpp"

namespace kg2mmkg {

/// Invalid or unreadable configuration. The CLI exits with status 2.
class ConfigError : public Error {
public:
    using Error::Error;
};

struct DatasetConfig {
    std::filesystem::path train;
    std::optional<std::filesystem::path> valid;
    std::optional<std::filesystem::path> test;
    /// JSON object mapping identifiers to display names.
    std::optional<std::filesystem::path> labels;
    /// Directory with <slug>/<n>.png reference images per entity.
    std::optional<std::filesystem::path> reals;
};

enum class CachePolicy { use, refresh };

struct PipelineConfig {
    DatasetConfig dataset;
    std::filesystem::path output_dir;
    std::uint64_t seed = 0;
    std::size_t workers = 4;
    bool heads_only = false;
    bool paired_only = false;
    CachePolicy cache = CachePolicy::use;

    std::size_t vns_k = 10;
    double mu = 0.5;
    std::set<Split> vns_splits{Split::train};
    int vns_image_width = 512;
    int vns_image_height = 512;

    embed::EncoderConfig encoder;
    prompts::PromptOptions prompt;
    int image_width = 512;
    int image_height = 512;
    /// Maximum number of reference images used per entity.
    std::size_t max_reals = 3;
    mmkgc::KgcConfig kgc;

    backends::EndpointConfig t2i, reward, embed, llm;

    /// Throws ConfigError.
    void validate() const;
    /// Everything that can change results. Output location, worker count
    /// and cache policy are left out.
    nlohmann::json to_json() const;
    std::string hash() const;
};

struct ConfigOverrides {
    std::optional<std::uint64_t> seed;
    std::optional<bool> paired_only;
    std::optional<bool> heads_only;
    std::optional<std::filesystem::path> output_dir;
};

/// Relative paths are resolved against the config file's directory. The
/// command-line overrides win over the file; KG2MMKG_{T2I,REWARD,EMBED,LLM}_URL
/// switch the matching backend to HTTP at that URL.
PipelineConfig load_config(const std::filesystem::path& path, const ConfigOverrides& overrides = {});

/// Same, from TOML text; `base_dir` anchors relative paths.
PipelineConfig parse_config(std::string_view toml_text, const std::filesystem::path& base_dir,
                            const ConfigOverrides& overrides = {});

}  // namespace kg2mmkg

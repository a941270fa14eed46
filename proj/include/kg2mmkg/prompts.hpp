// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/backends.hpp"
#include "kg2mmkg/kg.hpp"

namespace kg2mmkg::prompts {

enum class Source { llm, template_ };
std::string_view to_string(Source s);
Source parse_source(std::string_view s);

struct PromptOptions {
    int word_cap = 60;
    /// Placeholders: {entity}, {facts} (one "- fact" line each), {cap}.
    std::string instruction =
        "Write one sentence describing what {entity} looks like, for a text-to-image model.\n"
        "Ground the description in the facts below. If a fact is clearly wrong, correct it.\n"
        "Use at most {cap} words and answer with the sentence only.\n"
        "Entity: {entity}\n"
        "Facts:\n"
        "{facts}";
    /// Used when the entity has no facts. Same placeholders.
    std::string instruction_no_facts =
        "Write one sentence describing what {entity} typically looks like, for a text-to-image model.\n"
        "Use at most {cap} words and answer with the sentence only.\n"
        "Entity: {entity}\n";
    std::string version = "instruction/1";

    void validate() const;
    /// Hash of the version, templates and cap.
    std::string hash() const;
};

struct PromptRecord {
    EntityId entity;
    /// Display name used in the instruction and the prompt.
    std::string name;
    std::vector<std::string> facts;
    std::string instruction;
    std::string prompt;
    Source source = Source::template_;
    int word_count = 0;
    bool truncated = false;
    /// An LLM was configured but failed, so the template was used.
    bool downgraded = false;
    std::string error;
};

/// "<relation words> <tail display name>", e.g. "starred in The Trial".
std::string verbalize_fact(const KnowledgeGraph& g, RelationId r, EntityId tail);

/// Throws Error on an empty label.
std::string build_instruction(std::string_view label, const std::vector<std::string>& facts,
                              const PromptOptions& opts = {});

/// "A photo of <label>, <fact1>; <fact2>", or "A photo of <label>".
std::string template_prompt(std::string_view label, const std::vector<std::string>& facts);

/// Control characters become spaces, whitespace collapses, surrounding
/// quotes are stripped.
std::string sanitize(std::string_view reply);

/// Keeps the first `cap` whitespace tokens. Returns true if it cut anything.
bool truncate_words(std::string& text, int cap);

int word_count(std::string_view text);

/// With `llm` null, the template is used. LLM failures fall back to the
/// template with `downgraded` set.
PromptRecord gen_prompt(EntityId entity, std::string_view name, std::vector<std::string> facts,
                        backends::LanguageModel* llm, const PromptOptions& opts = {});

nlohmann::json to_json(const KnowledgeGraph& g, const PromptRecord& r);
PromptRecord from_json(const KnowledgeGraph& g, const nlohmann::json& j);

}  // namespace kg2mmkg::prompts

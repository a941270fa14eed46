// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <map>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "kg2mmkg/error.hpp"
#include "kg2mmkg/hashing.hpp"

namespace kg2mmkg::backends {

/// A backend call failed. `transient` failures (timeouts, connection
/// errors, 5xx) are retried; others are not.
class BackendError : public Error {
public:
    BackendError(const std::string& what, bool transient, int status = 0)
        : Error(what), transient_(transient), status_(status) {}
    bool transient() const noexcept { return transient_; }
    int status() const noexcept { return status_; }

private:
    bool transient_;
    int status_;
};

/// The service answered, but the payload violates the wire protocol.
class ProtocolError : public BackendError {
public:
    explicit ProtocolError(const std::string& what) : BackendError(what, false) {}
};

enum class Kind { t2i, reward, embed, llm };
std::string to_string(Kind k);

struct EndpointConfig {
    Kind kind = Kind::t2i;
    /// "mock" or "http"; "none" is accepted for the LLM only.
    std::string mode = "mock";
    std::string base_url;
    std::uint64_t mock_seed = 0;
    std::chrono::milliseconds timeout{30000};
    int max_retries = 2;
    int max_in_flight = 4;
    std::chrono::milliseconds backoff{200};

    // mock reward
    double positive_rate = 0.7;
    /// Overrides the positive rate for texts containing a keyword.
    std::map<std::string, double> keyword_rates;
    // mock embedder
    int embed_dim = 64;

    void validate() const;
    nlohmann::json to_json() const;
};

struct ImageArtifact {
    Bytes png;
    int width = 0;
    int height = 0;
    std::string sha256;
    std::uint64_t seed = 0;
    std::string prompt_hash;
    std::string model_info;
};

/// Decodes `png` (throws DecodeError) and fills dimensions and hashes.
ImageArtifact make_artifact(Bytes png, std::uint64_t seed, const std::string& prompt, std::string model_info);

struct CallStats {
    std::atomic<std::uint64_t> calls{0};     // logical calls
    std::atomic<std::uint64_t> requests{0};  // attempts, including retries
    std::atomic<std::uint64_t> failures{0};  // logical calls that ended in an error
};

class TextToImage {
public:
    virtual ~TextToImage() = default;
    /// Throws on an empty prompt or when the result is not `width` x `height`.
    ImageArtifact generate(const std::string& prompt, std::uint64_t seed, int width, int height);
    const CallStats& stats() const { return stats_; }

protected:
    virtual ImageArtifact do_generate(const std::string& prompt, std::uint64_t seed, int width, int height) = 0;
    CallStats stats_;
};

class RewardModel {
public:
    virtual ~RewardModel() = default;
    double score(const std::string& text, const ImageArtifact& image);
    const CallStats& stats() const { return stats_; }

protected:
    virtual double do_score(const std::string& text, const ImageArtifact& image) = 0;
    CallStats stats_;
};

/// Embeddings are L2-normalized here, whatever the implementation returns.
class Embedder {
public:
    virtual ~Embedder() = default;
    std::vector<double> embed_image(std::span<const std::uint8_t> png);
    std::vector<double> embed_text(const std::string& text);
    const CallStats& stats() const { return stats_; }

protected:
    virtual std::vector<double> do_embed_image(std::span<const std::uint8_t> png) = 0;
    virtual std::vector<double> do_embed_text(const std::string& text) = 0;
    CallStats stats_;
};

class LanguageModel {
public:
    virtual ~LanguageModel() = default;
    std::string complete(const std::string& instruction);
    const CallStats& stats() const { return stats_; }

protected:
    virtual std::string do_complete(const std::string& instruction) = 0;
    CallStats stats_;
};

/// Throws ProtocolError for zero-norm or non-finite input.
std::vector<double> l2_normalize(std::vector<double> v);

// ---------------------------------------------------------------------------
// Deterministic mocks. Each is a pure function of (inputs, mock seed).

/// Procedural RGB image. Each content word of the prompt contributes a
/// colored blob placed by the word's hash; the seed jitters blob positions
/// and adds low-amplitude pixel noise keyed by (prompt, seed).
class MockTextToImage : public TextToImage {
public:
    explicit MockTextToImage(std::uint64_t seed) : seed_(seed) {}

protected:
    ImageArtifact do_generate(const std::string& prompt, std::uint64_t seed, int width, int height) override;

private:
    std::uint64_t seed_;
};

/// Signed score keyed by hash(text): positive with probability
/// `positive_rate` (or the rate of the first matching keyword).
class MockReward : public RewardModel {
public:
    MockReward(std::uint64_t seed, double positive_rate, std::map<std::string, double> keyword_rates = {})
        : seed_(seed), positive_rate_(positive_rate), keyword_rates_(std::move(keyword_rates)) {}

protected:
    double do_score(const std::string& text, const ImageArtifact& image) override;

private:
    std::uint64_t seed_;
    double positive_rate_;
    std::map<std::string, double> keyword_rates_;
};

/// Image: 8x8 grid of mean-centered color cells through a fixed Gaussian
/// projection. Text: sum of hashed per-word Gaussian vectors.
class MockEmbedder : public Embedder {
public:
    MockEmbedder(std::uint64_t seed, int dim);
    int dim() const { return dim_; }

protected:
    std::vector<double> do_embed_image(std::span<const std::uint8_t> png) override;
    std::vector<double> do_embed_text(const std::string& text) override;

private:
    std::uint64_t seed_;
    int dim_;
    std::vector<double> projection_;  // dim x 192, row-major
};

/// Reads the `Entity:` and `- fact` lines of an instruction and answers with
/// a quoted one-sentence description.
class MockLanguageModel : public LanguageModel {
protected:
    std::string do_complete(const std::string& instruction) override;
};

// ---------------------------------------------------------------------------
// JSON-over-HTTP clients.

/// POSTs JSON with bounded retries (exponential backoff) and an in-flight cap.
class HttpTransport {
public:
    explicit HttpTransport(EndpointConfig cfg);
    ~HttpTransport();
    HttpTransport(const HttpTransport&) = delete;
    HttpTransport& operator=(const HttpTransport&) = delete;

    nlohmann::json post(const std::string& path, const nlohmann::json& body, CallStats& stats);

private:
    struct Impl;
    std::unique_ptr<Impl> impl_;
};

class HttpTextToImage : public TextToImage {
public:
    explicit HttpTextToImage(EndpointConfig cfg) : transport_(std::move(cfg)) {}

protected:
    ImageArtifact do_generate(const std::string& prompt, std::uint64_t seed, int width, int height) override;

private:
    HttpTransport transport_;
};

class HttpReward : public RewardModel {
public:
    explicit HttpReward(EndpointConfig cfg) : transport_(std::move(cfg)) {}

protected:
    double do_score(const std::string& text, const ImageArtifact& image) override;

private:
    HttpTransport transport_;
};

class HttpEmbedder : public Embedder {
public:
    explicit HttpEmbedder(EndpointConfig cfg) : transport_(std::move(cfg)) {}

protected:
    std::vector<double> do_embed_image(std::span<const std::uint8_t> png) override;
    std::vector<double> do_embed_text(const std::string& text) override;

private:
    std::vector<double> parse_vector(const nlohmann::json& reply);
    HttpTransport transport_;
};

class HttpLanguageModel : public LanguageModel {
public:
    explicit HttpLanguageModel(EndpointConfig cfg) : transport_(std::move(cfg)) {}

protected:
    std::string do_complete(const std::string& instruction) override;

private:
    HttpTransport transport_;
};

std::unique_ptr<TextToImage> make_text_to_image(const EndpointConfig& cfg);
std::unique_ptr<RewardModel> make_reward(const EndpointConfig& cfg);
std::unique_ptr<Embedder> make_embedder(const EndpointConfig& cfg);
/// Returns nullptr for mode "none".
std::unique_ptr<LanguageModel> make_language_model(const EndpointConfig& cfg);

}  // namespace kg2mmkg::backends

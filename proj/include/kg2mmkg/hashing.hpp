// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace kg2mmkg {

using Bytes = std::vector<std::uint8_t>;
using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);
Digest sha256(std::string_view data);

std::string to_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(std::span<const std::uint8_t> data);
std::string sha256_hex(std::string_view data);

/// First 16 hex digits of the SHA-256; used for content-addressed cache keys.
std::string short_hash(std::string_view data);

std::string base64_encode(std::span<const std::uint8_t> data);
/// Throws kg2mmkg::Error on malformed input.
Bytes base64_decode(std::string_view text);

}  // namespace kg2mmkg

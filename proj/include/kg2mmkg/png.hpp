// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kg2mmkg/error.hpp"

namespace kg2mmkg {

/// 8-bit interleaved RGB.
struct RgbImage {
    int width = 0;
    int height = 0;
    std::vector<std::uint8_t> pixels;

    std::uint8_t* at(int x, int y) { return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x); }
    const std::uint8_t* at(int x, int y) const {
        return pixels.data() + 3 * (static_cast<std::size_t>(y) * width + x);
    }
};

class DecodeError : public Error {
public:
    using Error::Error;
};

std::vector<std::uint8_t> encode_png(const RgbImage& image);

/// Decodes any 8/16-bit PNG into RGB8. Throws DecodeError.
RgbImage decode_png(std::span<const std::uint8_t> data);

}  // namespace kg2mmkg

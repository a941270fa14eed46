// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace kg2mmkg {

std::string_view trim(std::string_view s);
std::vector<std::string_view> split(std::string_view s, char sep);
std::string to_lower(std::string_view s);

/// Whitespace-separated tokens.
std::vector<std::string> whitespace_tokens(std::string_view s);

std::string read_file(const std::filesystem::path& path);

/// Writes to a sibling temp file and renames it over `path`.
void write_file_atomic(const std::filesystem::path& path, std::string_view content);

/// Appends one line (a trailing newline is added) and flushes to disk.
void append_line(const std::filesystem::path& path, std::string_view line);

/// Filesystem-safe rendering of a label.
std::string slugify(std::string_view label);

}  // namespace kg2mmkg

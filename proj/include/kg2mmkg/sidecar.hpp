// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <map>
#include <string>

namespace httplib {
class Server;
}

namespace kg2mmkg::backends {

struct MockSidecarOptions {
    std::uint64_t seed = 0;
    double positive_rate = 0.7;
    std::map<std::string, double> keyword_rates;
    int embed_dim = 64;
};

/// Serves the deterministic mocks over the backend wire protocol
/// (/generate, /score, /embed, /complete). Errors are answered with an HTTP
/// status and {"error", "detail"}.
void mount_mock_backends(httplib::Server& server, const MockSidecarOptions& options);

}  // namespace kg2mmkg::backends

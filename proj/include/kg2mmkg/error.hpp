// Copyright 2026 The kg2mmkg Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kg2mmkg {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input file; carries the 1-based line number.
class ParseError : public Error {
public:
    ParseError(const std::string& file, std::size_t line, const std::string& what)
        : Error(file + ":" + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

/// Input is well-formed but violates a data invariant. `offenders` lists the
/// offending items (labels, triples) for the diagnostic.
class ValidationError : public Error {
public:
    ValidationError(const std::string& what, std::vector<std::string> offenders)
        : Error(format(what, offenders)), offenders_(std::move(offenders)) {}

    const std::vector<std::string>& offenders() const noexcept { return offenders_; }

private:
    static std::string format(const std::string& what, const std::vector<std::string>& offenders) {
        std::string msg = what;
        const std::size_t shown = offenders.size() < 10 ? offenders.size() : 10;
        for (std::size_t i = 0; i < shown; ++i) msg += (i == 0 ? ": " : ", ") + offenders[i];
        if (offenders.size() > shown) msg += ", ... (" + std::to_string(offenders.size()) + " total)";
        return msg;
    }

    std::vector<std::string> offenders_;
};

class LookupError : public Error {
public:
    using Error::Error;
};

class ShapeError : public Error {
public:
    using Error::Error;
};

class NumericError : public Error {
public:
    using Error::Error;
};

}  // namespace kg2mmkg

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace semparse {

enum class ErrorKind {
    manifest_missing,
    manifest_invalid,
    dangling_reference,
    invalid_encoding,
    format_error,
    synonym_cycle,
    config_invalid,
    unknown_scope,
    io_error,
    empty_scope,
    band_empty,
    lexicon_mismatch,
    no_aims,
    empty_bank,
    no_messages,
};

/// Error names as they appear in machine-readable error objects.
std::string_view error_kind_name(ErrorKind kind);

/// Process exit code for a given error kind: 2 invalid input/config,
/// 3 degenerate analysis, 4 requested section absent.
int error_exit_code(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string message)
        : std::runtime_error(std::move(message)), kind_(kind) {}

    ErrorKind kind() const { return kind_; }
    std::string_view kind_name() const { return error_kind_name(kind_); }
    int exit_code() const { return error_exit_code(kind_); }

private:
    ErrorKind kind_;
};

} // namespace semparse

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <string_view>

namespace semparse {

/// Incremental SHA-256, used for bundle and lexicon fingerprints.
class Sha256 {
public:
    Sha256();
    ~Sha256();
    Sha256(const Sha256&) = delete;
    Sha256& operator=(const Sha256&) = delete;

    void update(std::string_view bytes);
    /// Finalizes and returns "sha256:<hex>". The object must not be reused.
    std::string hex_digest();

private:
    void* ctx_;
};

std::string sha256_hex(std::string_view bytes);

} // namespace semparse

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/errors.hpp"

namespace semparse {

std::string_view error_kind_name(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::manifest_missing: return "ManifestMissing";
    case ErrorKind::manifest_invalid: return "ManifestInvalid";
    case ErrorKind::dangling_reference: return "DanglingReference";
    case ErrorKind::invalid_encoding: return "InvalidEncoding";
    case ErrorKind::format_error: return "FormatError";
    case ErrorKind::synonym_cycle: return "SynonymCycle";
    case ErrorKind::config_invalid: return "ConfigInvalid";
    case ErrorKind::unknown_scope: return "UnknownScope";
    case ErrorKind::io_error: return "IoError";
    case ErrorKind::empty_scope: return "EmptyScope";
    case ErrorKind::band_empty: return "BandEmpty";
    case ErrorKind::lexicon_mismatch: return "LexiconMismatch";
    case ErrorKind::no_aims: return "NoAims";
    case ErrorKind::empty_bank: return "EmptyBank";
    case ErrorKind::no_messages: return "NoMessages";
    }
    return "Error";
}

int error_exit_code(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::empty_scope:
    case ErrorKind::band_empty:
        return 3;
    case ErrorKind::no_aims:
    case ErrorKind::empty_bank:
    case ErrorKind::no_messages:
        return 4;
    default:
        return 2;
    }
}

} // namespace semparse

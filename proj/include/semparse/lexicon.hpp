// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "semparse/corpus.hpp"

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace semparse {

/// Canonical token or a sense id of the form "token#N".
using Term = std::string;

/// One sense of a homonym. Discriminators are stored canonical
/// (synonym-normalized) and stopword-free.
struct Sense {
    std::string sense_id;
    std::set<Term> discriminators;
};

/// Stopword list, depth-1 synonym map, homonym sense inventory.
/// Immutable after load; safe to share across threads.
struct Lexicon {
    std::set<Term> stopwords;
    std::map<Term, Term> synonyms; // variant -> canonical, forest of depth 1
    std::map<Term, std::vector<Sense>> homonyms;
    std::string fingerprint;

    /// Canonical form of a case-folded token, or nullopt for stopwords.
    /// One synonym step suffices: the map is validated idempotent.
    std::optional<Term> normalize(const Term& token) const;

    /// Picks the sense whose discriminators overlap the context most.
    /// Ties (including an all-zero overlap) take the first listed sense.
    /// Non-homonyms pass through unchanged.
    Term disambiguate(const Term& token, const std::set<Term>& context) const;
};

/// Loads the dictionaries; any path may be empty (absent component).
/// Throws FormatError (with a line number) and SynonymCycle.
Lexicon load_lexicon(const std::filesystem::path& stopword_path,
                     const std::filesystem::path& synonym_path,
                     const std::filesystem::path& homonym_path);

/// Resolves every token position of a sentence to its analysis term:
/// nullopt for stopwords, the canonical form otherwise, with homonyms
/// disambiguated against the canonical tokens within window_radius
/// positions of the occurrence (same sentence, occurrence excluded).
std::vector<std::optional<Term>> resolve_terms(const Sentence& sentence, const Lexicon& lex,
                                               std::size_t window_radius);

/// Set of all distinct terms that occur in the documents.
std::set<Term> term_set(const std::vector<Document>& docs, const Lexicon& lex,
                        std::size_t window_radius);

} // namespace semparse

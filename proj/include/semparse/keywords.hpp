// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "semparse/corpus.hpp"
#include "semparse/lexicon.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace semparse {

struct FreqEntry {
    Term term;
    std::uint64_t freq = 0;
    std::size_t rank = 0; // 1-based
};

/// Rank-ordered term frequencies for one scope. Entries are sorted by
/// frequency descending, ties broken by term ascending; total_tokens
/// counts every token including stopwords.
struct FrequencyTable {
    std::string scope_id;
    std::vector<FreqEntry> entries;
    std::uint64_t total_tokens = 0;
    std::string lexicon_fingerprint;
};

/// Least-squares fit of log2(freq) against log2(rank). Diagnostic only;
/// never gates keyword selection.
struct ZipfFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
};

struct RankBand {
    std::size_t low_rank = 0;
    std::size_t high_rank = 0;
};

struct ScoredKeyword {
    Term term;
    double score = 0.0;
};

struct KeywordSet {
    std::string scope_id;
    std::vector<ScoredKeyword> keywords; // score descending, term ascending on ties
    RankBand band;
    std::string lexicon_fingerprint;

    bool contains(const Term& term) const;
};

/// Chapter document frequencies for cross-chapter keyword weighting.
struct DocFrequency {
    std::size_t scope_count = 1;              // number of chapters
    std::map<Term, std::size_t> chapters_with; // term -> chapters containing it
};

DocFrequency compute_doc_frequency(const std::vector<Document>& chapters, const Lexicon& lex,
                                   std::size_t window_radius);

/// Counts canonical, sense-disambiguated terms over the documents.
/// Stopwords contribute to total_tokens only. Throws EmptyScope when the
/// documents contain no tokens at all.
FrequencyTable build_frequency_table(const std::vector<Document>& docs, const Lexicon& lex,
                                     std::size_t window_radius, std::string scope_id);

/// Fits the rank-frequency relation on the table's own rank fields.
/// Tables with fewer than 2 entries yield slope 0, r_squared 0.
ZipfFit fit_zipf(const FrequencyTable& table);

/// Luhn-style mid-band selection: drops the shortest head covering
/// upper_cut of the token mass and the shortest tail covering lower_cut,
/// scores survivors freq * log2(1 + N/df) (plain freq when df is null),
/// keeps the top max_keywords. Throws BandEmpty when nothing survives.
KeywordSet select_keywords(const FrequencyTable& table, const AnalysisConfig& cfg,
                           const DocFrequency* df = nullptr);

/// Degenerate keyword set for short texts (aims, messages): every
/// non-stopword term counts, scored by its occurrence count. No Zipf band.
KeywordSet keyword_set_from_all_terms(const std::vector<Document>& docs, const Lexicon& lex,
                                      std::size_t window_radius, std::string scope_id);

} // namespace semparse

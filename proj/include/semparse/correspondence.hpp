// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "semparse/corpus.hpp"
#include "semparse/keywords.hpp"
#include "semparse/semcut.hpp"

#include <map>
#include <string>
#include <vector>

namespace semparse {

/// Coefficient of coincidence between two analyzed texts: directed
/// keyword recall plus mean matched-cut similarity, averaged.
struct CorrespondenceScore {
    double keyword_overlap = 0.0;
    double cut_coincidence = 0.0;
    double combined = 0.0;
};

struct AimResult {
    std::string aim_id;
    std::vector<Term> matched_keywords;
    CorrespondenceScore score;
    bool pass = false;
};

struct AimsReport {
    std::vector<AimResult> aims;
    std::vector<std::string> uncovered_aims;
};

struct KeywordCoverage {
    Term term;
    std::size_t question_count = 0;
    bool deficient = false;
};

struct OffKeyItem {
    std::string item_id;
    double best_overlap = 0.0;
};

struct TestCoverageReport {
    std::string chapter_id;
    std::vector<KeywordCoverage> keywords; // keyword-set order
    std::vector<OffKeyItem> off_key_items; // bank order
};

enum class RichnessLabel { off_topic, on_topic, rich };

std::string_view richness_label_name(RichnessLabel label);

struct MessageScore {
    std::string message_id;
    std::string lesson_id;
    double topic_coverage = 0.0;
    double cut_coincidence = 0.0;
    RichnessLabel label = RichnessLabel::off_topic;
};

struct RichnessReport {
    std::vector<MessageScore> messages; // sorted by message_id
    std::vector<std::string> skipped_unknown_lesson;
};

/// Keyword set plus cuts for one analyzed scope.
struct ScopeProfile {
    KeywordSet keys;
    std::vector<SemanticCut> cuts;
};

/// keyword_overlap = |source ∩ target| / |source| (0 for an empty
/// source); cut_coincidence = mean cut similarity over matched terms
/// (0 with no matches). Throws LexiconMismatch when the two sides carry
/// different lexicon fingerprints.
CorrespondenceScore coincidence(const KeywordSet& source_keys,
                                const std::vector<SemanticCut>& source_cuts,
                                const KeywordSet& target_keys,
                                const std::vector<SemanticCut>& target_cuts);

/// Scores every aim against the selected course keywords. Aims bypass
/// Zipf selection: each non-stopword term of an aim counts. Throws
/// NoAims when the list is empty.
AimsReport check_aims(const std::vector<Document>& aims, const std::vector<Document>& chapters,
                      const Lexicon& lex, const AnalysisConfig& cfg);

/// Question counts per chapter keyword plus items nearly disjoint from
/// the chapter's keyword set. Throws EmptyBank.
TestCoverageReport check_tests(const std::vector<TestItem>& bank,
                               const KeywordSet& chapter_keys, const Lexicon& lex,
                               const AnalysisConfig& cfg);

/// Scores each message against its lesson scope ("course" or a chapter
/// id). Messages naming an unknown lesson are skipped and reported.
RichnessReport score_messages(const std::vector<Message>& messages,
                              const std::map<std::string, ScopeProfile>& scopes,
                              const Lexicon& lex, const AnalysisConfig& cfg);

} // namespace semparse

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace semparse {

/// Scope id naming the whole course (as opposed to a single chapter).
inline constexpr std::string_view kCourseScope = "course";

/// Normalized token. `offset` is the code-point position of the token in
/// the document source; `raw_begin`/`raw_end` delimit its bytes within the
/// owning sentence's raw text.
struct Token {
    std::string text;
    std::size_t offset = 0;
    std::size_t raw_begin = 0;
    std::size_t raw_end = 0;
};

/// One sentence: the verbatim source slice plus its surviving tokens.
/// Sentences are the hard boundary for all co-occurrence windows.
struct Sentence {
    std::string raw;
    std::vector<Token> tokens;
};

struct Document {
    std::string doc_id;
    std::string title;
    std::vector<Sentence> sentences;
};

struct TestItem {
    std::string item_id;
    Document stem;
    std::vector<Document> options;
};

enum class Channel { forum, chat, email };

std::string_view channel_name(Channel c);

struct Message {
    std::string message_id;
    Channel channel = Channel::forum;
    std::string lesson_id; // chapter id or "course"
    Document body;
};

/// Every tunable the analysis leaves open. Values come from built-in
/// defaults, then the manifest config block, then CLI flags.
struct AnalysisConfig {
    std::size_t window_radius = 5;
    std::size_t min_token_len = 2;
    double upper_cut = 0.10;
    double lower_cut = 0.05;
    std::size_t max_keywords_chapter = 30;
    std::size_t max_keywords_course = 100;
    double cluster_threshold = 0.30;
    double aims_pass_threshold = 0.30;
    double on_topic_threshold = 0.15;
    double rich_threshold = 0.40;
    std::size_t min_questions_per_keyword = 1;
    double off_key_threshold = 0.10;
    std::vector<std::string> glossary_markers = {"is", "are", "means", "called",
                                                 "\xE2\x80\x94"}; // em dash

    /// Throws Error(config_invalid) when any invariant is violated
    /// (fractions out of range, upper_cut + lower_cut >= 1, ...).
    void validate() const;

    std::size_t max_keywords_for(std::string_view scope_id) const {
        return scope_id == kCourseScope ? max_keywords_course : max_keywords_chapter;
    }
};

/// Per-field config overrides (CLI flags). Applied on top of the manifest
/// config block before tokenization, so min_token_len overrides take
/// effect on the loaded documents.
struct ConfigOverrides {
    std::optional<std::size_t> window_radius;
    std::optional<std::size_t> min_token_len;
    std::optional<double> upper_cut;
    std::optional<double> lower_cut;
    std::optional<std::size_t> max_keywords; // sets both chapter and course caps
    std::optional<double> cluster_threshold;
    std::optional<double> aims_pass_threshold;
    std::optional<double> on_topic_threshold;
    std::optional<double> rich_threshold;
    std::optional<std::size_t> min_questions_per_keyword;
    std::optional<double> off_key_threshold;
    std::optional<std::vector<std::string>> glossary_markers;

    void apply(AnalysisConfig& cfg) const;
};

struct CourseBundle {
    std::string course_id;
    std::vector<Document> chapters;
    std::vector<Document> aims;
    std::map<std::string, std::vector<TestItem>> test_banks; // chapter_id -> items
    std::vector<Message> messages;
    AnalysisConfig config;
    std::string fingerprint; // content hash over manifest + referenced files

    const Document* find_chapter(std::string_view chapter_id) const;
};

/// Splits text into sentences on '.', '!', '?' followed by whitespace or
/// end of input, then into tokens: maximal runs of letters/digits/
/// apostrophes/hyphens, case-folded, with outer apostrophes/hyphens
/// trimmed. Tokens shorter than min_token_len and digits-only tokens are
/// dropped; sentences left with no tokens are dropped.
std::vector<Sentence> tokenize(std::string_view text, std::size_t min_token_len);

/// Loads a course bundle from a directory containing `course.json`.
/// Missing optional sections (aims, tests, messages) yield empty
/// collections. Throws ManifestMissing, ManifestInvalid (with a JSON
/// pointer), DanglingReference, InvalidEncoding.
CourseBundle load_bundle(const std::filesystem::path& root,
                         const ConfigOverrides& overrides = {});

} // namespace semparse

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "semparse/correspondence.hpp"
#include "semparse/corpus.hpp"
#include "semparse/keywords.hpp"
#include "semparse/lexicon.hpp"
#include "semparse/semcut.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <string>
#include <string_view>

namespace semparse {

/// Everything computed for one scope (a chapter or the whole course).
struct ScopeAnalysis {
    FrequencyTable table;
    ZipfFit zipf;
    KeywordSet keys;
    std::vector<SemanticCut> cuts;
    ClusterSet clusters;
    Glossary glossary;
};

/// Runs the pipeline over one bundle + lexicon pair, caching per-scope
/// results. All outputs are deterministic functions of the inputs.
class Analyzer {
public:
    Analyzer(CourseBundle bundle, Lexicon lexicon);

    const CourseBundle& bundle() const { return bundle_; }
    const Lexicon& lexicon() const { return lexicon_; }
    const AnalysisConfig& config() const { return bundle_.config; }

    /// scope_id is a chapter id or "course". Throws UnknownScope.
    const ScopeAnalysis& scope(std::string_view scope_id);

    AimsReport aims();
    TestCoverageReport tests(std::string_view chapter_id);
    RichnessReport messages();

    // JSON payloads (schema course-semparse/1, floats at 6 decimals)
    nlohmann::json keywords_payload(std::string_view scope_id);
    nlohmann::json glossary_payload(std::string_view scope_id);
    nlohmann::json aims_payload();
    nlohmann::json tests_payload(std::string_view chapter_id);
    nlohmann::json messages_payload();
    nlohmann::json run_payload(); // the full `analyze` document

private:
    nlohmann::json envelope() const;

    CourseBundle bundle_;
    Lexicon lexicon_;
    std::map<std::string, ScopeAnalysis, std::less<>> scopes_;
};

/// Round-half-even to 6 decimal digits; applied to every float that
/// reaches a report.
double round6(double value);

nlohmann::json config_to_json(const AnalysisConfig& cfg);

/// Renders a glossary payload as plain text (derived from the JSON,
/// never computed separately).
std::string render_glossary_text(const nlohmann::json& payload);

/// Serializes with sorted keys and a trailing newline.
std::string dump_report(const nlohmann::json& payload);

/// Write-temp-then-rename; creates parent directories.
void atomic_write_file(const std::filesystem::path& path, std::string_view content);

} // namespace semparse

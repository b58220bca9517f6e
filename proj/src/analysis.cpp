// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/analysis.hpp"

#include "semparse/errors.hpp"
#include "semparse/version.hpp"

#include <cfenv>
#include <cmath>
#include <fstream>
#include <set>

namespace semparse {

using nlohmann::json;

double round6(double value) {
    return std::nearbyint(value * 1e6) / 1e6;
}

Analyzer::Analyzer(CourseBundle bundle, Lexicon lexicon)
    : bundle_(std::move(bundle)), lexicon_(std::move(lexicon)) {
    bundle_.config.validate();
}

const ScopeAnalysis& Analyzer::scope(std::string_view scope_id) {
    if (auto it = scopes_.find(scope_id); it != scopes_.end())
        return it->second;

    const AnalysisConfig& cfg = bundle_.config;
    std::vector<Document> docs;
    if (scope_id == kCourseScope) {
        docs = bundle_.chapters;
    } else if (const Document* ch = bundle_.find_chapter(scope_id)) {
        docs = {*ch};
    } else {
        throw Error(ErrorKind::unknown_scope,
                    "unknown scope '" + std::string(scope_id) + "' (chapter id or 'course')");
    }

    ScopeAnalysis analysis;
    analysis.table =
        build_frequency_table(docs, lexicon_, cfg.window_radius, std::string(scope_id));
    analysis.zipf = fit_zipf(analysis.table);
    if (scope_id == kCourseScope) {
        const auto df = compute_doc_frequency(bundle_.chapters, lexicon_, cfg.window_radius);
        analysis.keys = select_keywords(analysis.table, cfg, &df);
    } else {
        analysis.keys = select_keywords(analysis.table, cfg);
    }
    analysis.cuts = build_cuts(docs, analysis.keys, lexicon_, cfg.window_radius);
    analysis.clusters = cluster_keywords(analysis.cuts, cfg.cluster_threshold);
    analysis.glossary = build_glossary(docs, analysis.keys, analysis.cuts, lexicon_, cfg);

    auto [it, inserted] = scopes_.emplace(std::string(scope_id), std::move(analysis));
    return it->second;
}

AimsReport Analyzer::aims() {
    return check_aims(bundle_.aims, bundle_.chapters, lexicon_, bundle_.config);
}

TestCoverageReport Analyzer::tests(std::string_view chapter_id) {
    if (!bundle_.find_chapter(chapter_id))
        throw Error(ErrorKind::unknown_scope,
                    "unknown chapter '" + std::string(chapter_id) + "'");
    auto it = bundle_.test_banks.find(std::string(chapter_id));
    if (it == bundle_.test_banks.end())
        throw Error(ErrorKind::empty_bank,
                    "no test bank for chapter '" + std::string(chapter_id) + "'");
    return check_tests(it->second, scope(chapter_id).keys, lexicon_, bundle_.config);
}

RichnessReport Analyzer::messages() {
    std::map<std::string, ScopeProfile> profiles;
    for (const auto& msg : bundle_.messages) {
        if (profiles.count(msg.lesson_id))
            continue;
        if (msg.lesson_id == kCourseScope || bundle_.find_chapter(msg.lesson_id)) {
            const ScopeAnalysis& sa = scope(msg.lesson_id);
            profiles.emplace(msg.lesson_id, ScopeProfile{sa.keys, sa.cuts});
        }
    }
    return score_messages(bundle_.messages, profiles, lexicon_, bundle_.config);
}

json Analyzer::envelope() const {
    json j;
    j["schema"] = kSchemaVersion;
    j["tool_version"] = kToolVersion;
    j["course_id"] = bundle_.course_id;
    j["config_used"] = config_to_json(bundle_.config);
    return j;
}

namespace {

json keywordset_to_json(const ScopeAnalysis& sa) {
    json j;
    j["scope"] = sa.keys.scope_id;
    j["total_tokens"] = sa.table.total_tokens;
    j["distinct_terms"] = sa.table.entries.size();
    j["band"] = {{"low_rank", sa.keys.band.low_rank}, {"high_rank", sa.keys.band.high_rank}};
    json kws = json::array();
    for (const auto& k : sa.keys.keywords)
        kws.push_back({{"term", k.term}, {"score", round6(k.score)}});
    j["keywords"] = std::move(kws);
    j["zipf"] = {{"slope", round6(sa.zipf.slope)},
                 {"intercept", round6(sa.zipf.intercept)},
                 {"r_squared", round6(sa.zipf.r_squared)}};
    json clusters = json::array();
    for (const auto& c : sa.clusters.clusters)
        clusters.push_back({{"cluster_id", c.cluster_id}, {"members", c.members}});
    j["clusters"] = std::move(clusters);
    j["cluster_threshold"] = round6(sa.clusters.threshold_used);
    return j;
}

json glossary_to_json(const ScopeAnalysis& sa) {
    json j;
    j["scope"] = sa.keys.scope_id;
    json entries = json::array();
    for (const auto& e : sa.glossary.entries)
        entries.push_back(
            {{"term", e.term},
             {"definition", e.definition},
             {"source", e.source == GlossaryEntry::Source::definitional_sentence
                            ? "definitional_sentence"
                            : "context_gloss"},
             {"evidence_doc", e.evidence_doc}});
    j["entries"] = std::move(entries);
    j["dropped"] = sa.glossary.dropped;
    return j;
}

json score_to_json(const CorrespondenceScore& s) {
    return {{"keyword_overlap", round6(s.keyword_overlap)},
            {"cut_coincidence", round6(s.cut_coincidence)},
            {"combined", round6(s.combined)}};
}

json aims_to_json(const AimsReport& report) {
    json j;
    json rows = json::array();
    for (const auto& a : report.aims)
        rows.push_back({{"aim_id", a.aim_id},
                        {"matched_keywords", a.matched_keywords},
                        {"score", score_to_json(a.score)},
                        {"verdict", a.pass ? "pass" : "fail"}});
    j["aims"] = std::move(rows);
    j["uncovered_aims"] = report.uncovered_aims;
    return j;
}

json tests_to_json(const TestCoverageReport& report) {
    json j;
    j["chapter_id"] = report.chapter_id;
    json rows = json::array();
    for (const auto& k : report.keywords)
        rows.push_back({{"term", k.term},
                        {"question_count", k.question_count},
                        {"deficient", k.deficient}});
    j["keywords"] = std::move(rows);
    json off = json::array();
    for (const auto& i : report.off_key_items)
        off.push_back({{"item_id", i.item_id}, {"best_overlap", round6(i.best_overlap)}});
    j["off_key_items"] = std::move(off);
    return j;
}

json messages_to_json(const RichnessReport& report) {
    json j;
    json rows = json::array();
    for (const auto& m : report.messages)
        rows.push_back({{"message_id", m.message_id},
                        {"lesson_id", m.lesson_id},
                        {"topic_coverage", round6(m.topic_coverage)},
                        {"cut_coincidence", round6(m.cut_coincidence)},
                        {"label", std::string(richness_label_name(m.label))}});
    j["messages"] = std::move(rows);
    j["skipped_unknown_lesson"] = report.skipped_unknown_lesson;
    return j;
}

} // namespace

json Analyzer::keywords_payload(std::string_view scope_id) {
    json j = envelope();
    j.update(keywordset_to_json(scope(scope_id)));
    return j;
}

json Analyzer::glossary_payload(std::string_view scope_id) {
    json j = envelope();
    j.update(glossary_to_json(scope(scope_id)));
    return j;
}

json Analyzer::aims_payload() {
    json j = envelope();
    j.update(aims_to_json(aims()));
    return j;
}

json Analyzer::tests_payload(std::string_view chapter_id) {
    json j = envelope();
    j.update(tests_to_json(tests(chapter_id)));
    return j;
}

json Analyzer::messages_payload() {
    json j = envelope();
    j.update(messages_to_json(messages()));
    return j;
}

json Analyzer::run_payload() {
    json j = envelope();
    j["bundle_fingerprint"] = bundle_.fingerprint;
    j["lexicon_fingerprint"] = lexicon_.fingerprint;

    json keywords;
    json glossary;
    keywords["course"] = keywordset_to_json(scope(kCourseScope));
    glossary["course"] = glossary_to_json(scope(kCourseScope));
    json kw_chapters = json::object();
    json gl_chapters = json::object();
    for (const auto& ch : bundle_.chapters) {
        kw_chapters[ch.doc_id] = keywordset_to_json(scope(ch.doc_id));
        gl_chapters[ch.doc_id] = glossary_to_json(scope(ch.doc_id));
    }
    keywords["chapters"] = std::move(kw_chapters);
    glossary["chapters"] = std::move(gl_chapters);
    j["keywords"] = std::move(keywords);
    j["glossary"] = std::move(glossary);

    if (bundle_.aims.empty()) {
        j["aims"] = {{"skipped", "NoAims"}};
    } else {
        j["aims"] = aims_to_json(aims());
    }

    if (bundle_.test_banks.empty()) {
        j["tests"] = {{"skipped", "EmptyBank"}};
    } else {
        json banks = json::object();
        for (const auto& [chapter_id, bank] : bundle_.test_banks)
            banks[chapter_id] = tests_to_json(tests(chapter_id));
        j["tests"] = {{"chapters", std::move(banks)}};
    }

    if (bundle_.messages.empty()) {
        j["messages"] = {{"skipped", "NoMessages"}};
    } else {
        j["messages"] = messages_to_json(messages());
    }
    return j;
}

json config_to_json(const AnalysisConfig& cfg) {
    json j;
    j["window_radius"] = cfg.window_radius;
    j["min_token_len"] = cfg.min_token_len;
    j["upper_cut"] = round6(cfg.upper_cut);
    j["lower_cut"] = round6(cfg.lower_cut);
    j["max_keywords"] = {{"chapter", cfg.max_keywords_chapter},
                         {"course", cfg.max_keywords_course}};
    j["cluster_threshold"] = round6(cfg.cluster_threshold);
    j["aims_pass_threshold"] = round6(cfg.aims_pass_threshold);
    j["richness_thresholds"] = {{"on_topic", round6(cfg.on_topic_threshold)},
                                {"rich", round6(cfg.rich_threshold)}};
    j["min_questions_per_keyword"] = cfg.min_questions_per_keyword;
    j["off_key_threshold"] = round6(cfg.off_key_threshold);
    j["glossary_markers"] = cfg.glossary_markers;
    return j;
}

std::string render_glossary_text(const json& payload) {
    std::string out;
    out += "Glossary (scope: " + payload.at("scope").get<std::string>() + ")\n";
    for (const auto& e : payload.at("entries")) {
        out += "\n" + e.at("term").get<std::string>() + "\n";
        out += "    " + e.at("definition").get<std::string>();
        out += "  [" + e.at("source").get<std::string>() + ", " +
               e.at("evidence_doc").get<std::string>() + "]\n";
    }
    const auto& dropped = payload.at("dropped");
    if (!dropped.empty()) {
        out += "\nNo definition found for:";
        for (const auto& t : dropped)
            out += " " + t.get<std::string>();
        out += "\n";
    }
    return out;
}

std::string dump_report(const json& payload) {
    return payload.dump(2) + "\n";
}

void atomic_write_file(const std::filesystem::path& path, std::string_view content) {
    const auto parent = path.parent_path();
    std::error_code ec;
    if (!parent.empty())
        std::filesystem::create_directories(parent, ec);
    const auto tmp = path.string() + ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out)
            throw Error(ErrorKind::io_error, "cannot write " + tmp);
        out.write(content.data(), static_cast<std::streamsize>(content.size()));
        if (!out)
            throw Error(ErrorKind::io_error, "short write to " + tmp);
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec)
        throw Error(ErrorKind::io_error,
                    "cannot rename " + tmp + " to " + path.string() + ": " + ec.message());
}

} // namespace semparse

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/correspondence.hpp"

#include "semparse/errors.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

namespace semparse {

std::string_view richness_label_name(RichnessLabel label) {
    switch (label) {
    case RichnessLabel::off_topic: return "off_topic";
    case RichnessLabel::on_topic: return "on_topic";
    case RichnessLabel::rich: return "rich";
    }
    return "off_topic";
}

namespace {

std::set<Term> keyword_terms(const KeywordSet& keys) {
    std::set<Term> terms;
    for (const auto& k : keys.keywords)
        terms.insert(k.term);
    return terms;
}

const SemanticCut* find_cut(const std::vector<SemanticCut>& cuts, const Term& term) {
    for (const auto& cut : cuts)
        if (cut.keyword == term)
            return &cut;
    return nullptr;
}

} // namespace

CorrespondenceScore coincidence(const KeywordSet& source_keys,
                                const std::vector<SemanticCut>& source_cuts,
                                const KeywordSet& target_keys,
                                const std::vector<SemanticCut>& target_cuts) {
    if (source_keys.lexicon_fingerprint != target_keys.lexicon_fingerprint)
        throw Error(ErrorKind::lexicon_mismatch,
                    "source and target were analyzed with different lexicons");

    const auto source = keyword_terms(source_keys);
    const auto target = keyword_terms(target_keys);
    std::vector<Term> matched;
    for (const auto& t : source)
        if (target.count(t))
            matched.push_back(t);

    CorrespondenceScore score;
    if (!source.empty())
        score.keyword_overlap =
            static_cast<double>(matched.size()) / static_cast<double>(source.size());

    if (!matched.empty()) {
        const SemanticCut empty{};
        double sum = 0;
        for (const auto& t : matched) {
            const SemanticCut* a = find_cut(source_cuts, t);
            const SemanticCut* b = find_cut(target_cuts, t);
            sum += cut_similarity(a ? *a : empty, b ? *b : empty);
        }
        score.cut_coincidence = sum / static_cast<double>(matched.size());
    }
    score.combined = (score.keyword_overlap + score.cut_coincidence) / 2.0;
    return score;
}

AimsReport check_aims(const std::vector<Document>& aims, const std::vector<Document>& chapters,
                      const Lexicon& lex, const AnalysisConfig& cfg) {
    if (aims.empty())
        throw Error(ErrorKind::no_aims, "bundle declares no aims");

    const auto table = build_frequency_table(chapters, lex, cfg.window_radius,
                                             std::string(kCourseScope));
    const auto df = compute_doc_frequency(chapters, lex, cfg.window_radius);
    const auto material_keys = select_keywords(table, cfg, &df);
    const auto material_cuts = build_cuts(chapters, material_keys, lex, cfg.window_radius);
    const auto material_terms = keyword_terms(material_keys);

    AimsReport report;
    for (const auto& aim : aims) {
        const auto aim_keys =
            keyword_set_from_all_terms({aim}, lex, cfg.window_radius, aim.doc_id);
        const auto aim_cuts = build_cuts({aim}, aim_keys, lex, cfg.window_radius);

        AimResult result;
        result.aim_id = aim.doc_id;
        result.score = coincidence(aim_keys, aim_cuts, material_keys, material_cuts);
        for (const auto& k : aim_keys.keywords)
            if (material_terms.count(k.term))
                result.matched_keywords.push_back(k.term);
        std::sort(result.matched_keywords.begin(), result.matched_keywords.end());
        result.pass = result.score.combined >= cfg.aims_pass_threshold;
        if (!result.pass)
            report.uncovered_aims.push_back(result.aim_id);
        report.aims.push_back(std::move(result));
    }
    return report;
}

TestCoverageReport check_tests(const std::vector<TestItem>& bank,
                               const KeywordSet& chapter_keys, const Lexicon& lex,
                               const AnalysisConfig& cfg) {
    if (bank.empty())
        throw Error(ErrorKind::empty_bank, "test bank contains no items");

    const auto key_terms = keyword_terms(chapter_keys);

    TestCoverageReport report;
    report.chapter_id = chapter_keys.scope_id;

    std::unordered_map<Term, std::size_t> question_count;
    for (const auto& item : bank) {
        std::vector<Document> item_docs{item.stem};
        item_docs.insert(item_docs.end(), item.options.begin(), item.options.end());
        const auto item_terms = term_set(item_docs, lex, cfg.window_radius);

        std::size_t hits = 0;
        for (const auto& t : item_terms)
            if (key_terms.count(t)) {
                ++hits;
                ++question_count[t];
            }
        const double overlap =
            item_terms.empty()
                ? 0.0
                : static_cast<double>(hits) / static_cast<double>(item_terms.size());
        if (overlap < cfg.off_key_threshold)
            report.off_key_items.push_back({item.item_id, overlap});
    }

    for (const auto& k : chapter_keys.keywords) {
        std::size_t count = 0;
        if (auto it = question_count.find(k.term); it != question_count.end())
            count = it->second;
        report.keywords.push_back({k.term, count, count < cfg.min_questions_per_keyword});
    }
    return report;
}

RichnessReport score_messages(const std::vector<Message>& messages,
                              const std::map<std::string, ScopeProfile>& scopes,
                              const Lexicon& lex, const AnalysisConfig& cfg) {
    if (messages.empty())
        throw Error(ErrorKind::no_messages, "bundle declares no messages");

    RichnessReport report;
    for (const auto& msg : messages) {
        auto scope_it = scopes.find(msg.lesson_id);
        if (scope_it == scopes.end()) {
            report.skipped_unknown_lesson.push_back(msg.message_id);
            continue;
        }
        const ScopeProfile& scope = scope_it->second;

        const auto msg_keys =
            keyword_set_from_all_terms({msg.body}, lex, cfg.window_radius, msg.message_id);
        const auto msg_cuts = build_cuts({msg.body}, msg_keys, lex, cfg.window_radius);
        const auto msg_terms = keyword_terms(msg_keys);

        MessageScore row;
        row.message_id = msg.message_id;
        row.lesson_id = msg.lesson_id;

        const auto lesson_terms = keyword_terms(scope.keys);
        if (!lesson_terms.empty()) {
            std::size_t present = 0;
            for (const auto& t : lesson_terms)
                if (msg_terms.count(t))
                    ++present;
            row.topic_coverage =
                static_cast<double>(present) / static_cast<double>(lesson_terms.size());
        }
        row.cut_coincidence =
            coincidence(msg_keys, msg_cuts, scope.keys, scope.cuts).cut_coincidence;
        row.label = row.topic_coverage >= cfg.rich_threshold ? RichnessLabel::rich
                    : row.topic_coverage >= cfg.on_topic_threshold
                        ? RichnessLabel::on_topic
                        : RichnessLabel::off_topic;
        report.messages.push_back(std::move(row));
    }
    std::sort(report.messages.begin(), report.messages.end(),
              [](const MessageScore& a, const MessageScore& b) {
                  return a.message_id < b.message_id;
              });
    std::sort(report.skipped_unknown_lesson.begin(), report.skipped_unknown_lesson.end());
    return report;
}

} // namespace semparse

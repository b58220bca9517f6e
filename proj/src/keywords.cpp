// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/keywords.hpp"

#include "semparse/errors.hpp"

#include <algorithm>
#include <cmath>

namespace semparse {

namespace {

void sort_scored(std::vector<ScoredKeyword>& keywords) {
    std::stable_sort(keywords.begin(), keywords.end(),
                     [](const ScoredKeyword& a, const ScoredKeyword& b) {
                         if (a.score != b.score)
                             return a.score > b.score;
                         return a.term < b.term;
                     });
}

std::vector<FreqEntry> rank_counts(const std::map<Term, std::uint64_t>& counts) {
    std::vector<FreqEntry> entries;
    entries.reserve(counts.size());
    for (const auto& [term, freq] : counts)
        entries.push_back({term, freq, 0});
    std::sort(entries.begin(), entries.end(), [](const FreqEntry& a, const FreqEntry& b) {
        if (a.freq != b.freq)
            return a.freq > b.freq;
        return a.term < b.term;
    });
    for (std::size_t i = 0; i < entries.size(); ++i)
        entries[i].rank = i + 1;
    return entries;
}

} // namespace

bool KeywordSet::contains(const Term& term) const {
    for (const auto& k : keywords)
        if (k.term == term)
            return true;
    return false;
}

DocFrequency compute_doc_frequency(const std::vector<Document>& chapters, const Lexicon& lex,
                                   std::size_t window_radius) {
    DocFrequency df;
    df.scope_count = chapters.size();
    for (const auto& chapter : chapters)
        for (const auto& term : term_set({chapter}, lex, window_radius))
            ++df.chapters_with[term];
    return df;
}

FrequencyTable build_frequency_table(const std::vector<Document>& docs, const Lexicon& lex,
                                     std::size_t window_radius, std::string scope_id) {
    FrequencyTable table;
    table.scope_id = std::move(scope_id);
    table.lexicon_fingerprint = lex.fingerprint;

    std::map<Term, std::uint64_t> counts;
    for (const auto& doc : docs) {
        for (const auto& sentence : doc.sentences) {
            table.total_tokens += sentence.tokens.size();
            for (const auto& term : resolve_terms(sentence, lex, window_radius))
                if (term)
                    ++counts[*term];
        }
    }
    if (table.total_tokens == 0)
        throw Error(ErrorKind::empty_scope,
                    "scope '" + table.scope_id + "' contains no tokens");
    table.entries = rank_counts(counts);
    return table;
}

ZipfFit fit_zipf(const FrequencyTable& table) {
    ZipfFit fit;
    const auto& entries = table.entries;
    if (entries.size() < 2)
        return fit;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double n = static_cast<double>(entries.size());
    for (const auto& e : entries) {
        const double x = std::log2(static_cast<double>(e.rank));
        const double y = std::log2(static_cast<double>(e.freq));
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
    }
    const double denom = n * sxx - sx * sx;
    if (denom == 0.0)
        return fit;
    fit.slope = (n * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / n;

    double ss_res = 0, ss_tot = 0;
    const double mean_y = sy / n;
    for (const auto& e : entries) {
        const double x = std::log2(static_cast<double>(e.rank));
        const double y = std::log2(static_cast<double>(e.freq));
        const double r = y - (fit.slope * x + fit.intercept);
        ss_res += r * r;
        ss_tot += (y - mean_y) * (y - mean_y);
    }
    // flat tables fit exactly; report a perfect score rather than 0/0
    fit.r_squared = ss_tot > 0.0 ? 1.0 - ss_res / ss_tot : 1.0;
    if (fit.r_squared < 0.0)
        fit.r_squared = 0.0;
    if (fit.r_squared > 1.0)
        fit.r_squared = 1.0;
    return fit;
}

KeywordSet select_keywords(const FrequencyTable& table, const AnalysisConfig& cfg,
                           const DocFrequency* df) {
    const auto& entries = table.entries;
    const std::size_t n = entries.size();
    if (n == 0)
        throw Error(ErrorKind::band_empty,
                    "scope '" + table.scope_id + "' has no non-stopword terms");

    double mass = 0;
    for (const auto& e : entries)
        mass += static_cast<double>(e.freq);

    // shortest head covering upper_cut of the mass, shortest tail covering
    // lower_cut; the crossing term is dropped with its side
    std::size_t head = 0;
    if (cfg.upper_cut > 0.0) {
        const double target = cfg.upper_cut * mass;
        double cum = 0;
        while (head < n && cum < target)
            cum += static_cast<double>(entries[head++].freq);
    }
    std::size_t tail = 0;
    if (cfg.lower_cut > 0.0) {
        const double target = cfg.lower_cut * mass;
        double cum = 0;
        while (tail < n && cum < target)
            cum += static_cast<double>(entries[n - 1 - tail++].freq);
    }
    if (head + tail >= n)
        throw Error(ErrorKind::band_empty,
                    "frequency cuts eliminate every term of scope '" + table.scope_id + "'");

    KeywordSet set;
    set.scope_id = table.scope_id;
    set.lexicon_fingerprint = table.lexicon_fingerprint;
    set.band = {entries[head].rank, entries[n - 1 - tail].rank};

    for (std::size_t i = head; i < n - tail; ++i) {
        const auto& e = entries[i];
        double score = static_cast<double>(e.freq);
        if (df) {
            std::size_t in_chapters = 1;
            if (auto it = df->chapters_with.find(e.term); it != df->chapters_with.end())
                in_chapters = it->second;
            score *= std::log2(1.0 + static_cast<double>(df->scope_count) /
                                         static_cast<double>(in_chapters));
        }
        set.keywords.push_back({e.term, score});
    }
    sort_scored(set.keywords);
    const std::size_t cap = cfg.max_keywords_for(set.scope_id);
    if (set.keywords.size() > cap)
        set.keywords.resize(cap);
    return set;
}

KeywordSet keyword_set_from_all_terms(const std::vector<Document>& docs, const Lexicon& lex,
                                      std::size_t window_radius, std::string scope_id) {
    std::map<Term, std::uint64_t> counts;
    for (const auto& doc : docs)
        for (const auto& sentence : doc.sentences)
            for (const auto& term : resolve_terms(sentence, lex, window_radius))
                if (term)
                    ++counts[*term];

    KeywordSet set;
    set.scope_id = std::move(scope_id);
    set.lexicon_fingerprint = lex.fingerprint;
    for (const auto& [term, freq] : counts)
        set.keywords.push_back({term, static_cast<double>(freq)});
    sort_scored(set.keywords);
    set.band = counts.empty() ? RankBand{0, 0} : RankBand{1, counts.size()};
    return set;
}

} // namespace semparse

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/semcut.hpp"

#include "semparse/text.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

namespace semparse {

std::vector<SemanticCut> build_cuts(const std::vector<Document>& docs,
                                    const KeywordSet& keyset, const Lexicon& lex,
                                    std::size_t window_radius) {
    std::vector<SemanticCut> cuts;
    cuts.reserve(keyset.keywords.size());
    std::unordered_map<Term, std::size_t> index;
    for (const auto& k : keyset.keywords) {
        index.emplace(k.term, cuts.size());
        cuts.push_back({k.term, {}, keyset.scope_id});
    }

    for (const auto& doc : docs) {
        for (const auto& sentence : doc.sentences) {
            const auto resolved = resolve_terms(sentence, lex, window_radius);
            const std::size_t n = resolved.size();
            for (std::size_t i = 0; i < n; ++i) {
                if (!resolved[i])
                    continue;
                auto it = index.find(*resolved[i]);
                if (it == index.end())
                    continue;
                SemanticCut& cut = cuts[it->second];
                const std::size_t lo = i > window_radius ? i - window_radius : 0;
                const std::size_t hi = std::min(n, i + window_radius + 1);
                for (std::size_t j = lo; j < hi; ++j) {
                    if (j == i || !resolved[j] || *resolved[j] == cut.keyword)
                        continue;
                    ++cut.satellites[*resolved[j]];
                }
            }
        }
    }
    return cuts;
}

double cut_similarity(const SemanticCut& a, const SemanticCut& b) {
    std::uint64_t sum_min = 0, sum_max = 0;
    auto ia = a.satellites.begin();
    auto ib = b.satellites.begin();
    while (ia != a.satellites.end() || ib != b.satellites.end()) {
        if (ib == b.satellites.end() || (ia != a.satellites.end() && ia->first < ib->first)) {
            sum_max += ia->second;
            ++ia;
        } else if (ia == a.satellites.end() || ib->first < ia->first) {
            sum_max += ib->second;
            ++ib;
        } else {
            sum_min += std::min(ia->second, ib->second);
            sum_max += std::max(ia->second, ib->second);
            ++ia;
            ++ib;
        }
    }
    if (sum_max == 0)
        return 0.0;
    return static_cast<double>(sum_min) / static_cast<double>(sum_max);
}

ClusterSet cluster_keywords(const std::vector<SemanticCut>& cuts, double threshold) {
    const std::size_t n = cuts.size();
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    auto find = [&](std::size_t x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    };

    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (cut_similarity(cuts[i], cuts[j]) >= threshold)
                parent[find(i)] = find(j);

    std::map<std::size_t, std::vector<Term>> groups;
    for (std::size_t i = 0; i < n; ++i)
        groups[find(i)].push_back(cuts[i].keyword);

    ClusterSet result;
    result.scope_id = cuts.empty() ? std::string{} : cuts.front().scope_id;
    result.threshold_used = threshold;
    for (auto& [root, members] : groups) {
        std::sort(members.begin(), members.end());
        result.clusters.push_back({members.front(), std::move(members)});
    }
    std::sort(result.clusters.begin(), result.clusters.end(),
              [](const Cluster& a, const Cluster& b) { return a.cluster_id < b.cluster_id; });
    return result;
}

namespace {

bool is_word_marker(const std::string& marker) {
    for (const auto& cp : decode_utf8(marker))
        if (!is_word_char(cp.value))
            return false;
    return true;
}

} // namespace

Glossary build_glossary(const std::vector<Document>& docs, const KeywordSet& keyset,
                        const std::vector<SemanticCut>& cuts, const Lexicon& lex,
                        const AnalysisConfig& cfg) {
    std::vector<std::string> word_markers, raw_markers;
    for (const auto& m : cfg.glossary_markers) {
        const std::string folded = fold_utf8(m);
        if (is_word_marker(folded))
            word_markers.push_back(folded);
        else
            raw_markers.push_back(folded);
    }

    std::unordered_map<Term, const SemanticCut*> cut_of;
    for (const auto& cut : cuts)
        cut_of.emplace(cut.keyword, &cut);

    struct Found {
        std::string definition;
        std::string definition_doc;
        std::string first_doc; // first occurrence anywhere, for gloss evidence
    };
    std::unordered_map<Term, Found> found;
    for (const auto& k : keyset.keywords)
        found.emplace(k.term, Found{});

    auto marker_follows = [&](const Sentence& s, std::size_t p) {
        const auto& toks = s.tokens;
        for (const auto& m : word_markers)
            for (std::size_t q = p + 1; q <= p + 2 && q < toks.size(); ++q)
                if (toks[q].text == m)
                    return true;
        if (!raw_markers.empty()) {
            const std::size_t begin = toks[p].raw_end;
            const std::size_t end =
                p + 2 < toks.size() ? toks[p + 2].raw_end : s.raw.size();
            const std::string_view span(s.raw.data() + begin, end - begin);
            for (const auto& m : raw_markers)
                if (span.find(m) != std::string_view::npos)
                    return true;
        }
        return false;
    };

    for (const auto& doc : docs) {
        for (const auto& sentence : doc.sentences) {
            const auto resolved = resolve_terms(sentence, lex, cfg.window_radius);
            for (std::size_t i = 0; i < resolved.size(); ++i) {
                if (!resolved[i])
                    continue;
                auto it = found.find(*resolved[i]);
                if (it == found.end())
                    continue;
                Found& f = it->second;
                if (f.first_doc.empty())
                    f.first_doc = doc.doc_id;
                if (f.definition.empty() && i < 3 && marker_follows(sentence, i)) {
                    f.definition = sentence.raw;
                    f.definition_doc = doc.doc_id;
                }
            }
        }
    }

    Glossary glossary;
    for (const auto& k : keyset.keywords) {
        const Found& f = found.at(k.term);
        if (!f.definition.empty()) {
            glossary.entries.push_back({k.term, f.definition,
                                        GlossaryEntry::Source::definitional_sentence,
                                        f.definition_doc});
            continue;
        }
        const SemanticCut* cut = nullptr;
        if (auto it = cut_of.find(k.term); it != cut_of.end())
            cut = it->second;
        if (!cut || cut->satellites.empty() || f.first_doc.empty()) {
            glossary.dropped.push_back(k.term);
            continue;
        }
        std::vector<std::pair<Term, std::uint64_t>> sats(cut->satellites.begin(),
                                                         cut->satellites.end());
        std::stable_sort(sats.begin(), sats.end(), [](const auto& a, const auto& b) {
            if (a.second != b.second)
                return a.second > b.second;
            return a.first < b.first;
        });
        std::string gloss = "related terms:";
        for (std::size_t i = 0; i < sats.size() && i < 5; ++i) {
            gloss += i == 0 ? " " : ", ";
            gloss += sats[i].first;
        }
        glossary.entries.push_back(
            {k.term, gloss, GlossaryEntry::Source::context_gloss, f.first_doc});
    }
    std::sort(glossary.entries.begin(), glossary.entries.end(),
              [](const GlossaryEntry& a, const GlossaryEntry& b) { return a.term < b.term; });
    std::sort(glossary.dropped.begin(), glossary.dropped.end());
    return glossary;
}

} // namespace semparse

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "semparse/corpus.hpp"
#include "semparse/keywords.hpp"
#include "semparse/lexicon.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace semparse {

/// Weighted satellite-word profile of one keyword: sentence-bounded
/// window co-occurrence counts. The keyword itself never appears among
/// its satellites.
struct SemanticCut {
    Term keyword;
    std::map<Term, std::uint64_t> satellites;
    std::string scope_id;
};

struct Cluster {
    Term cluster_id; // lexicographically smallest member
    std::vector<Term> members;
};

struct ClusterSet {
    std::string scope_id;
    std::vector<Cluster> clusters;
    double threshold_used = 0.0;
};

struct GlossaryEntry {
    enum class Source { definitional_sentence, context_gloss };
    Term term;
    std::string definition;
    Source source = Source::context_gloss;
    std::string evidence_doc;
};

struct Glossary {
    std::vector<GlossaryEntry> entries; // term ascending
    std::vector<Term> dropped;          // keywords with no pattern and no satellites
};

/// One cut per keyword, in keyword-set order. Keywords that never occur
/// in the documents get an empty cut.
std::vector<SemanticCut> build_cuts(const std::vector<Document>& docs,
                                    const KeywordSet& keyset, const Lexicon& lex,
                                    std::size_t window_radius);

/// Weighted Jaccard over the satellite maps; 0 when both cuts are empty.
double cut_similarity(const SemanticCut& a, const SemanticCut& b);

/// Connected components of the graph with an edge wherever
/// cut_similarity >= threshold. Clusters are returned sorted by id.
ClusterSet cluster_keywords(const std::vector<SemanticCut>& cuts, double threshold);

/// Definition per keyword: the first sentence (document order) where the
/// keyword sits within the first 3 tokens with a copular marker within
/// the next 2, verbatim; otherwise a gloss of the top-5 satellites.
/// Word markers match token surfaces; punctuation markers (the em dash)
/// match the raw text between the keyword and the second token after it.
Glossary build_glossary(const std::vector<Document>& docs, const KeywordSet& keyset,
                        const std::vector<SemanticCut>& cuts, const Lexicon& lex,
                        const AnalysisConfig& cfg);

} // namespace semparse

// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/lexicon.hpp"

#include "semparse/digest.hpp"
#include "semparse/errors.hpp"
#include "semparse/text.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace semparse {

using nlohmann::json;

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

[[noreturn]] void format_error(const std::filesystem::path& path, std::size_t line,
                               const std::string& what) {
    throw Error(ErrorKind::format_error,
                path.string() + ":" + std::to_string(line) + ": " + what);
}

std::string trim(std::string s) {
    const auto is_ws = [](unsigned char c) { return std::isspace(c) != 0; };
    while (!s.empty() && is_ws(s.back()))
        s.pop_back();
    std::size_t i = 0;
    while (i < s.size() && is_ws(static_cast<unsigned char>(s[i])))
        ++i;
    return s.substr(i);
}

bool single_token(const std::string& s) {
    return !s.empty() && s.find_first_of(" \t") == std::string::npos;
}

void load_stopwords(const std::filesystem::path& path, Lexicon& lex) {
    auto bytes = read_file(path);
    if (!bytes)
        throw Error(ErrorKind::io_error, "cannot read stopword file " + path.string());
    std::istringstream in(*bytes);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto hash = line.find('#'); hash != std::string::npos)
            line.erase(hash);
        line = trim(line);
        if (line.empty())
            continue;
        if (!single_token(line))
            format_error(path, lineno, "stopword entries must be single tokens");
        lex.stopwords.insert(fold_utf8(line));
    }
}

void load_synonyms(const std::filesystem::path& path, Lexicon& lex) {
    auto bytes = read_file(path);
    if (!bytes)
        throw Error(ErrorKind::io_error, "cannot read synonym file " + path.string());
    std::istringstream in(*bytes);
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r')
            line.pop_back();
        if (trim(line).empty())
            continue;
        const auto tab = line.find('\t');
        if (tab == std::string::npos || line.find('\t', tab + 1) != std::string::npos)
            format_error(path, lineno, "expected exactly one tab: variant<TAB>canonical");
        const std::string variant = fold_utf8(trim(line.substr(0, tab)));
        const std::string canonical = fold_utf8(trim(line.substr(tab + 1)));
        if (!single_token(variant) || !single_token(canonical))
            format_error(path, lineno, "variant and canonical must be single tokens");
        auto [it, inserted] = lex.synonyms.emplace(variant, canonical);
        if (!inserted && it->second != canonical)
            format_error(path, lineno, "conflicting mapping for variant '" + variant + "'");
    }
}

void load_homonyms(const std::filesystem::path& path, Lexicon& lex) {
    auto bytes = read_file(path);
    if (!bytes)
        throw Error(ErrorKind::io_error, "cannot read homonym file " + path.string());
    json doc;
    try {
        doc = json::parse(*bytes);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::format_error, path.string() + ": " + e.what());
    }
    if (!doc.is_object())
        throw Error(ErrorKind::format_error,
                    path.string() + ": expected an object of token -> sense list");
    for (auto it = doc.begin(); it != doc.end(); ++it) {
        const std::string token = fold_utf8(it.key());
        if (!single_token(token))
            throw Error(ErrorKind::format_error,
                        path.string() + ": homonym keys must be single tokens");
        if (!it.value().is_array() || it.value().size() < 2)
            throw Error(ErrorKind::format_error, path.string() + ": homonym '" + token +
                                                     "' needs at least 2 senses");
        std::vector<Sense> senses;
        std::size_t index = 0;
        for (const auto& s : it.value()) {
            ++index;
            if (!s.is_object() || !s.contains("discriminators") ||
                !s["discriminators"].is_array())
                throw Error(ErrorKind::format_error,
                            path.string() + ": sense " + std::to_string(index) + " of '" +
                                token + "' needs a discriminators array");
            Sense sense;
            sense.sense_id = token + "#" + std::to_string(index);
            for (const auto& d : s["discriminators"]) {
                if (!d.is_string())
                    throw Error(ErrorKind::format_error,
                                path.string() + ": discriminators must be strings");
                std::string disc = fold_utf8(trim(d.get<std::string>()));
                if (!single_token(disc))
                    throw Error(ErrorKind::format_error,
                                path.string() + ": discriminators must be single tokens");
                if (auto syn = lex.synonyms.find(disc); syn != lex.synonyms.end())
                    disc = syn->second;
                if (!lex.stopwords.count(disc))
                    sense.discriminators.insert(std::move(disc));
            }
            if (sense.discriminators.empty())
                throw Error(ErrorKind::format_error,
                            path.string() + ": sense " + sense.sense_id +
                                " has no usable discriminators");
            senses.push_back(std::move(sense));
        }
        lex.homonyms.emplace(token, std::move(senses));
    }
}

void validate_synonyms(const Lexicon& lex) {
    for (const auto& [variant, canonical] : lex.synonyms) {
        if (lex.synonyms.count(canonical))
            throw Error(ErrorKind::synonym_cycle,
                        "synonym map is not a depth-1 forest: '" + variant + "' -> '" +
                            canonical + "' but '" + canonical + "' is itself a variant");
        if (lex.stopwords.count(canonical))
            throw Error(ErrorKind::format_error,
                        "synonym canonical form '" + canonical + "' is a stopword");
    }
}

} // namespace

std::optional<Term> Lexicon::normalize(const Term& token) const {
    Term canonical = token;
    if (auto it = synonyms.find(token); it != synonyms.end())
        canonical = it->second;
    if (stopwords.count(token) || stopwords.count(canonical))
        return std::nullopt;
    return canonical;
}

Term Lexicon::disambiguate(const Term& token, const std::set<Term>& context) const {
    auto it = homonyms.find(token);
    if (it == homonyms.end())
        return token;
    const Sense* best = nullptr;
    std::size_t best_overlap = 0;
    for (const auto& sense : it->second) {
        std::size_t overlap = 0;
        for (const auto& d : sense.discriminators)
            if (context.count(d))
                ++overlap;
        if (!best || overlap > best_overlap) {
            best = &sense;
            best_overlap = overlap;
        }
    }
    return best->sense_id;
}

Lexicon load_lexicon(const std::filesystem::path& stopword_path,
                     const std::filesystem::path& synonym_path,
                     const std::filesystem::path& homonym_path) {
    Lexicon lex;
    Sha256 fp;
    constexpr std::string_view sep("\0", 1);
    auto feed = [&](const char* label, const std::filesystem::path& path) {
        fp.update(label);
        fp.update(sep);
        if (path.empty()) {
            fp.update("<absent>");
        } else if (auto bytes = read_file(path)) {
            fp.update(*bytes);
        } else {
            throw Error(ErrorKind::io_error, "cannot read " + path.string());
        }
        fp.update(sep);
    };
    feed("stopwords", stopword_path);
    feed("synonyms", synonym_path);
    feed("homonyms", homonym_path);
    lex.fingerprint = fp.hex_digest();

    if (!stopword_path.empty())
        load_stopwords(stopword_path, lex);
    if (!synonym_path.empty())
        load_synonyms(synonym_path, lex);
    validate_synonyms(lex);
    if (!homonym_path.empty())
        load_homonyms(homonym_path, lex);
    return lex;
}

std::vector<std::optional<Term>> resolve_terms(const Sentence& sentence, const Lexicon& lex,
                                               std::size_t window_radius) {
    const auto& tokens = sentence.tokens;
    std::vector<std::optional<Term>> canonical(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i)
        canonical[i] = lex.normalize(tokens[i].text);

    if (lex.homonyms.empty())
        return canonical;

    std::vector<std::optional<Term>> resolved(tokens.size());
    for (std::size_t i = 0; i < tokens.size(); ++i) {
        if (!canonical[i]) {
            resolved[i] = std::nullopt;
            continue;
        }
        if (!lex.homonyms.count(*canonical[i])) {
            resolved[i] = canonical[i];
            continue;
        }
        std::set<Term> context;
        const std::size_t lo = i > window_radius ? i - window_radius : 0;
        const std::size_t hi = std::min(tokens.size(), i + window_radius + 1);
        for (std::size_t j = lo; j < hi; ++j)
            if (j != i && canonical[j])
                context.insert(*canonical[j]);
        resolved[i] = lex.disambiguate(*canonical[i], context);
    }
    return resolved;
}

std::set<Term> term_set(const std::vector<Document>& docs, const Lexicon& lex,
                        std::size_t window_radius) {
    std::set<Term> terms;
    for (const auto& doc : docs)
        for (const auto& sentence : doc.sentences)
            for (const auto& term : resolve_terms(sentence, lex, window_radius))
                if (term)
                    terms.insert(*term);
    return terms;
}

} // namespace semparse

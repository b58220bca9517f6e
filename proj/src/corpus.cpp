// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/corpus.hpp"

#include "semparse/digest.hpp"
#include "semparse/errors.hpp"
#include "semparse/text.hpp"

#include <json.hpp>

#include <fstream>
#include <set>
#include <sstream>

namespace semparse {

using nlohmann::json;

std::string_view channel_name(Channel c) {
    switch (c) {
    case Channel::forum: return "forum";
    case Channel::chat: return "chat";
    case Channel::email: return "email";
    }
    return "forum";
}

namespace {

std::optional<std::string> read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

[[noreturn]] void manifest_error(const std::string& pointer, const std::string& what) {
    throw Error(ErrorKind::manifest_invalid, "course.json: " + what + " (at " + pointer + ")");
}

const json* find_member(const json& obj, const char* key) {
    auto it = obj.find(key);
    return it == obj.end() ? nullptr : &*it;
}

const json& require_member(const json& obj, const char* key, const std::string& pointer) {
    const json* m = find_member(obj, key);
    if (!m)
        manifest_error(pointer + "/" + key, "missing required key");
    return *m;
}

std::string require_string(const json& v, const std::string& pointer) {
    if (!v.is_string())
        manifest_error(pointer, "expected a string");
    return v.get<std::string>();
}

std::string require_nonempty_string(const json& v, const std::string& pointer) {
    std::string s = require_string(v, pointer);
    if (s.empty())
        manifest_error(pointer, "string must be non-empty");
    return s;
}

double require_fraction(const json& v, const std::string& pointer) {
    if (!v.is_number())
        manifest_error(pointer, "expected a number");
    return v.get<double>();
}

std::size_t require_count(const json& v, const std::string& pointer) {
    if (!v.is_number_integer() || v.get<long long>() < 0)
        manifest_error(pointer, "expected a non-negative integer");
    return static_cast<std::size_t>(v.get<long long>());
}

std::vector<Sentence> tokenize_file(const std::string& bytes, std::size_t min_token_len,
                                    const std::filesystem::path& path) {
    try {
        return tokenize(bytes, min_token_len);
    } catch (const Error& e) {
        throw Error(ErrorKind::invalid_encoding, path.string() + ": " + e.what());
    }
}

void parse_config_block(const json& block, AnalysisConfig& cfg, const std::string& base) {
    static const std::set<std::string> known = {
        "window_radius",      "min_token_len",
        "upper_cut",          "lower_cut",
        "max_keywords",       "cluster_threshold",
        "aims_pass_threshold", "richness_thresholds",
        "min_questions_per_keyword", "off_key_threshold",
        "glossary_markers"};
    if (!block.is_object())
        manifest_error(base, "expected an object");
    for (auto it = block.begin(); it != block.end(); ++it) {
        if (!known.count(it.key()))
            manifest_error(base + "/" + it.key(), "unknown config key");
    }
    if (const json* v = find_member(block, "window_radius"))
        cfg.window_radius = require_count(*v, base + "/window_radius");
    if (const json* v = find_member(block, "min_token_len"))
        cfg.min_token_len = require_count(*v, base + "/min_token_len");
    if (const json* v = find_member(block, "upper_cut"))
        cfg.upper_cut = require_fraction(*v, base + "/upper_cut");
    if (const json* v = find_member(block, "lower_cut"))
        cfg.lower_cut = require_fraction(*v, base + "/lower_cut");
    if (const json* v = find_member(block, "max_keywords")) {
        const std::string p = base + "/max_keywords";
        if (v->is_object()) {
            if (const json* c = find_member(*v, "chapter"))
                cfg.max_keywords_chapter = require_count(*c, p + "/chapter");
            if (const json* c = find_member(*v, "course"))
                cfg.max_keywords_course = require_count(*c, p + "/course");
        } else {
            cfg.max_keywords_chapter = require_count(*v, p);
            cfg.max_keywords_course = cfg.max_keywords_chapter;
        }
    }
    if (const json* v = find_member(block, "cluster_threshold"))
        cfg.cluster_threshold = require_fraction(*v, base + "/cluster_threshold");
    if (const json* v = find_member(block, "aims_pass_threshold"))
        cfg.aims_pass_threshold = require_fraction(*v, base + "/aims_pass_threshold");
    if (const json* v = find_member(block, "richness_thresholds")) {
        const std::string p = base + "/richness_thresholds";
        if (!v->is_object())
            manifest_error(p, "expected an object with on_topic and rich");
        if (const json* c = find_member(*v, "on_topic"))
            cfg.on_topic_threshold = require_fraction(*c, p + "/on_topic");
        if (const json* c = find_member(*v, "rich"))
            cfg.rich_threshold = require_fraction(*c, p + "/rich");
    }
    if (const json* v = find_member(block, "min_questions_per_keyword"))
        cfg.min_questions_per_keyword = require_count(*v, base + "/min_questions_per_keyword");
    if (const json* v = find_member(block, "off_key_threshold"))
        cfg.off_key_threshold = require_fraction(*v, base + "/off_key_threshold");
    if (const json* v = find_member(block, "glossary_markers")) {
        const std::string p = base + "/glossary_markers";
        if (!v->is_array())
            manifest_error(p, "expected an array of strings");
        cfg.glossary_markers.clear();
        std::size_t i = 0;
        for (const auto& m : *v)
            cfg.glossary_markers.push_back(
                require_nonempty_string(m, p + "/" + std::to_string(i++)));
    }
}

Channel parse_channel(const std::string& s, const std::string& pointer) {
    if (s == "forum")
        return Channel::forum;
    if (s == "chat")
        return Channel::chat;
    if (s == "email")
        return Channel::email;
    manifest_error(pointer, "channel must be one of forum, chat, email");
}

} // namespace

void AnalysisConfig::validate() const {
    auto fail = [](const std::string& what) {
        throw Error(ErrorKind::config_invalid, "invalid config: " + what);
    };
    if (window_radius == 0)
        fail("window_radius must be positive");
    if (min_token_len == 0)
        fail("min_token_len must be positive");
    if (max_keywords_chapter == 0 || max_keywords_course == 0)
        fail("max_keywords must be positive");
    auto in_unit = [](double v) { return v >= 0.0 && v <= 1.0; };
    if (upper_cut < 0.0 || upper_cut >= 1.0)
        fail("upper_cut must lie in [0,1)");
    if (lower_cut < 0.0 || lower_cut >= 1.0)
        fail("lower_cut must lie in [0,1)");
    if (upper_cut + lower_cut >= 1.0)
        fail("upper_cut + lower_cut must be < 1");
    if (!in_unit(cluster_threshold))
        fail("cluster_threshold must lie in [0,1]");
    if (!in_unit(aims_pass_threshold))
        fail("aims_pass_threshold must lie in [0,1]");
    if (!in_unit(on_topic_threshold) || !in_unit(rich_threshold))
        fail("richness thresholds must lie in [0,1]");
    if (on_topic_threshold > rich_threshold)
        fail("richness_thresholds require on_topic <= rich");
    if (!in_unit(off_key_threshold))
        fail("off_key_threshold must lie in [0,1]");
    for (const auto& m : glossary_markers)
        if (m.empty())
            fail("glossary markers must be non-empty");
}

void ConfigOverrides::apply(AnalysisConfig& cfg) const {
    if (window_radius)
        cfg.window_radius = *window_radius;
    if (min_token_len)
        cfg.min_token_len = *min_token_len;
    if (upper_cut)
        cfg.upper_cut = *upper_cut;
    if (lower_cut)
        cfg.lower_cut = *lower_cut;
    if (max_keywords) {
        cfg.max_keywords_chapter = *max_keywords;
        cfg.max_keywords_course = *max_keywords;
    }
    if (cluster_threshold)
        cfg.cluster_threshold = *cluster_threshold;
    if (aims_pass_threshold)
        cfg.aims_pass_threshold = *aims_pass_threshold;
    if (on_topic_threshold)
        cfg.on_topic_threshold = *on_topic_threshold;
    if (rich_threshold)
        cfg.rich_threshold = *rich_threshold;
    if (min_questions_per_keyword)
        cfg.min_questions_per_keyword = *min_questions_per_keyword;
    if (off_key_threshold)
        cfg.off_key_threshold = *off_key_threshold;
    if (glossary_markers)
        cfg.glossary_markers = *glossary_markers;
}

const Document* CourseBundle::find_chapter(std::string_view chapter_id) const {
    for (const auto& ch : chapters)
        if (ch.doc_id == chapter_id)
            return &ch;
    return nullptr;
}

std::vector<Sentence> tokenize(std::string_view text, std::size_t min_token_len) {
    const auto cps = decode_utf8(text);
    std::vector<Sentence> sentences;

    auto emit = [&](std::size_t begin, std::size_t end) {
        while (begin < end && is_space(cps[begin].value))
            ++begin;
        while (end > begin && is_space(cps[end - 1].value))
            --end;
        if (begin == end)
            return;
        const std::size_t raw_base = cps[begin].byte_offset;
        const std::size_t raw_stop =
            end < cps.size() ? cps[end].byte_offset : text.size();

        Sentence sentence;
        sentence.raw.assign(text.substr(raw_base, raw_stop - raw_base));

        std::size_t i = begin;
        while (i < end) {
            if (!is_word_char(cps[i].value)) {
                ++i;
                continue;
            }
            std::size_t run_end = i;
            while (run_end < end && is_word_char(cps[run_end].value))
                ++run_end;
            // trim outer apostrophes/hyphens
            std::size_t a = i, b = run_end;
            while (a < b && (is_apostrophe(cps[a].value) || is_hyphen(cps[a].value)))
                ++a;
            while (b > a && (is_apostrophe(cps[b - 1].value) || is_hyphen(cps[b - 1].value)))
                --b;
            i = run_end;
            if (b - a < min_token_len)
                continue;
            bool all_digits = true;
            for (std::size_t k = a; k < b; ++k)
                if (!is_ascii_digit(cps[k].value)) {
                    all_digits = false;
                    break;
                }
            if (all_digits)
                continue;
            Token tok;
            tok.offset = a;
            tok.raw_begin = cps[a].byte_offset - raw_base;
            tok.raw_end = (b < cps.size() ? cps[b].byte_offset : text.size()) - raw_base;
            for (std::size_t k = a; k < b; ++k)
                append_utf8(fold_case(cps[k].value), tok.text);
            sentence.tokens.push_back(std::move(tok));
        }
        if (!sentence.tokens.empty())
            sentences.push_back(std::move(sentence));
    };

    std::size_t start = 0;
    for (std::size_t i = 0; i < cps.size(); ++i) {
        const bool terminator =
            is_sentence_terminator(cps[i].value) &&
            (i + 1 == cps.size() || is_space(cps[i + 1].value));
        if (terminator || i + 1 == cps.size()) {
            emit(start, i + 1);
            start = i + 1;
        }
    }
    return sentences;
}

CourseBundle load_bundle(const std::filesystem::path& root, const ConfigOverrides& overrides) {
    const auto manifest_path = root / "course.json";
    auto manifest_bytes = read_file(manifest_path);
    if (!manifest_bytes)
        throw Error(ErrorKind::manifest_missing,
                    "no course.json manifest under " + root.string());

    json manifest;
    try {
        manifest = json::parse(*manifest_bytes);
    } catch (const json::parse_error& e) {
        throw Error(ErrorKind::manifest_invalid, std::string("course.json: ") + e.what());
    }
    if (!manifest.is_object())
        manifest_error("", "manifest must be a JSON object");

    static const std::set<std::string> known_top = {"course_id", "chapters", "aims",
                                                    "tests",     "messages", "config"};
    for (auto it = manifest.begin(); it != manifest.end(); ++it)
        if (!known_top.count(it.key()))
            manifest_error("/" + it.key(), "unknown manifest key");

    CourseBundle bundle;
    bundle.course_id = require_nonempty_string(
        require_member(manifest, "course_id", ""), "/course_id");

    if (const json* cfg = find_member(manifest, "config"))
        parse_config_block(*cfg, bundle.config, "/config");
    overrides.apply(bundle.config);
    bundle.config.validate();
    const std::size_t min_len = bundle.config.min_token_len;

    Sha256 fp;
    fp.update(*manifest_bytes);

    constexpr std::string_view sep("\0", 1);
    auto load_text = [&](const json& node, const std::string& pointer, const char* kind,
                         const std::string& id) {
        const auto rel = require_nonempty_string(node, pointer);
        const auto path = root / rel;
        auto bytes = read_file(path);
        if (!bytes)
            manifest_error(pointer, std::string("cannot read ") + kind + " file '" + rel + "'");
        fp.update(sep);
        fp.update(kind);
        fp.update(sep);
        fp.update(id);
        fp.update(sep);
        fp.update(*bytes);
        return std::pair<std::string, std::filesystem::path>(std::move(*bytes), path);
    };

    // chapters
    const json& chapters = require_member(manifest, "chapters", "");
    if (!chapters.is_array() || chapters.empty())
        manifest_error("/chapters", "at least one chapter is required");
    std::set<std::string> chapter_ids;
    for (std::size_t i = 0; i < chapters.size(); ++i) {
        const std::string ptr = "/chapters/" + std::to_string(i);
        const json& ch = chapters[i];
        if (!ch.is_object())
            manifest_error(ptr, "expected an object");
        Document doc;
        doc.doc_id = require_nonempty_string(require_member(ch, "id", ptr), ptr + "/id");
        doc.title = require_string(require_member(ch, "title", ptr), ptr + "/title");
        if (!chapter_ids.insert(doc.doc_id).second)
            manifest_error(ptr + "/id", "duplicate chapter id '" + doc.doc_id + "'");
        if (doc.doc_id == kCourseScope)
            manifest_error(ptr + "/id", "'course' is reserved for the whole-course scope");
        auto [bytes, path] =
            load_text(require_member(ch, "file", ptr), ptr + "/file", "chapter", doc.doc_id);
        doc.sentences = tokenize_file(bytes, min_len, path);
        bundle.chapters.push_back(std::move(doc));
    }

    // aims (optional)
    if (const json* aims = find_member(manifest, "aims")) {
        if (!aims->is_array())
            manifest_error("/aims", "expected an array");
        std::set<std::string> aim_ids;
        for (std::size_t i = 0; i < aims->size(); ++i) {
            const std::string ptr = "/aims/" + std::to_string(i);
            const json& a = (*aims)[i];
            if (!a.is_object())
                manifest_error(ptr, "expected an object");
            Document doc;
            doc.doc_id = require_nonempty_string(require_member(a, "id", ptr), ptr + "/id");
            if (!aim_ids.insert(doc.doc_id).second)
                manifest_error(ptr + "/id", "duplicate aim id '" + doc.doc_id + "'");
            auto [bytes, path] =
                load_text(require_member(a, "file", ptr), ptr + "/file", "aim", doc.doc_id);
            doc.sentences = tokenize_file(bytes, min_len, path);
            bundle.aims.push_back(std::move(doc));
        }
    }

    // test banks (optional)
    if (const json* tests = find_member(manifest, "tests")) {
        if (!tests->is_array())
            manifest_error("/tests", "expected an array");
        for (std::size_t i = 0; i < tests->size(); ++i) {
            const std::string ptr = "/tests/" + std::to_string(i);
            const json& t = (*tests)[i];
            if (!t.is_object())
                manifest_error(ptr, "expected an object");
            const std::string chapter_id = require_nonempty_string(
                require_member(t, "chapter_id", ptr), ptr + "/chapter_id");
            if (!chapter_ids.count(chapter_id))
                throw Error(ErrorKind::dangling_reference,
                            "course.json: test bank references unknown chapter '" +
                                chapter_id + "' (at " + ptr + "/chapter_id)");
            if (bundle.test_banks.count(chapter_id))
                manifest_error(ptr + "/chapter_id",
                               "duplicate test bank for chapter '" + chapter_id + "'");
            auto [bytes, path] = load_text(require_member(t, "file", ptr), ptr + "/file",
                                           "tests", chapter_id);
            json items;
            try {
                items = json::parse(bytes);
            } catch (const json::parse_error& e) {
                manifest_error(ptr + "/file", path.string() + ": " + e.what());
            }
            if (!items.is_array())
                manifest_error(ptr + "/file", path.string() + ": expected a JSON array");
            std::vector<TestItem> bank;
            std::set<std::string> item_ids;
            for (std::size_t k = 0; k < items.size(); ++k) {
                const std::string iptr = ptr + "/file#" + std::to_string(k);
                const json& it = items[k];
                if (!it.is_object())
                    manifest_error(iptr, "expected an object");
                TestItem item;
                item.item_id = require_nonempty_string(require_member(it, "item_id", iptr),
                                                       iptr + "/item_id");
                if (!item_ids.insert(item.item_id).second)
                    manifest_error(iptr + "/item_id",
                                   "duplicate item id '" + item.item_id + "'");
                const std::string stem =
                    require_string(require_member(it, "stem", iptr), iptr + "/stem");
                item.stem.doc_id = item.item_id + "#stem";
                item.stem.sentences = tokenize_file(stem, min_len, path);
                if (const json* opts = find_member(it, "options")) {
                    if (!opts->is_array())
                        manifest_error(iptr + "/options", "expected an array of strings");
                    for (std::size_t o = 0; o < opts->size(); ++o) {
                        Document od;
                        od.doc_id = item.item_id + "#opt" + std::to_string(o);
                        od.sentences = tokenize_file(
                            require_string((*opts)[o],
                                           iptr + "/options/" + std::to_string(o)),
                            min_len, path);
                        item.options.push_back(std::move(od));
                    }
                }
                bank.push_back(std::move(item));
            }
            bundle.test_banks.emplace(chapter_id, std::move(bank));
        }
    }

    // messages (optional, relpath or null)
    if (const json* messages = find_member(manifest, "messages")) {
        if (!messages->is_null()) {
            auto [bytes, path] = load_text(*messages, "/messages", "messages", "");
            json list;
            try {
                list = json::parse(bytes);
            } catch (const json::parse_error& e) {
                manifest_error("/messages", path.string() + ": " + e.what());
            }
            if (!list.is_array())
                manifest_error("/messages", path.string() + ": expected a JSON array");
            for (std::size_t i = 0; i < list.size(); ++i) {
                const std::string ptr = "/messages#" + std::to_string(i);
                const json& m = list[i];
                if (!m.is_object())
                    manifest_error(ptr, "expected an object");
                Message msg;
                msg.message_id = require_nonempty_string(
                    require_member(m, "message_id", ptr), ptr + "/message_id");
                msg.channel = parse_channel(
                    require_string(require_member(m, "channel", ptr), ptr + "/channel"),
                    ptr + "/channel");
                msg.lesson_id = require_nonempty_string(
                    require_member(m, "lesson_id", ptr), ptr + "/lesson_id");
                msg.body.doc_id = msg.message_id;
                msg.body.sentences = tokenize_file(
                    require_string(require_member(m, "body", ptr), ptr + "/body"), min_len,
                    path);
                bundle.messages.push_back(std::move(msg));
            }
        }
    }

    bundle.fingerprint = fp.hex_digest();
    return bundle;
}

} // namespace semparse

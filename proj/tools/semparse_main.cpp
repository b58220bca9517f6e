// Copyright 2026 course-semparse authors
// SPDX-License-Identifier: Apache-2.0

#include "semparse/analysis.hpp"
#include "semparse/errors.hpp"
#include "semparse/version.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

namespace {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace semparse;

struct CommonArgs {
    std::string bundle;
    std::string out;
    std::string stopwords;
    std::string synonyms;
    std::string homonyms;
    ConfigOverrides overrides;
};

void add_common_options(CLI::App* cmd, CommonArgs& args) {
    cmd->add_option("--bundle", args.bundle, "Course bundle directory (with course.json)")
        ->required();
    cmd->add_option("--out", args.out, "Output path (stdout when omitted)");
    cmd->add_option("--stopwords", args.stopwords, "Stopword list (one token per line)");
    cmd->add_option("--synonyms", args.synonyms, "Synonym map (variant<TAB>canonical)");
    cmd->add_option("--homonyms", args.homonyms, "Homonym sense inventory (JSON)");

    auto& ov = args.overrides;
    cmd->add_option("--window-radius", ov.window_radius, "Co-occurrence window radius");
    cmd->add_option("--min-token-len", ov.min_token_len, "Minimum token length");
    cmd->add_option("--upper-cut", ov.upper_cut, "Head mass fraction dropped");
    cmd->add_option("--lower-cut", ov.lower_cut, "Tail mass fraction dropped");
    cmd->add_option("--max-keywords", ov.max_keywords, "Keyword cap (chapter and course)");
    cmd->add_option("--cluster-threshold", ov.cluster_threshold,
                    "Similarity threshold for keyword clusters");
    cmd->add_option("--aims-pass-threshold", ov.aims_pass_threshold,
                    "Combined score needed to mark an aim covered");
    cmd->add_option("--on-topic-threshold", ov.on_topic_threshold,
                    "Topic coverage needed for the on_topic label");
    cmd->add_option("--rich-threshold", ov.rich_threshold,
                    "Topic coverage needed for the rich label");
    cmd->add_option("--min-questions-per-keyword", ov.min_questions_per_keyword,
                    "Questions required per keyword before it counts as deficient");
    cmd->add_option("--off-key-threshold", ov.off_key_threshold,
                    "Keyword overlap below which a test item is off key");
    cmd->add_option("--glossary-markers", ov.glossary_markers,
                    "Copular markers for definitional sentences")
        ->delimiter(',');
}

fs::path lexicon_path(const std::string& flag, const char* default_name) {
    if (!flag.empty())
        return flag;
    if (const char* dir = std::getenv("COURSE_SEMPARSE_LEXICON_DIR")) {
        const fs::path candidate = fs::path(dir) / default_name;
        if (fs::exists(candidate))
            return candidate;
    }
    return {};
}

Analyzer make_analyzer(const CommonArgs& args) {
    auto bundle = load_bundle(args.bundle, args.overrides);
    auto lexicon = load_lexicon(lexicon_path(args.stopwords, "stopwords.txt"),
                                lexicon_path(args.synonyms, "synonyms.tsv"),
                                lexicon_path(args.homonyms, "homonyms.json"));
    return Analyzer(std::move(bundle), std::move(lexicon));
}

void emit(const CommonArgs& args, const json& payload) {
    const std::string text = dump_report(payload);
    if (args.out.empty())
        std::cout << text;
    else
        atomic_write_file(args.out, text);
}

int fail(const Error& e) {
    json err = {{"error", {{"type", e.kind_name()}, {"message", e.what()}}}};
    std::cerr << err.dump() << "\n";
    return e.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Semantic analysis of e-learning course content"};
    app.set_version_flag("--version", std::string(kToolVersion));
    app.require_subcommand(1);

    CommonArgs args;
    std::string scope = std::string(kCourseScope);
    std::string chapter_id;
    std::string text_out;
    std::string out_dir = ".";

    CLI::App* keywords = app.add_subcommand(
        "keywords", "Select keywords for a scope and report the Zipf fit");
    add_common_options(keywords, args);
    keywords->add_option("--scope", scope, "Chapter id or 'course'");

    CLI::App* glossary =
        app.add_subcommand("glossary", "Build the glossary for a scope");
    add_common_options(glossary, args);
    glossary->add_option("--scope", scope, "Chapter id or 'course'");
    glossary->add_option("--text", text_out, "Also write a plain-text rendering here");

    CLI::App* check_aims = app.add_subcommand(
        "check-aims", "Score every aim against the course material");
    add_common_options(check_aims, args);

    CLI::App* check_tests = app.add_subcommand(
        "check-tests", "Check a chapter's test bank against its keywords");
    add_common_options(check_tests, args);
    check_tests->add_option("--chapter", chapter_id, "Chapter id")->required();

    CLI::App* score_messages = app.add_subcommand(
        "score-messages", "Label message richness against lesson topics");
    add_common_options(score_messages, args);

    CLI::App* analyze =
        app.add_subcommand("analyze", "Run the whole pipeline into run.json");
    add_common_options(analyze, args);
    analyze->add_option("--out-dir", out_dir, "Directory for run.json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0)
            return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        Analyzer analyzer = make_analyzer(args);
        if (keywords->parsed()) {
            emit(args, analyzer.keywords_payload(scope));
        } else if (glossary->parsed()) {
            const json payload = analyzer.glossary_payload(scope);
            emit(args, payload);
            const std::string rendered = render_glossary_text(payload);
            if (!text_out.empty())
                atomic_write_file(text_out, rendered);
            else if (!args.out.empty())
                std::cout << rendered;
        } else if (check_aims->parsed()) {
            emit(args, analyzer.aims_payload());
        } else if (check_tests->parsed()) {
            emit(args, analyzer.tests_payload(chapter_id));
        } else if (score_messages->parsed()) {
            emit(args, analyzer.messages_payload());
        } else if (analyze->parsed()) {
            atomic_write_file(fs::path(out_dir) / "run.json",
                              dump_report(analyzer.run_payload()));
        }
        return 0;
    } catch (const Error& e) {
        return fail(e);
    } catch (const std::exception& e) {
        return fail(Error(ErrorKind::io_error, e.what()));
    }
}

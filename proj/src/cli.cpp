#include "kparadigm/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "kparadigm/conjugator.hpp"
#include "kparadigm/error.hpp"
#include "kparadigm/lemmatizer.hpp"
#include "kparadigm/lexicon.hpp"
#include "kparadigm/render.hpp"

#ifndef KPARADIGM_DEFAULT_DATA_DIR
#define KPARADIGM_DEFAULT_DATA_DIR "data"
#endif

namespace kparadigm::cli {

namespace {

struct DataPaths {
    std::string data_dir;
    std::string endings;
    std::string verbs;
    std::string templ;
    std::string expectations;

    std::string resolve(const std::string& explicit_path, const char* file) const {
        if (!explicit_path.empty()) return explicit_path;
        std::string dir = data_dir;
        if (dir.empty()) {
            const char* env = std::getenv("KPARADIGM_DATA_DIR");
            dir = env && *env ? env : KPARADIGM_DEFAULT_DATA_DIR;
        }
        return dir + "/" + file;
    }

    Lexicon load_lexicon() const {
        return Lexicon::load(resolve(endings, "endings.tsv"), resolve(verbs, "verbs.tsv"),
                             resolve(templ, "template.tsv"));
    }
};

std::vector<std::string> split_commas(const std::string& text) {
    std::vector<std::string> parts;
    std::string current;
    for (char c : text) {
        if (c == ',') {
            if (!current.empty()) parts.push_back(std::move(current));
            current.clear();
        } else {
            current += c;
        }
    }
    if (!current.empty()) parts.push_back(std::move(current));
    return parts;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Korean verb paradigm generator and lemmatizer", "kparadigm"};
    app.require_subcommand(1);
    app.fallthrough();

    DataPaths paths;
    OutputFormat format = OutputFormat::table;
    const std::map<std::string, OutputFormat> formats{
        {"table", OutputFormat::table}, {"json", OutputFormat::json}, {"tsv", OutputFormat::tsv}};
    app.add_option("--format", format, "Output format")->transform(CLI::CheckedTransformer(formats));
    app.add_option("--data-dir", paths.data_dir,
                   "Directory with endings.tsv, verbs.tsv, template.tsv, expectations.tsv "
                   "(default: $KPARADIGM_DATA_DIR, then the built-in data directory)");
    app.add_option("--endings", paths.endings, "Endings file");
    app.add_option("--verbs", paths.verbs, "Verbs file");
    app.add_option("--template", paths.templ, "Template file");
    app.add_option("--expectations", paths.expectations, "Feature expectations file");

    std::string stem, ending, form, scope, index_path, out_path;
    bool only_verbs = false, only_endings = false;

    auto* conjugate_cmd = app.add_subcommand("conjugate", "Print every form of a verb");
    conjugate_cmd->add_option("stem", stem, "Verb stem")->required();

    auto* pair_cmd = app.add_subcommand("pair", "Conjugate one verb with one ending");
    pair_cmd->add_option("stem", stem, "Verb stem")->required();
    pair_cmd->add_option("ending", ending, "Ending")->required();

    auto* lemmatize_cmd = app.add_subcommand("lemmatize", "Find the (verb, ending) pairs behind a form");
    lemmatize_cmd->add_option("form", form, "Surface form")->required();
    auto* scope_opt = lemmatize_cmd->add_option("--scope", scope, "Comma-separated verbs to search");
    lemmatize_cmd->add_option("--index", index_path, "Prebuilt index TSV")->excludes(scope_opt);

    auto* validate_cmd = app.add_subcommand("validate", "Check class members against feature expectations");

    auto* classes_cmd = app.add_subcommand("classes", "List class members");
    auto* verbs_flag = classes_cmd->add_flag("--verbs", only_verbs, "Verb classes only");
    classes_cmd->add_flag("--endings", only_endings, "Ending classes only")->excludes(verbs_flag);

    auto* index_cmd = app.add_subcommand("index", "Write the reverse form index as TSV");
    index_cmd->add_option("--scope", scope, "Comma-separated verbs to index");
    index_cmd->add_option("--out", out_path, "Output file (default: stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return kDataError;
    }

    // `--endings` means "ending classes only" after `classes`; CLI11 routes it
    // there, so the global data flag is only seen elsewhere.
    try {
        if (*conjugate_cmd) {
            const auto lexicon = paths.load_lexicon();
            out << render_paradigm(conjugate(lexicon, stem), format);
            return kOk;
        }
        if (*pair_cmd) {
            const auto lexicon = paths.load_lexicon();
            const auto forms = conjugate_pair(lexicon, stem, ending);
            out << render_forms(stem, ending, forms, format);
            if (forms.empty()) {
                err << "no rule combines " << stem << " with " << ending << '\n';
                return kEmpty;
            }
            return kOk;
        }
        if (*lemmatize_cmd) {
            FormIndex index;
            if (!index_path.empty()) {
                std::ifstream in(index_path);
                if (!in) throw ParseError(index_path, 0, "cannot open file");
                index = FormIndex::read_tsv(in, index_path);
            } else {
                const auto lexicon = paths.load_lexicon();
                std::optional<std::vector<std::string>> verbs;
                if (!scope.empty()) verbs = split_commas(scope);
                index = build_index(lexicon, verbs);
            }
            const auto candidates = lemmatize(index, form);
            out << render_candidates(form, candidates, format);
            if (candidates.empty()) {
                err << "Not Found: " << form << '\n';
                return kEmpty;
            }
            return kOk;
        }
        if (*validate_cmd) {
            const auto lexicon = paths.load_lexicon();
            const auto expectations = load_expectations(paths.resolve(paths.expectations, "expectations.tsv"));
            const auto violations = validate(lexicon, expectations);
            out << render_violations(violations, format);
            return violations.empty() ? kOk : kEmpty;
        }
        if (*classes_cmd) {
            const auto lexicon = paths.load_lexicon();
            out << render_classes(lexicon, !only_endings, !only_verbs, format);
            return kOk;
        }
        if (*index_cmd) {
            const auto lexicon = paths.load_lexicon();
            std::optional<std::vector<std::string>> verbs;
            if (!scope.empty()) verbs = split_commas(scope);
            const auto index = build_index(lexicon, verbs);
            if (out_path.empty()) {
                index.write_tsv(out);
            } else {
                std::ofstream file(out_path);
                if (!file) throw ParseError(out_path, 0, "cannot open file for writing");
                index.write_tsv(file);
            }
            return kOk;
        }
    } catch (const NotFound& e) {
        err << e.what() << '\n';
        return kEmpty;
    } catch (const Error& e) {
        err << e.kind() << ": " << e.what() << '\n';
        return kDataError;
    } catch (const std::invalid_argument& e) {
        err << "invalid argument: " << e.what() << '\n';
        return kDataError;
    }
    return kDataError;
}

}  // namespace kparadigm::cli

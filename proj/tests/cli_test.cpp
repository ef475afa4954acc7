#include "gtest/gtest.h"

#include <cstdlib>
#include <filesystem>
#include <sstream>

#include "kparadigm/cli.hpp"
#include "kparadigm/render.hpp"
#include "support.hpp"

using namespace kparadigm;
using support::data_path;
using support::fixture_path;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
    args.insert(args.begin(), "kparadigm");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> with_data(std::vector<std::string> args) {
    args.insert(args.begin(), {"--data-dir", KPARADIGM_TEST_DATA_DIR});
    return args;
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST(Cli, ConjugateTable) {
    const auto r = run_cli(with_data({"conjugate", "그렇"}));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_TRUE(contains(r.out, "-어야\t그래야")) << r.out;
    EXPECT_TRUE(contains(r.out, "[ending class 3]"));
}

TEST(Cli, ConjugateUnknown) {
    const auto r = run_cli(with_data({"conjugate", "없다"}));
    EXPECT_EQ(r.code, 1);
    EXPECT_TRUE(r.out.empty());
    EXPECT_TRUE(contains(r.err, "Not Found"));
}

TEST(Cli, ConjugateJsonIsStable) {
    const auto a = run_cli(with_data({"conjugate", "그렇", "--format", "json"}));
    const auto b = run_cli(with_data({"--format", "json", "conjugate", "그렇"}));
    ASSERT_EQ(a.code, 0) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto doc = Json::parse(a.out);
    std::vector<std::string> keys;
    for (const auto& [k, v] : doc.items()) keys.push_back(k);
    EXPECT_EQ(keys, (std::vector<std::string>{"verb", "verb_classes", "entries"}));
    EXPECT_EQ(doc["verb"], "그렇");
    EXPECT_EQ(doc["verb_classes"], Json::array({8}));
}

TEST(Cli, JsonRoundTripsToTsv) {
    for (const auto& verb : support::sample_lexicon().verbs()) {
        const auto json = run_cli(with_data({"conjugate", verb.surface, "--format", "json"}));
        const auto tsv = run_cli(with_data({"conjugate", verb.surface, "--format", "tsv"}));
        ASSERT_EQ(json.code, 0);
        ASSERT_EQ(tsv.code, 0);
        const auto paradigm = paradigm_from_json(Json::parse(json.out));
        EXPECT_EQ(render_paradigm(paradigm, OutputFormat::tsv), tsv.out) << verb.surface;
        EXPECT_EQ(paradigm, conjugate(support::sample_lexicon(), verb.surface)) << verb.surface;
    }
}

TEST(Cli, Pair) {
    const auto r = run_cli(with_data({"pair", "돕", "아", "--format", "tsv"}));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "돕\t6\t아\t도와\t21:-1,ㅇㅘ,2\n");

    EXPECT_EQ(run_cli(with_data({"pair", "모르", "아"})).code, 1);
    EXPECT_EQ(run_cli(with_data({"pair", "모르", "zzz"})).code, 1);
}

TEST(Cli, Lemmatize) {
    const auto r = run_cli(with_data({"lemmatize", "그래야", "--format", "tsv"}));
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "그래야\t그렇\t어야\t8\t3\n");

    const auto molla = run_cli(with_data({"lemmatize", "몰라"}));
    EXPECT_EQ(molla.code, 0);
    EXPECT_TRUE(contains(molla.out, "모르"));

    EXPECT_EQ(run_cli(with_data({"lemmatize", "zzz"})).code, 1);
    EXPECT_EQ(run_cli(with_data({"lemmatize", "그래야", "--scope", "돕,모르"})).code, 1);
    EXPECT_EQ(run_cli(with_data({"lemmatize", "그래야", "--scope", "돕,그렇"})).code, 0);
    EXPECT_EQ(run_cli(with_data({"lemmatize", "그래야", "--scope", "zzz"})).code, 1);
}

TEST(Cli, IndexFileFeedsLemmatize) {
    const auto path = (std::filesystem::temp_directory_path() / "kparadigm_cli_index.tsv").string();
    ASSERT_EQ(run_cli(with_data({"index", "--out", path})).code, 0);
    const auto r = run_cli({"lemmatize", "도와", "--index", path, "--format", "tsv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "도와\t돕\t아\t21\t6\n");
    std::filesystem::remove(path);
    EXPECT_EQ(run_cli({"lemmatize", "도와", "--index", path}).code, 2);
}

TEST(Cli, ValidateShippedData) {
    const auto r = run_cli(with_data({"validate"}));
    EXPECT_EQ(r.code, 0) << r.out << r.err;
    EXPECT_TRUE(contains(r.out, "0 violations"));
}

TEST(Cli, ValidateSeededErrors) {
    const auto mok = run_cli(with_data({"validate", "--verbs", fixture_path("verbs_mok_in_rieul_class.tsv")}));
    EXPECT_EQ(mok.code, 1);
    EXPECT_TRUE(contains(mok.out, "1 violation\n"));
    EXPECT_TRUE(contains(mok.out, "먹"));

    const auto eoseo =
        run_cli(with_data({"validate", "--format", "json", "--endings", fixture_path("endings_vowel_initial_misfiled.tsv")}));
    EXPECT_EQ(eoseo.code, 1);
    const auto doc = Json::parse(eoseo.out);
    EXPECT_EQ(doc["count"], 1);
    EXPECT_EQ(doc["violations"][0]["surface"], "어서");

    const auto bad = run_cli(with_data({"validate", "--template", fixture_path("template_malformed_cell.tsv")}));
    EXPECT_EQ(bad.code, 2);
    EXPECT_TRUE(contains(bad.err, "MalformedRule"));
    EXPECT_TRUE(bad.out.empty());
}

TEST(Cli, Classes) {
    const auto verbs = run_cli(with_data({"classes", "--verbs", "--format", "tsv"}));
    EXPECT_EQ(verbs.code, 0);
    EXPECT_TRUE(contains(verbs.out, "verb\t45\t다르,모르,빠르\n"));
    EXPECT_FALSE(contains(verbs.out, "ending\t"));

    const auto endings = run_cli(with_data({"classes", "--endings"}));
    EXPECT_EQ(endings.code, 0);
    EXPECT_TRUE(contains(endings.out, "ending class 3: 어 어야 어서 어도\n"));
    EXPECT_FALSE(contains(endings.out, "verb class"));

    EXPECT_EQ(run_cli(with_data({"classes", "--verbs", "--endings"})).code, 2);
}

TEST(Cli, UsageErrors) {
    EXPECT_EQ(run_cli({}).code, 2);
    EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
    EXPECT_EQ(run_cli(with_data({"conjugate"})).code, 2);
    EXPECT_EQ(run_cli(with_data({"conjugate", "그렇", "--format", "xml"})).code, 2);
    const auto help = run_cli({"--help"});
    EXPECT_EQ(help.code, 0);
    EXPECT_TRUE(contains(help.out, "conjugate"));
}

TEST(Cli, DataErrors) {
    EXPECT_EQ(run_cli({"--data-dir", "/nonexistent", "conjugate", "그렇"}).code, 2);
    EXPECT_EQ(run_cli(with_data({"conjugate", "그렇", "--verbs", "/nonexistent/verbs.tsv"})).code, 2);
}

TEST(Cli, DataDirFromEnvironment) {
    ::setenv("KPARADIGM_DATA_DIR", "/nonexistent", 1);
    EXPECT_EQ(run_cli({"conjugate", "그렇"}).code, 2);
    ::setenv("KPARADIGM_DATA_DIR", KPARADIGM_TEST_DATA_DIR, 1);
    EXPECT_EQ(run_cli({"conjugate", "그렇"}).code, 0);
    // An explicit flag wins over the environment.
    EXPECT_EQ(run_cli({"--data-dir", "/nonexistent", "conjugate", "그렇"}).code, 2);
    ::unsetenv("KPARADIGM_DATA_DIR");
}

#include <doctest.h>

#include <json.hpp>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "revaf/review.hpp"
#include "support.hpp"

using testutil::fixture_path;
using testutil::read_file;

namespace {

struct CliResult {
    int code = -1;
    std::string out;
    std::string err;
};

std::filesystem::path scratch_dir() {
    static std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("revaf_cli_test_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

CliResult run_cli(const std::string& args) {
    static int counter = 0;
    auto out_file = scratch_dir() / ("out" + std::to_string(counter));
    auto err_file = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;

    std::string cmd = std::string(REVAF_CLI_PATH) + " " + args + " > " + out_file.string() +
                      " 2> " + err_file.string();
    int raw = std::system(cmd.c_str());

    CliResult result;
    result.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    result.out = read_file(out_file.string());
    result.err = read_file(err_file.string());
    return result;
}

} // namespace

TEST_CASE("cli validate") {
    CliResult ok = run_cli("validate " + fixture_path("corpus/two_reviewers.json"));
    CHECK(ok.code == 0);
    CHECK(ok.out.find("valid") == 0);

    CliResult bad = run_cli("validate " + fixture_path("invalid/reversed_pair.json"));
    CHECK(bad.code == 1);
    CHECK(bad.out.find("V4_ASYMMETRY") != std::string::npos);

    CliResult gone = run_cli("validate /no/such/file.json");
    CHECK(gone.code == 2);

    CliResult json = run_cli("validate --json " + fixture_path("invalid/reversed_pair.json"));
    CHECK(json.code == 1);
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["valid"] == false);
    CHECK(!doc["errors"].empty());
}

TEST_CASE("cli solve") {
    CliResult res = run_cli("solve --json " + fixture_path("corpus/two_reviewers.json"));
    CHECK(res.code == 0);
    auto doc = nlohmann::json::parse(res.out);
    CHECK(doc["acceptable"] == true);
    CHECK(doc["grounded"] ==
          nlohmann::json::array({"Author.0.0", "Author.2.1", "Author.2.2"}));
    CHECK(doc["per_party_accepted"]["Author"] == 3);
    CHECK(doc["per_party_accepted"]["Reviewer_1"] == 0);

    // schema-stable across runs
    CliResult again = run_cli("solve --json " + fixture_path("corpus/two_reviewers.json"));
    CHECK(again.out == res.out);

    CliResult human = run_cli("solve " + fixture_path("corpus/root_only.json"));
    CHECK(human.code == 0);
    CHECK(human.out.find("verdict: acceptable") != std::string::npos);

    CliResult rejected =
        run_cli("solve --verdict-exit " + fixture_path("corpus/unanswered.json"));
    CHECK(rejected.code == 4);
    CHECK(rejected.out.find("verdict: unacceptable") != std::string::npos);
    CliResult plain = run_cli("solve " + fixture_path("corpus/unanswered.json"));
    CHECK(plain.code == 0); // verdict exit is opt-in

    CliResult gated = run_cli("solve " + fixture_path("invalid/reversed_pair.json"));
    CHECK(gated.code == 1);
    CHECK(gated.err.find("V4_ASYMMETRY") != std::string::npos);
    CliResult forced = run_cli("solve --force " + fixture_path("invalid/reversed_pair.json"));
    CHECK(forced.code == 0);
}

TEST_CASE("cli classify") {
    CliResult tree = run_cli("classify " + fixture_path("corpus/two_reviewers.json"));
    CHECK(tree.code == 0);
    CHECK(tree.out.find("owl:Thing") == 0);
    CHECK(tree.out.find("onto#AuthorAdmissible - (onto#author_2_1, onto#author_2_2, "
                        "onto#author_0_0)") != std::string::npos);
    CHECK(tree.out.find("onto#Reviewer_1ConflictFree - (onto#reviewer_1_1_1)") !=
          std::string::npos);

    CliResult compared =
        run_cli("classify --compare " + fixture_path("corpus/deep_chain.json"));
    CHECK(compared.code == 0);
    CHECK(compared.out.find("divergence: DIVERGES") != std::string::npos);
    CHECK(compared.out.find("only in classification: Author.0.0") != std::string::npos);

    CliResult agree = run_cli("classify --compare " + fixture_path("corpus/two_reviewers.json"));
    CHECK(agree.out.find("divergence: none") != std::string::npos);

    CliResult json =
        run_cli("classify --json --compare " + fixture_path("corpus/deep_chain.json"));
    auto doc = nlohmann::json::parse(json.out);
    CHECK(doc["compare"]["diverges"] == true);
    CHECK(doc["compare"]["only_owl"] == nlohmann::json::array({"Author.0.0"}));
}

TEST_CASE("cli export-owl") {
    auto out = scratch_dir() / "export.omn";
    CliResult res = run_cli("export-owl " + fixture_path("corpus/two_reviewers.json") + " -o " +
                            out.string());
    CHECK(res.code == 0);
    CHECK(read_file(out.string()) == read_file(fixture_path("golden/two_reviewers.omn")));

    CliResult based = run_cli("export-owl --base http://example.org/r " +
                              fixture_path("corpus/root_only.json"));
    CHECK(based.code == 0);
    CHECK(based.out.find("Class: <http://example.org/r#Author>") != std::string::npos);

    ::setenv("REVAF_BASE_IRI", "http://from.env/base", 1);
    CliResult env = run_cli("export-owl " + fixture_path("corpus/root_only.json"));
    ::unsetenv("REVAF_BASE_IRI");
    CHECK(env.out.find("Class: <http://from.env/base#Author>") != std::string::npos);
}

TEST_CASE("cli convert round-trips through the interchange format") {
    auto af_path = scratch_dir() / "two_reviewers.af";
    CliResult to_af = run_cli("convert " + fixture_path("corpus/two_reviewers.json") +
                              " --to iccma -o " + af_path.string());
    CHECK(to_af.code == 0);
    CHECK(read_file(af_path.string()) == "p af 5\n1 5\n2 5\n3 1\n4 2\n");
    std::string sidecar_path = af_path.string() + ".map.json";
    CHECK(std::filesystem::exists(sidecar_path));

    CliResult back = run_cli("convert " + af_path.string() + " --to json --sidecar " +
                             sidecar_path);
    CHECK(back.code == 0);
    revaf::ReviewFramework original =
        revaf::parse_review_json(read_file(fixture_path("corpus/two_reviewers.json")));
    for (auto& party : original.parties)
        for (auto& arg : party.arguments) arg.text.clear();
    CHECK(back.out == revaf::serialize_review_json(original));

    CliResult no_sidecar = run_cli("convert " + af_path.string() + " --to json");
    CHECK(no_sidecar.code == 3);

    CliResult bad_target =
        run_cli("convert " + af_path.string() + " --to xml");
    CHECK(bad_target.code == 3);
}

TEST_CASE("cli stats") {
    auto csv = scratch_dir() / "corpus.csv";
    auto summary = scratch_dir() / "corpus.summary.json";
    CliResult res = run_cli("stats " + fixture_path("corpus") + " --csv " + csv.string() +
                            " --summary " + summary.string());
    CHECK(res.code == 0);

    std::string csv_text = read_file(csv.string());
    CHECK(std::count(csv_text.begin(), csv_text.end(), '\n') == 5);
    CHECK(csv_text.find("two_reviewers.json,true,3,3,2,2,1,3,3,0,0,") != std::string::npos);

    auto doc = nlohmann::json::parse(read_file(summary.string()));
    CHECK(doc["count"] == 4);
    CHECK(doc["acceptability_rate"] == doctest::Approx(0.5));
    CHECK(doc["chain_len_avg"]["mean"] == doctest::Approx(2.5));

    CliResult failing = run_cli("stats " + fixture_path("invalid"));
    CHECK(failing.code == 1);

    CliResult missing = run_cli("stats /no/such/dir");
    CHECK(missing.code == 2);
}

TEST_CASE("cli synth is reproducible") {
    auto dir_a = scratch_dir() / "synth_a";
    auto dir_b = scratch_dir() / "synth_b";
    CliResult a = run_cli("synth --out " + dir_a.string() + " --count 3 --seed 9");
    CliResult b = run_cli("synth --out " + dir_b.string() + " --count 3 --seed 9");
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    for (int i = 1; i <= 3; ++i) {
        char name[32];
        std::snprintf(name, sizeof(name), "synth_%05d.json", i);
        CHECK(read_file((dir_a / name).string()) == read_file((dir_b / name).string()));
    }
    CliResult check = run_cli("validate " + (dir_a / "synth_00001.json").string());
    CHECK(check.code == 0);

    CliResult bad_range = run_cli("synth --out " + dir_a.string() + " --reviewers 5:1");
    CHECK(bad_range.code == 3);
}

TEST_CASE("cli usage errors") {
    CHECK(run_cli("").code == 3);
    CHECK(run_cli("frobnicate x").code == 3);
    CHECK(run_cli("solve").code == 3); // missing file argument
}

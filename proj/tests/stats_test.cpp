#include <doctest.h>

#include <cmath>

#include "revaf/stats.hpp"
#include "revaf/synth.hpp"
#include "revaf/validate.hpp"
#include "support.hpp"

using namespace revaf;
using testutil::fixture_path;
using testutil::read_file;

namespace {

ReviewFramework load(const std::string& name) {
    return parse_review_json(read_file(fixture_path(name)));
}

StatsRecord stats_of(const std::string& name) {
    ReviewFramework rf = load(name);
    return framework_stats(rf, resolve(rf), 0.0);
}

} // namespace

TEST_CASE("framework_stats on the two-reviewer fixture") {
    StatsRecord rec = stats_of("corpus/two_reviewers.json");
    CHECK(rec.acceptable);
    CHECK(rec.parties == 3);
    CHECK(rec.author_args_incl_root == 3);
    CHECK(rec.author_args_excl_root == 2);
    CHECK(rec.reviewer_args_total == 2);
    CHECK(rec.reviewer_args_avg == doctest::Approx(1.0));
    CHECK(rec.chain_len_avg == doctest::Approx(3.0));
    CHECK(rec.author_accepted == 3);
    CHECK(rec.reviewer_accepted_total == 0);
    CHECK(rec.reviewer_accepted_avg == doctest::Approx(0.0));
}

TEST_CASE("framework_stats on the degenerate fixtures") {
    StatsRecord root_only = stats_of("corpus/root_only.json");
    CHECK(root_only.acceptable);
    CHECK(root_only.parties == 1);
    CHECK(root_only.author_args_incl_root == 1);
    CHECK(root_only.author_args_excl_root == 0);
    CHECK(root_only.reviewer_args_avg == 0.0); // single-party convention
    CHECK(root_only.chain_len_avg == doctest::Approx(1.0));

    StatsRecord chain = stats_of("corpus/deep_chain.json");
    CHECK_FALSE(chain.acceptable);
    CHECK(chain.chain_len_avg == doctest::Approx(4.0));
    CHECK(chain.reviewer_accepted_total == 2);

    StatsRecord pending = stats_of("corpus/unanswered.json");
    CHECK_FALSE(pending.acceptable);
    CHECK(pending.chain_len_avg == doctest::Approx(2.0));
    CHECK(pending.reviewer_accepted_total == 1);
    CHECK(pending.author_accepted == 0);
}

TEST_CASE("framework_stats rejects a mismatched resolution") {
    ReviewFramework rf = load("corpus/two_reviewers.json");
    Resolution res = resolve(rf);

    Resolution flipped = res;
    flipped.acceptable = false;
    CHECK_THROWS_AS(framework_stats(rf, flipped, 0.0), DomainError);

    Resolution alien = res;
    alien.grounded.push_back({"Ghost", 4, 2});
    CHECK_THROWS_AS(framework_stats(rf, alien, 0.0), DomainError);
}

TEST_CASE("corpus_stats mean and sample deviation") {
    StatsRecord a = stats_of("corpus/two_reviewers.json"); // 3 parties
    StatsRecord b = stats_of("corpus/root_only.json");     // 1 party
    CorpusStats cs = corpus_stats({a, b});
    CHECK(cs.count == 2);
    CHECK(cs.parties.mean == doctest::Approx(2.0));
    CHECK(cs.parties.stddev == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
    CHECK(cs.acceptability_rate == doctest::Approx(1.0));

    CorpusStats single = corpus_stats({a});
    CHECK(single.parties.stddev == 0.0); // n = 1 convention

    CHECK_THROWS_AS(corpus_stats({}), DomainError);
}

TEST_CASE("corpus_stats acceptability arithmetic at survey scale") {
    std::vector<StatsRecord> records(88);
    for (std::size_t i = 0; i < records.size(); ++i) records[i].acceptable = i < 47;
    CorpusStats cs = corpus_stats(records);
    CHECK(cs.acceptability_rate == doctest::Approx(47.0 / 88.0).epsilon(1e-15));
    CHECK(cs.acceptability_rate == doctest::Approx(0.534).epsilon(1e-3));
}

TEST_CASE("run_corpus walks the bundled mini-corpus deterministically") {
    CorpusRunResult run = run_corpus(fixture_path("corpus"), 1);
    CHECK(run.failures.empty());
    REQUIRE(run.entries.size() == 4);
    CHECK(run.entries[0].name == "deep_chain.json");
    CHECK(run.entries[1].name == "root_only.json");
    CHECK(run.entries[2].name == "two_reviewers.json");
    CHECK(run.entries[3].name == "unanswered.json");
    CHECK(run.entries[2].record.chain_len_avg == doctest::Approx(3.0));

    CorpusRunResult threaded = run_corpus(fixture_path("corpus"), 4);
    REQUIRE(threaded.entries.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        CHECK(threaded.entries[i].name == run.entries[i].name);
        CHECK(threaded.entries[i].record.chain_len_avg ==
              doctest::Approx(run.entries[i].record.chain_len_avg));
    }

    std::vector<StatsRecord> records;
    for (const auto& e : run.entries) records.push_back(e.record);
    CorpusStats cs = corpus_stats(records);
    CHECK(cs.acceptability_rate == doctest::Approx(0.5));
    CHECK(cs.chain_len_avg.mean == doctest::Approx(2.5));
}

TEST_CASE("run_corpus collects per-file failures instead of aborting") {
    CorpusRunResult run = run_corpus(fixture_path("invalid"), 1);
    CHECK(run.entries.empty());
    REQUIRE(run.failures.size() == 1);
    CHECK(run.failures[0].first == "reversed_pair.json");
    CHECK(run.failures[0].second.find("V4_ASYMMETRY") != std::string::npos);
}

TEST_CASE("stats CSV layout") {
    CorpusRunResult run = run_corpus(fixture_path("corpus"), 1);
    std::string csv = write_stats_csv(run.entries);
    CHECK(csv.rfind("name,acceptable,parties,author_args_incl_root,author_args_excl_root,"
                    "reviewer_args_total,reviewer_args_avg,chain_len_avg,author_accepted,"
                    "reviewer_accepted_total,reviewer_accepted_avg,solve_seconds\n",
                    0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 5); // header + 4 rows
    CHECK(csv.find("two_reviewers.json,true,3,3,2,2,1,3,3,0,0,") != std::string::npos);
}

TEST_CASE("stats summary JSON carries every field") {
    CorpusRunResult run = run_corpus(fixture_path("corpus"), 1);
    std::vector<StatsRecord> records;
    for (const auto& e : run.entries) records.push_back(e.record);
    std::string summary = write_stats_summary(corpus_stats(records));
    for (const char* field :
         {"\"count\"", "\"acceptability_rate\"", "\"parties\"", "\"author_args_incl_root\"",
          "\"author_args_excl_root\"", "\"reviewer_args_total\"", "\"reviewer_args_avg\"",
          "\"chain_len_avg\"", "\"author_accepted\"", "\"reviewer_accepted_total\"",
          "\"reviewer_accepted_avg\"", "\"solve_seconds\"", "\"mean\"", "\"stddev\""})
        CHECK(summary.find(field) != std::string::npos);
}

TEST_CASE("generate_synthetic is deterministic per seed") {
    SynthParams params;
    params.seed = 42;
    CHECK(serialize_review_json(generate_synthetic(params)) ==
          serialize_review_json(generate_synthetic(params)));

    SynthParams other = params;
    other.seed = 43;
    CHECK(serialize_review_json(generate_synthetic(params)) !=
          serialize_review_json(generate_synthetic(other)));
}

TEST_CASE("generate_synthetic verdict extremes") {
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        SynthParams all_answered;
        all_answered.seed = seed;
        all_answered.response_probability = 1.0;
        all_answered.counter_response_probability = 0.0;
        CHECK(resolve(generate_synthetic(all_answered)).acceptable);

        SynthParams silent_authors;
        silent_authors.seed = seed;
        silent_authors.reviewer_count_min = 1; // at least one reviewer argument exists
        silent_authors.response_probability = 0.0;
        CHECK_FALSE(resolve(generate_synthetic(silent_authors)).acceptable);
    }
}

TEST_CASE("generate_synthetic rejects bad parameters") {
    SynthParams params;
    params.reviewer_count_min = -1;
    CHECK_THROWS_AS(generate_synthetic(params), DomainError);

    params = {};
    params.reviewer_count_min = 3;
    params.reviewer_count_max = 1;
    CHECK_THROWS_AS(generate_synthetic(params), DomainError);

    params = {};
    params.reviewer_args_min = 0;
    CHECK_THROWS_AS(generate_synthetic(params), DomainError);

    params = {};
    params.response_probability = 1.5;
    CHECK_THROWS_AS(generate_synthetic(params), DomainError);

    params = {};
    params.counter_response_probability = -0.1;
    CHECK_THROWS_AS(generate_synthetic(params), DomainError);

    params = {};
    params.max_rounds = 0;
    CHECK_THROWS_AS(generate_synthetic(params), DomainError);
}

TEST_CASE("property: synthetic frameworks respect the documented invariants") {
    for (std::uint64_t seed = 0; seed < 300; ++seed) {
        SynthParams params;
        params.seed = seed + 77000;
        params.max_rounds = 1 + int(seed % 3);
        params.response_probability = (seed % 11) / 10.0;
        params.counter_response_probability = (seed % 7) / 6.0;
        ReviewFramework rf = generate_synthetic(params);

        REQUIRE(validate(rf).is_valid());

        Resolution res = resolve(rf);
        StatsRecord rec = framework_stats(rf, res, 0.0);
        CHECK(rec.author_args_incl_root == rec.author_args_excl_root + 1);
        CHECK(rec.chain_len_avg >= 1.0);
        CHECK(rec.chain_len_avg <= double(params.max_rounds + 1));
    }
}

#include <doctest.h>

#include <algorithm>

#include "revaf/grounded.hpp"
#include "revaf/iccma.hpp"
#include "revaf/validate.hpp"
#include "support.hpp"

using namespace revaf;
using testutil::fixture_path;
using testutil::make_framework;
using testutil::random_framework;
using testutil::read_file;

TEST_CASE("parse_iccma reads the five-node document") {
    IccmaFramework doc = parse_iccma(read_file(fixture_path("iccma/five_node.af")));
    const Framework& f = doc.framework;
    CHECK(f.arguments() == std::vector<std::string>{"1", "2", "3", "4", "5"});
    CHECK(f.attack_count() == 5);
    CHECK(f.attack_exists("1", "2"));
    CHECK(f.attack_exists("2", "4"));
    CHECK(f.attack_exists("4", "5"));
    CHECK(f.attack_exists("5", "4"));
    CHECK(f.attack_exists("5", "5"));
    CHECK(doc.index_map == f.arguments());
}

TEST_CASE("parse_iccma edge cases") {
    CHECK(parse_iccma("p af 0\n").framework.size() == 0);
    CHECK(parse_iccma("# intro\n\np af 1\n").framework.size() == 1);
    CHECK(parse_iccma("p af 2\n# comment between edges\n1 2\n").framework.attack_count() == 1);
    // windows endings tolerated
    CHECK(parse_iccma("p af 2\r\n1 2\r\n").framework.attack_count() == 1);
}

TEST_CASE("parse_iccma reports positions on malformed input") {
    try {
        parse_iccma("p af 2\n3 1\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
        CHECK(std::string(e.what()).find("out of range") != std::string::npos);
    }

    CHECK_THROWS_AS(parse_iccma(""), ParseError);             // missing header
    CHECK_THROWS_AS(parse_iccma("1 2\n"), ParseError);        // edge before header
    CHECK_THROWS_AS(parse_iccma("p af 1\np af 1\n"), ParseError); // duplicate header
    CHECK_THROWS_AS(parse_iccma("p af x\n"), ParseError);     // non-integer count
    CHECK_THROWS_AS(parse_iccma("p af 2\n1 two\n"), ParseError);
    CHECK_THROWS_AS(parse_iccma("p af 2\n1 2 3\n"), ParseError);
    CHECK_THROWS_AS(parse_iccma("p cnf 2\n"), ParseError);
}

TEST_CASE("emit_iccma matches the five-node fixture byte for byte") {
    Framework f = make_framework({"a", "b", "c", "d", "e"},
                                 {{"a", "b"}, {"b", "d"}, {"d", "e"}, {"e", "d"}, {"e", "e"}});
    CHECK(emit_iccma(f) == read_file(fixture_path("iccma/five_node.af")));
    CHECK(emit_iccma(Framework{}) == "p af 0\n");
}

TEST_CASE("property: iccma round-trip is an isomorphism that commutes with solving") {
    SplitMix64 rng(512);
    for (int trial = 0; trial < 1000; ++trial) {
        Framework f = random_framework(rng);
        IccmaFramework back = parse_iccma(emit_iccma(f));
        REQUIRE(back.framework.size() == f.size());
        REQUIRE(back.framework.attack_count() == f.attack_count());
        for (const auto& [a, b] : f.attacks())
            CHECK(back.framework.attack_exists(a, b)); // indices align by construction

        // grounded extension maps across the index map
        KeySet original = grounded_extension(f);
        KeySet mapped;
        for (const auto& key : grounded_extension(back.framework))
            mapped.push_back(f.key_of(std::stoul(key) - 1));
        CHECK(testutil::sorted(original) == testutil::sorted(mapped));
    }
}

TEST_CASE("review_to_iccma exports text plus sidecar") {
    ReviewFramework rf = parse_review_json(read_file(fixture_path("corpus/two_reviewers.json")));
    IccmaExport exported = review_to_iccma(rf);
    CHECK(exported.text == "p af 5\n1 5\n2 5\n3 1\n4 2\n");
    CHECK(exported.sidecar.find("\"1\": \"Reviewer_1.1.1\"") != std::string::npos);
    CHECK(exported.sidecar.find("\"5\": \"Author.0.0\"") != std::string::npos);

    ReviewFramework root_only =
        parse_review_json(read_file(fixture_path("corpus/root_only.json")));
    CHECK(review_to_iccma(root_only).text == "p af 1\n");
}

TEST_CASE("review_from_iccma reconstructs everything but the texts") {
    for (const char* name : {"corpus/two_reviewers.json", "corpus/root_only.json",
                             "corpus/deep_chain.json", "corpus/unanswered.json"}) {
        ReviewFramework rf = parse_review_json(read_file(fixture_path(name)));
        IccmaExport exported = review_to_iccma(rf);
        ReviewFramework back = review_from_iccma(exported.text, exported.sidecar);

        ReviewFramework expected = rf;
        for (auto& party : expected.parties)
            for (auto& arg : party.arguments) arg.text.clear();
        CHECK(back == expected);
    }
}

TEST_CASE("review_from_iccma rejects inconsistent sidecars") {
    CHECK_THROWS_AS(review_from_iccma("p af 1\n", "not json"), ParseError);
    CHECK_THROWS_AS(review_from_iccma("p af 1\n", "{}"), ParseError); // missing index
    CHECK_THROWS_AS(review_from_iccma("p af 1\n", R"({"2": "Author.0.0"})"), ParseError);
    CHECK_THROWS_AS(review_from_iccma("p af 1\n", R"({"1": "Author.1.1"})"), ParseError); // no root
    CHECK_THROWS_AS(
        review_from_iccma("p af 2\n", R"({"1": "Author.0.0", "2": "Author.0.0"})"), ParseError);
}

TEST_CASE("review_to_iccma gates on validation") {
    ReviewFramework rf =
        parse_review_json(read_file(fixture_path("invalid/reversed_pair.json")));
    CHECK_THROWS_AS(review_to_iccma(rf), ValidationGateError);
}

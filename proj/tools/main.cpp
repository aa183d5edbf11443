#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>

#include "revaf/iccma.hpp"
#include "revaf/owl.hpp"
#include "revaf/resolve.hpp"
#include "revaf/review.hpp"
#include "revaf/stats.hpp"
#include "revaf/synth.hpp"
#include "revaf/validate.hpp"

using nlohmann::ordered_json;

namespace {

// Exit codes: 0 ok, 1 validation failure, 2 parse/IO failure, 3 bad
// arguments, 4 unacceptable verdict under --verdict-exit.
constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitIo = 2;
constexpr int kExitUsage = 3;
constexpr int kExitRejected = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw revaf::ParseError("cannot open '" + path + "'");
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw revaf::ParseError("cannot write '" + path + "'");
    out << content;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty())
        std::cout << content;
    else
        write_file(out_path, content);
}

std::string default_base() {
    const char* env = std::getenv("REVAF_BASE_IRI");
    return env && *env ? env : revaf::kDefaultOntologyBase;
}

ordered_json findings_json(const std::vector<revaf::Finding>& findings) {
    ordered_json arr = ordered_json::array();
    for (const auto& f : findings)
        arr.push_back({{"code", revaf::check_code(f.code)},
                       {"message", f.message},
                       {"ids", f.ids}});
    return arr;
}

ordered_json report_json(const revaf::ValidationReport& report) {
    ordered_json doc;
    doc["valid"] = report.is_valid();
    doc["errors"] = findings_json(report.errors);
    doc["warnings"] = findings_json(report.warnings);
    doc["notes"] = report.notes;
    return doc;
}

void print_report(const revaf::ValidationReport& report) {
    std::cout << (report.is_valid() ? "valid" : "invalid") << " (" << report.errors.size()
              << " errors, " << report.warnings.size() << " warnings)\n";
    for (const auto& f : report.errors)
        std::cout << "  error [" << revaf::check_code(f.code) << "] " << f.message << "\n";
    for (const auto& f : report.warnings)
        std::cout << "  warning [" << revaf::check_code(f.code) << "] " << f.message << "\n";
    for (const auto& n : report.notes) std::cout << "  note: " << n << "\n";
}

int cmd_validate(const std::string& path, bool as_json) {
    revaf::ReviewFramework rf = revaf::parse_review_json(read_file(path));
    revaf::ValidationReport report = revaf::validate(rf);
    if (as_json)
        std::cout << report_json(report).dump(2) << "\n";
    else
        print_report(report);
    return report.is_valid() ? kExitOk : kExitInvalid;
}

int cmd_solve(const std::string& path, bool as_json, bool verdict_exit, bool force) {
    revaf::ReviewFramework rf = revaf::parse_review_json(read_file(path));
    revaf::Resolution res = revaf::resolve(rf, force);

    if (as_json) {
        ordered_json doc;
        doc["acceptable"] = res.acceptable;
        ordered_json grounded = ordered_json::array();
        for (const auto& id : res.grounded) grounded.push_back(id.str());
        doc["grounded"] = std::move(grounded);
        ordered_json per_party = ordered_json::object();
        for (const auto& [party, count] : res.per_party_accepted) per_party[party] = count;
        doc["per_party_accepted"] = std::move(per_party);
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "verdict: " << (res.acceptable ? "acceptable" : "unacceptable") << "\n";
        std::cout << "grounded extension (" << res.grounded.size() << "):\n";
        for (const auto& id : res.grounded) std::cout << "  " << id.str() << "\n";
        std::cout << "accepted per party:\n";
        for (const auto& [party, count] : res.per_party_accepted)
            std::cout << "  " << party << ": " << count << "\n";
    }
    if (verdict_exit && !res.acceptable) return kExitRejected;
    return kExitOk;
}

void print_classification_tree(const revaf::ReviewFramework& rf,
                               const revaf::ClassificationResult& result,
                               const std::string& base) {
    // Reasoner-log style: every individual shown at its most specific class.
    revaf::OwlDocument doc = revaf::emit_owl(rf, base);
    std::map<std::string, std::string> local;
    for (const auto& [id, name] : doc.iri_map) local.emplace(id.str(), name);

    auto members = [&](const std::vector<revaf::ReviewArgumentId>& ids) {
        std::string out;
        for (const auto& id : ids) {
            if (!out.empty()) out += ", ";
            out += base + "#" + local.at(id.str());
        }
        return out.empty() ? std::string() : " - (" + out + ")";
    };

    std::cout << "owl:Thing\n";
    for (const auto& pc : result.parties) {
        std::vector<revaf::ReviewArgumentId> at_party, at_cf;
        const auto* party = rf.find_party(pc.party);
        for (const auto& arg : party->arguments) {
            bool cf = std::find(pc.conflict_free.begin(), pc.conflict_free.end(), arg.id) !=
                      pc.conflict_free.end();
            bool adm = std::find(pc.admissible.begin(), pc.admissible.end(), arg.id) !=
                       pc.admissible.end();
            if (!cf)
                at_party.push_back(arg.id);
            else if (!adm)
                at_cf.push_back(arg.id);
        }
        std::string cls = base + "#" + pc.party;
        std::cout << "   " << cls << members(at_party) << "\n";
        std::cout << "      " << cls << "ConflictFree" << members(at_cf) << "\n";
        std::cout << "         " << cls << "Admissible" << members(pc.admissible) << "\n";
    }
}

ordered_json ids_json(const std::vector<revaf::ReviewArgumentId>& ids) {
    ordered_json arr = ordered_json::array();
    for (const auto& id : ids) arr.push_back(id.str());
    return arr;
}

int cmd_classify(const std::string& path, bool as_json, bool compare, const std::string& base) {
    revaf::ReviewFramework rf = revaf::parse_review_json(read_file(path));
    revaf::ClassificationResult result = revaf::classify_parties(rf);

    if (as_json) {
        ordered_json doc;
        ordered_json parties = ordered_json::array();
        for (const auto& pc : result.parties)
            parties.push_back({{"party", pc.party},
                               {"conflict_free", ids_json(pc.conflict_free)},
                               {"admissible", ids_json(pc.admissible)}});
        doc["parties"] = std::move(parties);
        if (compare) {
            revaf::DivergenceReport div = revaf::compare_with_grounded(rf);
            doc["compare"] = {{"diverges", div.diverges},
                              {"owl_union", ids_json(div.owl_union)},
                              {"grounded", ids_json(div.grounded)},
                              {"only_owl", ids_json(div.only_owl)},
                              {"only_grounded", ids_json(div.only_grounded)}};
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        print_classification_tree(rf, result, base);
        if (compare) {
            revaf::DivergenceReport div = revaf::compare_with_grounded(rf);
            if (!div.diverges) {
                std::cout << "divergence: none (classification union equals grounded extension)\n";
            } else {
                std::cout << "divergence: DIVERGES\n";
                auto list = [](const std::vector<revaf::ReviewArgumentId>& ids) {
                    std::string out;
                    for (const auto& id : ids) {
                        if (!out.empty()) out += ", ";
                        out += id.str();
                    }
                    return out.empty() ? std::string("(none)") : out;
                };
                std::cout << "  only in classification: " << list(div.only_owl) << "\n";
                std::cout << "  only in grounded: " << list(div.only_grounded) << "\n";
            }
        }
    }
    return kExitOk;
}

int cmd_export_owl(const std::string& path, const std::string& out_path,
                   const std::string& base) {
    revaf::ReviewFramework rf = revaf::parse_review_json(read_file(path));
    revaf::OwlDocument doc = revaf::emit_owl(rf, base);
    emit(out_path, doc.text);
    return kExitOk;
}

int cmd_convert(const std::string& path, const std::string& to, const std::string& out_path,
                std::string sidecar_path) {
    if (to == "iccma") {
        revaf::ReviewFramework rf = revaf::parse_review_json(read_file(path));
        revaf::IccmaExport exported = revaf::review_to_iccma(rf);
        if (sidecar_path.empty() && !out_path.empty()) sidecar_path = out_path + ".map.json";
        emit(out_path, exported.text);
        if (!sidecar_path.empty()) write_file(sidecar_path, exported.sidecar);
        return kExitOk;
    }
    if (to == "json") {
        if (sidecar_path.empty())
            throw revaf::DomainError("converting to json requires --sidecar <map file>");
        revaf::ReviewFramework rf =
            revaf::review_from_iccma(read_file(path), read_file(sidecar_path));
        emit(out_path, revaf::serialize_review_json(rf));
        return kExitOk;
    }
    throw revaf::DomainError("unknown conversion target '" + to + "' (expected json or iccma)");
}

int cmd_stats(const std::string& dir, const std::string& csv_path,
              const std::string& summary_path, unsigned jobs) {
    if (!std::filesystem::is_directory(dir))
        throw revaf::ParseError("'" + dir + "' is not a directory");
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    revaf::CorpusRunResult run = revaf::run_corpus(dir, jobs);

    for (const auto& [name, reason] : run.failures)
        std::cerr << "stats: skipping " << name << ": " << reason << "\n";

    emit(csv_path, revaf::write_stats_csv(run.entries));
    if (!run.entries.empty()) {
        std::vector<revaf::StatsRecord> records;
        for (const auto& e : run.entries) records.push_back(e.record);
        std::string summary = revaf::write_stats_summary(revaf::corpus_stats(records));
        if (!summary_path.empty())
            write_file(summary_path, summary);
        else if (!csv_path.empty())
            std::cout << summary;
    }
    std::cerr << "stats: " << run.entries.size() << " frameworks, " << run.failures.size()
              << " failures\n";
    return run.failures.empty() ? kExitOk : kExitInvalid;
}

std::pair<int, int> parse_range(const std::string& text) {
    auto colon = text.find(':');
    try {
        if (colon == std::string::npos) {
            int v = std::stoi(text);
            return {v, v};
        }
        return {std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
    } catch (const std::exception&) {
        throw revaf::DomainError("range '" + text + "' must be '<n>' or '<lo>:<hi>'");
    }
}

int cmd_synth(const std::string& out_dir, unsigned count, std::uint64_t seed,
              const std::string& reviewers, const std::string& args, double response_prob,
              double counter_prob, int max_rounds) {
    revaf::SynthParams params;
    params.seed = seed;
    std::tie(params.reviewer_count_min, params.reviewer_count_max) = parse_range(reviewers);
    std::tie(params.reviewer_args_min, params.reviewer_args_max) = parse_range(args);
    params.response_probability = response_prob;
    params.counter_response_probability = counter_prob;
    params.max_rounds = max_rounds;

    std::filesystem::create_directories(out_dir);
    for (unsigned i = 1; i <= count; ++i) {
        params.seed = seed + i - 1;
        revaf::ReviewFramework rf = revaf::generate_synthetic(params);
        char name[32];
        std::snprintf(name, sizeof(name), "synth_%05u.json", i);
        write_file((std::filesystem::path(out_dir) / name).string(),
                   revaf::serialize_review_json(rf));
    }
    std::cerr << "synth: wrote " << count << " frameworks to " << out_dir << "\n";
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Peer-review dispute resolution with abstract argumentation frameworks"};
    app.require_subcommand(1);

    std::string path, out_path, sidecar_path, to, base = default_base();
    bool as_json = false, verdict_exit = false, force = false, compare = false;

    auto* validate_cmd = app.add_subcommand("validate", "Check the structural rules of a review framework");
    validate_cmd->add_option("file", path, "review framework JSON")->required();
    validate_cmd->add_flag("--json", as_json, "machine-readable report");

    auto* solve_cmd = app.add_subcommand("solve", "Resolve the dispute with the grounded semantics");
    solve_cmd->add_option("file", path, "review framework JSON")->required();
    solve_cmd->add_flag("--json", as_json, "machine-readable resolution");
    solve_cmd->add_flag("--verdict-exit", verdict_exit, "exit 4 when the manuscript is not acceptable");
    solve_cmd->add_flag("--force", force, "solve even if validation fails");

    auto* classify_cmd = app.add_subcommand("classify", "Per-party conflict-free/admissible classification");
    classify_cmd->add_option("file", path, "review framework JSON")->required();
    classify_cmd->add_flag("--json", as_json, "machine-readable classification");
    classify_cmd->add_flag("--compare", compare, "compare the classification with the grounded extension");

    auto* export_cmd = app.add_subcommand("export-owl", "Emit the Manchester-syntax ontology");
    export_cmd->add_option("file", path, "review framework JSON")->required();
    export_cmd->add_option("-o,--output", out_path, "output .omn file (stdout if omitted)");
    export_cmd->add_option("--base", base, "ontology base IRI (default: $REVAF_BASE_IRI or 'onto')");

    auto* convert_cmd = app.add_subcommand("convert", "Convert between the JSON schema and the ICCMA format");
    convert_cmd->add_option("file", path, "input file")->required();
    convert_cmd->add_option("--to", to, "target format: json or iccma")->required();
    convert_cmd->add_option("-o,--output", out_path, "output file (stdout if omitted)");
    convert_cmd->add_option("--sidecar", sidecar_path,
                            "index-to-id map (written for --to iccma, required for --to json)");

    std::string csv_path, summary_path;
    unsigned jobs = 0;
    auto* stats_cmd = app.add_subcommand("stats", "Resolve a directory of frameworks and report statistics");
    stats_cmd->add_option("dir", path, "directory of review framework .json files")->required();
    stats_cmd->add_option("--csv", csv_path, "CSV output file (stdout if omitted)");
    stats_cmd->add_option("--summary", summary_path, "summary JSON output file");
    stats_cmd->add_option("--jobs", jobs, "worker threads (0 = hardware default)");

    std::string synth_dir, reviewers = "1:3", args_range = "1:3";
    unsigned synth_count = 10;
    std::uint64_t seed = 1;
    double response_prob = 0.7, counter_prob = 0.3;
    int max_rounds = 3;
    auto* synth_cmd = app.add_subcommand("synth", "Generate seeded synthetic review frameworks");
    synth_cmd->add_option("--out", synth_dir, "output directory")->required();
    synth_cmd->add_option("--count", synth_count, "number of frameworks");
    synth_cmd->add_option("--seed", seed, "base seed");
    synth_cmd->add_option("--reviewers", reviewers, "reviewer count range '<lo>:<hi>'");
    synth_cmd->add_option("--args", args_range, "arguments per reviewer range '<lo>:<hi>'");
    synth_cmd->add_option("--response-prob", response_prob, "author response probability");
    synth_cmd->add_option("--counter-prob", counter_prob, "reviewer counter-response probability");
    synth_cmd->add_option("--max-rounds", max_rounds, "deepest dialogue round generated");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (app.got_subcommand(validate_cmd)) return cmd_validate(path, as_json);
        if (app.got_subcommand(solve_cmd)) return cmd_solve(path, as_json, verdict_exit, force);
        if (app.got_subcommand(classify_cmd)) return cmd_classify(path, as_json, compare, base);
        if (app.got_subcommand(export_cmd)) return cmd_export_owl(path, out_path, base);
        if (app.got_subcommand(convert_cmd)) return cmd_convert(path, to, out_path, sidecar_path);
        if (app.got_subcommand(stats_cmd)) return cmd_stats(path, csv_path, summary_path, jobs);
        if (app.got_subcommand(synth_cmd))
            return cmd_synth(synth_dir, synth_count, seed, reviewers, args_range, response_prob,
                             counter_prob, max_rounds);
    } catch (const revaf::ValidationGateError& e) {
        std::cerr << e.what() << "\n";
        return kExitInvalid;
    } catch (const revaf::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const revaf::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::filesystem::filesystem_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitIo;
    }
    return kExitUsage;
}

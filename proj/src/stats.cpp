#include "revaf/stats.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <thread>

#include "revaf/grounded.hpp"

namespace revaf {

namespace {

// Mean node count over all maximal attack paths ending at the root.
// f(v) = number of attack paths v -> ... -> root, g(v) = their summed node
// counts; both roll up in reverse topological order. Counts are doubles so
// heavily branching DAGs cannot overflow.
double average_chain_length(const ReviewFramework& rf) {
    FrameworkMapping m = to_framework(rf);
    const Framework& f = m.framework;
    const std::size_t n = f.size();
    if (n == 0) return 1.0;

    // Kahn order: attackers before targets.
    std::vector<std::size_t> in_degree(n), order, stack;
    for (std::size_t i = 0; i < n; ++i) {
        in_degree[i] = f.attackers_of(i).size();
        if (in_degree[i] == 0) stack.push_back(i);
    }
    while (!stack.empty()) {
        std::size_t v = stack.back();
        stack.pop_back();
        order.push_back(v);
        for (std::size_t t : f.targets_of(v))
            if (--in_degree[t] == 0) stack.push_back(t);
    }

    std::size_t root = f.index_of(rf.root.str());
    std::vector<double> paths(n, 0.0), nodes(n, 0.0);
    paths[root] = 1.0;
    nodes[root] = 1.0;
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
        std::size_t v = *it;
        if (v == root) continue;
        for (std::size_t t : f.targets_of(v)) {
            paths[v] += paths[t];
            nodes[v] += nodes[t] + paths[t];
        }
    }

    double total_paths = 0.0, total_nodes = 0.0;
    for (std::size_t v = 0; v < n; ++v) {
        if (!f.attackers_of(v).empty()) continue; // not maximal
        total_paths += paths[v];
        total_nodes += nodes[v];
    }
    if (total_paths == 0.0) return 1.0;
    return total_nodes / total_paths;
}

} // namespace

StatsRecord framework_stats(const ReviewFramework& rf, const Resolution& res,
                            double solve_seconds) {
    std::set<std::string> known;
    for (const auto& party : rf.parties)
        for (const auto& arg : party.arguments) known.insert(arg.id.str());
    for (const auto& id : res.grounded)
        if (known.count(id.str()) == 0)
            throw DomainError("resolution mentions '" + id.str() +
                              "', which is not in the framework");
    bool root_in = std::find(res.grounded.begin(), res.grounded.end(), rf.root) !=
                   res.grounded.end();
    if (root_in != res.acceptable)
        throw DomainError("resolution verdict does not match its grounded set");

    StatsRecord rec;
    rec.acceptable = res.acceptable;
    rec.parties = rf.parties.size();

    const auto& authors = rf.authors_party();
    rec.author_args_incl_root = authors.arguments.size();
    rec.author_args_excl_root = authors.arguments.empty() ? 0 : authors.arguments.size() - 1;
    for (const auto& party : rf.parties)
        if (party.name != authors.name) rec.reviewer_args_total += party.arguments.size();
    rec.reviewer_args_avg =
        rec.parties > 1 ? double(rec.reviewer_args_total) / double(rec.parties - 1) : 0.0;

    rec.chain_len_avg = average_chain_length(rf);

    for (const auto& id : res.grounded) {
        if (id.party == authors.name)
            ++rec.author_accepted;
        else
            ++rec.reviewer_accepted_total;
    }
    rec.reviewer_accepted_avg =
        rec.parties > 1 ? double(rec.reviewer_accepted_total) / double(rec.parties - 1) : 0.0;
    rec.solve_seconds = solve_seconds;
    return rec;
}

namespace {

FieldStats field_stats(const std::vector<double>& values) {
    FieldStats fs;
    double sum = 0.0;
    for (double v : values) sum += v;
    fs.mean = sum / double(values.size());
    if (values.size() > 1) {
        double sq = 0.0;
        for (double v : values) sq += (v - fs.mean) * (v - fs.mean);
        fs.stddev = std::sqrt(sq / double(values.size() - 1));
    }
    return fs;
}

std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.10g", v);
    return buf;
}

std::string csv_quote(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    out += "\"";
    return out;
}

} // namespace

CorpusStats corpus_stats(const std::vector<StatsRecord>& records) {
    if (records.empty()) throw DomainError("corpus statistics need at least one record");

    CorpusStats cs;
    cs.count = records.size();
    std::size_t accepted = 0;
    for (const auto& r : records) accepted += r.acceptable ? 1 : 0;
    cs.acceptability_rate = double(accepted) / double(records.size());

    auto collect = [&](auto field) {
        std::vector<double> values;
        values.reserve(records.size());
        for (const auto& r : records) values.push_back(double(field(r)));
        return field_stats(values);
    };
    cs.parties = collect([](const StatsRecord& r) { return r.parties; });
    cs.author_args_incl_root = collect([](const StatsRecord& r) { return r.author_args_incl_root; });
    cs.author_args_excl_root = collect([](const StatsRecord& r) { return r.author_args_excl_root; });
    cs.reviewer_args_total = collect([](const StatsRecord& r) { return r.reviewer_args_total; });
    cs.reviewer_args_avg = collect([](const StatsRecord& r) { return r.reviewer_args_avg; });
    cs.chain_len_avg = collect([](const StatsRecord& r) { return r.chain_len_avg; });
    cs.author_accepted = collect([](const StatsRecord& r) { return r.author_accepted; });
    cs.reviewer_accepted_total =
        collect([](const StatsRecord& r) { return r.reviewer_accepted_total; });
    cs.reviewer_accepted_avg =
        collect([](const StatsRecord& r) { return r.reviewer_accepted_avg; });
    cs.solve_seconds = collect([](const StatsRecord& r) { return r.solve_seconds; });
    return cs;
}

CorpusRunResult run_corpus(const std::filesystem::path& dir, unsigned jobs) {
    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json")
            files.push_back(entry.path());
    std::sort(files.begin(), files.end(),
              [](const auto& a, const auto& b) { return a.filename() < b.filename(); });

    struct Slot {
        bool ok = false;
        StatsRecord record;
        std::string failure;
    };
    std::vector<Slot> slots(files.size());

    auto process = [&](std::size_t i) {
        Slot& slot = slots[i];
        try {
            std::ifstream in(files[i]);
            if (!in) throw ParseError("cannot open " + files[i].string());
            std::stringstream buffer;
            buffer << in.rdbuf();

            auto start = std::chrono::steady_clock::now();
            ReviewFramework rf = parse_review_json(buffer.str());
            Resolution res = resolve(rf);
            double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                           start)
                                 .count();
            slot.record = framework_stats(rf, res, seconds);
            slot.ok = true;
        } catch (const std::exception& e) {
            slot.failure = e.what();
        }
    };

    if (jobs <= 1 || files.size() <= 1) {
        for (std::size_t i = 0; i < files.size(); ++i) process(i);
    } else {
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i = next++; i < files.size(); i = next++) process(i);
        };
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < std::min<std::size_t>(jobs, files.size()); ++t)
            pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    CorpusRunResult result;
    for (std::size_t i = 0; i < files.size(); ++i) {
        std::string name = files[i].filename().string();
        if (slots[i].ok)
            result.entries.push_back({std::move(name), slots[i].record});
        else
            result.failures.emplace_back(std::move(name), slots[i].failure);
    }
    return result;
}

std::string write_stats_csv(const std::vector<CorpusEntry>& entries) {
    std::string out =
        "name,acceptable,parties,author_args_incl_root,author_args_excl_root,"
        "reviewer_args_total,reviewer_args_avg,chain_len_avg,author_accepted,"
        "reviewer_accepted_total,reviewer_accepted_avg,solve_seconds\n";
    for (const auto& e : entries) {
        const StatsRecord& r = e.record;
        out += csv_quote(e.name);
        out += r.acceptable ? ",true," : ",false,";
        out += std::to_string(r.parties) + ",";
        out += std::to_string(r.author_args_incl_root) + ",";
        out += std::to_string(r.author_args_excl_root) + ",";
        out += std::to_string(r.reviewer_args_total) + ",";
        out += format_double(r.reviewer_args_avg) + ",";
        out += format_double(r.chain_len_avg) + ",";
        out += std::to_string(r.author_accepted) + ",";
        out += std::to_string(r.reviewer_accepted_total) + ",";
        out += format_double(r.reviewer_accepted_avg) + ",";
        out += format_double(r.solve_seconds) + "\n";
    }
    return out;
}

std::string write_stats_summary(const CorpusStats& stats) {
    nlohmann::ordered_json doc;
    doc["count"] = stats.count;
    doc["acceptability_rate"] = stats.acceptability_rate;
    auto field = [](const FieldStats& fs) {
        return nlohmann::ordered_json{{"mean", fs.mean}, {"stddev", fs.stddev}};
    };
    doc["parties"] = field(stats.parties);
    doc["author_args_incl_root"] = field(stats.author_args_incl_root);
    doc["author_args_excl_root"] = field(stats.author_args_excl_root);
    doc["reviewer_args_total"] = field(stats.reviewer_args_total);
    doc["reviewer_args_avg"] = field(stats.reviewer_args_avg);
    doc["chain_len_avg"] = field(stats.chain_len_avg);
    doc["author_accepted"] = field(stats.author_accepted);
    doc["reviewer_accepted_total"] = field(stats.reviewer_accepted_total);
    doc["reviewer_accepted_avg"] = field(stats.reviewer_accepted_avg);
    doc["solve_seconds"] = field(stats.solve_seconds);
    return doc.dump(2) + "\n";
}

} // namespace revaf

#ifndef revaf_stats_hpp
#define revaf_stats_hpp

#include <cstddef>
#include <filesystem>
#include <string>
#include <vector>

#include "revaf/resolve.hpp"
#include "revaf/review.hpp"

namespace revaf {

// Per-framework features of a resolved dispute. The authors' argument count
// is reported both with and without the root, since conventions differ.
// chain_len_avg is the mean node count over all maximal attack paths ending
// at the root (a maximal path starts at an unattacked argument); 1 when the
// framework has no attacks.
struct StatsRecord {
    bool acceptable = false;
    std::size_t parties = 0;
    std::size_t author_args_incl_root = 0;
    std::size_t author_args_excl_root = 0;
    std::size_t reviewer_args_total = 0;
    double reviewer_args_avg = 0.0;
    double chain_len_avg = 1.0;
    std::size_t author_accepted = 0;
    std::size_t reviewer_accepted_total = 0;
    double reviewer_accepted_avg = 0.0;
    double solve_seconds = 0.0;
};

// res must be resolve(rf) for the same framework; a mismatch is a
// DomainError.
StatsRecord framework_stats(const ReviewFramework& rf, const Resolution& res,
                            double solve_seconds);

struct FieldStats {
    double mean = 0.0;
    double stddev = 0.0; // sample standard deviation, n-1 denominator; 0 for n=1
};

struct CorpusStats {
    std::size_t count = 0;
    double acceptability_rate = 0.0;
    FieldStats parties;
    FieldStats author_args_incl_root;
    FieldStats author_args_excl_root;
    FieldStats reviewer_args_total;
    FieldStats reviewer_args_avg;
    FieldStats chain_len_avg;
    FieldStats author_accepted;
    FieldStats reviewer_accepted_total;
    FieldStats reviewer_accepted_avg;
    FieldStats solve_seconds;
};

// Mean and sample standard deviation per feature; empty input is a
// DomainError.
CorpusStats corpus_stats(const std::vector<StatsRecord>& records);

struct CorpusEntry {
    std::string name; // file name, report ordering key
    StatsRecord record;
};

struct CorpusRunResult {
    std::vector<CorpusEntry> entries;               // sorted by name
    std::vector<std::pair<std::string, std::string>> failures; // name -> reason
};

// Resolves every *.json framework under dir. Files are processed with up to
// `jobs` worker threads; the result is ordered by file name, so the output
// is independent of scheduling. Per-file parse/validation problems land in
// failures instead of aborting the batch.
CorpusRunResult run_corpus(const std::filesystem::path& dir, unsigned jobs = 1);

// CSV with a fixed header: name,acceptable,parties,author_args_incl_root,
// author_args_excl_root,reviewer_args_total,reviewer_args_avg,chain_len_avg,
// author_accepted,reviewer_accepted_total,reviewer_accepted_avg,solve_seconds
std::string write_stats_csv(const std::vector<CorpusEntry>& entries);

// CorpusStats as a JSON object (count, acceptability_rate, per-field
// mean/stddev).
std::string write_stats_summary(const CorpusStats& stats);

} // namespace revaf

#endif

// Internal: flat index-level view of a ReviewFramework shared by validate()
// and resolve(). Everything lives in a handful of contiguous arrays so that
// resolving corpus-scale disputes stays memory-lean; canonical id strings
// materialize only inside findings.

#ifndef revaf_src_analyze_hpp
#define revaf_src_analyze_hpp

#include <algorithm>
#include <cstdint>
#include <span>
#include <vector>

#include "revaf/grounded.hpp"
#include "revaf/review.hpp"
#include "revaf/validate.hpp"

namespace revaf::detail {

// Sanitized dispute graph: first occurrence of every declared id, in
// document order, and the attack edges whose endpoints exist. The id
// pointers reference the ReviewFramework passed to analyze(), which must
// outlive this object.
class DisputeGraph {
public:
    static constexpr std::uint32_t npos = UINT32_MAX;

    std::vector<const ReviewArgumentId*> args;              // declaration order
    std::vector<std::pair<std::uint32_t, std::uint32_t>> edges; // duplicates kept
    std::uint32_t root = npos;

    std::uint32_t size() const { return static_cast<std::uint32_t>(args.size()); }

    // Builds the deduplicated edge set and CSR adjacency; call once after
    // args/edges are final.
    void finalize();

    bool has_edge(std::uint32_t from, std::uint32_t to) const {
        return std::binary_search(edge_set_.begin(), edge_set_.end(), pack(from, to));
    }

    std::span<const std::uint32_t> targets_of(std::uint32_t i) const {
        return {out_flat_.data() + out_offsets_[i], out_offsets_[i + 1] - out_offsets_[i]};
    }
    std::span<const std::uint32_t> attackers_of(std::uint32_t i) const {
        return {in_flat_.data() + in_offsets_[i], in_offsets_[i + 1] - in_offsets_[i]};
    }

    bool is_acyclic() const;
    std::vector<Label> grounded_labels() const;

private:
    static std::uint64_t pack(std::uint32_t a, std::uint32_t b) {
        return (std::uint64_t(a) << 32) | b;
    }

    std::vector<std::uint64_t> edge_set_; // sorted unique packed edges
    std::vector<std::uint32_t> out_offsets_, out_flat_;
    std::vector<std::uint32_t> in_offsets_, in_flat_;
};

struct Analysis {
    ValidationReport report;
    DisputeGraph graph;
};

// Runs every structural check, collect-all, and returns the sanitized graph
// the checks ran on.
Analysis analyze(const ReviewFramework& rf);

} // namespace revaf::detail

#endif

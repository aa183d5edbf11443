#ifndef revaf_iccma_hpp
#define revaf_iccma_hpp

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "revaf/af.hpp"
#include "revaf/review.hpp"

namespace revaf {

// Line-oriented text format: header "p af <n>", then one "<i> <j>" attack
// per line with 1-based indices. '#' comment lines and blank lines are
// tolerated on input and never emitted.

struct IccmaFramework {
    Framework framework;          // argument keys "1".."n"
    std::vector<std::string> index_map; // position i -> key of argument i+1
};

IccmaFramework parse_iccma(const std::string& text);

// Indices follow the framework's insertion order; edges keep insertion
// order; LF line endings.
std::string emit_iccma(const Framework& f);

struct IccmaExport {
    std::string text;    // ICCMA document
    std::string sidecar; // JSON object {"1": "<canonical id>", ...}
};

// Structure-only projection of a valid review framework; party, round,
// number and text survive only through the sidecar's canonical ids (texts
// are lost outright).
IccmaExport review_to_iccma(const ReviewFramework& rf);

// Rebuilds the review framework from an ICCMA document and its sidecar.
// Argument texts come back empty; everything else is restored.
ReviewFramework review_from_iccma(const std::string& text, const std::string& sidecar);

} // namespace revaf

#endif

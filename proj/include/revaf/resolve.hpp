#ifndef revaf_resolve_hpp
#define revaf_resolve_hpp

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "revaf/review.hpp"
#include "revaf/validate.hpp"

namespace revaf {

// Outcome of a dispute: the grounded extension mapped back to structured
// ids, the verdict (root accepted or not), and per-party acceptance tallies.
struct Resolution {
    std::vector<ReviewArgumentId> grounded; // sorted by party, round, number
    bool acceptable = false;
    std::vector<std::pair<std::string, std::size_t>> per_party_accepted; // party order

    std::size_t accepted_for(const std::string& party) const;
};

// Validates, solves the grounded labelling, and reads the verdict off the
// root. An invalid framework raises ValidationGateError unless force is set,
// in which case the labelling is computed on the framework as-is.
Resolution resolve(const ReviewFramework& rf, bool force = false);

} // namespace revaf

#endif

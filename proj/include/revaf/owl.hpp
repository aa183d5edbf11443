#ifndef revaf_owl_hpp
#define revaf_owl_hpp

#include <string>
#include <utility>
#include <vector>

#include "revaf/resolve.hpp"
#include "revaf/review.hpp"
#include "revaf/validate.hpp"

namespace revaf {

inline constexpr const char* kDefaultOntologyBase = "onto";

struct OwlDocument {
    std::string text; // Manchester syntax, LF line endings
    std::vector<std::pair<ReviewArgumentId, std::string>> iri_map; // id -> local name
};

// Per-party membership of the generated defined classes, computed natively
// the way a DL reasoner would read the closed individuals.
struct ClassificationResult {
    struct PartyClasses {
        std::string party;
        std::vector<ReviewArgumentId> conflict_free; // argument order
        std::vector<ReviewArgumentId> admissible;    // subset of conflict_free
    };
    std::vector<PartyClasses> parties; // party order

    const PartyClasses* find(const std::string& party) const;
    std::vector<ReviewArgumentId> admissible_union() const; // sorted
};

// Where the class-based classification and the grounded extension disagree.
struct DivergenceReport {
    std::vector<ReviewArgumentId> owl_union;     // sorted
    std::vector<ReviewArgumentId> grounded;      // sorted
    std::vector<ReviewArgumentId> only_owl;      // sorted
    std::vector<ReviewArgumentId> only_grounded; // sorted
    bool diverges = false;
};

// Emits the full ontology, deterministically: prefixes; annotation
// properties text/round/number plus id (preserving the original identifier);
// the attacks/isAttackedBy property pair; one class per party; per-party
// ConflictFree and Admissible defined classes; one individual per argument
// with its annotations, closure axioms, and facts. Local names are the
// canonical id lowercased with dots replaced by underscores, de-collided
// with a numeric suffix. Gated on a valid framework.
OwlDocument emit_owl(const ReviewFramework& rf, const std::string& base = kDefaultOntologyBase);

// An argument is conflict-free iff every attack target lies in a different
// party; an argument of party P is admissible iff it is conflict-free and
// each of its attackers is attacked by some conflict-free argument of P.
// This mirrors the defined classes over the closed individuals, including
// their one-step notion of defense.
ClassificationResult classify_parties(const ReviewFramework& rf);

// The admissible-union of classify_parties against the grounded extension.
// Divergence is possible from attack chains of four or more arguments
// because the class definitions demand conflict-free, not admissible,
// defenders; the grounded verdict stays authoritative.
DivergenceReport compare_with_grounded(const ReviewFramework& rf);

} // namespace revaf

#endif

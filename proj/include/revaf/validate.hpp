#ifndef revaf_validate_hpp
#define revaf_validate_hpp

#include <string>
#include <vector>

#include "revaf/errors.hpp"
#include "revaf/review.hpp"

namespace revaf {

// Closed set of structural findings.
enum class Check {
    V1_ID_GRAMMAR,
    V2_REFERENTIAL,
    V3_ROOT,
    V4_ASYMMETRY,
    V5_ISOLATED,
    V6_ROUND_ORDER,
    V7_INTRA_PARTY,
    V8_ACYCLIC,
    V9_ROOT_REACHABILITY,
    W1_EMPTY_TEXT,
    W2_MULTI_TARGET,
};

const char* check_code(Check c);

struct Finding {
    Check code;
    std::string message;
    std::vector<std::string> ids; // canonical ids involved
};

struct ValidationReport {
    std::vector<Finding> errors;
    std::vector<Finding> warnings;
    std::vector<std::string> notes; // informational, e.g. cross-reviewer attacks

    bool is_valid() const { return errors.empty(); }
};

// Runs every check and collects all findings; nothing short-circuits.
// V6 demands attacker.round > target.round strictly; V5 demands every
// non-root argument attack something; V9 demands a directed attack path
// from every argument to the root; W2 flags multi-target attackers (the
// graph is then a DAG rather than a tree, which is tolerated).
ValidationReport validate(const ReviewFramework& rf);

// Thrown by operations gated on a valid framework.
class ValidationGateError : public Error {
public:
    explicit ValidationGateError(ValidationReport report);
    const ValidationReport& report() const { return report_; }

private:
    static std::string summarize(const ValidationReport& report);
    ValidationReport report_;
};

} // namespace revaf

#endif

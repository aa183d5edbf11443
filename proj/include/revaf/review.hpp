#ifndef revaf_review_hpp
#define revaf_review_hpp

#include <compare>
#include <cstddef>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "revaf/af.hpp"

namespace revaf {

// Structured identifier "<party>.<round>.<number>". Party names must not
// contain dots, so the canonical form parses unambiguously.
struct ReviewArgumentId {
    std::string party;
    int round = 0;
    int number = 0;

    std::string str() const {
        return party + "." + std::to_string(round) + "." + std::to_string(number);
    }

    friend auto operator<=>(const ReviewArgumentId&, const ReviewArgumentId&) = default;
};

// Splits on the last two dots; round and number are decimal non-negative
// integers. ParseError reports the offending position.
ReviewArgumentId parse_argument_id(const std::string& s);

struct ReviewArgument {
    ReviewArgumentId id;
    std::string text; // empty only expected for the root
};

// One dispute: party argument sets in document order, attack pairs in
// document order, and the designated root (the unique round-0 argument,
// standing for the whole manuscript). Values are immutable after parse;
// treat the public fields as read-only.
struct ReviewFramework {
    struct Party {
        std::string name;
        std::vector<ReviewArgument> arguments;
    };

    std::vector<Party> parties;
    std::vector<std::pair<ReviewArgumentId, ReviewArgumentId>> attack_pairs;
    ReviewArgumentId root;

    std::size_t argument_count() const;
    const Party* find_party(const std::string& name) const;
    const ReviewArgument* find_argument(const ReviewArgumentId& id) const;
    // The authors' party is the one containing the root.
    const Party& authors_party() const;

    bool operator==(const ReviewFramework& other) const;
};

// Reads the annotation document: {"argument_sets": {party: {id: text}},
// "attack_pairs": [[attacker, target], ...]}. Key order is preserved.
// Rejects malformed JSON, duplicate keys/ids, undeclared attack endpoints,
// ids filed under the wrong party, and zero or multiple round-0 arguments.
ReviewFramework parse_review_json(const std::string& text);

// Deterministic inverse of parse_review_json: 2-space indentation, UTF-8,
// insertion order preserved, trailing newline. parse(serialize(rf)) == rf.
std::string serialize_review_json(const ReviewFramework& rf);

struct FrameworkMapping {
    Framework framework;
    // The key bijection, positionally: ids[i] is the structured id of
    // framework argument i, and ids[i].str() == framework.key_of(i). The
    // reverse direction is framework.index_of(id.str()).
    std::vector<ReviewArgumentId> ids;

    ReviewArgumentId id_of(const std::string& key) const {
        return ids[framework.index_of(key)];
    }
};

// Generic framework over canonical id strings, insertion order = party order
// then argument order, attacks in pair order.
FrameworkMapping to_framework(const ReviewFramework& rf);

} // namespace revaf

#endif

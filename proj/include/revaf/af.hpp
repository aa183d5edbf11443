#ifndef revaf_af_hpp
#define revaf_af_hpp

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "revaf/errors.hpp"

namespace revaf {

// A set of argument keys, the public currency for semantics predicates.
// Membership is validated against a concrete Framework at each operation.
using KeySet = std::vector<std::string>;

// Directed attack graph over named arguments. Argument order is insertion
// order and is preserved by every serialization. Attacks form a set of
// ordered pairs; re-adding an existing pair is a no-op. Self-attacks are
// allowed at this level. Immutable once built (all operations on it are
// const; builders call add_* during construction only).
class Framework {
public:
    Framework() = default;

    // Sizing hint for bulk construction.
    void reserve(std::size_t arguments, std::size_t attacks);

    // Returns the index of the new argument. Empty or duplicate keys are
    // contract violations.
    std::size_t add_argument(std::string key);
    void add_attack(const std::string& attacker, const std::string& target);
    void add_attack(std::size_t attacker, std::size_t target);

    std::size_t size() const { return keys_.size(); }
    std::size_t attack_count() const { return attack_list_.size(); }

    bool has_argument(const std::string& key) const { return index_.count(key) != 0; }
    std::size_t index_of(const std::string& key) const;
    const std::string& key_of(std::size_t i) const { return keys_[i]; }

    const std::vector<std::string>& arguments() const { return keys_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& attacks() const { return attack_list_; }

    std::span<const std::size_t> attackers_of(std::size_t i) const { return attackers_[i]; }
    std::span<const std::size_t> targets_of(std::size_t i) const { return targets_[i]; }

    bool attack_exists(std::size_t attacker, std::size_t target) const {
        return attack_set_.count(pack(attacker, target)) != 0;
    }
    bool attack_exists(const std::string& attacker, const std::string& target) const {
        return attack_exists(index_of(attacker), index_of(target));
    }

    // Maps a key set onto indices, rejecting unknown keys and duplicates.
    std::vector<std::size_t> resolve_set(std::span<const std::string> keys) const;

private:
    static std::uint64_t pack(std::size_t a, std::size_t b) {
        return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint32_t>(b);
    }

    std::vector<std::string> keys_;
    std::unordered_map<std::string, std::size_t> index_;
    std::vector<std::pair<std::size_t, std::size_t>> attack_list_;
    std::vector<std::vector<std::size_t>> attackers_;
    std::vector<std::vector<std::size_t>> targets_;
    std::unordered_set<std::uint64_t> attack_set_;
};

// Dung's attacks(S, a): some member of s attacks a.
bool set_attacks(const Framework& f, std::span<const std::string> s, const std::string& a);

// No attack pair with both endpoints in s.
bool is_conflict_free(const Framework& f, std::span<const std::string> s);

// Every attacker of a is attacked by s.
bool is_acceptable(const Framework& f, const std::string& a, std::span<const std::string> s);

// Conflict-free and every member acceptable w.r.t. s.
bool is_admissible(const Framework& f, std::span<const std::string> s);

// True iff the attack digraph has no directed cycle; a self-attack counts
// as a cycle. On finite frameworks this coincides with well-foundedness.
bool is_well_founded(const Framework& f);

// True iff no attack has both endpoints in the same block. The blocks must
// partition the framework's arguments exactly; anything missing, duplicated,
// or unknown is a DomainError listing the offending keys.
bool is_k_partite(const Framework& f, std::span<const KeySet> partition);

} // namespace revaf

#endif

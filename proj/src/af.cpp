#include "revaf/af.hpp"

#include <algorithm>

namespace revaf {

void Framework::reserve(std::size_t arguments, std::size_t attacks) {
    keys_.reserve(arguments);
    index_.reserve(arguments);
    attackers_.reserve(arguments);
    targets_.reserve(arguments);
    attack_list_.reserve(attacks);
    attack_set_.reserve(attacks);
}

std::size_t Framework::add_argument(std::string key) {
    if (key.empty()) throw DomainError("argument key must be non-empty");
    if (index_.count(key) != 0) throw DomainError("duplicate argument key '" + key + "'");
    std::size_t i = keys_.size();
    index_.emplace(key, i);
    keys_.push_back(std::move(key));
    attackers_.emplace_back();
    targets_.emplace_back();
    return i;
}

void Framework::add_attack(const std::string& attacker, const std::string& target) {
    add_attack(index_of(attacker), index_of(target));
}

void Framework::add_attack(std::size_t attacker, std::size_t target) {
    if (attacker >= size() || target >= size())
        throw DomainError("attack endpoint index out of range");
    if (!attack_set_.insert(pack(attacker, target)).second) return;
    attack_list_.emplace_back(attacker, target);
    targets_[attacker].push_back(target);
    attackers_[target].push_back(attacker);
}

std::size_t Framework::index_of(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw DomainError("unknown argument key '" + key + "'");
    return it->second;
}

std::vector<std::size_t> Framework::resolve_set(std::span<const std::string> keys) const {
    std::vector<std::size_t> out;
    out.reserve(keys.size());
    std::unordered_set<std::size_t> seen;
    for (const auto& k : keys) {
        std::size_t i = index_of(k);
        if (!seen.insert(i).second)
            throw DomainError("argument key '" + k + "' listed twice in set");
        out.push_back(i);
    }
    return out;
}

namespace {

std::vector<char> membership(const Framework& f, std::span<const std::size_t> set) {
    std::vector<char> in(f.size(), 0);
    for (std::size_t i : set) in[i] = 1;
    return in;
}

bool set_attacks_idx(const Framework& f, const std::vector<char>& in_set, std::size_t target) {
    for (std::size_t b : f.attackers_of(target))
        if (in_set[b]) return true;
    return false;
}

bool acceptable_idx(const Framework& f, const std::vector<char>& in_set, std::size_t a) {
    for (std::size_t b : f.attackers_of(a))
        if (!set_attacks_idx(f, in_set, b)) return false;
    return true;
}

} // namespace

bool set_attacks(const Framework& f, std::span<const std::string> s, const std::string& a) {
    std::size_t target = f.index_of(a);
    auto set = f.resolve_set(s);
    return set_attacks_idx(f, membership(f, set), target);
}

bool is_conflict_free(const Framework& f, std::span<const std::string> s) {
    auto set = f.resolve_set(s);
    auto in = membership(f, set);
    for (std::size_t a : set)
        for (std::size_t t : f.targets_of(a))
            if (in[t]) return false;
    return true;
}

bool is_acceptable(const Framework& f, const std::string& a, std::span<const std::string> s) {
    std::size_t arg = f.index_of(a);
    auto set = f.resolve_set(s);
    return acceptable_idx(f, membership(f, set), arg);
}

bool is_admissible(const Framework& f, std::span<const std::string> s) {
    auto set = f.resolve_set(s);
    auto in = membership(f, set);
    for (std::size_t a : set)
        for (std::size_t t : f.targets_of(a))
            if (in[t]) return false;
    for (std::size_t a : set)
        if (!acceptable_idx(f, in, a)) return false;
    return true;
}

bool is_well_founded(const Framework& f) {
    // Kahn's algorithm over the attack digraph: if sink elimination consumes
    // every node, there is no cycle. A self-attack keeps its node's in-degree
    // positive forever.
    std::vector<std::size_t> in_degree(f.size(), 0);
    std::vector<std::size_t> stack;
    for (std::size_t i = 0; i < f.size(); ++i) {
        in_degree[i] = f.attackers_of(i).size();
        if (in_degree[i] == 0) stack.push_back(i);
    }
    std::size_t removed = 0;
    while (!stack.empty()) {
        std::size_t node = stack.back();
        stack.pop_back();
        ++removed;
        for (std::size_t t : f.targets_of(node))
            if (--in_degree[t] == 0) stack.push_back(t);
    }
    return removed == f.size();
}

bool is_k_partite(const Framework& f, std::span<const KeySet> partition) {
    // block_of[i] = which block argument i landed in, npos if none yet.
    constexpr std::size_t npos = static_cast<std::size_t>(-1);
    std::vector<std::size_t> block_of(f.size(), npos);
    std::string duplicated;
    for (std::size_t b = 0; b < partition.size(); ++b) {
        for (const auto& key : partition[b]) {
            std::size_t i = f.index_of(key);
            if (block_of[i] != npos) {
                if (!duplicated.empty()) duplicated += ", ";
                duplicated += key;
            }
            block_of[i] = b;
        }
    }
    if (!duplicated.empty())
        throw DomainError("not a partition: keys in more than one block: " + duplicated);
    std::string missing;
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (block_of[i] == npos) {
            if (!missing.empty()) missing += ", ";
            missing += f.key_of(i);
        }
    }
    if (!missing.empty())
        throw DomainError("not a partition: keys not covered by any block: " + missing);

    for (const auto& [attacker, target] : f.attacks())
        if (block_of[attacker] == block_of[target]) return false;
    return true;
}

} // namespace revaf

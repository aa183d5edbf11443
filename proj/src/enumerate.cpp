#include "revaf/enumerate.hpp"

#include <algorithm>
#include <cstdint>

namespace revaf {

const char* semantics_name(Semantics s) {
    switch (s) {
        case Semantics::ConflictFree: return "conflict-free";
        case Semantics::Admissible: return "admissible";
        case Semantics::Complete: return "complete";
        case Semantics::Preferred: return "preferred";
        case Semantics::Stable: return "stable";
        case Semantics::Grounded: return "grounded";
    }
    return "?";
}

Semantics semantics_from_name(const std::string& name) {
    if (name == "conflict-free") return Semantics::ConflictFree;
    if (name == "admissible") return Semantics::Admissible;
    if (name == "complete") return Semantics::Complete;
    if (name == "preferred") return Semantics::Preferred;
    if (name == "stable") return Semantics::Stable;
    if (name == "grounded") return Semantics::Grounded;
    throw DomainError("unknown semantics '" + name + "'");
}

namespace {

using Mask = std::uint64_t;

struct MaskTables {
    std::vector<Mask> attackers; // attackers[i] = arguments attacking i
    std::vector<Mask> targets;   // targets[i] = arguments i attacks
    Mask all = 0;
};

MaskTables build_tables(const Framework& f) {
    MaskTables t;
    t.attackers.assign(f.size(), 0);
    t.targets.assign(f.size(), 0);
    for (const auto& [a, b] : f.attacks()) {
        t.targets[a] |= Mask(1) << b;
        t.attackers[b] |= Mask(1) << a;
    }
    t.all = f.size() == 64 ? ~Mask(0) : (Mask(1) << f.size()) - 1;
    return t;
}

Mask attacked_by(const MaskTables& t, Mask s) {
    Mask out = 0;
    for (Mask rest = s; rest;) {
        std::size_t i = static_cast<std::size_t>(__builtin_ctzll(rest));
        rest &= rest - 1;
        out |= t.targets[i];
    }
    return out;
}

bool conflict_free(const MaskTables& t, Mask s) {
    return (attacked_by(t, s) & s) == 0;
}

// Arguments whose every attacker is hit by s.
Mask acceptable_set(const MaskTables& t, Mask s) {
    Mask hit = attacked_by(t, s);
    Mask out = 0;
    for (std::size_t i = 0; i < t.attackers.size(); ++i)
        if ((t.attackers[i] & ~hit) == 0) out |= Mask(1) << i;
    return out;
}

bool admissible(const MaskTables& t, Mask s) {
    return conflict_free(t, s) && (s & ~acceptable_set(t, s)) == 0;
}

bool complete(const MaskTables& t, Mask s) {
    return conflict_free(t, s) && acceptable_set(t, s) == s;
}

bool stable(const MaskTables& t, Mask s, Mask all) {
    return conflict_free(t, s) && ((attacked_by(t, s) | s) == all);
}

std::vector<Mask> maximal_of(std::vector<Mask> sets) {
    // Keep only subset-maximal masks. Sorting by descending popcount means a
    // set can only be subsumed by one already kept.
    std::stable_sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        return __builtin_popcountll(a) > __builtin_popcountll(b);
    });
    std::vector<Mask> maximal;
    for (Mask s : sets) {
        bool subsumed = false;
        for (Mask m : maximal)
            if ((s & ~m) == 0) { subsumed = true; break; }
        if (!subsumed) maximal.push_back(s);
    }
    return maximal;
}

std::vector<Mask> minimal_of(std::vector<Mask> sets) {
    std::stable_sort(sets.begin(), sets.end(), [](Mask a, Mask b) {
        return __builtin_popcountll(a) < __builtin_popcountll(b);
    });
    std::vector<Mask> minimal;
    for (Mask s : sets) {
        bool subsumed = false;
        for (Mask m : minimal)
            if ((m & ~s) == 0) { subsumed = true; break; }
        if (!subsumed) minimal.push_back(s);
    }
    return minimal;
}

} // namespace

std::vector<KeySet> enumerate_extensions(const Framework& f, Semantics sem, std::size_t max_args) {
    if (f.size() > max_args) throw SizeLimitError(f.size(), max_args);
    if (f.size() > 63) throw SizeLimitError(f.size(), 63);

    MaskTables t = build_tables(f);
    const Mask all = t.all;

    std::vector<Mask> hits;
    for (Mask s = 0;; ++s) {
        bool match = false;
        switch (sem) {
            case Semantics::ConflictFree: match = conflict_free(t, s); break;
            case Semantics::Admissible: match = admissible(t, s); break;
            case Semantics::Stable: match = stable(t, s, all); break;
            case Semantics::Preferred: match = admissible(t, s); break; // maximal filter below
            case Semantics::Complete:
            case Semantics::Grounded: match = complete(t, s); break;
        }
        if (match) hits.push_back(s);
        if (s == all) break;
    }

    if (sem == Semantics::Preferred) {
        hits = maximal_of(std::move(hits));
    } else if (sem == Semantics::Grounded) {
        hits = minimal_of(std::move(hits));
        if (hits.size() != 1)
            throw DomainError("grounded extension is not unique; complete family is inconsistent");
    }

    // Materialize as sorted key sets, ordered by size then lexicographically.
    std::vector<KeySet> out;
    out.reserve(hits.size());
    for (Mask s : hits) {
        KeySet keys;
        for (Mask rest = s; rest;) {
            std::size_t i = static_cast<std::size_t>(__builtin_ctzll(rest));
            rest &= rest - 1;
            keys.push_back(f.key_of(i));
        }
        std::sort(keys.begin(), keys.end());
        out.push_back(std::move(keys));
    }
    std::sort(out.begin(), out.end(), [](const KeySet& a, const KeySet& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

} // namespace revaf

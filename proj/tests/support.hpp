#ifndef revaf_tests_support_hpp
#define revaf_tests_support_hpp

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "revaf/af.hpp"
#include "revaf/grounded.hpp"
#include "revaf/synth.hpp"

namespace testutil {

inline std::string fixture_path(const std::string& name) {
    return std::string(REVAF_FIXTURE_DIR) + "/" + name;
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline revaf::Framework make_framework(
    const std::vector<std::string>& keys,
    const std::vector<std::pair<std::string, std::string>>& attacks) {
    revaf::Framework f;
    for (const auto& k : keys) f.add_argument(k);
    for (const auto& [a, b] : attacks) f.add_attack(a, b);
    return f;
}

// Arbitrary digraph, cycles and self-attacks included. Keys are zero-padded
// so lexicographic and insertion order agree.
inline revaf::Framework random_framework(revaf::SplitMix64& rng, int max_args = 12,
                                         bool allow_cycles = true) {
    int n = rng.in_range(0, max_args);
    revaf::Framework f;
    char key[8];
    for (int i = 1; i <= n; ++i) {
        std::snprintf(key, sizeof(key), "a%02d", i);
        f.add_argument(key);
    }
    if (n == 0) return f;
    int density = rng.in_range(0, 35); // percent
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (!allow_cycles && i <= j) continue; // attacker index > target: acyclic
            if (rng.chance(density / 100.0)) f.add_attack(std::size_t(i), std::size_t(j));
        }
    }
    return f;
}

// The three label conditions, checked straight off the framework so solver
// bugs cannot hide behind their own bookkeeping.
inline bool labelling_is_legal(const revaf::Framework& f, const revaf::Labelling& lab) {
    if (lab.size() != f.size()) return false;
    for (std::size_t i = 0; i < f.size(); ++i) {
        std::size_t in_attackers = 0, out_attackers = 0, total = 0;
        for (std::size_t b : f.attackers_of(i)) {
            ++total;
            if (lab.at(b) == revaf::Label::In) ++in_attackers;
            if (lab.at(b) == revaf::Label::Out) ++out_attackers;
        }
        switch (lab.at(i)) {
            case revaf::Label::In:
                if (out_attackers != total) return false;
                break;
            case revaf::Label::Out:
                if (in_attackers == 0) return false;
                break;
            case revaf::Label::Undec:
                if (in_attackers != 0 || out_attackers == total) return false;
                break;
        }
    }
    return true;
}

inline revaf::KeySet sorted(revaf::KeySet s) {
    std::sort(s.begin(), s.end());
    return s;
}

} // namespace testutil

#endif

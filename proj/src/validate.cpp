#include "revaf/validate.hpp"

#include <array>
#include <cstdint>
#include <unordered_map>
#include <unordered_set>

#include "analyze.hpp"

namespace revaf {

const char* check_code(Check c) {
    switch (c) {
        case Check::V1_ID_GRAMMAR: return "V1_ID_GRAMMAR";
        case Check::V2_REFERENTIAL: return "V2_REFERENTIAL";
        case Check::V3_ROOT: return "V3_ROOT";
        case Check::V4_ASYMMETRY: return "V4_ASYMMETRY";
        case Check::V5_ISOLATED: return "V5_ISOLATED";
        case Check::V6_ROUND_ORDER: return "V6_ROUND_ORDER";
        case Check::V7_INTRA_PARTY: return "V7_INTRA_PARTY";
        case Check::V8_ACYCLIC: return "V8_ACYCLIC";
        case Check::V9_ROOT_REACHABILITY: return "V9_ROOT_REACHABILITY";
        case Check::W1_EMPTY_TEXT: return "W1_EMPTY_TEXT";
        case Check::W2_MULTI_TARGET: return "W2_MULTI_TARGET";
    }
    return "?";
}

ValidationGateError::ValidationGateError(ValidationReport report)
    : Error(summarize(report)), report_(std::move(report)) {}

std::string ValidationGateError::summarize(const ValidationReport& report) {
    std::string msg = "framework failed validation:";
    for (const auto& e : report.errors)
        msg += std::string("\n  [") + check_code(e.code) + "] " + e.message;
    return msg;
}

namespace {

bool id_well_formed(const ReviewArgumentId& id) {
    return !id.party.empty() && id.party.find('.') == std::string::npos && id.round >= 0 &&
           id.number >= 0;
}

// Lookup table from structured id to graph index that never materializes
// canonical strings: party name -> small index once, then an integer triple.
// Sound because round/number never contain dots, so distinct structured ids
// have distinct canonical forms and vice versa.
class IdIndex {
public:
    void reserve(std::size_t args) { by_triple_.reserve(args); }

    std::size_t party_index(const std::string& party) {
        return parties_.emplace(party, parties_.size()).first->second;
    }

    bool insert(std::size_t party_idx, const ReviewArgumentId& id, std::uint32_t graph_index) {
        return by_triple_.emplace(triple(party_idx, id), graph_index).second;
    }

    std::uint32_t find(const ReviewArgumentId& id) const {
        auto party = parties_.find(id.party);
        if (party == parties_.end()) return detail::DisputeGraph::npos;
        auto it = by_triple_.find(triple(party->second, id));
        return it == by_triple_.end() ? detail::DisputeGraph::npos : it->second;
    }

private:
    struct TripleHash {
        std::size_t operator()(const std::array<std::size_t, 3>& t) const {
            std::size_t h = t[0] * 0x9e3779b97f4a7c15ull;
            h ^= t[1] * 0xbf58476d1ce4e5b9ull + (h >> 13);
            h ^= t[2] * 0x94d049bb133111ebull + (h >> 7);
            return h;
        }
    };

    static std::array<std::size_t, 3> triple(std::size_t party_idx, const ReviewArgumentId& id) {
        return {party_idx, static_cast<std::size_t>(id.round),
                static_cast<std::size_t>(id.number)};
    }

    std::unordered_map<std::string, std::size_t> parties_;
    std::unordered_map<std::array<std::size_t, 3>, std::uint32_t, TripleHash> by_triple_;
};

} // namespace

namespace detail {

Analysis analyze(const ReviewFramework& rf) {
    Analysis a;
    ValidationReport& report = a.report;
    DisputeGraph& graph = a.graph;
    auto error = [&](Check c, std::string msg, std::vector<std::string> ids = {}) {
        report.errors.push_back({c, std::move(msg), std::move(ids)});
    };
    auto warn = [&](Check c, std::string msg, std::vector<std::string> ids = {}) {
        report.warnings.push_back({c, std::move(msg), std::move(ids)});
    };

    // V1 + V2 (duplicates): walk declarations once, in document order. The
    // first occurrence of every id lands in the sanitized graph feeding the
    // remaining checks; those run on indices so that validating a large
    // corpus stays cheap, and strings materialize only inside findings.
    graph.args.reserve(rf.argument_count());
    IdIndex index;
    index.reserve(rf.argument_count());
    std::vector<ReviewArgumentId> round0;
    for (const auto& party : rf.parties) {
        std::size_t party_idx = index.party_index(party.name);
        for (const auto& arg : party.arguments) {
            if (!id_well_formed(arg.id))
                error(Check::V1_ID_GRAMMAR,
                      "argument id '" + arg.id.str() + "' is not well-formed", {arg.id.str()});
            if (arg.id.party != party.name)
                error(Check::V1_ID_GRAMMAR, "argument '" + arg.id.str() +
                                                "' is filed under party '" + party.name + "'",
                      {arg.id.str()});
            std::size_t own_party =
                arg.id.party == party.name ? party_idx : index.party_index(arg.id.party);
            if (!index.insert(own_party, arg.id, graph.size())) {
                error(Check::V2_REFERENTIAL, "duplicate argument id '" + arg.id.str() + "'",
                      {arg.id.str()});
                continue;
            }
            graph.args.push_back(&arg.id);
            if (arg.id.round == 0) round0.push_back(arg.id);
            if (arg.text.empty() && arg.id != rf.root)
                warn(Check::W1_EMPTY_TEXT, "argument '" + arg.id.str() + "' has empty text",
                     {arg.id.str()});
        }
    }

    // V2: attack endpoints must be declared.
    graph.edges.reserve(rf.attack_pairs.size());
    for (const auto& [attacker, target] : rf.attack_pairs) {
        std::uint32_t from = index.find(attacker);
        std::uint32_t to = index.find(target);
        if (from == DisputeGraph::npos)
            error(Check::V2_REFERENTIAL,
                  "attack references undeclared argument '" + attacker.str() + "'",
                  {attacker.str()});
        if (to == DisputeGraph::npos)
            error(Check::V2_REFERENTIAL,
                  "attack references undeclared argument '" + target.str() + "'", {target.str()});
        if (from == DisputeGraph::npos || to == DisputeGraph::npos) continue;
        graph.edges.emplace_back(from, to);
    }
    graph.root = index.find(rf.root);
    graph.finalize();

    // V3: the root is the unique round-0 argument and is declared.
    bool root_declared = graph.root != DisputeGraph::npos;
    if (!root_declared) {
        error(Check::V3_ROOT, "root argument '" + rf.root.str() + "' is not declared",
              {rf.root.str()});
    } else if (rf.root.round != 0) {
        error(Check::V3_ROOT, "root argument '" + rf.root.str() + "' has round " +
                                  std::to_string(rf.root.round) + ", expected 0",
              {rf.root.str()});
    }
    if (round0.empty()) {
        error(Check::V3_ROOT, "no round-0 argument present");
    } else if (round0.size() > 1) {
        std::vector<std::string> ids;
        for (const auto& id : round0) ids.push_back(id.str());
        error(Check::V3_ROOT, "multiple round-0 arguments", std::move(ids));
    } else if (root_declared && round0.front() != rf.root) {
        error(Check::V3_ROOT, "designated root '" + rf.root.str() +
                                  "' is not the round-0 argument '" + round0.front().str() + "'",
              {rf.root.str(), round0.front().str()});
    }

    // V4 asymmetry, V6 round order, V7 party separation, edge by edge.
    std::unordered_set<std::uint64_t> reported_sym;
    for (const auto& [from, to] : graph.edges) {
        const ReviewArgumentId& attacker = *graph.args[from];
        const ReviewArgumentId& target = *graph.args[to];
        if (from == to) {
            error(Check::V4_ASYMMETRY, "argument '" + attacker.str() + "' attacks itself",
                  {attacker.str()});
        } else if (graph.has_edge(to, from)) {
            std::uint64_t key = from < to ? (std::uint64_t(from) << 32 | to)
                                          : (std::uint64_t(to) << 32 | from);
            if (reported_sym.insert(key).second)
                error(Check::V4_ASYMMETRY,
                      "attacks '" + attacker.str() + "' -> '" + target.str() + "' and '" +
                          target.str() + "' -> '" + attacker.str() + "' are mutual",
                      {attacker.str(), target.str()});
        }
        if (attacker.round <= target.round)
            error(Check::V6_ROUND_ORDER, "attack '" + attacker.str() + "' -> '" + target.str() +
                                             "' does not point to an earlier round",
                  {attacker.str(), target.str()});
        if (attacker.party == target.party)
            error(Check::V7_INTRA_PARTY, "attack '" + attacker.str() + "' -> '" + target.str() +
                                             "' stays inside party '" + attacker.party + "'",
                  {attacker.str(), target.str()});
    }

    // W2 multi-target (duplicate pairs collapse in the adjacency) and V5
    // isolation, in declaration order.
    for (std::uint32_t i = 0; i < graph.size(); ++i) {
        auto targets = graph.targets_of(i);
        if (targets.size() > 1) {
            std::vector<std::string> ids = {graph.args[i]->str()};
            for (std::uint32_t t : targets) ids.push_back(graph.args[t]->str());
            warn(Check::W2_MULTI_TARGET,
                 "argument '" + graph.args[i]->str() + "' attacks " +
                     std::to_string(targets.size()) + " targets",
                 std::move(ids));
        }
        if (targets.empty() && i != graph.root)
            error(Check::V5_ISOLATED, "argument '" + graph.args[i]->str() + "' attacks nothing",
                  {graph.args[i]->str()});
    }

    // V8: acyclicity.
    if (!graph.is_acyclic())
        error(Check::V8_ACYCLIC, "attack relation contains a directed cycle");

    // V9: every argument reaches the root along attack edges. Walk backward
    // from the root: attackers of a reaching argument reach it too.
    if (root_declared) {
        std::vector<char> reaches(graph.size(), 0);
        std::vector<std::uint32_t> stack = {graph.root};
        reaches[graph.root] = 1;
        while (!stack.empty()) {
            std::uint32_t node = stack.back();
            stack.pop_back();
            for (std::uint32_t b : graph.attackers_of(node)) {
                if (!reaches[b]) {
                    reaches[b] = 1;
                    stack.push_back(b);
                }
            }
        }
        for (std::uint32_t i = 0; i < graph.size(); ++i)
            if (!reaches[i])
                error(Check::V9_ROOT_REACHABILITY,
                      "argument '" + graph.args[i]->str() + "' has no attack path to the root",
                      {graph.args[i]->str()});
    }

    // Attacks between two non-author parties are legal (only intra-party
    // attacks are forbidden) but unusual enough to surface.
    for (const auto& [from, to] : graph.edges) {
        const ReviewArgumentId& attacker = *graph.args[from];
        const ReviewArgumentId& target = *graph.args[to];
        if (attacker.party != target.party && attacker.party != rf.root.party &&
            target.party != rf.root.party)
            report.notes.push_back("cross-reviewer attack '" + attacker.str() + "' -> '" +
                                   target.str() + "'");
    }

    return a;
}

} // namespace detail

ValidationReport validate(const ReviewFramework& rf) {
    return detail::analyze(rf).report;
}

} // namespace revaf

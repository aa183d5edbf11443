#include "revaf/resolve.hpp"

#include <algorithm>
#include <unordered_map>

#include "analyze.hpp"

namespace revaf {

std::size_t Resolution::accepted_for(const std::string& party) const {
    for (const auto& [name, count] : per_party_accepted)
        if (name == party) return count;
    return 0;
}

Resolution resolve(const ReviewFramework& rf, bool force) {
    detail::Analysis a = detail::analyze(rf);
    if (!force && !a.report.is_valid()) throw ValidationGateError(std::move(a.report));

    // Least-fixpoint labelling on the sanitized graph; equivalent to
    // grounded_labelling(to_framework(rf).framework) on valid input, which
    // the tests assert via the independent af_core route.
    std::vector<Label> labels = a.graph.grounded_labels();

    Resolution res;
    res.acceptable = false;
    for (std::uint32_t i = 0; i < a.graph.size(); ++i) {
        if (labels[i] != Label::In) continue;
        res.grounded.push_back(*a.graph.args[i]);
        if (i == a.graph.root) res.acceptable = true;
    }
    std::sort(res.grounded.begin(), res.grounded.end());

    std::unordered_map<std::string, std::size_t> tally;
    for (const auto& id : res.grounded) ++tally[id.party];
    for (const auto& party : rf.parties) {
        auto it = tally.find(party.name);
        res.per_party_accepted.emplace_back(party.name, it == tally.end() ? 0 : it->second);
    }
    return res;
}

} // namespace revaf

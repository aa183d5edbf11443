#include "revaf/synth.hpp"

#include "revaf/errors.hpp"

namespace revaf {

namespace {

void check_params(const SynthParams& p) {
    if (p.reviewer_count_min < 0 || p.reviewer_count_min > p.reviewer_count_max)
        throw DomainError("reviewer count range must satisfy 0 <= min <= max");
    if (p.reviewer_args_min < 1 || p.reviewer_args_min > p.reviewer_args_max)
        throw DomainError("reviewer argument range must satisfy 1 <= min <= max");
    if (p.response_probability < 0.0 || p.response_probability > 1.0)
        throw DomainError("response probability must be in [0, 1]");
    if (p.counter_response_probability < 0.0 || p.counter_response_probability > 1.0)
        throw DomainError("counter-response probability must be in [0, 1]");
    if (p.max_rounds < 1) throw DomainError("max_rounds must be at least 1");
}

} // namespace

ReviewFramework generate_synthetic(const SynthParams& params) {
    check_params(params);
    SplitMix64 rng(params.seed);

    ReviewFramework rf;
    rf.root = {"Author", 0, 0};
    rf.parties.push_back({"Author", {{rf.root, ""}}});

    int reviewer_count = rng.in_range(params.reviewer_count_min, params.reviewer_count_max);
    struct Pending {
        ReviewArgumentId id;     // reviewer argument awaiting a response
        std::size_t party_index; // its reviewer party
    };
    std::vector<Pending> round1;
    for (int r = 1; r <= reviewer_count; ++r) {
        std::string name = "Reviewer_" + std::to_string(r);
        ReviewFramework::Party party{name, {}};
        int arg_count = rng.in_range(params.reviewer_args_min, params.reviewer_args_max);
        for (int k = 1; k <= arg_count; ++k) {
            ReviewArgumentId id{name, 1, k};
            party.arguments.push_back(
                {id, name + " raises concern " + std::to_string(k) + " about the manuscript."});
            rf.attack_pairs.emplace_back(id, rf.root);
            round1.push_back({id, rf.parties.size()});
        }
        rf.parties.push_back(std::move(party));
    }

    if (params.max_rounds >= 2) {
        int response_number = 0;
        struct Reply {
            ReviewArgumentId id;
            std::size_t reviewer_index; // party whose argument was answered
        };
        std::vector<Reply> round2;
        for (const auto& pending : round1) {
            if (!rng.chance(params.response_probability)) continue;
            ReviewArgumentId id{"Author", 2, ++response_number};
            rf.parties[0].arguments.push_back(
                {id, "The authors revise the manuscript to address " + pending.id.str() + "."});
            rf.attack_pairs.emplace_back(id, pending.id);
            round2.push_back({id, pending.party_index});
        }

        if (params.max_rounds >= 3) {
            std::vector<int> counter_number(rf.parties.size(), 0);
            for (const auto& reply : round2) {
                if (!rng.chance(params.counter_response_probability)) continue;
                auto& party = rf.parties[reply.reviewer_index];
                ReviewArgumentId id{party.name, 3, ++counter_number[reply.reviewer_index]};
                party.arguments.push_back(
                    {id, party.name + " finds the revision for " + reply.id.str() +
                             " insufficient."});
                rf.attack_pairs.emplace_back(id, reply.id);
            }
        }
    }

    return rf;
}

} // namespace revaf

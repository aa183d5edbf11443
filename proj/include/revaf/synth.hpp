#ifndef revaf_synth_hpp
#define revaf_synth_hpp

#include <cstdint>

#include "revaf/review.hpp"

namespace revaf {

// splitmix64; hand-rolled so a fixed seed yields the same framework on
// every platform and standard library.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi].
    int in_range(int lo, int hi) {
        return lo + static_cast<int>(next() % std::uint64_t(hi - lo + 1));
    }

    bool chance(double p) {
        if (p >= 1.0) return true;
        if (p <= 0.0) return false;
        return double(next() >> 11) * 0x1.0p-53 < p;
    }

private:
    std::uint64_t state_;
};

struct SynthParams {
    std::uint64_t seed = 1;
    int reviewer_count_min = 1;
    int reviewer_count_max = 3;
    int reviewer_args_min = 1;
    int reviewer_args_max = 3;
    double response_probability = 0.7;
    double counter_response_probability = 0.3;
    int max_rounds = 3;
};

// Deterministic dialogue tree: a round-0 root for the authors; round-1
// reviewer arguments attacking it; with response_probability a round-2
// author reply to each reviewer argument (if max_rounds allows); with
// counter_response_probability a round-3 reviewer follow-up to each reply.
// Every argument attacks exactly one earlier-round argument of another
// party, so the result always passes validate. Bad ranges or probabilities
// raise DomainError.
ReviewFramework generate_synthetic(const SynthParams& params);

} // namespace revaf

#endif

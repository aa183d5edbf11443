#ifndef revaf_grounded_hpp
#define revaf_grounded_hpp

#include <cstddef>
#include <string>
#include <unordered_map>
#include <vector>

#include "revaf/af.hpp"

namespace revaf {

enum class Label { In, Out, Undec };

const char* label_name(Label l);

// Total assignment of labels over one framework's arguments, in the
// framework's insertion order. Legal labellings satisfy: In arguments have
// all attackers Out; Out arguments have an In attacker; Undec arguments have
// no In attacker and at least one non-Out attacker.
class Labelling {
public:
    Labelling(std::vector<std::string> keys, std::vector<Label> labels);

    std::size_t size() const { return keys_.size(); }
    const std::vector<std::string>& keys() const { return keys_; }
    Label at(std::size_t i) const { return labels_[i]; }
    Label at(const std::string& key) const;

    // Keys labelled In, in framework order.
    KeySet in_set() const;

private:
    std::vector<std::string> keys_;
    std::vector<Label> labels_;
    std::unordered_map<std::string, std::size_t> index_;
};

// Least-fixpoint labelling: an unlabelled argument whose attackers are all
// Out becomes In; targets of In arguments become Out; whatever remains when
// no rule fires is Undec. Runs in O(|A| + |R|) via a work queue over
// per-argument counters of non-Out attackers. The In set is the grounded
// extension.
Labelling grounded_labelling(const Framework& f);

// Solver core: the label per argument index, without wrapping keys.
std::vector<Label> grounded_labels(const Framework& f);

KeySet grounded_extension(const Framework& f);

} // namespace revaf

#endif

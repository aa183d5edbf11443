#include "revaf/grounded.hpp"

namespace revaf {

const char* label_name(Label l) {
    switch (l) {
        case Label::In: return "IN";
        case Label::Out: return "OUT";
        case Label::Undec: return "UNDEC";
    }
    return "?";
}

Labelling::Labelling(std::vector<std::string> keys, std::vector<Label> labels)
    : keys_(std::move(keys)), labels_(std::move(labels)) {
    if (keys_.size() != labels_.size())
        throw DomainError("labelling must cover every argument exactly once");
    for (std::size_t i = 0; i < keys_.size(); ++i) index_.emplace(keys_[i], i);
    if (index_.size() != keys_.size())
        throw DomainError("labelling has duplicate argument keys");
}

Label Labelling::at(const std::string& key) const {
    auto it = index_.find(key);
    if (it == index_.end()) throw DomainError("unknown argument key '" + key + "'");
    return labels_[it->second];
}

KeySet Labelling::in_set() const {
    KeySet out;
    for (std::size_t i = 0; i < keys_.size(); ++i)
        if (labels_[i] == Label::In) out.push_back(keys_[i]);
    return out;
}

Labelling grounded_labelling(const Framework& f) {
    return Labelling(f.arguments(), grounded_labels(f));
}

std::vector<Label> grounded_labels(const Framework& f) {
    const std::size_t n = f.size();
    // pending[i] = attackers of i not yet labelled Out. When it hits zero
    // and i is unlabelled, i becomes In.
    std::vector<std::size_t> pending(n);
    std::vector<char> labelled(n, 0);
    std::vector<Label> label(n, Label::Undec);

    std::vector<std::size_t> queue; // arguments just labelled In
    queue.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        pending[i] = f.attackers_of(i).size();
        if (pending[i] == 0) {
            label[i] = Label::In;
            labelled[i] = 1;
            queue.push_back(i);
        }
    }

    while (!queue.empty()) {
        std::size_t arg = queue.back();
        queue.pop_back();
        // Everything an In argument attacks is Out; each newly-Out argument
        // releases one pending slot on each of its own targets.
        for (std::size_t t : f.targets_of(arg)) {
            if (labelled[t]) continue;
            label[t] = Label::Out;
            labelled[t] = 1;
            for (std::size_t tt : f.targets_of(t)) {
                if (--pending[tt] == 0 && !labelled[tt]) {
                    label[tt] = Label::In;
                    labelled[tt] = 1;
                    queue.push_back(tt);
                }
            }
        }
    }

    return label;
}

KeySet grounded_extension(const Framework& f) {
    return grounded_labelling(f).in_set();
}

} // namespace revaf

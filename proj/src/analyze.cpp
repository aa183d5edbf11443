#include "analyze.hpp"

#include <numeric>

namespace revaf::detail {

void DisputeGraph::finalize() {
    edge_set_.reserve(edges.size());
    for (const auto& [from, to] : edges) edge_set_.push_back(pack(from, to));
    std::sort(edge_set_.begin(), edge_set_.end());
    edge_set_.erase(std::unique(edge_set_.begin(), edge_set_.end()), edge_set_.end());

    // Duplicate attack pairs collapse; adjacency keeps first-occurrence order.
    std::vector<std::pair<std::uint32_t, std::uint32_t>> unique_edges;
    unique_edges.reserve(edge_set_.size());
    std::vector<char> placed(edge_set_.size(), 0);
    for (const auto& e : edges) {
        std::size_t slot = std::lower_bound(edge_set_.begin(), edge_set_.end(),
                                            pack(e.first, e.second)) -
                           edge_set_.begin();
        if (placed[slot]) continue;
        placed[slot] = 1;
        unique_edges.push_back(e);
    }

    const std::uint32_t n = size();
    out_offsets_.assign(n + 1, 0);
    in_offsets_.assign(n + 1, 0);
    for (const auto& [from, to] : unique_edges) {
        ++out_offsets_[from + 1];
        ++in_offsets_[to + 1];
    }
    std::partial_sum(out_offsets_.begin(), out_offsets_.end(), out_offsets_.begin());
    std::partial_sum(in_offsets_.begin(), in_offsets_.end(), in_offsets_.begin());

    out_flat_.resize(unique_edges.size());
    in_flat_.resize(unique_edges.size());
    std::vector<std::uint32_t> out_cursor(out_offsets_.begin(), out_offsets_.end() - 1);
    std::vector<std::uint32_t> in_cursor(in_offsets_.begin(), in_offsets_.end() - 1);
    for (const auto& [from, to] : unique_edges) {
        out_flat_[out_cursor[from]++] = to;
        in_flat_[in_cursor[to]++] = from;
    }
}

bool DisputeGraph::is_acyclic() const {
    const std::uint32_t n = size();
    std::vector<std::uint32_t> in_degree(n);
    std::vector<std::uint32_t> stack;
    for (std::uint32_t i = 0; i < n; ++i) {
        in_degree[i] = in_offsets_[i + 1] - in_offsets_[i];
        if (in_degree[i] == 0) stack.push_back(i);
    }
    std::uint32_t removed = 0;
    while (!stack.empty()) {
        std::uint32_t node = stack.back();
        stack.pop_back();
        ++removed;
        for (std::uint32_t t : targets_of(node))
            if (--in_degree[t] == 0) stack.push_back(t);
    }
    return removed == n;
}

std::vector<Label> DisputeGraph::grounded_labels() const {
    const std::uint32_t n = size();
    std::vector<std::uint32_t> pending(n);
    std::vector<char> labelled(n, 0);
    std::vector<Label> label(n, Label::Undec);

    std::vector<std::uint32_t> queue;
    queue.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) {
        pending[i] = in_offsets_[i + 1] - in_offsets_[i];
        if (pending[i] == 0) {
            label[i] = Label::In;
            labelled[i] = 1;
            queue.push_back(i);
        }
    }
    while (!queue.empty()) {
        std::uint32_t arg = queue.back();
        queue.pop_back();
        for (std::uint32_t t : targets_of(arg)) {
            if (labelled[t]) continue;
            label[t] = Label::Out;
            labelled[t] = 1;
            for (std::uint32_t tt : targets_of(t)) {
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

} // namespace revaf::detail

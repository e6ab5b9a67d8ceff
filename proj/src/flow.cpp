#include "flow.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace gsq::detail {

MaxFlow::MaxFlow(int nodes) : arcs_(static_cast<std::size_t>(nodes)) {}

void MaxFlow::add_edge(int from, int to, std::int64_t capacity) {
    arcs_[from].push_back({to, static_cast<int>(arcs_[to].size()), capacity});
    arcs_[to].push_back({from, static_cast<int>(arcs_[from].size()) - 1, 0});
}

bool MaxFlow::build_levels(int source, int sink) {
    level_.assign(arcs_.size(), -1);
    std::deque<int> queue{source};
    level_[source] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& a : arcs_[u]) {
            if (a.cap > 0 && level_[a.to] < 0) {
                level_[a.to] = level_[u] + 1;
                queue.push_back(a.to);
            }
        }
    }
    return level_[sink] >= 0;
}

std::int64_t MaxFlow::push(int node, int sink, std::int64_t limit) {
    if (node == sink) return limit;
    for (auto& i = next_[node]; i < arcs_[node].size(); ++i) {
        Arc& a = arcs_[node][i];
        if (a.cap <= 0 || level_[a.to] != level_[node] + 1) continue;
        std::int64_t got = push(a.to, sink, std::min(limit, a.cap));
        if (got > 0) {
            a.cap -= got;
            arcs_[a.to][a.rev].cap += got;
            return got;
        }
    }
    return 0;
}

std::int64_t MaxFlow::run(int source, int sink) {
    std::int64_t total = 0;
    while (build_levels(source, sink)) {
        next_.assign(arcs_.size(), 0);
        while (std::int64_t f = push(source, sink, std::numeric_limits<std::int64_t>::max())) total += f;
    }
    return total;
}

std::vector<char> MaxFlow::source_side(int source) const {
    std::vector<char> seen(arcs_.size(), 0);
    std::deque<int> queue{source};
    seen[source] = 1;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (const auto& a : arcs_[u]) {
            if (a.cap > 0 && !seen[a.to]) {
                seen[a.to] = 1;
                queue.push_back(a.to);
            }
        }
    }
    return seen;
}

}  // namespace gsq::detail

#pragma once

#include <cstdint>
#include <vector>

namespace gsq::detail {

/// Dinic max-flow on integer capacities.
class MaxFlow {
public:
    explicit MaxFlow(int nodes);

    void add_edge(int from, int to, std::int64_t capacity);
    std::int64_t run(int source, int sink);

    /// Nodes reachable from the source in the residual graph after run().
    std::vector<char> source_side(int source) const;

private:
    struct Arc {
        int to;
        int rev;
        std::int64_t cap;
    };

    bool build_levels(int source, int sink);
    std::int64_t push(int node, int sink, std::int64_t limit);

    std::vector<std::vector<Arc>> arcs_;
    std::vector<int> level_;
    std::vector<std::size_t> next_;
};

}  // namespace gsq::detail

#pragma once

#include <algorithm>
#include <queue>
#include <vector>

namespace hamcon::detail {

// Augmenting-path max flow for small integral networks. Paths are found by
// BFS; the flow value is capped so callers can stop once a threshold is met.
class UnitFlow {
public:
    explicit UnitFlow(int nodes) : head_(static_cast<std::size_t>(nodes), -1) {}

    // Adds arc a->b with capacity cap and its residual twin b->a with
    // capacity back_cap (use back_cap == cap for an undirected edge).
    void add_arc(int a, int b, int cap, int back_cap = 0) {
        push(a, b, cap);
        push(b, a, back_cap);
    }

    int max_flow(int s, int t, int limit) {
        int flow = 0;
        std::vector<int> via(head_.size());
        while (flow < limit) {
            std::fill(via.begin(), via.end(), -1);
            std::queue<int> q;
            q.push(s);
            via[static_cast<std::size_t>(s)] = -2;
            while (!q.empty() && via[static_cast<std::size_t>(t)] == -1) {
                int x = q.front();
                q.pop();
                for (int a = head_[static_cast<std::size_t>(x)]; a >= 0; a = arcs_[static_cast<std::size_t>(a)].next) {
                    const auto& arc = arcs_[static_cast<std::size_t>(a)];
                    if (arc.cap > 0 && via[static_cast<std::size_t>(arc.to)] == -1) {
                        via[static_cast<std::size_t>(arc.to)] = a;
                        q.push(arc.to);
                    }
                }
            }
            if (via[static_cast<std::size_t>(t)] == -1) {
                break;
            }
            int bottleneck = limit - flow;
            for (int x = t; x != s;) {
                int a = via[static_cast<std::size_t>(x)];
                bottleneck = std::min(bottleneck, arcs_[static_cast<std::size_t>(a)].cap);
                x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
            }
            for (int x = t; x != s;) {
                int a = via[static_cast<std::size_t>(x)];
                arcs_[static_cast<std::size_t>(a)].cap -= bottleneck;
                arcs_[static_cast<std::size_t>(a ^ 1)].cap += bottleneck;
                x = arcs_[static_cast<std::size_t>(a ^ 1)].to;
            }
            flow += bottleneck;
        }
        return flow;
    }

private:
    struct Arc {
        int to;
        int cap;
        int next;
    };

    void push(int a, int b, int cap) {
        arcs_.push_back(Arc{b, cap, head_[static_cast<std::size_t>(a)]});
        head_[static_cast<std::size_t>(a)] = static_cast<int>(arcs_.size()) - 1;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
};

}  // namespace hamcon::detail

#ifndef FORGE_SRC_MAXFLOW_HPP
#define FORGE_SRC_MAXFLOW_HPP

#include <algorithm>
#include <limits>
#include <queue>
#include <vector>

namespace forge {

// Dinic max-flow on a small integer-capacity digraph. Used for vertex
// connectivity (via vertex splitting) and for extracting vertex-disjoint
// path systems in product graphs.
class MaxFlow {
public:
    explicit MaxFlow(int node_count)
        : head_(node_count, -1), level_(node_count), iter_(node_count) {}

    int add_arc(int from, int to, int capacity) {
        int id = static_cast<int>(arcs_.size());
        arcs_.push_back({to, head_[from], capacity});
        head_[from] = id;
        arcs_.push_back({from, head_[to], 0});
        head_[to] = id + 1;
        return id;
    }

    // Augments until no path remains or the flow value reaches `limit`.
    int run(int source, int sink, int limit = std::numeric_limits<int>::max()) {
        int flow = 0;
        while (flow < limit && bfs(source, sink)) {
            iter_ = head_;
            while (flow < limit) {
                int pushed = dfs(source, sink, limit - flow);
                if (pushed == 0) break;
                flow += pushed;
            }
        }
        return flow;
    }

    int arc_flow(int arc_id) const { return arcs_[arc_id + 1].capacity; }

    // Arcs leaving `node` that carry positive flow, in insertion order.
    std::vector<std::pair<int, int>> flow_arcs_from(int node) const {
        std::vector<std::pair<int, int>> out;  // (arc_id, to)
        for (int a = head_[node]; a != -1; a = arcs_[a].next) {
            if (a % 2 == 0 && arcs_[a + 1].capacity > 0) out.push_back({a, arcs_[a].to});
        }
        // head_ chains arcs in reverse insertion order; restore it.
        std::reverse(out.begin(), out.end());
        return out;
    }

    void consume_unit(int arc_id) { arcs_[arc_id + 1].capacity -= 1; }

private:
    struct Arc {
        int to;
        int next;
        int capacity;
    };

    bool bfs(int source, int sink) {
        std::fill(level_.begin(), level_.end(), -1);
        std::queue<int> q;
        level_[source] = 0;
        q.push(source);
        while (!q.empty()) {
            int x = q.front();
            q.pop();
            for (int a = head_[x]; a != -1; a = arcs_[a].next) {
                if (arcs_[a].capacity > 0 && level_[arcs_[a].to] < 0) {
                    level_[arcs_[a].to] = level_[x] + 1;
                    q.push(arcs_[a].to);
                }
            }
        }
        return level_[sink] >= 0;
    }

    int dfs(int x, int sink, int limit) {
        if (x == sink) return limit;
        for (int& a = iter_[x]; a != -1; a = arcs_[a].next) {
            Arc& arc = arcs_[a];
            if (arc.capacity > 0 && level_[arc.to] == level_[x] + 1) {
                int pushed = dfs(arc.to, sink, std::min(limit, arc.capacity));
                if (pushed > 0) {
                    arc.capacity -= pushed;
                    arcs_[a ^ 1].capacity += pushed;
                    return pushed;
                }
            }
        }
        level_[x] = -1;
        return 0;
    }

    std::vector<Arc> arcs_;
    std::vector<int> head_;
    std::vector<int> level_;
    std::vector<int> iter_;
};

}  // namespace forge

#endif

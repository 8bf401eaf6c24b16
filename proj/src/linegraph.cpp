#include "hamcon/linegraph.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "hamcon/error.hpp"
#include "hamcon/invariants.hpp"

namespace hamcon {

LineGraphMap line_graph(const Multigraph& h) {
    int m = h.edge_count();
    std::vector<std::pair<int, int>> adj;
    for (int v = 0; v < h.vertex_count(); ++v) {
        auto inc = h.incidences(VertexId{v});
        for (std::size_t i = 0; i < inc.size(); ++i) {
            for (std::size_t j = i + 1; j < inc.size(); ++j) {
                int a = std::min(inc[i].edge.index, inc[j].edge.index);
                int b = std::max(inc[i].edge.index, inc[j].edge.index);
                adj.emplace_back(a, b);
            }
        }
    }
    // Parallel edges meet at both endpoints; keep each pair once.
    std::sort(adj.begin(), adj.end());
    adj.erase(std::unique(adj.begin(), adj.end()), adj.end());
    LineGraphMap map{h, SimpleGraph(m, adj), {}};
    map.edge_to_vertex.reserve(static_cast<std::size_t>(m));
    for (int e = 0; e < m; ++e) {
        map.edge_to_vertex.push_back(VertexId{e});
    }
    return map;
}

bool is_pendant(const Multigraph& h, EdgeId e) {
    const auto& ep = h.endpoints(e);
    return !ep.is_loop() && (h.degree(ep.u) == 1 || h.degree(ep.v) == 1);
}

std::vector<EdgeId> pendant_edges(const Multigraph& h) {
    std::vector<EdgeId> out;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (is_pendant(h, EdgeId{e})) {
            out.push_back(EdgeId{e});
        }
    }
    return out;
}

namespace {

// Assigns to every vertex of g the pair of H-vertices its edge joins, in BFS
// order so that each new vertex shares an H-vertex with its BFS parent. A
// simplicial vertex receives a private leaf as one endpoint; no other
// vertex may use a leaf, and non-simplicial vertices must not end with a
// degree-one endpoint.
class PreimageSearch {
public:
    explicit PreimageSearch(const SimpleGraph& g) : g_(g), n_(g.vertex_count()) {
        simplicial_.assign(static_cast<std::size_t>(n_), 0);
        for (VertexId v : simplicial_vertices(g)) {
            simplicial_[static_cast<std::size_t>(v.index)] = 1;
        }
        std::vector<char> seen(static_cast<std::size_t>(n_), 0);
        parent_.assign(static_cast<std::size_t>(n_), -1);
        order_.push_back(0);
        seen[0] = 1;
        for (std::size_t i = 0; i < order_.size(); ++i) {
            int x = order_[i];
            std::vector<int> nb;
            for (const auto& inc : g.incidences(VertexId{x})) {
                nb.push_back(inc.other.index);
            }
            std::sort(nb.begin(), nb.end());
            for (int y : nb) {
                if (!seen[static_cast<std::size_t>(y)]) {
                    seen[static_cast<std::size_t>(y)] = 1;
                    parent_[static_cast<std::size_t>(y)] = x;
                    order_.push_back(y);
                }
            }
        }
        ends_.assign(static_cast<std::size_t>(n_), {-1, -1});
    }

    bool connected() const { return static_cast<int>(order_.size()) == n_; }

    bool run() {
        int root = order_[0];
        bool leaf = simplicial_[static_cast<std::size_t>(root)] != 0;
        place(root, 0, 1, leaf);
        if (extend(1)) {
            return true;
        }
        return false;
    }

    Multigraph result() const {
        Multigraph h(static_cast<int>(uses_.size()));
        for (int a = 0; a < n_; ++a) {
            auto [x, y] = ends_[static_cast<std::size_t>(a)];
            h.add_edge(VertexId{x}, VertexId{y});
        }
        return h;
    }

private:
    int new_vertex() {
        uses_.push_back(0);
        leaf_.push_back(0);
        return static_cast<int>(uses_.size()) - 1;
    }

    // Second endpoint q == uses_.size() denotes a fresh vertex.
    void place(int a, int p, int q, bool leaf) {
        while (static_cast<int>(uses_.size()) <= std::max(p, q)) {
            new_vertex();
        }
        ends_[static_cast<std::size_t>(a)] = {p, q};
        ++uses_[static_cast<std::size_t>(p)];
        ++uses_[static_cast<std::size_t>(q)];
        if (leaf) {
            leaf_[static_cast<std::size_t>(q)] = 1;
        }
    }

    void unplace(int a, std::size_t vertex_count_before) {
        auto [p, q] = ends_[static_cast<std::size_t>(a)];
        --uses_[static_cast<std::size_t>(p)];
        --uses_[static_cast<std::size_t>(q)];
        leaf_[static_cast<std::size_t>(q)] = 0;
        ends_[static_cast<std::size_t>(a)] = {-1, -1};
        uses_.resize(vertex_count_before);
        leaf_.resize(vertex_count_before);
    }

    bool consistent(int a, int p, int q, std::size_t depth) const {
        for (std::size_t k = 0; k < depth; ++k) {
            int c = order_[k];
            auto [x, y] = ends_[static_cast<std::size_t>(c)];
            bool share = p == x || p == y || q == x || q == y;
            if (share != g_.adjacent(VertexId{a}, VertexId{c})) {
                return false;
            }
        }
        return true;
    }

    bool final_check() const {
        for (int a = 0; a < n_; ++a) {
            if (simplicial_[static_cast<std::size_t>(a)]) {
                continue;
            }
            auto [x, y] = ends_[static_cast<std::size_t>(a)];
            if (uses_[static_cast<std::size_t>(x)] == 1 || uses_[static_cast<std::size_t>(y)] == 1) {
                return false;
            }
        }
        return true;
    }

    bool extend(std::size_t depth) {
        if (depth == order_.size()) {
            return final_check();
        }
        int a = order_[depth];
        int b = parent_[static_cast<std::size_t>(a)];
        bool simplicial = simplicial_[static_cast<std::size_t>(a)] != 0;
        auto [bx, by] = ends_[static_cast<std::size_t>(b)];
        std::array<int, 2> shared{bx, by};
        int existing = static_cast<int>(uses_.size());
        std::vector<std::pair<int, int>> tried;
        for (int p : shared) {
            if (leaf_[static_cast<std::size_t>(p)]) {
                continue;
            }
            int q_lo = simplicial ? existing : 0;
            for (int q = q_lo; q <= existing; ++q) {
                if (q == p || (q < existing && leaf_[static_cast<std::size_t>(q)])) {
                    continue;
                }
                std::pair<int, int> key{std::min(p, q), std::max(p, q)};
                if (std::find(tried.begin(), tried.end(), key) != tried.end()) {
                    continue;
                }
                tried.push_back(key);
                if (!consistent(a, p, q, depth)) {
                    continue;
                }
                std::size_t before = uses_.size();
                place(a, p, q, simplicial);
                if (extend(depth + 1)) {
                    return true;
                }
                unplace(a, before);
            }
        }
        return false;
    }

    const SimpleGraph& g_;
    int n_;
    std::vector<char> simplicial_;
    std::vector<int> order_;
    std::vector<int> parent_;
    std::vector<std::pair<int, int>> ends_;
    std::vector<int> uses_;
    std::vector<char> leaf_;
};

}  // namespace

Multigraph preimage(const SimpleGraph& g) {
    if (g.vertex_count() == 0) {
        throw Error(ErrorKind::Disconnected, "empty graph has no preimage");
    }
    PreimageSearch search(g);
    if (!search.connected()) {
        throw Error(ErrorKind::Disconnected, "preimage needs a connected graph");
    }
    if (!search.run()) {
        std::string detail = "no multigraph H with L(H) isomorphic to the input";
        if (auto claw = find_claw(g)) {
            detail += "; induced claw centred at " + std::to_string((*claw)[0].index) + " with leaves " +
                      std::to_string((*claw)[1].index) + "," + std::to_string((*claw)[2].index) + "," +
                      std::to_string((*claw)[3].index);
        }
        throw Error(ErrorKind::NotALineGraphOfMultigraph, detail);
    }
    return search.result();
}

bool is_line_graph_of_multigraph(const SimpleGraph& g) {
    if (g.vertex_count() == 0 || !is_connected(g) || !is_claw_free(g)) {
        return false;
    }
    PreimageSearch search(g);
    return search.run();
}

}  // namespace hamcon

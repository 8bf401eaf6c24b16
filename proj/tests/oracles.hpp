#pragma once

// Brute-force reference implementations used only by the tests. Each one
// follows the textbook definition as directly as possible and shares no code
// with the library beyond the graph containers.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hamcon/multigraph.hpp"

namespace oracle {

using hamcon::EdgeId;
using hamcon::Multigraph;
using hamcon::SimpleGraph;
using hamcon::VertexId;

inline bool adj(const SimpleGraph& g, int a, int b) { return g.adjacent(VertexId{a}, VertexId{b}); }

inline bool connected_without(const SimpleGraph& g, std::uint64_t removed) {
    int n = g.vertex_count();
    int start = -1;
    int alive = 0;
    for (int v = 0; v < n; ++v) {
        if (!((removed >> v) & 1U)) {
            ++alive;
            if (start < 0) {
                start = v;
            }
        }
    }
    if (alive <= 1) {
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    std::vector<int> stack{start};
    seen[static_cast<std::size_t>(start)] = 1;
    int reached = 0;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        ++reached;
        for (int y = 0; y < n; ++y) {
            if (!seen[static_cast<std::size_t>(y)] && !((removed >> y) & 1U) && adj(g, x, y)) {
                seen[static_cast<std::size_t>(y)] = 1;
                stack.push_back(y);
            }
        }
    }
    return reached == alive;
}

inline bool claw_free(const SimpleGraph& g) {
    int n = g.vertex_count();
    for (int c = 0; c < n; ++c) {
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                for (int d = b + 1; d < n; ++d) {
                    if (a == c || b == c || d == c) {
                        continue;
                    }
                    if (adj(g, c, a) && adj(g, c, b) && adj(g, c, d) && !adj(g, a, b) && !adj(g, a, d) &&
                        !adj(g, b, d)) {
                        return false;
                    }
                }
            }
        }
    }
    return true;
}

// Smallest vertex set whose removal disconnects g or leaves one vertex;
// n - 1 for complete graphs.
inline int vertex_connectivity(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n <= 1) {
        return 0;
    }
    int best = n - 1;
    for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
        int size = std::popcount(s);
        if (size < best && size <= n - 2 && !connected_without(g, s)) {
            best = size;
        }
    }
    return best;
}

inline int domination_number(const SimpleGraph& g) {
    int n = g.vertex_count();
    for (int k = 0; k <= n; ++k) {
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s) {
            if (std::popcount(s) != k) {
                continue;
            }
            bool ok = true;
            for (int v = 0; v < n && ok; ++v) {
                bool hit = (s >> v) & 1U;
                for (int u = 0; u < n && !hit; ++u) {
                    hit = ((s >> u) & 1U) && adj(g, u, v);
                }
                ok = hit;
            }
            if (ok) {
                return k;
            }
        }
    }
    return n;
}

inline bool simplicial(const SimpleGraph& g, int v) {
    int n = g.vertex_count();
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            if (a != v && b != v && adj(g, v, a) && adj(g, v, b) && !adj(g, a, b)) {
                return false;
            }
        }
    }
    return true;
}

inline std::optional<std::vector<int>> ham_path(const SimpleGraph& g, int a, int b) {
    int n = g.vertex_count();
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    do {
        if (p.front() != a || p.back() != b) {
            continue;
        }
        bool ok = true;
        for (int i = 0; i + 1 < n && ok; ++i) {
            ok = adj(g, p[static_cast<std::size_t>(i)], p[static_cast<std::size_t>(i) + 1]);
        }
        if (ok) {
            return p;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return std::nullopt;
}

inline bool hamiltonian(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n < 3) {
        return false;
    }
    std::vector<int> p(static_cast<std::size_t>(n - 1));
    std::iota(p.begin(), p.end(), 1);
    do {
        bool ok = adj(g, 0, p.front()) && adj(g, p.back(), 0);
        for (std::size_t i = 0; i + 1 < p.size() && ok; ++i) {
            ok = adj(g, p[i], p[i + 1]);
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

inline bool hamiltonian_connected(const SimpleGraph& g) {
    for (int a = 0; a < g.vertex_count(); ++a) {
        for (int b = a + 1; b < g.vertex_count(); ++b) {
            if (!ham_path(g, a, b)) {
                return false;
            }
        }
    }
    return true;
}

// Adjacency of L(h) straight from the definition: distinct edges meeting at
// a vertex.
inline std::vector<std::vector<char>> line_graph_matrix(const Multigraph& h) {
    int m = h.edge_count();
    std::vector<std::vector<char>> a(static_cast<std::size_t>(m), std::vector<char>(static_cast<std::size_t>(m), 0));
    for (int e = 0; e < m; ++e) {
        for (int f = 0; f < m; ++f) {
            if (e == f) {
                continue;
            }
            const auto& x = h.endpoints(EdgeId{e});
            const auto& y = h.endpoints(EdgeId{f});
            a[static_cast<std::size_t>(e)][static_cast<std::size_t>(f)] =
                x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v;
        }
    }
    return a;
}

inline bool multigraph_connected_without(const Multigraph& h, const std::vector<char>& cut) {
    int n = h.vertex_count();
    if (n == 0) {
        return true;
    }
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (int e = 0; e < h.edge_count(); ++e) {
            if (cut[static_cast<std::size_t>(e)]) {
                continue;
            }
            const auto& ep = h.endpoints(EdgeId{e});
            int& a = label[static_cast<std::size_t>(ep.u.index)];
            int& b = label[static_cast<std::size_t>(ep.v.index)];
            if (a != b) {
                a = b = std::min(a, b);
                changed = true;
            }
        }
    }
    return std::all_of(label.begin(), label.end(), [](int x) { return x == 0; });
}

inline int edge_connectivity(const Multigraph& h) {
    int m = h.edge_count();
    if (h.vertex_count() < 2 || !multigraph_connected_without(h, std::vector<char>(static_cast<std::size_t>(m), 0))) {
        return 0;
    }
    for (int k = 1; k <= m; ++k) {
        std::vector<char> pick(static_cast<std::size_t>(m), 0);
        std::fill(pick.end() - k, pick.end(), 1);
        do {
            if (!multigraph_connected_without(h, pick)) {
                return k;
            }
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return m;
}

// Components (after deleting `cut`) that still contain an edge.
inline int components_with_edges(const Multigraph& h, const std::vector<char>& cut) {
    int n = h.vertex_count();
    std::vector<int> label(static_cast<std::size_t>(n));
    std::iota(label.begin(), label.end(), 0);
    for (bool changed = true; changed;) {
        changed = false;
        for (int e = 0; e < h.edge_count(); ++e) {
            if (cut[static_cast<std::size_t>(e)]) {
                continue;
            }
            const auto& ep = h.endpoints(EdgeId{e});
            int& a = label[static_cast<std::size_t>(ep.u.index)];
            int& b = label[static_cast<std::size_t>(ep.v.index)];
            if (a != b) {
                a = b = std::min(a, b);
                changed = true;
            }
        }
    }
    std::set<int> with;
    for (int e = 0; e < h.edge_count(); ++e) {
        if (!cut[static_cast<std::size_t>(e)]) {
            with.insert(label[static_cast<std::size_t>(h.endpoints(EdgeId{e}).u.index)]);
        }
    }
    return static_cast<int>(with.size());
}

inline bool essentially_k_edge_connected(const Multigraph& h, int k) {
    int m = h.edge_count();
    for (int size = 1; size < k && size <= m; ++size) {
        std::vector<char> pick(static_cast<std::size_t>(m), 0);
        std::fill(pick.end() - size, pick.end(), 1);
        do {
            if (components_with_edges(h, pick) >= 2) {
                return false;
            }
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return true;
}

// Depth-first enumeration of trails by edge extension. visit(vertices,
// edges) is called for every trail (including the one-edge trails and the
// initial empty one at each start vertex); returning true stops the search.
using TrailVisitor = std::function<bool(const std::vector<int>&, const std::vector<int>&)>;

inline bool extend_trails(const Multigraph& h, std::vector<int>& vs, std::vector<int>& es, std::vector<char>& used,
                          const TrailVisitor& visit) {
    if (visit(vs, es)) {
        return true;
    }
    int cur = vs.back();
    for (const auto& inc : h.incidences(VertexId{cur})) {
        auto e = static_cast<std::size_t>(inc.edge.index);
        if (used[e]) {
            continue;
        }
        used[e] = 1;
        vs.push_back(inc.other.index);
        es.push_back(inc.edge.index);
        bool stop = extend_trails(h, vs, es, used, visit);
        vs.pop_back();
        es.pop_back();
        used[e] = 0;
        if (stop) {
            return true;
        }
    }
    return false;
}

inline bool any_trail(const Multigraph& h, const TrailVisitor& visit) {
    for (int s = 0; s < h.vertex_count(); ++s) {
        std::vector<int> vs{s};
        std::vector<int> es;
        std::vector<char> used(static_cast<std::size_t>(h.edge_count()), 0);
        if (extend_trails(h, vs, es, used, visit)) {
            return true;
        }
    }
    return false;
}

inline bool dominates(const Multigraph& h, const std::vector<int>& vertices) {
    for (const auto& ep : h.edges()) {
        bool hit = false;
        for (int v : vertices) {
            hit = hit || ep.u.index == v || ep.v.index == v;
        }
        if (!hit) {
            return false;
        }
    }
    return true;
}

inline bool has_closed_trail_through(const Multigraph& h, const std::vector<int>& a, int e) {
    return any_trail(h, [&](const std::vector<int>& vs, const std::vector<int>& es) {
        if (vs.front() != vs.back() || std::find(es.begin(), es.end(), e) == es.end()) {
            return false;
        }
        return std::all_of(a.begin(), a.end(),
                           [&](int x) { return std::find(vs.begin(), vs.end(), x) != vs.end(); });
    });
}

inline bool has_spanning_closed_trail(const Multigraph& h) {
    if (h.vertex_count() == 1) {
        return true;
    }
    return any_trail(h, [&](const std::vector<int>& vs, const std::vector<int>&) {
        return vs.size() > 1 && vs.front() == vs.back() &&
               std::set<int>(vs.begin(), vs.end()).size() == static_cast<std::size_t>(h.vertex_count());
    });
}

inline bool has_dct(const Multigraph& h) {
    return any_trail(h, [&](const std::vector<int>& vs, const std::vector<int>&) {
        return vs.front() == vs.back() && dominates(h, vs);
    });
}

inline bool has_idt(const Multigraph& h, int e1, int e2) {
    return any_trail(h, [&](const std::vector<int>& vs, const std::vector<int>& es) {
        if (es.size() < 2 || es.front() != e1 || es.back() != e2) {
            return false;
        }
        std::vector<int> interior(vs.begin() + 1, vs.end() - 1);
        return dominates(h, interior);
    });
}

// graph6 decoder that computes each bit position arithmetically instead of
// streaming.
inline std::vector<std::pair<int, int>> graph6_edges(const std::string& s, int* n_out) {
    int n = s[0] - 63;
    std::size_t data = 1;
    if (s[0] == 126) {
        n = ((s[1] - 63) << 12) | ((s[2] - 63) << 6) | (s[3] - 63);
        data = 4;
    }
    *n_out = n;
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            int k = j * (j - 1) / 2 + i;
            int byte = s[data + static_cast<std::size_t>(k / 6)] - 63;
            if ((byte >> (5 - k % 6)) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    std::sort(edges.begin(), edges.end());
    return edges;
}

}  // namespace oracle

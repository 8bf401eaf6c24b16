#include "hamcon/invariants.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "hamcon/error.hpp"
#include "unit_flow.hpp"

namespace hamcon {

namespace {

inline std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

inline int lowest(std::uint64_t mask) { return std::countr_zero(mask); }

// Vertices with index strictly greater than v.
inline std::uint64_t above(int v) { return v >= 63 ? 0 : ~((bit(v + 1)) - 1); }

}  // namespace

// ---------------------------------------------------------------------- claw

std::optional<Claw> find_claw(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (g.fits_bitset()) {
        auto rows = g.rows();
        for (int c = 0; c < n; ++c) {
            std::uint64_t nb = rows[static_cast<std::size_t>(c)];
            for (std::uint64_t as = nb; as != 0; as &= as - 1) {
                int a = lowest(as);
                std::uint64_t bs = nb & ~rows[static_cast<std::size_t>(a)] & above(a);
                for (; bs != 0; bs &= bs - 1) {
                    int b = lowest(bs);
                    std::uint64_t cs = bs & ~rows[static_cast<std::size_t>(b)] & above(b);
                    if (cs != 0) {
                        return Claw{VertexId{c}, VertexId{a}, VertexId{b}, VertexId{lowest(cs)}};
                    }
                }
            }
        }
        return std::nullopt;
    }
    for (int c = 0; c < n; ++c) {
        std::vector<VertexId> nb;
        for (const auto& inc : g.incidences(VertexId{c})) {
            nb.push_back(inc.other);
        }
        std::sort(nb.begin(), nb.end());
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                if (g.adjacent(nb[i], nb[j])) {
                    continue;
                }
                for (std::size_t k = j + 1; k < nb.size(); ++k) {
                    if (!g.adjacent(nb[i], nb[k]) && !g.adjacent(nb[j], nb[k])) {
                        return Claw{VertexId{c}, nb[i], nb[j], nb[k]};
                    }
                }
            }
        }
    }
    return std::nullopt;
}

bool is_claw_free(const SimpleGraph& g) { return !find_claw(g).has_value(); }

// -------------------------------------------------------------- connectivity

namespace {

bool is_complete(const SimpleGraph& g) {
    long n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

// Maximum number of internally vertex-disjoint s-t paths, capped at limit.
int local_vertex_connectivity(const SimpleGraph& g, int s, int t, int limit) {
    int n = g.vertex_count();
    detail::UnitFlow flow(2 * n);
    int inf = n;
    for (int v = 0; v < n; ++v) {
        flow.add_arc(2 * v, 2 * v + 1, (v == s || v == t) ? inf : 1);
    }
    for (const auto& ep : g.edges()) {
        flow.add_arc(2 * ep.u.index + 1, 2 * ep.v.index, inf);
        flow.add_arc(2 * ep.v.index + 1, 2 * ep.u.index, inf);
    }
    return flow.max_flow(2 * s + 1, 2 * t, limit);
}

}  // namespace

int vertex_connectivity(const SimpleGraph& g) {
    int n = g.vertex_count();
    if (n <= 1 || is_complete(g)) {
        return std::max(0, n - 1);
    }
    int best = n - 1;
    // A minimum separator misses one of the first best+1 vertices; the first
    // such vertex has every vertex across the separator at a higher index.
    for (int i = 0; i <= best && i < n; ++i) {
        for (int j = i + 1; j < n && best > 0; ++j) {
            if (!g.adjacent(VertexId{i}, VertexId{j})) {
                best = std::min(best, local_vertex_connectivity(g, i, j, best));
            }
        }
    }
    return best;
}

bool is_k_vertex_connected(const SimpleGraph& g, int k) {
    int n = g.vertex_count();
    if (k <= 0) {
        return true;
    }
    if (n <= k) {
        return false;
    }
    if (is_complete(g)) {
        return true;
    }
    if (g.fits_bitset()) {
        // Cheap necessary conditions first.
        for (int v = 0; v < n; ++v) {
            if (g.degree(VertexId{v}) < k) {
                return false;
            }
        }
    }
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (!g.adjacent(VertexId{i}, VertexId{j}) && local_vertex_connectivity(g, i, j, k) < k) {
                return false;
            }
        }
    }
    return true;
}

// ---------------------------------------------------------------- domination

bool dominates(const SimpleGraph& g, std::span<const VertexId> set) {
    std::vector<char> covered(static_cast<std::size_t>(g.vertex_count()), 0);
    for (VertexId v : set) {
        g.as_multigraph().check_vertex(v);
        covered[static_cast<std::size_t>(v.index)] = 1;
        for (const auto& inc : g.incidences(v)) {
            covered[static_cast<std::size_t>(inc.other.index)] = 1;
        }
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

namespace {

struct DominationSearch {
    std::vector<std::uint64_t> closed;
    std::uint64_t all = 0;
    int max_closed = 1;
    std::vector<int> chosen;

    bool search(std::uint64_t dominated, int left) {
        std::uint64_t open = all & ~dominated;
        if (open == 0) {
            return true;
        }
        if (left == 0 || std::popcount(open) > left * max_closed) {
            return false;
        }
        // Branch on the undominated vertex with the fewest ways to be covered.
        int pivot = -1;
        int pivot_options = 65;
        for (std::uint64_t m = open; m != 0; m &= m - 1) {
            int u = lowest(m);
            int options = std::popcount(closed[static_cast<std::size_t>(u)]);
            if (options < pivot_options) {
                pivot = u;
                pivot_options = options;
            }
        }
        std::vector<int> candidates;
        for (std::uint64_t m = closed[static_cast<std::size_t>(pivot)]; m != 0; m &= m - 1) {
            candidates.push_back(lowest(m));
        }
        std::sort(candidates.begin(), candidates.end(), [&](int a, int b) {
            int ga = std::popcount(closed[static_cast<std::size_t>(a)] & open);
            int gb = std::popcount(closed[static_cast<std::size_t>(b)] & open);
            return ga != gb ? ga > gb : a < b;
        });
        for (int w : candidates) {
            chosen.push_back(w);
            if (search(dominated | closed[static_cast<std::size_t>(w)], left - 1)) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<DominatingSet> has_dominating_set(const SimpleGraph& g, int k) {
    int n = g.vertex_count();
    if (k < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative domination bound");
    }
    if (n == 0) {
        return DominatingSet{};
    }
    DominationSearch s;
    s.all = g.all_vertices_mask();
    auto rows = g.rows();
    s.closed.resize(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        s.closed[static_cast<std::size_t>(v)] = rows[static_cast<std::size_t>(v)] | bit(v);
        s.max_closed = std::max(s.max_closed, std::popcount(s.closed[static_cast<std::size_t>(v)]));
    }

    // Greedy upper bound.
    std::vector<int> greedy;
    for (std::uint64_t dom = 0; dom != s.all;) {
        int best = 0;
        int gain = -1;
        for (int v = 0; v < n; ++v) {
            int gv = std::popcount(s.closed[static_cast<std::size_t>(v)] & ~dom);
            if (gv > gain) {
                best = v;
                gain = gv;
            }
        }
        greedy.push_back(best);
        dom |= s.closed[static_cast<std::size_t>(best)];
    }
    auto to_set = [](const std::vector<int>& vs) {
        DominatingSet d;
        for (int v : vs) {
            d.vertices.push_back(VertexId{v});
        }
        std::sort(d.vertices.begin(), d.vertices.end());
        return d;
    };
    if (static_cast<int>(greedy.size()) <= k) {
        return to_set(greedy);
    }
    if (s.search(0, k)) {
        return to_set(s.chosen);
    }
    return std::nullopt;
}

int domination_number(const SimpleGraph& g) {
    if (g.vertex_count() == 0) {
        throw Error(ErrorKind::InvalidArgument, "domination number of the empty graph");
    }
    for (int k = 1;; ++k) {
        if (has_dominating_set(g, k)) {
            return k;
        }
    }
}

// ---------------------------------------------------------------- simplicial

bool is_simplicial(const SimpleGraph& g, VertexId v) {
    auto inc = g.incidences(v);
    for (std::size_t i = 0; i < inc.size(); ++i) {
        for (std::size_t j = i + 1; j < inc.size(); ++j) {
            if (!g.adjacent(inc[i].other, inc[j].other)) {
                return false;
            }
        }
    }
    return true;
}

std::vector<VertexId> simplicial_vertices(const SimpleGraph& g) {
    std::vector<VertexId> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (is_simplicial(g, VertexId{v})) {
            out.push_back(VertexId{v});
        }
    }
    return out;
}

// ------------------------------------------------------ edge connectivity

int nontrivial_component_count(const Multigraph& h, std::span<const EdgeId> cut) {
    int n = h.vertex_count();
    std::vector<char> removed(static_cast<std::size_t>(h.edge_count()), 0);
    for (EdgeId e : cut) {
        removed[static_cast<std::size_t>(e.index)] = 1;
    }
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        parent[static_cast<std::size_t>(v)] = v;
    }
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        }
        return x;
    };
    std::vector<char> has_edge(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < h.edge_count(); ++e) {
        if (removed[static_cast<std::size_t>(e)]) {
            continue;
        }
        const auto& ep = h.endpoints(EdgeId{e});
        has_edge[static_cast<std::size_t>(ep.u.index)] = 1;
        has_edge[static_cast<std::size_t>(ep.v.index)] = 1;
        parent[static_cast<std::size_t>(find(ep.u.index))] = find(ep.v.index);
    }
    std::vector<char> counted(static_cast<std::size_t>(n), 0);
    int count = 0;
    for (int v = 0; v < n; ++v) {
        if (has_edge[static_cast<std::size_t>(v)]) {
            int r = find(v);
            if (!counted[static_cast<std::size_t>(r)]) {
                counted[static_cast<std::size_t>(r)] = 1;
                ++count;
            }
        }
    }
    return count;
}

namespace {

bool find_essential_cut(const Multigraph& h, int size, int start, std::vector<EdgeId>& cut) {
    if (static_cast<int>(cut.size()) == size) {
        return nontrivial_component_count(h, cut) >= 2;
    }
    for (int e = start; e < h.edge_count(); ++e) {
        cut.push_back(EdgeId{e});
        if (find_essential_cut(h, size, e + 1, cut)) {
            return true;
        }
        cut.pop_back();
    }
    return false;
}

}  // namespace

EssentialCutCheck is_essentially_k_edge_connected(const Multigraph& h, int k) {
    if (k < 1) {
        throw Error(ErrorKind::InvalidArgument, "k must be positive");
    }
    if (!is_connected(h)) {
        throw Error(ErrorKind::Disconnected, "essential edge-connectivity needs a connected multigraph");
    }
    for (int size = 1; size < k; ++size) {
        std::vector<EdgeId> cut;
        if (find_essential_cut(h, size, 0, cut)) {
            return EssentialCutCheck{false, cut};
        }
    }
    return EssentialCutCheck{};
}

int edge_connectivity(const Multigraph& h) {
    int n = h.vertex_count();
    if (n < 2) {
        return 0;
    }
    int best = h.edge_count();
    for (int t = 1; t < n && best > 0; ++t) {
        detail::UnitFlow flow(n);
        for (const auto& ep : h.edges()) {
            if (!ep.is_loop()) {
                flow.add_arc(ep.u.index, ep.v.index, 1, 1);
            }
        }
        best = std::min(best, flow.max_flow(0, t, best));
    }
    return best;
}

bool is_k_edge_connected(const Multigraph& h, int k) {
    if (k <= 0) {
        return true;
    }
    return h.vertex_count() >= 2 && edge_connectivity(h) >= k;
}

// --------------------------------------------------------- edge domination

bool vertices_dominate_edges(const Multigraph& h, std::span<const VertexId> vertices) {
    std::vector<char> in(static_cast<std::size_t>(h.vertex_count()), 0);
    for (VertexId v : vertices) {
        h.check_vertex(v);
        in[static_cast<std::size_t>(v.index)] = 1;
    }
    return std::all_of(h.edges().begin(), h.edges().end(), [&](const Endpoints& ep) {
        return in[static_cast<std::size_t>(ep.u.index)] || in[static_cast<std::size_t>(ep.v.index)];
    });
}

bool edge_triple_dominates(const Multigraph& h, std::span<const EdgeId> f) {
    std::vector<VertexId> ends;
    for (EdgeId e : f) {
        const auto& ep = h.endpoints(e);
        ends.push_back(ep.u);
        ends.push_back(ep.v);
    }
    return vertices_dominate_edges(h, ends);
}

}  // namespace hamcon

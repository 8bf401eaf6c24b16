#include "hamcon/trails.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <climits>
#include <numeric>
#include <string>
#include <unordered_set>

#include <omp.h>

#include "hamcon/error.hpp"
#include "hamcon/invariants.hpp"

namespace hamcon {

using Mask = std::uint64_t;

namespace {

inline Mask bit(int i) { return Mask{1} << i; }
inline int lowest(Mask m) { return std::countr_zero(m); }

}  // namespace

// --------------------------------------------------------------------- Trail

std::vector<VertexId> Trail::interior_vertices() const {
    if (closed()) {
        return vertex_set();
    }
    std::vector<VertexId> out;
    if (vertices.size() > 2) {
        out.assign(vertices.begin() + 1, vertices.end() - 1);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexId> Trail::vertex_set() const {
    std::vector<VertexId> out = vertices;
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

Trail Trail::reversed() const {
    Trail t{vertices, edges};
    std::reverse(t.vertices.begin(), t.vertices.end());
    std::reverse(t.edges.begin(), t.edges.end());
    return t;
}

std::string trail_defect(const Multigraph& host, const Trail& t) {
    if (t.vertices.size() != t.edges.size() + 1) {
        return "vertex count must exceed edge count by one";
    }
    for (VertexId v : t.vertices) {
        if (!host.has_vertex(v)) {
            return "unknown vertex " + std::to_string(v.index);
        }
    }
    std::vector<char> used(static_cast<std::size_t>(host.edge_count()), 0);
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        EdgeId e = t.edges[i];
        if (!host.has_edge(e)) {
            return "unknown edge " + std::to_string(e.index);
        }
        if (used[static_cast<std::size_t>(e.index)]) {
            return "edge " + std::to_string(e.index) + " repeated";
        }
        used[static_cast<std::size_t>(e.index)] = 1;
        const auto& ep = host.endpoints(e);
        VertexId a = t.vertices[i];
        VertexId b = t.vertices[i + 1];
        if (!((ep.u == a && ep.v == b) || (ep.u == b && ep.v == a))) {
            return "edge " + std::to_string(e.index) + " does not join positions " + std::to_string(i) +
                   " and " + std::to_string(i + 1);
        }
    }
    return {};
}

bool is_valid_trail(const Multigraph& host, const Trail& t) { return trail_defect(host, t).empty(); }

std::string idt_defect(const Multigraph& host, const IdtWitness& w) {
    if (auto d = trail_defect(host, w.trail); !d.empty()) {
        return d;
    }
    if (w.first_edge == w.last_edge) {
        return "terminal edges coincide";
    }
    if (w.trail.edges.size() < 2 || w.trail.edges.front() != w.first_edge || w.trail.edges.back() != w.last_edge) {
        return "terminal edges do not match";
    }
    std::vector<VertexId> interior(w.trail.vertices.begin() + 1, w.trail.vertices.end() - 1);
    if (!vertices_dominate_edges(host, interior)) {
        return "interior vertices do not dominate every edge";
    }
    return {};
}

bool is_valid_idt(const Multigraph& host, const IdtWitness& w) { return idt_defect(host, w).empty(); }

bool dominates_all_edges(const Multigraph& h, const Trail& t) {
    return vertices_dominate_edges(h, t.vertex_set());
}

// ------------------------------------------------------- cycle-space search

namespace {

constexpr int kMaxCycleSpaceDimension = 28;

// Spanning forest of the allowed edges plus the fundamental cycles of the
// non-tree edges, all as edge masks.
class CycleSpace {
public:
    CycleSpace(const Multigraph& h, Mask allowed, int prefer_non_tree = -1) : h_(h) {
        int n = h.vertex_count();
        parent_edge_.assign(static_cast<std::size_t>(n), -1);
        depth_.assign(static_cast<std::size_t>(n), 0);
        root_.assign(static_cast<std::size_t>(n), -1);
        std::vector<int> uf(static_cast<std::size_t>(n));
        std::iota(uf.begin(), uf.end(), 0);
        auto find = [&](int x) {
            while (uf[static_cast<std::size_t>(x)] != x) {
                x = uf[static_cast<std::size_t>(x)] = uf[static_cast<std::size_t>(uf[static_cast<std::size_t>(x)])];
            }
            return x;
        };
        Mask tree = 0;
        auto consider = [&](int e) {
            const auto& ep = h.endpoints(EdgeId{e});
            int a = find(ep.u.index);
            int b = find(ep.v.index);
            if (a != b) {
                uf[static_cast<std::size_t>(a)] = b;
                tree |= bit(e);
            }
        };
        for (Mask m = allowed; m != 0; m &= m - 1) {
            if (lowest(m) != prefer_non_tree) {
                consider(lowest(m));
            }
        }
        if (prefer_non_tree >= 0 && (allowed & bit(prefer_non_tree))) {
            consider(prefer_non_tree);
        }
        tree_ = tree;
        // Root every tree and record parent edges.
        std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
        for (Mask m = tree; m != 0; m &= m - 1) {
            int e = lowest(m);
            const auto& ep = h.endpoints(EdgeId{e});
            adj[static_cast<std::size_t>(ep.u.index)].emplace_back(ep.v.index, e);
            adj[static_cast<std::size_t>(ep.v.index)].emplace_back(ep.u.index, e);
        }
        for (int r = 0; r < n; ++r) {
            if (root_[static_cast<std::size_t>(r)] >= 0) {
                continue;
            }
            root_[static_cast<std::size_t>(r)] = r;
            std::vector<int> stack{r};
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (auto [y, e] : adj[static_cast<std::size_t>(x)]) {
                    if (root_[static_cast<std::size_t>(y)] < 0) {
                        root_[static_cast<std::size_t>(y)] = r;
                        parent_edge_[static_cast<std::size_t>(y)] = e;
                        depth_[static_cast<std::size_t>(y)] = depth_[static_cast<std::size_t>(x)] + 1;
                        stack.push_back(y);
                    }
                }
            }
        }
        for (Mask m = allowed & ~tree; m != 0; m &= m - 1) {
            int e = lowest(m);
            const auto& ep = h.endpoints(EdgeId{e});
            basis_.push_back(*tree_path(ep.u.index, ep.v.index) | bit(e));
            basis_edge_.push_back(e);
        }
    }

    std::optional<Mask> tree_path(int a, int b) const {
        if (root_[static_cast<std::size_t>(a)] != root_[static_cast<std::size_t>(b)]) {
            return std::nullopt;
        }
        Mask path = 0;
        while (a != b) {
            if (depth_[static_cast<std::size_t>(a)] < depth_[static_cast<std::size_t>(b)]) {
                std::swap(a, b);
            }
            int e = parent_edge_[static_cast<std::size_t>(a)];
            path ^= bit(e);
            a = h_.endpoints(EdgeId{e}).other(VertexId{a}).index;
        }
        return path;
    }

    bool is_tree_edge(int e) const { return (tree_ & bit(e)) != 0; }
    const std::vector<Mask>& basis() const { return basis_; }
    int basis_index_of(int e) const {
        auto it = std::find(basis_edge_.begin(), basis_edge_.end(), e);
        return it == basis_edge_.end() ? -1 : static_cast<int>(it - basis_edge_.begin());
    }

private:
    const Multigraph& h_;
    Mask tree_ = 0;
    std::vector<int> parent_edge_;
    std::vector<int> depth_;
    std::vector<int> root_;
    std::vector<Mask> basis_;
    std::vector<int> basis_edge_;
};

struct EdgeMasks {
    std::vector<Mask> ends;  // endpoint set of each edge as a vertex mask
    Mask loop_free = 0;

    explicit EdgeMasks(const Multigraph& h) {
        if (h.edge_count() > 64 || h.vertex_count() > 64) {
            throw Error(ErrorKind::SizeLimit, "trail search supports at most 64 edges and 64 vertices");
        }
        for (int e = 0; e < h.edge_count(); ++e) {
            const auto& ep = h.endpoints(EdgeId{e});
            ends.push_back(bit(ep.u.index) | bit(ep.v.index));
            if (!ep.is_loop()) {
                loop_free |= bit(e);
            }
        }
    }

    Mask vertices_of(Mask edges) const {
        Mask v = 0;
        for (; edges != 0; edges &= edges - 1) {
            v |= ends[static_cast<std::size_t>(lowest(edges))];
        }
        return v;
    }

    bool connected(Mask edges) const {
        if (edges == 0) {
            return true;
        }
        Mask comp = ends[static_cast<std::size_t>(lowest(edges))];
        Mask rest = edges;
        for (bool grew = true; grew;) {
            grew = false;
            for (Mask m = rest; m != 0; m &= m - 1) {
                int e = lowest(m);
                if (ends[static_cast<std::size_t>(e)] & comp) {
                    comp |= ends[static_cast<std::size_t>(e)];
                    rest &= ~bit(e);
                    grew = true;
                }
            }
        }
        return rest == 0;
    }

    bool dominates(Mask vertices) const {
        return std::all_of(ends.begin(), ends.end(), [&](Mask e) { return (e & vertices) != 0; });
    }
};

// Visits start, then start xor every combination of `vary`, in Gray-code
// order, until visit returns true.
template <typename Visit>
std::optional<Mask> enumerate_coset(Mask start, const std::vector<Mask>& vary, Visit&& visit) {
    if (vary.size() > static_cast<std::size_t>(kMaxCycleSpaceDimension)) {
        throw Error(ErrorKind::SizeLimit,
                    "cycle space dimension " + std::to_string(vary.size()) + " exceeds search limit");
    }
    Mask current = start;
    if (visit(current)) {
        return current;
    }
    std::uint64_t total = std::uint64_t{1} << vary.size();
    for (std::uint64_t i = 1; i < total; ++i) {
        current ^= vary[static_cast<std::size_t>(std::countr_zero(i))];
        if (visit(current)) {
            return current;
        }
    }
    return std::nullopt;
}

// Euler circuit (start == end) or trail of the given edge set.
Trail euler_walk(const Multigraph& h, Mask edges, int start, int end) {
    int n = h.vertex_count();
    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (Mask m = edges; m != 0; m &= m - 1) {
        int e = lowest(m);
        const auto& ep = h.endpoints(EdgeId{e});
        adj[static_cast<std::size_t>(ep.u.index)].emplace_back(ep.v.index, e);
        adj[static_cast<std::size_t>(ep.v.index)].emplace_back(ep.u.index, e);
    }
    // A virtual edge end->start closes an open trail into a circuit.
    int virtual_edge = -1;
    if (start != end) {
        virtual_edge = 64;
        adj[static_cast<std::size_t>(end)].emplace_back(start, virtual_edge);
        adj[static_cast<std::size_t>(start)].emplace_back(end, virtual_edge);
    }
    std::vector<char> used(65, 0);
    std::vector<std::size_t> ptr(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> stack{{start, -1}};
    std::vector<std::pair<int, int>> circuit;
    while (!stack.empty()) {
        auto [v, in] = stack.back();
        auto& list = adj[static_cast<std::size_t>(v)];
        auto& p = ptr[static_cast<std::size_t>(v)];
        while (p < list.size() && used[static_cast<std::size_t>(list[p].second)]) {
            ++p;
        }
        if (p == list.size()) {
            circuit.emplace_back(v, in);
            stack.pop_back();
        } else {
            auto [w, e] = list[p];
            used[static_cast<std::size_t>(e)] = 1;
            stack.emplace_back(w, e);
        }
    }
    std::reverse(circuit.begin(), circuit.end());
    // circuit[i].second is the edge entering circuit[i].first.
    std::vector<int> vs;
    std::vector<int> es;
    for (std::size_t i = 0; i < circuit.size(); ++i) {
        vs.push_back(circuit[i].first);
        if (i > 0) {
            es.push_back(circuit[i].second);
        }
    }
    if (virtual_edge >= 0) {
        // Start right after the virtual edge and stop just before it.
        std::size_t len = es.size();
        std::size_t k = static_cast<std::size_t>(std::find(es.begin(), es.end(), virtual_edge) - es.begin());
        std::vector<int> rv;
        std::vector<int> re;
        for (std::size_t j = 0; j < len; ++j) {
            rv.push_back(vs[(k + 1 + j) % len]);
            if (j + 1 < len) {
                re.push_back(es[(k + 1 + j) % len]);
            }
        }
        vs = std::move(rv);
        es = std::move(re);
        if (vs.front() != start) {
            std::reverse(vs.begin(), vs.end());
            std::reverse(es.begin(), es.end());
        }
    }
    Trail t;
    for (int v : vs) {
        t.vertices.push_back(VertexId{v});
    }
    for (int e : es) {
        t.edges.push_back(EdgeId{e});
    }
    return t;
}

// Rotates a closed trail so that it starts by traversing e from `from`.
// Even connected subgraph of the loop-free edges that contains every
// required vertex and (when required_edge >= 0) the required edge; if
// dominate is set its vertex set must also touch every edge of h. Never
// returns the empty set.
std::optional<Mask> search_even_subgraph(const Multigraph& h, const EdgeMasks& masks, Mask required_vertices,
                                         int required_edge, bool dominate) {
    Mask allowed = masks.loop_free;
    CycleSpace space(h, allowed, required_edge);
    std::vector<Mask> vary = space.basis();
    Mask start = 0;
    if (required_edge >= 0) {
        if (space.is_tree_edge(required_edge)) {
            return std::nullopt;  // a bridge lies on no closed trail
        }
        int idx = space.basis_index_of(required_edge);
        start = vary[static_cast<std::size_t>(idx)];
        vary.erase(vary.begin() + idx);
    }
    return enumerate_coset(start, vary, [&](Mask s) {
        if (s == 0) {
            return false;
        }
        Mask vs = masks.vertices_of(s);
        if ((vs & required_vertices) != required_vertices) {
            return false;
        }
        if (dominate && !masks.dominates(vs)) {
            return false;
        }
        return masks.connected(s);
    });
}

// Inserts the loop `loop` at the first visit of its vertex.
Trail splice_loop(const Multigraph& h, Trail t, EdgeId loop) {
    VertexId v = h.endpoints(loop).u;
    auto it = std::find(t.vertices.begin(), t.vertices.end(), v);
    std::size_t k = static_cast<std::size_t>(it - t.vertices.begin());
    t.vertices.insert(t.vertices.begin() + static_cast<std::ptrdiff_t>(k), v);
    t.edges.insert(t.edges.begin() + static_cast<std::ptrdiff_t>(k), loop);
    return t;
}

}  // namespace

Trail rotate_closed_trail(const Trail& t, EdgeId e, VertexId from) {
    std::size_t k = static_cast<std::size_t>(std::find(t.edges.begin(), t.edges.end(), e) - t.edges.begin());
    std::size_t len = t.edges.size();
    Trail r;
    for (std::size_t i = 0; i < len; ++i) {
        r.vertices.push_back(t.vertices[(k + i) % len]);
        r.edges.push_back(t.edges[(k + i) % len]);
    }
    r.vertices.push_back(r.vertices.front());
    if (r.vertices.front() != from) {
        r = r.reversed();
        // After reversal e is last; move it to the front again.
        Trail s;
        s.vertices.push_back(r.vertices[len - 1]);
        s.edges.push_back(r.edges[len - 1]);
        for (std::size_t i = 0; i + 1 < len; ++i) {
            s.vertices.push_back(r.vertices[i]);
            s.edges.push_back(r.edges[i]);
        }
        s.vertices.push_back(s.vertices.front());
        r = s;
    }
    return r;
}

std::optional<Trail> find_closed_trail_through(const Multigraph& h, std::span<const VertexId> required, EdgeId e) {
    h.check_edge(e);
    EdgeMasks masks(h);
    Mask req = 0;
    for (VertexId v : required) {
        h.check_vertex(v);
        req |= bit(v.index);
    }
    const auto& ep = h.endpoints(e);
    if (ep.is_loop()) {
        // The loop can be spliced into any closed trail through its vertex.
        req |= bit(ep.u.index);
        if (std::popcount(req) == 1) {
            return splice_loop(h, Trail::at(ep.u), e);
        }
        auto s = search_even_subgraph(h, masks, req, -1, false);
        if (!s) {
            return std::nullopt;
        }
        int start = ep.u.index;
        return splice_loop(h, euler_walk(h, *s, start, start), e);
    }
    auto s = search_even_subgraph(h, masks, req, e.index, false);
    if (!s) {
        return std::nullopt;
    }
    Trail t = euler_walk(h, *s, ep.u.index, ep.u.index);
    return rotate_closed_trail(t, e, ep.u);
}

std::optional<Trail> find_spanning_closed_trail(const Multigraph& h) {
    int n = h.vertex_count();
    if (n == 0) {
        return std::nullopt;
    }
    if (n == 1) {
        return Trail::at(VertexId{0});
    }
    EdgeMasks masks(h);
    Mask all = n == 64 ? ~Mask{0} : bit(n) - 1;
    auto s = search_even_subgraph(h, masks, all, -1, false);
    if (!s) {
        return std::nullopt;
    }
    return euler_walk(h, *s, 0, 0);
}

std::optional<Trail> find_dct(const Multigraph& h) {
    if (h.vertex_count() == 0) {
        return std::nullopt;
    }
    EdgeMasks masks(h);
    for (int v = 0; v < h.vertex_count(); ++v) {
        if (masks.dominates(bit(v))) {
            return Trail::at(VertexId{v});
        }
    }
    auto s = search_even_subgraph(h, masks, 0, -1, true);
    if (!s) {
        return std::nullopt;
    }
    int start = lowest(masks.vertices_of(*s));
    return euler_walk(h, *s, start, start);
}

std::optional<IdtWitness> find_idt(const Multigraph& h, EdgeId e1, EdgeId e2) {
    h.check_edge(e1);
    h.check_edge(e2);
    if (e1 == e2) {
        throw Error(ErrorKind::InvalidArgument, "an IDT needs two distinct terminal edges");
    }
    EdgeMasks masks(h);
    Mask allowed = masks.loop_free & ~bit(e1.index) & ~bit(e2.index);
    CycleSpace space(h, allowed);
    const auto& p1 = h.endpoints(e1);
    const auto& p2 = h.endpoints(e2);
    std::vector<std::pair<VertexId, VertexId>> first{{p1.u, p1.v}};
    if (!p1.is_loop()) {
        first.emplace_back(p1.v, p1.u);
    }
    std::vector<std::pair<VertexId, VertexId>> last{{p2.u, p2.v}};
    if (!p2.is_loop()) {
        last.emplace_back(p2.v, p2.u);
    }
    for (auto [v0, v1] : first) {
        for (auto [vk1, vk] : last) {
            int s = v1.index;
            int t = vk1.index;
            auto path = space.tree_path(s, t);
            if (!path) {
                continue;
            }
            auto found = enumerate_coset(*path, space.basis(), [&](Mask middle) {
                if (middle == 0) {
                    return s == t && masks.dominates(bit(s));
                }
                Mask vs = masks.vertices_of(middle);
                return (vs & bit(s)) != 0 && masks.dominates(vs) && masks.connected(middle);
            });
            if (!found) {
                continue;
            }
            Trail mid = *found == 0 ? Trail::at(v1) : euler_walk(h, *found, s, t);
            IdtWitness w;
            w.first_edge = e1;
            w.last_edge = e2;
            w.trail.vertices.push_back(v0);
            w.trail.edges.push_back(e1);
            w.trail.vertices.insert(w.trail.vertices.end(), mid.vertices.begin(), mid.vertices.end());
            w.trail.edges.insert(w.trail.edges.end(), mid.edges.begin(), mid.edges.end());
            w.trail.edges.push_back(e2);
            w.trail.vertices.push_back(vk);
            return w;
        }
    }
    return std::nullopt;
}

// ------------------------------------------------------------- hamiltonicity

namespace {

struct StateKey {
    Mask visited;
    int current;
    friend bool operator==(const StateKey&, const StateKey&) = default;
};

struct StateHash {
    std::size_t operator()(const StateKey& k) const noexcept {
        return std::hash<Mask>{}(k.visited * 0x9E3779B97F4A7C15ULL ^ static_cast<Mask>(k.current));
    }
};

// Depth-first path extension over adjacency bitmasks with degree, forced-move
// and reachability pruning plus a table of states already shown dead.
class HamiltonEngine {
public:
    static constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

    explicit HamiltonEngine(const SimpleGraph& g)
        : rows_(g.rows().begin(), g.rows().end()), n_(g.vertex_count()), all_(g.all_vertices_mask()) {}

    // Path from start visiting every vertex and ending in `ends`. With
    // end_last, ends is a single vertex that may only be entered last.
    std::optional<std::vector<int>> run(int start, Mask ends, bool end_last) {
        ends_ = ends;
        end_last_ = end_last;
        dead_.clear();
        path_.assign(1, start);
        if (dfs(start, bit(start))) {
            return path_;
        }
        return std::nullopt;
    }

private:
    // Returns false when (cur, visited) cannot be completed; otherwise sets
    // forced to the mandatory next vertex or -1.
    bool feasible(int cur, Mask visited, int& forced) const {
        Mask un = all_ & ~visited;
        Mask avail = un | bit(cur);
        forced = -1;
        for (Mask m = un; m != 0; m &= m - 1) {
            int w = lowest(m);
            Mask nb = rows_[static_cast<std::size_t>(w)];
            int da = std::popcount(nb & avail);
            if (ends_ & bit(w)) {
                if (da < 1) {
                    return false;
                }
                if (end_last_ && da == 1 && (nb & bit(cur)) && un != bit(w)) {
                    return false;
                }
                continue;
            }
            if (da < 2 || (nb & un) == 0) {
                return false;
            }
            if (da == 2 && (nb & bit(cur))) {
                if (forced >= 0) {
                    return false;
                }
                forced = w;
            }
        }
        // Every unvisited vertex must be reachable from cur through unvisited ones.
        Mask reach = rows_[static_cast<std::size_t>(cur)] & un;
        Mask frontier = reach;
        while (frontier != 0) {
            Mask next = 0;
            for (Mask m = frontier; m != 0; m &= m - 1) {
                next |= rows_[static_cast<std::size_t>(lowest(m))];
            }
            next &= un & ~reach;
            reach |= next;
            frontier = next;
        }
        return reach == un;
    }

    bool dfs(int cur, Mask visited) {
        if (visited == all_) {
            return (ends_ & bit(cur)) != 0;
        }
        StateKey key{visited, cur};
        if (dead_.count(key) != 0) {
            return false;
        }
        int forced = -1;
        if (!feasible(cur, visited, forced)) {
            remember(key);
            return false;
        }
        Mask un = all_ & ~visited;
        Mask cand = rows_[static_cast<std::size_t>(cur)] & un;
        if (end_last_ && un != ends_) {
            cand &= ~ends_;
        }
        if (forced >= 0) {
            cand &= bit(forced);
        }
        int order[64];
        int count = 0;
        for (Mask m = cand; m != 0; m &= m - 1) {
            order[count++] = lowest(m);
        }
        // Fewest onward options first.
        std::sort(order, order + count, [&](int a, int b) {
            int da = std::popcount(rows_[static_cast<std::size_t>(a)] & un);
            int db = std::popcount(rows_[static_cast<std::size_t>(b)] & un);
            return da != db ? da < db : a < b;
        });
        for (int i = 0; i < count; ++i) {
            int w = order[i];
            path_.push_back(w);
            if (dfs(w, visited | bit(w))) {
                return true;
            }
            path_.pop_back();
        }
        remember(key);
        return false;
    }

    void remember(const StateKey& key) {
        if (dead_.size() < kMemoLimit) {
            dead_.insert(key);
        }
    }

    std::vector<Mask> rows_;
    int n_;
    Mask all_;
    Mask ends_ = 0;
    bool end_last_ = false;
    std::vector<int> path_;
    std::unordered_set<StateKey, StateHash> dead_;
};

Trail path_to_trail(const SimpleGraph& g, const std::vector<int>& path) {
    Trail t;
    for (std::size_t i = 0; i < path.size(); ++i) {
        t.vertices.push_back(VertexId{path[i]});
        if (i > 0) {
            t.edges.push_back(*g.edge_between(VertexId{path[i - 1]}, VertexId{path[i]}));
        }
    }
    return t;
}

}  // namespace

bool is_hamiltonian_path(const SimpleGraph& g, const Trail& t, VertexId a, VertexId b) {
    if (!is_valid_trail(g.as_multigraph(), t) || t.vertices.empty()) {
        return false;
    }
    if (t.vertices.front() != a || t.vertices.back() != b) {
        return false;
    }
    if (static_cast<int>(t.vertices.size()) != g.vertex_count()) {
        return false;
    }
    return static_cast<int>(t.vertex_set().size()) == g.vertex_count();
}

std::optional<Trail> hamiltonian_path(const SimpleGraph& g, VertexId a, VertexId b) {
    g.as_multigraph().check_vertex(a);
    g.as_multigraph().check_vertex(b);
    if (a == b) {
        throw Error(ErrorKind::InvalidArgument, "hamiltonian path needs distinct endpoints");
    }
    HamiltonEngine engine(g);
    auto path = engine.run(a.index, bit(b.index), true);
    if (!path) {
        return std::nullopt;
    }
    return path_to_trail(g, *path);
}

std::optional<Trail> hamiltonian_cycle(const SimpleGraph& g) {
    if (g.vertex_count() < 3) {
        throw Error(ErrorKind::InvalidArgument, "hamiltonicity is defined here for at least 3 vertices");
    }
    HamiltonEngine engine(g);
    auto path = engine.run(0, g.row(VertexId{0}), false);
    if (!path) {
        return std::nullopt;
    }
    path->push_back(0);
    return path_to_trail(g, *path);
}

bool is_hamiltonian(const SimpleGraph& g) { return hamiltonian_cycle(g).has_value(); }

namespace {

std::vector<std::pair<int, int>> all_pairs(int n) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < n; ++a) {
        for (int b = a + 1; b < n; ++b) {
            pairs.emplace_back(a, b);
        }
    }
    return pairs;
}

HamiltonianConnectivity failure_at(int a, int b) {
    return HamiltonianConnectivity{false, std::make_pair(VertexId{a}, VertexId{b})};
}

}  // namespace

HamiltonianConnectivity is_hamiltonian_connected_serial(const SimpleGraph& g) {
    HamiltonEngine engine(g);
    for (auto [a, b] : all_pairs(g.vertex_count())) {
        if (!engine.run(a, bit(b), true)) {
            return failure_at(a, b);
        }
    }
    return HamiltonianConnectivity{};
}

HamiltonianConnectivity is_hamiltonian_connected(const SimpleGraph& g, int workers) {
    if (workers == 1) {
        return is_hamiltonian_connected_serial(g);
    }
    auto pairs = all_pairs(g.vertex_count());
    (void)g.rows();  // surface SizeLimit before entering the parallel region
    std::atomic<long> first_failure{LONG_MAX};
    long count = static_cast<long>(pairs.size());
    int threads = workers > 0 ? workers : omp_get_max_threads();
#pragma omp parallel num_threads(threads)
    {
        HamiltonEngine engine(g);
#pragma omp for schedule(dynamic, 1)
        for (long i = 0; i < count; ++i) {
            if (i > first_failure.load(std::memory_order_relaxed)) {
                continue;
            }
            auto [a, b] = pairs[static_cast<std::size_t>(i)];
            if (!engine.run(a, bit(b), true)) {
                long seen = first_failure.load();
                while (i < seen && !first_failure.compare_exchange_weak(seen, i)) {
                }
            }
        }
    }
    if (first_failure.load() == LONG_MAX) {
        return HamiltonianConnectivity{};
    }
    auto [a, b] = pairs[static_cast<std::size_t>(first_failure.load())];
    return failure_at(a, b);
}

}  // namespace hamcon

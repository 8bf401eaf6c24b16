#include "hamcon/multigraph.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hamcon/error.hpp"

namespace hamcon {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
    case ErrorKind::UnknownVertex: return "UnknownVertex";
    case ErrorKind::UnknownEdge: return "UnknownEdge";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::SizeLimit: return "SizeLimit";
    case ErrorKind::Disconnected: return "Disconnected";
    case ErrorKind::NotALineGraphOfMultigraph: return "NotALineGraphOfMultigraph";
    case ErrorKind::DegenerateCore: return "DegenerateCore";
    case ErrorKind::NotEssentially3EdgeConnected: return "NotEssentially3EdgeConnected";
    case ErrorKind::NoCoreLocation: return "NoCoreLocation";
    case ErrorKind::TrailNotFound: return "TrailNotFound";
    case ErrorKind::LiftFailed: return "LiftFailed";
    case ErrorKind::InvalidTrail: return "InvalidTrail";
    case ErrorKind::Parse: return "Parse";
    }
    return "Unknown";
}

// ---------------------------------------------------------------- Multigraph

Multigraph::Multigraph(int vertex_count) {
    if (vertex_count < 0) {
        throw Error(ErrorKind::InvalidArgument, "negative vertex count");
    }
    incidences_.resize(static_cast<std::size_t>(vertex_count));
    loops_.assign(static_cast<std::size_t>(vertex_count), 0);
}

Multigraph::Multigraph(int vertex_count, std::span<const std::pair<int, int>> edges)
    : Multigraph(vertex_count) {
    for (auto [u, v] : edges) {
        add_edge(VertexId{u}, VertexId{v});
    }
}

VertexId Multigraph::add_vertex() {
    incidences_.emplace_back();
    loops_.push_back(0);
    return VertexId{vertex_count() - 1};
}

EdgeId Multigraph::add_edge(VertexId u, VertexId v) {
    check_vertex(u);
    check_vertex(v);
    if (v < u) {
        std::swap(u, v);
    }
    EdgeId id{edge_count()};
    edges_.push_back(Endpoints{u, v});
    incidences_[static_cast<std::size_t>(u.index)].push_back(Incidence{id, v});
    if (u == v) {
        ++loops_[static_cast<std::size_t>(u.index)];
    } else {
        incidences_[static_cast<std::size_t>(v.index)].push_back(Incidence{id, u});
    }
    return id;
}

void Multigraph::check_vertex(VertexId v) const {
    if (!has_vertex(v)) {
        throw Error(ErrorKind::UnknownVertex, "vertex " + std::to_string(v.index));
    }
}

void Multigraph::check_edge(EdgeId e) const {
    if (!has_edge(e)) {
        throw Error(ErrorKind::UnknownEdge, "edge " + std::to_string(e.index));
    }
}

const Endpoints& Multigraph::endpoints(EdgeId e) const {
    check_edge(e);
    return edges_[static_cast<std::size_t>(e.index)];
}

std::span<const Incidence> Multigraph::incidences(VertexId v) const {
    check_vertex(v);
    return incidences_[static_cast<std::size_t>(v.index)];
}

int Multigraph::degree(VertexId v) const {
    check_vertex(v);
    auto i = static_cast<std::size_t>(v.index);
    return static_cast<int>(incidences_[i].size()) + loops_[i];
}

int Multigraph::loop_count(VertexId v) const {
    check_vertex(v);
    return loops_[static_cast<std::size_t>(v.index)];
}

int Multigraph::multiplicity(VertexId u, VertexId v) const {
    check_vertex(v);
    int count = 0;
    for (const auto& inc : incidences(u)) {
        count += inc.other == v ? 1 : 0;
    }
    return count;
}

bool operator==(const Multigraph& a, const Multigraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    for (std::size_t i = 0; i < a.edges_.size(); ++i) {
        if (a.edges_[i].u != b.edges_[i].u || a.edges_[i].v != b.edges_[i].v) {
            return false;
        }
    }
    return true;
}

// --------------------------------------------------------------- SimpleGraph

SimpleGraph::SimpleGraph(int vertex_count) : graph_(vertex_count) {
    auto n = static_cast<std::size_t>(vertex_count);
    edge_index_.assign(n * n, -1);
    if (fits_bitset()) {
        rows_.assign(n, 0);
    }
}

SimpleGraph::SimpleGraph(int vertex_count, std::span<const std::pair<int, int>> edges)
    : SimpleGraph(vertex_count) {
    for (auto [u, v] : edges) {
        add_edge_checked(u, v);
    }
}

void SimpleGraph::add_edge_checked(int u, int v) {
    VertexId a{u};
    VertexId b{v};
    graph_.check_vertex(a);
    graph_.check_vertex(b);
    if (u == v) {
        throw Error(ErrorKind::InvalidArgument, "loop at vertex " + std::to_string(u));
    }
    auto n = static_cast<std::size_t>(vertex_count());
    auto slot = static_cast<std::size_t>(u) * n + static_cast<std::size_t>(v);
    if (edge_index_[slot] >= 0) {
        throw Error(ErrorKind::InvalidArgument,
                    "parallel edge " + std::to_string(u) + " " + std::to_string(v));
    }
    EdgeId id = graph_.add_edge(a, b);
    edge_index_[slot] = id.index;
    edge_index_[static_cast<std::size_t>(v) * n + static_cast<std::size_t>(u)] = id.index;
    if (!rows_.empty()) {
        rows_[static_cast<std::size_t>(u)] |= std::uint64_t{1} << v;
        rows_[static_cast<std::size_t>(v)] |= std::uint64_t{1} << u;
    }
}

SimpleGraph SimpleGraph::from_multigraph(const Multigraph& g) {
    SimpleGraph s(g.vertex_count());
    for (const auto& ep : g.edges()) {
        s.add_edge_checked(ep.u.index, ep.v.index);
    }
    return s;
}

std::optional<EdgeId> SimpleGraph::edge_between(VertexId u, VertexId v) const {
    graph_.check_vertex(u);
    graph_.check_vertex(v);
    auto n = static_cast<std::size_t>(vertex_count());
    int id = edge_index_[static_cast<std::size_t>(u.index) * n + static_cast<std::size_t>(v.index)];
    if (id < 0) {
        return std::nullopt;
    }
    return EdgeId{id};
}

bool SimpleGraph::adjacent(VertexId u, VertexId v) const { return edge_between(u, v).has_value(); }

std::uint64_t SimpleGraph::row(VertexId v) const {
    graph_.check_vertex(v);
    return rows()[static_cast<std::size_t>(v.index)];
}

std::span<const std::uint64_t> SimpleGraph::rows() const {
    if (!fits_bitset()) {
        throw Error(ErrorKind::SizeLimit,
                    "bitset kernels support at most 64 vertices, got " + std::to_string(vertex_count()));
    }
    return rows_;
}

std::uint64_t SimpleGraph::all_vertices_mask() const {
    if (!fits_bitset()) {
        throw Error(ErrorKind::SizeLimit, "graph too large for bitset kernels");
    }
    int n = vertex_count();
    return n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
}

// ------------------------------------------------------------------- editing

int degree(const Multigraph& g, VertexId v) { return g.degree(v); }

Subdivision subdivide(const Multigraph& g, EdgeId e) {
    g.check_edge(e);
    Endpoints ep = g.endpoints(e);
    Multigraph out(g.vertex_count() + 1);
    VertexId w{g.vertex_count()};
    for (int i = 0; i < g.edge_count(); ++i) {
        if (i == e.index) {
            out.add_edge(ep.u, w);
        } else {
            const auto& other = g.endpoints(EdgeId{i});
            out.add_edge(other.u, other.v);
        }
    }
    EdgeId eb = out.add_edge(w, ep.v);
    return Subdivision{std::move(out), w, e, eb};
}

namespace {

// Rebuilds g without the flagged vertices and edges. Kept elements retain
// their relative order.
EdgeRemoval rebuild(const Multigraph& g, const std::vector<char>& drop_vertex,
                    const std::vector<char>& drop_edge) {
    Renumbering ren;
    ren.vertex.resize(static_cast<std::size_t>(g.vertex_count()));
    ren.edge.resize(static_cast<std::size_t>(g.edge_count()));
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (!drop_vertex[static_cast<std::size_t>(v)]) {
            ren.vertex[static_cast<std::size_t>(v)] = VertexId{next++};
        }
    }
    Multigraph out(next);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (drop_edge[static_cast<std::size_t>(e)]) {
            continue;
        }
        const auto& ep = g.endpoints(EdgeId{e});
        auto u = ren.vertex[static_cast<std::size_t>(ep.u.index)];
        auto v = ren.vertex[static_cast<std::size_t>(ep.v.index)];
        if (!u || !v) {
            throw Error(ErrorKind::InvalidArgument, "kept edge incident to a dropped vertex");
        }
        ren.edge[static_cast<std::size_t>(e)] = out.add_edge(*u, *v);
    }
    return EdgeRemoval{std::move(out), std::move(ren)};
}

}  // namespace

Suppression suppress(const Multigraph& g, VertexId v) {
    g.check_vertex(v);
    if (g.loop_count(v) > 0) {
        throw Error(ErrorKind::InvalidArgument, "cannot suppress a vertex carrying a loop");
    }
    if (g.degree(v) != 2) {
        throw Error(ErrorKind::InvalidArgument,
                    "suppress needs degree 2, vertex " + std::to_string(v.index) + " has degree " +
                        std::to_string(g.degree(v)));
    }
    auto inc = g.incidences(v);
    VertexId a = inc[0].other;
    VertexId b = inc[1].other;
    std::vector<char> drop_vertex(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<char> drop_edge(static_cast<std::size_t>(g.edge_count()), 0);
    drop_vertex[static_cast<std::size_t>(v.index)] = 1;
    drop_edge[static_cast<std::size_t>(inc[0].edge.index)] = 1;
    drop_edge[static_cast<std::size_t>(inc[1].edge.index)] = 1;
    auto removal = rebuild(g, drop_vertex, drop_edge);
    auto na = removal.renumbering.vertex[static_cast<std::size_t>(a.index)];
    auto nb = removal.renumbering.vertex[static_cast<std::size_t>(b.index)];
    EdgeId merged = removal.graph.add_edge(*na, *nb);
    return Suppression{std::move(removal.graph), merged, std::move(removal.renumbering)};
}

EdgeRemoval remove_edges(const Multigraph& g, std::span<const EdgeId> edges, bool drop_isolated) {
    std::vector<char> drop_edge(static_cast<std::size_t>(g.edge_count()), 0);
    for (EdgeId e : edges) {
        g.check_edge(e);
        drop_edge[static_cast<std::size_t>(e.index)] = 1;
    }
    std::vector<char> drop_vertex(static_cast<std::size_t>(g.vertex_count()), 0);
    if (drop_isolated) {
        std::vector<int> remaining(static_cast<std::size_t>(g.vertex_count()), 0);
        for (int e = 0; e < g.edge_count(); ++e) {
            if (!drop_edge[static_cast<std::size_t>(e)]) {
                const auto& ep = g.endpoints(EdgeId{e});
                ++remaining[static_cast<std::size_t>(ep.u.index)];
                ++remaining[static_cast<std::size_t>(ep.v.index)];
            }
        }
        for (std::size_t v = 0; v < remaining.size(); ++v) {
            drop_vertex[v] = remaining[v] == 0 ? 1 : 0;
        }
    }
    return rebuild(g, drop_vertex, drop_edge);
}

ContractionMap contract(const Multigraph& g, std::span<const EdgeId> r_edges) {
    std::vector<int> parent(static_cast<std::size_t>(g.vertex_count()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            auto& p = parent[static_cast<std::size_t>(x)];
            p = parent[static_cast<std::size_t>(p)];
            x = p;
        }
        return x;
    };
    for (EdgeId e : r_edges) {
        const auto& ep = g.endpoints(e);
        parent[static_cast<std::size_t>(find(ep.u.index))] = find(ep.v.index);
    }
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    int count = 0;
    ContractionMap map;
    map.source = g;
    map.vertex_map.resize(static_cast<std::size_t>(g.vertex_count()));
    for (int v = 0; v < g.vertex_count(); ++v) {
        int root = find(v);
        if (label[static_cast<std::size_t>(root)] < 0) {
            label[static_cast<std::size_t>(root)] = count++;
        }
        map.vertex_map[static_cast<std::size_t>(v)] = VertexId{label[static_cast<std::size_t>(root)]};
    }
    map.target = Multigraph(count);
    map.edge_map.resize(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& ep = g.endpoints(EdgeId{e});
        VertexId a = map.vertex_map[static_cast<std::size_t>(ep.u.index)];
        VertexId b = map.vertex_map[static_cast<std::size_t>(ep.v.index)];
        if (a != b) {
            map.edge_map[static_cast<std::size_t>(e)] = map.target.add_edge(a, b);
        }
    }
    return map;
}

// -------------------------------------------------------------- connectivity

std::vector<int> component_labels(const Multigraph& g, int* count) {
    std::vector<int> label(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> stack;
    int next = 0;
    for (int s = 0; s < g.vertex_count(); ++s) {
        if (label[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        label[static_cast<std::size_t>(s)] = next;
        stack.push_back(s);
        while (!stack.empty()) {
            int x = stack.back();
            stack.pop_back();
            for (const auto& inc : g.incidences(VertexId{x})) {
                auto& l = label[static_cast<std::size_t>(inc.other.index)];
                if (l < 0) {
                    l = next;
                    stack.push_back(inc.other.index);
                }
            }
        }
        ++next;
    }
    if (count != nullptr) {
        *count = next;
    }
    return label;
}

bool is_connected(const Multigraph& g) {
    int count = 0;
    component_labels(g, &count);
    return count <= 1;
}

bool is_connected(const SimpleGraph& g) { return is_connected(g.as_multigraph()); }

// --------------------------------------------------------------- isomorphism

namespace {

struct IsoSearch {
    int n = 0;
    std::vector<int> mult_a;
    std::vector<int> mult_b;
    std::vector<std::uint64_t> inv_a;
    std::vector<std::uint64_t> inv_b;
    std::vector<int> order;
    std::vector<int> map;
    std::vector<char> used;

    int ma(int i, int j) const { return mult_a[static_cast<std::size_t>(i * n + j)]; }
    int mb(int i, int j) const { return mult_b[static_cast<std::size_t>(i * n + j)]; }

    bool extend(std::size_t depth) {
        if (depth == order.size()) {
            return true;
        }
        int x = order[depth];
        for (int y = 0; y < n; ++y) {
            if (used[static_cast<std::size_t>(y)] ||
                inv_a[static_cast<std::size_t>(x)] != inv_b[static_cast<std::size_t>(y)] ||
                ma(x, x) != mb(y, y)) {
                continue;
            }
            bool ok = true;
            for (std::size_t k = 0; k < depth && ok; ++k) {
                int px = order[k];
                ok = ma(x, px) == mb(y, map[static_cast<std::size_t>(px)]);
            }
            if (!ok) {
                continue;
            }
            used[static_cast<std::size_t>(y)] = 1;
            map[static_cast<std::size_t>(x)] = y;
            if (extend(depth + 1)) {
                return true;
            }
            used[static_cast<std::size_t>(y)] = 0;
        }
        return false;
    }
};

std::vector<int> multiplicity_matrix(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<int> m(static_cast<std::size_t>(n * n), 0);
    for (const auto& ep : g.edges()) {
        ++m[static_cast<std::size_t>(ep.u.index * n + ep.v.index)];
        if (!ep.is_loop()) {
            ++m[static_cast<std::size_t>(ep.v.index * n + ep.u.index)];
        }
    }
    return m;
}

// Degree, loop count and the sorted multiset of (neighbour degree,
// multiplicity) folded into one hash.
std::vector<std::uint64_t> vertex_invariants(const Multigraph& g) {
    int n = g.vertex_count();
    std::vector<std::uint64_t> inv(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        std::vector<std::uint64_t> nb;
        for (const auto& inc : g.incidences(VertexId{v})) {
            nb.push_back(static_cast<std::uint64_t>(g.degree(inc.other)));
        }
        std::sort(nb.begin(), nb.end());
        std::uint64_t h = static_cast<std::uint64_t>(g.degree(VertexId{v})) * 0x9E3779B97F4A7C15ULL;
        h ^= static_cast<std::uint64_t>(g.loop_count(VertexId{v})) + 0x7F4A7C15ULL + (h << 6) + (h >> 2);
        for (auto d : nb) {
            h ^= d + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        }
        inv[static_cast<std::size_t>(v)] = h;
    }
    return inv;
}

}  // namespace

std::optional<std::vector<VertexId>> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                                      IsomorphismOptions options) {
    if (a.vertex_count() > options.max_vertices || b.vertex_count() > options.max_vertices) {
        throw Error(ErrorKind::SizeLimit, "isomorphism test limited to " +
                                              std::to_string(options.max_vertices) + " vertices");
    }
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return std::nullopt;
    }
    IsoSearch s;
    s.n = a.vertex_count();
    s.mult_a = multiplicity_matrix(a);
    s.mult_b = multiplicity_matrix(b);
    s.inv_a = vertex_invariants(a);
    s.inv_b = vertex_invariants(b);
    {
        auto sa = s.inv_a;
        auto sb = s.inv_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb) {
            return std::nullopt;
        }
    }
    // Order: rarest invariant first, then greedily the vertex with the most
    // already-ordered neighbours.
    std::vector<char> placed(static_cast<std::size_t>(s.n), 0);
    std::vector<int> links(static_cast<std::size_t>(s.n), 0);
    auto frequency = [&](int v) {
        return std::count(s.inv_a.begin(), s.inv_a.end(), s.inv_a[static_cast<std::size_t>(v)]);
    };
    for (int step = 0; step < s.n; ++step) {
        int best = -1;
        for (int v = 0; v < s.n; ++v) {
            if (placed[static_cast<std::size_t>(v)]) {
                continue;
            }
            if (best < 0 || links[static_cast<std::size_t>(v)] > links[static_cast<std::size_t>(best)] ||
                (links[static_cast<std::size_t>(v)] == links[static_cast<std::size_t>(best)] &&
                 frequency(v) < frequency(best))) {
                best = v;
            }
        }
        placed[static_cast<std::size_t>(best)] = 1;
        s.order.push_back(best);
        for (const auto& inc : a.incidences(VertexId{best})) {
            ++links[static_cast<std::size_t>(inc.other.index)];
        }
    }
    s.map.assign(static_cast<std::size_t>(s.n), -1);
    s.used.assign(static_cast<std::size_t>(s.n), 0);
    if (!s.extend(0)) {
        return std::nullopt;
    }
    std::vector<VertexId> out;
    out.reserve(static_cast<std::size_t>(s.n));
    for (int v : s.map) {
        out.push_back(VertexId{v});
    }
    return out;
}

bool isomorphic(const Multigraph& a, const Multigraph& b, IsomorphismOptions options) {
    return find_isomorphism(a, b, options).has_value();
}

bool is_isomorphism(const Multigraph& a, const Multigraph& b, std::span<const VertexId> map) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count() ||
        map.size() != static_cast<std::size_t>(n)) {
        return false;
    }
    std::vector<char> hit(static_cast<std::size_t>(n), 0);
    for (VertexId y : map) {
        if (!b.has_vertex(y) || hit[static_cast<std::size_t>(y.index)]) {
            return false;
        }
        hit[static_cast<std::size_t>(y.index)] = 1;
    }
    auto ma = multiplicity_matrix(a);
    auto mb = multiplicity_matrix(b);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            int bi = map[static_cast<std::size_t>(i)].index;
            int bj = map[static_cast<std::size_t>(j)].index;
            if (ma[static_cast<std::size_t>(i * n + j)] != mb[static_cast<std::size_t>(bi * n + bj)]) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace hamcon

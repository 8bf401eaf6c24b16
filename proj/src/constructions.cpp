#include "hamcon/constructions.hpp"

#include <algorithm>
#include <utility>

#include "hamcon/error.hpp"
#include "hamcon/linegraph.hpp"

namespace hamcon {

SimpleGraph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(i, i + 5);
        edges.emplace_back(i + 5, (i + 2) % 5 + 5);
    }
    return SimpleGraph(10, edges);
}

SimpleGraph wagner() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 8; ++i) {
        edges.emplace_back(i, (i + 1) % 8);
    }
    for (int i = 0; i < 4; ++i) {
        edges.emplace_back(i, i + 4);
    }
    return SimpleGraph(8, edges);
}

Counterexample wagner_counterexample(int pendants_per_vertex) {
    if (pendants_per_vertex < 1) {
        throw Error(ErrorKind::InvalidArgument, "need at least one pendant edge per vertex");
    }
    Multigraph h = wagner().as_multigraph();
    for (int v = 0; v < 8; ++v) {
        for (int k = 0; k < pendants_per_vertex; ++k) {
            h.add_edge(VertexId{v}, h.add_vertex());
        }
    }
    return Counterexample{line_graph(h).target, std::move(h)};
}

std::string_view to_string(PetersenDefect d) {
    switch (d) {
        case PetersenDefect::MalformedMap: return "MalformedMap";
        case PetersenDefect::TargetNotPetersen: return "TargetNotPetersen";
        case PetersenDefect::EmptyFiber: return "EmptyFiber";
        case PetersenDefect::FiberDisconnected: return "FiberDisconnected";
        case PetersenDefect::EdgeMapInconsistent: return "EdgeMapInconsistent";
        case PetersenDefect::EdgeNotMapped: return "EdgeNotMapped";
        case PetersenDefect::WrongImageOfA: return "WrongImageOfA";
    }
    return "unknown";
}

namespace {

bool fiber_connected(const Multigraph& g, const std::vector<VertexId>& vmap, int label, VertexId start) {
    std::vector<char> seen(static_cast<std::size_t>(g.vertex_count()), 0);
    std::vector<VertexId> stack{start};
    seen[static_cast<std::size_t>(start.index)] = 1;
    int reached = 0;
    while (!stack.empty()) {
        VertexId x = stack.back();
        stack.pop_back();
        ++reached;
        for (const auto& inc : g.incidences(x)) {
            auto y = static_cast<std::size_t>(inc.other.index);
            if (!seen[y] && vmap[y].index == label) {
                seen[y] = 1;
                stack.push_back(inc.other);
            }
        }
    }
    auto size = std::count_if(vmap.begin(), vmap.end(), [&](VertexId v) { return v.index == label; });
    return reached == size;
}

}  // namespace

PetersenWitnessCheck verify_petersen_witness(const PetersenWitness& w) {
    const auto& m = w.map;
    const Multigraph& s = m.source;
    const Multigraph& t = m.target;
    auto fail = [](PetersenDefect d) { return PetersenWitnessCheck{d}; };
    if (m.vertex_map.size() != static_cast<std::size_t>(s.vertex_count()) ||
        m.edge_map.size() != static_cast<std::size_t>(s.edge_count())) {
        return fail(PetersenDefect::MalformedMap);
    }
    for (VertexId v : m.vertex_map) {
        if (!t.has_vertex(v)) {
            return fail(PetersenDefect::MalformedMap);
        }
    }
    for (const auto& e : m.edge_map) {
        if (e && !t.has_edge(*e)) {
            return fail(PetersenDefect::MalformedMap);
        }
    }
    if (t.vertex_count() != 10 || !isomorphic(t, petersen().as_multigraph())) {
        return fail(PetersenDefect::TargetNotPetersen);
    }
    std::vector<std::optional<VertexId>> rep(static_cast<std::size_t>(t.vertex_count()));
    for (int v = 0; v < s.vertex_count(); ++v) {
        auto& r = rep[static_cast<std::size_t>(m.vertex_map[static_cast<std::size_t>(v)].index)];
        if (!r) {
            r = VertexId{v};
        }
    }
    for (int x = 0; x < t.vertex_count(); ++x) {
        if (!rep[static_cast<std::size_t>(x)]) {
            return fail(PetersenDefect::EmptyFiber);
        }
    }
    for (int x = 0; x < t.vertex_count(); ++x) {
        if (!fiber_connected(s, m.vertex_map, x, *rep[static_cast<std::size_t>(x)])) {
            return fail(PetersenDefect::FiberDisconnected);
        }
    }
    // Every edge between fibers must map to a distinct target edge joining
    // the images, and every target edge must be hit.
    std::vector<int> hits(static_cast<std::size_t>(t.edge_count()), 0);
    for (int e = 0; e < s.edge_count(); ++e) {
        const auto& ep = s.endpoints(EdgeId{e});
        VertexId a = m.vertex_map[static_cast<std::size_t>(ep.u.index)];
        VertexId b = m.vertex_map[static_cast<std::size_t>(ep.v.index)];
        const auto& image = m.edge_map[static_cast<std::size_t>(e)];
        if (a == b) {
            if (image) {
                return fail(PetersenDefect::EdgeMapInconsistent);
            }
            continue;
        }
        if (!image) {
            return fail(PetersenDefect::EdgeMapInconsistent);
        }
        const auto& tp = t.endpoints(*image);
        if (!(tp.touches(a) && tp.touches(b))) {
            return fail(PetersenDefect::EdgeMapInconsistent);
        }
        ++hits[static_cast<std::size_t>(image->index)];
    }
    if (std::any_of(hits.begin(), hits.end(), [](int h) { return h != 1; })) {
        return fail(PetersenDefect::EdgeMapInconsistent);
    }
    if (!s.has_edge(w.e) || !m.edge_map[static_cast<std::size_t>(w.e.index)]) {
        return fail(PetersenDefect::EdgeNotMapped);
    }
    const auto& xy = t.endpoints(*m.edge_map[static_cast<std::size_t>(w.e.index)]);
    std::vector<char> want(static_cast<std::size_t>(t.vertex_count()), 1);
    want[static_cast<std::size_t>(xy.u.index)] = 0;
    want[static_cast<std::size_t>(xy.v.index)] = 0;
    std::vector<char> got(static_cast<std::size_t>(t.vertex_count()), 0);
    for (VertexId v : w.a) {
        if (!s.has_vertex(v)) {
            return fail(PetersenDefect::WrongImageOfA);
        }
        got[static_cast<std::size_t>(m.vertex_map[static_cast<std::size_t>(v.index)].index)] = 1;
    }
    if (got != want) {
        return fail(PetersenDefect::WrongImageOfA);
    }
    return {};
}

}  // namespace hamcon

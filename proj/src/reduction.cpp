#include "hamcon/reduction.hpp"

#include <algorithm>
#include <string>

namespace hamcon {

namespace {

std::string edge_name(EdgeId e) { return "edge " + std::to_string(e.index); }

EdgeId smallest_core_edge_at(const Multigraph& core, VertexId c) {
    std::optional<EdgeId> best;
    std::optional<EdgeId> best_loop;
    for (const auto& inc : core.incidences(c)) {
        auto& slot = inc.other == c ? best_loop : best;
        if (!slot || inc.edge < *slot) {
            slot = inc.edge;
        }
    }
    if (best) {
        return *best;
    }
    if (best_loop) {
        return *best_loop;
    }
    throw Error(ErrorKind::NoCoreLocation, "core vertex " + std::to_string(c.index) + " has no edges");
}

// Core edge that a surviving H vertex sits on or at.
std::optional<EdgeId> core_edge_near(const CoreMap& cm, VertexId x) {
    if (auto image = cm.vertex_image[static_cast<std::size_t>(x.index)]) {
        return smallest_core_edge_at(cm.core, *image);
    }
    return cm.suppressed_location[static_cast<std::size_t>(x.index)];
}

Trail join(Trail a, const Trail& b) {
    if (a.vertices.back() != b.vertices.front()) {
        throw Error(ErrorKind::LiftFailed, "pieces of the IDT do not meet");
    }
    a.vertices.insert(a.vertices.end(), b.vertices.begin() + 1, b.vertices.end());
    a.edges.insert(a.edges.end(), b.edges.begin(), b.edges.end());
    return a;
}

// Trail of H that starts with e and walks along the expansion of core edge c
// to its first (toward_start) or last vertex. e either lies on the expansion
// or is a removed pendant hanging off it.
Trail approach(const CoreMap& cm, EdgeId e, EdgeId c, bool toward_start) {
    const Expansion& x = cm.edge_expansion[static_cast<std::size_t>(c.index)];
    std::size_t len = x.edges.size();
    Trail t;
    std::size_t pos;  // vertex index on the expansion where the walk joins it
    auto owned = std::find(x.edges.begin(), x.edges.end(), e);
    if (owned != x.edges.end()) {
        std::size_t i = static_cast<std::size_t>(owned - x.edges.begin());
        if (toward_start) {
            t.vertices = {x.vertices[i + 1], x.vertices[i]};
            pos = i;
        } else {
            t.vertices = {x.vertices[i], x.vertices[i + 1]};
            pos = i + 1;
        }
        t.edges = {e};
    } else {
        const auto& ep = cm.original.endpoints(e);
        std::optional<std::size_t> found;
        VertexId leaf;
        for (VertexId s : {ep.u, ep.v}) {
            for (std::size_t k = 0; k <= len && !found; ++k) {
                // On a closed expansion the end vertex appears twice; take the
                // copy on the requested side.
                std::size_t idx = toward_start ? k : len - k;
                if (x.vertices[idx] == s) {
                    found = idx;
                    leaf = ep.other(s);
                }
            }
            if (found) {
                break;
            }
        }
        if (!found) {
            throw Error(ErrorKind::LiftFailed, edge_name(e) + " does not touch the expansion of core " + edge_name(c));
        }
        pos = *found;
        t.vertices = {leaf, x.vertices[pos]};
        t.edges = {e};
    }
    if (toward_start) {
        for (std::size_t k = pos; k > 0; --k) {
            t.edges.push_back(x.edges[k - 1]);
            t.vertices.push_back(x.vertices[k - 1]);
        }
    } else {
        for (std::size_t k = pos; k < len; ++k) {
            t.edges.push_back(x.edges[k]);
            t.vertices.push_back(x.vertices[k + 1]);
        }
    }
    return t;
}

bool edge_disjoint(const Trail& a, const Trail& b) {
    for (EdgeId e : a.edges) {
        if (std::find(b.edges.begin(), b.edges.end(), e) != b.edges.end()) {
            return false;
        }
    }
    return true;
}

// Slice of a closed trail between positions from..to (vertex indices).
Trail slice(const Trail& t, std::size_t from, std::size_t to) {
    Trail s;
    s.vertices.assign(t.vertices.begin() + static_cast<std::ptrdiff_t>(from),
                      t.vertices.begin() + static_cast<std::ptrdiff_t>(to) + 1);
    s.edges.assign(t.edges.begin() + static_cast<std::ptrdiff_t>(from), t.edges.begin() + static_cast<std::ptrdiff_t>(to));
    return s;
}

bool toward_start_of(const CoreMap& cm, EdgeId c, VertexId core_vertex) {
    return cm.core.endpoints(c).u == core_vertex;
}

std::optional<IdtWitness> accept(const PipelineContext& ctx, Trail a1, const Trail& middle, const Trail& a2) {
    if (!edge_disjoint(a1, a2) || !edge_disjoint(a1, middle) || !edge_disjoint(middle, a2)) {
        return std::nullopt;
    }
    IdtWitness w{join(join(std::move(a1), middle), a2.reversed()), ctx.e1, ctx.e2};
    if (!is_valid_idt(ctx.h, w)) {
        return std::nullopt;
    }
    return w;
}

}  // namespace

std::string_view to_string(PipelineStage stage) {
    switch (stage) {
        case PipelineStage::Preimage: return "preimage";
        case PipelineStage::Core: return "core";
        case PipelineStage::Projection: return "projection";
        case PipelineStage::BuildHn: return "build_hn";
        case PipelineStage::PickZ: return "pick_z";
        case PipelineStage::ClosedTrail: return "closed_trail";
        case PipelineStage::Lift: return "lift";
        case PipelineStage::HamPath: return "ham_path";
    }
    return "unknown";
}

EdgeId project_edge(const CoreMap& cm, EdgeId e) {
    cm.original.check_edge(e);
    if (auto owner = cm.owning_core_edge[static_cast<std::size_t>(e.index)]) {
        return *owner;
    }
    const auto& ep = cm.original.endpoints(e);
    VertexId hi = cm.original.degree(ep.u) >= cm.original.degree(ep.v) ? ep.u : ep.v;
    if (auto c = core_edge_near(cm, hi)) {
        return *c;
    }
    if (auto c = core_edge_near(cm, ep.other(hi))) {
        return *c;
    }
    throw Error(ErrorKind::NoCoreLocation, "removed " + edge_name(e) + " has no surviving endpoint");
}

HnResult build_hn(const CoreMap& cm, EdgeId e0_1, EdgeId e0_2) {
    cm.core.check_edge(e0_1);
    cm.core.check_edge(e0_2);
    if (e0_1 == e0_2) {
        return HnResult{cm.core, e0_1, std::nullopt};
    }
    Subdivision s1 = subdivide(cm.core, e0_1);
    Subdivision s2 = subdivide(s1.graph, e0_2);
    HnResult r{std::move(s2.graph), EdgeId{}, std::nullopt};
    r.e_n = r.h_n.add_edge(s1.new_vertex, s2.new_vertex);
    r.subdivision = SubdivisionRecord{s1.new_vertex, s2.new_vertex, {s1.e_a, s1.e_b}, {s2.e_a, s2.e_b}};
    if (!is_k_edge_connected(r.h_n, 3)) {
        throw Error(ErrorKind::NotEssentially3EdgeConnected, "h_n is not 3-edge-connected");
    }
    return r;
}

std::vector<VertexId> pick_z(const CoreMap& cm, std::span<const EdgeId> f) {
    std::vector<VertexId> z;
    for (EdgeId e : f) {
        const auto& ep = cm.core.endpoints(project_edge(cm, e));
        z.push_back(ep.u);
        z.push_back(ep.v);
    }
    std::sort(z.begin(), z.end());
    z.erase(std::unique(z.begin(), z.end()), z.end());
    return z;
}

IdtWitness idt_from_trail(const PipelineContext& ctx, const Trail& t) {
    if (auto d = trail_defect(ctx.h_n, t); !d.empty() || !t.closed()) {
        throw Error(ErrorKind::LiftFailed, "input is not a closed trail of h_n");
    }
    if (std::find(t.edges.begin(), t.edges.end(), ctx.e_n) == t.edges.end()) {
        throw Error(ErrorKind::LiftFailed, "closed trail misses e_n");
    }
    const CoreMap& cm = ctx.cm;
    if (ctx.subdivision_record) {
        // w1 -e_n- w2 -half- p2 ... p1 -half- w1, and the middle avoids both
        // subdivided edges because each w has degree three.
        const auto& rec = *ctx.subdivision_record;
        Trail r = rotate_closed_trail(t, ctx.e_n, rec.w1);
        std::size_t len = r.edges.size();
        if (len < 3) {
            throw Error(ErrorKind::LiftFailed, "closed trail through e_n is too short");
        }
        VertexId p2 = r.vertices[2];
        VertexId p1 = r.vertices[len - 1];
        Trail middle = lift_trail(cm, slice(r, 2, len - 1)).reversed();
        Trail a1 = approach(cm, ctx.e1, ctx.e0_1, toward_start_of(cm, ctx.e0_1, p1));
        Trail a2 = approach(cm, ctx.e2, ctx.e0_2, toward_start_of(cm, ctx.e0_2, p2));
        if (auto w = accept(ctx, std::move(a1), middle, a2)) {
            return *w;
        }
        throw Error(ErrorKind::LiftFailed, "subdivided case produced an invalid IDT");
    }
    // e_n is the shared core edge c = q0q1; the rest of the trail runs q1 .. q0.
    EdgeId c = ctx.e_n;
    VertexId q0 = cm.core.endpoints(c).u;
    if (!cm.core.endpoints(c).is_loop()) {
        auto k = static_cast<std::size_t>(std::find(t.edges.begin(), t.edges.end(), c) - t.edges.begin());
        q0 = t.vertices[k];
    }
    Trail r = rotate_closed_trail(t, c, q0);
    VertexId q1 = r.vertices[1];
    Trail middle = lift_trail(cm, slice(r, 1, r.edges.size()));
    bool s1 = cm.core.endpoints(c).is_loop() || toward_start_of(cm, c, q1);
    for (bool flip : {false, true}) {
        bool side = flip ? !s1 : s1;
        Trail a1 = approach(cm, ctx.e1, c, side);
        Trail a2 = approach(cm, ctx.e2, c, !side);
        if (auto w = accept(ctx, std::move(a1), flip ? middle.reversed() : middle, a2)) {
            return *w;
        }
    }
    throw Error(ErrorKind::LiftFailed, "shared-edge case produced an invalid IDT");
}

Trail idt_to_ham_path(const LineGraphMap& lgm, const IdtWitness& w) {
    if (auto d = idt_defect(lgm.source, w); !d.empty()) {
        throw Error(ErrorKind::LiftFailed, "IDT rejected: " + d);
    }
    const Trail& t = w.trail;
    std::size_t k = t.edges.size();
    std::vector<char> on_trail(static_cast<std::size_t>(lgm.source.edge_count()), 0);
    for (EdgeId e : t.edges) {
        on_trail[static_cast<std::size_t>(e.index)] = 1;
    }
    // Interior position i sits between trail edges i-1 and i.
    std::vector<std::vector<EdgeId>> slot(k);
    for (int e = 0; e < lgm.source.edge_count(); ++e) {
        if (on_trail[static_cast<std::size_t>(e)]) {
            continue;
        }
        const auto& ep = lgm.source.endpoints(EdgeId{e});
        for (std::size_t i = 1; i < k; ++i) {
            if (ep.touches(t.vertices[i])) {
                slot[i].push_back(EdgeId{e});
                break;
            }
        }
    }
    Trail path;
    auto visit = [&](EdgeId e) {
        VertexId x = lgm.vertex_of(e);
        if (!path.vertices.empty()) {
            auto between = lgm.target.edge_between(path.vertices.back(), x);
            if (!between) {
                throw Error(ErrorKind::LiftFailed, "consecutive line-graph vertices are not adjacent");
            }
            path.edges.push_back(*between);
        }
        path.vertices.push_back(x);
    };
    for (std::size_t i = 0; i < k; ++i) {
        for (EdgeId e : slot[i]) {
            visit(e);
        }
        visit(t.edges[i]);
    }
    VertexId a = lgm.vertex_of(w.first_edge);
    VertexId b = lgm.vertex_of(w.last_edge);
    if (!is_hamiltonian_path(lgm.target, path, a, b)) {
        throw Error(ErrorKind::LiftFailed, "IDT did not convert to a hamiltonian path");
    }
    return path;
}

namespace {

// A star preimage has no core; any two edges meet at the centre, which
// dominates everything.
std::optional<IdtWitness> star_idt(const Multigraph& h, EdgeId e1, EdgeId e2) {
    const auto& p = h.endpoints(e1);
    const auto& q = h.endpoints(e2);
    for (VertexId centre : {p.u, p.v}) {
        if (!q.touches(centre)) {
            continue;
        }
        IdtWitness w{Trail{{p.other(centre), centre, q.other(centre)}, {e1, e2}}, e1, e2};
        if (is_valid_idt(h, w)) {
            return w;
        }
    }
    return std::nullopt;
}

bool same_adjacency(const SimpleGraph& a, const SimpleGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
        return false;
    }
    for (const auto& ep : b.edges()) {
        if (!a.adjacent(ep.u, ep.v)) {
            return false;
        }
    }
    return true;
}

}  // namespace

PipelineRun run_pipeline(const SimpleGraph& g, VertexId u, VertexId v, const DominatingSet& d) {
    g.as_multigraph().check_vertex(u);
    g.as_multigraph().check_vertex(v);
    if (u == v) {
        throw Error(ErrorKind::InvalidArgument, "pipeline needs two distinct vertices");
    }
    if (!dominates(g, d.vertices)) {
        throw Error(ErrorKind::InvalidArgument, "the given set does not dominate the graph");
    }
    PipelineRun run;
    PipelineStage stage = PipelineStage::Preimage;
    try {
        Multigraph h = preimage(g);
        LineGraphMap lgm = line_graph(h);
        if (!same_adjacency(lgm.target, g)) {
            throw Error(ErrorKind::NotALineGraphOfMultigraph, "preimage does not reproduce the input");
        }
        EdgeId e1{u.index};
        EdgeId e2{v.index};
        stage = PipelineStage::Core;
        std::optional<CoreMap> cm;
        try {
            cm = core(h);
        } catch (const Error& err) {
            if (err.kind() != ErrorKind::DegenerateCore) {
                throw;
            }
            stage = PipelineStage::Lift;
            auto w = star_idt(h, e1, e2);
            if (!w) {
                throw;
            }
            run.star_preimage = true;
            run.idt = *w;
        }
        if (cm) {
            PipelineContext ctx{g, h, std::move(*cm), e1, e2, {}, {}, {}, {}, std::nullopt, {}};
            stage = PipelineStage::Projection;
            ctx.e0_1 = project_edge(ctx.cm, e1);
            ctx.e0_2 = project_edge(ctx.cm, e2);
            stage = PipelineStage::BuildHn;
            HnResult hn = build_hn(ctx.cm, ctx.e0_1, ctx.e0_2);
            ctx.h_n = std::move(hn.h_n);
            ctx.e_n = hn.e_n;
            ctx.subdivision_record = hn.subdivision;
            stage = PipelineStage::PickZ;
            std::vector<EdgeId> f;
            for (VertexId x : d.vertices) {
                f.push_back(EdgeId{x.index});
            }
            ctx.z = pick_z(ctx.cm, f);
            run.context = ctx;
            stage = PipelineStage::ClosedTrail;
            auto t = find_closed_trail_through(ctx.h_n, ctx.z, ctx.e_n);
            if (!t) {
                throw Error(ErrorKind::TrailNotFound, "no closed trail of h_n through e_n and z");
            }
            run.closed_trail = *t;
            stage = PipelineStage::Lift;
            run.idt = idt_from_trail(ctx, *t);
        }
        stage = PipelineStage::HamPath;
        run.path = idt_to_ham_path(lgm, *run.idt);
    } catch (const Error& err) {
        run.failure = PipelineFailure{stage, err.kind(), err.what()};
        run.path.reset();
    }
    return run;
}

std::optional<Trail> pipeline_ham_path(const SimpleGraph& g, VertexId u, VertexId v, const DominatingSet& d) {
    return run_pipeline(g, u, v, d).path;
}

}  // namespace hamcon

#include "hamcon/core.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

#include "hamcon/error.hpp"
#include "hamcon/invariants.hpp"

namespace hamcon {

namespace {

struct WorkEdge {
    int a;
    int b;
    bool alive = true;
    std::vector<int> vertices;  // H path from a to b
    std::vector<int> edges;
};

class CoreBuilder {
public:
    CoreBuilder(const Multigraph& h, std::uint64_t seed) : h_(h), n_(h.vertex_count()) {
        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        if (seed != 0) {
            std::mt19937_64 rng(seed);
            std::shuffle(order_.begin(), order_.end(), rng);
        }
        degree_.assign(static_cast<std::size_t>(n_), 0);
        incident_.resize(static_cast<std::size_t>(n_));
        for (int e = 0; e < h.edge_count(); ++e) {
            const auto& ep = h.endpoints(EdgeId{e});
            add(WorkEdge{ep.u.index, ep.v.index, true, {ep.u.index, ep.v.index}, {e}});
        }
    }

    void strip_pendants() {
        for (bool changed = true; changed;) {
            changed = false;
            for (int v : order_) {
                if (degree_[static_cast<std::size_t>(v)] != 1) {
                    continue;
                }
                int e = alive_incident(v).front();
                removed_.push_back(work_[static_cast<std::size_t>(e)].edges.front());
                kill(e);
                changed = true;
            }
        }
    }

    void suppress_all() {
        for (bool changed = true; changed;) {
            changed = false;
            for (int v : order_) {
                if (degree_[static_cast<std::size_t>(v)] != 2) {
                    continue;
                }
                auto inc = alive_incident(v);
                if (inc.size() != 2) {
                    continue;  // a lone loop
                }
                WorkEdge merged = join(oriented_to(inc[0], v), oriented_from(inc[1], v));
                kill(inc[0]);
                kill(inc[1]);
                add(std::move(merged));
                changed = true;
            }
        }
    }

    CoreMap finish(const Multigraph& h) {
        CoreMap cm;
        cm.original = h;
        std::sort(removed_.begin(), removed_.end());
        for (int e : removed_) {
            cm.removed_pendants.push_back(EdgeId{e});
        }
        cm.vertex_image.assign(static_cast<std::size_t>(n_), std::nullopt);
        cm.suppressed_location.assign(static_cast<std::size_t>(n_), std::nullopt);
        cm.owning_core_edge.assign(static_cast<std::size_t>(h.edge_count()), std::nullopt);
        int count = 0;
        for (int v = 0; v < n_; ++v) {
            if (degree_[static_cast<std::size_t>(v)] > 0) {
                cm.vertex_image[static_cast<std::size_t>(v)] = VertexId{count++};
                cm.vertex_origin.push_back(VertexId{v});
            }
        }
        if (count < 2) {
            throw Error(ErrorKind::DegenerateCore,
                        "core has " + std::to_string(count) + " vertex(es) after stripping pendants and suppressing");
        }
        cm.core = Multigraph(count);
        // Canonical edge order: by the smallest H edge each expansion carries.
        std::vector<const WorkEdge*> alive;
        for (const auto& w : work_) {
            if (w.alive) {
                alive.push_back(&w);
            }
        }
        std::sort(alive.begin(), alive.end(), [](const WorkEdge* x, const WorkEdge* y) {
            return *std::min_element(x->edges.begin(), x->edges.end()) <
                   *std::min_element(y->edges.begin(), y->edges.end());
        });
        for (const WorkEdge* w : alive) {
            VertexId a = *cm.vertex_image[static_cast<std::size_t>(w->a)];
            VertexId b = *cm.vertex_image[static_cast<std::size_t>(w->b)];
            EdgeId id = cm.core.add_edge(a, b);
            Expansion x;
            for (int v : w->vertices) {
                x.vertices.push_back(VertexId{v});
            }
            for (int e : w->edges) {
                x.edges.push_back(EdgeId{e});
                cm.owning_core_edge[static_cast<std::size_t>(e)] = id;
            }
            if (cm.core.endpoints(id).u != a) {
                std::reverse(x.vertices.begin(), x.vertices.end());
                std::reverse(x.edges.begin(), x.edges.end());
            }
            for (std::size_t i = 1; i + 1 < x.vertices.size(); ++i) {
                cm.suppressed_location[static_cast<std::size_t>(x.vertices[i].index)] = id;
            }
            cm.edge_expansion.push_back(std::move(x));
        }
        return cm;
    }

private:
    void add(WorkEdge w) {
        int id = static_cast<int>(work_.size());
        ++degree_[static_cast<std::size_t>(w.a)];
        ++degree_[static_cast<std::size_t>(w.b)];
        incident_[static_cast<std::size_t>(w.a)].push_back(id);
        if (w.a != w.b) {
            incident_[static_cast<std::size_t>(w.b)].push_back(id);
        }
        work_.push_back(std::move(w));
    }

    void kill(int e) {
        auto& w = work_[static_cast<std::size_t>(e)];
        w.alive = false;
        --degree_[static_cast<std::size_t>(w.a)];
        --degree_[static_cast<std::size_t>(w.b)];
    }

    std::vector<int> alive_incident(int v) const {
        std::vector<int> out;
        for (int e : incident_[static_cast<std::size_t>(v)]) {
            if (work_[static_cast<std::size_t>(e)].alive) {
                out.push_back(e);
            }
        }
        return out;
    }

    WorkEdge oriented_to(int e, int v) const {
        WorkEdge w = work_[static_cast<std::size_t>(e)];
        if (w.b != v) {
            std::swap(w.a, w.b);
            std::reverse(w.vertices.begin(), w.vertices.end());
            std::reverse(w.edges.begin(), w.edges.end());
        }
        return w;
    }

    WorkEdge oriented_from(int e, int v) const {
        WorkEdge w = work_[static_cast<std::size_t>(e)];
        if (w.a != v) {
            std::swap(w.a, w.b);
            std::reverse(w.vertices.begin(), w.vertices.end());
            std::reverse(w.edges.begin(), w.edges.end());
        }
        return w;
    }

    static WorkEdge join(WorkEdge first, const WorkEdge& second) {
        first.b = second.b;
        first.vertices.insert(first.vertices.end(), second.vertices.begin() + 1, second.vertices.end());
        first.edges.insert(first.edges.end(), second.edges.begin(), second.edges.end());
        first.alive = true;
        return first;
    }

    const Multigraph& h_;
    int n_;
    std::vector<int> order_;
    std::vector<int> degree_;
    std::vector<std::vector<int>> incident_;
    std::vector<WorkEdge> work_;
    std::vector<int> removed_;
};

}  // namespace

CoreMap core(const Multigraph& h, CoreOptions options) {
    if (h.vertex_count() == 0 || !is_connected(h)) {
        throw Error(ErrorKind::Disconnected, "core needs a connected multigraph");
    }
    if (options.check_essential) {
        if (auto check = is_essentially_k_edge_connected(h, 3); !check) {
            std::string cut;
            for (EdgeId e : check.violating_cut) {
                cut += " " + std::to_string(e.index);
            }
            throw Error(ErrorKind::NotEssentially3EdgeConnected, "essential cut {" + cut + " }");
        }
    }
    CoreBuilder builder(h, options.shuffle_seed);
    builder.strip_pendants();
    builder.suppress_all();
    CoreMap cm = builder.finish(h);
    if (options.check_postcondition && !is_k_edge_connected(cm.core, 3)) {
        throw Error(ErrorKind::NotEssentially3EdgeConnected, "core is not 3-edge-connected");
    }
    return cm;
}

Trail lift_trail(const CoreMap& cm, const Trail& t) {
    if (auto d = trail_defect(cm.core, t); !d.empty()) {
        throw Error(ErrorKind::InvalidTrail, "not a trail of the core: " + d);
    }
    Trail out;
    out.vertices.push_back(cm.vertex_origin[static_cast<std::size_t>(t.vertices.front().index)]);
    for (std::size_t i = 0; i < t.edges.size(); ++i) {
        EdgeId e = t.edges[i];
        const Expansion& x = cm.edge_expansion[static_cast<std::size_t>(e.index)];
        const auto& ep = cm.core.endpoints(e);
        bool forward = ep.is_loop() || ep.u == t.vertices[i];
        std::size_t len = x.edges.size();
        for (std::size_t k = 0; k < len; ++k) {
            std::size_t j = forward ? k : len - 1 - k;
            out.edges.push_back(x.edges[j]);
            out.vertices.push_back(forward ? x.vertices[j + 1] : x.vertices[j]);
        }
    }
    return out;
}

Trail lift_closed_trail(const CoreMap& cm, const Trail& t) {
    if (!t.closed()) {
        throw Error(ErrorKind::InvalidTrail, "expected a closed trail of the core");
    }
    return lift_trail(cm, t);
}

CoreLocation project_vertex(const CoreMap& cm, VertexId v) {
    cm.original.check_vertex(v);
    if (auto image = cm.vertex_image[static_cast<std::size_t>(v.index)]) {
        return CoreVertexLocation{*image};
    }
    if (auto edge = cm.suppressed_location[static_cast<std::size_t>(v.index)]) {
        return CoreEdgeInterior{*edge};
    }
    throw Error(ErrorKind::NoCoreLocation, "vertex " + std::to_string(v.index) + " vanished with the pendant edges");
}

}  // namespace hamcon

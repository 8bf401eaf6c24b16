#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace hamcon {

struct VertexId {
    int index = 0;
    friend auto operator<=>(VertexId, VertexId) = default;
};

struct EdgeId {
    int index = 0;
    friend auto operator<=>(EdgeId, EdgeId) = default;
};

struct Endpoints {
    VertexId u;
    VertexId v;

    bool is_loop() const { return u == v; }
    bool touches(VertexId x) const { return u == x || v == x; }
    // For a loop, other(u) == u.
    VertexId other(VertexId x) const { return x == u ? v : u; }
};

struct Incidence {
    EdgeId edge;
    VertexId other;
};

/// Finite undirected multigraph with explicit edge identity. Parallel edges
/// and loops are allowed; a loop contributes 2 to the degree of its vertex
/// and appears once in that vertex's incidence list.
class Multigraph {
public:
    Multigraph() = default;
    explicit Multigraph(int vertex_count);
    Multigraph(int vertex_count, std::span<const std::pair<int, int>> edges);

    int vertex_count() const { return static_cast<int>(incidences_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    bool has_vertex(VertexId v) const { return v.index >= 0 && v.index < vertex_count(); }
    bool has_edge(EdgeId e) const { return e.index >= 0 && e.index < edge_count(); }

    VertexId add_vertex();
    EdgeId add_edge(VertexId u, VertexId v);

    const Endpoints& endpoints(EdgeId e) const;
    std::span<const Incidence> incidences(VertexId v) const;
    int degree(VertexId v) const;
    int loop_count(VertexId v) const;
    // Number of edges joining u and v (loops at u when u == v).
    int multiplicity(VertexId u, VertexId v) const;

    std::span<const Endpoints> edges() const { return edges_; }

    void check_vertex(VertexId v) const;
    void check_edge(EdgeId e) const;

    friend bool operator==(const Multigraph&, const Multigraph&);

private:
    std::vector<Endpoints> edges_;
    std::vector<std::vector<Incidence>> incidences_;
    std::vector<int> loops_;
};

/// Loop-free graph of multiplicity one. Rows of the adjacency matrix are kept
/// as 64-bit masks when the graph is small enough for the bitset kernels.
class SimpleGraph {
public:
    static constexpr int kMaxBitsetVertices = 64;

    SimpleGraph() = default;
    explicit SimpleGraph(int vertex_count);
    SimpleGraph(int vertex_count, std::span<const std::pair<int, int>> edges);

    // Throws InvalidArgument when g has loops or parallel edges.
    static SimpleGraph from_multigraph(const Multigraph& g);
    const Multigraph& as_multigraph() const { return graph_; }

    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }
    bool has_vertex(VertexId v) const { return graph_.has_vertex(v); }

    bool adjacent(VertexId u, VertexId v) const;
    std::optional<EdgeId> edge_between(VertexId u, VertexId v) const;
    const Endpoints& endpoints(EdgeId e) const { return graph_.endpoints(e); }
    std::span<const Incidence> incidences(VertexId v) const { return graph_.incidences(v); }
    int degree(VertexId v) const { return graph_.degree(v); }
    std::span<const Endpoints> edges() const { return graph_.edges(); }

    bool fits_bitset() const { return vertex_count() <= kMaxBitsetVertices; }
    // Open neighbourhood of v as a bitmask. Throws SizeLimit above 64 vertices.
    std::uint64_t row(VertexId v) const;
    std::span<const std::uint64_t> rows() const;
    std::uint64_t all_vertices_mask() const;

    friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) { return a.graph_ == b.graph_; }

private:
    void add_edge_checked(int u, int v);

    Multigraph graph_;
    std::vector<int> edge_index_;  // n*n, -1 when absent
    std::vector<std::uint64_t> rows_;
};

/// Old-to-new id maps produced by operations that delete vertices or edges.
struct Renumbering {
    std::vector<std::optional<VertexId>> vertex;
    std::vector<std::optional<EdgeId>> edge;
};

struct Subdivision {
    Multigraph graph;
    VertexId new_vertex;
    EdgeId e_a;  // reuses the id of the subdivided edge, joins its first endpoint
    EdgeId e_b;  // appended, joins the second endpoint
};

struct Suppression {
    Multigraph graph;
    EdgeId merged_edge;
    Renumbering renumbering;
};

struct EdgeRemoval {
    Multigraph graph;
    Renumbering renumbering;
};

struct ContractionMap {
    Multigraph source;
    Multigraph target;
    std::vector<VertexId> vertex_map;
    std::vector<std::optional<EdgeId>> edge_map;
};

int degree(const Multigraph& g, VertexId v);
Subdivision subdivide(const Multigraph& g, EdgeId e);
Suppression suppress(const Multigraph& g, VertexId v);
// Deletes the listed edges; vertices left isolated are deleted too when
// drop_isolated is set.
EdgeRemoval remove_edges(const Multigraph& g, std::span<const EdgeId> edges, bool drop_isolated = false);
ContractionMap contract(const Multigraph& g, std::span<const EdgeId> r_edges);

bool is_connected(const Multigraph& g);
bool is_connected(const SimpleGraph& g);
// Component label per vertex, ignoring loops; labels are 0..count-1 in order
// of first appearance.
std::vector<int> component_labels(const Multigraph& g, int* count = nullptr);

struct IsomorphismOptions {
    int max_vertices = 32;
};

// Vertex bijection a -> b preserving every pair multiplicity and loop count.
// Throws SizeLimit when either graph exceeds the configured vertex bound.
std::optional<std::vector<VertexId>> find_isomorphism(const Multigraph& a, const Multigraph& b,
                                                      IsomorphismOptions options = {});
bool isomorphic(const Multigraph& a, const Multigraph& b, IsomorphismOptions options = {});
bool is_isomorphism(const Multigraph& a, const Multigraph& b, std::span<const VertexId> map);

}  // namespace hamcon

#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "hamcon/multigraph.hpp"

namespace hamcon {

/// Vertex set whose closed neighbourhoods cover the host.
struct DominatingSet {
    std::vector<VertexId> vertices;
};

/// Centre followed by three pairwise non-adjacent neighbours.
using Claw = std::array<VertexId, 4>;

std::optional<Claw> find_claw(const SimpleGraph& g);
bool is_claw_free(const SimpleGraph& g);

int vertex_connectivity(const SimpleGraph& g);
// Early-exit variant: stops augmenting once k disjoint paths are found.
bool is_k_vertex_connected(const SimpleGraph& g, int k);

bool dominates(const SimpleGraph& g, std::span<const VertexId> set);
std::optional<DominatingSet> has_dominating_set(const SimpleGraph& g, int k);
int domination_number(const SimpleGraph& g);

std::vector<VertexId> simplicial_vertices(const SimpleGraph& g);
bool is_simplicial(const SimpleGraph& g, VertexId v);

struct EssentialCutCheck {
    bool connected = true;
    std::vector<EdgeId> violating_cut;  // empty when connected
    explicit operator bool() const { return connected; }
};

// Components that carry at least one edge (loops included) after removing
// `cut`; the count that decides whether a cut is essential.
int nontrivial_component_count(const Multigraph& h, std::span<const EdgeId> cut);
EssentialCutCheck is_essentially_k_edge_connected(const Multigraph& h, int k);

// Global edge connectivity by unit-capacity max flow. Graphs with fewer than
// two vertices report 0; disconnected graphs report 0.
int edge_connectivity(const Multigraph& h);
bool is_k_edge_connected(const Multigraph& h, int k);

bool vertices_dominate_edges(const Multigraph& h, std::span<const VertexId> vertices);
bool edge_triple_dominates(const Multigraph& h, std::span<const EdgeId> f);

}  // namespace hamcon

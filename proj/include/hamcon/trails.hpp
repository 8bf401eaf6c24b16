#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hamcon/multigraph.hpp"

namespace hamcon {

/// Alternating vertex/edge sequence v0 e1 v1 ... ek vk with pairwise
/// distinct edges. A single vertex with no edges is the trivial closed trail.
struct Trail {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;

    static Trail at(VertexId v) { return Trail{{v}, {}}; }

    std::size_t length() const { return edges.size(); }
    bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
    // All vertices for a closed trail; v1..v(k-1) for an open one. Terminal
    // vertices revisited mid-trail are interior.
    std::vector<VertexId> interior_vertices() const;
    std::vector<VertexId> vertex_set() const;
    Trail reversed() const;

    friend bool operator==(const Trail&, const Trail&) = default;
};

// Empty string when t is a trail of host, otherwise the first violated clause.
std::string trail_defect(const Multigraph& host, const Trail& t);
bool is_valid_trail(const Multigraph& host, const Trail& t);

// Same closed trail, restarted so that its first step traverses e out of
// `from`. e must lie on t and touch `from`.
Trail rotate_closed_trail(const Trail& t, EdgeId e, VertexId from);

/// (e1,e2)-trail whose interior vertices dominate every edge of the host.
/// The terminal vertices may coincide; the terminal edges may not.
struct IdtWitness {
    Trail trail;
    EdgeId first_edge;
    EdgeId last_edge;
};

std::string idt_defect(const Multigraph& host, const IdtWitness& w);
bool is_valid_idt(const Multigraph& host, const IdtWitness& w);

// Closed-trail engines work on the cycle space of the loop-free part of h:
// every closed trail's edge set is a connected even subgraph and vice versa.
// They throw SizeLimit above 64 edges or cycle-space dimension 28.
std::optional<Trail> find_closed_trail_through(const Multigraph& h, std::span<const VertexId> required,
                                               EdgeId e);
std::optional<Trail> find_spanning_closed_trail(const Multigraph& h);
std::optional<Trail> find_dct(const Multigraph& h);
std::optional<IdtWitness> find_idt(const Multigraph& h, EdgeId e1, EdgeId e2);

bool dominates_all_edges(const Multigraph& h, const Trail& t);
bool is_hamiltonian_path(const SimpleGraph& g, const Trail& t, VertexId a, VertexId b);

std::optional<Trail> hamiltonian_path(const SimpleGraph& g, VertexId a, VertexId b);
std::optional<Trail> hamiltonian_cycle(const SimpleGraph& g);
bool is_hamiltonian(const SimpleGraph& g);

struct HamiltonianConnectivity {
    bool connected = true;
    // Lexicographically smallest pair without a hamiltonian path.
    std::optional<std::pair<VertexId, VertexId>> failing_pair;
    explicit operator bool() const { return connected; }
};

// Pairs are checked in lexicographic order and the search stops at the first
// failure.
HamiltonianConnectivity is_hamiltonian_connected_serial(const SimpleGraph& g);
// Pairs fan out over `workers` OpenMP threads (0 = runtime default). Reports
// the same failing pair as the serial version.
HamiltonianConnectivity is_hamiltonian_connected(const SimpleGraph& g, int workers = 1);

}  // namespace hamcon

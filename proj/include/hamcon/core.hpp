#pragma once

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

#include "hamcon/multigraph.hpp"
#include "hamcon/trails.hpp"

namespace hamcon {

/// Path in the original multigraph standing for one core edge, oriented from
/// the core edge's first endpoint to its second.
struct Expansion {
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
};

/// Result of removing all pendant edges of H (to a fixed point) and
/// suppressing every degree-2 vertex, together with the maps needed to carry
/// trails of the core back into H.
struct CoreMap {
    Multigraph original;
    Multigraph core;
    std::vector<EdgeId> removed_pendants;                  // sorted
    std::vector<Expansion> edge_expansion;                 // per core edge
    std::vector<std::optional<VertexId>> vertex_image;     // per H vertex
    std::vector<VertexId> vertex_origin;                   // per core vertex
    std::vector<std::optional<EdgeId>> suppressed_location;  // per H vertex
    std::vector<std::optional<EdgeId>> owning_core_edge;     // per H edge, empty for pendants
};

struct CoreOptions {
    // Zero keeps the natural id order; any other value shuffles the order in
    // which pendants are stripped and vertices suppressed.
    std::uint64_t shuffle_seed = 0;
    bool check_essential = true;
    bool check_postcondition = true;
};

// Throws Disconnected, NotEssentially3EdgeConnected (when checked) or
// DegenerateCore when fewer than two core vertices remain.
CoreMap core(const Multigraph& h, CoreOptions options = {});

// Expands every core edge of t along its path in H.
Trail lift_trail(const CoreMap& cm, const Trail& t);
// Closed trails only; throws InvalidTrail otherwise.
Trail lift_closed_trail(const CoreMap& cm, const Trail& t);

struct CoreVertexLocation {
    VertexId vertex;
};
struct CoreEdgeInterior {
    EdgeId edge;
};
using CoreLocation = std::variant<CoreVertexLocation, CoreEdgeInterior>;

// Throws NoCoreLocation for vertices removed with the pendant edges.
CoreLocation project_vertex(const CoreMap& cm, VertexId v);

}  // namespace hamcon

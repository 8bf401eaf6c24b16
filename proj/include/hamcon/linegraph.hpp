#pragma once

#include <vector>

#include "hamcon/multigraph.hpp"

namespace hamcon {

struct LineGraphMap {
    Multigraph source;
    SimpleGraph target;
    // edge_to_vertex[e] is the vertex of target standing for edge e.
    std::vector<VertexId> edge_to_vertex;

    VertexId vertex_of(EdgeId e) const { return edge_to_vertex.at(static_cast<std::size_t>(e.index)); }
};

LineGraphMap line_graph(const Multigraph& h);

/// Loopless multigraph H with L(H) == g under the identity map (edge i of H
/// is vertex i of g), normalised so that the simplicial vertices of g are
/// exactly the pendant edges of H.
///
/// Throws Disconnected for disconnected or empty input and
/// NotALineGraphOfMultigraph when no such H exists; the message names an
/// induced claw when one is present.
Multigraph preimage(const SimpleGraph& g);

bool is_line_graph_of_multigraph(const SimpleGraph& g);

// An edge with an endpoint of degree one.
bool is_pendant(const Multigraph& h, EdgeId e);
std::vector<EdgeId> pendant_edges(const Multigraph& h);

}  // namespace hamcon

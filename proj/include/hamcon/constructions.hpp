#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hamcon/multigraph.hpp"

namespace hamcon {

// Outer 5-cycle 0..4, spokes i -- i+5, inner pentagram i+5 -- (i+2)%5+5.
SimpleGraph petersen();
// Circulant on 8 vertices with offsets 1 and 4: the 8-cycle plus its four
// long diagonals.
SimpleGraph wagner();

struct Counterexample {
    SimpleGraph g;  // line graph of h, vertex i = edge i of h
    Multigraph h;   // Wagner graph (vertices 0..7, edges 0..11) plus pendants
};

// Throws InvalidArgument when pendants_per_vertex < 1.
Counterexample wagner_counterexample(int pendants_per_vertex);

/// Contraction of `map.source` onto the Petersen graph together with an edge
/// e and vertex set a whose images are an edge xy and V(P) - {x, y}.
struct PetersenWitness {
    ContractionMap map;
    EdgeId e;
    std::vector<VertexId> a;
};

enum class PetersenDefect {
    MalformedMap,        // map sizes or ids out of range
    TargetNotPetersen,
    EmptyFiber,
    FiberDisconnected,
    EdgeMapInconsistent,  // edge images disagree with the vertex map
    EdgeNotMapped,        // e is contracted away or outside the source
    WrongImageOfA,        // image of a is not V(P) - {x, y}
};

std::string_view to_string(PetersenDefect d);

struct PetersenWitnessCheck {
    std::optional<PetersenDefect> defect;
    explicit operator bool() const { return !defect; }
};

PetersenWitnessCheck verify_petersen_witness(const PetersenWitness& w);

}  // namespace hamcon

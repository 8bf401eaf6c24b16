#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hamcon/core.hpp"
#include "hamcon/error.hpp"
#include "hamcon/invariants.hpp"
#include "hamcon/linegraph.hpp"
#include "hamcon/multigraph.hpp"
#include "hamcon/trails.hpp"

namespace hamcon {

// Two new vertices splitting e0_1 and e0_2, and the halves around them.
struct SubdivisionRecord {
    VertexId w1;
    VertexId w2;
    std::array<EdgeId, 2> halves1;
    std::array<EdgeId, 2> halves2;
};

struct HnResult {
    Multigraph h_n;
    EdgeId e_n;
    std::optional<SubdivisionRecord> subdivision;
};

struct PipelineContext {
    SimpleGraph g;
    Multigraph h;
    CoreMap cm;
    EdgeId e1;
    EdgeId e2;
    EdgeId e0_1;
    EdgeId e0_2;
    Multigraph h_n;
    EdgeId e_n;
    std::optional<SubdivisionRecord> subdivision_record;
    std::vector<VertexId> z;
};

// Core edge standing for an edge of H. Edges inside an expansion map to its
// core edge; a removed pendant maps to the smallest-id non-loop core edge at
// its surviving endpoint, or to the core edge swallowing that endpoint.
EdgeId project_edge(const CoreMap& cm, EdgeId e);

// h_n is the core itself when the edges coincide; otherwise both are
// subdivided and the new vertices joined by e_n. Core vertex and edge ids
// carry over unchanged. Checks 3-edge-connectivity of the result.
HnResult build_hn(const CoreMap& cm, EdgeId e0_1, EdgeId e0_2);

// Endpoints of the projected f edges, sorted and deduplicated.
std::vector<VertexId> pick_z(const CoreMap& cm, std::span<const EdgeId> f);

// Turns a closed trail of h_n through e_n and z into an (e1,e2)-IDT of H.
// Throws LiftFailed if no candidate passes validation.
IdtWitness idt_from_trail(const PipelineContext& ctx, const Trail& t);

// Hamiltonian path of L(H) from the vertex of the first terminal edge to the
// vertex of the last one. Throws LiftFailed if the result does not validate.
Trail idt_to_ham_path(const LineGraphMap& lgm, const IdtWitness& w);

enum class PipelineStage { Preimage, Core, Projection, BuildHn, PickZ, ClosedTrail, Lift, HamPath };
std::string_view to_string(PipelineStage stage);

struct PipelineFailure {
    PipelineStage stage;
    ErrorKind kind;
    std::string detail;
};

struct PipelineRun {
    std::optional<Trail> path;
    std::optional<PipelineFailure> failure;
    // Filled as far as the run got.
    std::optional<PipelineContext> context;
    std::optional<Trail> closed_trail;
    std::optional<IdtWitness> idt;
    // The preimage collapsed to a star; the IDT then runs through its centre.
    bool star_preimage = false;
};

// Requires u != v and d dominating g (InvalidArgument otherwise). Every
// other failure is reported in PipelineRun::failure with its stage.
PipelineRun run_pipeline(const SimpleGraph& g, VertexId u, VertexId v, const DominatingSet& d);
std::optional<Trail> pipeline_ham_path(const SimpleGraph& g, VertexId u, VertexId v, const DominatingSet& d);

}  // namespace hamcon

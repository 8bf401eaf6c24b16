#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hamcon/constructions.hpp"
#include "hamcon/multigraph.hpp"
#include "hamcon/trails.hpp"

namespace hamcon {

// Outcome of one randomized or exhaustive property suite. `notes` keeps the
// first few failures in readable form plus any run parameters worth
// reporting (sample seeds, sizes).
struct SuiteResult {
    std::string name;
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::string> notes;
    double elapsed_seconds = 0;

    bool passed() const { return cases > 0 && failures == 0; }
};

struct CounterexampleReport {
    Counterexample graphs;
    bool claw_free = false;
    int connectivity = 0;
    int domination = 0;
    HamiltonianConnectivity hamiltonian_connectivity;
    bool essentially_3_edge_connected = false;
    bool core_is_wagner = false;
};

CounterexampleReport analyse_counterexample(int pendants_per_vertex, int workers = 1);

// L(H) hamiltonian <=> H has a DCT, over the multigraph corpus.
SuiteResult suite_dct_equivalence(const std::vector<Multigraph>& corpus, int workers = 1);
// Hamiltonian L(e1)-L(e2) path <=> (e1,e2)-IDT, over every ordered pair of
// distinct edges; with max_pairs set, a seeded uniform sample of that size.
SuiteResult suite_idt_equivalence(const std::vector<Multigraph>& corpus, int workers = 1,
                                  std::optional<std::uint64_t> max_pairs = std::nullopt, std::uint64_t seed = 1);
// Closed trail through any <= 7 vertices and any edge of random
// 3-edge-connected multigraphs.
SuiteResult suite_closed_trail_through(std::uint64_t seed, int graphs = 500, int max_edges = 12, int min_sets = 50,
                                       int workers = 1);
// No closed trail through xy and the other 8 vertices, and the identity
// contraction certifies it, for every edge xy of the Petersen graph.
SuiteResult suite_petersen_dichotomy();
// L(preimage(L(H))) == L(H) and simplicial <=> pendant, on random H and on
// fixed fixtures.
SuiteResult suite_preimage(std::uint64_t seed, int graphs = 1000, int max_edges = 12);
// Every ordered pair of every thm1 line graph on <= max_n vertices, plus
// L(K4) and L(K4 + pendants). Labeled mode walks all labeled graphs; class
// mode takes one graph per isomorphism class plus `relabelings` random
// relabelings of it.
enum class PipelineCorpus { Labeled, Classes };
SuiteResult suite_pipeline(int max_n = 7, PipelineCorpus corpus = PipelineCorpus::Labeled, int relabelings = 2,
                           std::uint64_t seed = 1, int workers = 1);
// Core order independence, 3-edge-connectivity and lifting of spanning
// closed trails on random essentially 3-edge-connected multigraphs.
SuiteResult suite_core(std::uint64_t seed, int graphs = 500, int shuffles = 10);
// Encode/decode identity for graph6, sparse6 and edgelist.
SuiteResult suite_roundtrip(std::uint64_t seed, int graphs = 1000);

// Names accepted by run_suite: dct, idt, trail-through, petersen, preimage,
// pipeline, core, roundtrip.
std::vector<std::string> suite_names();
SuiteResult run_suite(const std::string& name, std::uint64_t seed, int workers = 1);

}  // namespace hamcon

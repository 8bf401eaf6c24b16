#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hamcon/multigraph.hpp"

namespace hamcon {

enum class Encoding { Graph6, Sparse6, Edgelist };

std::string_view to_string(Encoding e);
// Accepts g6, s6, el and the long names; throws InvalidArgument otherwise.
Encoding parse_encoding(std::string_view name);

struct CorpusRecord {
    Multigraph graph;
    std::string origin;  // "file:line" or "n=7#index"
    Encoding encoding;
};

std::string encode(const Multigraph& g, Encoding e);

// graph6 and sparse6 files hold one graph per non-blank line; an edgelist
// file holds one graph. Without an explicit encoding it is guessed from the
// extension (.g6, .s6, .el, .txt) and then from the first line.
std::vector<CorpusRecord> read_corpus(const std::string& path, std::optional<Encoding> encoding = std::nullopt);
std::vector<CorpusRecord> parse_corpus(std::string_view text, Encoding encoding, const std::string& name);

// ----------------------------------------------------------- enumeration

constexpr int kMaxLabeledVertices = 7;

std::uint64_t labeled_graph_count(int n);
// Bit k of index is the k-th vertex pair in graph6 order (0,1), (0,2), (1,2),
// (0,3), ...
SimpleGraph labeled_graph(int n, std::uint64_t index);
// Calls visit(index, graph) for every labeled simple graph on n vertices, in
// index order. Throws InvalidArgument for n outside 0..7.
void enumerate_labeled(int n, const std::function<void(std::uint64_t, const SimpleGraph&)>& visit);

// Connected loopless multigraphs up to isomorphism, at most max_vertices
// vertices, edge count in [min_edges, max_edges], pair multiplicity at most
// max_multiplicity. Graphs are listed by vertex count, then underlying simple
// graph, then multiplicity vector.
struct MultigraphCorpusSpec {
    int max_vertices = 6;
    int min_edges = 3;
    int max_edges = 9;
    int max_multiplicity = 3;
};
std::vector<Multigraph> multigraph_corpus(const MultigraphCorpusSpec& spec);

// Connected simple graphs on exactly n vertices up to isomorphism (n <= 7).
std::vector<SimpleGraph> unlabeled_connected_graphs(int n);

// ------------------------------------------------------------- random

using Rng = std::mt19937_64;

// Connected multigraph with the given counts (edges >= vertices - 1), edges
// placed uniformly over pairs after a random spanning tree.
Multigraph random_connected_multigraph(Rng& rng, int vertices, int edges, bool allow_loops = false);
// 3-edge-connected, at most max_edges edges, at least two vertices.
Multigraph random_3_edge_connected(Rng& rng, int max_edges);
// 3-edge-connected base with some edges subdivided once and pendants hung
// on branch vertices; essentially 3-edge-connected with a nondegenerate core.
Multigraph random_essentially_3_edge_connected(Rng& rng, int max_base_edges, int max_pendants);

}  // namespace hamcon

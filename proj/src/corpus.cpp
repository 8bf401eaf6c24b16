#include "hamcon/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>

#include "hamcon/error.hpp"
#include "hamcon/formats.hpp"
#include "hamcon/invariants.hpp"

namespace hamcon {

std::string_view to_string(Encoding e) {
    switch (e) {
        case Encoding::Graph6: return "g6";
        case Encoding::Sparse6: return "s6";
        case Encoding::Edgelist: return "el";
    }
    return "unknown";
}

Encoding parse_encoding(std::string_view name) {
    if (name == "g6" || name == "graph6") {
        return Encoding::Graph6;
    }
    if (name == "s6" || name == "sparse6") {
        return Encoding::Sparse6;
    }
    if (name == "el" || name == "edgelist") {
        return Encoding::Edgelist;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown format '" + std::string(name) + "'");
}

std::string encode(const Multigraph& g, Encoding e) {
    switch (e) {
        case Encoding::Graph6: return encode_graph6(SimpleGraph::from_multigraph(g));
        case Encoding::Sparse6: return encode_sparse6(g);
        case Encoding::Edgelist: return encode_edgelist(g);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown encoding");
}

std::vector<CorpusRecord> parse_corpus(std::string_view text, Encoding encoding, const std::string& name) {
    std::vector<CorpusRecord> out;
    if (encoding == Encoding::Edgelist) {
        try {
            out.push_back({decode_edgelist(text), name + ":1", encoding});
        } catch (const Error& e) {
            throw Error(e.kind(), name + ": " + e.what());
        }
        return out;
    }
    int line_no = 0;
    while (!text.empty()) {
        std::size_t nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text.remove_prefix(nl == std::string_view::npos ? text.size() : nl + 1);
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
            line.remove_suffix(1);
        }
        if (line.empty()) {
            continue;
        }
        std::string origin = name + ":" + std::to_string(line_no);
        try {
            Multigraph g = encoding == Encoding::Graph6 ? decode_graph6(line).as_multigraph() : decode_sparse6(line);
            out.push_back({std::move(g), origin, encoding});
        } catch (const Error& e) {
            throw Error(e.kind(), origin + ": " + e.what());
        }
    }
    return out;
}

std::vector<CorpusRecord> read_corpus(const std::string& path, std::optional<Encoding> encoding) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::Parse, path + ": cannot open file");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    std::string text = buf.str();
    if (!encoding) {
        auto ends_with = [&](std::string_view ext) {
            return path.size() >= ext.size() && path.compare(path.size() - ext.size(), ext.size(), ext) == 0;
        };
        if (ends_with(".g6")) {
            encoding = Encoding::Graph6;
        } else if (ends_with(".s6")) {
            encoding = Encoding::Sparse6;
        } else if (ends_with(".el") || ends_with(".txt")) {
            encoding = Encoding::Edgelist;
        } else {
            std::size_t first = text.find_first_not_of(" \t\r\n");
            if (first != std::string::npos && text[first] == ':') {
                encoding = Encoding::Sparse6;
            } else if (first != std::string::npos && (text[first] == '#' || (text[first] >= '0' && text[first] <= '9'))) {
                encoding = Encoding::Edgelist;
            } else {
                encoding = Encoding::Graph6;
            }
        }
    }
    return parse_corpus(text, *encoding, path);
}

// ----------------------------------------------------------- enumeration

std::uint64_t labeled_graph_count(int n) {
    if (n < 0 || n > kMaxLabeledVertices) {
        throw Error(ErrorKind::InvalidArgument,
                    "labeled enumeration supports 0.." + std::to_string(kMaxLabeledVertices) + " vertices");
    }
    return std::uint64_t{1} << (n * (n - 1) / 2);
}

SimpleGraph labeled_graph(int n, std::uint64_t index) {
    if (index >= labeled_graph_count(n)) {
        throw Error(ErrorKind::InvalidArgument, "graph index out of range");
    }
    std::vector<std::pair<int, int>> edges;
    int k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            if ((index >> k) & 1U) {
                edges.emplace_back(i, j);
            }
        }
    }
    return SimpleGraph(n, edges);
}

void enumerate_labeled(int n, const std::function<void(std::uint64_t, const SimpleGraph&)>& visit) {
    std::uint64_t count = labeled_graph_count(n);
    for (std::uint64_t i = 0; i < count; ++i) {
        visit(i, labeled_graph(n, i));
    }
}

namespace {

// Cheap isomorphism invariant: sorted (degree, sorted neighbour degrees).
std::vector<int> fingerprint(const Multigraph& g) {
    std::vector<std::vector<int>> per;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> row{g.degree(VertexId{v})};
        std::vector<int> nb;
        for (const auto& inc : g.incidences(VertexId{v})) {
            nb.push_back(g.degree(inc.other));
        }
        std::sort(nb.begin(), nb.end());
        row.insert(row.end(), nb.begin(), nb.end());
        per.push_back(std::move(row));
    }
    std::sort(per.begin(), per.end());
    std::vector<int> out{g.vertex_count(), g.edge_count()};
    for (auto& row : per) {
        out.push_back(-1);
        out.insert(out.end(), row.begin(), row.end());
    }
    return out;
}

}  // namespace

std::vector<SimpleGraph> unlabeled_connected_graphs(int n) {
    if (n < 1 || n > kMaxLabeledVertices) {
        throw Error(ErrorKind::InvalidArgument, "unlabeled enumeration supports 1..7 vertices");
    }
    std::vector<SimpleGraph> level{SimpleGraph(1)};
    for (int size = 2; size <= n; ++size) {
        // Every connected graph has a vertex whose removal keeps it connected,
        // so extending all smaller graphs by one vertex reaches every class.
        std::vector<SimpleGraph> next;
        std::map<std::vector<int>, std::vector<std::size_t>> buckets;
        for (const auto& base : level) {
            for (std::uint64_t nb = 1; nb < (std::uint64_t{1} << (size - 1)); ++nb) {
                std::vector<std::pair<int, int>> edges;
                for (const auto& ep : base.edges()) {
                    edges.emplace_back(ep.u.index, ep.v.index);
                }
                for (int u = 0; u < size - 1; ++u) {
                    if ((nb >> u) & 1U) {
                        edges.emplace_back(u, size - 1);
                    }
                }
                SimpleGraph cand(size, edges);
                auto& bucket = buckets[fingerprint(cand.as_multigraph())];
                bool seen = std::any_of(bucket.begin(), bucket.end(), [&](std::size_t i) {
                    return isomorphic(next[i].as_multigraph(), cand.as_multigraph());
                });
                if (!seen) {
                    bucket.push_back(next.size());
                    next.push_back(std::move(cand));
                }
            }
        }
        std::stable_sort(next.begin(), next.end(),
                         [](const SimpleGraph& a, const SimpleGraph& b) { return a.edge_count() < b.edge_count(); });
        level = std::move(next);
    }
    return level;
}

std::vector<Multigraph> multigraph_corpus(const MultigraphCorpusSpec& spec) {
    std::vector<Multigraph> out;
    for (int n = 2; n <= spec.max_vertices; ++n) {
        for (const SimpleGraph& g : unlabeled_connected_graphs(n)) {
            int s = g.edge_count();
            if (s > spec.max_edges || s * spec.max_multiplicity < spec.min_edges) {
                continue;
            }
            // Automorphisms of g as permutations of its edges.
            std::vector<std::vector<int>> autos;
            std::vector<int> perm(static_cast<std::size_t>(n));
            std::iota(perm.begin(), perm.end(), 0);
            do {
                std::vector<int> emap;
                for (const auto& ep : g.edges()) {
                    auto e = g.edge_between(VertexId{perm[static_cast<std::size_t>(ep.u.index)]},
                                            VertexId{perm[static_cast<std::size_t>(ep.v.index)]});
                    if (!e) {
                        break;
                    }
                    emap.push_back(e->index);
                }
                if (static_cast<int>(emap.size()) == s) {
                    autos.push_back(std::move(emap));
                }
            } while (std::next_permutation(perm.begin(), perm.end()));

            std::vector<int> mult(static_cast<std::size_t>(s), 1);
            std::vector<int> image(static_cast<std::size_t>(s));
            while (true) {
                int total = std::accumulate(mult.begin(), mult.end(), 0);
                if (total >= spec.min_edges && total <= spec.max_edges) {
                    bool minimal = true;
                    for (const auto& a : autos) {
                        for (int e = 0; e < s; ++e) {
                            image[static_cast<std::size_t>(a[static_cast<std::size_t>(e)])] = mult[static_cast<std::size_t>(e)];
                        }
                        if (image < mult) {
                            minimal = false;
                            break;
                        }
                    }
                    if (minimal) {
                        Multigraph h(n);
                        for (int e = 0; e < s; ++e) {
                            const auto& ep = g.endpoints(EdgeId{e});
                            for (int r = 0; r < mult[static_cast<std::size_t>(e)]; ++r) {
                                h.add_edge(ep.u, ep.v);
                            }
                        }
                        out.push_back(std::move(h));
                    }
                }
                // Odometer over multiplicity vectors.
                int pos = 0;
                while (pos < s && mult[static_cast<std::size_t>(pos)] == spec.max_multiplicity) {
                    mult[static_cast<std::size_t>(pos)] = 1;
                    ++pos;
                }
                if (pos == s) {
                    break;
                }
                ++mult[static_cast<std::size_t>(pos)];
            }
        }
    }
    return out;
}

// ------------------------------------------------------------- random

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Multigraph relabel(Rng& rng, const Multigraph& g) {
    std::vector<int> vp(static_cast<std::size_t>(g.vertex_count()));
    std::iota(vp.begin(), vp.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::vector<int> ep(static_cast<std::size_t>(g.edge_count()));
    std::iota(ep.begin(), ep.end(), 0);
    std::shuffle(ep.begin(), ep.end(), rng);
    Multigraph out(g.vertex_count());
    for (int e : ep) {
        const auto& x = g.endpoints(EdgeId{e});
        out.add_edge(VertexId{vp[static_cast<std::size_t>(x.u.index)]}, VertexId{vp[static_cast<std::size_t>(x.v.index)]});
    }
    return out;
}

}  // namespace

Multigraph random_connected_multigraph(Rng& rng, int vertices, int edges, bool allow_loops) {
    if (vertices < 1 || edges < vertices - 1 || (vertices == 1 && edges > 0 && !allow_loops)) {
        throw Error(ErrorKind::InvalidArgument, "no connected multigraph with these counts");
    }
    Multigraph g(vertices);
    for (int v = 1; v < vertices; ++v) {
        g.add_edge(VertexId{uniform(rng, 0, v - 1)}, VertexId{v});
    }
    while (g.edge_count() < edges) {
        int a = uniform(rng, 0, vertices - 1);
        int b = uniform(rng, 0, vertices - 1);
        if (a == b && !(allow_loops && uniform(rng, 0, 3) == 0)) {
            continue;
        }
        g.add_edge(VertexId{a}, VertexId{b});
    }
    return relabel(rng, g);
}

Multigraph random_3_edge_connected(Rng& rng, int max_edges) {
    if (max_edges < 3) {
        throw Error(ErrorKind::InvalidArgument, "3-edge-connected multigraphs need at least 3 edges");
    }
    while (true) {
        int n = uniform(rng, 2, std::max(2, 2 * max_edges / 3));
        int m = uniform(rng, std::max(n - 1, (3 * n + 1) / 2), max_edges);
        Multigraph g = random_connected_multigraph(rng, n, m, true);
        if (is_k_edge_connected(g, 3)) {
            return g;
        }
    }
}

Multigraph random_essentially_3_edge_connected(Rng& rng, int max_base_edges, int max_pendants) {
    while (true) {
        Multigraph base = random_3_edge_connected(rng, max_base_edges);
        int branch = base.vertex_count();
        Multigraph g = base;
        for (int e = 0; e < base.edge_count(); ++e) {
            if (uniform(rng, 0, 2) == 0) {
                g = subdivide(g, EdgeId{e}).graph;
            }
        }
        int pendants = uniform(rng, 0, max_pendants);
        for (int p = 0; p < pendants; ++p) {
            VertexId leaf = g.add_vertex();
            g.add_edge(VertexId{uniform(rng, 0, branch - 1)}, leaf);
        }
        g = relabel(rng, g);
        if (is_essentially_k_edge_connected(g, 3)) {
            return g;
        }
    }
}

}  // namespace hamcon

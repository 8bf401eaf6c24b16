#include "hamcon/suites.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <functional>
#include <numeric>
#include <tuple>

#include <omp.h>

#include "hamcon/core.hpp"
#include "hamcon/corpus.hpp"
#include "hamcon/error.hpp"
#include "hamcon/formats.hpp"
#include "hamcon/harness.hpp"
#include "hamcon/invariants.hpp"
#include "hamcon/linegraph.hpp"
#include "hamcon/reduction.hpp"

namespace hamcon {

namespace {

constexpr std::size_t kMaxNotes = 8;

struct Tally {
    std::uint64_t cases = 0;
    std::uint64_t failures = 0;
    std::vector<std::pair<std::size_t, std::string>> notes;

    void check(bool ok, std::size_t at, const std::function<std::string()>& describe) {
        ++cases;
        if (!ok) {
            ++failures;
            if (notes.size() < kMaxNotes) {
                notes.emplace_back(at, describe());
            }
        }
    }
    void merge(Tally&& other) {
        cases += other.cases;
        failures += other.failures;
        notes.insert(notes.end(), other.notes.begin(), other.notes.end());
    }
};

class Clock {
public:
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

SuiteResult finish(std::string name, Tally t, const Clock& clock, std::vector<std::string> extra = {}) {
    std::sort(t.notes.begin(), t.notes.end());
    SuiteResult r{std::move(name), t.cases, t.failures, std::move(extra), clock.seconds()};
    for (std::size_t i = 0; i < t.notes.size() && i < kMaxNotes; ++i) {
        r.notes.push_back(t.notes[i].second);
    }
    return r;
}

int threads(int workers) { return workers <= 0 ? omp_get_max_threads() : workers; }

// body(i, tally) for i in [0, count), spread over OpenMP threads.
template <class Body>
Tally run_cases(std::size_t count, int workers, Body body) {
    Tally total;
    const auto n = static_cast<std::int64_t>(count);
#pragma omp parallel num_threads(threads(workers))
    {
        Tally local;
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t i = 0; i < n; ++i) {
            body(static_cast<std::size_t>(i), local);
        }
#pragma omp critical(hamcon_suite_merge)
        total.merge(std::move(local));
    }
    return total;
}

// Hamiltonian path check written against the definition only.
bool plain_hamiltonian_path(const SimpleGraph& g, const Trail& p, VertexId a, VertexId b) {
    int n = g.vertex_count();
    if (static_cast<int>(p.vertices.size()) != n || p.vertices.front() != a || p.vertices.back() != b) {
        return false;
    }
    std::vector<char> seen(static_cast<std::size_t>(n), 0);
    for (std::size_t i = 0; i < p.vertices.size(); ++i) {
        auto& s = seen[static_cast<std::size_t>(p.vertices[i].index)];
        if (s) {
            return false;
        }
        s = 1;
        if (i > 0 && !g.adjacent(p.vertices[i - 1], p.vertices[i])) {
            return false;
        }
    }
    return true;
}

std::string describe(const Multigraph& h) { return encode_edgelist(h).substr(0, 200); }

Multigraph sorted_edges(const Multigraph& g) {
    std::vector<std::pair<int, int>> e;
    for (const auto& ep : g.edges()) {
        e.emplace_back(std::max(ep.u.index, ep.v.index), std::min(ep.u.index, ep.v.index));
    }
    std::sort(e.begin(), e.end());
    Multigraph out(g.vertex_count());
    for (auto [v, u] : e) {
        out.add_edge(VertexId{u}, VertexId{v});
    }
    return out;
}

SimpleGraph relabeled(const SimpleGraph& g, Rng& rng) {
    std::vector<int> p(static_cast<std::size_t>(g.vertex_count()));
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    std::vector<std::pair<int, int>> edges;
    for (const auto& ep : g.edges()) {
        edges.emplace_back(p[static_cast<std::size_t>(ep.u.index)], p[static_cast<std::size_t>(ep.v.index)]);
    }
    return SimpleGraph(g.vertex_count(), edges);
}

Multigraph k4_with_pendants() {
    Multigraph h(8);
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            h.add_edge(VertexId{a}, VertexId{b});
        }
    }
    for (int v = 0; v < 4; ++v) {
        h.add_edge(VertexId{v}, VertexId{v + 4});
    }
    return h;
}

}  // namespace

CounterexampleReport analyse_counterexample(int pendants_per_vertex, int workers) {
    CounterexampleReport r;
    r.graphs = wagner_counterexample(pendants_per_vertex);
    const SimpleGraph& g = r.graphs.g;
    r.claw_free = is_claw_free(g);
    r.connectivity = vertex_connectivity(g);
    r.domination = domination_number(g);
    r.hamiltonian_connectivity = is_hamiltonian_connected(g, workers);
    r.essentially_3_edge_connected = static_cast<bool>(is_essentially_k_edge_connected(r.graphs.h, 3));
    r.core_is_wagner = isomorphic(core(r.graphs.h).core, wagner().as_multigraph());
    return r;
}

SuiteResult suite_dct_equivalence(const std::vector<Multigraph>& corpus, int workers) {
    Clock clock;
    Tally t = run_cases(corpus.size(), workers, [&](std::size_t i, Tally& local) {
        const Multigraph& h = corpus[i];
        bool ham = is_hamiltonian(line_graph(h).target);
        auto dct = find_dct(h);
        bool valid = !dct || (dct->closed() && is_valid_trail(h, *dct) && dominates_all_edges(h, *dct));
        local.check(valid && ham == dct.has_value(), i, [&] {
            return "hamiltonian=" + std::to_string(ham) + " dct=" + std::to_string(dct.has_value()) + " H: " +
                   describe(h);
        });
    });
    return finish("dct-equivalence", std::move(t), clock, {"graphs=" + std::to_string(corpus.size())});
}

SuiteResult suite_idt_equivalence(const std::vector<Multigraph>& corpus, int workers,
                                  std::optional<std::uint64_t> max_pairs, std::uint64_t seed) {
    Clock clock;
    struct Job {
        std::size_t graph;
        int e1;
        int e2;
    };
    std::vector<Job> jobs;
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        int m = corpus[i].edge_count();
        for (int a = 0; a < m; ++a) {
            for (int b = 0; b < m; ++b) {
                if (a != b) {
                    jobs.push_back({i, a, b});
                }
            }
        }
    }
    std::vector<std::string> extra{"pairs=" + std::to_string(jobs.size())};
    if (max_pairs && jobs.size() > *max_pairs) {
        Rng rng(seed);
        std::shuffle(jobs.begin(), jobs.end(), rng);
        jobs.resize(*max_pairs);
        std::sort(jobs.begin(), jobs.end(),
                  [](const Job& x, const Job& y) { return std::tie(x.graph, x.e1, x.e2) < std::tie(y.graph, y.e1, y.e2); });
        extra.push_back("sampled=" + std::to_string(jobs.size()) + " seed=" + std::to_string(seed));
    }
    std::vector<SimpleGraph> lines;
    lines.reserve(corpus.size());
    for (const auto& h : corpus) {
        lines.push_back(line_graph(h).target);
    }
    Tally t = run_cases(jobs.size(), workers, [&](std::size_t i, Tally& local) {
        const Job& job = jobs[i];
        const Multigraph& h = corpus[job.graph];
        const SimpleGraph& l = lines[job.graph];
        EdgeId e1{job.e1};
        EdgeId e2{job.e2};
        auto path = hamiltonian_path(l, VertexId{job.e1}, VertexId{job.e2});
        auto idt = find_idt(h, e1, e2);
        bool valid = (!idt || is_valid_idt(h, *idt)) &&
                     (!path || plain_hamiltonian_path(l, *path, VertexId{job.e1}, VertexId{job.e2}));
        local.check(valid && path.has_value() == idt.has_value(), i, [&] {
            return "edges " + std::to_string(job.e1) + "," + std::to_string(job.e2) + " path=" +
                   std::to_string(path.has_value()) + " idt=" + std::to_string(idt.has_value()) + " H: " + describe(h);
        });
    });
    return finish("idt-equivalence", std::move(t), clock, std::move(extra));
}

SuiteResult suite_closed_trail_through(std::uint64_t seed, int graphs, int max_edges, int min_sets, int workers) {
    Clock clock;
    Rng rng(seed);
    struct Job {
        Multigraph h;
        std::vector<std::vector<VertexId>> sets;
    };
    std::vector<Job> jobs;
    for (int i = 0; i < graphs; ++i) {
        Job job{random_3_edge_connected(rng, max_edges), {}};
        int n = job.h.vertex_count();
        // Every subset of size <= 7 when there are few enough; otherwise
        // all maximal ones plus a uniform sample of the rest.
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
            if (std::popcount(mask) <= 7) {
                masks.push_back(mask);
            }
        }
        if (masks.size() > static_cast<std::size_t>(4 * min_sets)) {
            std::shuffle(masks.begin(), masks.end(), rng);
            std::stable_partition(masks.begin(), masks.end(), [&](std::uint32_t m) {
                return std::popcount(m) == std::min(n, 7);
            });
            masks.resize(static_cast<std::size_t>(4 * min_sets));
        }
        for (std::uint32_t mask : masks) {
            std::vector<VertexId> a;
            for (int v = 0; v < n; ++v) {
                if ((mask >> v) & 1U) {
                    a.push_back(VertexId{v});
                }
            }
            job.sets.push_back(std::move(a));
        }
        jobs.push_back(std::move(job));
    }
    Tally t = run_cases(jobs.size(), workers, [&](std::size_t i, Tally& local) {
        const Job& job = jobs[i];
        for (const auto& a : job.sets) {
            for (int e = 0; e < job.h.edge_count(); ++e) {
                auto tr = find_closed_trail_through(job.h, a, EdgeId{e});
                bool ok = tr && tr->closed() && is_valid_trail(job.h, *tr) &&
                          std::find(tr->edges.begin(), tr->edges.end(), EdgeId{e}) != tr->edges.end();
                for (VertexId v : a) {
                    ok = ok && std::find(tr->vertices.begin(), tr->vertices.end(), v) != tr->vertices.end();
                }
                local.check(ok, i, [&] {
                    return "edge " + std::to_string(e) + " |A|=" + std::to_string(a.size()) + " H: " + describe(job.h);
                });
            }
        }
    });
    return finish("closed-trail-through", std::move(t), clock,
                  {"graphs=" + std::to_string(graphs) + " seed=" + std::to_string(seed)});
}

SuiteResult suite_petersen_dichotomy() {
    Clock clock;
    Tally t;
    Multigraph p = petersen().as_multigraph();
    for (int e = 0; e < p.edge_count(); ++e) {
        const auto& xy = p.endpoints(EdgeId{e});
        std::vector<VertexId> a;
        for (int v = 0; v < p.vertex_count(); ++v) {
            if (!xy.touches(VertexId{v})) {
                a.push_back(VertexId{v});
            }
        }
        bool absent = !find_closed_trail_through(p, a, EdgeId{e});
        PetersenWitness w{contract(p, {}), EdgeId{e}, a};
        auto check = verify_petersen_witness(w);
        t.check(absent && static_cast<bool>(check), static_cast<std::size_t>(e), [&] {
            return "edge " + std::to_string(e) + " trail_absent=" + std::to_string(absent) +
                   " witness=" + (check ? std::string("ok") : std::string(to_string(*check.defect)));
        });
    }
    return finish("petersen-dichotomy", std::move(t), clock);
}

namespace {

// Empty string when preimage(g) reproduces g and matches simplicial
// vertices to pendant edges; otherwise what went wrong.
std::string preimage_defect(const SimpleGraph& g) {
    Multigraph h;
    try {
        h = preimage(g);
    } catch (const Error& e) {
        return e.what();
    }
    if (h.edge_count() != g.vertex_count()) {
        return "edge count differs from vertex count";
    }
    SimpleGraph back = line_graph(h).target;
    if (back.edge_count() != g.edge_count()) {
        return "line graph of the preimage has a different edge count";
    }
    for (const auto& ep : g.edges()) {
        if (!back.adjacent(ep.u, ep.v)) {
            return "line graph of the preimage misses an edge";
        }
    }
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (is_simplicial(g, VertexId{v}) != is_pendant(h, EdgeId{v})) {
            return "vertex " + std::to_string(v) + " breaks simplicial <=> pendant";
        }
    }
    return {};
}

}  // namespace

SuiteResult suite_preimage(std::uint64_t seed, int graphs, int max_edges) {
    Clock clock;
    Rng rng(seed);
    Tally t;
    for (int i = 0; i < graphs; ++i) {
        int m = std::uniform_int_distribution<int>(1, max_edges)(rng);
        int n = std::uniform_int_distribution<int>(2, m + 1)(rng);
        Multigraph h = random_connected_multigraph(rng, n, m);
        std::string d = preimage_defect(line_graph(h).target);
        t.check(d.empty(), static_cast<std::size_t>(i), [&] { return d + " H: " + describe(h); });
    }
    struct Fixture {
        std::string name;
        SimpleGraph g;
        Multigraph expected;
    };
    Multigraph k13(4);
    for (int v = 1; v < 4; ++v) {
        k13.add_edge(VertexId{0}, VertexId{v});
    }
    Counterexample cx = wagner_counterexample(1);
    std::vector<Fixture> fixtures{
        {"K3", SimpleGraph(3, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}}), k13},
        {"L(Petersen)", line_graph(petersen().as_multigraph()).target, petersen().as_multigraph()},
        {"L(W + pendants)", cx.g, cx.h},
    };
    for (std::size_t f = 0; f < fixtures.size(); ++f) {
        const auto& fx = fixtures[f];
        std::string d = preimage_defect(fx.g);
        bool iso = d.empty() && isomorphic(preimage(fx.g), fx.expected);
        t.check(d.empty() && iso, static_cast<std::size_t>(graphs) + f,
                [&] { return fx.name + ": " + (d.empty() ? std::string("preimage not isomorphic to expected") : d); });
    }
    return finish("preimage", std::move(t), clock,
                  {"random=" + std::to_string(graphs) + " seed=" + std::to_string(seed) + " fixtures=3"});
}

SuiteResult suite_pipeline(int max_n, PipelineCorpus corpus, int relabelings, std::uint64_t seed, int workers) {
    Clock clock;
    Rng rng(seed);
    std::vector<SimpleGraph> graphs;
    auto eligible = [](const SimpleGraph& g) {
        return evaluate(g, Hypothesis::Thm1).stages_passed >= 5 && is_line_graph_of_multigraph(g);
    };
    for (int n = 1; n <= max_n && corpus == PipelineCorpus::Labeled; ++n) {
        const auto total = static_cast<std::int64_t>(labeled_graph_count(n));
        std::vector<std::pair<std::int64_t, SimpleGraph>> found;
#pragma omp parallel num_threads(threads(workers))
        {
            std::vector<std::pair<std::int64_t, SimpleGraph>> mine;
#pragma omp for schedule(dynamic, 512) nowait
            for (std::int64_t i = 0; i < total; ++i) {
                SimpleGraph g = labeled_graph(n, static_cast<std::uint64_t>(i));
                if (eligible(g)) {
                    mine.emplace_back(i, std::move(g));
                }
            }
#pragma omp critical(hamcon_suite_merge)
            found.insert(found.end(), mine.begin(), mine.end());
        }
        std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
        for (auto& f : found) {
            graphs.push_back(std::move(f.second));
        }
    }
    for (int n = 1; n <= max_n && corpus == PipelineCorpus::Classes; ++n) {
        for (const SimpleGraph& rep : unlabeled_connected_graphs(n)) {
            if (!eligible(rep)) {
                continue;
            }
            graphs.push_back(rep);
            for (int r = 0; r < relabelings; ++r) {
                graphs.push_back(relabeled(rep, rng));
            }
        }
    }
    std::size_t from_enumeration = graphs.size();
    Multigraph k4(4);
    for (int a = 0; a < 4; ++a) {
        for (int b = a + 1; b < 4; ++b) {
            k4.add_edge(VertexId{a}, VertexId{b});
        }
    }
    graphs.push_back(line_graph(k4).target);
    graphs.push_back(line_graph(k4_with_pendants()).target);

    std::vector<std::uint64_t> lift_failed(1, 0);
    Tally t = run_cases(graphs.size(), workers, [&](std::size_t i, Tally& local) {
        const SimpleGraph& g = graphs[i];
        DominatingSet d = *has_dominating_set(g, domination_number(g));
        for (int u = 0; u < g.vertex_count(); ++u) {
            for (int v = 0; v < g.vertex_count(); ++v) {
                if (u == v) {
                    continue;
                }
                PipelineRun run = run_pipeline(g, VertexId{u}, VertexId{v}, d);
                bool ok = run.path && plain_hamiltonian_path(g, *run.path, VertexId{u}, VertexId{v});
                if (run.failure && run.failure->kind == ErrorKind::LiftFailed) {
#pragma omp atomic
                    ++lift_failed[0];
                }
                local.check(ok, i, [&] {
                    std::string why = run.failure ? std::string(to_string(run.failure->stage)) + ": " + run.failure->detail
                                                  : std::string("path failed revalidation");
                    return encode_graph6(g) + " pair " + std::to_string(u) + "," + std::to_string(v) + " " + why;
                });
            }
        }
    });
    return finish("pipeline", std::move(t), clock,
                  {std::string(corpus == PipelineCorpus::Labeled ? "labeled" : "classes") +
                       " graphs=" + std::to_string(from_enumeration) + "+2 fixtures", "lift_failed=" + std::to_string(lift_failed[0]),
                   "seed=" + std::to_string(seed)});
}

SuiteResult suite_core(std::uint64_t seed, int graphs, int shuffles) {
    Clock clock;
    Rng rng(seed);
    Tally t;
    int lifted = 0;
    for (int i = 0; i < graphs; ++i) {
        Multigraph h = random_essentially_3_edge_connected(rng, 12, 8);
        auto at = static_cast<std::size_t>(i);
        CoreOptions plain;
        plain.check_postcondition = false;
        CoreMap cm = core(h, plain);
        bool same = true;
        for (int s = 1; s <= shuffles; ++s) {
            CoreOptions o = plain;
            o.shuffle_seed = rng() | 1U;
            CoreMap other = core(h, o);
            same = same && other.removed_pendants == cm.removed_pendants && isomorphic(other.core, cm.core);
        }
        t.check(same, at, [&] { return "order dependence on H: " + describe(h); });
        t.check(edge_connectivity(cm.core) >= 3, at, [&] { return "core not 3-edge-connected, H: " + describe(h); });
        std::size_t accounted = cm.removed_pendants.size();
        for (const auto& x : cm.edge_expansion) {
            accounted += x.edges.size();
        }
        t.check(accounted == static_cast<std::size_t>(h.edge_count()), at,
                [&] { return "edge accounting off, H: " + describe(h); });
        if (auto sct = find_spanning_closed_trail(cm.core)) {
            ++lifted;
            Trail up = lift_closed_trail(cm, *sct);
            t.check(up.closed() && is_valid_trail(h, up) && dominates_all_edges(h, up), at,
                    [&] { return "lifted trail is not a DCT, H: " + describe(h); });
        }
    }
    return finish("core", std::move(t), clock,
                  {"graphs=" + std::to_string(graphs) + " shuffles=" + std::to_string(shuffles) +
                       " seed=" + std::to_string(seed),
                   "spanning_trails_lifted=" + std::to_string(lifted)});
}

SuiteResult suite_roundtrip(std::uint64_t seed, int graphs) {
    Clock clock;
    Rng rng(seed);
    Tally t;
    for (int i = 0; i < graphs; ++i) {
        int n = std::uniform_int_distribution<int>(1, 16)(rng);
        int m = std::uniform_int_distribution<int>(0, 24)(rng);
        Multigraph g(n);
        for (int k = 0; k < m; ++k) {
            g.add_edge(VertexId{std::uniform_int_distribution<int>(0, n - 1)(rng)},
                       VertexId{std::uniform_int_distribution<int>(0, n - 1)(rng)});
        }
        std::vector<std::pair<int, int>> simple;
        for (const auto& ep : g.edges()) {
            if (!ep.is_loop() && !std::count(simple.begin(), simple.end(), std::pair{ep.u.index, ep.v.index})) {
                simple.emplace_back(ep.u.index, ep.v.index);
            }
        }
        SimpleGraph s(n, simple);
        auto at = static_cast<std::size_t>(i);
        std::string g6 = encode_graph6(s);
        SimpleGraph s_back = decode_graph6(g6);
        t.check(sorted_edges(s_back.as_multigraph()) == sorted_edges(s.as_multigraph()), at,
                [&] { return "graph6 " + g6; });
        std::string s6 = encode_sparse6(g);
        t.check(decode_sparse6(s6) == sorted_edges(g), at, [&] { return "sparse6 " + s6; });
        t.check(decode_edgelist(encode_edgelist(g)) == g, at, [&] { return "edgelist " + describe(g); });
    }
    return finish("roundtrip", std::move(t), clock, {"graphs=" + std::to_string(graphs) + " seed=" + std::to_string(seed)});
}

std::vector<std::string> suite_names() {
    return {"dct", "idt", "trail-through", "petersen", "preimage", "pipeline", "core", "roundtrip"};
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int workers) {
    if (name == "dct") {
        return suite_dct_equivalence(multigraph_corpus({}), workers);
    }
    if (name == "idt") {
        return suite_idt_equivalence(multigraph_corpus({}), workers, std::nullopt, seed);
    }
    if (name == "trail-through") {
        return suite_closed_trail_through(seed, 500, 12, 50, workers);
    }
    if (name == "petersen") {
        return suite_petersen_dichotomy();
    }
    if (name == "preimage") {
        return suite_preimage(seed);
    }
    if (name == "pipeline") {
        return suite_pipeline(7, PipelineCorpus::Labeled, 0, seed, workers);
    }
    if (name == "core") {
        return suite_core(seed);
    }
    if (name == "roundtrip") {
        return suite_roundtrip(seed);
    }
    throw Error(ErrorKind::InvalidArgument, "unknown suite '" + name + "'");
}

}  // namespace hamcon

// Command-line front end: theorem verification over enumerated or ingested
// corpora, property tables, the reduction pipeline and the sharpness demo.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hamcon/constructions.hpp"
#include "hamcon/corpus.hpp"
#include "hamcon/error.hpp"
#include "hamcon/formats.hpp"
#include "hamcon/harness.hpp"
#include "hamcon/invariants.hpp"
#include "hamcon/linegraph.hpp"
#include "hamcon/reduction.hpp"
#include "hamcon/suites.hpp"
#include "hamcon/trails.hpp"

using namespace hamcon;

namespace {

constexpr int kOk = 0;
constexpr int kViolations = 1;
constexpr int kInputError = 2;
constexpr int kInternalError = 3;

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string pair_text(const std::optional<std::pair<VertexId, VertexId>>& p) {
    if (!p) {
        return "-";
    }
    return std::to_string(p->first.index) + " " + std::to_string(p->second.index);
}

std::string path_text(const Trail& t) {
    std::string s;
    for (VertexId v : t.vertices) {
        s += (s.empty() ? "" : " ") + std::to_string(v.index);
    }
    return s;
}

std::vector<CorpusRecord> load(const std::string& input, const std::string& format) {
    std::optional<Encoding> enc;
    if (!format.empty()) {
        enc = parse_encoding(format);
    }
    return read_corpus(input, enc);
}

SimpleGraph single_simple(const std::string& input, const std::string& format) {
    auto records = load(input, format);
    if (records.size() != 1) {
        throw Error(ErrorKind::InvalidArgument, input + ": expected exactly one graph, found " +
                                                    std::to_string(records.size()));
    }
    try {
        return SimpleGraph::from_multigraph(records[0].graph);
    } catch (const Error&) {
        throw Error(ErrorKind::InvalidArgument, records[0].origin + ": graph has loops or parallel edges");
    }
}

void print_report(const VerificationReport& r) {
    std::printf("hypothesis %s\n", std::string(to_string(r.hypothesis)).c_str());
    for (std::size_t i = 0; i < r.stage_names.size(); ++i) {
        std::printf("  %-22s %llu\n", r.stage_names[i].c_str(), static_cast<unsigned long long>(r.stage_counts[i]));
    }
    std::printf("violations %zu\n", r.violations.size());
    for (const auto& v : r.violations) {
        std::printf("  %s %s pair %s\n", v.origin.c_str(), v.graph6.c_str(), pair_text(v.failing_pair).c_str());
    }
    std::printf("elapsed %.3fs\n", r.elapsed_seconds);
}

void print_props(const SimpleGraph& g, const std::string& origin, int workers) {
    std::printf("graph %s\n", origin.c_str());
    std::printf("  %-24s %d\n", "vertices", g.vertex_count());
    std::printf("  %-24s %d\n", "edges", g.edge_count());
    std::printf("  %-24s %s\n", "connected", yes_no(is_connected(g)).c_str());
    std::printf("  %-24s %s\n", "claw-free", yes_no(is_claw_free(g)).c_str());
    std::printf("  %-24s %d\n", "vertex connectivity", vertex_connectivity(g));
    if (g.vertex_count() > 0) {
        std::printf("  %-24s %d\n", "domination number", domination_number(g));
    }
    if (g.vertex_count() >= 3) {
        std::printf("  %-24s %s\n", "hamiltonian", yes_no(is_hamiltonian(g)).c_str());
    }
    if (g.vertex_count() >= 2) {
        auto hc = is_hamiltonian_connected(g, workers);
        std::printf("  %-24s %s", "hamiltonian-connected", yes_no(hc.connected).c_str());
        if (hc.failing_pair) {
            std::printf(" (no path %s)", pair_text(hc.failing_pair).c_str());
        }
        std::printf("\n");
    }
    if (g.vertex_count() > 0 && is_connected(g) && is_line_graph_of_multigraph(g)) {
        Multigraph h = preimage(g);
        std::printf("  %-24s %d vertices, %d edges, %zu pendant\n", "line-graph preimage", h.vertex_count(),
                    h.edge_count(), pendant_edges(h).size());
    } else {
        std::printf("  %-24s none\n", "line-graph preimage");
    }
}

std::optional<SimpleGraph> named_graph(const std::string& name) {
    if (name == "petersen") {
        return petersen();
    }
    if (name == "wagner") {
        return wagner();
    }
    if (name == "k4") {
        return SimpleGraph(4, std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    }
    if (name == "octahedron") {
        return line_graph(named_graph("k4")->as_multigraph()).target;
    }
    if (name == "counterexample") {
        return wagner_counterexample(1).g;
    }
    return std::nullopt;
}

int exit_code_for(const PipelineFailure& f) {
    switch (f.kind) {
        case ErrorKind::LiftFailed:
        case ErrorKind::InvalidTrail:
            return kInternalError;
        case ErrorKind::NotALineGraphOfMultigraph:
        case ErrorKind::Disconnected:
        case ErrorKind::NotEssentially3EdgeConnected:
        case ErrorKind::SizeLimit:
            return kInputError;
        default:
            return kViolations;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hamiltonian-connectivity of claw-free graphs: verification harness and reduction pipeline"};
    app.require_subcommand(1);

    std::string input;
    std::string format;
    std::string hypothesis = "thm1";
    std::string witnesses;
    std::string named;
    std::string suite_name = "all";
    std::string out_prefix;
    int bound = 0;
    int workers = 1;
    int u = -1;
    int v = -1;
    int pendants = 1;
    std::uint64_t seed = 1;

    auto add_input = [&](CLI::App* cmd) {
        cmd->add_option("--input", input, "graph file")->check(CLI::ExistingFile);
        cmd->add_option("--format", format, "g6, s6 or el (default: guessed)")
            ->check(CLI::IsMember({"g6", "s6", "el", "graph6", "sparse6", "edgelist"}));
    };
    auto add_workers = [&](CLI::App* cmd) {
        cmd->add_option("--workers", workers, "OpenMP threads, 0 = all")->check(CLI::NonNegativeNumber);
    };

    auto* verify = app.add_subcommand("verify", "check a theorem on every graph of a corpus");
    add_input(verify);
    verify->add_option("--n", bound, "enumerate all labeled graphs on 1..N vertices (N <= 7)")
        ->check(CLI::Range(1, kMaxLabeledVertices));
    verify->add_option("--hypothesis", hypothesis, "thm1 or ageev")->check(CLI::IsMember({"thm1", "ageev"}));
    verify->add_option("--emit-witnesses", witnesses, "write each violation as '<graph6> <u> <v>'");
    add_workers(verify);

    auto* props = app.add_subcommand("props", "print the property table of each input graph");
    add_input(props);
    props->add_option("--named", named, "petersen, wagner, k4, octahedron or counterexample")
        ->check(CLI::IsMember({"petersen", "wagner", "k4", "octahedron", "counterexample"}));
    add_workers(props);

    auto* pipe = app.add_subcommand("pipeline", "build a hamiltonian u-v path through the reduction");
    add_input(pipe);
    pipe->add_option("--named", named, "petersen, wagner, k4, octahedron or counterexample")
        ->check(CLI::IsMember({"petersen", "wagner", "k4", "octahedron", "counterexample"}));
    pipe->add_option("--u", u, "first end")->required()->check(CLI::NonNegativeNumber);
    pipe->add_option("--v", v, "second end")->required()->check(CLI::NonNegativeNumber);

    auto* cx = app.add_subcommand("counterexample", "emit and check L(W + pendants)");
    cx->add_option("count", pendants, "pendant edges per Wagner vertex")->check(CLI::PositiveNumber);
    cx->add_option("--pendants", pendants, "pendant edges per Wagner vertex")->check(CLI::PositiveNumber);
    cx->add_option("--out", out_prefix, "also write PREFIX.el and PREFIX.g6");
    add_workers(cx);

    auto* suite = app.add_subcommand("suite", "run randomized and exhaustive property suites");
    suite->add_option("--name", suite_name, "suite name or 'all'");
    suite->add_option("--seed", seed, "seed for the randomized suites");
    add_workers(suite);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*verify) {
            if ((bound > 0) == !input.empty()) {
                std::cerr << "verify needs exactly one of --n and --input\n";
                return kInputError;
            }
            Hypothesis h = parse_hypothesis(hypothesis);
            VerificationReport r;
            if (bound > 0) {
                r = verify_enumerated(bound, h, workers);
            } else {
                auto records = load(input, format);
                r = verify_records(records, h, workers);
            }
            print_report(r);
            if (!witnesses.empty()) {
                std::ofstream out(witnesses);
                for (const auto& w : r.violations) {
                    out << w.graph6 << ' ' << pair_text(w.failing_pair) << '\n';
                }
            }
            if (!r.consistent()) {
                std::cerr << "report failed its own consistency check\n";
                return kInternalError;
            }
            return r.violations.empty() ? kOk : kViolations;
        }
        if (*props) {
            if (auto g = named_graph(named)) {
                print_props(*g, named, workers);
                return kOk;
            }
            if (input.empty()) {
                std::cerr << "props needs --input or --named\n";
                return kInputError;
            }
            for (const auto& rec : load(input, format)) {
                print_props(SimpleGraph::from_multigraph(rec.graph), rec.origin, workers);
            }
            return kOk;
        }
        if (*pipe) {
            std::optional<SimpleGraph> g = named_graph(named);
            if (!g) {
                if (input.empty()) {
                    std::cerr << "pipeline needs --input or --named\n";
                    return kInputError;
                }
                g = single_simple(input, format);
            }
            if (u >= g->vertex_count() || v >= g->vertex_count() || u == v) {
                std::cerr << "--u and --v must be distinct vertices of the graph\n";
                return kInputError;
            }
            if (g->vertex_count() == 0 || !is_connected(*g)) {
                std::cerr << "pipeline needs a connected graph\n";
                return kInputError;
            }
            DominatingSet d = *has_dominating_set(*g, domination_number(*g));
            PipelineRun run = run_pipeline(*g, VertexId{u}, VertexId{v}, d);
            std::printf("dominating set size %zu\n", d.vertices.size());
            if (run.star_preimage) {
                std::printf("preimage is a star; IDT runs through its centre\n");
            }
            if (run.context) {
                const auto& c = *run.context;
                std::printf("e0 edges %d %d\n", c.e0_1.index, c.e0_2.index);
                std::printf("h_n %d vertices, %d edges, e_n %d\n", c.h_n.vertex_count(), c.h_n.edge_count(),
                            c.e_n.index);
                std::printf("|z| %zu\n", c.z.size());
            }
            if (run.closed_trail) {
                std::printf("closed trail length %zu\n", run.closed_trail->length());
            }
            if (run.idt) {
                std::printf("IDT length %zu\n", run.idt->trail.length());
            }
            if (run.failure) {
                std::printf("failed at %s: %s\n", std::string(to_string(run.failure->stage)).c_str(),
                            run.failure->detail.c_str());
                return exit_code_for(*run.failure);
            }
            std::printf("path %s\n", path_text(*run.path).c_str());
            return kOk;
        }
        if (*cx) {
            CounterexampleReport r = analyse_counterexample(pendants, workers);
            std::string el = encode_edgelist(r.graphs.h);
            std::string g6 = encode_graph6(r.graphs.g);
            std::printf("# H = Wagner graph + %d pendant edge(s) per vertex\n%s", pendants, el.c_str());
            std::printf("# G = L(H), graph6\n%s\n", g6.c_str());
            if (!out_prefix.empty()) {
                std::ofstream(out_prefix + ".el") << el;
                std::ofstream(out_prefix + ".g6") << g6 << '\n';
            }
            std::printf("  %-32s %d\n", "|V(G)|", r.graphs.g.vertex_count());
            std::printf("  %-32s %s\n", "claw-free", yes_no(r.claw_free).c_str());
            std::printf("  %-32s %d\n", "vertex connectivity", r.connectivity);
            std::printf("  %-32s %d\n", "domination number", r.domination);
            std::printf("  %-32s %s\n", "hamiltonian-connected", yes_no(r.hamiltonian_connectivity.connected).c_str());
            std::printf("  %-32s %s\n", "failing pair", pair_text(r.hamiltonian_connectivity.failing_pair).c_str());
            std::printf("  %-32s %s\n", "H essentially 3-edge-connected", yes_no(r.essentially_3_edge_connected).c_str());
            std::printf("  %-32s %s\n", "core(H) isomorphic to Wagner", yes_no(r.core_is_wagner).c_str());
            bool sharp = r.claw_free && r.connectivity >= 3 && r.domination == 4 &&
                         !r.hamiltonian_connectivity.connected && r.hamiltonian_connectivity.failing_pair;
            return sharp ? kOk : kInternalError;
        }
        if (*suite) {
            std::vector<std::string> names = suite_name == "all" ? suite_names() : std::vector<std::string>{suite_name};
            bool all_passed = true;
            for (const auto& name : names) {
                SuiteResult r = run_suite(name, seed, workers);
                std::printf("%-4s %-22s cases=%llu failures=%llu %.2fs\n", r.passed() ? "PASS" : "FAIL", r.name.c_str(),
                            static_cast<unsigned long long>(r.cases), static_cast<unsigned long long>(r.failures),
                            r.elapsed_seconds);
                for (const auto& note : r.notes) {
                    std::printf("     %s\n", note.c_str());
                }
                all_passed = all_passed && r.passed();
            }
            return all_passed ? kOk : kViolations;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        switch (e.kind()) {
            case ErrorKind::Parse:
            case ErrorKind::InvalidArgument:
            case ErrorKind::UnknownVertex:
            case ErrorKind::UnknownEdge:
            case ErrorKind::SizeLimit:
                return kInputError;
            default:
                return kInternalError;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInternalError;
    }
    return kOk;
}

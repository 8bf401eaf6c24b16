// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Counts are exact; runtime budgets are wall-clock seconds.
//
//   acceptance [--workers N] [--seed S] [--only K]

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hamcon/constructions.hpp"
#include "hamcon/corpus.hpp"
#include "hamcon/harness.hpp"
#include "hamcon/suites.hpp"
#include "hamcon/trails.hpp"

using namespace hamcon;

namespace {

struct Outcome {
    bool pass = false;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

std::string suite_detail(const SuiteResult& r) {
    std::string s = "cases=" + std::to_string(r.cases) + " failures=" + std::to_string(r.failures);
    for (const auto& n : r.notes) {
        s += " | " + n;
    }
    return s;
}

bool note_equals(const SuiteResult& r, const std::string& key, const std::string& value) {
    for (const auto& n : r.notes) {
        if (n.rfind(key + "=", 0) == 0) {
            return n.substr(key.size() + 1) == value;
        }
    }
    return false;
}

constexpr std::uint64_t kLabeledUpTo7 = 1 + 2 + 8 + 64 + 1024 + 32768 + 2097152;

Outcome theorem_check(Hypothesis h, int workers) {
    auto par = verify_enumerated(7, h, workers);
    auto ser = verify_enumerated_serial(7, h);
    Outcome o;
    o.pass = par.violations.empty() && par.consistent() && par.stage_counts[0] == kLabeledUpTo7 &&
             par.same_outcome(ser);
    o.detail = "stages";
    for (std::size_t i = 0; i < par.stage_counts.size(); ++i) {
        o.detail += " " + par.stage_names[i] + "=" + std::to_string(par.stage_counts[i]);
    }
    o.detail += " violations=" + std::to_string(par.violations.size()) +
                " serial==parallel=" + (par.same_outcome(ser) ? "yes" : "no");
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"acceptance criteria"};
    int workers = 0;
    std::uint64_t seed = 1;
    int only = 0;
    app.add_option("--workers", workers, "OpenMP threads, 0 = runtime default");
    app.add_option("--seed", seed, "seed for the randomized suites");
    app.add_option("--only", only, "run a single criterion");
    CLI11_PARSE(app, argc, argv);

    std::vector<Criterion> criteria{
        {1, "sharpness counterexample", 120,
         [&] {
             auto r = analyse_counterexample(1, workers);
             Outcome o;
             bool pair_ok = r.hamiltonian_connectivity.failing_pair.has_value() &&
                            !hamiltonian_path(r.graphs.g, r.hamiltonian_connectivity.failing_pair->first,
                                              r.hamiltonian_connectivity.failing_pair->second);
             o.pass = r.graphs.g.vertex_count() == 20 && r.claw_free && r.connectivity >= 3 && r.domination == 4 &&
                      !r.hamiltonian_connectivity.connected && pair_ok;
             o.detail = "|V|=" + std::to_string(r.graphs.g.vertex_count()) +
                        " claw_free=" + (r.claw_free ? "yes" : "no") + " kappa=" + std::to_string(r.connectivity) +
                        " gamma=" + std::to_string(r.domination) +
                        " hamiltonian_connected=" + (r.hamiltonian_connectivity.connected ? "yes" : "no");
             if (r.hamiltonian_connectivity.failing_pair) {
                 o.detail += " failing_pair=" + std::to_string(r.hamiltonian_connectivity.failing_pair->first.index) +
                             "," + std::to_string(r.hamiltonian_connectivity.failing_pair->second.index);
             }
             return o;
         }},
        {2, "thm1 over labeled graphs n<=7", 900, [&] { return theorem_check(Hypothesis::Thm1, workers); }},
        {3, "ageev over labeled graphs n<=7", 900, [&] { return theorem_check(Hypothesis::Ageev, workers); }},
        {4, "DCT equivalence", 600,
         [&] {
             auto corpus = multigraph_corpus({});
             auto r = suite_dct_equivalence(corpus, workers);
             return Outcome{r.passed() && r.cases == corpus.size(),
                            "corpus=" + std::to_string(corpus.size()) + " " + suite_detail(r)};
         }},
        {5, "IDT equivalence, all ordered pairs", 1800,
         [&] {
             auto r = suite_idt_equivalence(multigraph_corpus({}), workers, std::nullopt, seed);
             return Outcome{r.passed(), suite_detail(r)};
         }},
        {6, "closed trail through |A|<=7 and e", 600,
         [&] {
             auto r = suite_closed_trail_through(seed, 500, 12, 50, workers);
             return Outcome{r.passed(), suite_detail(r)};
         }},
        {7, "Petersen dichotomy", 60,
         [&] {
             auto r = suite_petersen_dichotomy();
             return Outcome{r.passed() && r.cases == 15, suite_detail(r)};
         }},
        {8, "preimage round trip and simplicial/pendant", 300,
         [&] {
             auto r = suite_preimage(seed, 1000, 12);
             return Outcome{r.passed() && r.cases >= 1003, suite_detail(r)};
         }},
        {9, "pipeline completeness", 1800,
         [&] {
             auto r = suite_pipeline(7, PipelineCorpus::Labeled, 0, seed, workers);
             return Outcome{r.passed() && note_equals(r, "lift_failed", "0"), suite_detail(r)};
         }},
        {10, "core properties", 300,
         [&] {
             auto r = suite_core(seed, 500, 10);
             return Outcome{r.passed(), suite_detail(r)};
         }},
    };

    int failed = 0;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) {
            continue;
        }
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = Outcome{false, std::string("exception: ") + e.what()};
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        bool in_budget = secs <= c.budget_seconds;
        bool pass = o.pass && in_budget;
        failed += pass ? 0 : 1;
        std::printf("%s [%2d] %s: %s (%.1fs, budget %.0fs%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                    o.detail.c_str(), secs, c.budget_seconds, in_budget ? "" : ", OVER BUDGET");
        std::fflush(stdout);
    }
    return failed == 0 ? EXIT_SUCCESS : EXIT_FAILURE;
}

#include "hamcon/harness.hpp"

#include <algorithm>
#include <array>
#include <chrono>

#include <omp.h>

#include "hamcon/error.hpp"
#include "hamcon/formats.hpp"
#include "hamcon/invariants.hpp"
#include "hamcon/trails.hpp"

namespace hamcon {

namespace {

constexpr int kStages = 6;

using Counts = std::array<std::uint64_t, kStages>;

struct Found {
    std::size_t order;  // input position, for the deterministic merge
    Violation violation;
};

void tally(Counts& counts, const GraphVerdict& v) {
    for (int s = 0; s < v.stages_passed; ++s) {
        ++counts[static_cast<std::size_t>(s)];
    }
}

VerificationReport make_report(Hypothesis h, const Counts& counts, std::vector<Found> found,
                               std::chrono::steady_clock::time_point start) {
    std::sort(found.begin(), found.end(), [](const Found& a, const Found& b) { return a.order < b.order; });
    VerificationReport r;
    r.hypothesis = h;
    r.stage_names = stage_names(h);
    r.stage_counts.assign(counts.begin(), counts.end());
    for (auto& f : found) {
        r.violations.push_back(std::move(f.violation));
    }
    r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

int thread_count(int workers) { return workers <= 0 ? omp_get_max_threads() : workers; }

}  // namespace

std::string_view to_string(Hypothesis h) { return h == Hypothesis::Thm1 ? "thm1" : "ageev"; }

Hypothesis parse_hypothesis(std::string_view name) {
    if (name == "thm1") {
        return Hypothesis::Thm1;
    }
    if (name == "ageev") {
        return Hypothesis::Ageev;
    }
    throw Error(ErrorKind::InvalidArgument, "unknown hypothesis '" + std::string(name) + "'");
}

std::vector<std::string> stage_names(Hypothesis h) {
    if (h == Hypothesis::Thm1) {
        return {"total", "connected", "3-connected", "claw-free", "gamma<=3", "hamiltonian-connected"};
    }
    return {"total", "connected", "2-connected", "claw-free", "gamma<=2", "hamiltonian"};
}

GraphVerdict evaluate(const SimpleGraph& g, Hypothesis h) {
    GraphVerdict v;
    v.stages_passed = 1;
    if (g.vertex_count() == 0 || !is_connected(g)) {
        return v;
    }
    v.stages_passed = 2;
    int k = h == Hypothesis::Thm1 ? 3 : 2;
    if (!is_k_vertex_connected(g, k)) {
        return v;
    }
    v.stages_passed = 3;
    if (!is_claw_free(g)) {
        return v;
    }
    v.stages_passed = 4;
    if (!has_dominating_set(g, k)) {
        return v;
    }
    v.stages_passed = 5;
    if (h == Hypothesis::Thm1) {
        auto hc = is_hamiltonian_connected_serial(g);
        if (!hc) {
            v.violation = true;
            v.failing_pair = hc.failing_pair;
            return v;
        }
    } else if (!is_hamiltonian(g)) {
        v.violation = true;
        return v;
    }
    v.stages_passed = 6;
    return v;
}

bool VerificationReport::consistent() const {
    if (stage_counts.size() != static_cast<std::size_t>(kStages)) {
        return false;
    }
    for (std::size_t i = 1; i < stage_counts.size(); ++i) {
        if (stage_counts[i] > stage_counts[i - 1]) {
            return false;
        }
    }
    return stage_counts[kStages - 2] - stage_counts[kStages - 1] == violations.size();
}

bool VerificationReport::same_outcome(const VerificationReport& other) const {
    return hypothesis == other.hypothesis && stage_counts == other.stage_counts && violations == other.violations;
}

VerificationReport verify_enumerated_serial(int max_n, Hypothesis h) {
    auto start = std::chrono::steady_clock::now();
    labeled_graph_count(max_n);  // range check
    Counts counts{};
    std::vector<Found> found;
    std::size_t order = 0;
    for (int n = 1; n <= max_n; ++n) {
        enumerate_labeled(n, [&](std::uint64_t index, const SimpleGraph& g) {
            GraphVerdict v = evaluate(g, h);
            tally(counts, v);
            if (v.violation) {
                found.push_back({order, {"n=" + std::to_string(n) + "#" + std::to_string(index), encode_graph6(g),
                                         v.failing_pair}});
            }
            ++order;
        });
    }
    return make_report(h, counts, std::move(found), start);
}

VerificationReport verify_enumerated(int max_n, Hypothesis h, int workers) {
    if (workers == 1) {
        return verify_enumerated_serial(max_n, h);
    }
    auto start = std::chrono::steady_clock::now();
    labeled_graph_count(max_n);
    Counts counts{};
    std::vector<Found> found;
    std::size_t base = 0;
    for (int n = 1; n <= max_n; ++n) {
        const auto total = static_cast<std::int64_t>(labeled_graph_count(n));
#pragma omp parallel num_threads(thread_count(workers))
        {
            Counts local{};
            std::vector<Found> mine;
#pragma omp for schedule(dynamic, 512) nowait
            for (std::int64_t i = 0; i < total; ++i) {
                auto index = static_cast<std::uint64_t>(i);
                SimpleGraph g = labeled_graph(n, index);
                GraphVerdict v = evaluate(g, h);
                tally(local, v);
                if (v.violation) {
                    mine.push_back({base + index, {"n=" + std::to_string(n) + "#" + std::to_string(index),
                                                   encode_graph6(g), v.failing_pair}});
                }
            }
#pragma omp critical(hamcon_harness_merge)
            {
                for (std::size_t s = 0; s < counts.size(); ++s) {
                    counts[s] += local[s];
                }
                found.insert(found.end(), mine.begin(), mine.end());
            }
        }
        base += static_cast<std::size_t>(total);
    }
    return make_report(h, counts, std::move(found), start);
}

VerificationReport verify_records(std::span<const CorpusRecord> records, Hypothesis h, int workers) {
    auto start = std::chrono::steady_clock::now();
    std::vector<SimpleGraph> graphs;
    graphs.reserve(records.size());
    for (const auto& r : records) {
        try {
            graphs.push_back(SimpleGraph::from_multigraph(r.graph));
        } catch (const Error&) {
            throw Error(ErrorKind::InvalidArgument, r.origin + ": graph has loops or parallel edges");
        }
    }
    Counts counts{};
    std::vector<Found> found;
    const auto total = static_cast<std::int64_t>(graphs.size());
#pragma omp parallel num_threads(thread_count(workers))
    {
        Counts local{};
        std::vector<Found> mine;
#pragma omp for schedule(dynamic, 1) nowait
        for (std::int64_t i = 0; i < total; ++i) {
            auto at = static_cast<std::size_t>(i);
            GraphVerdict v = evaluate(graphs[at], h);
            tally(local, v);
            if (v.violation) {
                mine.push_back({at, {records[at].origin, encode_graph6(graphs[at]), v.failing_pair}});
            }
        }
#pragma omp critical(hamcon_harness_merge)
        {
            for (std::size_t s = 0; s < counts.size(); ++s) {
                counts[s] += local[s];
            }
            found.insert(found.end(), mine.begin(), mine.end());
        }
    }
    return make_report(h, counts, std::move(found), start);
}

}  // namespace hamcon

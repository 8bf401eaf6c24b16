#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hamcon/corpus.hpp"
#include "hamcon/multigraph.hpp"

namespace hamcon {

// thm1: 3-connected, claw-free, domination number <= 3 => hamiltonian-connected.
// ageev: 2-connected, claw-free, domination number <= 2 => hamiltonian.
enum class Hypothesis { Thm1, Ageev };

std::string_view to_string(Hypothesis h);
Hypothesis parse_hypothesis(std::string_view name);

// Stage names in filter order, the last being the conclusion.
std::vector<std::string> stage_names(Hypothesis h);

struct GraphVerdict {
    int stages_passed = 0;  // 1 (counted) .. 6 (conclusion holds)
    bool violation = false;
    std::optional<std::pair<VertexId, VertexId>> failing_pair;
};

// Runs the filters cheapest first and checks the conclusion on survivors.
GraphVerdict evaluate(const SimpleGraph& g, Hypothesis h);

struct Violation {
    std::string origin;
    std::string graph6;
    std::optional<std::pair<VertexId, VertexId>> failing_pair;
    friend bool operator==(const Violation&, const Violation&) = default;
};

struct VerificationReport {
    Hypothesis hypothesis = Hypothesis::Thm1;
    std::vector<std::string> stage_names;
    std::vector<std::uint64_t> stage_counts;
    std::vector<Violation> violations;  // in input order
    double elapsed_seconds = 0;

    // Stage counts never increase, and violations account exactly for the
    // drop at the conclusion stage.
    bool consistent() const;
    // Same counts and violations; timing ignored.
    bool same_outcome(const VerificationReport& other) const;
};

// All labeled graphs on 1..max_n vertices. workers == 1 runs the serial
// reference loop; otherwise graphs are spread over OpenMP threads
// (0 = runtime default) and merged back in index order.
VerificationReport verify_enumerated(int max_n, Hypothesis h, int workers = 1);
VerificationReport verify_enumerated_serial(int max_n, Hypothesis h);

// Records must be simple graphs; throws InvalidArgument naming the first
// record that is not.
VerificationReport verify_records(std::span<const CorpusRecord> records, Hypothesis h, int workers = 1);

}  // namespace hamcon

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "hamcon/constructions.hpp"
#include "hamcon/corpus.hpp"
#include "hamcon/error.hpp"
#include "hamcon/formats.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hamcon;
using testing::mg;

namespace {

std::vector<std::pair<int, int>> sorted_edges(const Multigraph& g) {
    std::vector<std::pair<int, int>> out;
    for (const auto& ep : g.edges()) {
        out.emplace_back(std::min(ep.u.index, ep.v.index), std::max(ep.u.index, ep.v.index));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool same_up_to_edge_order(const Multigraph& a, const Multigraph& b) {
    return a.vertex_count() == b.vertex_count() && sorted_edges(a) == sorted_edges(b);
}

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected throw");
    return ErrorKind::InvalidArgument;
}

// Canonical form of a loopless multigraph on n vertices: the smallest
// multiplicity vector over all vertex permutations.
std::vector<int> canonical(int n, const std::vector<std::vector<int>>& mult) {
    std::vector<int> p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::vector<int> best;
    do {
        std::vector<int> code;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                code.push_back(mult[static_cast<std::size_t>(p[static_cast<std::size_t>(a)])]
                                   [static_cast<std::size_t>(p[static_cast<std::size_t>(b)])]);
            }
        }
        if (best.empty() || code < best) {
            best = code;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return best;
}

// Isomorphism classes of connected loopless multigraphs, counted by brute
// force over labeled multiplicity vectors.
std::size_t multigraph_class_count(const MultigraphCorpusSpec& spec) {
    std::size_t total = 0;
    for (int n = 2; n <= spec.max_vertices; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                pairs.emplace_back(a, b);
            }
        }
        std::set<std::vector<int>> classes;
        std::vector<int> mult(pairs.size(), 0);
        while (true) {
            int m = std::accumulate(mult.begin(), mult.end(), 0);
            if (m >= spec.min_edges && m <= spec.max_edges) {
                std::vector<std::pair<int, int>> es;
                std::vector<std::vector<int>> matrix(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), 0));
                for (std::size_t i = 0; i < pairs.size(); ++i) {
                    if (mult[i] > 0) {
                        es.push_back(pairs[i]);
                    }
                    matrix[static_cast<std::size_t>(pairs[i].first)][static_cast<std::size_t>(pairs[i].second)] = mult[i];
                    matrix[static_cast<std::size_t>(pairs[i].second)][static_cast<std::size_t>(pairs[i].first)] = mult[i];
                }
                if (oracle::connected_without(SimpleGraph(n, es), 0)) {
                    classes.insert(canonical(n, matrix));
                }
            }
            std::size_t i = 0;
            while (i < mult.size() && mult[i] == spec.max_multiplicity) {
                mult[i++] = 0;
            }
            if (i == mult.size()) {
                break;
            }
            ++mult[i];
        }
        total += classes.size();
    }
    return total;
}

}  // namespace

TEST_SUITE("formats") {

TEST_CASE("graph6 samples") {
    CHECK(encode_graph6(SimpleGraph(1)) == "@");
    auto k2 = testing::complete(2);
    CHECK(encode_graph6(k2) == "A_");
    CHECK(decode_graph6("A_") == k2);
    CHECK(encode_graph6(testing::cycle(5)).size() == 3);

    for (std::string code : {"D?{", "DQc", "D~{", "Dhc", "D??"}) {
        auto g = decode_graph6(code);
        int n = 0;
        auto want = oracle::graph6_edges(code, &n);
        CHECK(g.vertex_count() == n);
        CHECK(sorted_edges(g.as_multigraph()) == want);
        CHECK(encode_graph6(g) == code);
    }
}

TEST_CASE("graph6 agrees with the reference decoder") {
    Rng rng(41);
    std::bernoulli_distribution coin(0.4);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + trial % 64;
        std::vector<std::pair<int, int>> es;
        for (int a = 0; a < n; ++a) {
            for (int b = a + 1; b < n; ++b) {
                if (coin(rng)) {
                    es.emplace_back(a, b);
                }
            }
        }
        SimpleGraph g(n, es);
        auto code = encode_graph6(g);
        int got_n = 0;
        CHECK(oracle::graph6_edges(code, &got_n) == sorted_edges(g.as_multigraph()));
        CHECK(got_n == n);
        CHECK(same_up_to_edge_order(decode_graph6(code).as_multigraph(), g.as_multigraph()));
    }
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK(kind_of([] { decode_graph6(""); }) == ErrorKind::Parse);
    CHECK(kind_of([] { decode_graph6("D?"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { decode_graph6("D? {"); }) == ErrorKind::Parse);
}

TEST_CASE("sparse6 round trips") {
    auto dbl = mg(2, {{0, 1}, {0, 1}});
    CHECK(same_up_to_edge_order(decode_sparse6(encode_sparse6(dbl)), dbl));
    auto loop = mg(2, {{0, 0}, {0, 1}});
    CHECK(same_up_to_edge_order(decode_sparse6(encode_sparse6(loop)), loop));
    auto single = mg(1, {{0, 0}, {0, 0}});
    CHECK(same_up_to_edge_order(decode_sparse6(encode_sparse6(single)), single));
    // Example from the format description: n = 7, edges 01 02 12 56.
    CHECK(same_up_to_edge_order(decode_sparse6(":Fa@x^"), mg(7, {{0, 1}, {0, 2}, {1, 2}, {5, 6}})));
    CHECK(encode_sparse6(mg(7, {{0, 1}, {0, 2}, {1, 2}, {5, 6}})) == ":Fa@x^");

    Rng rng(43);
    for (int trial = 0; trial < 300; ++trial) {
        int n = 1 + trial % 40;
        auto g = random_connected_multigraph(rng, n, std::max(n - 1, 12), true);
        CHECK(same_up_to_edge_order(decode_sparse6(encode_sparse6(g)), g));
    }
    CHECK(kind_of([] { decode_sparse6("Cdv"); }) == ErrorKind::Parse);
}

TEST_CASE("edgelist files") {
    auto k4 = read_corpus(std::string(HAMCON_TEST_DATA) + "/k4.el");
    REQUIRE(k4.size() == 1);
    CHECK(isomorphic(k4[0].graph, testing::complete(4).as_multigraph()));

    auto wp = read_corpus(std::string(HAMCON_TEST_DATA) + "/wagner_pendants.el");
    REQUIRE(wp.size() == 1);
    CHECK(wp[0].encoding == Encoding::Edgelist);
    CHECK(isomorphic(wp[0].graph, wagner_counterexample(1).h));

    Rng rng(47);
    for (int trial = 0; trial < 100; ++trial) {
        auto g = random_connected_multigraph(rng, 2 + trial % 9, 14, true);
        CHECK(decode_edgelist(encode_edgelist(g)) == g);
    }
    CHECK(kind_of([] { decode_edgelist("3 2\n0 1\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { decode_edgelist("3 1\n0 7\n"); }) == ErrorKind::Parse);
    CHECK(kind_of([] { read_corpus("/nonexistent/file.g6"); }) == ErrorKind::Parse);
}

TEST_CASE("multi-line corpora keep line numbers") {
    auto recs = parse_corpus("A_\n\nBw\n", Encoding::Graph6, "mem");
    REQUIRE(recs.size() == 2);
    CHECK(recs[1].origin == "mem:3");
    try {
        parse_corpus("A_\n!!\n", Encoding::Graph6, "mem");
        FAIL("expected throw");
    } catch (const Error& e) {
        CHECK(std::string(e.what()).find("mem:2") != std::string::npos);
    }
}

}

TEST_SUITE("corpus") {

TEST_CASE("labeled enumeration") {
    CHECK(labeled_graph_count(3) == 8);
    CHECK(labeled_graph_count(4) == 64);
    CHECK(labeled_graph_count(7) == (std::uint64_t{1} << 21));
    CHECK(kind_of([] { labeled_graph_count(8); }) == ErrorKind::InvalidArgument);

    // Connected labeled graphs on 5 vertices, counted through the reference
    // reachability test.
    int connected = 0;
    std::uint64_t visited = 0;
    enumerate_labeled(5, [&](std::uint64_t index, const SimpleGraph& g) {
        CHECK(index == visited);
        ++visited;
        connected += oracle::connected_without(g, 0) ? 1 : 0;
        CHECK(g == labeled_graph(5, index));
    });
    CHECK(visited == 1024);
    CHECK(connected == 728);
}

TEST_CASE("unlabeled connected graphs") {
    std::array<std::size_t, 8> want{0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        auto graphs = unlabeled_connected_graphs(n);
        CHECK(graphs.size() == want[static_cast<std::size_t>(n)]);
    }
    auto five = unlabeled_connected_graphs(5);
    for (std::size_t i = 0; i < five.size(); ++i) {
        CHECK(is_connected(five[i]));
        for (std::size_t j = i + 1; j < five.size(); ++j) {
            CHECK_FALSE(isomorphic(five[i].as_multigraph(), five[j].as_multigraph()));
        }
    }
}

TEST_CASE("multigraph corpus matches brute-force class count") {
    MultigraphCorpusSpec small{4, 3, 6, 2};
    CHECK(multigraph_corpus(small).size() == multigraph_class_count(small));
    MultigraphCorpusSpec five{5, 3, 9, 3};
    auto corpus = multigraph_corpus(five);
    CHECK(corpus.size() == multigraph_class_count(five));
    for (const auto& g : corpus) {
        CHECK(is_connected(g));
        CHECK(g.edge_count() >= 3);
        CHECK(g.edge_count() <= 9);
    }
    CHECK(multigraph_corpus(MultigraphCorpusSpec{}).size() == 2045);
}

TEST_CASE("random generators") {
    Rng rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        auto g = random_connected_multigraph(rng, 6, 9);
        CHECK(is_connected(g));
        CHECK(g.edge_count() == 9);
        auto t = random_3_edge_connected(rng, 12);
        CHECK(t.edge_count() <= 12);
        CHECK(oracle::edge_connectivity(t) >= 3);
        auto e = random_essentially_3_edge_connected(rng, 10, 5);
        CHECK(oracle::essentially_k_edge_connected(e, 3));
    }
}

}

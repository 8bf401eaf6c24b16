#include <algorithm>
#include <vector>

#include "doctest.h"
#include "hamcon/core.hpp"
#include "hamcon/error.hpp"
#include "hamcon/invariants.hpp"
#include "hamcon/linegraph.hpp"
#include "hamcon/reduction.hpp"
#include "hamcon/trails.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hamcon;
using testing::mg;

namespace {

Multigraph subdivided_k4() { return mg(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

// Smallest-id non-loop core edge at the image of v.
EdgeId smallest_core_edge_at(const CoreMap& cm, VertexId v) {
    VertexId c = *cm.vertex_image[static_cast<std::size_t>(v.index)];
    for (int e = 0; e < cm.core.edge_count(); ++e) {
        const auto& ep = cm.core.endpoints(EdgeId{e});
        if (!ep.is_loop() && ep.touches(c)) {
            return EdgeId{e};
        }
    }
    FAIL("no core edge");
    return EdgeId{};
}

void check_every_pair(const SimpleGraph& g, const DominatingSet& d) {
    for (int u = 0; u < g.vertex_count(); ++u) {
        for (int v = 0; v < g.vertex_count(); ++v) {
            if (u == v) {
                continue;
            }
            CAPTURE(u);
            CAPTURE(v);
            auto run = run_pipeline(g, VertexId{u}, VertexId{v}, d);
            CHECK_FALSE(run.failure.has_value());
            REQUIRE(run.path.has_value());
            CHECK(is_hamiltonian_path(g, *run.path, VertexId{u}, VertexId{v}));
            auto check = oracle::ham_path(g, u, v);
            CHECK(check.has_value());
        }
    }
}

}  // namespace

TEST_SUITE("reduction") {

TEST_CASE("projecting edges onto the core") {
    auto h = testing::k4_with_pendants();
    auto cm = core(h);
    for (int e = 0; e < 6; ++e) {
        CHECK(project_edge(cm, EdgeId{e}) == *cm.owning_core_edge[static_cast<std::size_t>(e)]);
    }
    for (int e = 6; e < 10; ++e) {
        VertexId support{e - 6};
        CHECK(project_edge(cm, EdgeId{e}) == smallest_core_edge_at(cm, support));
    }

    auto sk = core(subdivided_k4());
    auto merged = *sk.owning_core_edge[0];
    CHECK(project_edge(sk, EdgeId{0}) == merged);
    CHECK(project_edge(sk, EdgeId{1}) == merged);
    CHECK(sk.core.endpoints(merged).touches(*sk.vertex_image[0]));
    CHECK(sk.core.endpoints(merged).touches(*sk.vertex_image[1]));
}

TEST_CASE("building h_n") {
    auto cm = core(testing::complete(4).as_multigraph());
    auto same = build_hn(cm, EdgeId{2}, EdgeId{2});
    CHECK(same.e_n == EdgeId{2});
    CHECK_FALSE(same.subdivision.has_value());
    CHECK(same.h_n == cm.core);

    // Disjoint edges 0-1 and 2-3: two new vertices, two new halves and e_n.
    auto apart = build_hn(cm, EdgeId{0}, EdgeId{5});
    CHECK(apart.h_n.vertex_count() == 6);
    CHECK(apart.h_n.edge_count() == 9);
    CHECK(oracle::edge_connectivity(apart.h_n) >= 3);
    REQUIRE(apart.subdivision.has_value());
    const auto& en = apart.h_n.endpoints(apart.e_n);
    CHECK(en.touches(apart.subdivision->w1));
    CHECK(en.touches(apart.subdivision->w2));

    auto adjacent = build_hn(cm, EdgeId{0}, EdgeId{1});
    CHECK(adjacent.h_n.vertex_count() == 6);
    CHECK(adjacent.h_n.edge_count() == 9);
    CHECK(oracle::edge_connectivity(adjacent.h_n) >= 3);
    REQUIRE(adjacent.subdivision.has_value());
    CHECK(adjacent.h_n.endpoints(adjacent.e_n).touches(adjacent.subdivision->w1));
    CHECK(adjacent.h_n.endpoints(adjacent.e_n).touches(adjacent.subdivision->w2));
}

TEST_CASE("picking z") {
    auto h = mg(6, {{0, 1}, {2, 3}, {4, 5}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 4}, {3, 5}});
    auto cm = core(h);
    std::vector<EdgeId> disjoint{EdgeId{0}, EdgeId{1}, EdgeId{2}};
    CHECK(pick_z(cm, disjoint).size() == 6);
    std::vector<EdgeId> sharing{EdgeId{0}, EdgeId{3}, EdgeId{4}};
    CHECK(pick_z(cm, sharing).size() < 6);

    auto kp = core(testing::k4_with_pendants());
    std::vector<EdgeId> pendant{EdgeId{6}};
    auto z = pick_z(kp, pendant);
    const auto& sub = kp.core.endpoints(project_edge(kp, EdgeId{6}));
    CHECK(z.size() == 2);
    CHECK(std::find(z.begin(), z.end(), sub.u) != z.end());
    CHECK(std::find(z.begin(), z.end(), sub.v) != z.end());
}

TEST_CASE("pipeline IDTs") {
    SUBCASE("adjacent surviving edges of K4") {
        auto g = line_graph(testing::complete(4).as_multigraph()).target;
        DominatingSet d{testing::vids({0, 5})};
        auto run = run_pipeline(g, VertexId{0}, VertexId{1}, d);
        REQUIRE(run.idt.has_value());
        CHECK(is_valid_idt(run.context->h, *run.idt));
    }
    SUBCASE("pendant terminal edges") {
        auto g = line_graph(testing::k4_with_pendants()).target;
        auto d = *has_dominating_set(g, 4);
        auto run = run_pipeline(g, VertexId{6}, VertexId{9}, d);
        REQUIRE(run.idt.has_value());
        CHECK(is_valid_idt(run.context->h, *run.idt));
        CHECK(run.idt->trail.edges.front() == EdgeId{6});
        CHECK(run.idt->trail.edges.back() == EdgeId{9});
    }
    SUBCASE("terminal edge next to a suppressed vertex") {
        auto g = line_graph(subdivided_k4()).target;
        auto d = *has_dominating_set(g, 3);
        auto run = run_pipeline(g, VertexId{2}, VertexId{0}, d);
        REQUIRE(run.idt.has_value());
        CHECK(is_valid_idt(run.context->h, *run.idt));
        REQUIRE(run.path.has_value());
        CHECK(is_hamiltonian_path(g, *run.path, VertexId{2}, VertexId{0}));
    }
}

TEST_CASE("IDT to hamiltonian path") {
    auto p4 = line_graph(mg(4, {{0, 1}, {1, 2}, {2, 3}}));
    IdtWitness whole{{testing::vids({0, 1, 2, 3}), {EdgeId{0}, EdgeId{1}, EdgeId{2}}}, EdgeId{0}, EdgeId{2}};
    auto path = idt_to_ham_path(p4, whole);
    CHECK(path.vertices.size() == 3);
    CHECK(is_hamiltonian_path(p4.target, path, p4.vertex_of(EdgeId{0}), p4.vertex_of(EdgeId{2})));

    // Triangle u v w with pendant ux; the trail x u w v leaves uv off the
    // trail and it is inserted at the interior vertex u.
    auto tri = line_graph(mg(4, {{0, 1}, {1, 2}, {2, 0}, {0, 3}}));
    IdtWitness w{{testing::vids({3, 0, 2, 1}), {EdgeId{3}, EdgeId{2}, EdgeId{1}}}, EdgeId{3}, EdgeId{1}};
    REQUIRE(is_valid_idt(tri.source, w));
    auto tp = idt_to_ham_path(tri, w);
    CHECK(tp.vertices.size() == 4);
    CHECK(is_hamiltonian_path(tri.target, tp, tri.vertex_of(EdgeId{3}), tri.vertex_of(EdgeId{1})));
    auto at = std::find(tp.vertices.begin(), tp.vertices.end(), tri.vertex_of(EdgeId{0}));
    REQUIRE(at != tp.vertices.end());
    CHECK(at != tp.vertices.begin());
    CHECK(at + 1 != tp.vertices.end());
}

TEST_CASE("pipeline on fixed inputs") {
    auto oct = line_graph(testing::complete(4).as_multigraph()).target;
    check_every_pair(oct, *has_dominating_set(oct, 2));
    auto kp = line_graph(testing::k4_with_pendants()).target;
    check_every_pair(kp, *has_dominating_set(kp, domination_number(kp)));

    auto claw = testing::star(3);
    DominatingSet centre{testing::vids({0})};
    auto run = run_pipeline(claw, VertexId{1}, VertexId{2}, centre);
    REQUIRE(run.failure.has_value());
    CHECK(run.failure->stage == PipelineStage::Preimage);
    CHECK(run.failure->kind == ErrorKind::NotALineGraphOfMultigraph);
    CHECK_FALSE(run.path.has_value());

    CHECK_THROWS_AS(run_pipeline(oct, VertexId{1}, VertexId{1}, centre), Error);
    DominatingSet weak{testing::vids({0})};
    CHECK_THROWS_AS(run_pipeline(oct, VertexId{1}, VertexId{2}, weak), Error);
}

}

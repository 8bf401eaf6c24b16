#include <algorithm>
#include <functional>
#include <variant>
#include <vector>

#include "doctest.h"
#include "hamcon/core.hpp"
#include "hamcon/corpus.hpp"
#include "hamcon/error.hpp"
#include "hamcon/invariants.hpp"
#include "hamcon/trails.hpp"
#include "helpers.hpp"
#include "oracles.hpp"

using namespace hamcon;
using testing::mg;

namespace {

// K4 on 0..3 with edge 0-1 split by vertex 4.
Multigraph subdivided_k4() { return mg(5, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}}); }

ErrorKind kind_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected throw");
    return ErrorKind::InvalidArgument;
}

bool same_core(const CoreMap& a, const CoreMap& b) {
    if (a.core.edge_count() != b.core.edge_count() || a.core.vertex_count() != b.core.vertex_count() ||
        a.removed_pendants != b.removed_pendants) {
        return false;
    }
    // Compare as sets of H-paths, with core vertices identified by origin.
    for (int e = 0; e < a.core.edge_count(); ++e) {
        auto ea = a.edge_expansion[static_cast<std::size_t>(e)].edges;
        auto eb = b.edge_expansion[static_cast<std::size_t>(e)].edges;
        auto rb = eb;
        std::reverse(rb.begin(), rb.end());
        if (ea != eb && ea != rb) {
            return false;
        }
    }
    for (int v = 0; v < a.original.vertex_count(); ++v) {
        auto ia = a.vertex_image[static_cast<std::size_t>(v)];
        auto ib = b.vertex_image[static_cast<std::size_t>(v)];
        if (ia.has_value() != ib.has_value()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_SUITE("core") {

TEST_CASE("pendants are stripped") {
    auto h = testing::k4_with_pendants();
    auto cm = core(h);
    CHECK(isomorphic(cm.core, testing::complete(4).as_multigraph()));
    CHECK(cm.removed_pendants.size() == 4);
    for (int e = 6; e < 10; ++e) {
        CHECK_FALSE(cm.owning_core_edge[static_cast<std::size_t>(e)].has_value());
    }
    for (int v = 4; v < 8; ++v) {
        CHECK_FALSE(cm.vertex_image[static_cast<std::size_t>(v)].has_value());
    }
}

TEST_CASE("degree two vertices are suppressed") {
    auto h = subdivided_k4();
    auto cm = core(h);
    CHECK(isomorphic(cm.core, testing::complete(4).as_multigraph()));
    CHECK(cm.removed_pendants.empty());
    auto owner = cm.owning_core_edge[0];
    REQUIRE(owner.has_value());
    CHECK(cm.owning_core_edge[1] == owner);
    const auto& x = cm.edge_expansion[static_cast<std::size_t>(owner->index)];
    CHECK(x.edges.size() == 2);
    CHECK(x.vertices.size() == 3);
    CHECK(cm.suppressed_location[4] == owner);
    CHECK_FALSE(cm.vertex_image[4].has_value());
}

TEST_CASE("degenerate and rejected inputs") {
    CHECK(kind_of([] { core(testing::star(3).as_multigraph()); }) == ErrorKind::DegenerateCore);
    CHECK(kind_of([] { core(mg(4, {{0, 1}, {2, 3}})); }) == ErrorKind::Disconnected);
    auto c4p = mg(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
    CHECK(kind_of([&] { core(c4p); }) == ErrorKind::NotEssentially3EdgeConnected);
    // A triangle with pendants suppresses down to one vertex with a loop.
    auto tri = mg(6, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {1, 4}, {2, 5}});
    CoreOptions loose;
    loose.check_essential = false;
    CHECK(kind_of([&] { core(tri, loose); }) == ErrorKind::DegenerateCore);
}

TEST_CASE("lifting closed trails") {
    auto h = subdivided_k4();
    auto cm = core(h);
    auto owner = *cm.owning_core_edge[0];
    auto ct = find_closed_trail_through(cm.core, {}, owner);
    REQUIRE(ct.has_value());
    auto lifted = lift_closed_trail(cm, *ct);
    CHECK(is_valid_trail(h, lifted));
    CHECK(lifted.closed());
    CHECK(std::find(lifted.edges.begin(), lifted.edges.end(), EdgeId{0}) != lifted.edges.end());
    CHECK(std::find(lifted.edges.begin(), lifted.edges.end(), EdgeId{1}) != lifted.edges.end());
    CHECK(lifted.length() == ct->length() + 1);

    auto kp = core(testing::k4_with_pendants());
    auto span = find_spanning_closed_trail(kp.core);
    REQUIRE(span.has_value());
    auto lp = lift_closed_trail(kp, *span);
    CHECK(dominates_all_edges(kp.original, lp));

    auto trivial = lift_closed_trail(kp, Trail::at(VertexId{0}));
    CHECK(trivial.length() == 0);
    CHECK_FALSE(dominates_all_edges(kp.original, trivial));

    Trail open{testing::vids({0, 1}), {EdgeId{0}}};
    CHECK(kind_of([&] { lift_closed_trail(kp, open); }) == ErrorKind::InvalidTrail);
}

TEST_CASE("projecting vertices") {
    auto h = subdivided_k4();
    auto cm = core(h);
    auto at2 = project_vertex(cm, VertexId{2});
    REQUIRE(std::holds_alternative<CoreVertexLocation>(at2));
    auto at4 = project_vertex(cm, VertexId{4});
    REQUIRE(std::holds_alternative<CoreEdgeInterior>(at4));
    CHECK(std::get<CoreEdgeInterior>(at4).edge == *cm.owning_core_edge[0]);

    // Pendant hanging off the subdivision vertex: its support has non-pendant
    // degree 2 and lands inside a core edge.
    auto hp = mg(6, {{0, 4}, {4, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {4, 5}});
    CoreOptions loose;
    loose.check_essential = false;
    auto cp = core(hp, loose);
    CHECK(std::holds_alternative<CoreEdgeInterior>(project_vertex(cp, VertexId{4})));
    CHECK(kind_of([&] { project_vertex(cp, VertexId{5}); }) == ErrorKind::NoCoreLocation);
}

TEST_CASE("core properties on random essentially 3-edge-connected multigraphs") {
    Rng rng(31);
    int lifted = 0;
    for (int trial = 0; trial < 120; ++trial) {
        auto h = random_essentially_3_edge_connected(rng, 8, 4);
        CAPTURE(trial);
        CoreMap cm;
        try {
            cm = core(h);
        } catch (const Error& e) {
            CHECK(e.kind() == ErrorKind::DegenerateCore);
            continue;
        }
        if (cm.core.edge_count() <= 12) {
            CHECK(oracle::edge_connectivity(cm.core) >= 3);
        }
        for (std::uint64_t seed = 1; seed <= 4; ++seed) {
            CoreOptions opt;
            opt.shuffle_seed = seed;
            CHECK(same_core(cm, core(h, opt)));
        }
        // Every edge of H is either a removed pendant or on exactly one
        // expansion.
        std::vector<int> seen(static_cast<std::size_t>(h.edge_count()), 0);
        for (const auto& x : cm.edge_expansion) {
            for (auto e : x.edges) {
                ++seen[static_cast<std::size_t>(e.index)];
            }
        }
        for (auto e : cm.removed_pendants) {
            ++seen[static_cast<std::size_t>(e.index)];
        }
        CHECK(std::all_of(seen.begin(), seen.end(), [](int c) { return c == 1; }));

        auto span = find_spanning_closed_trail(cm.core);
        if (span && h.edge_count() <= 10) {
            CHECK(oracle::has_dct(h));
        }
        if (span) {
            auto t = lift_closed_trail(cm, *span);
            CHECK(is_valid_trail(h, t));
            CHECK(t.closed());
            CHECK(dominates_all_edges(h, t));
            ++lifted;
        }
    }
    CHECK(lifted > 0);
}

}

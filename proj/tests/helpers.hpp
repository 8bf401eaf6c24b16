#pragma once

#include <initializer_list>
#include <utility>
#include <vector>

#include "hamcon/multigraph.hpp"

namespace testing {

inline hamcon::Multigraph mg(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<int, int>> list(edges);
    return hamcon::Multigraph(n, list);
}

inline hamcon::SimpleGraph sg(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<std::pair<int, int>> list(edges);
    return hamcon::SimpleGraph(n, list);
}

inline hamcon::SimpleGraph cycle(int n) {
    std::vector<std::pair<int, int>> list;
    for (int i = 0; i < n; ++i) {
        list.emplace_back(i, (i + 1) % n);
    }
    return hamcon::SimpleGraph(n, list);
}

inline hamcon::SimpleGraph complete(int n) {
    std::vector<std::pair<int, int>> list;
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            list.emplace_back(i, j);
        }
    }
    return hamcon::SimpleGraph(n, list);
}

inline hamcon::SimpleGraph star(int leaves) {
    std::vector<std::pair<int, int>> list;
    for (int i = 1; i <= leaves; ++i) {
        list.emplace_back(0, i);
    }
    return hamcon::SimpleGraph(leaves + 1, list);
}

// K4 on 0..3 with one pendant leaf 4+i at each vertex i.
inline hamcon::Multigraph k4_with_pendants() {
    return mg(8, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}, {0, 4}, {1, 5}, {2, 6}, {3, 7}});
}

inline std::vector<hamcon::VertexId> vids(std::initializer_list<int> xs) {
    std::vector<hamcon::VertexId> out;
    for (int x : xs) {
        out.push_back(hamcon::VertexId{x});
    }
    return out;
}

}  // namespace testing

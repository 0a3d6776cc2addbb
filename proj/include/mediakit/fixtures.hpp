#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mediakit/graph.hpp"
#include "mediakit/token_system.hpp"

// The canonical corpus used across tests and shipped under fixtures/.
namespace mediakit::fixtures {

Graph k2();
Graph p3();
Graph k13();     // star with 3 leaves
Graph c4();
Graph c5();
Graph c6();
Graph c8();
Graph k23();     // complete bipartite 2 x 3
Graph q3();      // 3-cube on subset-named vertices {}, {1}, ..., {123}
Graph q4();
Graph tree15();  // complete binary tree on 15 vertices

inline constexpr unsigned kPartialCubeSeed = 2024;

// Seeded greedy deletion from q4: remove random vertices while the largest
// remaining component stays isometric in the hypercube metric; stops at
// `target` vertices.
Graph random_partial_cube(unsigned seed, int target = 10);
Graph pc10();  // random_partial_cube at the frozen default seed

// Hand-built media (states in subset notation, tokens addK / removeK).
TokenSystem k2_medium();
TokenSystem q3_medium();

// Named graph corpus; `mediatic_only` drops c5, k23 and other non-mediatic entries.
std::vector<std::pair<std::string, Graph>> graph_corpus(bool mediatic_only = false);

}  // namespace mediakit::fixtures

#pragma once

#include <string>
#include <vector>

#include "mediakit/graph.hpp"
#include "mediakit/token_system.hpp"

namespace mediakit {

// Whether medium_to_graph verifies its input first. Skip exists so that
// diagnostic callers (and check_medium itself) can inspect the adjacency
// graph of a system that is not a medium.
enum class MediumCheck { Require, Skip };

// The graph of a medium: one vertex per state, one edge per adjacent pair.
Graph medium_to_graph(const TokenSystem& sys, MediumCheck check = MediumCheck::Require);

// The medium induced by a mediatic graph: one token per likeness class,
// canonical ids "t<k>" with k the class position under the least-arc order.
// Throws NotMediaticError when the graph fails one of the three conditions.
TokenSystem graph_to_medium(const Graph& g);

struct NotMediaticError;  // defined in medium.hpp (carries the report)

struct RoundTripReport {
    bool ok = false;
    std::vector<std::string> diffs;  // human-readable mismatches, deterministic order
};

// graph -> induced medium -> graph: exact vertex/edge equality.
RoundTripReport verify_round_trip(const Graph& g);

// medium -> graph -> induced medium: same states, action-preserving token bijection.
RoundTripReport verify_round_trip(const TokenSystem& sys);

// A shortest-path witness message between two distinct states of a medium,
// deterministic via BFS with lexicographic tie-breaks.
Message concise_message(const TokenSystem& sys, const std::string& from, const std::string& to);

}  // namespace mediakit

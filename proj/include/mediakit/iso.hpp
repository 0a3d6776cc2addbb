#pragma once

#include <map>
#include <optional>
#include <string>

#include "mediakit/graph.hpp"
#include "mediakit/token_system.hpp"

namespace mediakit {

// A vertex bijection preserving adjacency in both directions.
struct GraphIso {
    std::map<std::string, std::string> phi;
};

// A state bijection alpha and token bijection beta with
// S tau = V  iff  alpha(S) beta(tau) = alpha(V) for all S, V, tau.
struct MediaIso {
    std::map<std::string, std::string> alpha;
    std::map<std::string, std::string> beta;
};

// Exhaustive-search limits. The backtracking solver is desk-scale only.
struct IsoOptions {
    int max_vertices = 12;
};

// Deterministic backtracking search: vertices of g are assigned in index
// order, candidates tried in ascending order, pruned by degree and
// distance-profile compatibility; the first (hence lexicographically
// smallest) certified isomorphism is returned. Count mismatches return
// absence without searching; otherwise graphs larger than
// opts.max_vertices are rejected with an input error.
std::optional<GraphIso> find_graph_iso(const Graph& g, const Graph& h,
                                       const IsoOptions& opts = {});

// Lifts a graph isomorphism between the graphs of two media to a media
// isomorphism: beta(tau) is the unique token of m2 acting on one probed
// arc image, then the pair (phi, beta) is verified on every (state, token)
// combination. Verification failure after valid inputs is an internal
// error (the lift theorem guarantees success).
MediaIso lift_to_media_iso(const GraphIso& phi, const TokenSystem& m, const TokenSystem& m2);

// Media are isomorphic exactly when their graphs are: composes
// medium_to_graph, find_graph_iso and lift_to_media_iso.
std::optional<MediaIso> media_isomorphic(const TokenSystem& m, const TokenSystem& m2,
                                         const IsoOptions& opts = {});

}  // namespace mediakit

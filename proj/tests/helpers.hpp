#pragma once

// Small helpers shared by the unit suites and the acceptance battery.

#include <algorithm>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "mediakit/graph.hpp"
#include "mediakit/iso.hpp"
#include "mediakit/token_system.hpp"

namespace testkit {

// Fresh names "r00", "r01", ... shuffled, so the relabeled object's
// lexicographic order is unrelated to the original one.
inline std::map<std::string, std::string> random_renaming(
    const std::vector<std::string>& names, std::mt19937& rng) {
    std::vector<std::string> pool;
    for (size_t i = 0; i < names.size(); ++i) {
        std::string s = std::to_string(i);
        pool.push_back("r" + std::string(2 - std::min<size_t>(2, s.size()), '0') + s);
    }
    std::shuffle(pool.begin(), pool.end(), rng);
    std::map<std::string, std::string> out;
    for (size_t i = 0; i < names.size(); ++i) out[names[i]] = pool[i];
    return out;
}

inline mediakit::Graph relabel_graph(const mediakit::Graph& g, std::mt19937& rng) {
    auto ren = random_renaming(g.vertices(), rng);
    std::vector<std::string> verts;
    for (const auto& v : g.vertices()) verts.push_back(ren[v]);
    std::vector<std::pair<std::string, std::string>> edges;
    for (auto [u, v] : g.edges())
        edges.emplace_back(ren[g.vertex_name(u)], ren[g.vertex_name(v)]);
    return mediakit::Graph(std::move(verts), std::move(edges));
}

// Renames both states and tokens with shuffled fresh names.
inline mediakit::TokenSystem relabel_medium(const mediakit::TokenSystem& sys,
                                            std::mt19937& rng) {
    auto sren = random_renaming(sys.states(), rng);
    std::vector<std::string> tok_names;
    for (int t = 0; t < sys.token_count(); ++t) tok_names.push_back(sys.token_id(t));
    auto tren = random_renaming(tok_names, rng);

    std::vector<std::string> states;
    for (const auto& s : sys.states()) states.push_back(sren[s]);
    std::vector<mediakit::TokenSpec> tokens;
    for (int t = 0; t < sys.token_count(); ++t) {
        mediakit::TokenSpec spec{tren[sys.token_id(t)], {}};
        for (auto [a, b] : sys.moves(t))
            spec.moves.emplace_back(sren[sys.state_name(a)], sren[sys.state_name(b)]);
        tokens.push_back(std::move(spec));
    }
    return mediakit::TokenSystem(std::move(states), std::move(tokens));
}

// Lifts a circuit (vertex names of the medium's graph) to the message that
// walks it, using the unique token on each arc including the closing one.
inline mediakit::Message circuit_message(const mediakit::TokenSystem& sys,
                                         const std::vector<std::string>& circuit) {
    mediakit::Message msg;
    for (size_t i = 0; i < circuit.size(); ++i) {
        int from = sys.state_index(circuit[i]);
        int to = sys.state_index(circuit[(i + 1) % circuit.size()]);
        int found = -1;
        for (auto [tok, target] : sys.moved_from(from))
            if (target == to) {
                if (found >= 0) throw std::runtime_error("arc served by two tokens");
                found = tok;
            }
        if (found < 0) throw std::runtime_error("arc without a token");
        msg.push_back(sys.token_id(found));
    }
    return msg;
}

inline bool verify_graph_iso(const mediakit::Graph& g, const mediakit::Graph& h,
                             const mediakit::GraphIso& iso) {
    if (iso.phi.size() != g.vertices().size()) return false;
    std::map<std::string, int> hits;  // surjectivity onto h's vertices
    for (const auto& [a, b] : iso.phi) {
        (void)a;
        if (++hits[b] > 1) return false;
    }
    for (const auto& v : h.vertices())
        if (!hits.count(v)) return false;
    for (int u = 0; u < g.vertex_count(); ++u)
        for (int v = u + 1; v < g.vertex_count(); ++v) {
            bool e1 = g.has_edge(u, v);
            bool e2 = h.has_edge(h.vertex_index(iso.phi.at(g.vertex_name(u))),
                                 h.vertex_index(iso.phi.at(g.vertex_name(v))));
            if (e1 != e2) return false;
        }
    return true;
}

// The defining equation of a media isomorphism, checked on every
// (state, token) pair of the first system.
inline bool verify_media_iso(const mediakit::TokenSystem& a, const mediakit::TokenSystem& b,
                             const mediakit::MediaIso& iso) {
    if (iso.alpha.size() != a.states().size()) return false;
    if (iso.beta.size() != static_cast<size_t>(a.token_count())) return false;
    for (int s = 0; s < a.state_count(); ++s)
        for (int t = 0; t < a.token_count(); ++t) {
            int img_s = b.state_index(iso.alpha.at(a.state_name(s)));
            int img_t = b.token_index(iso.beta.at(a.token_id(t)));
            int lhs = b.state_index(iso.alpha.at(a.state_name(a.apply_token(t, s))));
            if (b.apply_token(img_t, img_s) != lhs) return false;
        }
    return true;
}

}  // namespace testkit

#include "mediakit/iso.hpp"

#include <algorithm>
#include <vector>

#include "mediakit/convert.hpp"
#include "mediakit/errors.hpp"
#include "mediakit/medium.hpp"

namespace mediakit {

namespace {

// Sorted multiset of distances from v to every vertex (unreachable last).
std::vector<int> distance_profile(const Graph& g, int v) {
    std::vector<int> out;
    for (int u = 0; u < g.vertex_count(); ++u)
        if (u != v) out.push_back(g.distances().at(v, u));
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::optional<GraphIso> find_graph_iso(const Graph& g, const Graph& h, const IsoOptions& opts) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return std::nullopt;
    if (n > opts.max_vertices)
        throw InputError("graphs exceed the isomorphism search cap of " +
                         std::to_string(opts.max_vertices) + " vertices");

    std::vector<std::vector<int>> pg(n), ph(n);
    for (int v = 0; v < n; ++v) {
        pg[v] = distance_profile(g, v);
        ph[v] = distance_profile(h, v);
    }
    {
        auto sg = pg, sh = ph;
        std::sort(sg.begin(), sg.end());
        std::sort(sh.begin(), sh.end());
        if (sg != sh) return std::nullopt;
    }

    std::vector<int> map_to(n, -1);   // g vertex -> h vertex
    std::vector<char> used(n, 0);
    auto extend = [&](auto&& self, int v) -> bool {
        if (v == n) return true;
        for (int w = 0; w < n; ++w) {
            if (used[w] || pg[v] != ph[w]) continue;
            bool ok = true;
            for (int u = 0; u < v && ok; ++u)
                if (g.distances().at(v, u) != h.distances().at(w, map_to[u])) ok = false;
            if (!ok) continue;
            map_to[v] = w;
            used[w] = 1;
            if (self(self, v + 1)) return true;
            map_to[v] = -1;
            used[w] = 0;
        }
        return false;
    };
    if (!extend(extend, 0)) return std::nullopt;

    // Certify: adjacency must be preserved in both directions.
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.has_edge(a, b) != h.has_edge(map_to[a], map_to[b]))
                throw InternalError("isomorphism candidate failed certification");

    GraphIso iso;
    for (int v = 0; v < n; ++v) iso.phi[g.vertex_name(v)] = h.vertex_name(map_to[v]);
    return iso;
}

MediaIso lift_to_media_iso(const GraphIso& phi, const TokenSystem& m, const TokenSystem& m2) {
    if (!check_medium(m).is_medium || !check_medium(m2).is_medium)
        throw PreconditionError("lift_to_media_iso requires two media");

    Graph g = medium_to_graph(m, MediumCheck::Skip);
    Graph h = medium_to_graph(m2, MediumCheck::Skip);
    if (static_cast<int>(phi.phi.size()) != g.vertex_count())
        throw PreconditionError("phi does not cover the state set");

    // phi as an index map, verified to be an adjacency-preserving bijection.
    std::vector<int> to_h(g.vertex_count(), -1);
    std::vector<char> hit(h.vertex_count(), 0);
    for (const auto& [a, b] : phi.phi) {
        int ia = g.vertex_index(a);
        int ib = h.vertex_index(b);
        if (hit[ib]) throw PreconditionError("phi maps two states to " + b);
        hit[ib] = 1;
        to_h[ia] = ib;
    }
    for (int a = 0; a < g.vertex_count(); ++a)
        for (int b = a + 1; b < g.vertex_count(); ++b)
            if (g.has_edge(a, b) != h.has_edge(to_h[a], to_h[b]))
                throw PreconditionError("phi is not an isomorphism of the media's graphs");

    // beta by probing one arc of each token; uniqueness holds in a medium.
    MediaIso out;
    for (const auto& [a, b] : phi.phi) out.alpha.emplace(a, b);
    std::vector<int> beta(m.token_count(), -1);
    std::vector<char> beta_hit(m2.token_count(), 0);
    for (int t = 0; t < m.token_count(); ++t) {
        const auto& [src, dst] = m.moves(t)[0];
        int src2 = to_h[src];
        int dst2 = to_h[dst];
        int found = -1;
        for (const auto& [tok2, next2] : m2.moved_from(src2))
            if (next2 == dst2) {
                if (found >= 0) throw InternalError("two tokens share an arc in a medium");
                found = tok2;
            }
        if (found < 0 || beta_hit[found])
            throw InternalError("token lift found no fresh counterpart");
        beta_hit[found] = 1;
        beta[t] = found;
        out.beta.emplace(m.token_id(t), m2.token_id(found));
    }
    if (m.token_count() != m2.token_count())
        throw InternalError("token counts differ between isomorphic media");

    // Full verification of the paired-isomorphism equation.
    for (int s = 0; s < m.state_count(); ++s)
        for (int t = 0; t < m.token_count(); ++t) {
            int v = m.apply_token(t, s);
            int lhs = m2.apply_token(beta[t], to_h[s]);
            if (lhs != to_h[v])
                throw InternalError("lifted pair violates the isomorphism equation");
        }
    return out;
}

std::optional<MediaIso> media_isomorphic(const TokenSystem& m, const TokenSystem& m2,
                                         const IsoOptions& opts) {
    if (!check_medium(m).is_medium || !check_medium(m2).is_medium)
        throw PreconditionError("media_isomorphic requires two media");
    Graph g = medium_to_graph(m, MediumCheck::Skip);
    Graph h = medium_to_graph(m2, MediumCheck::Skip);
    std::optional<GraphIso> phi = find_graph_iso(g, h, opts);
    if (!phi) return std::nullopt;
    return lift_to_media_iso(*phi, m, m2);
}

}  // namespace mediakit

#include "mediakit/convert.hpp"

#include <algorithm>
#include <map>
#include <queue>
#include <set>

#include "mediakit/errors.hpp"
#include "mediakit/medium.hpp"

namespace mediakit {

Graph medium_to_graph(const TokenSystem& sys, MediumCheck check) {
    if (check == MediumCheck::Require && !check_medium(sys).is_medium)
        throw PreconditionError("medium_to_graph requires a medium; "
                                "run check-medium for a diagnosis");
    std::set<std::pair<std::string, std::string>> edges;
    for (int t = 0; t < sys.token_count(); ++t)
        for (const auto& [a, b] : sys.moves(t)) {
            const std::string& u = sys.state_name(a);
            const std::string& v = sys.state_name(b);
            edges.insert({std::min(u, v), std::max(u, v)});
        }
    return Graph(sys.states(), {edges.begin(), edges.end()});
}

TokenSystem graph_to_medium(const Graph& g) {
    MediaticReport rep = is_mediatic(g);
    if (!rep.mediatic)
        throw NotMediaticError("graph_to_medium requires a mediatic graph", std::move(rep));

    LikePartitionResult partition_result = like_partition(g);
    const LikePartition& part = *partition_result.partition;
    std::vector<TokenSpec> tokens;
    for (std::size_t k = 0; k < part.classes.size(); ++k) {
        TokenSpec spec;
        spec.id = "t" + std::to_string(k);
        std::set<std::string> sources, targets;
        for (const Arc& a : part.classes[k]) {
            spec.moves.emplace_back(a.source, a.target);
            if (!sources.insert(a.source).second || !targets.insert(a.target).second)
                throw InternalError("likeness class of a mediatic graph repeats a source "
                                    "or target");
        }
        std::sort(spec.moves.begin(), spec.moves.end());
        tokens.push_back(std::move(spec));
    }

    TokenSystem sys(g.vertices(), tokens);
    for (int t = 0; t < sys.token_count(); ++t)
        if (sys.reverse_index(t) < 0)
            throw InternalError("induced token of a mediatic graph lacks a reverse");
    return sys;
}

RoundTripReport verify_round_trip(const Graph& g) {
    MediaticReport rep = is_mediatic(g);
    if (!rep.mediatic)
        throw NotMediaticError("round trip requires a mediatic graph", std::move(rep));

    TokenSystem m = graph_to_medium(g);
    Graph back = medium_to_graph(m, MediumCheck::Skip);

    RoundTripReport out;
    if (g.vertices() != back.vertices())
        out.diffs.push_back("vertex sets differ after the round trip");
    auto name_edges = [](const Graph& gr) {
        std::vector<std::pair<std::string, std::string>> e;
        for (const auto& [i, j] : gr.edges()) e.emplace_back(gr.vertex_name(i), gr.vertex_name(j));
        std::sort(e.begin(), e.end());
        return e;
    };
    auto e1 = name_edges(g), e2 = name_edges(back);
    for (const auto& e : e1)
        if (!std::binary_search(e2.begin(), e2.end(), e))
            out.diffs.push_back("edge " + e.first + " -- " + e.second + " lost in round trip");
    for (const auto& e : e2)
        if (!std::binary_search(e1.begin(), e1.end(), e))
            out.diffs.push_back("edge " + e.first + " -- " + e.second + " gained in round trip");
    out.ok = out.diffs.empty();
    return out;
}

RoundTripReport verify_round_trip(const TokenSystem& sys) {
    if (!check_medium(sys).is_medium)
        throw PreconditionError("round trip requires a medium; run check-medium for a diagnosis");

    Graph g = medium_to_graph(sys, MediumCheck::Skip);
    TokenSystem back = graph_to_medium(g);

    RoundTripReport out;
    if (sys.states() != back.states())
        out.diffs.push_back("state sets differ after the round trip");

    using Action = std::vector<std::pair<std::string, std::string>>;
    auto actions = [](const TokenSystem& s) {
        std::map<Action, std::string> m;
        for (int t = 0; t < s.token_count(); ++t) {
            Action a;
            for (const auto& [x, y] : s.moves(t)) a.emplace_back(s.state_name(x), s.state_name(y));
            m.emplace(std::move(a), s.token_id(t));
        }
        return m;
    };
    std::map<Action, std::string> orig = actions(sys), induced = actions(back);
    for (const auto& [action, id] : orig)
        if (!induced.count(action))
            out.diffs.push_back("token " + id + " has no induced counterpart");
    for (const auto& [action, id] : induced)
        if (!orig.count(action))
            out.diffs.push_back("induced token " + id + " matches no original token");
    out.ok = out.diffs.empty();
    return out;
}

Message concise_message(const TokenSystem& sys, const std::string& from, const std::string& to) {
    int s = sys.state_index(from);
    int t = sys.state_index(to);
    if (s == t) throw InputError("concise_message needs two distinct states");

    int n = sys.state_count();
    // Neighbours in state-index order, so ties break lexicographically.
    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) {
        std::set<int> next;
        for (const auto& [tok, w] : sys.moved_from(v)) next.insert(w);
        adj[v].assign(next.begin(), next.end());
    }

    std::vector<int> parent(n, -1);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    seen[s] = 1;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                q.push(w);
            }
    }
    if (!seen[t])
        throw PreconditionError("states are not connected by any message; not a medium");

    std::vector<int> path{t};
    for (int v = t; v != s; v = parent[v]) path.push_back(parent[v]);
    std::reverse(path.begin(), path.end());

    Message out;
    for (std::size_t i = 0; i + 1 < path.size(); ++i) {
        int found = -1, count = 0;
        for (const auto& [tok, w] : sys.moved_from(path[i]))
            if (w == path[i + 1]) {
                found = tok;
                ++count;
            }
        if (count != 1)
            throw PreconditionError("adjacent states are not joined by exactly one token; "
                                    "not a medium");
        out.push_back(sys.token_id(found));
    }
    return out;
}

}  // namespace mediakit

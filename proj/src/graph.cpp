#include "mediakit/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "mediakit/errors.hpp"

namespace mediakit {

namespace {

std::string quoted(const std::string& s) { return "\"" + s + "\""; }

// Plain union-find, path compression + union by size.
struct DisjointSet {
    std::vector<int> parent, size;
    explicit DisjointSet(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) { parent[x] = parent[parent[x]]; x = parent[x]; }
        return x;
    }
    void unite(int a, int b) {
        a = find(a); b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

}  // namespace

Graph::Graph(std::vector<std::string> vertices,
             std::vector<std::pair<std::string, std::string>> edges) {
    if (vertices.size() < 2) throw InputError("graph needs at least 2 vertices");
    std::sort(vertices.begin(), vertices.end());
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        if (vertices[i].empty()) throw InputError("vertex names must be nonempty");
        if (i > 0 && vertices[i] == vertices[i - 1])
            throw InputError("duplicate vertex name " + quoted(vertices[i]));
    }
    vertices_ = std::move(vertices);

    std::vector<std::pair<int, int>> idx_edges;
    for (const auto& [a, b] : edges) {
        int u = vertex_index(a);
        int v = vertex_index(b);
        if (u == v) throw InputError("loop edge at " + quoted(a));
        if (u > v) std::swap(u, v);
        idx_edges.emplace_back(u, v);
    }
    std::sort(idx_edges.begin(), idx_edges.end());
    for (std::size_t i = 1; i < idx_edges.size(); ++i)
        if (idx_edges[i] == idx_edges[i - 1])
            throw InputError("duplicate edge " + quoted(vertices_[idx_edges[i].first]) + " - " +
                             quoted(vertices_[idx_edges[i].second]));
    edges_ = std::move(idx_edges);

    adj_.resize(vertex_count());
    for (const auto& [u, v] : edges_) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& lst : adj_) std::sort(lst.begin(), lst.end());

    for (int v = 0; v < vertex_count(); ++v)
        for (int w : adj_[v]) arcs_.emplace_back(v, w);
    // arcs_ is sorted already: outer loop ascending, adjacency lists sorted.

    dist_.d.assign(vertex_count(), std::vector<int>(vertex_count(), DistanceTable::kInf));
    for (int s = 0; s < vertex_count(); ++s) {
        auto& row = dist_.d[s];
        row[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : adj_[u])
                if (row[w] == DistanceTable::kInf) {
                    row[w] = row[u] + 1;
                    queue.push_back(w);
                }
        }
    }
}

int Graph::vertex_index(const std::string& name) const {
    auto it = std::lower_bound(vertices_.begin(), vertices_.end(), name);
    if (it == vertices_.end() || *it != name) throw InputError("unknown vertex " + quoted(name));
    return static_cast<int>(it - vertices_.begin());
}

bool Graph::has_edge(int u, int v) const {
    const auto& lst = adj_[u];
    return std::binary_search(lst.begin(), lst.end(), v);
}

int Graph::distance(const std::string& u, const std::string& v) const {
    return dist_.at(vertex_index(u), vertex_index(v));
}

int Graph::arc_index(int from, int to) const {
    auto it = std::lower_bound(arcs_.begin(), arcs_.end(), std::make_pair(from, to));
    if (it == arcs_.end() || *it != std::make_pair(from, to))
        throw InputError("not an arc: " + quoted(vertices_[from]) + " -> " + quoted(vertices_[to]));
    return static_cast<int>(it - arcs_.begin());
}

ConnectivityReport is_connected(const Graph& g) {
    ConnectivityReport rep;
    const auto& d = g.distances();
    for (int v = 1; v < g.vertex_count(); ++v)
        if (!DistanceTable::finite(d.at(0, v))) {
            rep.connected = false;
            rep.witness = {g.vertex_name(0), g.vertex_name(v)};
            return rep;
        }
    rep.connected = true;
    return rep;
}

BipartiteReport is_bipartite(const Graph& g) {
    BipartiteReport rep;
    int n = g.vertex_count();
    std::vector<int> color(n, -1), parent(n, -1), depth(n, 0);
    for (int root = 0; root < n; ++root) {
        if (color[root] != -1) continue;
        color[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (int w : g.neighbors(u)) {
                if (color[w] == -1) {
                    color[w] = 1 - color[u];
                    parent[w] = u;
                    depth[w] = depth[u] + 1;
                    queue.push_back(w);
                } else if (color[w] == color[u]) {
                    // Walk both BFS-tree paths up to the nearest common
                    // ancestor: the two legs plus the clash edge form a
                    // simple odd cycle.
                    std::vector<int> left{u}, right{w};
                    int x = u, y = w;
                    while (depth[x] > depth[y]) { x = parent[x]; left.push_back(x); }
                    while (depth[y] > depth[x]) { y = parent[y]; right.push_back(y); }
                    while (x != y) {
                        x = parent[x]; left.push_back(x);
                        y = parent[y]; right.push_back(y);
                    }
                    std::vector<std::string> cycle;
                    for (int v : left) cycle.push_back(g.vertex_name(v));
                    for (auto it = right.rbegin() + 1; it != right.rend(); ++it)
                        cycle.push_back(g.vertex_name(*it));
                    rep.bipartite = false;
                    rep.odd_cycle = std::move(cycle);
                    return rep;
                }
            }
        }
    }
    rep.bipartite = true;
    return rep;
}

namespace {

// Likeness at index level; infinite distances never relate.
bool like_idx(const DistanceTable& d, std::pair<int, int> a, std::pair<int, int> b) {
    int sp = d.at(a.first, b.first);
    int tq = d.at(a.second, b.second);
    int sq = d.at(a.first, b.second);
    int tp = d.at(a.second, b.first);
    if (!DistanceTable::finite(sp) || !DistanceTable::finite(tq) ||
        !DistanceTable::finite(sq) || !DistanceTable::finite(tp))
        return false;
    return sp + 1 == sq && tq + 1 == sq && tp == sq;
}

Arc arc_of(const Graph& g, std::pair<int, int> a) {
    return Arc{g.vertex_name(a.first), g.vertex_name(a.second)};
}

struct LikeScan {
    bool transitive = true;
    std::vector<int> class_of_arc;           // canonical class ids when transitive
    std::array<Arc, 3> witness;              // least violating triple otherwise
};

LikeScan scan_likeness(const Graph& g) {
    const auto& arcs = g.arcs();
    const auto& d = g.distances();
    int m = static_cast<int>(arcs.size());

    std::vector<std::vector<char>> rel(m, std::vector<char>(m, 0));
    DisjointSet ds(m);
    for (int i = 0; i < m; ++i) {
        rel[i][i] = 1;
        for (int j = i + 1; j < m; ++j)
            if (like_idx(d, arcs[i], arcs[j])) {
                rel[i][j] = rel[j][i] = 1;
                ds.unite(i, j);
            }
    }

    LikeScan out;
    for (int i = 0; i < m && out.transitive; ++i)
        for (int j = i + 1; j < m; ++j)
            if (ds.find(i) == ds.find(j) && !rel[i][j]) { out.transitive = false; break; }

    if (!out.transitive) {
        // Least triple a < b < ... in arc order with aLb, bLc, not aLc.
        for (int a = 0; a < m; ++a)
            for (int b = 0; b < m; ++b)
                for (int c = 0; c < m; ++c)
                    if (rel[a][b] && rel[b][c] && !rel[a][c]) {
                        out.witness = {arc_of(g, arcs[a]), arc_of(g, arcs[b]),
                                       arc_of(g, arcs[c])};
                        return out;
                    }
        // unreachable: non-transitivity always exhibits a triple
        throw InternalError("likeness marked non-transitive but no witness triple found");
    }

    // Canonical ids: classes ordered by least member arc = first arc index seen.
    out.class_of_arc.assign(m, -1);
    int next = 0;
    for (int i = 0; i < m; ++i) {
        int root = ds.find(i);
        if (out.class_of_arc[root] == -1) out.class_of_arc[root] = next++;
        out.class_of_arc[i] = out.class_of_arc[root];
    }
    return out;
}

}  // namespace

bool like_related(const Graph& g, const Arc& a, const Arc& b) {
    if (!is_connected(g).connected)
        throw PreconditionError("like_related requires a connected graph");
    auto resolve = [&](const Arc& x) {
        std::pair<int, int> p{g.vertex_index(x.source), g.vertex_index(x.target)};
        g.arc_index(p.first, p.second);  // validates adjacency
        return p;
    };
    return like_idx(g.distances(), resolve(a), resolve(b));
}

LikePartitionResult like_partition(const Graph& g) {
    if (!is_connected(g).connected)
        throw PreconditionError("like_partition requires a connected graph");
    if (!is_bipartite(g).bipartite)
        throw PreconditionError("like_partition requires a bipartite graph");

    LikeScan scan = scan_likeness(g);
    LikePartitionResult res;
    if (!scan.transitive) {
        res.non_transitive = scan.witness;
        return res;
    }
    LikePartition part;
    part.class_of_arc = scan.class_of_arc;
    int k = *std::max_element(scan.class_of_arc.begin(), scan.class_of_arc.end()) + 1;
    part.classes.resize(k);
    const auto& arcs = g.arcs();
    for (std::size_t i = 0; i < arcs.size(); ++i)
        part.classes[scan.class_of_arc[i]].push_back(arc_of(g, arcs[i]));
    res.partition = std::move(part);
    return res;
}

int LikePartition::class_of(const Graph& g, const Arc& a) const {
    return class_of_arc[g.arc_index(g.vertex_index(a.source), g.vertex_index(a.target))];
}

MediaticReport is_mediatic(const Graph& g) {
    MediaticReport rep;
    ConnectivityReport conn = is_connected(g);
    rep.g1_connected = conn.connected;
    rep.component_witness = conn.witness;

    BipartiteReport bip = is_bipartite(g);
    rep.g2_bipartite = bip.bipartite;
    rep.odd_cycle = bip.odd_cycle;

    LikeScan scan = scan_likeness(g);
    rep.g3_like_transitive = scan.transitive;
    if (!scan.transitive) rep.non_transitive = scan.witness;

    rep.mediatic = rep.g1_connected && rep.g2_bipartite && rep.g3_like_transitive;
    return rep;
}

std::vector<Circuit> circuits_upto(const Graph& g, int max_len, long long max_count) {
    if (max_len < 3) throw InputError("circuit enumeration needs max_len >= 3");
    std::vector<Circuit> out;
    int n = g.vertex_count();
    std::vector<int> path;
    std::vector<char> on_path(n, 0);

    // Each circuit is found exactly once: the start is its least vertex and
    // the second vertex is smaller than the last one.
    auto emit = [&](const std::vector<int>& cycle) {
        if (static_cast<long long>(out.size()) >= max_count)
            throw BudgetError("circuit enumeration exceeded the count budget");
        Circuit c;
        for (int v : cycle) c.push_back(g.vertex_name(v));
        out.push_back(std::move(c));
    };

    std::function<void(int, int)> extend = [&](int start, int cur) {
        for (int nb : g.neighbors(cur)) {
            if (nb == start && path.size() >= 3) {
                if (path[1] < path.back()) emit(path);
                continue;
            }
            if (nb <= start || on_path[nb] ||
                static_cast<int>(path.size()) >= max_len)
                continue;
            path.push_back(nb);
            on_path[nb] = 1;
            extend(start, nb);
            on_path[nb] = 0;
            path.pop_back();
        }
    };

    for (int s = 0; s < n; ++s) {
        path = {s};
        on_path.assign(n, 0);
        on_path[s] = 1;
        extend(s, s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_minimal_circuit(const Graph& g, const Circuit& c) {
    int m = static_cast<int>(c.size());
    if (m < 3) throw PreconditionError("a circuit has at least 3 vertices");
    std::vector<int> idx;
    idx.reserve(m);
    for (const std::string& name : c) idx.push_back(g.vertex_index(name));
    std::vector<int> seen(idx);
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw PreconditionError("circuit vertices must be pairwise distinct");
    for (int i = 0; i < m; ++i)
        if (!g.has_edge(idx[i], idx[(i + 1) % m]))
            throw PreconditionError("circuit steps must follow edges");

    const auto& d = g.distances();
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            int seg = std::min(j - i, m - (j - i));
            if (seg != d.at(idx[i], idx[j])) return false;
        }
    return true;
}

}  // namespace mediakit

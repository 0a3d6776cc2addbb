#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace mediakit {

// An ordered pair of adjacent vertices.
struct Arc {
    std::string source;
    std::string target;

    friend bool operator==(const Arc& a, const Arc& b) {
        return a.source == b.source && a.target == b.target;
    }
    friend bool operator<(const Arc& a, const Arc& b) {
        return a.source < b.source || (a.source == b.source && a.target < b.target);
    }
};

// All-pairs hop counts; kInf marks unreachable pairs.
struct DistanceTable {
    static constexpr int kInf = -1;
    std::vector<std::vector<int>> d;

    int at(int u, int v) const { return d[u][v]; }
    static bool finite(int x) { return x >= 0; }
};

// A finite simple undirected graph, at least 2 vertices, no loops, no
// duplicate edges. Vertex names are held in lexicographic order; the
// all-pairs distance table is computed once at construction.
class Graph {
public:
    Graph(std::vector<std::string> vertices,
          std::vector<std::pair<std::string, std::string>> edges);

    int vertex_count() const { return static_cast<int>(vertices_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::string>& vertices() const { return vertices_; }
    const std::string& vertex_name(int v) const { return vertices_[v]; }
    int vertex_index(const std::string& name) const;  // InputError if unknown

    // Edges as index pairs (i, j) with i < j, sorted.
    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    bool has_edge(int u, int v) const;

    const DistanceTable& distances() const { return dist_; }
    int distance(const std::string& u, const std::string& v) const;

    // All arcs (both orientations of every edge), sorted, as index pairs.
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    int arc_index(int from, int to) const;  // InputError if not an arc

private:
    std::vector<std::string> vertices_;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<std::vector<int>> adj_;
    DistanceTable dist_;
};

struct ConnectivityReport {
    bool connected = false;
    // Two vertices in different components when not connected.
    std::optional<std::pair<std::string, std::string>> witness;
};

struct BipartiteReport {
    bool bipartite = false;
    // A simple odd cycle when not bipartite.
    std::optional<std::vector<std::string>> odd_cycle;
};

// Arc classes of the likeness relation, ordered by each class's least arc.
struct LikePartition {
    std::vector<std::vector<Arc>> classes;
    int class_of(const Graph& g, const Arc& a) const;  // InputError if unknown arc

    // class id per arc index, aligned with Graph::arcs()
    std::vector<int> class_of_arc;
};

struct LikePartitionResult {
    std::optional<LikePartition> partition;          // set when transitive
    std::optional<std::array<Arc, 3>> non_transitive;  // least witness triple otherwise
};

struct MediaticReport {
    bool mediatic = false;
    bool g1_connected = false;
    bool g2_bipartite = false;
    bool g3_like_transitive = false;
    std::optional<std::pair<std::string, std::string>> component_witness;
    std::optional<std::vector<std::string>> odd_cycle;
    std::optional<std::array<Arc, 3>> non_transitive;
};

// A circuit: at least 3 pairwise distinct vertices, consecutive ones
// adjacent, the last adjacent to the first. Canonical form starts at the
// least vertex and runs toward the smaller of its two circuit neighbors.
using Circuit = std::vector<std::string>;

ConnectivityReport is_connected(const Graph& g);
BipartiteReport is_bipartite(const Graph& g);

// Likeness of two arcs ST, PQ: d(S,P)+1 = d(T,Q)+1 = d(S,Q) = d(T,P).
// Requires a connected graph (PreconditionError otherwise).
bool like_related(const Graph& g, const Arc& a, const Arc& b);

// Partition of the arcs into likeness classes; requires g connected and
// bipartite (PreconditionError otherwise). When the relation is not
// transitive, returns the least violating triple instead.
LikePartitionResult like_partition(const Graph& g);

// Evaluates connectivity, bipartiteness and likeness-transitivity; all
// three flags are always reported.
MediaticReport is_mediatic(const Graph& g);

// Every circuit of length <= maxLen (maxLen >= 3), canonical form, sorted.
// Throws BudgetError when more than maxCount circuits exist.
std::vector<Circuit> circuits_upto(const Graph& g, int max_len,
                                   long long max_count = 1'000'000);

// True when, for every two circuit vertices, one of the two circuit
// segments between them is a shortest path.
bool is_minimal_circuit(const Graph& g, const Circuit& c);

}  // namespace mediakit

#ifndef CIP_GRAPH_HPP
#define CIP_GRAPH_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cip/bitset.hpp"

namespace cip {

struct InputError : std::runtime_error {
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Simple undirected graph with dense vertex ids [0, n).
// Immutable after construction: every transformation builds a new graph.
// Adjacency is kept as sorted neighbor lists; for graphs up to
// bitset_threshold vertices a bitset row per vertex is built as well,
// which the clique search and the greedy clique partition rely on.
class Graph {
public:
    static constexpr int kDefaultBitsetThreshold = 4096;

    Graph() = default;

    int num_vertices() const { return n_; }
    long long num_edges() const { return m_; }

    const std::vector<int>& neighbors(int u) const { return adj_[u]; }
    int degree(int u) const { return int(adj_[u].size()); }

    bool has_bitsets() const { return !rows_.empty(); }
    const Bitset& row(int u) const { return rows_[u]; }

    bool adjacent(int u, int v) const;

    // all edges as (u,v) with u < v, lexicographically sorted
    std::vector<std::array<int, 2>> edges() const;

    bool operator==(const Graph& o) const { return n_ == o.n_ && adj_ == o.adj_; }

    friend Graph build_graph(int n, const std::vector<std::array<int, 2>>& raw_edges,
                             int bitset_threshold);

private:
    int n_ = 0;
    long long m_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Bitset> rows_; // empty when n_ > threshold
};

// Normalizes a raw edge list into a simple graph: self-loops dropped,
// duplicates collapsed, adjacency sorted. Ids outside [0, n) raise InputError.
Graph build_graph(int n, const std::vector<std::array<int, 2>>& raw_edges,
                  int bitset_threshold = Graph::kDefaultBitsetThreshold);

// Induced subgraph after deleting a vertex set, with the id maps needed to
// translate between the two graphs.
struct VertexRemoval {
    Graph graph;
    std::vector<int> old_to_new; // -1 for removed vertices
    std::vector<int> new_to_old;
};

VertexRemoval remove_vertices(const Graph& g, const std::vector<int>& to_remove,
                              int bitset_threshold = Graph::kDefaultBitsetThreshold);

// Same vertex set, given edges deleted. Edges not present raise InputError.
Graph remove_edges(const Graph& g, const std::vector<std::array<int, 2>>& to_delete,
                   int bitset_threshold = Graph::kDefaultBitsetThreshold);

// Per-edge common-neighbor counts, i.e. the number of triangles through each
// edge. Parallel arrays over edges() order.
struct EdgeTriangleCount {
    std::vector<std::array<int, 2>> edges; // (u,v), u < v, sorted
    std::vector<int> count;

    int lookup(int u, int v) const; // -1 if not an edge
};

EdgeTriangleCount triangle_counts(const Graph& g);

} // namespace cip

#endif

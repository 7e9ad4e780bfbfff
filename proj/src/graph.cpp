#include "cip/graph.hpp"

#include <algorithm>
#include <numeric>

namespace cip {

bool Graph::adjacent(int u, int v) const {
    if (u == v) return false;
    if (!rows_.empty()) return rows_[u].test(v);
    const auto& a = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int t = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(a.begin(), a.end(), t);
}

std::vector<std::array<int, 2>> Graph::edges() const {
    std::vector<std::array<int, 2>> es;
    es.reserve(std::size_t(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) es.push_back({u, v});
    return es;
}

Graph build_graph(int n, const std::vector<std::array<int, 2>>& raw_edges,
                  int bitset_threshold) {
    if (n < 0) throw InputError("negative vertex count");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (std::size_t i = 0; i < raw_edges.size(); ++i) {
        auto [u, v] = raw_edges[i];
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw InputError("edge " + std::to_string(i) + " references vertex outside [0," +
                             std::to_string(n) + "): (" + std::to_string(u) + "," +
                             std::to_string(v) + ")");
        if (u == v) continue;
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& a : g.adj_) {
        std::sort(a.begin(), a.end());
        a.erase(std::unique(a.begin(), a.end()), a.end());
        g.m_ += (long long)a.size();
    }
    g.m_ /= 2;
    if (n <= bitset_threshold) {
        g.rows_.assign(n, Bitset(n));
        for (int u = 0; u < n; ++u)
            for (int v : g.adj_[u]) g.rows_[u].set(v);
    }
    return g;
}

VertexRemoval remove_vertices(const Graph& g, const std::vector<int>& to_remove,
                              int bitset_threshold) {
    int n = g.num_vertices();
    std::vector<char> gone(n, 0);
    for (int v : to_remove) gone[v] = 1;

    VertexRemoval out;
    out.old_to_new.assign(n, -1);
    for (int v = 0; v < n; ++v)
        if (!gone[v]) {
            out.old_to_new[v] = int(out.new_to_old.size());
            out.new_to_old.push_back(v);
        }

    std::vector<std::array<int, 2>> es;
    for (int u = 0; u < n; ++u) {
        if (gone[u]) continue;
        for (int v : g.neighbors(u))
            if (u < v && !gone[v]) es.push_back({out.old_to_new[u], out.old_to_new[v]});
    }
    out.graph = build_graph(int(out.new_to_old.size()), es, bitset_threshold);
    return out;
}

Graph remove_edges(const Graph& g, const std::vector<std::array<int, 2>>& to_delete,
                   int bitset_threshold) {
    for (auto [u, v] : to_delete)
        if (u < 0 || u >= g.num_vertices() || v < 0 || v >= g.num_vertices() || !g.adjacent(u, v))
            throw InputError("remove_edges: (" + std::to_string(u) + "," + std::to_string(v) +
                             ") is not an edge");
    auto norm = [](int a, int b) { return a < b ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a}; };
    std::vector<std::array<int, 2>> dead;
    dead.reserve(to_delete.size());
    for (auto [u, v] : to_delete) dead.push_back(norm(u, v));
    std::sort(dead.begin(), dead.end());
    dead.erase(std::unique(dead.begin(), dead.end()), dead.end());

    std::vector<std::array<int, 2>> keep;
    for (auto e : g.edges())
        if (!std::binary_search(dead.begin(), dead.end(), e)) keep.push_back(e);
    return build_graph(g.num_vertices(), keep, bitset_threshold);
}

int EdgeTriangleCount::lookup(int u, int v) const {
    if (u > v) std::swap(u, v);
    std::array<int, 2> key{u, v};
    auto it = std::lower_bound(edges.begin(), edges.end(), key);
    if (it == edges.end() || *it != key) return -1;
    return count[it - edges.begin()];
}

// Oriented triangle listing: rank vertices by (degree, id), orient each edge
// toward the higher rank. Every triangle then has a unique lowest-rank apex,
// and enumerating out-out wedges from the apex touches each triangle once.
// Total work is O(m^1.5) since out-degrees are O(sqrt(m)).
EdgeTriangleCount triangle_counts(const Graph& g) {
    int n = g.num_vertices();
    EdgeTriangleCount tc;
    tc.edges = g.edges();
    tc.count.assign(tc.edges.size(), 0);

    std::vector<int> rank(n);
    {
        std::vector<int> order(n);
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
            return a < b;
        });
        for (int i = 0; i < n; ++i) rank[order[i]] = i;
    }

    std::vector<std::vector<int>> out(n);
    for (auto [u, v] : tc.edges) {
        if (rank[u] < rank[v])
            out[u].push_back(v);
        else
            out[v].push_back(u);
    }

    // edge index lookup by sorted (u,v)
    auto edge_index = [&](int u, int v) {
        if (u > v) std::swap(u, v);
        std::array<int, 2> key{u, v};
        auto it = std::lower_bound(tc.edges.begin(), tc.edges.end(), key);
        return int(it - tc.edges.begin());
    };

    std::vector<int> mark(n, -1);
    for (int u = 0; u < n; ++u) {
        for (int w : out[u]) mark[w] = u;
        for (int v : out[u]) {
            for (int w : out[v]) {
                if (mark[w] == u) {
                    ++tc.count[edge_index(u, v)];
                    ++tc.count[edge_index(u, w)];
                    ++tc.count[edge_index(v, w)];
                }
            }
        }
    }
    return tc;
}

} // namespace cip

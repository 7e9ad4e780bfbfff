#include "cip/bounds.hpp"

#include <limits>
#include <queue>
#include <stdexcept>
#include <unordered_map>

namespace cip {

namespace {

struct Dinic {
    struct Edge {
        int to;
        long long cap;
        int rev;
    };
    struct Built {
        int from, to;
        long long cap;
    };
    std::vector<std::vector<Edge>> adj;
    std::vector<Built> built;
    std::vector<int> level, iter;

    explicit Dinic(int n) : adj(n), level(n), iter(n) {}

    void add_edge(int a, int b, long long cap) {
        built.push_back({a, b, cap});
        adj[a].push_back({b, cap, int(adj[b].size())});
        adj[b].push_back({a, 0, int(adj[a].size()) - 1});
    }

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::queue<int> q;
        level[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Edge& e : adj[v]) {
                if (e.cap > 0 && level[e.to] < 0) {
                    level[e.to] = level[v] + 1;
                    q.push(e.to);
                }
            }
        }
        return level[t] >= 0;
    }

    long long dfs(int v, int t, long long f) {
        if (v == t) return f;
        for (int& i = iter[v]; i < int(adj[v].size()); ++i) {
            Edge& e = adj[v][i];
            if (e.cap > 0 && level[v] < level[e.to]) {
                long long d = dfs(e.to, t, std::min(f, e.cap));
                if (d > 0) {
                    e.cap -= d;
                    adj[e.to][e.rev].cap += d;
                    return d;
                }
            }
        }
        return 0;
    }

    long long max_flow(int s, int t) {
        long long flow = 0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            long long f;
            while ((f = dfs(s, t, std::numeric_limits<long long>::max())) > 0) flow += f;
        }
        return flow;
    }

    long long residual_cut_value(int s) const {
        std::vector<char> reach(adj.size(), 0);
        std::queue<int> q;
        reach[s] = 1;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (const Edge& e : adj[v]) {
                if (e.cap > 0 && !reach[e.to]) {
                    reach[e.to] = 1;
                    q.push(e.to);
                }
            }
        }
        long long cut = 0;
        for (const Built& b : built)
            if (reach[b.from] && !reach[b.to]) cut += b.cap;
        return cut;
    }
};

int max_clique_size(const CliqueFamily& fam) {
    int m = 0;
    for (const auto& c : fam.cliques) m = std::max(m, c.size());
    return m;
}

} // namespace

long long coverage_deficit(const CliqueFamily& fam, int y) {
    long long total = 0;
    for (const auto& c : fam.cliques) total += std::max(0, c.size() - y);
    return total;
}

int disjoint_lower_bound(const CliqueFamily& fam, int k) {
    if (k < 0) throw InputError("interdiction budget must be nonnegative");
    int lo = 0, hi = max_clique_size(fam);
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (coverage_deficit(fam, mid) <= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

long long family_overlap(const CliqueFamily& c1, const CliqueFamily& c2, int y) {
    std::vector<int> act1, act2;
    for (int i = 0; i < int(c1.cliques.size()); ++i)
        if (c1.cliques[i].size() > y) act1.push_back(i);
    for (int j = 0; j < int(c2.cliques.size()); ++j)
        if (c2.cliques[j].size() > y) act2.push_back(j);
    if (act1.empty() || act2.empty()) return 0;

    // each family is disjoint, so a vertex lives in at most one c2 clique
    std::unordered_map<int, int> owner2;
    std::vector<int> node2(c2.cliques.size(), -1);
    for (int idx = 0; idx < int(act2.size()); ++idx) {
        node2[act2[idx]] = idx;
        for (int v : c2.cliques[act2[idx]].vertices) owner2[v] = act2[idx];
    }

    int a = int(act1.size()), b = int(act2.size());
    int source = 0, sink = 1 + a + b;
    Dinic net(a + b + 2);
    for (int i = 0; i < a; ++i)
        net.add_edge(source, 1 + i, c1.cliques[act1[i]].size() - y);
    for (int j = 0; j < b; ++j)
        net.add_edge(1 + a + j, sink, c2.cliques[act2[j]].size() - y);

    std::unordered_map<int, long long> inter;
    for (int i = 0; i < a; ++i) {
        inter.clear();
        for (int v : c1.cliques[act1[i]].vertices) {
            auto it = owner2.find(v);
            if (it != owner2.end()) ++inter[node2[it->second]];
        }
        for (const auto& [j, cnt] : inter) net.add_edge(1 + i, 1 + a + j, cnt);
    }

    long long flow = net.max_flow(source, sink);
    if (flow != net.residual_cut_value(source))
        throw std::logic_error("flow does not match its residual cut");
    return flow;
}

long long combined_deficit(const CliqueFamily& c1, const CliqueFamily& c2, int y) {
    return coverage_deficit(c1, y) + coverage_deficit(c2, y) - family_overlap(c1, c2, y);
}

int bipartite_lower_bound(const CliqueFamily& c1, const CliqueFamily& c2, int k) {
    if (k < 0) throw InputError("interdiction budget must be nonnegative");
    int lo = 0, hi = std::max(max_clique_size(c1), max_clique_size(c2));
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (combined_deficit(c1, c2, mid) <= k)
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

BoundReport compute_bounds(const Graph& g, int k, VertexOrder primary, VertexOrder secondary) {
    BoundReport rep;
    rep.family_a = greedy_disjoint_cliques(g, make_order(g, primary));
    rep.family_b = greedy_disjoint_cliques(g, make_order(g, secondary));
    rep.lb_disjoint = std::max(disjoint_lower_bound(rep.family_a, k),
                               disjoint_lower_bound(rep.family_b, k));
    rep.lb_bipartite = bipartite_lower_bound(rep.family_a, rep.family_b, k);
    return rep;
}

} // namespace cip

#include "cip/clique.hpp"

#include <algorithm>
#include <numeric>

namespace cip {

std::vector<int> make_order(const Graph& g, VertexOrder ord) {
    std::vector<int> order(g.num_vertices());
    std::iota(order.begin(), order.end(), 0);
    switch (ord) {
    case VertexOrder::id:
        break;
    case VertexOrder::deg_desc:
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
            return a < b;
        });
        break;
    case VertexOrder::deg_asc:
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
            return a < b;
        });
        break;
    }
    return order;
}

Coloring greedy_coloring(const Graph& g, const std::vector<int>& order) {
    int n = g.num_vertices();
    Coloring col;
    col.color.assign(n, 0);
    std::vector<int> used(n + 2, -1);
    for (int v : order) {
        for (int w : g.neighbors(v))
            if (col.color[w] > 0) used[col.color[w]] = v;
        int c = 1;
        while (used[c] == v) ++c;
        col.color[v] = c;
        col.num_colors = std::max(col.num_colors, c);
    }
    col.saturation.assign(n, 0);
    std::vector<int> seen(col.num_colors + 1, -1);
    for (int u = 0; u < n; ++u) {
        int ds = 0;
        for (int w : g.neighbors(u)) {
            if (seen[col.color[w]] != u) {
                seen[col.color[w]] = u;
                ++ds;
            }
        }
        col.saturation[u] = ds;
    }
    return col;
}

bool is_clique(const Graph& g, const std::vector<int>& vertices) {
    for (std::size_t i = 0; i < vertices.size(); ++i)
        for (std::size_t j = i + 1; j < vertices.size(); ++j)
            if (!g.adjacent(vertices[i], vertices[j])) return false;
    return true;
}

namespace {

// smallest-last ordering; order[i] is the i-th vertex removed
std::vector<int> degeneracy_order(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> deg(n), pos(n), vert(n), start(n + 1, 0);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    for (int v = 0; v < n; ++v) ++start[deg[v] + 1];
    for (int d = 0; d < n; ++d) start[d + 1] += start[d];
    {
        std::vector<int> fill = start;
        for (int v = 0; v < n; ++v) {
            pos[v] = fill[deg[v]]++;
            vert[pos[v]] = v;
        }
    }
    std::vector<int> order;
    order.reserve(n);
    std::vector<char> removed(n, 0);
    for (int i = 0; i < n; ++i) {
        int v = vert[i];
        order.push_back(v);
        removed[v] = 1;
        for (int w : g.neighbors(v)) {
            if (removed[w] || pos[w] <= i) continue;
            // move w one bucket down
            int dw = deg[w];
            int swap_pos = std::max(start[dw], i + 1);
            int u = vert[swap_pos];
            std::swap(vert[pos[w]], vert[swap_pos]);
            std::swap(pos[w], pos[u]);
            ++start[dw];
            --deg[w];
        }
    }
    return order;
}

// Branch-and-bound on a subproblem with local bitset adjacency.
struct CliqueSearch {
    const std::vector<Bitset>* adj = nullptr;
    int n = 0;
    SearchLimits* limits = nullptr;

    std::vector<int> current;
    std::vector<int> best;
    int best_size = 0; // primed floor; best stays empty until beaten

    void run(int at_least) {
        best_size = at_least;
        if (n == 0) return;
        Bitset all(n);
        for (int v = 0; v < n; ++v) all.set(v);
        expand(all);
    }

    void expand(Bitset cand) {
        if (limits && !limits->charge()) return;

        // greedy coloring of the candidates; vertices come out grouped by
        // color class, so |current| + color is an upper bound for everything
        // at or before that position
        std::vector<int> verts, colors;
        verts.reserve(std::size_t(cand.count()));
        {
            Bitset uncolored = cand;
            int c = 0;
            while (!uncolored.empty()) {
                ++c;
                Bitset q = uncolored;
                for (int v = q.first(); v != -1; v = q.first()) {
                    verts.push_back(v);
                    colors.push_back(c);
                    uncolored.reset(v);
                    q.reset(v);
                    q.andnot_assign((*adj)[v]);
                }
            }
        }

        for (int i = int(verts.size()) - 1; i >= 0; --i) {
            if (limits && limits->interrupted) return;
            if (int(current.size()) + colors[i] <= best_size) return;
            int v = verts[i];
            current.push_back(v);
            if (int(current.size()) > best_size) {
                best_size = int(current.size());
                best = current;
            }
            Bitset next = cand;
            next.and_assign((*adj)[v]);
            if (!next.empty()) expand(next);
            current.pop_back();
            cand.reset(v);
        }
    }
};

// one-pass greedy clique along a degree-descending order, used to prime the
// incumbent before the exact search
std::vector<int> greedy_clique_seed(const Graph& g) {
    if (g.num_vertices() == 0 || !g.has_bitsets()) return {};
    auto order = make_order(g, VertexOrder::deg_desc);
    Bitset cand(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) cand.set(v);
    std::vector<int> clique;
    for (int v : order) {
        if (!cand.test(v)) continue;
        clique.push_back(v);
        cand.and_assign(g.row(v));
    }
    return clique;
}

Clique search_small(const Graph& g, int at_least, SearchLimits* limits) {
    int n = g.num_vertices();
    std::vector<Bitset> rows(n);
    for (int v = 0; v < n; ++v) rows[v] = g.row(v);

    CliqueSearch s;
    s.adj = &rows;
    s.n = n;
    s.limits = limits;

    auto seed = greedy_clique_seed(g);
    int floor_size = at_least;
    std::vector<int> seed_best;
    if (int(seed.size()) > floor_size) {
        floor_size = int(seed.size());
        seed_best = seed;
    }
    s.run(floor_size);

    Clique out;
    out.vertices = s.best.empty() ? seed_best : s.best;
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

// induced-subproblem search over an explicit vertex subset of g
Clique search_subset(const Graph& g, const std::vector<int>& subset, int at_least,
                     SearchLimits* limits, std::vector<int>& scratch_pos) {
    int d = int(subset.size());
    for (int i = 0; i < d; ++i) scratch_pos[subset[i]] = i;
    std::vector<Bitset> rows(d, Bitset(d));
    for (int i = 0; i < d; ++i) {
        for (int w : g.neighbors(subset[i])) {
            int j = scratch_pos[w];
            if (j >= 0) rows[i].set(j);
        }
    }
    for (int i = 0; i < d; ++i) scratch_pos[subset[i]] = -1;

    CliqueSearch s;
    s.adj = &rows;
    s.n = d;
    s.limits = limits;
    s.run(at_least);

    Clique out;
    for (int i : s.best) out.vertices.push_back(subset[i]);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

} // namespace

Clique max_clique(const Graph& g, int at_least, SearchLimits* limits) {
    int n = g.num_vertices();
    if (n == 0) return {};
    if (g.has_bitsets()) return search_small(g, at_least, limits);

    // large sparse graph: one small subproblem per vertex over its
    // later neighbors in a degeneracy order
    auto order = degeneracy_order(g);
    std::vector<int> rank(n);
    for (int i = 0; i < n; ++i) rank[order[i]] = i;

    Clique best;
    int best_size = at_least;
    std::vector<int> pos(n, -1);
    for (int v : order) {
        if (limits && limits->interrupted) break;
        std::vector<int> later;
        for (int w : g.neighbors(v))
            if (rank[w] > rank[v]) later.push_back(w);
        if (int(later.size()) + 1 <= best_size) continue;
        Clique sub = search_subset(g, later, best_size - 1, limits, pos);
        if (sub.size() + 1 > best_size) {
            best_size = sub.size() + 1;
            best.vertices = sub.vertices;
            best.vertices.push_back(v);
            std::sort(best.vertices.begin(), best.vertices.end());
        }
    }
    return best;
}

Clique max_clique_in_subset(const Graph& g, const std::vector<int>& subset, int at_least,
                            SearchLimits* limits) {
    if (int(subset.size()) <= Graph::kDefaultBitsetThreshold) {
        std::vector<int> pos(g.num_vertices(), -1);
        return search_subset(g, subset, at_least, limits, pos);
    }
    std::vector<char> keep(g.num_vertices(), 0);
    for (int v : subset) keep[v] = 1;
    std::vector<int> drop;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!keep[v]) drop.push_back(v);
    VertexRemoval vr = remove_vertices(g, drop);
    Clique sub = max_clique(vr.graph, at_least, limits);
    Clique out;
    for (int v : sub.vertices) out.vertices.push_back(vr.new_to_old[v]);
    std::sort(out.vertices.begin(), out.vertices.end());
    return out;
}

NeighborhoodCliqueSizes neighborhood_clique_sizes(const Graph& g, int lb, SearchLimits* limits) {
    int n = g.num_vertices();
    NeighborhoodCliqueSizes out;
    out.value.assign(n, 0);
    out.exact.assign(n, true);

    int cap = std::max(0, lb - 2);
    std::vector<int> pos(n, -1);
    for (int u = 0; u < n; ++u) {
        const auto& nb = g.neighbors(u);
        int d = int(nb.size());
        if (d == 0) continue; // omega of empty neighborhood is 0, exact
        if (d <= cap) {
            // omega <= d <= lb-2, no search needed
            out.value[u] = cap;
            out.exact[u] = false;
            continue;
        }
        if (limits && limits->interrupted) {
            out.value[u] = d;
            out.exact[u] = false;
            continue;
        }
        Clique c = d <= Graph::kDefaultBitsetThreshold ? search_subset(g, nb, cap, limits, pos)
                                                      : max_clique_in_subset(g, nb, cap, limits);
        if (limits && limits->interrupted) {
            out.value[u] = d; // search cut short, only the trivial bound holds
            out.exact[u] = false;
        } else if (c.size() > cap) {
            out.value[u] = c.size();
            out.exact[u] = true;
        } else {
            out.value[u] = cap;
            out.exact[u] = false;
        }
    }
    return out;
}

CliqueFamily greedy_disjoint_cliques(const Graph& g, const std::vector<int>& seed_order) {
    int n = g.num_vertices();
    std::vector<int> clique_of(n, -1);
    std::vector<std::vector<int>> members;
    std::vector<int> hits; // per existing clique, neighbors of x seen in it
    std::vector<int> touched;

    for (int x : seed_order) {
        for (int w : g.neighbors(x)) {
            int cid = clique_of[w];
            if (cid < 0) continue;
            if (hits[cid] == 0) touched.push_back(cid);
            ++hits[cid];
        }
        int join = -1; // earliest-created clique x is fully adjacent to
        for (int cid : touched) {
            if (hits[cid] == int(members[cid].size()) && (join < 0 || cid < join)) join = cid;
            hits[cid] = 0;
        }
        touched.clear();
        if (join >= 0) {
            members[join].push_back(x);
            clique_of[x] = join;
        } else {
            clique_of[x] = int(members.size());
            members.push_back({x});
            hits.push_back(0);
        }
    }

    CliqueFamily fam;
    fam.disjoint = true;
    fam.cliques.reserve(members.size());
    for (auto& m : members) {
        std::sort(m.begin(), m.end());
        fam.cliques.push_back(Clique{std::move(m)});
    }
    return fam;
}

} // namespace cip

#include "cip/reduce.hpp"

#include <chrono>
#include <numeric>
#include <queue>
#include <unordered_map>

namespace cip {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

void remove_kernel_vertices(Instance& inst, const std::vector<int>& to_remove, bool forced) {
    if (to_remove.empty()) return;
    auto& sink = forced ? inst.forced : inst.removed_free;
    for (int v : to_remove) sink.push_back(inst.id_map[v]);
    VertexRemoval vr = remove_vertices(inst.graph, to_remove, inst.bitset_threshold);
    std::vector<int> new_map(vr.graph.num_vertices());
    for (int i = 0; i < int(new_map.size()); ++i) new_map[i] = inst.id_map[vr.new_to_old[i]];
    inst.graph = std::move(vr.graph);
    inst.id_map = std::move(new_map);
}

// rebuild the kernel from alive flags plus an explicit surviving edge list
void apply_removal(Instance& inst, const std::vector<char>& alive,
                   const std::vector<std::array<int, 2>>& live_edges, bool forced) {
    int n = inst.graph.num_vertices();
    std::vector<int> old_to_new(n, -1), new_map;
    auto& sink = forced ? inst.forced : inst.removed_free;
    for (int v = 0; v < n; ++v) {
        if (alive[v]) {
            old_to_new[v] = int(new_map.size());
            new_map.push_back(inst.id_map[v]);
        } else {
            sink.push_back(inst.id_map[v]);
        }
    }
    std::vector<std::array<int, 2>> mapped;
    mapped.reserve(live_edges.size());
    for (auto [a, b] : live_edges) mapped.push_back({old_to_new[a], old_to_new[b]});
    inst.graph = build_graph(int(new_map.size()), mapped, inst.bitset_threshold);
    inst.id_map = std::move(new_map);
}

} // namespace

Instance make_instance(const Graph& g, int k, int bitset_threshold) {
    if (k < 0) throw InputError("interdiction budget must be nonnegative");
    Instance inst;
    inst.graph = g;
    inst.k = k;
    inst.bitset_threshold = bitset_threshold;
    inst.id_map.resize(g.num_vertices());
    std::iota(inst.id_map.begin(), inst.id_map.end(), 0);
    return inst;
}

void degree_triangle_reduce(Instance& inst) {
    auto t0 = Clock::now();
    StageStats st{"degree_triangle", 0, 0, 0.0, 0};
    const int lb = inst.lb;
    int n = inst.graph.num_vertices();
    if (n == 0 || lb < 2) {
        st.seconds = seconds_since(t0);
        inst.stage_stats.push_back(st);
        return;
    }

    EdgeTriangleCount tri = triangle_counts(inst.graph);
    int m = int(tri.edges.size());
    std::vector<std::vector<std::pair<int, int>>> adj(n); // (neighbor, edge id)
    for (int e = 0; e < m; ++e) {
        auto [a, b] = tri.edges[e];
        adj[a].push_back({b, e});
        adj[b].push_back({a, e});
    }
    for (auto& row : adj) std::sort(row.begin(), row.end());

    std::vector<char> alive_v(n, 1), alive_e(m, 1), in_vq(n, 0), in_eq(m, 0);
    std::vector<int> deg(n), tcnt = tri.count;
    for (int v = 0; v < n; ++v) deg[v] = inst.graph.degree(v);

    std::queue<int> vq, eq;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= lb - 2) {
            vq.push(v);
            in_vq[v] = 1;
        }
    for (int e = 0; e < m; ++e)
        if (tcnt[e] <= lb - 3) {
            eq.push(e);
            in_eq[e] = 1;
        }

    auto drop_triangles = [&](int x, int y) {
        // edge (x,y) just died: each surviving common neighbor z loses the
        // triangle {x,y,z} on both of its other edges
        const auto &ax = adj[x], &ay = adj[y];
        std::size_t i = 0, j = 0;
        while (i < ax.size() && j < ay.size()) {
            if (ax[i].first < ay[j].first) {
                ++i;
            } else if (ax[i].first > ay[j].first) {
                ++j;
            } else {
                int z = ax[i].first;
                int e1 = ax[i].second, e2 = ay[j].second;
                if (alive_v[z] && alive_e[e1] && alive_e[e2]) {
                    for (int e : {e1, e2}) {
                        if (--tcnt[e] <= lb - 3 && !in_eq[e]) {
                            eq.push(e);
                            in_eq[e] = 1;
                        }
                    }
                }
                ++i;
                ++j;
            }
        }
    };

    auto kill_edge = [&](int e, bool by_rule) {
        if (!alive_e[e]) return;
        alive_e[e] = 0;
        if (by_rule) ++st.edges_removed;
        auto [x, y] = tri.edges[e];
        for (int v : {x, y}) {
            if (!alive_v[v]) continue;
            if (--deg[v] <= lb - 2 && !in_vq[v]) {
                vq.push(v);
                in_vq[v] = 1;
            }
        }
        if (alive_v[x] && alive_v[y]) drop_triangles(x, y);
    };

    while (!vq.empty() || !eq.empty()) {
        ++st.pops;
        if (!vq.empty()) {
            int u = vq.front();
            vq.pop();
            in_vq[u] = 0;
            if (!alive_v[u] || deg[u] > lb - 2) continue;
            // kill incident edges while u still counts as alive, so the
            // shared triangles are charged exactly once
            for (auto [w, e] : adj[u]) kill_edge(e, false);
            alive_v[u] = 0;
            ++st.vertices_removed;
        } else {
            int e = eq.front();
            eq.pop();
            in_eq[e] = 0;
            if (alive_e[e] && tcnt[e] <= lb - 3) kill_edge(e, true);
        }
    }

    std::vector<std::array<int, 2>> live;
    for (int e = 0; e < m; ++e)
        if (alive_e[e]) live.push_back(tri.edges[e]);
    apply_removal(inst, alive_v, live, false);
    st.seconds = seconds_since(t0);
    inst.stage_stats.push_back(st);
}

void color_reduce(Instance& inst, const Coloring& coloring) {
    auto t0 = Clock::now();
    StageStats st{"color", 0, 0, 0.0, 0};
    const Graph& g = inst.graph;
    const int lb = inst.lb;
    int n = g.num_vertices();
    if (n == 0 || lb < 2) {
        st.seconds = seconds_since(t0);
        inst.stage_stats.push_back(st);
        return;
    }

    std::vector<int> col = coloring.color;
    std::vector<int> ds(n, 0);
    // neighbor color multiset per vertex, sorted by color
    std::vector<std::vector<std::pair<int, int>>> cnt(n);
    {
        std::vector<int> tmp;
        for (int u = 0; u < n; ++u) {
            tmp.clear();
            for (int w : g.neighbors(u)) tmp.push_back(col[w]);
            std::sort(tmp.begin(), tmp.end());
            auto& c = cnt[u];
            for (int x : tmp) {
                if (c.empty() || c.back().first != x)
                    c.push_back({x, 1});
                else
                    ++c.back().second;
            }
            ds[u] = int(c.size());
        }
    }

    auto bump = [&](int u, int color, int delta) -> int {
        auto& c = cnt[u];
        auto it = std::lower_bound(c.begin(), c.end(), std::pair<int, int>{color, 0},
                                   [](const auto& a, const auto& b) { return a.first < b.first; });
        if (it == c.end() || it->first != color) it = c.insert(it, {color, 0});
        int before = it->second;
        it->second += delta;
        if (before == 0 && it->second > 0) ++ds[u];
        if (before > 0 && it->second == 0) --ds[u];
        return it->second;
    };

    std::vector<char> alive(n, 1), in_q(n, 0);
    std::queue<int> q;
    auto enqueue = [&](int u) {
        if (alive[u] && !in_q[u]) {
            q.push(u);
            in_q[u] = 1;
        }
    };
    for (int u = 0; u < n; ++u)
        if (ds[u] <= lb - 2) enqueue(u);

    auto color_gone = [&](int y, int c0) {
        int after = bump(y, c0, -1);
        if (ds[y] <= lb - 2)
            enqueue(y);
        else if (after == 0 && c0 < col[y])
            enqueue(y); // a smaller color opened up for y
    };

    while (!q.empty()) {
        ++st.pops;
        int x = q.front();
        q.pop();
        in_q[x] = 0;
        if (!alive[x]) continue;
        if (ds[x] <= lb - 2) {
            alive[x] = 0;
            ++st.vertices_removed;
            for (int w : g.neighbors(x))
                if (alive[w]) color_gone(w, col[x]);
        } else {
            int cand = 1; // smallest color no surviving neighbor holds
            for (const auto& [color, count] : cnt[x]) {
                if (count <= 0) continue;
                if (color == cand)
                    ++cand;
                else if (color > cand)
                    break;
            }
            if (cand < col[x]) {
                int old = col[x];
                col[x] = cand;
                for (int w : g.neighbors(x)) {
                    if (!alive[w]) continue;
                    bump(w, cand, +1);
                    color_gone(w, old);
                }
            }
        }
    }

    std::vector<int> removed;
    for (int v = 0; v < n; ++v)
        if (!alive[v]) removed.push_back(v);
    st.seconds = seconds_since(t0);
    remove_kernel_vertices(inst, removed, false);
    inst.stage_stats.push_back(st);
}

void exact_clique_reduce(Instance& inst, const NeighborhoodCliqueSizes& nbr) {
    auto t0 = Clock::now();
    StageStats st{"clique", 0, 0, 0.0, 0};
    std::vector<int> removed;
    for (int u = 0; u < inst.graph.num_vertices(); ++u)
        if (nbr.value[u] <= inst.lb - 2) removed.push_back(u);
    st.vertices_removed = int(removed.size());
    remove_kernel_vertices(inst, removed, false);
    st.seconds = seconds_since(t0);
    inst.stage_stats.push_back(st);
}

void interdiction_reduce(Instance& inst, const NeighborhoodCliqueSizes& nbr) {
    auto t0 = Clock::now();
    StageStats st{"interdiction", 0, 0, 0.0, 0};
    const Graph& g = inst.graph;
    int n = g.num_vertices();
    if (n == 0 || inst.k <= 0) {
        st.seconds = seconds_since(t0);
        inst.stage_stats.push_back(st);
        return;
    }

    std::vector<int> by_val(n);
    std::iota(by_val.begin(), by_val.end(), 0);
    std::sort(by_val.begin(), by_val.end(), [&](int a, int b) {
        if (nbr.value[a] != nbr.value[b]) return nbr.value[a] > nbr.value[b];
        return a < b;
    });

    std::vector<char> alive(n, 1);
    std::vector<int> lost(n, 0); // forced-removed neighbors so far
    std::vector<int> fired;

    bool progress = true;
    while (progress && inst.k > 0) {
        progress = false;
        for (int u : by_val) {
            if (!alive[u] || !nbr.exact[u]) continue;
            // each forced neighbor removal costs the neighborhood clique at
            // most one vertex, so value - lost is still a valid floor
            int left = nbr.value[u] - lost[u] - inst.k;
            bool holds = true;
            for (int v : by_val) {
                if (!alive[v] || v == u || g.adjacent(u, v)) continue;
                // first alive non-neighbor in descending order carries the
                // largest stale upper bound
                holds = left > nbr.value[v];
                break;
            }
            if (!holds) continue;
            fired.push_back(u);
            alive[u] = 0;
            --inst.k;
            for (int w : g.neighbors(u))
                if (alive[w]) ++lost[w];
            progress = true;
            break;
        }
    }

    st.vertices_removed = int(fired.size());
    remove_kernel_vertices(inst, fired, true);
    st.seconds = seconds_since(t0);
    inst.stage_stats.push_back(st);
}

std::vector<std::array<int, 2>> domination_pairs(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::array<int, 2>> out;

    auto contained = [&](int v, int u, bool skip_u) {
        // N(v) (minus u when skip_u) inside N(u)
        const auto &av = g.neighbors(v), &au = g.neighbors(u);
        std::size_t j = 0;
        for (int x : av) {
            if (skip_u && x == u) continue;
            while (j < au.size() && au[j] < x) ++j;
            if (j == au.size() || au[j] != x) return false;
        }
        return true;
    };

    std::vector<int> stamp(n, -1);
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) == 0) {
            // empty neighborhood is a proper subset of any nonempty one
            for (int u = 0; u < n; ++u)
                if (g.degree(u) > 0) out.push_back({u, v});
            continue;
        }
        int w0 = g.neighbors(v)[0];
        for (int w : g.neighbors(v))
            if (g.degree(w) < g.degree(w0)) w0 = w;
        // a dominator is adjacent to all of N(v) except possibly itself, so
        // it shows up around the cheapest neighbor or around v
        auto consider = [&](int u) {
            if (u == v || stamp[u] == v) return;
            stamp[u] = v;
            if (g.degree(u) <= g.degree(v)) return; // proper containment needs more room
            bool adj = g.adjacent(u, v);
            if (contained(v, u, adj)) out.push_back({u, v});
        };
        for (int u : g.neighbors(w0)) consider(u);
        for (int u : g.neighbors(v)) consider(u);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void triangle_strong_reduce(Instance& inst, TriangleStrength mode) {
    auto t0 = Clock::now();
    StageStats st{"strong_triangle", 0, 0, 0.0, 0};
    const int lb = inst.lb;
    int n = inst.graph.num_vertices();
    if (n == 0 || lb < 3) {
        st.seconds = seconds_since(t0);
        inst.stage_stats.push_back(st);
        return;
    }

    Coloring col;
    if (mode == TriangleStrength::color)
        col = greedy_coloring(inst.graph, make_order(inst.graph, VertexOrder::deg_desc));

    std::vector<std::array<int, 2>> doomed;
    std::vector<int> common;
    std::vector<int> seen(col.num_colors + 2, -1);
    auto edges = inst.graph.edges();
    for (int e = 0; e < int(edges.size()); ++e) {
        auto [u, v] = edges[e];
        common.clear();
        const auto &au = inst.graph.neighbors(u), &av = inst.graph.neighbors(v);
        std::size_t i = 0, j = 0;
        while (i < au.size() && j < av.size()) {
            if (au[i] < av[j])
                ++i;
            else if (au[i] > av[j])
                ++j;
            else {
                common.push_back(au[i]);
                ++i;
                ++j;
            }
        }
        bool drop;
        if (int(common.size()) <= lb - 3) {
            drop = true;
        } else if (mode == TriangleStrength::clique) {
            drop = max_clique_in_subset(inst.graph, common, lb - 3).size() == 0;
        } else {
            int distinct = 0;
            for (int w : common)
                if (seen[col.color[w]] != e) {
                    seen[col.color[w]] = e;
                    ++distinct;
                }
            drop = distinct <= lb - 3;
        }
        if (drop) doomed.push_back({u, v});
    }

    st.edges_removed = int(doomed.size());
    inst.graph = remove_edges(inst.graph, doomed, inst.bitset_threshold);
    st.seconds = seconds_since(t0);
    inst.stage_stats.push_back(st);
}

namespace {

CliqueFamily map_family(const CliqueFamily& fam, const std::vector<int>& id_map) {
    CliqueFamily out;
    out.disjoint = fam.disjoint;
    out.cliques.reserve(fam.cliques.size());
    for (const auto& c : fam.cliques) {
        Clique mc;
        mc.vertices.reserve(c.vertices.size());
        for (int v : c.vertices) mc.vertices.push_back(id_map[v]);
        std::sort(mc.vertices.begin(), mc.vertices.end());
        out.cliques.push_back(std::move(mc));
    }
    return out;
}

} // namespace

PreprocessResult preprocess(const Graph& g, int k, const PreprocessConfig& cfg) {
    PreprocessResult R;
    R.inst = make_instance(g, k, cfg.bitset_threshold);
    Instance& inst = R.inst;

    auto decided = [&]() {
        int n = inst.graph.num_vertices();
        if (n == 0) {
            R.theta_decided = 0;
            R.decided_set.clear();
            return true;
        }
        if (inst.k >= n) {
            R.theta_decided = 0;
            R.decided_set.resize(n);
            std::iota(R.decided_set.begin(), R.decided_set.end(), 0);
            return true;
        }
        return false;
    };
    if (decided()) return R;

    VertexOrder alt = cfg.seed_order == VertexOrder::deg_asc ? VertexOrder::deg_desc
                                                             : VertexOrder::deg_asc;
    {
        auto t0 = Clock::now();
        auto fam = greedy_disjoint_cliques(inst.graph, make_order(inst.graph, cfg.seed_order));
        inst.lb = std::max(inst.lb, disjoint_lower_bound(fam, inst.k));
        inst.stage_stats.push_back({"disjoint_bound", 0, 0, seconds_since(t0), 0});
    }

    // round-robin the cheap rules until a full round changes nothing, so the
    // kernel is a true fixpoint of stages 2 and 3
    auto middle = [&]() {
        while (true) {
            int nv = inst.graph.num_vertices();
            long long ne = inst.graph.num_edges();
            degree_triangle_reduce(inst);
            color_reduce(inst,
                         greedy_coloring(inst.graph, make_order(inst.graph, VertexOrder::deg_desc)));
            if (cfg.strong_triangle) triangle_strong_reduce(inst, cfg.strong_mode);
            if (inst.graph.num_vertices() == nv && inst.graph.num_edges() == ne) break;
        }
    };
    middle();
    if (decided()) return R;

    auto bounds_pass = [&]() {
        auto t0 = Clock::now();
        BoundReport rep = compute_bounds(inst.graph, inst.k, cfg.seed_order, alt);
        inst.stage_stats.push_back({"bipartite_bound", 0, 0, seconds_since(t0), 0});
        return rep;
    };
    BoundReport rep = bounds_pass();
    if (rep.lb() > inst.lb) {
        inst.lb = rep.lb();
        // a tighter bound can unlock the cheap rules once more; the families
        // must then be rebuilt because edges may have gone. A further raise
        // found on the reduced kernel is reported but deliberately not fed
        // back into the rules, keeping the pipeline a single pass.
        middle();
        if (decided()) return R;
        rep = bounds_pass();
    }
    R.lb_disjoint = rep.lb_disjoint;
    R.lb_bipartite = rep.lb_bipartite;
    R.family_a = map_family(rep.family_a, inst.id_map);
    R.family_b = map_family(rep.family_b, inst.id_map);

    NeighborhoodCliqueSizes nbr = neighborhood_clique_sizes(inst.graph, inst.lb, cfg.limits);
    std::vector<int> pre_clique_map = inst.id_map;
    exact_clique_reduce(inst, nbr);
    if (decided()) return R;

    if (inst.k > 0) {
        // surviving vertices keep their neighborhood values across the
        // removals, so remap instead of recomputing
        std::unordered_map<int, int> orig_to_old;
        orig_to_old.reserve(pre_clique_map.size());
        for (int i = 0; i < int(pre_clique_map.size()); ++i) orig_to_old[pre_clique_map[i]] = i;
        int n = inst.graph.num_vertices();
        NeighborhoodCliqueSizes kept;
        kept.value.resize(n);
        kept.exact.resize(n);
        for (int j = 0; j < n; ++j) {
            int old = orig_to_old.at(inst.id_map[j]);
            kept.value[j] = nbr.value[old];
            kept.exact[j] = nbr.exact[old];
        }
        interdiction_reduce(inst, kept);
        if (decided()) return R;
    }

    R.dominators = domination_pairs(inst.graph);
    return R;
}

} // namespace cip

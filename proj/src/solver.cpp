#include "cip/solver.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

namespace cip {

namespace {

using Clock = std::chrono::steady_clock;

struct MasterSearch {
    const MasterProblem* mp = nullptr;
    SearchLimits* limits = nullptr;
    int y = 0;

    std::vector<std::vector<int>> dom_of; // dominators per vertex
    std::vector<std::vector<int>> occ;    // cliques containing each vertex
    std::vector<int> alive_count;         // |C \ deleted| per clique
    std::vector<char> deleted, banned, pending;
    int del_count = 0;

    std::vector<int> witness;
    bool found = false;
    bool limited = false;
    long long nodes = 0;

    bool charge() {
        ++nodes;
        if (limits && !limits->charge()) {
            limited = true;
            return false;
        }
        return true;
    }

    // transitive dominator closure of w against the current deleted set;
    // fails when it needs a banned vertex or more budget than remains
    bool closure(int w, std::vector<int>& added) {
        added.clear();
        std::vector<int> stack{w};
        bool ok = true;
        while (!stack.empty() && ok) {
            int x = stack.back();
            stack.pop_back();
            if (deleted[x] || pending[x]) continue;
            if (banned[x]) {
                ok = false;
                break;
            }
            pending[x] = 1;
            added.push_back(x);
            for (int u : dom_of[x]) stack.push_back(u);
        }
        for (int x : added) pending[x] = 0;
        if (!ok || del_count + int(added.size()) > mp->k) return false;
        return true;
    }

    void apply(const std::vector<int>& added) {
        for (int x : added) {
            deleted[x] = 1;
            ++del_count;
            for (int i : occ[x]) --alive_count[i];
        }
    }

    void undo(const std::vector<int>& added) {
        for (int x : added) {
            deleted[x] = 0;
            --del_count;
            for (int i : occ[x]) ++alive_count[i];
        }
    }

    // admissible need: disjoint violated subfamily deficits, sharpened by the
    // two-family flow coupling when that alone does not prune
    bool over_budget(const std::vector<int>& violated) {
        int remaining = mp->k - del_count;
        std::vector<char> used(mp->n, 0);
        long long sum = 0;
        std::vector<int> fam_a, rest;
        for (int i : violated) {
            bool free = true;
            for (int v : mp->pool[i].vertices)
                if (!deleted[v] && used[v]) {
                    free = false;
                    break;
                }
            if (!free) {
                rest.push_back(i);
                continue;
            }
            for (int v : mp->pool[i].vertices)
                if (!deleted[v]) used[v] = 1;
            fam_a.push_back(i);
            sum += alive_count[i] - y;
        }
        if (sum > remaining) return true;
        if (rest.empty()) return false;

        auto alive_clique = [&](int i) {
            Clique c;
            for (int v : mp->pool[i].vertices)
                if (!deleted[v]) c.vertices.push_back(v);
            return c;
        };
        CliqueFamily fa, fb;
        fa.disjoint = fb.disjoint = true;
        for (int i : fam_a) fa.cliques.push_back(alive_clique(i));
        std::vector<char> used_b(mp->n, 0);
        for (int i : rest) {
            bool free = true;
            for (int v : mp->pool[i].vertices)
                if (!deleted[v] && used_b[v]) {
                    free = false;
                    break;
                }
            if (!free) continue;
            for (int v : mp->pool[i].vertices)
                if (!deleted[v]) used_b[v] = 1;
            fb.cliques.push_back(alive_clique(i));
        }
        if (fb.cliques.empty()) return false;
        return combined_deficit(fa, fb, y) > remaining;
    }

    bool search() {
        if (!charge()) return false;

        std::vector<int> violated;
        int pick = -1, worst = 0;
        for (int i = 0; i < int(mp->pool.size()); ++i) {
            int deficit = alive_count[i] - y;
            if (deficit <= 0) continue;
            violated.push_back(i);
            if (deficit > worst) {
                worst = deficit;
                pick = i;
            }
        }
        if (pick < 0) {
            found = true;
            witness.clear();
            for (int v = 0; v < mp->n; ++v)
                if (deleted[v]) witness.push_back(v);
            return true;
        }
        if (del_count >= mp->k) return false;
        if (over_budget(violated)) return false;

        // candidates: surviving members of the worst clique, those hitting
        // the most violated cliques first
        std::vector<int> cand;
        for (int v : mp->pool[pick].vertices)
            if (!deleted[v] && !banned[v]) cand.push_back(v);
        std::vector<int> hits(cand.size(), 0);
        {
            std::vector<char> is_violated(mp->pool.size(), 0);
            for (int i : violated) is_violated[i] = 1;
            for (std::size_t ci = 0; ci < cand.size(); ++ci)
                for (int i : occ[cand[ci]])
                    if (is_violated[i]) ++hits[ci];
        }
        std::vector<int> order(cand.size());
        std::iota(order.begin(), order.end(), 0);
        std::sort(order.begin(), order.end(), [&](int a, int b) {
            if (hits[a] != hits[b]) return hits[a] > hits[b];
            return cand[a] < cand[b];
        });

        std::vector<int> added, banned_here;
        for (int idx : order) {
            int w = cand[idx];
            if (closure(w, added)) {
                apply(added);
                if (search()) return true;
                undo(added);
                if (limited) break;
            }
            banned[w] = 1;
            banned_here.push_back(w);
        }
        for (int w : banned_here) banned[w] = 0;
        return false;
    }
};

} // namespace

MasterOutcome master_solve(const MasterProblem& mp, int target_y, SearchLimits* limits) {
    MasterSearch s;
    s.mp = &mp;
    s.limits = limits;
    s.y = target_y;
    s.dom_of.assign(mp.n, {});
    for (auto [u, v] : mp.dominators) s.dom_of[v].push_back(u);
    s.occ.assign(mp.n, {});
    s.alive_count.resize(mp.pool.size());
    for (int i = 0; i < int(mp.pool.size()); ++i) {
        s.alive_count[i] = mp.pool[i].size();
        for (int v : mp.pool[i].vertices) s.occ[v].push_back(i);
    }
    s.deleted.assign(mp.n, 0);
    s.banned.assign(mp.n, 0);
    s.pending.assign(mp.n, 0);

    s.search();

    MasterOutcome out;
    out.feasible = s.found;
    out.removed = std::move(s.witness);
    out.resource_limited = s.limited;
    out.nodes = s.nodes;
    return out;
}

std::optional<Clique> separate(const Graph& g, const std::vector<int>& survivors, int y,
                               SearchLimits* limits) {
    Clique c = max_clique_in_subset(g, survivors, y, limits);
    if (c.size() > y) return c;
    return std::nullopt;
}

SolveResult solve(const Graph& g, int k, const SolveConfig& cfg) {
    auto t0 = Clock::now();
    SolveResult res;
    SearchLimits limits;
    if (cfg.time_limit_seconds > 0) {
        limits.has_deadline = true;
        limits.deadline = t0 + std::chrono::duration_cast<Clock::duration>(
                                   std::chrono::duration<double>(cfg.time_limit_seconds));
    }
    limits.node_cap = cfg.node_cap;

    PreprocessConfig pcfg;
    pcfg.strong_triangle = cfg.strong_triangle;
    pcfg.strong_mode = cfg.strong_mode;
    pcfg.seed_order = cfg.seed_order;
    pcfg.bitset_threshold = cfg.bitset_threshold;
    pcfg.limits = &limits;
    PreprocessResult P = preprocess(g, k, pcfg);
    Instance& inst = P.inst;

    res.stats.kernel_vertices = inst.graph.num_vertices();
    res.stats.kernel_edges = inst.graph.num_edges();
    res.stats.lb_disjoint = P.lb_disjoint;
    res.stats.lb_bipartite = P.lb_bipartite;

    auto wrap_up = [&](int theta, const std::vector<int>& kernel_set, SolveStatus status, int lb,
                       int ub) {
        res.theta = theta;
        res.status = status;
        res.lb = lb;
        res.ub = ub;
        res.interdiction_set = inst.forced;
        for (int v : kernel_set) res.interdiction_set.push_back(inst.id_map[v]);
        std::sort(res.interdiction_set.begin(), res.interdiction_set.end());
        res.stats.stages = inst.stage_stats;
        res.stats.search_nodes = limits.nodes;
        res.stats.seconds = std::chrono::duration<double>(Clock::now() - t0).count();
        return res;
    };

    if (P.theta_decided >= 0)
        return wrap_up(P.theta_decided, P.decided_set, SolveStatus::optimal, P.theta_decided,
                       P.theta_decided);

    const Graph& kernel = inst.graph;
    int n = kernel.num_vertices();

    // pool: bound families mapped onto the kernel; surviving members of a
    // clique still form one
    std::unordered_map<int, int> to_kernel;
    to_kernel.reserve(inst.id_map.size());
    for (int i = 0; i < n; ++i) to_kernel[inst.id_map[i]] = i;
    std::vector<Clique> pool;
    auto seed = [&](const CliqueFamily& fam) {
        for (const auto& c : fam.cliques) {
            Clique mc;
            for (int v : c.vertices) {
                auto it = to_kernel.find(v);
                if (it != to_kernel.end()) mc.vertices.push_back(it->second);
            }
            if (mc.size() < 2) continue;
            std::sort(mc.vertices.begin(), mc.vertices.end());
            if (is_clique(kernel, mc.vertices)) pool.push_back(std::move(mc));
        }
    };
    seed(P.family_a);
    seed(P.family_b);
    if (pool.empty()) {
        CliqueFamily fresh = greedy_disjoint_cliques(kernel, make_order(kernel, cfg.seed_order));
        for (auto& c : fresh.cliques)
            if (c.size() >= 2) pool.push_back(c);
    }

    MasterProblem mp;
    mp.n = n;
    mp.pool = std::move(pool);
    mp.dominators = P.dominators;
    mp.k = inst.k;

    int y = std::max({inst.lb, P.lb_disjoint, P.lb_bipartite, 1});
    for (const auto& c : mp.pool) y = std::max(y, c.size() - inst.k);

    // removing nothing bounds theta by omega(kernel) <= n; sharpened as
    // separation reports true clique numbers
    int ub = n;
    std::vector<int> ub_witness; // kernel ids achieving ub

    while (true) {
        if (y >= ub)
            return wrap_up(ub, ub_witness, SolveStatus::optimal, ub, ub);
        if (limits.interrupted)
            return wrap_up(ub, ub_witness, SolveStatus::timeout, y, ub);

        MasterOutcome m = master_solve(mp, y, &limits);
        ++res.stats.master_iterations;
        if (m.resource_limited)
            return wrap_up(ub, ub_witness, SolveStatus::timeout, y, ub);
        if (!m.feasible) {
            ++y;
            continue;
        }

        std::vector<int> survivors;
        survivors.reserve(n - m.removed.size());
        {
            std::size_t j = 0;
            for (int v = 0; v < n; ++v) {
                if (j < m.removed.size() && m.removed[j] == v) {
                    ++j;
                    continue;
                }
                survivors.push_back(v);
            }
        }
        ++res.stats.separation_calls;
        auto cut = separate(kernel, survivors, y, &limits);
        if (limits.interrupted)
            return wrap_up(ub, ub_witness, SolveStatus::timeout, y, ub);
        if (!cut)
            return wrap_up(y, m.removed, SolveStatus::optimal, y, y);

        int s = cut->size(); // omega(kernel minus witness), search ran to completion
        if (s < ub) {
            ub = s;
            ub_witness = m.removed;
        }
        mp.pool.push_back(*cut);
        y = std::max(y, s - inst.k);
    }
}

} // namespace cip

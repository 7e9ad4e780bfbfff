#ifndef CIP_SOLVER_HPP
#define CIP_SOLVER_HPP

#include <array>
#include <optional>
#include <vector>

#include "cip/bounds.hpp"
#include "cip/clique.hpp"
#include "cip/graph.hpp"
#include "cip/reduce.hpp"

namespace cip {

struct SolveConfig {
    double time_limit_seconds = 600.0;
    bool strong_triangle = false;
    TriangleStrength strong_mode = TriangleStrength::clique;
    VertexOrder seed_order = VertexOrder::deg_desc;
    int bitset_threshold = Graph::kDefaultBitsetThreshold;
    long long node_cap = -1; // joint budget over master and clique search nodes
};

enum class SolveStatus { optimal, timeout };

struct SolveStats {
    std::vector<StageStats> stages;
    long long master_iterations = 0;
    long long separation_calls = 0;
    long long search_nodes = 0;
    double seconds = 0.0;
    int kernel_vertices = 0;
    long long kernel_edges = 0;
    int lb_disjoint = 0;
    int lb_bipartite = 0;
};

struct SolveResult {
    int theta = 0;            // on timeout, the best value actually achieved
    std::vector<int> interdiction_set; // original ids, sorted
    SolveStatus status = SolveStatus::optimal;
    int lb = 0;
    int ub = 0;
    SolveStats stats;
};

// Restricted decision problem over an explicit clique pool: can at most k
// vertices be deleted so that every pool clique keeps at most target_y of its
// members, never deleting a vertex while one of its dominators survives?
struct MasterProblem {
    int n = 0; // vertex universe [0, n)
    std::vector<Clique> pool;
    std::vector<std::array<int, 2>> dominators; // (u,v): u dominates v
    int k = 0;
};

struct MasterOutcome {
    bool feasible = false;
    std::vector<int> removed; // sorted witness, only when feasible
    bool resource_limited = false;
    long long nodes = 0;
};

// Complete branch-and-bound: branch on which vertex of a most-violated pool
// clique to delete, prune with the disjoint-subfamily deficit and the
// two-family flow bound. Deleting a vertex drags its dominator closure along.
MasterOutcome master_solve(const MasterProblem& mp, int target_y,
                           SearchLimits* limits = nullptr);

// maximum clique among the survivors when it exceeds y, otherwise nothing
std::optional<Clique> separate(const Graph& g, const std::vector<int>& survivors, int y,
                               SearchLimits* limits = nullptr);

// Exact theta(G, k): preprocess to a kernel, seed the pool from the bound
// families, then scan y upward from the lower bound, alternating the master
// with maximum-clique separation until a master witness survives separation.
SolveResult solve(const Graph& g, int k, const SolveConfig& cfg = {});

} // namespace cip

#endif

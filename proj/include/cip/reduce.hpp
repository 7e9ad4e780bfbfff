#ifndef CIP_REDUCE_HPP
#define CIP_REDUCE_HPP

#include <array>
#include <string>
#include <vector>

#include "cip/bounds.hpp"
#include "cip/clique.hpp"
#include "cip/graph.hpp"

namespace cip {

struct StageStats {
    std::string stage;
    int vertices_removed = 0;
    int edges_removed = 0;
    double seconds = 0.0;
    long long pops = 0; // worklist pops, where the stage has one
};

// A partially reduced problem. theta(original graph, original k) equals
// theta(graph, k) at every point. Vertices in `removed_free` were deleted
// because no optimal interdiction set needs them; vertices in `forced` belong
// to some optimal set and have already spent budget, so
// |forced| = original k - k.
struct Instance {
    Graph graph;
    int k = 0;
    int lb = 0; // valid lower bound on theta(graph, k)
    std::vector<int> forced;       // original ids
    std::vector<int> removed_free; // original ids
    std::vector<int> id_map;       // kernel id -> original id
    std::vector<StageStats> stage_stats;
    int bitset_threshold = Graph::kDefaultBitsetThreshold;
};

Instance make_instance(const Graph& g, int k,
                       int bitset_threshold = Graph::kDefaultBitsetThreshold);

// Worklist over both vertices and edges: drop vertices of degree <= lb-2 and
// edges with at most lb-3 common neighbors, maintaining degrees and per-edge
// triangle counts incrementally until neither rule fires.
void degree_triangle_reduce(Instance& inst);

// Queue-driven removal under a dynamically adjusted coloring: a popped vertex
// is deleted when its saturation is at most lb-2, otherwise recolored to the
// smallest valid color; neighbors requeue when a relevant color frees up or
// their saturation drops to the threshold.
void color_reduce(Instance& inst, const Coloring& coloring);

// One pass removing every vertex whose neighborhood clique bound is at most
// lb-2. Removals cannot make further vertices eligible, so a single pass over
// precomputed values is complete.
void exact_clique_reduce(Instance& inst, const NeighborhoodCliqueSizes& nbr);

// Force vertices whose neighborhood clique number exceeds that of every
// non-neighbor by more than the remaining budget: such a vertex sits in every
// maximum clique left standing, so it joins the interdiction set and k drops
// by one. Re-evaluates with the decremented budget before the next removal.
void interdiction_reduce(Instance& inst, const NeighborhoodCliqueSizes& nbr);

// Ordered pairs (u, v) where u strictly dominates v: N(v) a proper subset of
// N(u), or N[v] a proper subset of N[u]. The solver reads each pair as "never
// interdict v while u survives".
std::vector<std::array<int, 2>> domination_pairs(const Graph& g);

enum class TriangleStrength { clique, color };

// Stronger edge rule: delete edges whose common neighborhood has clique
// number (or color count) at most lb-3. One batch pass; the plain triangle
// rule already handles the cheap cases.
void triangle_strong_reduce(Instance& inst, TriangleStrength mode);

struct PreprocessConfig {
    bool strong_triangle = false;
    TriangleStrength strong_mode = TriangleStrength::clique;
    VertexOrder seed_order = VertexOrder::deg_desc; // for the greedy families
    int bitset_threshold = Graph::kDefaultBitsetThreshold;
    SearchLimits* limits = nullptr;
};

struct PreprocessResult {
    Instance inst;
    int lb_disjoint = 0;  // from the final bound computation on the kernel
    int lb_bipartite = 0;
    CliqueFamily family_a; // original ids; feed the solver's clique pool
    CliqueFamily family_b;
    std::vector<std::array<int, 2>> dominators; // kernel ids
    int theta_decided = -1;        // >= 0 when the pipeline settled theta
    std::vector<int> decided_set;  // kernel part of the witness, kernel ids
};

// Stage order: disjoint bound, degree+triangle, color, optional strong
// triangle, bipartite bound (a raised lb reruns the middle stages once),
// clique, interdiction, domination pairs. An empty kernel or k >= kernel size
// decides theta = 0 on the spot.
PreprocessResult preprocess(const Graph& g, int k, const PreprocessConfig& cfg = {});

} // namespace cip

#endif

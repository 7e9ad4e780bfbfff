#ifndef CIP_CLIQUE_HPP
#define CIP_CLIQUE_HPP

#include <chrono>
#include <vector>

#include "cip/graph.hpp"

namespace cip {

// Deadline/node budget shared by the exact searches. A null pointer means
// unlimited. When a search trips the budget it sets `interrupted` and returns
// its best-so-far, which is then a valid clique but not a proven optimum.
struct SearchLimits {
    std::chrono::steady_clock::time_point deadline{};
    bool has_deadline = false;
    long long node_cap = -1; // <0: unlimited
    long long nodes = 0;
    bool interrupted = false;

    bool charge() {
        ++nodes;
        if (node_cap >= 0 && nodes > node_cap) interrupted = true;
        if (has_deadline && (nodes & 1023) == 0 &&
            std::chrono::steady_clock::now() >= deadline)
            interrupted = true;
        return !interrupted;
    }
};

enum class VertexOrder { deg_desc, deg_asc, id };

// permutation of V under the given policy; degree ties break on ascending id
std::vector<int> make_order(const Graph& g, VertexOrder ord);

struct Coloring {
    std::vector<int> color;      // 1-based
    int num_colors = 0;
    std::vector<int> saturation; // ds_c(u): distinct colors over N(u)
};

// Sequential greedy coloring along `order`: each vertex takes the smallest
// color absent from its already-colored neighbors.
Coloring greedy_coloring(const Graph& g, const std::vector<int>& order);

struct Clique {
    std::vector<int> vertices; // sorted
    int size() const { return int(vertices.size()); }
};

struct CliqueFamily {
    std::vector<Clique> cliques;
    bool disjoint = false;
};

// Exact maximum clique: branch-and-bound with a greedy coloring bound over
// bitset adjacency; graphs above the bitset threshold are decomposed along a
// degeneracy order into small right-neighborhood subproblems.
//
// `at_least` primes the incumbent: subtrees that cannot beat it are pruned,
// and an empty clique comes back whenever omega(G) <= at_least. Callers that
// need the true maximum pass at_least = 0.
Clique max_clique(const Graph& g, int at_least = 0, SearchLimits* limits = nullptr);

// maximum clique of the subgraph induced by `subset` (vertex ids of g)
Clique max_clique_in_subset(const Graph& g, const std::vector<int>& subset,
                            int at_least = 0, SearchLimits* limits = nullptr);

struct NeighborhoodCliqueSizes {
    std::vector<int> value;   // upper bound on omega(G[N(u)])
    std::vector<bool> exact;  // true when the bound is attained
};

// omega(G[N(u)]) for every vertex. Each per-neighborhood search is primed at
// lb-2, so a value at most lb-2 comes back as the cap itself with exact set
// to false, which is all the reduction rules need. Entries cut short by
// `limits` degrade to the degree bound.
NeighborhoodCliqueSizes neighborhood_clique_sizes(const Graph& g, int lb,
                                                  SearchLimits* limits = nullptr);

// First-fit disjoint clique partition: scanning `seed_order`, a vertex joins
// the earliest existing clique it is adjacent to in full, else opens a
// singleton. Covers every vertex exactly once.
CliqueFamily greedy_disjoint_cliques(const Graph& g, const std::vector<int>& seed_order);

bool is_clique(const Graph& g, const std::vector<int>& vertices);

} // namespace cip

#endif

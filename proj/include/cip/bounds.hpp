#ifndef CIP_BOUNDS_HPP
#define CIP_BOUNDS_HPP

#include <algorithm>

#include "cip/clique.hpp"
#include "cip/graph.hpp"

namespace cip {

// f(C, y): how many vertices must go so that no clique of the family keeps
// more than y of its own
long long coverage_deficit(const CliqueFamily& fam, int y);

// smallest y whose deficit fits the budget k; a lower bound on theta(G, k)
// when the family is vertex-disjoint
int disjoint_lower_bound(const CliqueFamily& fam, int k);

// Removal credit shareable between two disjoint families: max flow on the
// network source -> C1 -> C2 -> sink, where a clique's terminal capacity is
// its deficit |C|-y and the middle capacities are the intersection sizes.
long long family_overlap(const CliqueFamily& c1, const CliqueFamily& c2, int y);

// f(C1,y) + f(C2,y) - overlap: vertices needed to satisfy both families at
// once, counting shared vertices once
long long combined_deficit(const CliqueFamily& c1, const CliqueFamily& c2, int y);

// smallest y whose combined deficit fits k; dominates the disjoint bound of
// either family alone
int bipartite_lower_bound(const CliqueFamily& c1, const CliqueFamily& c2, int k);

struct BoundReport {
    int lb_disjoint = 0;
    int lb_bipartite = 0;
    CliqueFamily family_a;
    CliqueFamily family_b;
    int lb() const { return std::max(lb_disjoint, lb_bipartite); }
};

// Greedy disjoint families under two different seed orders plus the lower
// bounds they yield.
BoundReport compute_bounds(const Graph& g, int k,
                           VertexOrder primary = VertexOrder::deg_desc,
                           VertexOrder secondary = VertexOrder::deg_asc);

} // namespace cip

#endif

#ifndef CIP_ORACLE_HPP
#define CIP_ORACLE_HPP

#include <vector>

#include "cip/graph.hpp"

namespace cip {

struct BudgetError : std::runtime_error {
    explicit BudgetError(const std::string& msg) : std::runtime_error(msg) {}
};

// Hard caps for the brute-force routines. They exist for desk-scale ground
// truth only and refuse anything larger instead of running forever.
struct OracleBudget {
    int max_vertices_omega = 16;
    int max_vertices_theta = 14;
    int max_k = 4;
};

// Exact clique number by exhaustive enumeration.
int brute_force_omega(const Graph& g, const OracleBudget& budget = {});

struct ThetaWitness {
    int theta = 0;
    std::vector<int> removed; // one optimal interdiction set, sorted
};

// Exact min over |S| <= k of omega(G - S), enumerating subsets of size
// exactly min(k, n); removing more vertices never increases the clique number.
ThetaWitness brute_force_theta(const Graph& g, int k, const OracleBudget& budget = {});

// Second, independent enumeration over all subsets of size <= k. Cross-checks
// brute_force_theta so the ground truth has no single point of failure.
ThetaWitness brute_force_theta_all_subsets(const Graph& g, int k,
                                           const OracleBudget& budget = {});

} // namespace cip

#endif

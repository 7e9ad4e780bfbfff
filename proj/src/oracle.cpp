#include "cip/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

namespace cip {

namespace {

// max clique size within the vertices of `alive`, plain recursion on the
// candidate mask; adj is the bitmask adjacency of a graph with n <= 32
int omega_masked(const std::vector<std::uint32_t>& adj, std::uint32_t alive) {
    if (alive == 0) return 0;
    int v = std::countr_zero(alive);
    std::uint32_t rest = alive & (alive - 1);
    int without = omega_masked(adj, rest);
    int with = 1 + omega_masked(adj, rest & adj[v]);
    return std::max(without, with);
}

std::vector<std::uint32_t> mask_adjacency(const Graph& g) {
    std::vector<std::uint32_t> adj(g.num_vertices(), 0);
    for (int u = 0; u < g.num_vertices(); ++u)
        for (int v : g.neighbors(u)) adj[u] |= (std::uint32_t{1} << v);
    return adj;
}

std::vector<int> mask_to_vertices(std::uint32_t mask) {
    std::vector<int> out;
    while (mask) {
        out.push_back(std::countr_zero(mask));
        mask &= mask - 1;
    }
    return out;
}

} // namespace

int brute_force_omega(const Graph& g, const OracleBudget& budget) {
    int n = g.num_vertices();
    if (n > budget.max_vertices_omega)
        throw BudgetError("brute_force_omega: " + std::to_string(n) + " vertices exceeds budget " +
                          std::to_string(budget.max_vertices_omega));
    auto adj = mask_adjacency(g);
    return omega_masked(adj, n == 32 ? ~std::uint32_t{0} : (std::uint32_t{1} << n) - 1);
}

ThetaWitness brute_force_theta(const Graph& g, int k, const OracleBudget& budget) {
    int n = g.num_vertices();
    if (n > budget.max_vertices_theta)
        throw BudgetError("brute_force_theta: " + std::to_string(n) + " vertices exceeds budget " +
                          std::to_string(budget.max_vertices_theta));
    if (k > budget.max_k)
        throw BudgetError("brute_force_theta: k=" + std::to_string(k) + " exceeds budget " +
                          std::to_string(budget.max_k));
    if (k < 0) throw InputError("brute_force_theta: negative k");

    auto adj = mask_adjacency(g);
    std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;
    int r = std::min(k, n);

    ThetaWitness best;
    best.theta = n + 1;
    // iterate all subsets of size exactly r
    std::vector<int> pick(r);
    for (int i = 0; i < r; ++i) pick[i] = i;
    while (true) {
        std::uint32_t removed = 0;
        for (int i : pick) removed |= (std::uint32_t{1} << i);
        int w = omega_masked(adj, full & ~removed);
        if (w < best.theta) {
            best.theta = w;
            best.removed = mask_to_vertices(removed);
        }
        if (r == 0) break;
        // next combination
        int i = r - 1;
        while (i >= 0 && pick[i] == n - r + i) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < r; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (best.theta == n + 1) best.theta = 0; // n == 0
    return best;
}

ThetaWitness brute_force_theta_all_subsets(const Graph& g, int k, const OracleBudget& budget) {
    int n = g.num_vertices();
    if (n > budget.max_vertices_theta)
        throw BudgetError("brute_force_theta_all_subsets: " + std::to_string(n) +
                          " vertices exceeds budget " + std::to_string(budget.max_vertices_theta));
    if (k > budget.max_k)
        throw BudgetError("brute_force_theta_all_subsets: k=" + std::to_string(k) +
                          " exceeds budget " + std::to_string(budget.max_k));
    if (k < 0) throw InputError("brute_force_theta_all_subsets: negative k");

    auto adj = mask_adjacency(g);
    std::uint32_t full = n == 0 ? 0 : (std::uint32_t{1} << n) - 1;

    ThetaWitness best;
    best.theta = n + 1;
    for (std::uint32_t removed = 0;; ++removed) {
        if (std::popcount(removed) <= k) {
            int w = omega_masked(adj, full & ~removed);
            if (w < best.theta) {
                best.theta = w;
                best.removed = mask_to_vertices(removed);
            }
        }
        if (removed == full) break;
    }
    if (best.theta == n + 1) best.theta = 0;
    return best;
}

} // namespace cip

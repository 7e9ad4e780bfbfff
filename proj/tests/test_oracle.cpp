#include "doctest.h"

#include "cip/oracle.hpp"
#include "test_support.hpp"

using namespace cip;

TEST_CASE("brute_force_omega on named graphs") {
    CHECK(brute_force_omega(ts::complete(5)) == 5);
    CHECK(brute_force_omega(ts::cycle(5)) == 2);
    CHECK(brute_force_omega(ts::cycle(3)) == 3);
    CHECK(brute_force_omega(ts::petersen()) == 2);
    CHECK(brute_force_omega(ts::complete_bipartite(3, 3)) == 2);
    CHECK(brute_force_omega(ts::make(4, {})) == 1);
    CHECK(brute_force_omega(ts::make(0, {})) == 0);
}

TEST_CASE("brute_force_omega agrees with mask enumeration") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        Graph g = ts::er(10, 0.45, 100 + seed);
        CHECK(brute_force_omega(g) == ts::naive_omega(g));
    }
}

TEST_CASE("theta on complete graphs drops one per removal") {
    Graph g = ts::complete(5);
    for (int k = 0; k <= 4; ++k) {
        ThetaWitness w = brute_force_theta(g, k);
        CHECK(w.theta == 5 - k);
        CHECK((int)w.removed.size() <= k);
    }
}

TEST_CASE("theta on the five-cycle") {
    Graph g = ts::cycle(5);
    CHECK(brute_force_theta(g, 0).theta == 2);
    CHECK(brute_force_theta(g, 1).theta == 2);
    CHECK(brute_force_theta(g, 2).theta == 2);
    CHECK(brute_force_theta(g, 3).theta == 1);
    CHECK(brute_force_theta(g, 4).theta == 1);
}

TEST_CASE("witness certifies the reported theta") {
    for (unsigned seed = 0; seed < 15; ++seed) {
        Graph g = ts::er(9, 0.5, 200 + seed);
        for (int k : {1, 3}) {
            ThetaWitness w = brute_force_theta(g, k);
            CHECK((int)w.removed.size() <= k);
            CHECK(std::is_sorted(w.removed.begin(), w.removed.end()));
            CHECK(brute_force_omega(ts::without(g, w.removed)) == w.theta);
        }
    }
}

TEST_CASE("the two enumerations agree") {
    for (unsigned seed = 0; seed < 25; ++seed) {
        Graph g = ts::er(8, 0.4, 300 + seed);
        for (int k = 0; k <= 3; ++k) {
            ThetaWitness a = brute_force_theta(g, k);
            ThetaWitness b = brute_force_theta_all_subsets(g, k);
            CHECK(a.theta == b.theta);
        }
    }
}

TEST_CASE("theta never increases with budget") {
    for (unsigned seed = 0; seed < 10; ++seed) {
        Graph g = ts::er(9, 0.55, 400 + seed);
        int prev = brute_force_theta(g, 0).theta;
        for (int k = 1; k <= 3; ++k) {
            int cur = brute_force_theta(g, k).theta;
            CHECK(cur <= prev);
            prev = cur;
        }
    }
}

TEST_CASE("budget refusals") {
    CHECK_THROWS_AS(brute_force_omega(ts::er(17, 0.2, 1)), BudgetError);
    CHECK_THROWS_AS(brute_force_theta(ts::er(15, 0.2, 1), 2), BudgetError);
    CHECK_THROWS_AS(brute_force_theta(ts::er(10, 0.2, 1), 5), BudgetError);
    CHECK_THROWS_AS(brute_force_theta_all_subsets(ts::er(15, 0.2, 1), 2), BudgetError);
    CHECK_NOTHROW(brute_force_omega(ts::er(16, 0.2, 1)));
}

TEST_CASE("negative k is rejected") {
    CHECK_THROWS_AS(brute_force_theta(ts::complete(4), -1), InputError);
}

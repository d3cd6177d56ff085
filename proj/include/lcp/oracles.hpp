#pragma once

#include <span>

#include "lcp/problems.hpp"

namespace lcp {

struct OracleResult {
    double cost = 0.0;
    std::vector<int> order;
    uint64_t states_explored = 0;
};

/// Exact TSP optimum by dynamic programming over subsets. N <= 16.
OracleResult exact_tsp(const TspInstance& inst);

/// Exact TSP optimum by permutation enumeration (lexicographic tie-break).
/// N <= 10; used to cross-check exact_tsp.
OracleResult enumerate_tsp(const TspInstance& inst);

/// Shortest fixed-endpoint path start -> interiors (any order) -> dest, by
/// enumerating interior permutations. l <= 10. Ties resolve to the
/// lexicographically smallest interior order (by position in `interiors`).
OracleResult exact_segment(const Point& start, const Point& dest, std::span<const Point> interiors);

/// First-improvement 2-opt descent to a local optimum.
std::vector<int> two_opt(const TspInstance& inst, std::vector<int> order);

/// Greedy nearest-unvisited tour; equidistant ties pick the lowest index.
std::vector<int> nearest_neighbor(const TspInstance& inst, int start);

/// Exhaustive PCTSP optimum over visit subsets and orders. N <= 8.
OracleResult exact_small_pctsp(const PctspInstance& inst);

/// Exhaustive CVRP optimum over permutations with optimal capacity splits.
/// N <= 8. The returned order uses the depot index N as separator.
OracleResult exact_small_cvrp(const CvrpInstance& inst);

}  // namespace lcp

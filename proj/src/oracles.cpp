#include "lcp/oracles.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace lcp {

namespace {

double path_cost(const std::vector<Point>& coords, const std::vector<int>& order, bool closed) {
    double total = 0.0;
    for (size_t t = 0; t + 1 < order.size(); ++t) total += dist(coords[order[t]], coords[order[t + 1]]);
    if (closed && order.size() > 1) total += dist(coords[order.back()], coords[order.front()]);
    return total;
}

}  // namespace

OracleResult exact_tsp(const TspInstance& inst) {
    const int n = inst.size();
    if (n > 16) throw ValidationError("exact_tsp limited to N <= 16, got " + std::to_string(n));
    if (n == 2) {
        OracleResult res;
        res.order = {0, 1};
        res.cost = tsp_tour_length(inst, {ProblemKind::Tsp, res.order, {}});
        res.states_explored = 1;
        return res;
    }
    const int full = 1 << n;
    const double inf = std::numeric_limits<double>::infinity();
    // dp[mask][last]: cheapest path from node 0 through `mask`, ending at `last`.
    std::vector<double> dp(static_cast<size_t>(full) * n, inf);
    std::vector<int8_t> parent(static_cast<size_t>(full) * n, -1);
    dp[(1u << 0) * static_cast<size_t>(n) + 0] = 0.0;
    uint64_t states = 0;
    for (int mask = 1; mask < full; ++mask) {
        if (!(mask & 1)) continue;
        for (int last = 0; last < n; ++last) {
            const double cur = dp[static_cast<size_t>(mask) * n + last];
            if (cur == inf) continue;
            ++states;
            for (int next = 1; next < n; ++next) {
                if (mask & (1 << next)) continue;
                const int nmask = mask | (1 << next);
                const double cand = cur + dist(inst.coords[last], inst.coords[next]);
                double& slot = dp[static_cast<size_t>(nmask) * n + next];
                if (cand < slot) {
                    slot = cand;
                    parent[static_cast<size_t>(nmask) * n + next] = static_cast<int8_t>(last);
                }
            }
        }
    }
    double best = inf;
    int best_last = -1;
    for (int last = 1; last < n; ++last) {
        const double cand = dp[static_cast<size_t>(full - 1) * n + last] + dist(inst.coords[last], inst.coords[0]);
        if (cand < best) {
            best = cand;
            best_last = last;
        }
    }
    std::vector<int> order(static_cast<size_t>(n));
    int mask = full - 1;
    int cur = best_last;
    for (int pos = n - 1; pos >= 0; --pos) {
        order[static_cast<size_t>(pos)] = cur;
        const int prev = parent[static_cast<size_t>(mask) * n + cur];
        mask ^= 1 << cur;
        cur = prev;
    }
    // Canonical orientation: tour starts at 0 and runs toward its smaller neighbor.
    if (n > 2 && order[1] > order[n - 1]) std::reverse(order.begin() + 1, order.end());
    OracleResult res;
    res.order = std::move(order);
    res.cost = tsp_tour_length(inst, {ProblemKind::Tsp, res.order, {}});
    res.states_explored = states;
    return res;
}

OracleResult enumerate_tsp(const TspInstance& inst) {
    const int n = inst.size();
    if (n > 10) throw ValidationError("enumerate_tsp limited to N <= 10, got " + std::to_string(n));
    std::vector<int> rest(static_cast<size_t>(n - 1));
    std::iota(rest.begin(), rest.end(), 1);
    std::vector<int> order(static_cast<size_t>(n));
    order[0] = 0;
    OracleResult res;
    res.cost = std::numeric_limits<double>::infinity();
    do {
        std::copy(rest.begin(), rest.end(), order.begin() + 1);
        const double cost = path_cost(inst.coords, order, true);
        ++res.states_explored;
        if (cost < res.cost) {
            res.cost = cost;
            res.order = order;
        }
    } while (std::next_permutation(rest.begin(), rest.end()));
    res.cost = tsp_tour_length(inst, {ProblemKind::Tsp, res.order, {}});
    return res;
}

OracleResult exact_segment(const Point& start, const Point& dest, std::span<const Point> interiors) {
    const int l = static_cast<int>(interiors.size());
    if (l > 10) throw ValidationError("exact_segment limited to l <= 10, got " + std::to_string(l));
    OracleResult res;
    if (l == 0) {
        res.cost = dist(start, dest);
        return res;
    }
    std::vector<int> perm(static_cast<size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    res.cost = std::numeric_limits<double>::infinity();
    do {
        double cost = dist(start, interiors[perm[0]]);
        for (int t = 0; t + 1 < l; ++t) cost += dist(interiors[perm[t]], interiors[perm[t + 1]]);
        cost += dist(interiors[perm[static_cast<size_t>(l - 1)]], dest);
        ++res.states_explored;
        if (cost < res.cost) {
            res.cost = cost;
            res.order = perm;
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    return res;
}

std::vector<int> two_opt(const TspInstance& inst, std::vector<int> order) {
    const int n = inst.size();
    tsp_tour_length(inst, {ProblemKind::Tsp, order, {}});  // validates
    if (n < 4) return order;
    const auto& c = inst.coords;
    bool improved = true;
    while (improved) {
        improved = false;
        for (int i = 0; i < n - 1 && !improved; ++i) {
            const int prev = order[(i + n - 1) % n];
            for (int j = i + 1; j < n; ++j) {
                if (i == 0 && j == n - 1) continue;  // full reversal is a no-op
                const int next = order[(j + 1) % n];
                const double delta = dist(c[prev], c[order[j]]) + dist(c[order[i]], c[next]) -
                                     dist(c[prev], c[order[i]]) - dist(c[order[j]], c[next]);
                if (delta < -1e-12) {
                    std::reverse(order.begin() + i, order.begin() + j + 1);
                    improved = true;
                    break;
                }
            }
        }
    }
    return order;
}

std::vector<int> nearest_neighbor(const TspInstance& inst, int start) {
    const int n = inst.size();
    if (start < 0 || start >= n) throw ValidationError("start index out of range");
    std::vector<uint8_t> visited(static_cast<size_t>(n), 0);
    std::vector<int> order;
    order.reserve(static_cast<size_t>(n));
    int cur = start;
    visited[static_cast<size_t>(cur)] = 1;
    order.push_back(cur);
    for (int step = 1; step < n; ++step) {
        int best = -1;
        double best_d = std::numeric_limits<double>::infinity();
        for (int i = 0; i < n; ++i) {
            if (visited[static_cast<size_t>(i)]) continue;
            const double d = dist(inst.coords[cur], inst.coords[i]);
            if (d < best_d) {
                best_d = d;
                best = i;
            }
        }
        visited[static_cast<size_t>(best)] = 1;
        order.push_back(best);
        cur = best;
    }
    return order;
}

OracleResult exact_small_pctsp(const PctspInstance& inst) {
    const int n = inst.size();
    if (n > 8) throw ValidationError("exact_small_pctsp limited to N <= 8, got " + std::to_string(n));
    const double total_penalty = std::accumulate(inst.penalties.begin(), inst.penalties.end(), 0.0);
    OracleResult res;
    res.cost = std::numeric_limits<double>::infinity();
    for (int subset = 0; subset < (1 << n); ++subset) {
        double prize = 0.0;
        double skipped_penalty = total_penalty;
        std::vector<int> members;
        for (int i = 0; i < n; ++i) {
            if (subset & (1 << i)) {
                prize += inst.prizes[static_cast<size_t>(i)];
                skipped_penalty -= inst.penalties[static_cast<size_t>(i)];
                members.push_back(i);
            }
        }
        if (prize < inst.min_prize) continue;
        if (members.empty()) {
            ++res.states_explored;
            if (skipped_penalty < res.cost) {
                res.cost = skipped_penalty;
                res.order.clear();
            }
            continue;
        }
        std::sort(members.begin(), members.end());
        do {
            double cost = dist(inst.depot, inst.coords[members.front()]);
            for (size_t t = 0; t + 1 < members.size(); ++t)
                cost += dist(inst.coords[members[t]], inst.coords[members[t + 1]]);
            cost += dist(inst.coords[members.back()], inst.depot);
            cost += skipped_penalty;
            ++res.states_explored;
            if (cost < res.cost) {
                res.cost = cost;
                res.order = members;
            }
        } while (std::next_permutation(members.begin(), members.end()));
    }
    res.cost = pctsp_objective(inst, {ProblemKind::Pctsp, res.order, {}});
    return res;
}

OracleResult exact_small_cvrp(const CvrpInstance& inst) {
    const int n = inst.size();
    if (n > 8) throw ValidationError("exact_small_cvrp limited to N <= 8, got " + std::to_string(n));
    std::vector<int> perm(static_cast<size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    const double inf = std::numeric_limits<double>::infinity();
    OracleResult res;
    res.cost = inf;
    std::vector<double> best_to(static_cast<size_t>(n + 1));
    std::vector<int> split_from(static_cast<size_t>(n + 1));
    do {
        // Optimal split of this visit sequence into capacity-feasible
        // consecutive sub-tours (shortest-path DP over cut points).
        best_to[0] = 0.0;
        for (int i = 1; i <= n; ++i) {
            best_to[static_cast<size_t>(i)] = inf;
            double demand = 0.0;
            for (int j = i - 1; j >= 0; --j) {
                demand += inst.demands[static_cast<size_t>(perm[j])];
                if (demand > inst.capacity) break;
                double chunk = dist(inst.depot, inst.coords[perm[j]]);
                for (int t = j; t + 1 < i; ++t) chunk += dist(inst.coords[perm[t]], inst.coords[perm[t + 1]]);
                chunk += dist(inst.coords[perm[i - 1]], inst.depot);
                const double cand = best_to[static_cast<size_t>(j)] + chunk;
                if (cand < best_to[static_cast<size_t>(i)]) {
                    best_to[static_cast<size_t>(i)] = cand;
                    split_from[static_cast<size_t>(i)] = j;
                }
            }
        }
        ++res.states_explored;
        if (best_to[static_cast<size_t>(n)] < res.cost) {
            res.cost = best_to[static_cast<size_t>(n)];
            res.order.clear();
            std::vector<std::pair<int, int>> chunks;
            for (int i = n; i > 0; i = split_from[static_cast<size_t>(i)])
                chunks.emplace_back(split_from[static_cast<size_t>(i)], i);
            std::reverse(chunks.begin(), chunks.end());
            for (size_t ci = 0; ci < chunks.size(); ++ci) {
                if (ci > 0) res.order.push_back(n);
                for (int t = chunks[ci].first; t < chunks[ci].second; ++t) res.order.push_back(perm[t]);
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    res.cost = cvrp_objective(inst, {ProblemKind::Cvrp, res.order, {}});
    return res;
}

}  // namespace lcp

#pragma once

#include <variant>
#include <vector>

#include "lcp/common.hpp"
#include "lcp/rng.hpp"

namespace lcp {

/// N customer nodes in the unit square. Tours are cycles over all nodes.
struct TspInstance {
    std::vector<Point> coords;
    int size() const { return static_cast<int>(coords.size()); }
};

/// Customers carry a prize and a penalty; tours start and end at the depot,
/// may skip nodes, and must collect at least `min_prize`. Skipped nodes pay
/// their penalty.
struct PctspInstance {
    std::vector<Point> coords;
    Point depot;
    std::vector<double> prizes;
    std::vector<double> penalties;
    double min_prize = 1.0;
    int size() const { return static_cast<int>(coords.size()); }
};

/// Customers carry demands served by depot-anchored sub-tours whose demand
/// sums may not exceed the vehicle capacity.
struct CvrpInstance {
    std::vector<Point> coords;
    Point depot;
    std::vector<double> demands;
    double capacity = 0.0;
    int size() const { return static_cast<int>(coords.size()); }
};

using AnyInstance = std::variant<TspInstance, PctspInstance, CvrpInstance>;

ProblemKind kind_of(const AnyInstance& inst);
int num_customers(const AnyInstance& inst);

/// Per-step record written by sampling rollouts: log-probability of the taken
/// action and the analytic entropy of that step's distribution.
struct StepRecord {
    float log_prob = 0.0f;
    float entropy = 0.0f;
};

/// Node visit order plus optional per-step policy records.
///  - TSP:   `order` is a permutation of 0..N-1.
///  - PCTSP: `order` lists the visited customers; the tour implicitly starts
///           and ends at the depot.
///  - CVRP:  `order` lists customers with the depot index N separating
///           sub-tours (no leading/trailing depot entries).
struct Solution {
    ProblemKind kind = ProblemKind::Tsp;
    std::vector<int> order;
    std::vector<StepRecord> steps;
};

double tsp_tour_length(const TspInstance& inst, const Solution& sol);
double pctsp_objective(const PctspInstance& inst, const Solution& sol);
bool pctsp_feasible(const PctspInstance& inst, const Solution& sol);
double cvrp_objective(const CvrpInstance& inst, const Solution& sol);
bool cvrp_feasible(const CvrpInstance& inst, const Solution& sol);

double objective(const AnyInstance& inst, const Solution& sol);
bool feasible(const AnyInstance& inst, const Solution& sol);

/// Constructive-rollout state: partial order plus problem accumulators.
/// Actions are customer indices 0..N-1; PCTSP/CVRP additionally use the depot
/// action N. Accumulators stay recomputable from the partial order.
class MdpState {
public:
    explicit MdpState(const AnyInstance& inst);

    ProblemKind kind() const { return kind_; }
    int num_customers() const { return n_; }
    /// Number of selectable actions (N, or N+1 when a depot action exists).
    int num_actions() const { return kind_ == ProblemKind::Tsp ? n_ : n_ + 1; }
    int depot_action() const { return kind_ == ProblemKind::Tsp ? -1 : n_; }

    bool done() const;
    /// Applies an action; throws ProtocolError if it is masked.
    void apply(int action);

    /// mask[a] == 1 iff action a is currently selectable.
    /// Throws ProtocolError if nothing is selectable on a non-terminal state.
    std::vector<uint8_t> action_mask() const;

    /// Actions taken so far, in order. PCTSP's terminating depot action is
    /// not included; CVRP depot returns are.
    const std::vector<int>& order() const { return order_; }
    Solution to_solution() const;

    int last_action() const { return order_.empty() ? -1 : order_.back(); }
    int steps_taken() const { return steps_; }
    double collected_prize() const { return collected_prize_; }
    /// Remaining vehicle capacity, normalized to [0, 1].
    double remaining_capacity() const { return remaining_capacity_; }
    bool at_depot() const { return at_depot_; }
    int visited_count() const { return visited_count_; }
    bool visited(int customer) const { return visited_[static_cast<size_t>(customer)] != 0; }

private:
    const AnyInstance* inst_;
    ProblemKind kind_;
    int n_;
    std::vector<uint8_t> visited_;
    std::vector<int> order_;
    int visited_count_ = 0;
    int steps_ = 0;
    double collected_prize_ = 0.0;
    double remaining_capacity_ = 1.0;
    bool at_depot_ = true;
    bool terminated_ = false;
};

TspInstance generate_tsp(int n, Rng& rng);
PctspInstance generate_pctsp(int n, Rng& rng);
CvrpInstance generate_cvrp(int n, Rng& rng);
AnyInstance generate_instance(ProblemKind kind, int n, uint64_t seed);

/// Vehicle capacity used by the CVRP generator: 30/40/50 for N up to
/// 20/50/beyond.
double cvrp_capacity_for(int n);

/// One JSON object per line; reals at full precision. Round-trips losslessly.
void save_dataset(const std::string& path, const std::vector<AnyInstance>& instances);
std::vector<AnyInstance> load_dataset(const std::string& path);

std::string instance_to_json_line(const AnyInstance& inst);
AnyInstance instance_from_json_line(const std::string& line);

}  // namespace lcp

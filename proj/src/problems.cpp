#include "lcp/problems.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace lcp {

namespace {

using ordered_json = nlohmann::ordered_json;

/// Checks that `order` holds distinct customer indices in [0, n) and reports
/// the first offender by index. `require_all` additionally demands a full
/// permutation.
void validate_order(const std::vector<int>& order, int n, bool require_all) {
    std::vector<uint8_t> seen(static_cast<size_t>(n), 0);
    for (int v : order) {
        if (v < 0 || v >= n) throw ValidationError("node index out of range: " + std::to_string(v));
        if (seen[static_cast<size_t>(v)]) throw ValidationError("node visited twice: " + std::to_string(v));
        seen[static_cast<size_t>(v)] = 1;
    }
    if (require_all) {
        for (int i = 0; i < n; ++i) {
            if (!seen[static_cast<size_t>(i)]) throw ValidationError("node missing from tour: " + std::to_string(i));
        }
    }
}

std::vector<std::vector<int>> split_subtours(const std::vector<int>& order, int depot) {
    std::vector<std::vector<int>> tours;
    std::vector<int> current;
    for (int v : order) {
        if (v == depot) {
            if (!current.empty()) tours.push_back(std::move(current));
            current.clear();
        } else {
            current.push_back(v);
        }
    }
    if (!current.empty()) tours.push_back(std::move(current));
    return tours;
}

}  // namespace

ProblemKind kind_of(const AnyInstance& inst) {
    return std::visit(
        [](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, TspInstance>) return ProblemKind::Tsp;
            else if constexpr (std::is_same_v<T, PctspInstance>) return ProblemKind::Pctsp;
            else return ProblemKind::Cvrp;
        },
        inst);
}

int num_customers(const AnyInstance& inst) {
    return std::visit([](const auto& v) { return v.size(); }, inst);
}

double tsp_tour_length(const TspInstance& inst, const Solution& sol) {
    const int n = inst.size();
    if (static_cast<int>(sol.order.size()) != n)
        throw ValidationError("tour has " + std::to_string(sol.order.size()) + " nodes, expected " + std::to_string(n));
    validate_order(sol.order, n, true);
    double total = 0.0;
    for (int t = 0; t + 1 < n; ++t) total += dist(inst.coords[sol.order[t]], inst.coords[sol.order[t + 1]]);
    total += dist(inst.coords[sol.order[n - 1]], inst.coords[sol.order[0]]);
    return total;
}

double pctsp_objective(const PctspInstance& inst, const Solution& sol) {
    const int n = inst.size();
    validate_order(sol.order, n, false);
    double length = 0.0;
    if (!sol.order.empty()) {
        length += dist(inst.depot, inst.coords[sol.order.front()]);
        for (size_t t = 0; t + 1 < sol.order.size(); ++t)
            length += dist(inst.coords[sol.order[t]], inst.coords[sol.order[t + 1]]);
        length += dist(inst.coords[sol.order.back()], inst.depot);
    }
    std::vector<uint8_t> visited(static_cast<size_t>(n), 0);
    for (int v : sol.order) visited[static_cast<size_t>(v)] = 1;
    double penalty = 0.0;
    for (int i = 0; i < n; ++i) {
        if (!visited[static_cast<size_t>(i)]) penalty += inst.penalties[static_cast<size_t>(i)];
    }
    return length + penalty;
}

bool pctsp_feasible(const PctspInstance& inst, const Solution& sol) {
    validate_order(sol.order, inst.size(), false);
    double prize = 0.0;
    for (int v : sol.order) prize += inst.prizes[static_cast<size_t>(v)];
    return prize >= inst.min_prize;
}

double cvrp_objective(const CvrpInstance& inst, const Solution& sol) {
    const int n = inst.size();
    std::vector<int> customers;
    customers.reserve(sol.order.size());
    for (int v : sol.order) {
        if (v != n) customers.push_back(v);
    }
    validate_order(customers, n, true);
    const auto tours = split_subtours(sol.order, n);
    double total = 0.0;
    for (size_t i = 0; i < tours.size(); ++i) {
        const auto& tour = tours[i];
        double demand = 0.0;
        for (int v : tour) demand += inst.demands[static_cast<size_t>(v)];
        if (demand > inst.capacity)
            throw ValidationError("sub-tour " + std::to_string(i) + " exceeds capacity: demand " +
                                  std::to_string(demand) + " > " + std::to_string(inst.capacity));
        total += dist(inst.depot, inst.coords[tour.front()]);
        for (size_t t = 0; t + 1 < tour.size(); ++t)
            total += dist(inst.coords[tour[t]], inst.coords[tour[t + 1]]);
        total += dist(inst.coords[tour.back()], inst.depot);
    }
    return total;
}

bool cvrp_feasible(const CvrpInstance& inst, const Solution& sol) {
    for (const auto& tour : split_subtours(sol.order, inst.size())) {
        double demand = 0.0;
        for (int v : tour) demand += inst.demands[static_cast<size_t>(v)];
        if (demand > inst.capacity) return false;
    }
    return true;
}

double objective(const AnyInstance& inst, const Solution& sol) {
    switch (kind_of(inst)) {
        case ProblemKind::Tsp: return tsp_tour_length(std::get<TspInstance>(inst), sol);
        case ProblemKind::Pctsp: return pctsp_objective(std::get<PctspInstance>(inst), sol);
        case ProblemKind::Cvrp: return cvrp_objective(std::get<CvrpInstance>(inst), sol);
    }
    throw ProtocolError("unreachable");
}

bool feasible(const AnyInstance& inst, const Solution& sol) {
    switch (kind_of(inst)) {
        case ProblemKind::Tsp: {
            const int n = std::get<TspInstance>(inst).size();
            if (static_cast<int>(sol.order.size()) != n) return false;
            std::vector<uint8_t> seen(static_cast<size_t>(n), 0);
            for (int v : sol.order) {
                if (v < 0 || v >= n || seen[static_cast<size_t>(v)]) return false;
                seen[static_cast<size_t>(v)] = 1;
            }
            return true;
        }
        case ProblemKind::Pctsp: return pctsp_feasible(std::get<PctspInstance>(inst), sol);
        case ProblemKind::Cvrp: return cvrp_feasible(std::get<CvrpInstance>(inst), sol);
    }
    throw ProtocolError("unreachable");
}

MdpState::MdpState(const AnyInstance& inst)
    : inst_(&inst), kind_(kind_of(inst)), n_(lcp::num_customers(inst)), visited_(static_cast<size_t>(n_), 0) {}

bool MdpState::done() const {
    switch (kind_) {
        case ProblemKind::Tsp:
        case ProblemKind::Cvrp: return visited_count_ == n_;
        case ProblemKind::Pctsp: return terminated_;
    }
    return true;
}

std::vector<uint8_t> MdpState::action_mask() const {
    std::vector<uint8_t> mask(static_cast<size_t>(num_actions()), 0);
    bool any = false;
    switch (kind_) {
        case ProblemKind::Tsp: {
            for (int i = 0; i < n_; ++i) {
                if (!visited_[static_cast<size_t>(i)]) mask[static_cast<size_t>(i)] = 1, any = true;
            }
            break;
        }
        case ProblemKind::Pctsp: {
            for (int i = 0; i < n_; ++i) {
                if (!visited_[static_cast<size_t>(i)]) mask[static_cast<size_t>(i)] = 1, any = true;
            }
            const auto& inst = std::get<PctspInstance>(*inst_);
            if (collected_prize_ >= inst.min_prize) mask[static_cast<size_t>(n_)] = 1, any = true;
            break;
        }
        case ProblemKind::Cvrp: {
            const auto& inst = std::get<CvrpInstance>(*inst_);
            bool any_customer = false;
            for (int i = 0; i < n_; ++i) {
                if (visited_[static_cast<size_t>(i)]) continue;
                const double need = inst.demands[static_cast<size_t>(i)] / inst.capacity;
                if (need <= remaining_capacity_ + 1e-12) {
                    mask[static_cast<size_t>(i)] = 1;
                    any_customer = true;
                }
            }
            // Depot stays open as a capacity reset, except when the vehicle is
            // already there with a full load and customers are available.
            const bool full = remaining_capacity_ >= 1.0 - 1e-12;
            if (!(at_depot_ && full && any_customer) && visited_count_ < n_) mask[static_cast<size_t>(n_)] = 1;
            any = any_customer || mask[static_cast<size_t>(n_)];
            break;
        }
    }
    if (!any && !done()) throw ProtocolError("no feasible action on a non-terminal state");
    return mask;
}

void MdpState::apply(int action) {
    const auto mask = action_mask();
    if (action < 0 || action >= num_actions() || !mask[static_cast<size_t>(action)])
        throw ProtocolError("masked or out-of-range action applied: " + std::to_string(action));
    ++steps_;
    if (action == depot_action()) {
        if (kind_ == ProblemKind::Pctsp) {
            terminated_ = true;
        } else {
            order_.push_back(action);
            remaining_capacity_ = 1.0;
            at_depot_ = true;
        }
        return;
    }
    order_.push_back(action);
    visited_[static_cast<size_t>(action)] = 1;
    ++visited_count_;
    at_depot_ = false;
    if (kind_ == ProblemKind::Pctsp) {
        collected_prize_ += std::get<PctspInstance>(*inst_).prizes[static_cast<size_t>(action)];
    } else if (kind_ == ProblemKind::Cvrp) {
        const auto& inst = std::get<CvrpInstance>(*inst_);
        remaining_capacity_ -= inst.demands[static_cast<size_t>(action)] / inst.capacity;
    }
}

Solution MdpState::to_solution() const {
    Solution sol;
    sol.kind = kind_;
    sol.order = order_;
    // CVRP rollouts may end right after a depot return; strip the dangling separator.
    if (kind_ == ProblemKind::Cvrp) {
        while (!sol.order.empty() && sol.order.back() == n_) sol.order.pop_back();
    }
    return sol;
}

TspInstance generate_tsp(int n, Rng& rng) {
    if (n < 2) throw ValidationError("TSP instance needs at least 2 nodes");
    TspInstance inst;
    inst.coords.resize(static_cast<size_t>(n));
    for (auto& p : inst.coords) {
        p.x = rng.uniform();
        p.y = rng.uniform();
    }
    return inst;
}

namespace {
double pctsp_penalty_factor(int n) {
    // Penalty span scaling constant for N up to 20/50/beyond.
    const double k = n <= 20 ? 2.0 : (n <= 50 ? 4.0 : 9.0);
    return 3.0 * k / n;
}
}  // namespace

PctspInstance generate_pctsp(int n, Rng& rng) {
    if (n < 2) throw ValidationError("PCTSP instance needs at least 2 nodes");
    PctspInstance inst;
    inst.coords.resize(static_cast<size_t>(n));
    for (auto& p : inst.coords) {
        p.x = rng.uniform();
        p.y = rng.uniform();
    }
    inst.depot.x = rng.uniform();
    inst.depot.y = rng.uniform();
    const double penalty_span = pctsp_penalty_factor(n);
    inst.penalties.resize(static_cast<size_t>(n));
    for (auto& v : inst.penalties) v = rng.uniform(0.0, penalty_span);
    inst.min_prize = 1.0;
    inst.prizes.resize(static_cast<size_t>(n));
    // Resample until the instance is satisfiable (total prize covers the
    // minimum); at these parameters a retry is already rare.
    do {
        for (auto& v : inst.prizes) v = rng.uniform(0.0, 4.0 / n);
    } while (std::accumulate(inst.prizes.begin(), inst.prizes.end(), 0.0) < inst.min_prize);
    return inst;
}

double cvrp_capacity_for(int n) { return n <= 20 ? 30.0 : (n <= 50 ? 40.0 : 50.0); }

CvrpInstance generate_cvrp(int n, Rng& rng) {
    if (n < 2) throw ValidationError("CVRP instance needs at least 2 nodes");
    CvrpInstance inst;
    inst.coords.resize(static_cast<size_t>(n));
    for (auto& p : inst.coords) {
        p.x = rng.uniform();
        p.y = rng.uniform();
    }
    inst.depot.x = rng.uniform();
    inst.depot.y = rng.uniform();
    inst.demands.resize(static_cast<size_t>(n));
    for (auto& d : inst.demands) d = static_cast<double>(rng.uniform_int(1, 9));
    inst.capacity = cvrp_capacity_for(n);
    return inst;
}

AnyInstance generate_instance(ProblemKind kind, int n, uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
        case ProblemKind::Tsp: return generate_tsp(n, rng);
        case ProblemKind::Pctsp: return generate_pctsp(n, rng);
        case ProblemKind::Cvrp: return generate_cvrp(n, rng);
    }
    throw ValidationError("unsupported kind");
}

namespace {

ordered_json points_to_json(const std::vector<Point>& pts) {
    ordered_json arr = ordered_json::array();
    for (const auto& p : pts) arr.push_back(ordered_json::array({p.x, p.y}));
    return arr;
}

std::vector<Point> points_from_json(const ordered_json& arr) {
    std::vector<Point> pts;
    pts.reserve(arr.size());
    for (const auto& p : arr) pts.push_back({p.at(0).get<double>(), p.at(1).get<double>()});
    return pts;
}

}  // namespace

std::string instance_to_json_line(const AnyInstance& inst) {
    ordered_json j;
    j["kind"] = to_string(kind_of(inst));
    std::visit(
        [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            j["coords"] = points_to_json(v.coords);
            if constexpr (std::is_same_v<T, PctspInstance>) {
                j["depot"] = ordered_json::array({v.depot.x, v.depot.y});
                j["prizes"] = v.prizes;
                j["penalties"] = v.penalties;
                j["min_prize"] = v.min_prize;
            } else if constexpr (std::is_same_v<T, CvrpInstance>) {
                j["depot"] = ordered_json::array({v.depot.x, v.depot.y});
                j["demands"] = v.demands;
                j["capacity"] = v.capacity;
            }
        },
        inst);
    return j.dump();
}

AnyInstance instance_from_json_line(const std::string& line) {
    const ordered_json j = ordered_json::parse(line);
    const ProblemKind kind = problem_kind_from_string(j.at("kind").get<std::string>());
    switch (kind) {
        case ProblemKind::Tsp: {
            TspInstance inst;
            inst.coords = points_from_json(j.at("coords"));
            return inst;
        }
        case ProblemKind::Pctsp: {
            PctspInstance inst;
            inst.coords = points_from_json(j.at("coords"));
            inst.depot = {j.at("depot").at(0).get<double>(), j.at("depot").at(1).get<double>()};
            inst.prizes = j.at("prizes").get<std::vector<double>>();
            inst.penalties = j.at("penalties").get<std::vector<double>>();
            inst.min_prize = j.at("min_prize").get<double>();
            return inst;
        }
        case ProblemKind::Cvrp: {
            CvrpInstance inst;
            inst.coords = points_from_json(j.at("coords"));
            inst.depot = {j.at("depot").at(0).get<double>(), j.at("depot").at(1).get<double>()};
            inst.demands = j.at("demands").get<std::vector<double>>();
            inst.capacity = j.at("capacity").get<double>();
            return inst;
        }
    }
    throw ValidationError("unsupported kind");
}

void save_dataset(const std::string& path, const std::vector<AnyInstance>& instances) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot open for writing: " + path);
    for (const auto& inst : instances) out << instance_to_json_line(inst) << '\n';
}

std::vector<AnyInstance> load_dataset(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open for reading: " + path);
    std::vector<AnyInstance> instances;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        try {
            instances.push_back(instance_from_json_line(line));
        } catch (const std::exception& e) {
            throw ValidationError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    return instances;
}

}  // namespace lcp

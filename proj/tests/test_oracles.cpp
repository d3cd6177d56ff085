#include <doctest.h>

#include <numeric>

#include "lcp/oracles.hpp"

using namespace lcp;

TEST_SUITE("oracles") {

TEST_CASE("exact tsp on the unit square") {
    TspInstance inst{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    const auto res = exact_tsp(inst);
    CHECK(res.cost == doctest::Approx(4.0));
}

TEST_CASE("exact tsp on collinear points is twice the span") {
    TspInstance inst{{{0.1, 0}, {0.9, 0}, {0.4, 0}, {0.25, 0}, {0.7, 0}}};
    CHECK(exact_tsp(inst).cost == doctest::Approx(1.6));
}

TEST_CASE("held-karp agrees with enumeration on random instances") {
    Rng rng(31);
    for (int trial = 0; trial < 15; ++trial) {
        const auto inst = generate_tsp(9, rng);
        const auto dp = exact_tsp(inst);
        const auto brute = enumerate_tsp(inst);
        CHECK(dp.cost == doctest::Approx(brute.cost).epsilon(1e-12));
        CHECK(tsp_tour_length(inst, {ProblemKind::Tsp, dp.order, {}}) == doctest::Approx(dp.cost).epsilon(1e-12));
    }
}

TEST_CASE("random N=8 tour length equals the oracle-side recomputation") {
    Rng rng(8);
    const auto inst = generate_tsp(8, rng);
    std::vector<int> order{0, 1, 2, 3, 4, 5, 6, 7};
    rng.shuffle(std::span<int>(order));
    double expect = 0.0;
    for (int t = 0; t < 8; ++t) expect += dist(inst.coords[order[t]], inst.coords[order[(t + 1) % 8]]);
    CHECK(tsp_tour_length(inst, {ProblemKind::Tsp, order, {}}) == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("exact segment handles chords and single interiors") {
    const Point start{0, 0}, dest{1, 0};
    // Interiors on the chord: path cost equals the chord length.
    const std::vector<Point> chord{{0.25, 0}, {0.75, 0}, {0.5, 0}};
    auto res = exact_segment(start, dest, chord);
    CHECK(res.cost == doctest::Approx(1.0));
    CHECK(res.order == std::vector<int>{0, 2, 1});

    const std::vector<Point> one{{0.3, 0.4}};
    res = exact_segment(start, dest, one);
    CHECK(res.order == std::vector<int>{0});

    // The two-interior case used by the revision tests.
    const std::vector<Point> two{{0.9, 0.1}, {0.1, 0.1}};
    res = exact_segment(start, dest, two);
    CHECK(res.order == std::vector<int>{1, 0});
    CHECK(res.cost ==
          doctest::Approx(dist(start, two[1]) + dist(two[1], two[0]) + dist(two[0], dest)).epsilon(1e-12));
}

TEST_CASE("two-opt uncrosses edges and never beats the oracle") {
    TspInstance square{{{0, 0}, {1, 1}, {1, 0}, {0, 1}}};
    // 0->1->2->3 crosses; 2-opt must fix it.
    const auto fixed = two_opt(square, {0, 1, 2, 3});
    CHECK(tsp_tour_length(square, {ProblemKind::Tsp, fixed, {}}) == doctest::Approx(4.0));

    TspInstance already{{{0, 0}, {0, 1}, {1, 1}, {1, 0}}};
    CHECK(two_opt(already, {0, 1, 2, 3}) == std::vector<int>{0, 1, 2, 3});

    Rng rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        const auto inst = generate_tsp(12, rng);
        std::vector<int> order(12);
        std::iota(order.begin(), order.end(), 0);
        rng.shuffle(std::span<int>(order));
        const auto improved = two_opt(inst, order);
        const double cost = tsp_tour_length(inst, {ProblemKind::Tsp, improved, {}});
        CHECK(cost <= tsp_tour_length(inst, {ProblemKind::Tsp, order, {}}) + 1e-12);
        CHECK(cost + 1e-12 >= exact_tsp(inst).cost);
    }
}

TEST_CASE("nearest neighbor baseline") {
    TspInstance two{{{0, 0}, {1, 0}}};
    CHECK(nearest_neighbor(two, 0) == std::vector<int>{0, 1});

    // Equidistant tie resolves to the lowest index.
    TspInstance tie{{{0, 0}, {0, 1}, {1, 0}, {2, 2}}};
    CHECK(nearest_neighbor(tie, 0) == std::vector<int>{0, 1, 2, 3});

    Rng rng(13);
    for (int trial = 0; trial < 20; ++trial) {
        const auto inst = generate_tsp(rng.uniform_int(4, 10), rng);
        const auto order = nearest_neighbor(inst, 0);
        CHECK(tsp_tour_length(inst, {ProblemKind::Tsp, order, {}}) + 1e-12 >= exact_tsp(inst).cost);
    }
}

TEST_CASE("pctsp oracle saturates to an all-nodes tour when required") {
    Rng rng(23);
    auto inst = generate_pctsp(6, rng);
    inst.min_prize = std::accumulate(inst.prizes.begin(), inst.prizes.end(), 0.0);
    const auto res = exact_small_pctsp(inst);
    CHECK(res.order.size() == 6);
    CHECK(pctsp_feasible(inst, {ProblemKind::Pctsp, res.order, {}}));
    // Penalty term must be exactly zero, so the objective equals tour length.
    CHECK(res.cost == doctest::Approx(pctsp_objective(inst, {ProblemKind::Pctsp, res.order, {}})));
}

TEST_CASE("pctsp oracle matches subset enumeration semantics on a fixed seed") {
    Rng rng(40);
    const auto inst = generate_pctsp(6, rng);
    const auto res = exact_small_pctsp(inst);
    CHECK(pctsp_feasible(inst, {ProblemKind::Pctsp, res.order, {}}));
    // The reported cost must match the objective recomputed on the visit set.
    CHECK(res.cost == doctest::Approx(pctsp_objective(inst, {ProblemKind::Pctsp, res.order, {}})).epsilon(1e-12));
    // And no single-node drop or swap may improve it (spot-check optimality).
    for (size_t drop = 0; drop < res.order.size(); ++drop) {
        auto reduced = res.order;
        reduced.erase(reduced.begin() + static_cast<long>(drop));
        Solution cand{ProblemKind::Pctsp, reduced, {}};
        if (pctsp_feasible(inst, cand)) CHECK(pctsp_objective(inst, cand) >= res.cost - 1e-12);
    }
}

TEST_CASE("cvrp oracle reduces to depot-anchored tsp when capacity is loose") {
    Rng rng(51);
    auto inst = generate_cvrp(6, rng);
    inst.capacity = 100.0;  // everything fits in one tour
    const auto res = exact_small_cvrp(inst);
    CHECK(res.order.size() == 6);  // no separators
    // Cross-check against Held-Karp on depot + customers.
    TspInstance closed;
    closed.coords.push_back(inst.depot);
    for (const auto& p : inst.coords) closed.coords.push_back(p);
    CHECK(res.cost == doctest::Approx(exact_tsp(closed).cost).epsilon(1e-9));
}

TEST_CASE("cvrp oracle splits when capacity forces two tours") {
    Rng rng(52);
    auto inst = generate_cvrp(6, rng);
    double total = std::accumulate(inst.demands.begin(), inst.demands.end(), 0.0);
    inst.capacity = total / 2.0 + 0.5;  // at least two tours needed
    const auto res = exact_small_cvrp(inst);
    CHECK(cvrp_feasible(inst, {ProblemKind::Cvrp, res.order, {}}));
    CHECK(res.cost == doctest::Approx(cvrp_objective(inst, {ProblemKind::Cvrp, res.order, {}})).epsilon(1e-12));
    CHECK(std::count(res.order.begin(), res.order.end(), 6) >= 1);
}

TEST_CASE("exact tsp cost is invariant under input shuffling") {
    Rng rng(61);
    const auto inst = generate_tsp(9, rng);
    const double base = exact_tsp(inst).cost;
    for (int trial = 0; trial < 5; ++trial) {
        TspInstance shuffled = inst;
        rng.shuffle(std::span<Point>(shuffled.coords));
        CHECK(exact_tsp(shuffled).cost == doctest::Approx(base).epsilon(1e-9));
    }
}

}  // TEST_SUITE

#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace lcp {

struct Point {
    double x = 0.0;
    double y = 0.0;
};

inline double dist(const Point& a, const Point& b) {
    const double dx = a.x - b.x;
    const double dy = a.y - b.y;
    return std::sqrt(dx * dx + dy * dy);
}

enum class ProblemKind { Tsp, Pctsp, Cvrp };

const char* to_string(ProblemKind kind);
ProblemKind problem_kind_from_string(const std::string& name);

/// Raised when user-supplied data (solutions, instances, configs, files)
/// violates a documented precondition.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an internal protocol invariant is broken, e.g. a decode step
/// with no feasible action. These indicate bugs, not bad input.
struct ProtocolError : std::logic_error {
    using std::logic_error::logic_error;
};

}  // namespace lcp

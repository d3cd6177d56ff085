#include "lcp/common.hpp"

namespace lcp {

const char* to_string(ProblemKind kind) {
    switch (kind) {
        case ProblemKind::Tsp: return "tsp";
        case ProblemKind::Pctsp: return "pctsp";
        case ProblemKind::Cvrp: return "cvrp";
    }
    return "?";
}

ProblemKind problem_kind_from_string(const std::string& name) {
    if (name == "tsp") return ProblemKind::Tsp;
    if (name == "pctsp") return ProblemKind::Pctsp;
    if (name == "cvrp") return ProblemKind::Cvrp;
    throw ValidationError("unsupported problem kind: " + name);
}

}  // namespace lcp

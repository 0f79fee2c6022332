#pragma once

#include <cstddef>
#include <optional>

#include "polyadj/rational.hpp"

namespace polyadj::lp {

/// Feasibility of { x >= 0 : A x = b } by exact phase-1 simplex with Bland's
/// rule. Returns a basic feasible solution, or nullopt when infeasible.
/// Deterministic: the same input always yields the same vertex.
std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b,
                                                        std::size_t cols);

}  // namespace polyadj::lp

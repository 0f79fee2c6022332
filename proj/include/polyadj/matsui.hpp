#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polyadj/core.hpp"
#include "polyadj/hull.hpp"

namespace polyadj {

/// x0 (y = 0, x = 0, xbar = 1, x' = 1) and its complement.
std::pair<BitVector, BitVector> special_vertices(const BinaryMatrix& a);

/// NPadj(A) = F1 ∪ F2 ∪ F3 ∪ F4 ∪ {x0, x0bar}, pairwise disjoint.
/// F1: y=(0,1,1)  F2: y=(1,0,1)  F3: y=(0,1,0)  F4: y=(1,0,0).
struct NPadjDecomposition {
    std::vector<BitVector> f1, f2, f3, f4;
    BitVector x0, x0bar;
    std::size_t k = 0;  // |Part(A)| = |F_i|
    std::size_t total_vertices = 0;
};

/// Throws InvariantViolation if the computed parts fail to partition the
/// vertex set or break the complement symmetry F4 = 1 - F1, F3 = 1 - F2.
NPadjDecomposition face_decomposition(const BinaryMatrix& a, std::size_t cap = kDefaultDimensionCap);

struct MatsuiReport {
    bool part_empty = false;
    bool x0_x0bar_adjacent = false;
    bool criterion_holds = false;
    std::size_t part_vertices = 0;
    std::size_t npadj_vertices = 0;
};

/// Computes Part(A) emptiness and x0/x0bar adjacency independently and
/// reports whether "adjacent iff Part(A) is empty" held on this instance.
MatsuiReport matsui_check(const BinaryMatrix& a, std::size_t cap = kDefaultDimensionCap);

}  // namespace polyadj

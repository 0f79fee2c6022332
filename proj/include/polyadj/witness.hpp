#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polyadj/core.hpp"
#include "polyadj/hull.hpp"

namespace polyadj {

/// Sorted set of coordinate indices (0-based).
using IndexSet = std::vector<std::size_t>;

/// (X \ Y) ∪ (Y \ X)
IndexSet symmetric_difference(const IndexSet& x, const IndexSet& y);

using VertexPair = std::pair<BitVector, BitVector>;

/// Equal-sum vertex pairs of Stable(G) with the index sets driving the
/// witness construction.
///
/// Each pair is oriented so that its first member has coordinate j0 = 1; U[i]
/// is then the support of that member on J. When the number of pairs is even
/// the last pair sits outside the working family of 2k+1 pairs but still takes
/// part in the "witness is new" check.
struct PairFamily {
    Graph graph;
    std::vector<VertexPair> pairs;
    std::vector<int> sum;
    IndexSet common;   // I: coordinates where both members agree
    IndexSet differ;   // J: the rest
    std::size_t j0 = 0;
    std::vector<IndexSet> u;
    std::size_t k = 0;

    std::size_t working_count() const { return 2 * k + 1; }
    /// J \ s
    IndexSet complement_in_j(const IndexSet& s) const;
};

/// Validates and orients. Errors: TooFewPairs, DimensionMismatch,
/// NotInStablePolytope, DegeneratePair, UnequalSums, DuplicatePairs
/// (each naming the offending pair index).
PairFamily build_pair_family(const Graph& g, const std::vector<VertexPair>& pairs);

struct TripleChoice {
    std::size_t t = 0;
    IndexSet s;  // U0 △ U1 △ Ut
};

/// Smallest t in {2, ..., 2k} whose S differs from every U_p and J \ U_p.
/// Exhausting the range on a working family is InvariantViolation; on an even
/// family whose only candidates coincide with the extra pair it is
/// EvenFamilyNoWitness.
TripleChoice find_t(const PairFamily& family);

struct Witness {
    BitVector y_star;
    BitVector y_star_bar;
    std::size_t t = 0;
    IndexSet s;
};

/// y* = y0 on I, 1 on S, 0 on J \ S, and y*bar its mirror on J. Both are
/// checked against Stable(G) (MembershipViolation) and against every input
/// pair (InvariantViolation).
Witness construct_witness(const PairFamily& family, const TripleChoice& choice);

struct Refutation {
    Witness witness;
    RationalVector midpoint;  // common midpoint s/2 of every pair and of the witness
};

Refutation refute_face(const Graph& g, const std::vector<VertexPair>& pairs);

/// Brute force: all unordered {y, ybar} in Stable(G), y != ybar, y + ybar = s,
/// ordered by the lexicographically smaller member (stored first).
std::vector<VertexPair> pair_extension_oracle(const Graph& g, const std::vector<int>& s,
                                              std::size_t cap = kDefaultDimensionCap);

}  // namespace polyadj

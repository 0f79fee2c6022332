#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "polyadj/core.hpp"

namespace polyadj {

inline constexpr std::size_t kDefaultDimensionCap = 24;

/// All members of the code's vertex set in lexicographic order (coordinate 0
/// most significant). Throws DimensionCapExceeded when dimension(code) > cap.
///
/// Depth-first over coordinates with interval pruning on every defining row,
/// so the cost is governed by the number of feasible prefixes rather than 2^d.
std::vector<BitVector> enumerate_vertices(const PolytopeCode& code, std::size_t cap = kDefaultDimensionCap);

/// Convex weights on a subset of a vertex list. Indices refer to the list
/// the certificate was produced for.
struct HullCertificate {
    std::vector<std::pair<std::size_t, Rational>> support;

    /// "index:weight" entries separated by spaces.
    std::string to_string() const;
    bool operator==(const HullCertificate&) const = default;
};

/// Hyperplane normal·x = offset through the face; every other vertex
/// satisfies normal·x <= offset - 1.
struct FaceCertificate {
    RationalVector normal;
    Rational offset;

    std::string to_string() const;
    bool operator==(const FaceCertificate&) const = default;
};

/// Point weight_u·u + (1 - weight_u)·v of the open segment (u, v) written as a
/// convex combination of the other vertices.
struct SegmentCertificate {
    Rational weight_u;
    HullCertificate hull;
};

struct AdjacencyVerdict {
    bool adjacent = false;
    std::optional<FaceCertificate> face;        // set iff adjacent
    std::optional<SegmentCertificate> segment;  // set iff not adjacent
};

/// nullopt means Outside.
std::optional<HullCertificate> in_convex_hull(const RationalVector& p, const std::vector<BitVector>& points);

/// Exact re-check of a hull certificate.
bool verify_hull_certificate(const RationalVector& p, const std::vector<BitVector>& points, const HullCertificate& cert);

/// Shrinks the support to an affinely independent set (so at most d+1
/// points) while still representing p exactly. Throws InvalidCertificate.
HullCertificate caratheodory_reduce(const RationalVector& p, const std::vector<BitVector>& points,
                                    const HullCertificate& cert);

/// Decides whether `face` is exactly the vertex set of a face of conv(points).
/// The empty set and the whole set are faces. Throws NotASubset.
std::optional<FaceCertificate> is_face(const std::vector<BitVector>& face, const std::vector<BitVector>& points);

bool verify_face_certificate(const std::vector<BitVector>& face, const std::vector<BitVector>& points,
                             const FaceCertificate& cert);

/// Adjacency of u and v in conv(points), decided as "{u, v} is a face".
/// Non-adjacent verdicts carry a segment certificate, with weight_u = 1/2
/// whenever the midpoint itself is in the hull of the remaining vertices.
AdjacencyVerdict are_adjacent(const std::vector<BitVector>& points, const BitVector& u, const BitVector& v);

/// Midpoint test alone: true when (u+v)/2 is outside conv(points \ {u, v}).
bool midpoint_outside_rest(const std::vector<BitVector>& points, const BitVector& u, const BitVector& v);

RationalVector midpoint(const BitVector& u, const BitVector& v);

}  // namespace polyadj

#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "polyadj/core.hpp"
#include "polyadj/hull.hpp"

namespace polyadj {

/// (coordinate, value) pins that cut a face out of a 0/1 polytope.
using FaceFixes = std::vector<std::pair<std::size_t, int>>;

/// Source polytope mapped affinely onto the face of the target polytope
/// selected by `face_fixes`.
struct ReductionArtifact {
    PolytopeCode source;
    PolytopeCode target;
    AffineMap map;
    FaceFixes face_fixes;
};

struct ReductionReport {
    bool image_equals_face_slice = false;
    bool injective = false;
    bool face_is_supported = false;
    std::size_t source_dim = 0;
    std::size_t target_dim = 0;
    std::size_t source_code_len = 0;
    std::size_t target_code_len = 0;
    std::size_t source_vertices = 0;
    std::size_t face_vertices = 0;

    bool all_passed() const { return image_equals_face_slice && injective && face_is_supported; }
};

/// Stable(G) onto Part(A): one row per edge {v,u} with ones at v, u and a
/// slack column |V| + edge index. The image is the whole of Part(A).
ReductionArtifact stable_to_part(const Graph& g);

/// Part(A) onto the face y = (0,1,1) of NPadj(A).
ReductionArtifact part_to_npadj(const BinaryMatrix& a);

/// NPadj(A) onto the face a = 0, b = 1 of DCP(B), B of shape (2n+m) x (3n+5).
ReductionArtifact npadj_to_dcp(const BinaryMatrix& a);

/// The DCP(B) matrix used by npadj_to_dcp.
BinaryMatrix npadj_dcp_matrix(const BinaryMatrix& a);

/// outer ∘ inner; requires inner.target == outer.source. Fixes are united.
ReductionArtifact compose(const ReductionArtifact& outer, const ReductionArtifact& inner);

/// Stable(G) -> Part -> NPadj -> DCP, each stage and the composition.
struct ReductionChain {
    ReductionArtifact stable_part;
    ReductionArtifact part_npadj;
    ReductionArtifact npadj_dcp;
    ReductionArtifact composed;
};

ReductionChain reduction_chain(const Graph& g);

/// Vertices of `code` satisfying every fix, lexicographic order.
std::vector<BitVector> face_slice(const PolytopeCode& code, const FaceFixes& fixes,
                                  std::size_t cap = kDefaultDimensionCap);

/// Exhaustive instance check: image = face slice, injectivity on vertices,
/// and the slice is a face of the target's vertex set.
ReductionReport verify_reduction(const ReductionArtifact& art, std::size_t cap = kDefaultDimensionCap);

}  // namespace polyadj

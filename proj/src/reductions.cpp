#include "polyadj/reductions.hpp"

#include <algorithm>
#include <set>

namespace polyadj {

namespace {

void require_three_ones(const BinaryMatrix& a) {
    if (a.rows() == 0) throw Error(ErrorCode::EmptyMatrix, "partition matrix has no rows");
    for (std::size_t r = 0; r < a.rows(); ++r) {
        if (a.row_weight(r) != 3) {
            throw Error(ErrorCode::RowWeightNotThree, "row " + std::to_string(r) + " does not have exactly three ones", r);
        }
    }
}

RationalMatrix zeros(std::size_t rows, std::size_t cols) {
    return RationalMatrix(rows, RationalVector(cols, Rational(0)));
}

}  // namespace

ReductionArtifact stable_to_part(const Graph& g) {
    std::size_t nv = g.vertex_count();
    std::size_t ne = g.edges().size();
    if (nv == 0) throw Error(ErrorCode::EmptyGraph, "graph has no vertices");
    if (ne == 0) throw Error(ErrorCode::NoEdges, "graph has no edges");

    BinaryMatrix a(ne, nv + ne);
    RationalMatrix t = zeros(nv + ne, nv);
    RationalVector c(nv + ne, Rational(0));
    for (std::size_t v = 0; v < nv; ++v) t[v][v] = 1;
    for (std::size_t e = 0; e < ne; ++e) {
        auto [u, v] = g.edges()[e];
        a.set(e, u, true);
        a.set(e, v, true);
        a.set(e, nv + e, true);
        // slack = 1 - x_u - x_v
        t[nv + e][u] = -1;
        t[nv + e][v] = -1;
        c[nv + e] = 1;
    }
    return {PolytopeCode::stable(g), PolytopeCode::part(std::move(a)), AffineMap(std::move(t), std::move(c)), {}};
}

ReductionArtifact part_to_npadj(const BinaryMatrix& a) {
    require_three_ones(a);
    std::size_t n = a.cols();
    NPadjLayout L(n);
    RationalMatrix t = zeros(L.dimension(), n);
    RationalVector c(L.dimension(), Rational(0));
    c[L.y(2)] = 1;
    c[L.y(3)] = 1;
    for (std::size_t j = 0; j < n; ++j) {
        t[L.x(j)][j] = 1;
        t[L.xbar(j)][j] = -1;
        c[L.xbar(j)] = 1;
        t[L.xprime(j)][j] = 1;
    }
    FaceFixes fixes{{L.y(1), 0}, {L.y(2), 1}, {L.y(3), 1}};
    return {PolytopeCode::part(a), PolytopeCode::npadj(a), AffineMap(std::move(t), std::move(c)), std::move(fixes)};
}

BinaryMatrix npadj_dcp_matrix(const BinaryMatrix& a) {
    require_three_ones(a);
    std::size_t n = a.cols();
    std::size_t m = a.rows();
    DcpLayout D(n);
    const NPadjLayout& L = D.npadj();
    BinaryMatrix b(2 * n + m, D.dimension());
    std::size_t row = 0;
    for (std::size_t j = 0; j < n; ++j) {
        for (auto col : {D.a(), D.b(), D.shifted(L.x(j)), D.shifted(L.xbar(j))}) b.set(row, col, true);
        ++row;
        for (auto col : {L.y(1), L.y(2), L.xprime(j), L.xbar(j)}) b.set(row, D.shifted(col), true);
        ++row;
    }
    for (std::size_t r = 0; r < m; ++r) {
        auto s = a.row_support(r);
        for (auto col : {L.y(3), L.x(s[0]), L.xprime(s[1]), L.xprime(s[2])}) b.set(row, D.shifted(col), true);
        ++row;
    }
    return b;
}

ReductionArtifact npadj_to_dcp(const BinaryMatrix& a) {
    BinaryMatrix b = npadj_dcp_matrix(a);
    DcpLayout D(a.cols());
    std::size_t src = D.npadj().dimension();
    RationalMatrix t = zeros(D.dimension(), src);
    RationalVector c(D.dimension(), Rational(0));
    c[D.b()] = 1;
    for (std::size_t i = 0; i < src; ++i) t[D.shifted(i)][i] = 1;
    FaceFixes fixes{{D.a(), 0}, {D.b(), 1}};
    return {PolytopeCode::npadj(a), PolytopeCode::dcp(std::move(b)), AffineMap(std::move(t), std::move(c)),
            std::move(fixes)};
}

ReductionArtifact compose(const ReductionArtifact& outer, const ReductionArtifact& inner) {
    if (!(inner.target == outer.source)) {
        throw Error(ErrorCode::InvalidArgument, "composed reductions do not share an intermediate code");
    }
    // fixes of the inner stage live in the outer source space; pull them
    // through the outer map, which on these constructions sends a source
    // coordinate to a single target coordinate with coefficient 1
    FaceFixes fixes = outer.face_fixes;
    const auto& t = outer.map.matrix();
    for (auto [coord, value] : inner.face_fixes) {
        std::size_t hit = t.size();
        for (std::size_t r = 0; r < t.size(); ++r) {
            bool unit = t[r][coord] == 1 && outer.map.offset()[r] == 0;
            for (std::size_t k = 0; unit && k < t[r].size(); ++k) {
                if (k != coord && sgn(t[r][k]) != 0) unit = false;
            }
            if (unit) {
                hit = r;
                break;
            }
        }
        if (hit == t.size()) throw Error(ErrorCode::InvalidArgument, "inner face fix is not carried by a target coordinate");
        fixes.emplace_back(hit, value);
    }
    std::sort(fixes.begin(), fixes.end());
    return {inner.source, outer.target, compose(outer.map, inner.map), std::move(fixes)};
}

ReductionChain reduction_chain(const Graph& g) {
    auto first = stable_to_part(g);
    auto second = part_to_npadj(first.target.matrix());
    auto third = npadj_to_dcp(second.target.matrix());
    auto whole = compose(third, compose(second, first));
    return {std::move(first), std::move(second), std::move(third), std::move(whole)};
}

std::vector<BitVector> face_slice(const PolytopeCode& code, const FaceFixes& fixes, std::size_t cap) {
    std::size_t d = dimension(code);
    for (std::size_t i = 0; i < fixes.size(); ++i) {
        if (fixes[i].first >= d) throw Error(ErrorCode::CoordinateOutOfRange, "face fix coordinate out of range", i);
        if (fixes[i].second != 0 && fixes[i].second != 1) throw Error(ErrorCode::InvalidArgument, "face fix value not 0/1", i);
    }
    std::vector<BitVector> out;
    for (auto& x : enumerate_vertices(code, cap)) {
        bool keep = std::all_of(fixes.begin(), fixes.end(), [&](const auto& f) { return x[f.first] == f.second; });
        if (keep) out.push_back(std::move(x));
    }
    return out;
}

ReductionReport verify_reduction(const ReductionArtifact& art, std::size_t cap) {
    ReductionReport rep;
    rep.source_dim = dimension(art.source);
    rep.target_dim = dimension(art.target);
    rep.source_code_len = code_length(art.source);
    rep.target_code_len = code_length(art.target);

    auto source_vertices = enumerate_vertices(art.source, cap);
    auto target_vertices = enumerate_vertices(art.target, cap);
    auto slice = face_slice(art.target, art.face_fixes, cap);
    rep.source_vertices = source_vertices.size();
    rep.face_vertices = slice.size();

    std::set<BitVector> image;
    bool all_binary = true;
    for (const auto& x : source_vertices) {
        auto y = as_bitvector(art.map.apply(x));
        if (!y) {
            all_binary = false;
            continue;
        }
        image.insert(std::move(*y));
    }
    rep.injective = all_binary && image.size() == source_vertices.size();
    rep.image_equals_face_slice = all_binary && image == std::set<BitVector>(slice.begin(), slice.end());
    rep.face_is_supported = is_face(slice, target_vertices).has_value();
    return rep;
}

}  // namespace polyadj

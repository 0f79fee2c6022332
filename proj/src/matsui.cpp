#include "polyadj/matsui.hpp"

#include <algorithm>
#include <set>
#include <tuple>

#include "polyadj/reductions.hpp"

namespace polyadj {

std::pair<BitVector, BitVector> special_vertices(const BinaryMatrix& a) {
    validate_code(PolytopeCode::npadj(a));
    NPadjLayout L(a.cols());
    BitVector x0(L.dimension());
    for (std::size_t j = 0; j < L.n(); ++j) {
        x0.set(L.xbar(j), true);
        x0.set(L.xprime(j), true);
    }
    return {x0, x0.complement()};
}

namespace {

std::set<BitVector> complemented(const std::vector<BitVector>& v) {
    std::set<BitVector> out;
    for (const auto& x : v) out.insert(x.complement());
    return out;
}

std::set<BitVector> as_set(const std::vector<BitVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

NPadjDecomposition face_decomposition(const BinaryMatrix& a, std::size_t cap) {
    PolytopeCode code = PolytopeCode::npadj(a);
    validate_code(code);
    NPadjLayout L(a.cols());
    auto y_fixes = [&](int y1, int y2, int y3) { return FaceFixes{{L.y(1), y1}, {L.y(2), y2}, {L.y(3), y3}}; };

    NPadjDecomposition dec;
    dec.f1 = face_slice(code, y_fixes(0, 1, 1), cap);
    dec.f2 = face_slice(code, y_fixes(1, 0, 1), cap);
    dec.f3 = face_slice(code, y_fixes(0, 1, 0), cap);
    dec.f4 = face_slice(code, y_fixes(1, 0, 0), cap);
    std::tie(dec.x0, dec.x0bar) = special_vertices(a);

    auto all = enumerate_vertices(code, cap);
    dec.total_vertices = all.size();
    dec.k = enumerate_vertices(PolytopeCode::part(a), cap).size();

    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvariantViolation, "NPadj decomposition: " + what); };

    std::set<BitVector> united;
    std::size_t parts_total = 0;
    for (const auto* part : {&dec.f1, &dec.f2, &dec.f3, &dec.f4}) {
        if (part->size() != dec.k) fail("face size differs from |Part(A)|");
        united.insert(part->begin(), part->end());
        parts_total += part->size();
    }
    united.insert(dec.x0);
    united.insert(dec.x0bar);
    parts_total += 2;
    if (united.size() != parts_total) fail("parts are not pairwise disjoint");
    if (united != as_set(all)) fail("parts do not cover the vertex set");
    if (dec.x0.complement() != dec.x0bar) fail("x0 + x0bar != 1");
    if (complemented(dec.f1) != as_set(dec.f4)) fail("F4 != 1 - F1");
    if (complemented(dec.f2) != as_set(dec.f3)) fail("F3 != 1 - F2");
    return dec;
}

MatsuiReport matsui_check(const BinaryMatrix& a, std::size_t cap) {
    PolytopeCode code = PolytopeCode::npadj(a);
    validate_code(code);
    MatsuiReport rep;
    rep.part_vertices = enumerate_vertices(PolytopeCode::part(a), cap).size();
    rep.part_empty = rep.part_vertices == 0;

    auto vertices = enumerate_vertices(code, cap);
    rep.npadj_vertices = vertices.size();
    auto [x0, x0bar] = special_vertices(a);
    rep.x0_x0bar_adjacent = are_adjacent(vertices, x0, x0bar).adjacent;
    rep.criterion_holds = rep.part_empty == rep.x0_x0bar_adjacent;
    return rep;
}

}  // namespace polyadj

#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "polyadj/core.hpp"
#include "polyadj/error.hpp"

using namespace polyadj;

namespace {

ErrorCode code_of(auto&& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected an Error");
    return ErrorCode::InvalidArgument;
}

BitVector bv(const char* s) { return BitVector::from_string(s); }

}  // namespace

TEST_CASE("bit vectors parse, compare and complement") {
    auto x = bv("0110");
    CHECK(x.size() == 4);
    CHECK(x.weight() == 2);
    CHECK(x.complement().to_string() == "1001");
    CHECK(bv("0011") < bv("0100"));
    CHECK(code_of([] { BitVector::from_string("01a"); }) == ErrorCode::ParseError);
}

TEST_CASE("binary matrices reject zero columns and report supports") {
    CHECK(code_of([] { BinaryMatrix(1, 0); }) == ErrorCode::InvalidArgument);
    auto a = BinaryMatrix::from_rows({{1, 0, 1, 1}});
    CHECK(a.row_weight(0) == 3);
    CHECK(a.row_support(0) == std::vector<std::size_t>{0, 2, 3});
}

TEST_CASE("graphs reject loops, duplicates and out of range endpoints") {
    CHECK(code_of([] { Graph(3, {{1, 1}}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Graph(3, {{0, 1}, {1, 0}}); }) == ErrorCode::InvalidArgument);
    CHECK(code_of([] { Graph(3, {{0, 3}}); }) == ErrorCode::CoordinateOutOfRange);
    Graph g(3, {{2, 0}});
    CHECK(g.has_edge(0, 2));
    CHECK(g.has_edge(2, 0));
    CHECK_FALSE(g.has_edge(0, 1));
}

TEST_CASE("validate_code") {
    CHECK_NOTHROW(validate_code(PolytopeCode::dcp(BinaryMatrix::from_rows({{1, 1, 1, 1}}))));
    CHECK(code_of([] { validate_code(PolytopeCode::dcp(BinaryMatrix::from_rows({{1, 1, 1, 0}}))); }) ==
          ErrorCode::DcpRowWeight);
    CHECK(code_of([] { validate_code(PolytopeCode::npadj(BinaryMatrix(0, 3))); }) == ErrorCode::NPadjEmptyMatrix);
    CHECK(code_of([] { validate_code(PolytopeCode::npadj(BinaryMatrix::from_rows({{1, 1, 0}}))); }) ==
          ErrorCode::NPadjRowWeight);
    CHECK_NOTHROW(validate_code(PolytopeCode::cover(BinaryMatrix::from_rows({{1, 0}, {0, 0}}))));
}

TEST_CASE("dimension and code length") {
    auto a = BinaryMatrix::from_rows({{1, 1, 1}});
    CHECK(dimension(PolytopeCode::npadj(a)) == 12);
    CHECK(dimension(PolytopeCode::part(a)) == 3);
    CHECK(dimension(PolytopeCode::stable(Graph(2, {{0, 1}}))) == 2);
    CHECK(code_length(PolytopeCode::part(a)) == 3);
    CHECK(code_length(PolytopeCode::stable(Graph(3, {{0, 1}, {1, 2}}))) == 7);
}

TEST_CASE("membership on each family") {
    auto a = BinaryMatrix::from_rows({{1, 1, 0}, {0, 1, 1}});
    CHECK(membership(PolytopeCode::cover(a), bv("010")));
    CHECK_FALSE(membership(PolytopeCode::cover(a), bv("100")));
    CHECK(membership(PolytopeCode::pack(a), bv("101")));
    CHECK_FALSE(membership(PolytopeCode::pack(a), bv("110")));
    CHECK(membership(PolytopeCode::part(a), bv("010")));
    CHECK_FALSE(membership(PolytopeCode::part(a), bv("111")));
    Graph g(2, {{0, 1}});
    CHECK(membership(PolytopeCode::stable(g), bv("10")));
    CHECK_FALSE(membership(PolytopeCode::stable(g), bv("11")));
    auto oct = PolytopeCode::dcp(BinaryMatrix::from_rows({{1, 1, 1, 1}}));
    CHECK(membership(oct, bv("0101")));
    CHECK_FALSE(membership(oct, bv("0111")));
    CHECK(code_of([&] { membership(oct, bv("010")); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("NPadj membership of the distinguished vertices") {
    auto code = PolytopeCode::npadj(BinaryMatrix::from_rows({{1, 1, 1}}));
    NPadjLayout L(3);
    BitVector x0(L.dimension());
    for (std::size_t j = 0; j < 3; ++j) {
        x0.set(L.xbar(j), true);
        x0.set(L.xprime(j), true);
    }
    CHECK(membership(code, x0));
    CHECK(membership(code, x0.complement()));
    // y = (0,1,1), x = e1: the partition solution x = (1,0,0) lifted
    BitVector lifted = bv("011100011100");
    CHECK(membership(code, lifted));
    lifted.set(L.y(1), true);
    CHECK_FALSE(membership(code, lifted));
}

TEST_CASE("layout names round-trip") {
    for (std::size_t n = 1; n <= 6; ++n) {
        NPadjLayout L(n);
        DcpLayout D(n);
        for (std::size_t i = 0; i < L.dimension(); ++i) CHECK(L.index_of(L.name(i)) == i);
        for (std::size_t i = 0; i < D.dimension(); ++i) CHECK(D.index_of(D.name(i)) == i);
        CHECK(L.name(L.xprime(n - 1)) == "xp" + std::to_string(n));
        CHECK(D.name(D.a()) == "a");
    }
    CHECK(NPadjLayout(3).name(0) == "y1");
    CHECK(code_of([] { NPadjLayout(3).index_of("x4"); }) == ErrorCode::InvalidArgument);
}

TEST_CASE("affine maps apply and compose") {
    AffineMap flip({{-1, 0}, {0, -1}}, {1, 1});
    auto y = apply_affine(flip, bv("10"));
    CHECK(y == RationalVector{0, 1});
    CHECK(as_bitvector(y)->to_string() == "01");
    CHECK_FALSE(as_bitvector(RationalVector{Rational(1, 2)}).has_value());
    auto twice = compose(flip, flip);
    CHECK(twice.apply(bv("10")) == RationalVector{1, 0});
    CHECK(AffineMap::identity(3).apply(bv("101")) == bv("101").to_rational());
    CHECK(code_of([&] { flip.apply(bv("1")); }) == ErrorCode::DimensionMismatch);
}

TEST_CASE("property: NPadj vertex sets are closed under complement") {
    std::mt19937 rng(7);
    for (std::size_t n = 3; n <= 4; ++n) {
        std::vector<std::vector<int>> rows;
        for (int mask = 0; mask < (1 << n); ++mask) {
            if (__builtin_popcount(mask) != 3) continue;
            std::vector<int> r(n);
            for (std::size_t j = 0; j < n; ++j) r[j] = (mask >> j) & 1;
            rows.push_back(r);
        }
        for (int trial = 0; trial < 4; ++trial) {
            std::vector<std::vector<int>> pick{rows[rng() % rows.size()], rows[rng() % rows.size()]};
            auto code = PolytopeCode::npadj(BinaryMatrix::from_rows(pick));
            auto vs = oracle::enumerate(code);
            for (const auto& x : vs) CHECK(membership(code, x.complement()));
        }
    }
}

TEST_CASE("constraint rows reproduce membership") {
    auto code = PolytopeCode::npadj(BinaryMatrix::from_rows({{1, 1, 1, 0}, {0, 1, 1, 1}}));
    auto rows = constraint_rows(code);
    CHECK(rows.size() == 4 + 4 + 2);
    for (const auto& x : oracle::enumerate(code)) {
        for (const auto& r : rows) {
            int s = 0;
            for (auto i : r.support) s += x[i];
            CHECK(s == r.rhs);
        }
    }
}

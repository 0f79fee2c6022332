#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "polyadj/error.hpp"
#include "polyadj/rational.hpp"

namespace polyadj {

/// Fixed-length 0/1 vector. Ordering is lexicographic with coordinate 0
/// most significant.
class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t length) : bits_(length, 0) {}
    explicit BitVector(std::vector<std::uint8_t> bits);

    /// Parses a string of '0'/'1' characters.
    static BitVector from_string(std::string_view text);

    std::size_t size() const noexcept { return bits_.size(); }
    std::uint8_t operator[](std::size_t i) const { return bits_[i]; }
    void set(std::size_t i, bool value) { bits_[i] = value ? 1 : 0; }
    std::span<const std::uint8_t> bits() const noexcept { return bits_; }

    std::size_t weight() const noexcept;
    BitVector complement() const;
    std::string to_string() const;
    RationalVector to_rational() const;

    auto operator<=>(const BitVector&) const = default;

private:
    std::vector<std::uint8_t> bits_;
};

class BinaryMatrix {
public:
    BinaryMatrix(std::size_t rows, std::size_t cols);
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols);
    static BinaryMatrix from_rows(const std::vector<std::vector<int>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    std::uint8_t at(std::size_t r, std::size_t c) const;
    void set(std::size_t r, std::size_t c, bool value);

    std::size_t row_weight(std::size_t r) const;
    /// Column indices of the ones in row r, ascending.
    std::vector<std::size_t> row_support(std::size_t r) const;

    bool operator==(const BinaryMatrix&) const = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<std::uint8_t> data_;
};

class Graph {
public:
    using Edge = std::pair<std::size_t, std::size_t>;

    /// Edges are stored with first < second, in the given order.
    Graph(std::size_t vertex_count, std::vector<Edge> edges);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }
    bool has_edge(std::size_t u, std::size_t v) const;

    bool operator==(const Graph&) const = default;

private:
    std::size_t vertex_count_;
    std::vector<Edge> edges_;
};

enum class Family { Cover, Pack, Part, Stable, DCP, NPadj };

const char* family_name(Family f);
/// Accepts the lowercase CLI spellings: cover, pack, part, stable, dcp, npadj.
Family parse_family(std::string_view name);

class PolytopeCode {
public:
    static PolytopeCode cover(BinaryMatrix a) { return {Family::Cover, std::move(a)}; }
    static PolytopeCode pack(BinaryMatrix a) { return {Family::Pack, std::move(a)}; }
    static PolytopeCode part(BinaryMatrix a) { return {Family::Part, std::move(a)}; }
    static PolytopeCode dcp(BinaryMatrix b) { return {Family::DCP, std::move(b)}; }
    static PolytopeCode npadj(BinaryMatrix a) { return {Family::NPadj, std::move(a)}; }
    static PolytopeCode stable(Graph g) { return {Family::Stable, std::move(g)}; }

    Family family() const noexcept { return family_; }
    bool has_matrix() const noexcept { return std::holds_alternative<BinaryMatrix>(params_); }
    const BinaryMatrix& matrix() const;
    const Graph& graph() const;

    bool operator==(const PolytopeCode&) const = default;

private:
    PolytopeCode(Family f, std::variant<BinaryMatrix, Graph> p) : family_(f), params_(std::move(p)) {}

    Family family_;
    std::variant<BinaryMatrix, Graph> params_;
};

/// One defining constraint: sum of the listed 0/1 coordinates compared to rhs.
struct LinearRow {
    enum class Sense { Equal, AtMost, AtLeast };
    std::vector<std::size_t> support;
    Sense sense;
    int rhs;
};

// Coordinate layout of NPadj(A): y1 y2 y3 | x_1..x_n | xbar_1..xbar_n | x'_1..x'_n.
// Column indices j are 0-based.
class NPadjLayout {
public:
    explicit NPadjLayout(std::size_t n) : n_(n) {}

    std::size_t n() const noexcept { return n_; }
    std::size_t dimension() const noexcept { return 3 * n_ + 3; }
    std::size_t y(int which) const;  // which in {1,2,3}
    std::size_t x(std::size_t j) const { return 3 + j; }
    std::size_t xbar(std::size_t j) const { return 3 + n_ + j; }
    std::size_t xprime(std::size_t j) const { return 3 + 2 * n_ + j; }

    /// Symbolic names: y1, y2, y3, x<j>, xbar<j>, xp<j> with 1-based j.
    std::string name(std::size_t index) const;
    std::size_t index_of(std::string_view name) const;

private:
    std::size_t n_;
};

// DCP(B) layout used by the NPadj embedding: a | b | NPadj layout shifted by 2.
class DcpLayout {
public:
    explicit DcpLayout(std::size_t n) : inner_(n) {}

    static constexpr std::size_t a() { return 0; }
    static constexpr std::size_t b() { return 1; }
    static constexpr std::size_t offset() { return 2; }
    const NPadjLayout& npadj() const noexcept { return inner_; }
    std::size_t dimension() const noexcept { return inner_.dimension() + 2; }
    std::size_t shifted(std::size_t npadj_index) const { return npadj_index + 2; }

    std::string name(std::size_t index) const;
    std::size_t index_of(std::string_view name) const;

private:
    NPadjLayout inner_;
};

/// x -> T x + c over the rationals.
class AffineMap {
public:
    AffineMap(RationalMatrix t, RationalVector c);
    static AffineMap identity(std::size_t dim);

    std::size_t source_dim() const noexcept { return source_dim_; }
    std::size_t target_dim() const noexcept { return c_.size(); }
    const RationalMatrix& matrix() const noexcept { return t_; }
    const RationalVector& offset() const noexcept { return c_; }

    RationalVector apply(const RationalVector& x) const;
    RationalVector apply(const BitVector& x) const;

    /// outer ∘ inner
    friend AffineMap compose(const AffineMap& outer, const AffineMap& inner);

private:
    RationalMatrix t_;
    RationalVector c_;
    std::size_t source_dim_;
};

AffineMap compose(const AffineMap& outer, const AffineMap& inner);

/// Throws the first violated invariant (DcpRowWeight, NPadjRowWeight, NPadjEmptyMatrix).
void validate_code(const PolytopeCode& code);

std::size_t dimension(const PolytopeCode& code);

/// Number of symbols in the code: m*n matrix entries, or |V| + 2|E| for graphs.
std::size_t code_length(const PolytopeCode& code);

/// The defining equations/inequalities of the family over its coordinates.
std::vector<LinearRow> constraint_rows(const PolytopeCode& code);

bool membership(const PolytopeCode& code, const BitVector& x);

RationalVector apply_affine(const AffineMap& map, const BitVector& x);
RationalVector apply_affine(const AffineMap& map, const RationalVector& x);

/// Converts a rational vector to a BitVector, or nullopt when some entry is not 0 or 1.
std::optional<BitVector> as_bitvector(const RationalVector& v);

}  // namespace polyadj

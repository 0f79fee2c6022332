#include "polyadj/core.hpp"

#include <algorithm>
#include <charconv>
#include <set>

namespace polyadj {

// ---------------------------------------------------------------- BitVector

BitVector::BitVector(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
    for (std::size_t i = 0; i < bits_.size(); ++i) {
        if (bits_[i] > 1) throw Error(ErrorCode::InvalidArgument, "coordinate is not 0/1", i);
    }
}

BitVector BitVector::from_string(std::string_view text) {
    std::vector<std::uint8_t> bits;
    bits.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        char ch = text[i];
        if (ch != '0' && ch != '1') {
            throw Error(ErrorCode::ParseError, "vertex string must contain only '0'/'1': '" + std::string(text) + "'", i);
        }
        bits.push_back(static_cast<std::uint8_t>(ch - '0'));
    }
    return BitVector(std::move(bits));
}

std::size_t BitVector::weight() const noexcept {
    return static_cast<std::size_t>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

BitVector BitVector::complement() const {
    BitVector out(bits_.size());
    for (std::size_t i = 0; i < bits_.size(); ++i) out.bits_[i] = 1 - bits_[i];
    return out;
}

std::string BitVector::to_string() const {
    std::string s(bits_.size(), '0');
    for (std::size_t i = 0; i < bits_.size(); ++i) s[i] = bits_[i] ? '1' : '0';
    return s;
}

RationalVector BitVector::to_rational() const {
    RationalVector v;
    v.reserve(bits_.size());
    for (auto b : bits_) v.emplace_back(static_cast<int>(b));
    return v;
}

// ------------------------------------------------------------- BinaryMatrix

BinaryMatrix::BinaryMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {
    if (cols == 0) throw Error(ErrorCode::InvalidArgument, "matrix must have at least one column");
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows, std::size_t cols) {
    BinaryMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols) throw Error(ErrorCode::DimensionMismatch, "ragged matrix row", r);
        for (std::size_t c = 0; c < cols; ++c) {
            int v = rows[r][c];
            if (v != 0 && v != 1) throw Error(ErrorCode::InvalidArgument, "matrix entry is not 0/1", r);
            m.set(r, c, v == 1);
        }
    }
    return m;
}

BinaryMatrix BinaryMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
    if (rows.empty()) throw Error(ErrorCode::InvalidArgument, "column count unknown for an empty row list");
    return from_rows(rows, rows.front().size());
}

std::uint8_t BinaryMatrix::at(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_) throw Error(ErrorCode::CoordinateOutOfRange, "matrix entry out of range");
    return data_[r * cols_ + c];
}

void BinaryMatrix::set(std::size_t r, std::size_t c, bool value) {
    if (r >= rows_ || c >= cols_) throw Error(ErrorCode::CoordinateOutOfRange, "matrix entry out of range");
    data_[r * cols_ + c] = value ? 1 : 0;
}

std::size_t BinaryMatrix::row_weight(std::size_t r) const {
    std::size_t w = 0;
    for (std::size_t c = 0; c < cols_; ++c) w += at(r, c);
    return w;
}

std::vector<std::size_t> BinaryMatrix::row_support(std::size_t r) const {
    std::vector<std::size_t> s;
    for (std::size_t c = 0; c < cols_; ++c) {
        if (at(r, c)) s.push_back(c);
    }
    return s;
}

// -------------------------------------------------------------------- Graph

Graph::Graph(std::size_t vertex_count, std::vector<Edge> edges) : vertex_count_(vertex_count) {
    std::set<Edge> seen;
    edges_.reserve(edges.size());
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u >= vertex_count || v >= vertex_count) throw Error(ErrorCode::CoordinateOutOfRange, "edge endpoint out of range", i);
        if (u == v) throw Error(ErrorCode::InvalidArgument, "self-loop", i);
        Edge e{std::min(u, v), std::max(u, v)};
        if (!seen.insert(e).second) throw Error(ErrorCode::InvalidArgument, "duplicate edge", i);
        edges_.push_back(e);
    }
}

bool Graph::has_edge(std::size_t u, std::size_t v) const {
    Edge e{std::min(u, v), std::max(u, v)};
    return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

// ------------------------------------------------------------ PolytopeCode

const char* family_name(Family f) {
    switch (f) {
        case Family::Cover: return "cover";
        case Family::Pack: return "pack";
        case Family::Part: return "part";
        case Family::Stable: return "stable";
        case Family::DCP: return "dcp";
        case Family::NPadj: return "npadj";
    }
    return "?";
}

Family parse_family(std::string_view name) {
    for (Family f : {Family::Cover, Family::Pack, Family::Part, Family::Stable, Family::DCP, Family::NPadj}) {
        if (name == family_name(f)) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "unknown family '" + std::string(name) + "'");
}

const BinaryMatrix& PolytopeCode::matrix() const {
    if (auto* m = std::get_if<BinaryMatrix>(&params_)) return *m;
    throw Error(ErrorCode::InvalidArgument, "stable-set code has no matrix");
}

const Graph& PolytopeCode::graph() const {
    if (auto* g = std::get_if<Graph>(&params_)) return *g;
    throw Error(ErrorCode::InvalidArgument, "matrix code has no graph");
}

// ------------------------------------------------------------------ layouts

std::size_t NPadjLayout::y(int which) const {
    if (which < 1 || which > 3) throw Error(ErrorCode::CoordinateOutOfRange, "y index must be 1, 2 or 3");
    return static_cast<std::size_t>(which - 1);
}

std::string NPadjLayout::name(std::size_t index) const {
    if (index >= dimension()) throw Error(ErrorCode::CoordinateOutOfRange, "layout index out of range", index);
    if (index < 3) return "y" + std::to_string(index + 1);
    std::size_t rel = index - 3;
    std::size_t group = rel / n_;
    std::string j = std::to_string(rel % n_ + 1);
    if (group == 0) return "x" + j;
    if (group == 1) return "xbar" + j;
    return "xp" + j;
}

namespace {

std::optional<std::size_t> parse_suffix(std::string_view name, std::string_view prefix) {
    if (name.size() <= prefix.size() || name.substr(0, prefix.size()) != prefix) return std::nullopt;
    auto digits = name.substr(prefix.size());
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) return std::nullopt;
    return value;
}

}  // namespace

std::size_t NPadjLayout::index_of(std::string_view name) const {
    auto in_range = [&](std::optional<std::size_t> j) { return j && *j >= 1 && *j <= n_; };
    // "xbar"/"xp" before "x" since "x" is a prefix of both
    if (auto j = parse_suffix(name, "xbar"); in_range(j)) return xbar(*j - 1);
    if (auto j = parse_suffix(name, "xp"); in_range(j)) return xprime(*j - 1);
    if (auto j = parse_suffix(name, "x"); in_range(j)) return x(*j - 1);
    if (auto j = parse_suffix(name, "y"); j && *j >= 1 && *j <= 3) return y(static_cast<int>(*j));
    throw Error(ErrorCode::InvalidArgument, "unknown coordinate name '" + std::string(name) + "'");
}

std::string DcpLayout::name(std::size_t index) const {
    if (index == a()) return "a";
    if (index == b()) return "b";
    if (index >= dimension()) throw Error(ErrorCode::CoordinateOutOfRange, "layout index out of range", index);
    return inner_.name(index - offset());
}

std::size_t DcpLayout::index_of(std::string_view name) const {
    if (name == "a") return a();
    if (name == "b") return b();
    return shifted(inner_.index_of(name));
}

// ---------------------------------------------------------------- AffineMap

AffineMap::AffineMap(RationalMatrix t, RationalVector c) : t_(std::move(t)), c_(std::move(c)), source_dim_(0) {
    if (t_.size() != c_.size()) throw Error(ErrorCode::DimensionMismatch, "affine map: T rows != offset length");
    if (!t_.empty()) {
        source_dim_ = t_.front().size();
        for (std::size_t r = 0; r < t_.size(); ++r) {
            if (t_[r].size() != source_dim_) throw Error(ErrorCode::DimensionMismatch, "affine map: ragged T", r);
        }
    }
}

AffineMap AffineMap::identity(std::size_t dim) {
    RationalMatrix t(dim, RationalVector(dim, Rational(0)));
    for (std::size_t i = 0; i < dim; ++i) t[i][i] = 1;
    return AffineMap(std::move(t), RationalVector(dim, Rational(0)));
}

RationalVector AffineMap::apply(const RationalVector& x) const {
    if (x.size() != source_dim_) throw Error(ErrorCode::DimensionMismatch, "affine map source dimension");
    RationalVector out = c_;
    for (std::size_t r = 0; r < t_.size(); ++r) out[r] += dot(t_[r], x);
    return out;
}

RationalVector AffineMap::apply(const BitVector& x) const {
    if (x.size() != source_dim_) throw Error(ErrorCode::DimensionMismatch, "affine map source dimension");
    RationalVector out = c_;
    for (std::size_t r = 0; r < t_.size(); ++r) {
        for (std::size_t j = 0; j < source_dim_; ++j) {
            if (x[j]) out[r] += t_[r][j];
        }
    }
    return out;
}

AffineMap compose(const AffineMap& outer, const AffineMap& inner) {
    if (outer.source_dim() != inner.target_dim()) {
        throw Error(ErrorCode::DimensionMismatch, "compose: outer source != inner target");
    }
    std::size_t rows = outer.target_dim();
    std::size_t cols = inner.source_dim();
    RationalMatrix t(rows, RationalVector(cols, Rational(0)));
    for (std::size_t r = 0; r < rows; ++r) {
        for (std::size_t k = 0; k < outer.source_dim(); ++k) {
            const Rational& w = outer.t_[r][k];
            if (sgn(w) == 0) continue;
            for (std::size_t c = 0; c < cols; ++c) t[r][c] += w * inner.t_[k][c];
        }
    }
    RationalVector c = outer.apply(inner.c_);
    AffineMap out(std::move(t), std::move(c));
    out.source_dim_ = cols;
    return out;
}

// --------------------------------------------------------------- operations

void validate_code(const PolytopeCode& code) {
    switch (code.family()) {
        case Family::DCP: {
            const auto& b = code.matrix();
            for (std::size_t r = 0; r < b.rows(); ++r) {
                if (b.row_weight(r) != 4) {
                    throw Error(ErrorCode::DcpRowWeight, "DCP row " + std::to_string(r) + " does not have exactly four ones", r);
                }
            }
            break;
        }
        case Family::NPadj: {
            const auto& a = code.matrix();
            if (a.rows() == 0) throw Error(ErrorCode::NPadjEmptyMatrix, "NPadj source matrix has no rows");
            for (std::size_t r = 0; r < a.rows(); ++r) {
                if (a.row_weight(r) != 3) {
                    throw Error(ErrorCode::NPadjRowWeight, "NPadj row " + std::to_string(r) + " does not have exactly three ones", r);
                }
            }
            break;
        }
        default:
            break;
    }
}

std::size_t dimension(const PolytopeCode& code) {
    switch (code.family()) {
        case Family::Stable: return code.graph().vertex_count();
        case Family::NPadj: return 3 * code.matrix().cols() + 3;
        default: return code.matrix().cols();
    }
}

std::size_t code_length(const PolytopeCode& code) {
    if (code.family() == Family::Stable) {
        const auto& g = code.graph();
        return g.vertex_count() + 2 * g.edges().size();
    }
    return code.matrix().rows() * code.matrix().cols();
}

std::vector<LinearRow> constraint_rows(const PolytopeCode& code) {
    std::vector<LinearRow> rows;
    auto matrix_rows = [&](LinearRow::Sense sense, int rhs) {
        const auto& a = code.matrix();
        for (std::size_t r = 0; r < a.rows(); ++r) rows.push_back({a.row_support(r), sense, rhs});
    };
    switch (code.family()) {
        case Family::Cover: matrix_rows(LinearRow::Sense::AtLeast, 1); break;
        case Family::Pack: matrix_rows(LinearRow::Sense::AtMost, 1); break;
        case Family::Part: matrix_rows(LinearRow::Sense::Equal, 1); break;
        case Family::DCP: matrix_rows(LinearRow::Sense::Equal, 2); break;
        case Family::Stable:
            for (auto [u, v] : code.graph().edges()) rows.push_back({{u, v}, LinearRow::Sense::AtMost, 1});
            break;
        case Family::NPadj: {
            const auto& a = code.matrix();
            NPadjLayout L(a.cols());
            for (std::size_t j = 0; j < L.n(); ++j) {
                rows.push_back({{L.x(j), L.xbar(j)}, LinearRow::Sense::Equal, 1});
                rows.push_back({{L.y(1), L.y(2), L.xbar(j), L.xprime(j)}, LinearRow::Sense::Equal, 2});
            }
            for (std::size_t r = 0; r < a.rows(); ++r) {
                auto s = a.row_support(r);
                if (s.size() != 3) throw Error(ErrorCode::NPadjRowWeight, "NPadj row must have three ones", r);
                // smallest column takes the x-role, the other two the x'-role
                rows.push_back({{L.y(3), L.x(s[0]), L.xprime(s[1]), L.xprime(s[2])}, LinearRow::Sense::Equal, 2});
            }
            break;
        }
    }
    return rows;
}

namespace {

bool row_holds(const LinearRow& row, const BitVector& x) {
    int sum = 0;
    for (auto i : row.support) sum += x[i];
    switch (row.sense) {
        case LinearRow::Sense::Equal: return sum == row.rhs;
        case LinearRow::Sense::AtMost: return sum <= row.rhs;
        case LinearRow::Sense::AtLeast: return sum >= row.rhs;
    }
    return false;
}

}  // namespace

bool membership(const PolytopeCode& code, const BitVector& x) {
    if (x.size() != dimension(code)) {
        throw Error(ErrorCode::DimensionMismatch,
                    "vector length " + std::to_string(x.size()) + " != dimension " + std::to_string(dimension(code)));
    }
    for (const auto& row : constraint_rows(code)) {
        if (!row_holds(row, x)) return false;
    }
    return true;
}

RationalVector apply_affine(const AffineMap& map, const BitVector& x) { return map.apply(x); }
RationalVector apply_affine(const AffineMap& map, const RationalVector& x) { return map.apply(x); }

std::optional<BitVector> as_bitvector(const RationalVector& v) {
    BitVector out(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (v[i] == 1) {
            out.set(i, true);
        } else if (v[i] != 0) {
            return std::nullopt;
        }
    }
    return out;
}

}  // namespace polyadj

#include "polyadj/hull.hpp"

#include <algorithm>
#include <set>

#include "polyadj/simplex.hpp"

namespace polyadj {

// -------------------------------------------------------------- enumeration

namespace {

class VertexSearch {
public:
    VertexSearch(std::size_t dim, std::vector<LinearRow> rows)
        : dim_(dim), rows_(std::move(rows)), rows_of_(dim), sum_(rows_.size(), 0), free_(rows_.size(), 0), current_(dim) {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            for (auto i : rows_[r].support) {
                if (i >= dim_) throw Error(ErrorCode::CoordinateOutOfRange, "constraint references missing coordinate", r);
                rows_of_[i].push_back(r);
            }
            free_[r] = static_cast<int>(rows_[r].support.size());
        }
    }

    std::vector<BitVector> run() {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            if (!feasible(r)) return {};
        }
        descend(0);
        return std::move(out_);
    }

private:
    bool feasible(std::size_t r) const {
        const LinearRow& row = rows_[r];
        switch (row.sense) {
            case LinearRow::Sense::Equal: return sum_[r] <= row.rhs && sum_[r] + free_[r] >= row.rhs;
            case LinearRow::Sense::AtMost: return sum_[r] <= row.rhs;
            case LinearRow::Sense::AtLeast: return sum_[r] + free_[r] >= row.rhs;
        }
        return false;
    }

    void descend(std::size_t i) {
        if (i == dim_) {
            out_.push_back(current_);
            return;
        }
        for (int value = 0; value <= 1; ++value) {
            current_.set(i, value == 1);
            bool ok = true;
            for (auto r : rows_of_[i]) {
                sum_[r] += value;
                free_[r] -= 1;
            }
            for (auto r : rows_of_[i]) {
                if (!feasible(r)) {
                    ok = false;
                    break;
                }
            }
            if (ok) descend(i + 1);
            for (auto r : rows_of_[i]) {
                sum_[r] -= value;
                free_[r] += 1;
            }
        }
        current_.set(i, false);
    }

    std::size_t dim_;
    std::vector<LinearRow> rows_;
    std::vector<std::vector<std::size_t>> rows_of_;
    std::vector<int> sum_;
    std::vector<int> free_;
    BitVector current_;
    std::vector<BitVector> out_;
};

void check_dimensions(const std::vector<BitVector>& points, std::size_t dim) {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != dim) throw Error(ErrorCode::DimensionMismatch, "vertex length differs", i);
    }
}

HullCertificate certificate_from(const RationalVector& weights, const std::vector<std::size_t>& index_map) {
    HullCertificate cert;
    for (std::size_t k = 0; k < weights.size(); ++k) {
        if (sgn(weights[k]) > 0) cert.support.emplace_back(index_map[k], weights[k]);
    }
    return cert;
}

std::optional<HullCertificate> hull_lp(const RationalVector& p, const std::vector<BitVector>& points,
                                       const std::vector<std::size_t>& candidates) {
    std::size_t d = p.size();
    std::size_t r = candidates.size();
    RationalMatrix a(d + 1, RationalVector(r, Rational(0)));
    RationalVector b(d + 1);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            if (points[candidates[k]][i]) a[i][k] = 1;
        }
        b[i] = p[i];
    }
    for (std::size_t k = 0; k < r; ++k) a[d][k] = 1;
    b[d] = 1;
    auto sol = lp::find_nonnegative_solution(a, b, r);
    if (!sol) return std::nullopt;
    return certificate_from(*sol, candidates);
}

// Null-space vector of the columns (x_k; 1), or nullopt when they are
// affinely independent.
std::optional<RationalVector> affine_dependence(const std::vector<const BitVector*>& cols) {
    std::size_t r = cols.size();
    if (r == 0) return std::nullopt;
    std::size_t d = cols.front()->size();
    RationalMatrix m(d + 1, RationalVector(r, Rational(0)));
    for (std::size_t k = 0; k < r; ++k) {
        for (std::size_t i = 0; i < d; ++i) m[i][k] = static_cast<int>((*cols[k])[i]);
        m[d][k] = 1;
    }
    // reduced row echelon form
    std::vector<std::size_t> pivot_col;
    std::size_t row = 0;
    std::vector<bool> is_pivot(r, false);
    for (std::size_t c = 0; c < r && row < m.size(); ++c) {
        std::size_t sel = row;
        while (sel < m.size() && sgn(m[sel][c]) == 0) ++sel;
        if (sel == m.size()) continue;
        std::swap(m[sel], m[row]);
        Rational inv = 1 / m[row][c];
        for (auto& e : m[row]) e *= inv;
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (i == row || sgn(m[i][c]) == 0) continue;
            Rational f = m[i][c];
            for (std::size_t j = c; j < r; ++j) m[i][j] -= f * m[row][j];
        }
        pivot_col.push_back(c);
        is_pivot[c] = true;
        ++row;
    }
    std::size_t free_col = r;
    for (std::size_t c = 0; c < r; ++c) {
        if (!is_pivot[c]) {
            free_col = c;
            break;
        }
    }
    if (free_col == r) return std::nullopt;
    RationalVector mu(r, Rational(0));
    mu[free_col] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) mu[pivot_col[i]] = -m[i][free_col];
    return mu;
}

std::set<BitVector> as_set(const std::vector<BitVector>& v) { return {v.begin(), v.end()}; }

}  // namespace

std::vector<BitVector> enumerate_vertices(const PolytopeCode& code, std::size_t cap) {
    validate_code(code);
    std::size_t d = dimension(code);
    if (d > cap) {
        throw Error(ErrorCode::DimensionCapExceeded,
                    "dimension " + std::to_string(d) + " exceeds enumeration cap " + std::to_string(cap));
    }
    return VertexSearch(d, constraint_rows(code)).run();
}

// ---------------------------------------------------------- certificates

std::string HullCertificate::to_string() const {
    std::string out;
    for (const auto& [idx, w] : support) {
        if (!out.empty()) out += ' ';
        out += std::to_string(idx) + ":" + polyadj::to_string(w);
    }
    return out;
}

std::string FaceCertificate::to_string() const {
    return polyadj::to_string(normal) + " . x = " + polyadj::to_string(offset);
}

bool verify_hull_certificate(const RationalVector& p, const std::vector<BitVector>& points, const HullCertificate& cert) {
    if (cert.support.empty()) return false;
    RationalVector acc(p.size(), Rational(0));
    Rational total = 0;
    for (const auto& [idx, w] : cert.support) {
        if (idx >= points.size() || sgn(w) <= 0 || points[idx].size() != p.size()) return false;
        total += w;
        for (std::size_t i = 0; i < p.size(); ++i) {
            if (points[idx][i]) acc[i] += w;
        }
    }
    return total == 1 && acc == p;
}

bool verify_face_certificate(const std::vector<BitVector>& face, const std::vector<BitVector>& points,
                             const FaceCertificate& cert) {
    auto inside = as_set(face);
    for (const auto& x : points) {
        if (x.size() != cert.normal.size()) return false;
        Rational value = dot(cert.normal, x.to_rational());
        if (inside.count(x) != 0) {
            if (value != cert.offset) return false;
        } else if (value > cert.offset - 1) {
            return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ hull queries

std::optional<HullCertificate> in_convex_hull(const RationalVector& p, const std::vector<BitVector>& points) {
    if (points.empty()) throw Error(ErrorCode::EmptyVertexList, "hull of an empty vertex list");
    check_dimensions(points, p.size());
    std::vector<std::size_t> all(points.size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    auto cert = hull_lp(p, points, all);
    if (cert && !verify_hull_certificate(p, points, *cert)) {
        throw Error(ErrorCode::InvariantViolation, "simplex produced an invalid hull certificate");
    }
    return cert;
}

HullCertificate caratheodory_reduce(const RationalVector& p, const std::vector<BitVector>& points,
                                    const HullCertificate& cert) {
    if (!verify_hull_certificate(p, points, cert)) {
        throw Error(ErrorCode::InvalidCertificate, "certificate does not represent the point");
    }
    HullCertificate current = cert;
    for (;;) {
        std::vector<const BitVector*> cols;
        for (const auto& entry : current.support) cols.push_back(&points[entry.first]);
        auto mu = affine_dependence(cols);
        if (!mu) break;
        // largest step along -mu keeping all weights non-negative
        std::size_t drop = current.support.size();
        Rational step;
        for (std::size_t k = 0; k < current.support.size(); ++k) {
            if (sgn((*mu)[k]) <= 0) continue;
            Rational ratio = current.support[k].second / (*mu)[k];
            if (drop == current.support.size() || ratio < step) {
                drop = k;
                step = ratio;
            }
        }
        HullCertificate next;
        for (std::size_t k = 0; k < current.support.size(); ++k) {
            if (k == drop) continue;
            Rational w = current.support[k].second - step * (*mu)[k];
            if (sgn(w) > 0) next.support.emplace_back(current.support[k].first, w);
        }
        current = std::move(next);
    }
    if (!verify_hull_certificate(p, points, current)) {
        throw Error(ErrorCode::InvariantViolation, "Caratheodory reduction broke the certificate");
    }
    return current;
}

std::optional<FaceCertificate> is_face(const std::vector<BitVector>& face, const std::vector<BitVector>& points) {
    auto all = as_set(points);
    auto inside = as_set(face);
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (all.count(face[i]) == 0) throw Error(ErrorCode::NotASubset, "face vertex not in the vertex list", i);
    }
    if (points.empty()) return FaceCertificate{{}, Rational(0)};
    std::size_t d = points.front().size();
    check_dimensions(points, d);

    // unknowns: a+ (d), a- (d), b+, b-, then one slack per vertex outside the face
    std::vector<const BitVector*> outside;
    std::vector<const BitVector*> on_face;
    for (const auto& x : all) (inside.count(x) ? on_face : outside).push_back(&x);
    std::size_t cols = 2 * d + 2 + outside.size();
    RationalMatrix a;
    RationalVector b;
    auto hyperplane_row = [&](const BitVector& x) {
        RationalVector row(cols, Rational(0));
        for (std::size_t i = 0; i < d; ++i) {
            if (x[i]) {
                row[i] = 1;
                row[d + i] = -1;
            }
        }
        row[2 * d] = -1;
        row[2 * d + 1] = 1;
        return row;
    };
    for (const auto* x : on_face) {
        a.push_back(hyperplane_row(*x));
        b.emplace_back(0);
    }
    for (std::size_t k = 0; k < outside.size(); ++k) {
        auto row = hyperplane_row(*outside[k]);
        row[2 * d + 2 + k] = 1;
        a.push_back(std::move(row));
        b.emplace_back(-1);
    }
    auto sol = lp::find_nonnegative_solution(a, b, cols);
    if (!sol) return std::nullopt;
    FaceCertificate cert;
    cert.normal.resize(d);
    for (std::size_t i = 0; i < d; ++i) cert.normal[i] = (*sol)[i] - (*sol)[d + i];
    cert.offset = (*sol)[2 * d] - (*sol)[2 * d + 1];
    if (!verify_face_certificate(face, points, cert)) {
        throw Error(ErrorCode::InvariantViolation, "simplex produced an invalid face certificate");
    }
    return cert;
}

RationalVector midpoint(const BitVector& u, const BitVector& v) {
    if (u.size() != v.size()) throw Error(ErrorCode::DimensionMismatch, "midpoint of vectors of different length");
    RationalVector m(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) m[i] = ratio(u[i] + v[i], 2);
    return m;
}

namespace {

std::vector<std::size_t> others(const std::vector<BitVector>& points, const BitVector& u, const BitVector& v) {
    std::vector<std::size_t> rest;
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i] != u && points[i] != v) rest.push_back(i);
    }
    return rest;
}

void check_pair(const std::vector<BitVector>& points, const BitVector& u, const BitVector& v) {
    if (u == v) throw Error(ErrorCode::EqualVertices, "adjacency query needs two distinct vertices");
    for (const auto* w : {&u, &v}) {
        if (std::find(points.begin(), points.end(), *w) == points.end()) {
            throw Error(ErrorCode::VertexNotInSet, "vertex " + w->to_string() + " is not in the vertex set");
        }
    }
}

std::optional<SegmentCertificate> segment_lp(const std::vector<BitVector>& points, const BitVector& u,
                                             const BitVector& v, const std::vector<std::size_t>& rest) {
    // unknowns: lambda over rest, theta, sigma;  sum lambda x - theta (u - v) = v,
    // sum lambda = 1, theta + sigma = 1
    std::size_t d = u.size();
    std::size_t r = rest.size();
    std::size_t cols = r + 2;
    RationalMatrix a(d + 2, RationalVector(cols, Rational(0)));
    RationalVector b(d + 2, Rational(0));
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t k = 0; k < r; ++k) {
            if (points[rest[k]][i]) a[i][k] = 1;
        }
        a[i][r] = -(static_cast<int>(u[i]) - static_cast<int>(v[i]));
        b[i] = static_cast<int>(v[i]);
    }
    for (std::size_t k = 0; k < r; ++k) a[d][k] = 1;
    b[d] = 1;
    a[d + 1][r] = 1;
    a[d + 1][r + 1] = 1;
    b[d + 1] = 1;
    auto sol = lp::find_nonnegative_solution(a, b, cols);
    if (!sol) return std::nullopt;
    SegmentCertificate cert;
    cert.weight_u = (*sol)[r];
    RationalVector lambda(sol->begin(), sol->begin() + static_cast<std::ptrdiff_t>(r));
    cert.hull = certificate_from(lambda, rest);
    return cert;
}

}  // namespace

bool midpoint_outside_rest(const std::vector<BitVector>& points, const BitVector& u, const BitVector& v) {
    check_pair(points, u, v);
    auto rest = others(points, u, v);
    if (rest.empty()) return true;
    return !hull_lp(midpoint(u, v), points, rest).has_value();
}

AdjacencyVerdict are_adjacent(const std::vector<BitVector>& points, const BitVector& u, const BitVector& v) {
    check_pair(points, u, v);
    AdjacencyVerdict verdict;
    if (auto face = is_face({u, v}, points)) {
        verdict.adjacent = true;
        verdict.face = std::move(face);
        return verdict;
    }
    auto rest = others(points, u, v);
    if (auto mid = hull_lp(midpoint(u, v), points, rest)) {
        verdict.segment = SegmentCertificate{ratio(1, 2), std::move(*mid)};
    } else {
        verdict.segment = segment_lp(points, u, v, rest);
    }
    if (!verdict.segment) {
        throw Error(ErrorCode::InvariantViolation, "non-edge without a segment point in the hull of the other vertices");
    }
    RationalVector q(u.size());
    Rational wu = verdict.segment->weight_u;
    for (std::size_t i = 0; i < u.size(); ++i) q[i] = wu * static_cast<int>(u[i]) + (1 - wu) * static_cast<int>(v[i]);
    if (sgn(wu) <= 0 || wu >= 1 || !verify_hull_certificate(q, points, verdict.segment->hull)) {
        throw Error(ErrorCode::InvariantViolation, "invalid non-adjacency certificate");
    }
    return verdict;
}

}  // namespace polyadj

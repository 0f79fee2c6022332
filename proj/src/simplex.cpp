#include "polyadj/simplex.hpp"

#include "polyadj/error.hpp"

namespace polyadj::lp {

namespace {

class Tableau {
public:
    Tableau(const RationalMatrix& a, const RationalVector& b, std::size_t cols)
        : m_(a.size()), n_(cols), width_(cols + a.size() + 1), rows_(a.size()), cost_(width_, Rational(0)), basis_(a.size()) {
        for (std::size_t i = 0; i < m_; ++i) {
            if (a[i].size() != n_) throw Error(ErrorCode::DimensionMismatch, "LP row width", i);
            rows_[i].assign(width_, Rational(0));
            bool flip = sgn(b[i]) < 0;
            for (std::size_t j = 0; j < n_; ++j) rows_[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
            rows_[i][n_ + i] = 1;
            rows_[i][width_ - 1] = flip ? Rational(-b[i]) : b[i];
            basis_[i] = n_ + i;
        }
        // phase-1 objective: minimise the sum of artificials; reduced costs of
        // structural columns start at minus the column sums
        for (std::size_t i = 0; i < m_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(rows_[i][j]) != 0) cost_[j] -= rows_[i][j];
            }
            cost_[width_ - 1] -= rows_[i][width_ - 1];
        }
    }

    bool solve() {
        for (;;) {
            std::size_t entering = n_;
            for (std::size_t j = 0; j < n_; ++j) {
                if (sgn(cost_[j]) < 0) {
                    entering = j;
                    break;
                }
            }
            if (entering == n_) break;

            std::size_t leave = m_;
            Rational best;
            for (std::size_t i = 0; i < m_; ++i) {
                const Rational& coef = rows_[i][entering];
                if (sgn(coef) <= 0) continue;
                Rational ratio = rows_[i][width_ - 1] / coef;
                if (leave == m_ || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            // phase 1 is bounded below by zero, so an improving column always has a pivot row
            if (leave == m_) throw Error(ErrorCode::InvariantViolation, "phase-1 simplex reported an unbounded ray");
            pivot(leave, entering);
        }
        return sgn(cost_[width_ - 1]) == 0;
    }

    RationalVector solution() const {
        RationalVector x(n_, Rational(0));
        for (std::size_t i = 0; i < m_; ++i) {
            if (basis_[i] < n_) x[basis_[i]] = rows_[i][width_ - 1];
        }
        return x;
    }

private:
    void pivot(std::size_t r, std::size_t c) {
        RationalVector& prow = rows_[r];
        Rational inv = 1 / prow[c];
        std::vector<std::size_t> nz;
        for (std::size_t j = 0; j < width_; ++j) {
            if (sgn(prow[j]) != 0) {
                prow[j] *= inv;
                nz.push_back(j);
            }
        }
        auto eliminate = [&](RationalVector& row) {
            if (sgn(row[c]) == 0) return;
            Rational factor = row[c];
            for (auto j : nz) row[j] -= factor * prow[j];
        };
        for (std::size_t i = 0; i < m_; ++i) {
            if (i != r) eliminate(rows_[i]);
        }
        eliminate(cost_);
        basis_[r] = c;
    }

    std::size_t m_;
    std::size_t n_;
    std::size_t width_;
    RationalMatrix rows_;
    RationalVector cost_;
    std::vector<std::size_t> basis_;
};

}  // namespace

std::optional<RationalVector> find_nonnegative_solution(const RationalMatrix& a, const RationalVector& b,
                                                        std::size_t cols) {
    if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "LP: rows != rhs length");
    Tableau t(a, b, cols);
    if (!t.solve()) return std::nullopt;
    return t.solution();
}

}  // namespace polyadj::lp

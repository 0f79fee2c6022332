#include "polyadj/rational.hpp"

#include <stdexcept>

#include "polyadj/error.hpp"

namespace polyadj {

Rational ratio(long num, long den) {
    if (den == 0) throw Error(ErrorCode::InvalidArgument, "zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

std::string to_string(const RationalVector& v) {
    std::string out = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i > 0) out += ", ";
        out += to_string(v[i]);
    }
    return out + ")";
}

Rational dot(const RationalVector& a, const RationalVector& b) {
    if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
    Rational sum = 0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) != 0 && sgn(b[i]) != 0) sum += a[i] * b[i];
    }
    return sum;
}

}  // namespace polyadj

#include "belyi/mobius.hpp"

#include <sstream>
#include <stdexcept>

namespace belyi {

MobiusMap::MobiusMap(Rational a, Rational b, Rational c, Rational d)
    : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)), d_(std::move(d)) {
    if (a_ * d_ - b_ * c_ == 0)
        throw std::invalid_argument("MobiusMap: singular coefficient matrix");
}

ExtPoint MobiusMap::apply(const ExtPoint& x) const {
    if (x.is_infinity()) {
        if (c_ == 0) return ExtPoint::infinity();
        return ExtPoint::finite(a_ / c_);
    }
    Rational den = c_ * x.value() + d_;
    if (den == 0) return ExtPoint::infinity();
    return ExtPoint::finite((a_ * x.value() + b_) / den);
}

MobiusMap MobiusMap::inverse() const { return MobiusMap(d_, -b_, -c_, a_); }

MobiusMap MobiusMap::compose_after(const MobiusMap& o) const {
    return MobiusMap(a_ * o.a_ + b_ * o.c_, a_ * o.b_ + b_ * o.d_, c_ * o.a_ + d_ * o.c_,
                     c_ * o.b_ + d_ * o.d_);
}

bool MobiusMap::is_identity() const { return b_ == 0 && c_ == 0 && a_ == d_; }

std::string MobiusMap::to_string() const {
    std::ostringstream os;
    os << "(" << rational_to_string(a_) << "*z + " << rational_to_string(b_) << ") / ("
       << rational_to_string(c_) << "*z + " << rational_to_string(d_) << ")";
    return os.str();
}

MobiusMap mobius_three_point(const ExtPoint& p0, const ExtPoint& p1, const ExtPoint& p2) {
    if (p0 == p1 || p0 == p2 || p1 == p2)
        throw std::invalid_argument("mobius_three_point: points must be distinct");
    if (p0.is_infinity()) {
        // z -> (p1 - p2) / (z - p2)
        return MobiusMap(Rational(0), p1.value() - p2.value(), Rational(1), -p2.value());
    }
    if (p1.is_infinity()) {
        // z -> (z - p0) / (z - p2)
        return MobiusMap(Rational(1), -p0.value(), Rational(1), -p2.value());
    }
    if (p2.is_infinity()) {
        // z -> (z - p0) / (p1 - p0)
        return MobiusMap(Rational(1), -p0.value(), Rational(0), p1.value() - p0.value());
    }
    Rational u = p1.value() - p2.value();
    Rational v = p1.value() - p0.value();
    return MobiusMap(u, -p0.value() * u, v, -p2.value() * v);
}

}  // namespace belyi

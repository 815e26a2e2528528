#ifndef BELYI_MOBIUS_HPP
#define BELYI_MOBIUS_HPP

#include <array>

#include "belyi/rational.hpp"

namespace belyi {

/// Fractional linear transformation z -> (a z + b) / (c z + d) over Q,
/// with nonzero determinant.
class MobiusMap {
  public:
    MobiusMap(Rational a, Rational b, Rational c, Rational d);

    static MobiusMap identity() {
        return MobiusMap(Rational(1), Rational(0), Rational(0), Rational(1));
    }

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    const Rational& c() const { return c_; }
    const Rational& d() const { return d_; }

    ExtPoint apply(const ExtPoint& x) const;

    MobiusMap inverse() const;
    // this after other: (this . other)(z) = this(other(z))
    MobiusMap compose_after(const MobiusMap& other) const;

    bool is_identity() const;

    std::string to_string() const;

  private:
    Rational a_, b_, c_, d_;
};

// The unique Mobius map sending (p0, p1, p2) to (0, 1, oo).
MobiusMap mobius_three_point(const ExtPoint& p0, const ExtPoint& p1, const ExtPoint& p2);

}  // namespace belyi

#endif

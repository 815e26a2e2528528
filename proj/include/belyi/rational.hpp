#ifndef BELYI_RATIONAL_HPP
#define BELYI_RATIONAL_HPP

#include <gmpxx.h>

#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

namespace belyi {

using Integer = mpz_class;
using Rational = mpq_class;

// Canonical (reduced, positive denominator) rational from a num/den pair.
inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

// Parses "a" or "a/b" with optional sign.
Rational parse_rational(const std::string& text);

// Reduced "num/den" rendering; integers print without the "/1".
std::string rational_to_string(const Rational& q);

/// A point of the projective line over Q: a finite rational or infinity.
class ExtPoint {
  public:
    ExtPoint() : value_(Rational(0)) {}
    explicit ExtPoint(Rational v) : value_(std::move(v)) {}

    static ExtPoint infinity() {
        ExtPoint p;
        p.value_ = Inf{};
        return p;
    }
    static ExtPoint finite(Rational v) { return ExtPoint(std::move(v)); }

    bool is_infinity() const { return std::holds_alternative<Inf>(value_); }
    bool is_finite() const { return !is_infinity(); }

    const Rational& value() const {
        if (is_infinity()) throw std::logic_error("ExtPoint: value() on infinity");
        return std::get<Rational>(value_);
    }

    bool operator==(const ExtPoint& o) const {
        if (is_infinity() || o.is_infinity()) return is_infinity() == o.is_infinity();
        return value() == o.value();
    }
    bool operator!=(const ExtPoint& o) const { return !(*this == o); }

    // Total order with infinity greatest; used for deterministic set handling.
    bool operator<(const ExtPoint& o) const {
        if (is_infinity()) return false;
        if (o.is_infinity()) return true;
        return value() < o.value();
    }

    std::string to_string() const { return is_infinity() ? "oo" : rational_to_string(value()); }

  private:
    struct Inf {
        bool operator==(const Inf&) const { return true; }
    };
    std::variant<Rational, Inf> value_;
};

}  // namespace belyi

#endif

#ifndef BELYI_POLY_HPP
#define BELYI_POLY_HPP

#include <string>
#include <vector>

#include "belyi/rational.hpp"

namespace belyi {

/// Univariate polynomial over Q, coefficients stored in ascending degree
/// order with the trailing (leading-degree) zero coefficients trimmed.
/// The zero polynomial has an empty coefficient list and degree -1.
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

    static RatPoly zero() { return RatPoly(); }
    static RatPoly constant(Rational c) { return RatPoly({std::move(c)}); }
    static RatPoly identity() { return RatPoly({Rational(0), Rational(1)}); }
    // c * z^k
    static RatPoly monomial(Rational c, int k);

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    const Rational& leading() const;
    Rational coeff(int k) const {
        return k >= 0 && k < static_cast<int>(coeffs_.size()) ? coeffs_[k] : Rational(0);
    }

    Rational evaluate(const Rational& x) const;
    ExtPoint evaluate(const ExtPoint& x) const;

    RatPoly monic() const;

    RatPoly operator+(const RatPoly& o) const;
    RatPoly operator-(const RatPoly& o) const;
    RatPoly operator*(const RatPoly& o) const;
    RatPoly operator*(const Rational& c) const;
    RatPoly operator-() const;
    bool operator==(const RatPoly& o) const { return coeffs_ == o.coeffs_; }
    bool operator!=(const RatPoly& o) const { return !(*this == o); }

    RatPoly pow(unsigned n) const;

    std::string to_string(const std::string& var = "z") const;

  private:
    void trim();
    std::vector<Rational> coeffs_;
};

// quotient/remainder with deg(rem) < deg(divisor)
struct PolyDivision {
    RatPoly quotient;
    RatPoly remainder;
};
PolyDivision poly_divmod(const RatPoly& num, const RatPoly& den);

// true iff divisor divides p exactly
bool poly_divides(const RatPoly& divisor, const RatPoly& p);

RatPoly poly_derivative(const RatPoly& p);

RatPoly poly_compose(const RatPoly& outer, const RatPoly& inner);

// monic gcd; rejects the (0, 0) input
RatPoly poly_gcd(const RatPoly& f, const RatPoly& g);

// monic polynomial with the same roots as f and no repeated ones
RatPoly squarefree_part(const RatPoly& f);

// exact resultant of f and g (fraction-free integer determinant after
// clearing denominators)
Rational resultant(const RatPoly& f, const RatPoly& g);

// all distinct rational roots of f, ascending
std::vector<Rational> rational_roots(const RatPoly& f);

// Clears denominators and the integer content: returns primitive integer
// coefficients of a positive multiple of f, ascending order.
std::vector<Integer> primitive_integer_coeffs(const RatPoly& f);

}  // namespace belyi

#endif

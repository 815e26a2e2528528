#include "belyi/algebraic_set.hpp"

#include <stdexcept>

namespace belyi {

AlgebraicSet::AlgebraicSet(RatPoly defining) : defining_(defining.monic()) {
    if (defining_.degree() < 2)
        throw std::invalid_argument("AlgebraicSet: defining polynomial must have degree >= 2");
    if (poly_gcd(defining_, poly_derivative(defining_)).degree() != 0)
        throw std::invalid_argument("AlgebraicSet: defining polynomial is not squarefree");
    if (!rational_roots(defining_).empty())
        throw std::invalid_argument("AlgebraicSet: defining polynomial has rational roots");
}

SplitSet split_roots(const RatPoly& squarefree_monic) {
    SplitSet out;
    RatPoly rest = squarefree_monic.monic();
    out.rationals = rational_roots(rest);
    for (const auto& r : out.rationals) {
        RatPoly lin({-r, Rational(1)});
        rest = poly_divmod(rest, lin).quotient;
    }
    if (rest.degree() >= 1) out.irrational = AlgebraicSet(rest);
    return out;
}

namespace {

// Lagrange interpolation through (xs[i], ys[i]).
RatPoly interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    RatPoly acc;
    for (size_t i = 0; i < xs.size(); ++i) {
        RatPoly basis = RatPoly::constant(Rational(1));
        Rational denom(1);
        for (size_t j = 0; j < xs.size(); ++j) {
            if (j == i) continue;
            basis = basis * RatPoly({-xs[j], Rational(1)});
            denom *= xs[i] - xs[j];
        }
        acc = acc + basis * (ys[i] / denom);
    }
    return acc;
}

// Image of the root set of a monic squarefree polynomial d under p, as the
// squarefree part of Res_x(d(x), y - p(x)) = prod (y - p(alpha_i)),
// recovered by evaluation/interpolation in y.
SplitSet image_of_roots(const RatPoly& d, const RatPoly& p) {
    const int n = d.degree();
    std::vector<Rational> xs, ys;
    xs.reserve(n + 1);
    ys.reserve(n + 1);
    for (int k = 0; k <= n; ++k) {
        Rational y0(k);
        RatPoly g = -p + RatPoly::constant(y0);
        xs.push_back(y0);
        ys.push_back(resultant(d, g));
    }
    RatPoly res = interpolate(xs, ys);
    return split_roots(squarefree_part(res));
}

}  // namespace

SplitSet pushforward_set(const AlgebraicSet& A, const RatPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("pushforward_set: constant map");
    return image_of_roots(A.defining(), p);
}

AlgebraicSet mobius_pushforward(const AlgebraicSet& A, const MobiusMap& m) {
    MobiusMap inv = m.inverse();
    RatPoly num({inv.b(), inv.a()});  // numerator of m^-1(y)
    RatPoly den({inv.d(), inv.c()});
    const RatPoly& d = A.defining();
    const int n = d.degree();
    RatPoly acc;
    for (int k = 0; k <= n; ++k)
        acc = acc + num.pow(k) * den.pow(n - k) * d.coeff(k);
    // a pole or rational image would force a rational root of the defining
    // polynomial, which the invariant excludes
    if (acc.degree() != n)
        throw std::logic_error("mobius_pushforward: degree drop, invariant violated");
    return AlgebraicSet(acc);
}

CriticalValues poly_critical_values(const RatPoly& p) {
    if (p.degree() < 1) throw std::invalid_argument("poly_critical_values: constant polynomial");
    CriticalValues out;
    if (p.degree() == 1) return out;
    out.has_infinity = true;
    RatPoly crit_pts = squarefree_part(poly_derivative(p));
    SplitSet image = image_of_roots(crit_pts, p);
    out.rationals = std::move(image.rationals);
    out.irrational = std::move(image.irrational);
    return out;
}

}  // namespace belyi

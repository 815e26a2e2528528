#include "belyi/verify.hpp"

#include <set>

namespace belyi {

bool CritReport::in_three_points() const {
    if (irrational) return false;
    for (const auto& v : rational_values)
        if (v.is_finite() && v.value() != 0 && v.value() != 1) return false;
    return true;
}

CritReport crit_chain(const MapChain& chain) {
    CritReport report;
    std::set<ExtPoint> rationals;
    RatPoly irr_product = RatPoly::constant(Rational(1));
    for (size_t i = 0; i < chain.steps().size(); ++i) {
        const ChainStep& step = chain.steps()[i];
        if (step.is_mobius()) continue;  // no critical points
        CriticalValues cv = poly_critical_values(step.poly());
        ChainSuffix suffix(chain, i + 1);
        StepCritRecord rec{i, {}, std::nullopt};
        std::set<ExtPoint> step_points;
        for (const auto& r : cv.rationals) step_points.insert(suffix.apply(ExtPoint::finite(r)));
        if (cv.has_infinity) step_points.insert(suffix.apply(ExtPoint::infinity()));
        if (cv.irrational) {
            SplitSet pushed = suffix.apply(*cv.irrational);
            for (const auto& r : pushed.rationals) step_points.insert(ExtPoint::finite(r));
            if (pushed.irrational) {
                rec.irrational = pushed.irrational;
                irr_product = irr_product * pushed.irrational->defining();
            }
        }
        rec.values.assign(step_points.begin(), step_points.end());
        rationals.insert(step_points.begin(), step_points.end());
        report.per_step.push_back(std::move(rec));
    }
    if (irr_product.degree() >= 1) {
        // union of the per-step irrational sets
        SplitSet combined = split_roots(squarefree_part(irr_product));
        for (const auto& r : combined.rationals) rationals.insert(ExtPoint::finite(r));
        report.irrational = std::move(combined.irrational);
    }
    report.rational_values.assign(rationals.begin(), rationals.end());
    return report;
}

BelyiVerdict is_belyi(const MapChain& chain) {
    CritReport report = crit_chain(chain);
    bool ok = report.in_three_points();
    return {ok, std::move(report)};
}

bool verify_polynomial_direct(const RatPoly& p) {
    if (p.degree() < 1)
        throw std::invalid_argument("verify_polynomial_direct: constant polynomial");
    RatPoly deriv = poly_derivative(p);
    if (deriv.is_zero()) return true;  // degree 1 over Q: constant derivative only
    RatPoly s = squarefree_part(deriv);
    if (s.degree() < 1) return true;
    return poly_divides(s, p * (p - RatPoly::constant(Rational(1))));
}

}  // namespace belyi

#include "belyi/pipeline.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace belyi {

MapChain::MapChain(std::vector<ChainStep> steps) : steps_(std::move(steps)), total_degree_(1) {
    if (steps_.empty()) throw std::invalid_argument("MapChain: empty step list");
    for (const auto& s : steps_) total_degree_ *= s.degree();
}

ExtPoint MapChain::apply(const ExtPoint& x) const {
    ExtPoint cur = x;
    for (const auto& s : steps_) cur = s.apply(cur);
    return cur;
}

ChainSuffix::ChainSuffix(const MapChain& chain, size_t from_index) {
    if (from_index > chain.steps().size())
        throw std::out_of_range("ChainSuffix: index past end of chain");
    steps_.assign(chain.steps().begin() + from_index, chain.steps().end());
}

ExtPoint ChainSuffix::apply(const ExtPoint& x) const {
    ExtPoint cur = x;
    for (const auto& s : steps_) cur = s.apply(cur);
    return cur;
}

SplitSet ChainSuffix::apply(const AlgebraicSet& A) const {
    SplitSet cur;
    cur.irrational = A;
    std::vector<ExtPoint> points;
    for (const auto& s : steps_) {
        for (auto& p : points) p = s.apply(p);
        if (cur.irrational) {
            if (s.is_mobius()) {
                cur.irrational = mobius_pushforward(*cur.irrational, s.mobius());
            } else {
                SplitSet next = pushforward_set(*cur.irrational, s.poly());
                for (const auto& r : next.rationals) points.push_back(ExtPoint::finite(r));
                cur.irrational = std::move(next.irrational);
            }
        }
    }
    std::set<Rational> finite;
    for (const auto& p : points)
        if (p.is_finite()) finite.insert(p.value());
    cur.rationals.assign(finite.begin(), finite.end());
    // a finite algebraic point can never reach infinity under these steps
    return cur;
}

ReductionResult reduce_to_rational(const std::optional<AlgebraicSet>& S,
                                   const std::vector<ExtPoint>& extra_rationals) {
    std::set<ExtPoint> tracked(extra_rationals.begin(), extra_rationals.end());
    std::vector<ChainStep> steps;
    std::optional<AlgebraicSet> residue = S;
    while (residue) {
        const RatPoly p = residue->defining();
        CriticalValues cv = poly_critical_values(p);
        std::set<ExtPoint> next;
        for (const auto& x : tracked) next.insert(p.evaluate(x));
        next.insert(ExtPoint::finite(Rational(0)));  // p maps its own root set to 0
        for (const auto& r : cv.rationals) next.insert(ExtPoint::finite(r));
        if (cv.has_infinity) next.insert(ExtPoint::infinity());
        tracked = std::move(next);
        if (cv.irrational && cv.irrational->defining().degree() >= p.degree())
            throw std::logic_error("reduce_to_rational: residue degree did not decrease");
        residue = std::move(cv.irrational);
        steps.emplace_back(p);
    }
    MapChain chain = steps.empty() ? MapChain::identity() : MapChain(std::move(steps));
    return {std::move(chain),
            std::vector<ExtPoint>(tracked.begin(), tracked.end())};
}

namespace {

std::vector<ExtPoint> dedup_sorted(const std::vector<ExtPoint>& pts) {
    std::set<ExtPoint> s(pts.begin(), pts.end());
    return {s.begin(), s.end()};
}

}  // namespace

Normalization select_normalization(const std::vector<ExtPoint>& T) {
    std::vector<ExtPoint> pts = dedup_sorted(T);
    const size_t r = pts.size();
    if (r < 4) throw std::invalid_argument("select_normalization: need at least 4 points");

    struct Candidate {
        MobiusMap map;
        Rational fourth;
        std::array<ExtPoint, 3> triple;  // increasing, so sorted == ordered
    };
    std::optional<Candidate> best;
    std::optional<Integer> best_weight;  // m + n of the reduced fourth

    auto better = [](const Candidate& a, const Candidate& b) {
        for (int i = 0; i < 3; ++i) {
            if (a.triple[i] < b.triple[i]) return true;
            if (b.triple[i] < a.triple[i]) return false;
        }
        return a.fourth < b.fourth;
    };

    // Increasing triples only: for any four distinct points a < b < c < d the
    // triple (a, c, d) places b's image in (0, 1), and the only other
    // cross-ratio value in (0, 1) is its complement with the same
    // denominator, so no weight is lost by skipping the other orderings.
    for (size_t i = 0; i < r; ++i)
        for (size_t j = i + 1; j < r; ++j)
            for (size_t k = j + 1; k < r; ++k) {
                MobiusMap m = mobius_three_point(pts[i], pts[j], pts[k]);
                for (size_t l = 0; l < r; ++l) {
                    if (l == i || l == j || l == k) continue;
                    ExtPoint img = m.apply(pts[l]);
                    if (img.is_infinity()) continue;
                    const Rational& f = img.value();
                    if (!(f > 0 && f < 1)) continue;
                    Integer weight = f.get_den();
                    Candidate cand{m, f, {pts[i], pts[j], pts[k]}};
                    if (!best || weight < *best_weight ||
                        (weight == *best_weight && better(cand, *best))) {
                        best = std::move(cand);
                        best_weight = weight;
                    }
                }
            }
    if (!best)
        throw std::logic_error("select_normalization: no admissible triple (cannot happen for "
                               "four distinct points of Q u {oo})");

    Normalization out{best->map, best->fourth, {}};
    std::set<ExtPoint> triple(best->triple.begin(), best->triple.end());
    bool fourth_taken = false;
    for (const auto& p : pts) {
        if (triple.count(p)) continue;
        ExtPoint img = best->map.apply(p);
        if (!fourth_taken && img.is_finite() && img.value() == best->fourth) {
            fourth_taken = true;
            continue;
        }
        out.rest.push_back(img);
    }
    return out;
}

RatPoly belyi_step(unsigned m, unsigned n) {
    if (m < 1 || n < 1) throw std::invalid_argument("belyi_step: m, n must be positive");
    Integer mn_pow, m_pow, n_pow;
    mpz_ui_pow_ui(mn_pow.get_mpz_t(), m + n, m + n);
    mpz_ui_pow_ui(m_pow.get_mpz_t(), m, m);
    mpz_ui_pow_ui(n_pow.get_mpz_t(), n, n);
    Rational c = make_rational(mn_pow, m_pow * n_pow);
    RatPoly one_minus_z({Rational(1), Rational(-1)});
    return RatPoly::monomial(c, static_cast<int>(m)) * one_minus_z.pow(n);
}

namespace {

const std::vector<ExtPoint>& canonical_triple() {
    static const std::vector<ExtPoint> t{ExtPoint::finite(Rational(0)),
                                         ExtPoint::finite(Rational(1)), ExtPoint::infinity()};
    return t;
}

// Mobius map sending <= 3 points into {0, 1, oo}; pads with fresh points.
MobiusMap small_set_mobius(const std::vector<ExtPoint>& pts) {
    if (pts.empty()) return MobiusMap::identity();
    std::vector<ExtPoint> src;
    bool has_inf = false;
    Rational max_finite(0);
    for (const auto& p : pts) {
        if (p.is_infinity()) {
            has_inf = true;
        } else {
            src.push_back(p);
            if (p.value() > max_finite) max_finite = p.value();
        }
    }
    Integer pad = max_finite.get_num() / max_finite.get_den() + 1;
    while (src.size() < 2) src.push_back(ExtPoint::finite(Rational(pad++)));
    if (has_inf || src.size() == 2) {
        src.push_back(ExtPoint::infinity());
    }
    return mobius_three_point(src[0], src[1], src[2]);
}

}  // namespace

MapChain collapse_to_three(const std::vector<ExtPoint>& T, unsigned long step_cap) {
    std::vector<ChainStep> steps;
    std::vector<ExtPoint> cur = dedup_sorted(T);
    while (cur.size() > 3) {
        Normalization norm = select_normalization(cur);
        // fourth = m / (m+n) reduced; the round's q1 has degree m+n
        if (norm.fourth.get_den() > step_cap) {
            std::ostringstream os;
            os << "collapse_to_three: next collapse step would have degree "
               << norm.fourth.get_den() << ", exceeding the step cap " << step_cap;
            throw DegreeCapExceeded(os.str());
        }
        steps.emplace_back(norm.map);
        Integer m_num = norm.fourth.get_num();
        Integer n_num = norm.fourth.get_den() - m_num;
        RatPoly q1 = belyi_step(static_cast<unsigned>(m_num.get_ui()),
                                static_cast<unsigned>(n_num.get_ui()));
        steps.emplace_back(q1);
        std::set<ExtPoint> next(canonical_triple().begin(), canonical_triple().end());
        for (const auto& p : norm.rest) next.insert(q1.evaluate(p));
        if (next.size() >= cur.size())
            throw std::logic_error("collapse_to_three: tracked set did not shrink");
        cur.assign(next.begin(), next.end());
    }
    MobiusMap final_map = small_set_mobius(cur);
    if (!final_map.is_identity() || steps.empty()) steps.emplace_back(final_map);
    return MapChain(std::move(steps));
}

MapChain belyi_map(const std::optional<AlgebraicSet>& S, const std::vector<ExtPoint>& extras,
                   unsigned long step_cap) {
    ReductionResult red = reduce_to_rational(S, extras);
    MapChain tail = collapse_to_three(red.tracked, step_cap);
    std::vector<ChainStep> steps;
    for (const auto& s : red.chain.steps())
        if (!(s.is_mobius() && s.mobius().is_identity())) steps.push_back(s);
    for (const auto& s : tail.steps())
        if (!(s.is_mobius() && s.mobius().is_identity())) steps.push_back(s);
    if (steps.empty()) return MapChain::identity();
    return MapChain(std::move(steps));
}

ExpandedMap expand(const MapChain& chain, const Integer& cap) {
    if (chain.total_degree() > cap) {
        std::ostringstream os;
        os << "expand: composed degree " << chain.total_degree() << " exceeds cap " << cap;
        throw DegreeCapExceeded(os.str());
    }
    RatPoly num = RatPoly::identity();
    RatPoly den = RatPoly::constant(Rational(1));
    auto reduce = [&] {
        RatPoly g = poly_gcd(num, den);
        if (g.degree() >= 1) {
            num = poly_divmod(num, g).quotient;
            den = poly_divmod(den, g).quotient;
        }
        Rational lc = den.leading();
        num = num * (Rational(1) / lc);
        den = den * (Rational(1) / lc);
    };
    for (const auto& s : chain.steps()) {
        if (s.is_mobius()) {
            const MobiusMap& m = s.mobius();
            RatPoly new_num = num * m.a() + den * m.b();
            RatPoly new_den = num * m.c() + den * m.d();
            num = std::move(new_num);
            den = std::move(new_den);
        } else {
            const RatPoly& p = s.poly();
            const unsigned d = static_cast<unsigned>(p.degree());
            // p(num/den) * den^d
            RatPoly acc;
            for (unsigned k = 0; k <= d; ++k)
                acc = acc + num.pow(k) * den.pow(d - k) * p.coeff(static_cast<int>(k));
            num = std::move(acc);
            den = den.pow(d);
        }
        reduce();
    }
    Integer max_deg(std::max(num.degree(), den.degree()));
    if (max_deg != chain.total_degree())
        throw std::logic_error("expand: degree bookkeeping mismatch");
    return {std::move(num), std::move(den)};
}

}  // namespace belyi

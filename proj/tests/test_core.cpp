#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "belyi/algebraic_set.hpp"
#include "belyi/mobius.hpp"
#include "belyi/poly.hpp"

using namespace belyi;

namespace {

RatPoly P(std::initializer_list<long> ascending) {
    std::vector<Rational> cs;
    for (long c : ascending) cs.emplace_back(c);
    return RatPoly(std::move(cs));
}

std::mt19937 rng(12345);

Rational rational_pow(const Rational& base, int e) {
    Rational out(1);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

RatPoly random_poly(int max_deg, int coeff_range) {
    std::uniform_int_distribution<int> deg_dist(0, max_deg);
    std::uniform_int_distribution<int> c_dist(-coeff_range, coeff_range);
    int d = deg_dist(rng);
    std::vector<Rational> cs(d + 1);
    for (auto& c : cs) c = Rational(c_dist(rng));
    if (cs.back() == 0) cs.back() = Rational(1);
    return RatPoly(std::move(cs));
}

}  // namespace

TEST_CASE("rational parsing and normalization") {
    CHECK(parse_rational("6/4") == make_rational(3, 2));
    CHECK(parse_rational("-6/4") == make_rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(rational_to_string(make_rational(-3, 2)) == "-3/2");
    CHECK_THROWS_AS(parse_rational("x"), std::invalid_argument);
    CHECK_THROWS_AS(make_rational(1, 0), std::invalid_argument);
}

TEST_CASE("ExtPoint ordering and equality") {
    auto inf = ExtPoint::infinity();
    auto half = ExtPoint::finite(make_rational(1, 2));
    CHECK(inf == ExtPoint::infinity());
    CHECK(half < inf);
    CHECK_FALSE(inf < half);
    CHECK_THROWS_AS(inf.value(), std::logic_error);
}

TEST_CASE("poly_derivative") {
    CHECK(poly_derivative(P({-2, 0, 1})) == P({0, 2}));    // z^2 - 2 -> 2z
    CHECK(poly_derivative(P({5})) == RatPoly::zero());
    // z(1-z)^2 = z - 2z^2 + z^3 -> 1 - 4z + 3z^2
    CHECK(poly_derivative(P({0, 1, -2, 1})) == P({1, -4, 3}));
}

TEST_CASE("poly_compose") {
    CHECK(poly_compose(P({0, 0, 1}), P({1, 1})) == P({1, 2, 1}));
    RatPoly p = P({3, -1, 4, 1});
    CHECK(poly_compose(RatPoly::identity(), p) == p);
    CHECK(poly_compose(P({-2, 0, 1}), P({-2, 0, 1})) == P({2, 0, -4, 0, 1}));
}

TEST_CASE("poly_compose degree law") {
    for (int i = 0; i < 30; ++i) {
        RatPoly f = random_poly(4, 5), g = random_poly(4, 5);
        if (f.degree() < 1 || g.degree() < 1) continue;
        CHECK(poly_compose(g, f).degree() == g.degree() * f.degree());
    }
}

TEST_CASE("poly_gcd") {
    CHECK(poly_gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(poly_gcd(P({-2, 0, 1}), P({-3, 0, 1})) == P({1}));
    CHECK(poly_gcd(P({-4, 0, 2}), RatPoly::zero()) == P({-2, 0, 1}));
    CHECK_THROWS_AS(poly_gcd(RatPoly::zero(), RatPoly::zero()), std::invalid_argument);
}

TEST_CASE("squarefree_part") {
    CHECK(squarefree_part(P({1, -2, 1})) == P({-1, 1}));   // (z-1)^2
    CHECK(squarefree_part(P({-2, 0, 1})) == P({-2, 0, 1}));
    CHECK(squarefree_part(P({0, 0, -1, 1})) == P({0, -1, 1}));  // z^2(z-1)
    CHECK_THROWS_AS(squarefree_part(RatPoly::zero()), std::invalid_argument);
}

TEST_CASE("squarefree_part idempotence on random inputs") {
    for (int i = 0; i < 40; ++i) {
        RatPoly f = random_poly(5, 4);
        if (f.is_zero()) continue;
        RatPoly s = squarefree_part(f);
        CHECK(squarefree_part(s) == s);
        if (s.degree() >= 1) CHECK(poly_gcd(s, f) == s);
    }
}

TEST_CASE("resultant evaluation law") {
    // Res(z - a, g) = g(a)
    CHECK(resultant(P({-3, 1}), P({1, 0, 1})) == Rational(10));
    for (int i = 0; i < 20; ++i) {
        RatPoly g = random_poly(5, 6);
        if (g.is_zero()) continue;
        std::uniform_int_distribution<int> ad(-5, 5);
        Rational a(ad(rng));
        CHECK(resultant(RatPoly({-a, Rational(1)}), g) == g.evaluate(a));
    }
}

TEST_CASE("resultant values and edge cases") {
    CHECK(resultant(P({-2, 0, 1}), P({-3, 0, 1})) == Rational(1));
    RatPoly f = P({1, 2, 3});
    CHECK(resultant(f, f) == Rational(0));
    CHECK_THROWS_AS(resultant(RatPoly::zero(), RatPoly::zero()), std::invalid_argument);
}

TEST_CASE("resultant multiplicativity") {
    for (int i = 0; i < 20; ++i) {
        RatPoly f = random_poly(3, 4), g = random_poly(3, 4), h = random_poly(3, 4);
        if (f.is_zero() || g.is_zero() || h.is_zero()) continue;
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("resultant agrees across the determinant/Euclid size threshold") {
    // split-polynomial oracle: Res(f, g) = lc(f)^deg(g) * prod g(alpha_i)
    // for f = lc * prod (z - alpha_i), checked both below and above the
    // combined-degree cutoff where the implementation switches algorithms
    std::uniform_int_distribution<int> root_dist(-6, 6);
    for (int split_deg : {20, 35}) {
        for (int trial = 0; trial < 5; ++trial) {
            RatPoly f = RatPoly::constant(Rational(2));
            std::vector<Rational> roots;
            for (int i = 0; i < split_deg; ++i) {
                Rational a(root_dist(rng));
                roots.push_back(a);
                f = f * RatPoly({-a, Rational(1)});
            }
            RatPoly g = random_poly(26, 3);
            if (g.degree() < 1) continue;
            Rational expected = rational_pow(f.leading(), g.degree());
            for (const auto& a : roots) expected *= g.evaluate(a);
            CHECK(resultant(f, g) == expected);
        }
    }
    // multiplicativity with the factors evaluated below the cutoff and the
    // product above it ties the two code paths to each other directly
    for (int trial = 0; trial < 5; ++trial) {
        RatPoly f = random_poly(12, 3), g = random_poly(25, 3), h = random_poly(25, 3);
        if (f.degree() < 1 || g.is_zero() || h.is_zero()) continue;
        CHECK(resultant(f, g * h) == resultant(f, g) * resultant(f, h));
    }
}

TEST_CASE("rational_roots") {
    CHECK(rational_roots(P({0, -1, 1})) == std::vector<Rational>{Rational(0), Rational(1)});
    CHECK(rational_roots(P({-2, 0, 1})).empty());
    // 2z^3 - 3z^2 + 1 = (z-1)^2 (2z+1)
    CHECK(rational_roots(P({1, 0, -3, 2})) ==
          std::vector<Rational>{make_rational(-1, 2), Rational(1)});
    CHECK_THROWS_AS(rational_roots(RatPoly::zero()), std::invalid_argument);
}

TEST_CASE("rational_roots finds all planted roots") {
    std::uniform_int_distribution<int> num(-9, 9);
    std::uniform_int_distribution<int> den(1, 9);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> planted;
        RatPoly f = RatPoly::constant(Rational(1));
        for (int k = 0; k < 3; ++k) {
            Rational r = make_rational(num(rng), den(rng));
            planted.push_back(r);
            f = f * RatPoly({-r, Rational(1)});
        }
        f = f * P({-2, 0, 1});  // irrational factor
        std::sort(planted.begin(), planted.end());
        planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
        CHECK(rational_roots(f) == planted);
    }
}

TEST_CASE("AlgebraicSet invariants enforced") {
    CHECK_NOTHROW(AlgebraicSet(P({-2, 0, 1})));
    CHECK_THROWS_AS(AlgebraicSet(P({1, -2, 1})), std::invalid_argument);   // (z-1)^2
    CHECK_THROWS_AS(AlgebraicSet(P({-1, 0, 1})), std::invalid_argument);   // rational roots
    CHECK_THROWS_AS(AlgebraicSet(P({-3, 1})), std::invalid_argument);      // degree 1
}

TEST_CASE("pushforward_set") {
    AlgebraicSet sqrt2(P({-2, 0, 1}));
    SUBCASE("square map collapses to rational") {
        auto s = pushforward_set(sqrt2, P({0, 0, 1}));
        CHECK(s.rationals == std::vector<Rational>{Rational(2)});
        CHECK_FALSE(s.irrational.has_value());
    }
    SUBCASE("identity keeps the set") {
        auto s = pushforward_set(sqrt2, RatPoly::identity());
        CHECK(s.rationals.empty());
        REQUIRE(s.irrational.has_value());
        CHECK(s.irrational->defining() == P({-2, 0, 1}));
    }
    SUBCASE("defining polynomial maps to zero") {
        auto s = pushforward_set(sqrt2, P({-2, 0, 1}));
        CHECK(s.rationals == std::vector<Rational>{Rational(0)});
        CHECK_FALSE(s.irrational.has_value());
    }
    SUBCASE("constant map rejected") {
        CHECK_THROWS_AS(pushforward_set(sqrt2, P({7})), std::invalid_argument);
    }
}

TEST_CASE("pushforward degree bound") {
    std::uniform_int_distribution<int> cd(-4, 4);
    for (int trial = 0; trial < 20; ++trial) {
        RatPoly d = random_poly(4, 5);
        if (d.degree() < 1) continue;
        RatPoly sf = squarefree_part(d);
        SplitSet in = split_roots(sf);
        if (!in.irrational) continue;
        RatPoly p = random_poly(3, 4);
        if (p.degree() < 1) continue;
        auto out = pushforward_set(*in.irrational, p);
        int irr_deg = out.irrational ? out.irrational->defining().degree() : 0;
        CHECK(irr_deg + static_cast<int>(out.rationals.size()) <=
              in.irrational->defining().degree());
    }
}

TEST_CASE("mobius_apply") {
    MobiusMap shift(Rational(1), Rational(-2), Rational(0), Rational(1));
    CHECK(shift.apply(ExtPoint::finite(Rational(2))) == ExtPoint::finite(Rational(0)));
    MobiusMap inv(Rational(0), Rational(1), Rational(1), Rational(0));
    CHECK(inv.apply(ExtPoint::finite(Rational(0))) == ExtPoint::infinity());
    MobiusMap m(Rational(1), Rational(0), Rational(1), Rational(-3));
    CHECK(m.apply(ExtPoint::infinity()) == ExtPoint::finite(Rational(1)));
    CHECK_THROWS_AS(MobiusMap(Rational(1), Rational(2), Rational(2), Rational(4)),
                    std::invalid_argument);
}

TEST_CASE("mobius_three_point") {
    auto zero = ExtPoint::finite(Rational(0));
    auto one = ExtPoint::finite(Rational(1));
    auto inf = ExtPoint::infinity();
    CHECK(mobius_three_point(zero, one, inf).is_identity());
    auto m = mobius_three_point(ExtPoint::finite(Rational(2)), ExtPoint::finite(Rational(3)), inf);
    CHECK(m.apply(ExtPoint::finite(Rational(2))) == zero);
    CHECK(m.apply(ExtPoint::finite(Rational(5))) == ExtPoint::finite(Rational(3)));
    CHECK_THROWS_AS(mobius_three_point(zero, zero, inf), std::invalid_argument);
}

TEST_CASE("mobius_three_point round trip on random triples") {
    std::uniform_int_distribution<int> v(-6, 6);
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<ExtPoint> pts{ExtPoint::finite(Rational(v(rng))),
                                  ExtPoint::finite(Rational(v(rng))),
                                  ExtPoint::finite(Rational(v(rng)))};
        if (trial % 3 == 0) pts[trial % 2] = ExtPoint::infinity();
        if (pts[0] == pts[1] || pts[0] == pts[2] || pts[1] == pts[2]) continue;
        auto m = mobius_three_point(pts[0], pts[1], pts[2]);
        CHECK(m.apply(pts[0]) == ExtPoint::finite(Rational(0)));
        CHECK(m.apply(pts[1]) == ExtPoint::finite(Rational(1)));
        CHECK(m.apply(pts[2]) == ExtPoint::infinity());
    }
}

TEST_CASE("mobius composition law on all point kinds") {
    std::uniform_int_distribution<int> v(-4, 4);
    for (int trial = 0; trial < 60; ++trial) {
        Rational a(v(rng)), b(v(rng)), c(v(rng)), d(v(rng));
        Rational e(v(rng)), f(v(rng)), g(v(rng)), h(v(rng));
        if (a * d - b * c == 0 || e * h - f * g == 0) continue;
        MobiusMap m1(a, b, c, d), m2(e, f, g, h);
        MobiusMap comp = m2.compose_after(m1);
        std::vector<ExtPoint> pts{ExtPoint::infinity()};
        for (int x = -4; x <= 4; ++x) pts.push_back(ExtPoint::finite(Rational(x)));
        for (const auto& p : pts) CHECK(comp.apply(p) == m2.apply(m1.apply(p)));
    }
}

TEST_CASE("poly_critical_values") {
    SUBCASE("z^2") {
        auto cv = poly_critical_values(P({0, 0, 1}));
        CHECK(cv.rationals == std::vector<Rational>{Rational(0)});
        CHECK_FALSE(cv.irrational.has_value());
        CHECK(cv.has_infinity);
    }
    SUBCASE("z^3 - 3z") {
        auto cv = poly_critical_values(P({0, -3, 0, 1}));
        CHECK(cv.rationals == std::vector<Rational>{Rational(-2), Rational(2)});
        CHECK_FALSE(cv.irrational.has_value());
        CHECK(cv.has_infinity);
    }
    SUBCASE("z^2 - 2") {
        auto cv = poly_critical_values(P({-2, 0, 1}));
        CHECK(cv.rationals == std::vector<Rational>{Rational(-2)});
        CHECK_FALSE(cv.irrational.has_value());
        CHECK(cv.has_infinity);
    }
    SUBCASE("degree 1 has none") {
        auto cv = poly_critical_values(P({5, 3}));
        CHECK(cv.rationals.empty());
        CHECK_FALSE(cv.has_infinity);
    }
    SUBCASE("constant rejected") {
        CHECK_THROWS_AS(poly_critical_values(P({5})), std::invalid_argument);
    }
}

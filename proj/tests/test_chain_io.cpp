#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "belyi/chain_io.hpp"
#include "belyi/verify.hpp"

using namespace belyi;
using nlohmann::json;

namespace {

RatPoly P(std::initializer_list<long> ascending) {
    std::vector<Rational> cs;
    for (long c : ascending) cs.emplace_back(c);
    return RatPoly(std::move(cs));
}

ExtPoint F(long num, long den = 1) { return ExtPoint::finite(make_rational(num, den)); }

bool chains_equal(const MapChain& a, const MapChain& b) {
    if (a.steps().size() != b.steps().size()) return false;
    for (size_t i = 0; i < a.steps().size(); ++i) {
        const auto& x = a.steps()[i];
        const auto& y = b.steps()[i];
        if (x.is_poly() != y.is_poly()) return false;
        if (x.is_poly()) {
            if (x.poly() != y.poly()) return false;
        } else if (x.mobius().a() != y.mobius().a() || x.mobius().b() != y.mobius().b() ||
                   x.mobius().c() != y.mobius().c() || x.mobius().d() != y.mobius().d()) {
            return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("parse_poly") {
    CHECK(parse_poly("z^2 - 2") == P({-2, 0, 1}));
    CHECK(parse_poly("z") == RatPoly::identity());
    CHECK(parse_poly("27/4*z*(1-z)^2") == belyi_step(1, 2));
    CHECK(parse_poly("-z^3 + 3z") == P({0, 3, 0, -1}));
    CHECK(parse_poly("  1/2 ") == RatPoly::constant(make_rational(1, 2)));
    CHECK(parse_poly("(z-1)(z+1)") == P({-1, 0, 1}));
}

TEST_CASE("parse_poly errors carry a position") {
    CHECK_THROWS_WITH_AS(parse_poly("z^2 +"), doctest::Contains("position 5"), ParseError);
    CHECK_THROWS_AS(parse_poly("z^"), ParseError);
    CHECK_THROWS_AS(parse_poly("(z"), ParseError);
    CHECK_THROWS_AS(parse_poly("w + 1"), ParseError);
    CHECK_THROWS_AS(parse_poly(""), ParseError);
}

TEST_CASE("parse_points") {
    auto pts = parse_points("0,1,oo,1/3");
    REQUIRE(pts.size() == 4);
    CHECK(pts[0] == F(0));
    CHECK(pts[2] == ExtPoint::infinity());
    CHECK(pts[3] == F(1, 3));
    CHECK_THROWS_AS(parse_points("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_points("1,x"), ParseError);
}

TEST_CASE("chain document round trip") {
    std::vector<MapChain> golden;
    golden.push_back(MapChain::identity());
    golden.push_back(MapChain({ChainStep(P({-2, 0, 1}))}));
    golden.push_back(belyi_map(AlgebraicSet(P({-2, 0, 1})), {}));
    golden.push_back(belyi_map(std::nullopt, {F(0), F(1), ExtPoint::infinity(), F(1, 3)}));
    golden.push_back(MapChain(
        {ChainStep(MobiusMap(Rational(0), Rational(1), Rational(1), Rational(0))),
         ChainStep(RatPoly({Rational(0), make_rational(-1, 2), Rational(0), Rational(1)}))}));
    for (const auto& chain : golden) {
        json doc = chain_to_json(chain, "test");
        MapChain back = chain_from_json(doc);
        CHECK(chains_equal(chain, back));
        CHECK(back.total_degree() == chain.total_degree());
        // serialization is deterministic
        CHECK(doc.dump() == chain_to_json(back, "test").dump());
    }
}

TEST_CASE("chain document diagnostics") {
    CHECK_THROWS_WITH_AS(chain_from_json(json::array()), doctest::Contains("not a JSON object"),
                         ParseError);
    json no_version = {{"steps", json::array()}};
    CHECK_THROWS_AS(chain_from_json(no_version), ParseError);
    json doc = chain_to_json(MapChain({ChainStep(P({-2, 0, 1}))}), "");
    doc["steps"][0]["kind"] = "spline";
    CHECK_THROWS_WITH_AS(chain_from_json(doc), doctest::Contains("step 0"), ParseError);
    json bad_coeff = chain_to_json(MapChain({ChainStep(P({-2, 0, 1}))}), "");
    bad_coeff["steps"][0]["coeffs"][0] = "nope";
    CHECK_THROWS_AS(chain_from_json(bad_coeff), ParseError);
    json bad_degree = chain_to_json(MapChain({ChainStep(P({-2, 0, 1}))}), "");
    bad_degree["total_degree"] = "3";
    CHECK_THROWS_WITH_AS(chain_from_json(bad_degree), doctest::Contains("total_degree"),
                         ParseError);
}

#include <doctest.h>

#include "lnd/error.hpp"
#include "lnd/parse.hpp"
#include "lnd/rings.hpp"
#include "support.hpp"

using namespace lnd;
using lnd::testing::rng_for;
using lnd::testing::uniform;

namespace {

Ring ring_2372() {
    return Ring(make_threefold(make_surface(2, 3, 7, 0), 2, 2));
}

}  // namespace

TEST_CASE("parameter validation") {
    CHECK_NOTHROW(make_surface(2, 3, 7, 0));
    CHECK_THROWS_AS(make_surface(2, 4, 7, 0), InvalidParameters);
    CHECK_THROWS_AS(make_surface(1, 3, 7, 0), InvalidParameters);
    SurfaceParams s = make_surface(2, 3, 7, 0);
    CHECK(s.ml_regime());
    CHECK_FALSE(s.cor2_regime());
    CHECK(s.reciprocal_sum() == Rational(41, 42));
    CHECK(make_surface(7, 11, 13, 1).cor2_regime());
    CHECK_FALSE(make_surface(2, 3, 5, 0).ml_regime());

    CHECK_THROWS_AS(make_threefold(s, 1, 2), InvalidParameters);
    CHECK_NOTHROW(make_threefold(s, 1, 2, true));

    CHECK(parse_surface("2,3,7,-1/2").lambda == Rational(-1, 2));
    CHECK(parse_threefold(s, "2,3").m == 3);
    CHECK_THROWS_AS(parse_surface("2,3,7"), ParseError);
    CHECK_THROWS_AS(parse_surface("2,x,7,0"), ParseError);
    CHECK_THROWS_AS(parse_surface("2,3,7,1/0"), ParseError);
    CHECK_THROWS_AS(parse_threefold(s, "2"), ParseError);
}

TEST_CASE("normal form examples") {
    Ring r = ring_2372();
    CHECK(r.parse("z^7").to_string() == "-x^2 - y^3");
    CHECK(r.parse("x^2*u - y^2*v") == r.constant(1));
    CHECK(r.parse("x^3*u") == r.parse("x*y^2*v + x"));
    CHECK(r.parse("z^8") == r.parse("-x^2*z - y^3*z"));
    CHECK(r.parse("u*v*z^6").value() == parse_expression("u*v*z^6", r.variables()));
    CHECK(r.is_normal(parse_expression("x*u + z^6", r.variables())));
    CHECK_FALSE(r.is_normal(parse_expression("x^2*u", r.variables())));
    CHECK_THROWS_AS(r.parse("w"), ParseError);
    CHECK_THROWS_AS(r.element(parse_expression("w")), UnknownVariable);

    Ring lam(make_threefold(make_surface(2, 3, 5, Rational(1, 2)), 3, 2));
    CHECK(lam.parse("z^5") == lam.parse("-x^2 - y^3 - 1/2"));
    CHECK(lam.surface_relation() == parse_expression("x^2 + y^3 + z^5 + 1/2", lam.variables()));
    CHECK(lam.unit_relation() == parse_expression("x^2*u - y^3*v - 1", lam.variables()));
}

TEST_CASE("adjoined variables are free") {
    Ring r(make_threefold(make_surface(2, 3, 7, 0), 2, 2), {"w"});
    CHECK(r.variables().size() == 6);
    AElement e = r.parse("w*z^7 + w^2*x^2*u");
    CHECK(e == r.parse("-w*x^2 - w*y^3 + w^2*y^2*v + w^2"));
}

TEST_CASE("normal form agrees with stepwise reduction") {
    auto rng = rng_for(31);
    for (const auto& params : testing::sample_threefolds()) {
        Ring r(params);
        for (int i = 0; i < 100; ++i) {
            Poly p = testing::random_poly(rng, r.variables(), 9, 8, true);
            std::mt19937_64 order(static_cast<std::uint64_t>(i) * 7919);
            Poly stepwise = reduce_stepwise(p, r, order);
            CHECK(r.is_normal(stepwise));
            CHECK(r.element(p).value() == stepwise);
        }
    }
}

TEST_CASE("normal form is a ring homomorphism") {
    auto rng = rng_for(32);
    for (const auto& params : testing::sample_threefolds()) {
        Ring r(params);
        for (int i = 0; i < 40; ++i) {
            Poly p = testing::random_poly(rng, r.variables(), 6, 6);
            Poly q = testing::random_poly(rng, r.variables(), 6, 6);
            CHECK(r.element(p * q) == r.element(p) * r.element(q));
            CHECK(r.element(p + q) == r.element(p) + r.element(q));
            // relation multiples vanish
            CHECK(r.element(p * r.surface_relation() + q * r.unit_relation()).is_zero());
        }
    }
}

TEST_CASE("u decomposition") {
    Ring r = ring_2372();
    auto rng = rng_for(33);
    for (int i = 0; i < 50; ++i) {
        AElement h = r.element(testing::random_poly(rng, r.variables(), 6, 6));
        auto parts = u_decomposition(h);
        for (const auto& p : parts) CHECK(p.degree("u") <= 0);
        CHECK(u_reassemble(parts, r) == h);
    }
    CHECK(u_decomposition(r.zero()).size() == 1);
}

#include <doctest.h>

#include <algorithm>
#include <map>

#include "lnd/error.hpp"
#include "lnd/parse.hpp"
#include "lnd/poly.hpp"
#include "support.hpp"

using namespace lnd;
using lnd::testing::rng_for;
using lnd::testing::uniform;

namespace {

Poly P(const char* text) {
    return parse_expression(text);
}

// (T - r)^k products with integer roots; the oracle knows the factorization.
Poly from_roots(const std::map<int, int>& roots) {
    Poly out = Poly::constant(1, {"T"});
    for (const auto& [r, k] : roots)
        for (int i = 0; i < k; ++i) out = out * (Poly::variable("T", {"T"}) - Poly::constant(r, {"T"}));
    return out;
}

}  // namespace

TEST_CASE("rational basics") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-7") == -7);
    CHECK(to_string(parse_rational("-3/6")) == "-1/2");
    CHECK(rational_pow(Rational(2, 3), -2) == Rational(9, 4));
    CHECK_THROWS_AS(rational_pow(Rational(0), -1), DivisionByZero);
    CHECK_THROWS_AS(parse_rational("1/0"), InvalidParameters);
}

TEST_CASE("arithmetic examples") {
    Poly x = Poly::variable("x");
    CHECK((x - x).is_zero());
    Poly p = P("3*x^2*y - 1/2*y + 7");
    CHECK(p * Poly::constant(1) == p);
    CHECK(pow(P("T + 1"), 2) == P("T^2 + 2*T + 1"));
    CHECK(pow(P("T + 1"), 2).to_string() == "T^2 + 2*T + 1");
    CHECK(pow(p, 0) == Poly::constant(1));
}

TEST_CASE("ring axioms on random polynomials") {
    auto rng = rng_for(11);
    const std::vector<std::string> vars = {"x", "y", "z"};
    for (int i = 0; i < 200; ++i) {
        Poly p = testing::random_poly(rng, vars, 4, 6, true);
        Poly q = testing::random_poly(rng, vars, 4, 6, true);
        Poly r = testing::random_poly(rng, vars, 3, 4, true);
        CHECK(p + q == q + p);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK((p + q) - q == p);
    }
}

TEST_CASE("pow agrees with repeated multiplication") {
    auto rng = rng_for(12);
    for (int i = 0; i < 100; ++i) {
        Poly p = testing::random_poly(rng, {"x", "y"}, 3, 4, true);
        unsigned e = static_cast<unsigned>(uniform(rng, 0, 6));
        Poly expected = Poly::constant(1, {"x", "y"});
        for (unsigned k = 0; k < e; ++k) expected = expected * p;
        CHECK(pow(p, e) == expected);
    }
}

TEST_CASE("variable alignment") {
    CHECK(P("x + y") == P("y + x"));
    CHECK(P("x") + P("y") == P("x + y"));
    CHECK(P("x").with_variables({"y", "x"}) == P("x"));
    CHECK_THROWS_AS(P("x*y").with_variables({"x"}), UnknownVariable);
}

TEST_CASE("partial derivatives") {
    CHECK(partial_derivative(P("T^3"), "T") == P("3*T^2"));
    CHECK(partial_derivative(Poly::constant(5, {"T"}), "T").is_zero());
    CHECK(partial_derivative(P("x^2*y + y"), "x") == P("2*x*y"));
    CHECK_THROWS_AS(partial_derivative(P("x"), "q"), UnknownVariable);

    auto rng = rng_for(13);
    for (int i = 0; i < 100; ++i) {
        Poly p = testing::random_poly(rng, {"x", "y"}, 4, 5);
        Poly q = testing::random_poly(rng, {"x", "y"}, 4, 5);
        CHECK(partial_derivative(p * q, "x") == partial_derivative(p, "x") * q + p * partial_derivative(q, "x"));
    }
}

TEST_CASE("gcd examples") {
    CHECK(gcd_univariate(P("T^2 - 1"), P("T - 1")) == P("T - 1"));
    CHECK(gcd_univariate(P("T"), Poly::constant(1, {"T"})) == Poly::constant(1, {"T"}));
    CHECK(gcd_univariate(from_roots({{1, 2}, {-3, 1}}), from_roots({{1, 1}, {-5, 1}})) == P("T - 1"));
    CHECK(gcd_univariate(P("2*T + 2"), Poly::constant(0, {"T"})) == P("T + 1"));
    CHECK_THROWS_AS(gcd_univariate(Poly::constant(0, {"T"}), Poly::constant(0, {"T"})), InvalidParameters);
    CHECK_THROWS_AS(gcd_univariate(P("x"), P("y")), InvalidParameters);
}

TEST_CASE("gcd matches the factor-intersection oracle") {
    auto rng = rng_for(14);
    for (int i = 0; i < 200; ++i) {
        std::map<int, int> a, b, common;
        for (int k = 0; k < uniform(rng, 0, 5); ++k) ++a[uniform(rng, -4, 4)];
        for (int k = 0; k < uniform(rng, 0, 5); ++k) ++b[uniform(rng, -4, 4)];
        for (const auto& [r, k] : a)
            if (b.count(r)) common[r] = std::min(k, b[r]);
        Poly f = from_roots(a) * Poly::constant(uniform(rng, 1, 5), {"T"});
        Poly g = from_roots(b) * Poly::constant(-uniform(rng, 1, 5), {"T"});
        Poly d = gcd_univariate(f, g);
        CHECK(d == from_roots(common));
        CHECK(d == gcd_univariate(g, f));
        CHECK(d.leading_term().coefficient == 1);
        CHECK_NOTHROW(exact_divide(f, d));
        CHECK_NOTHROW(exact_divide(g, d));
    }
}

TEST_CASE("distinct root count") {
    CHECK(distinct_root_count(P("T^3")) == 1);
    CHECK(distinct_root_count(P("(T - 1)*(T - 2)")) == 2);
    CHECK(distinct_root_count(P("(T^2 + 1)^2*(T - 1)")) == 3);
    CHECK_THROWS_AS(distinct_root_count(Poly::constant(0, {"T"})), InvalidParameters);

    auto rng = rng_for(15);
    for (int i = 0; i < 200; ++i) {
        std::map<int, int> roots;
        for (int k = 0; k < uniform(rng, 1, 7); ++k) ++roots[uniform(rng, -5, 5)];
        Poly f = from_roots(roots);
        CHECK(distinct_root_count(f) == roots.size());
        long deg = f.degree("T");
        bool squarefree = gcd_univariate(f, partial_derivative(f, "T")).is_constant();
        CHECK(static_cast<long>(distinct_root_count(f)) <= deg);
        CHECK((static_cast<long>(distinct_root_count(f)) == deg) == squarefree);
    }
}

TEST_CASE("exact division") {
    CHECK(exact_divide(P("T^2 - 1"), P("T - 1")) == P("T + 1"));
    Poly p = P("x^3*y - 2/3*y + 1");
    CHECK(exact_divide(p, Poly::constant(1)) == p);
    CHECK(exact_divide(P("(T - 1)^2*(T + 3)"), P("T - 1")) == P("(T - 1)*(T + 3)"));
    CHECK_THROWS_AS(exact_divide(P("T^2 + 1"), P("T - 1")), InexactDivision);
    CHECK_THROWS_AS(exact_divide(P("T"), Poly::constant(0, {"T"})), DivisionByZero);

    auto rng = rng_for(16);
    for (int i = 0; i < 100; ++i) {
        Poly a = testing::random_poly(rng, {"x", "y", "z"}, 3, 5, true);
        Poly b = testing::random_poly(rng, {"x", "y", "z"}, 3, 4, true);
        if (b.is_zero()) continue;
        CHECK(exact_divide(a * b, b) == a);
    }
}

TEST_CASE("printing") {
    CHECK(P("x*y*3 - 1/2").to_string() == "3*x*y - 1/2");
    CHECK(P("y*x").to_string() == "y*x");
    CHECK(Poly::constant(0).to_string() == "0");
    CHECK(P("-x^2 - y^3").to_string() == "-x^2 - y^3");
}

TEST_CASE("term cap") {
    std::size_t saved = max_terms();
    set_max_terms(50);
    CHECK_THROWS_AS(pow(P("x + y + z + 1"), 6), ResourceLimit);
    set_max_terms(saved);
    CHECK_NOTHROW(pow(P("x + y + z + 1"), 6));
}

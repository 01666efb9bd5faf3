#include <doctest.h>

#include "lnd/error.hpp"
#include "lnd/parse.hpp"
#include "support.hpp"

using namespace lnd;
using lnd::testing::rng_for;
using lnd::testing::uniform;

namespace {

// Random expression text using sums, products, powers, parentheses and signs.
std::string random_expression(std::mt19937_64& rng, int depth) {
    static const char* atoms[] = {"x", "y", "z", "u'", "w_1", "3", "1/2", "-2/3", "0"};
    if (depth == 0 || uniform(rng, 0, 3) == 0) {
        std::string a = atoms[uniform(rng, 0, 8)];
        return a[0] == '-' ? "(" + a + ")" : a;
    }
    switch (uniform(rng, 0, 4)) {
        case 0: return random_expression(rng, depth - 1) + " + " + random_expression(rng, depth - 1);
        case 1: return random_expression(rng, depth - 1) + "-" + random_expression(rng, depth - 1);
        case 2: return random_expression(rng, depth - 1) + "*" + random_expression(rng, depth - 1);
        case 3: return "(" + random_expression(rng, depth - 1) + ")^" + std::to_string(uniform(rng, 0, 3));
        default: return "-(" + random_expression(rng, depth - 1) + ")";
    }
}

}  // namespace

TEST_CASE("grammar examples") {
    Poly p = parse_expression("x^2 + 3/2*y");
    Poly expected = Poly::monomial(1, {2, 0}, {"x", "y"}) + Poly::monomial(Rational(3, 2), {0, 1}, {"x", "y"});
    CHECK(p == expected);
    CHECK(parse_expression(" ( x + 1 ) ^ 2 ") == parse_expression("x^2+2*x+1"));
    CHECK(parse_expression("-x - -1").is_zero() == false);
    CHECK(parse_expression("2^3") == Poly::constant(8));
    CHECK(parse_expression("u'*v'").used_variables() == std::vector<std::string>{"u'", "v'"});
}

TEST_CASE("syntax errors carry offsets") {
    auto offset_of = [](const char* text) -> long {
        try {
            parse_expression(text);
        } catch (const ParseError& e) {
            return static_cast<long>(e.offset());
        }
        return -1;
    };
    CHECK(offset_of("x^") == 2);
    CHECK(offset_of("x + ") == 4);
    CHECK(offset_of("(x") == 2);
    CHECK(offset_of("x $ y") == 2);
    CHECK(offset_of("x^y") == 2);
    CHECK(offset_of("x y") == 2);
    CHECK(offset_of("1/0") >= 0);
}

TEST_CASE("whitelist") {
    std::vector<std::string> vars = {"x", "y"};
    CHECK(parse_expression("y*x", vars).variables() == vars);
    CHECK_THROWS_AS(parse_expression("x + q", vars), ParseError);
}

TEST_CASE("print then parse is idempotent") {
    auto rng = rng_for(21);
    for (int i = 0; i < 1000; ++i) {
        std::string text = random_expression(rng, 4);
        Poly p = parse_expression(text);
        std::string printed = p.to_string();
        Poly again = parse_expression(printed);
        CHECK_MESSAGE(again == p, text);
        // over a fixed variable order the text itself is a fixed point
        std::vector<std::string> vars = {"x", "y", "z", "u'", "w_1"};
        std::string fixed = parse_expression(text, vars).to_string();
        CHECK(parse_expression(fixed, vars).to_string() == fixed);
    }
}

#include <doctest.h>

#include <set>

#include "lnd/automorphisms.hpp"
#include "lnd/derivations.hpp"
#include "lnd/error.hpp"
#include "support.hpp"

using namespace lnd;
using lnd::testing::rng_for;
using lnd::testing::uniform;

namespace {

Ring ring_2372() {
    return Ring(make_threefold(make_surface(2, 3, 7, 0), 2, 2));
}

std::map<std::string, AElement> zero_images(const Ring& r) {
    std::map<std::string, AElement> images;
    for (const auto& g : r.variables()) images.emplace(g, r.zero());
    return images;
}

// Monomials x^i y^j z^k with i+j+k <= bound, k < c.
std::size_t xyz_count(unsigned bound, int c) {
    std::size_t n = 0;
    for (unsigned i = 0; i <= bound; ++i)
        for (unsigned j = 0; i + j <= bound; ++j)
            for (unsigned k = 0; i + j + k <= bound; ++k)
                if (static_cast<int>(k) < c) ++n;
    return n;
}

}  // namespace

TEST_CASE("well-definedness") {
    Ring r = ring_2372();
    Derivation e = canonical_E(r);
    CHECK(e.image("u") == r.parse("y^2"));
    CHECK(e.image("v") == r.parse("x^2"));
    CHECK(e.image("x").is_zero());

    auto images = zero_images(r);
    images.insert_or_assign("u", r.constant(1));
    try {
        make_derivation(r, images);
        FAIL("d/du alone must be rejected");
    } catch (const IllDefinedDerivation& err) {
        CHECK(err.image() == "x^2");
    }
    CHECK_NOTHROW(zero_derivation(r));

    auto partial = zero_images(r);
    partial.erase("v");
    CHECK_THROWS_AS(make_derivation(r, partial), InvalidParameters);

    // 7z^6 d/dy - 3y^2 d/dz kills the surface relation but not the unit relation
    auto surface = zero_images(r);
    surface.insert_or_assign("y", r.parse("7*z^6"));
    surface.insert_or_assign("z", r.parse("-3*y^2"));
    CHECK_THROWS_AS(make_derivation(r, surface), IllDefinedDerivation);
}

TEST_CASE("apply examples") {
    Ring r = ring_2372();
    Derivation e = canonical_E(r);
    CHECK(e.apply(r.parse("u")) == r.parse("y^2"));
    CHECK(e.apply(r.parse("x^2*u - y^2*v")).is_zero());
    CHECK(e.apply(r.parse("u*v")) == r.parse("2*y^2*v + 1"));
    CHECK(apply(e, r.parse("x*y*z")).is_zero());
}

TEST_CASE("Leibniz rule on random pairs") {
    auto rng = rng_for(41);
    for (const auto& params : testing::sample_threefolds()) {
        Ring r(params);
        // E and a non-nilpotent multiple of it
        std::vector<Derivation> ds = {canonical_E(r), scaled(canonical_E(r), r.parse("u + z"))};
        for (const auto& d : ds) {
            for (int i = 0; i < 20; ++i) {
                AElement h = r.element(testing::random_poly(rng, r.variables(), 4, 5));
                AElement k = r.element(testing::random_poly(rng, r.variables(), 4, 5));
                CHECK(d.apply(h * k) == d.apply(h) * k + h * d.apply(k));
                CHECK(d.apply(h + k) == d.apply(h) + d.apply(k));
            }
        }
    }
}

TEST_CASE("local nilpotency") {
    Ring r = ring_2372();
    NilpotencyVerdict v = is_locally_nilpotent(canonical_E(r));
    REQUIRE(v.nilpotent);
    std::map<std::string, std::size_t> idx(v.indices.begin(), v.indices.end());
    CHECK(idx == std::map<std::string, std::size_t>{{"x", 1}, {"y", 1}, {"z", 1}, {"u", 2}, {"v", 2}});

    Derivation ue = scaled(canonical_E(r), r.generator("u"));
    for (std::size_t bound : {1, 5, 12}) {
        NilpotencyVerdict nv = is_locally_nilpotent(ue, bound);
        CHECK_FALSE(nv.nilpotent);
        CHECK(nv.stalled_generator == "u");
    }

    NilpotencyVerdict z = is_locally_nilpotent(zero_derivation(r));
    CHECK(z.nilpotent);
    for (const auto& [g, k] : z.indices) CHECK(k == 1);
    CHECK_THROWS_AS(is_locally_nilpotent(canonical_E(r), 0), InvalidParameters);
}

TEST_CASE("kernel membership") {
    Ring r = ring_2372();
    Derivation e = canonical_E(r);
    CHECK(kernel_membership(e, r.parse("x")));
    CHECK_FALSE(kernel_membership(e, r.parse("u")));
    CHECK(kernel_membership(e, r.parse("x^2*u - y^2*v")));
    // -y^n H_u = x^m H_v fails for H = u*x^2 + v*y^2
    CHECK_FALSE(kernel_membership(e, r.parse("u*x^2 + v*y^2")));
}

TEST_CASE("bounded kernel") {
    Ring r = ring_2372();
    Derivation e = canonical_E(r);
    for (unsigned bound : {1u, 2u, 3u}) {
        auto basis = kernel_basis_bounded(e, bound);
        CHECK(basis.size() == xyz_count(bound, 7));
        std::set<std::string> got;
        for (const auto& b : basis) {
            CHECK(b.value().degree("u") <= 0);
            CHECK(b.value().degree("v") <= 0);
            CHECK(b.value().size() == 1);  // reduced echelon rows of a monomial span
            got.insert(b.to_string());
        }
        CHECK(got.size() == basis.size());
    }
    auto all = kernel_basis_bounded(zero_derivation(r), 1);
    CHECK(all.size() == 6);  // 1, x, y, z, u, v
    CHECK(normal_form_monomials(r, 1).size() == 6);
    CHECK_THROWS_AS(kernel_basis_bounded(e, 6, 50), ResourceLimit);
}

TEST_CASE("bounded kernel with small c") {
    // c = 3: monomials with z^3 are not normal, the count must drop them
    Ring r(make_threefold(make_surface(2, 5, 3, 0), 3, 3));
    auto basis = kernel_basis_bounded(canonical_E(r), 4);
    CHECK(basis.size() == xyz_count(4, 3));
}

TEST_CASE("exponential map") {
    Ring r = ring_2372();
    Derivation e = canonical_E(r);
    CHECK(exp_map(e, 0) == RingMap::identity(r));
    RingMap flow = exp_map(e, Rational(3, 2));
    CHECK(flow.image("u") == r.parse("u + 3/2*y^2"));
    CHECK(flow.image("v") == r.parse("v + 3/2*x^2"));
    CHECK(flow.image("z") == r.parse("z"));
    CHECK(flow.preserves_relations());
    CHECK(compose(exp_map(e, 1), exp_map(e, -1)) == RingMap::identity(r));

    // E + u d/dw on A[w]: D(w) = u, D^2(w) = y^n, so the series has three terms
    auto rng = rng_for(42);
    for (const auto& params : testing::sample_threefolds()) {
        Ring q(params, {"w"});
        Derivation eq = canonical_E(q);
        std::map<std::string, AElement> images;
        for (const auto& [g, img] : eq.images()) images.emplace(g, img);
        images.insert_or_assign("w", q.generator("u"));
        Derivation d = make_derivation(q, images);
        CHECK(exp_map(d, 2).image("w") == q.parse("w + 2*u + 2*y^" + std::to_string(params.n)));
        for (int i = 0; i < 5; ++i) {
            Rational s = testing::random_nonzero_rational(rng), t = testing::random_nonzero_rational(rng);
            CHECK(compose(exp_map(d, s), exp_map(d, t)) == exp_map(d, s + t));
            CHECK(exp_map(d, t).preserves_relations());
        }
    }
    CHECK_THROWS_AS(exp_map(scaled(e, r.generator("u")), 1, 10), HypothesisViolation);
}

TEST_CASE("Bezout split") {
    Ring r = ring_2372();
    auto [a, b] = bezout_split(r, 2, 2);
    CHECK(a == r.parse("u"));
    CHECK(b == r.parse("-v"));

    auto [a3, b2] = bezout_split(r, 3, 2);
    CHECK(a3 * r.parse("x^3") + b2 * r.parse("y^2") == r.constant(1));

    for (const auto& params : testing::sample_threefolds()) {
        Ring q(params);
        for (int mp = 1; mp <= 6; ++mp)
            for (int np = 1; np <= 6; ++np) {
                auto [A, B] = bezout_split(q, mp, np);
                AElement xm = a_pow(q.generator("x"), static_cast<unsigned long>(mp));
                AElement yn = a_pow(q.generator("y"), static_cast<unsigned long>(np));
                CHECK(A * xm + B * yn == q.constant(1));
            }
    }
    CHECK_THROWS_AS(bezout_split(r, 0, 2), InvalidParameters);
}

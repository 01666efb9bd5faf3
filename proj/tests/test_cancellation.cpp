#include <doctest.h>

#include <json.hpp>

#include "lnd/artifact.hpp"
#include "lnd/cancellation.hpp"
#include "lnd/error.hpp"

using namespace lnd;

namespace {

SurfaceParams s2370() {
    return make_surface(2, 3, 7, 0);
}

StableIso build(const SurfaceParams& s, int n, int m, int n2, int m2) {
    return build_stable_iso(s, make_threefold(s, n, m), make_threefold(s, n2, m2));
}

StableIso with_forward_image(const StableIso& iso, const std::string& generator, const AElement& img) {
    std::vector<std::pair<std::string, AElement>> images = iso.forward.images();
    for (auto& [name, value] : images)
        if (name == generator) value = img;
    StableIso out = iso;
    out.forward = RingMap(iso.forward.source(), iso.forward.target(), std::move(images));
    return out;
}

}  // namespace

TEST_CASE("identical parameters") {
    StableIso iso = build(s2370(), 2, 2, 2, 2);
    const Ring& l = iso.forward.source();
    CHECK(iso.left_certificate.first == l.parse("u"));
    CHECK(iso.left_certificate.second == l.parse("-v"));
    // slice s = -v u' + u v' pulled back: forward(w) = -w on the diagonal
    CHECK(iso.forward.image("w") == iso.forward.target().parse("-w"));
    StableIsoReport rep = verify_stable_iso(iso);
    CHECK(rep.ok());
    CHECK(rep.failures.empty());
}

TEST_CASE("(2,2) and (2,3) over (2,3,7,0)") {
    StableIso iso = build(s2370(), 2, 2, 2, 3);
    const Ring& r = iso.forward.target();
    for (const char* g : {"x", "y", "z"}) CHECK(iso.forward.image(g) == r.generator(g));
    for (const char* g : {"x", "y", "z"}) CHECK(iso.backward.image(g) == iso.backward.target().generator(g));
    StableIsoReport rep = verify_stable_iso(iso);
    CHECK(rep.relations_ok);
    CHECK(rep.round_trip_ok);
    CHECK(rep.certificates_ok);
    // N = ceil(3/2) - 1 + ceil(2/2) = 2 for the left certificate
    CHECK(rep.forward_max_degree > 0);
    CHECK(rep.forward_max_degree <= 2 * (2 + 3 + 2) + 3);
}

TEST_CASE("all small pairs over several surfaces") {
    std::vector<SurfaceParams> surfaces = {s2370(), make_surface(2, 3, 5, 1), make_surface(3, 4, 5, Rational(-1, 2))};
    for (const auto& s : surfaces)
        for (int n = 2; n <= 3; ++n)
            for (int m = 2; m <= 3; ++m)
                for (int n2 = 2; n2 <= 3; ++n2)
                    for (int m2 = 2; m2 <= 4; ++m2) {
                        StableIso iso = build(s, n, m, n2, m2);
                        CHECK_MESSAGE(verify_stable_iso(iso).ok(), s.to_string() << " " << n << m << n2 << m2);
                    }
}

TEST_CASE("fault injection") {
    StableIso iso = build(s2370(), 2, 2, 2, 3);
    const Ring& r = iso.forward.target();
    StableIso broken = with_forward_image(iso, "u", iso.forward.image("u") + r.constant(1));
    StableIsoReport rep = verify_stable_iso(broken);
    CHECK_FALSE(rep.round_trip_ok);
    CHECK_FALSE(rep.ok());
    CHECK_FALSE(rep.failures.empty());

    // an image breaking a relation
    StableIso bad_z = with_forward_image(iso, "z", r.parse("2*z"));
    CHECK_FALSE(verify_stable_iso(bad_z).relations_ok);

    StableIso bad_cert = iso;
    bad_cert.left_certificate.first = bad_cert.left_certificate.first + iso.forward.source().constant(1);
    StableIsoReport cert = verify_stable_iso(bad_cert);
    CHECK_FALSE(cert.certificates_ok);
    CHECK(cert.round_trip_ok);
}

TEST_CASE("parameter mismatch") {
    SurfaceParams s = s2370();
    SurfaceParams other = make_surface(2, 3, 5, 0);
    CHECK_THROWS_AS(build_stable_iso(s, make_threefold(s, 2, 2), make_threefold(other, 2, 3)), ParamsMismatch);
}

TEST_CASE("equivariance with the translation of w'") {
    for (auto [n2, m2] : std::vector<std::pair<int, int>>{{2, 2}, {2, 3}, {3, 2}}) {
        StableIso iso = build(s2370(), 2, 2, n2, m2);
        Derivation lifted = lifted_E(iso);
        CHECK(is_locally_nilpotent(lifted).nilpotent);
        for (Rational t : {Rational(1), Rational(-2, 3)}) {
            EquivarianceReport eq = check_equivariance(iso, t);
            CHECK(eq.proportional_to_translation);
            CHECK(eq.scale == 1);
            CHECK(eq.intertwines);
        }
    }
}

TEST_CASE("artifact round trip") {
    StableIso iso = build(s2370(), 2, 3, 3, 2);
    std::string text = stable_iso_to_json(iso);
    auto doc = nlohmann::json::parse(text);
    CHECK(doc["forward"].size() == 6);
    CHECK(doc["backward"].size() == 6);
    CHECK(doc["backward"].contains("w'"));
    CHECK(doc["forward"]["x"] == "x");
    CHECK(doc["certificates"].contains("B'"));

    StableIso back = stable_iso_from_json(text);
    CHECK(back.forward == iso.forward);
    CHECK(back.backward == iso.backward);
    CHECK(verify_stable_iso(back).ok());
    CHECK(stable_iso_to_json(back) == text);

    doc["forward"]["u"] = doc["forward"]["u"].get<std::string>() + " + 1";
    CHECK_FALSE(verify_stable_iso(stable_iso_from_json(doc.dump())).round_trip_ok);

    CHECK_THROWS_AS(stable_iso_from_json("{"), ParseError);
    CHECK_THROWS_AS(stable_iso_from_json("{\"format\": \"other\"}"), ParseError);
    auto missing = nlohmann::json::parse(text);
    missing["backward"].erase("v'");
    CHECK_THROWS_AS(stable_iso_from_json(missing.dump()), ParseError);
}

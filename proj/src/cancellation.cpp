#include "lnd/cancellation.hpp"

#include <algorithm>

#include "lnd/error.hpp"

namespace lnd {

namespace {

AElement power_of(const Ring& ring, const char* name, int e) {
    return a_pow(ring.generator(name), static_cast<unsigned long>(e));
}

// One half of the construction: the map from `from`[w] into `to`[w] that
// fixes x,y,z, trivializes the `to`-bundle over `from` and sends w to the slice.
//   cert_to  = (A', B') in `to` with A' x^{m_from} + B' y^{n_from} = 1
//   cert_from = (A, B) in `from` with A x^{m_to} + B y^{n_to} = 1
RingMap half_iso(const Ring& from, const Ring& to, const std::pair<AElement, AElement>& cert_from,
                 const std::pair<AElement, AElement>& cert_to) {
    const auto& pf = from.params();
    AElement w = to.generator("w");
    AElement u_img = cert_to.first + w * power_of(to, "y", pf.n);
    AElement v_img = -cert_to.second + w * power_of(to, "x", pf.m);

    std::vector<std::pair<std::string, AElement>> base;
    for (const char* g : {"x", "y", "z"}) base.emplace_back(g, to.generator(g));
    base.emplace_back("u", u_img);
    base.emplace_back("v", v_img);
    RingMap on_base(from, to, base);

    // slice s = B u' + A v', with u', v' the generators of `to`
    AElement slice = on_base.apply(cert_from.second) * to.generator("u") + on_base.apply(cert_from.first) * to.generator("v");
    base.emplace_back("w", slice);
    return RingMap(from, to, std::move(base));
}

long max_image_degree(const RingMap& map) {
    long d = 0;
    for (const auto& [name, img] : map.images()) d = std::max(d, img.value().total_degree());
    return d;
}

}  // namespace

Ring bundle_ring(const ThreefoldParams& params) {
    return Ring(params, {"w"});
}

StableIso build_stable_iso(const SurfaceParams& surface, const ThreefoldParams& left, const ThreefoldParams& right) {
    if (!(left.surface == surface) || !(right.surface == surface))
        throw ParamsMismatch("both threefolds must be built over the surface " + surface.to_string());
    Ring lring = bundle_ring(left);
    Ring rring = bundle_ring(right);
    auto left_cert = bezout_split(lring, right.m, right.n);
    auto right_cert = bezout_split(rring, left.m, left.n);

    StableIso iso{surface,
                  left,
                  right,
                  half_iso(lring, rring, left_cert, right_cert),
                  half_iso(rring, lring, right_cert, left_cert),
                  left_cert,
                  right_cert};
    StableIsoReport report = verify_stable_iso(iso);
    if (!report.ok()) {
        std::string what = "stable isomorphism failed verification:";
        for (const auto& f : report.failures) what += " " + f + ";";
        throw CertificateFailure(what);
    }
    return iso;
}

StableIsoReport verify_stable_iso(const StableIso& iso) {
    StableIsoReport report;
    auto guarded = [&](const char* what, auto&& check) {
        try {
            return check();
        } catch (const std::exception& e) {
            report.failures.push_back(std::string(what) + ": " + e.what());
            return false;
        }
    };

    Ring lring = bundle_ring(iso.left);
    Ring rring = bundle_ring(iso.right);

    report.certificates_ok = guarded("certificates", [&] {
        bool ok = true;
        const auto& [a, b] = iso.left_certificate;
        if (!(a * power_of(lring, "x", iso.right.m) + b * power_of(lring, "y", iso.right.n) == lring.constant(1))) {
            report.failures.push_back("left certificate: A x^m' + B y^n' != 1");
            ok = false;
        }
        const auto& [ra, rb] = iso.right_certificate;
        if (!(ra * power_of(rring, "x", iso.left.m) + rb * power_of(rring, "y", iso.left.n) == rring.constant(1))) {
            report.failures.push_back("right certificate: A' x^m + B' y^n != 1");
            ok = false;
        }
        return ok;
    });

    report.relations_ok = guarded("relations", [&] {
        bool ok = true;
        if (!(iso.forward.source() == lring) || !(iso.forward.target() == rring) || !(iso.backward.source() == rring) ||
            !(iso.backward.target() == lring) || !iso.forward.covers_all_generators() ||
            !iso.backward.covers_all_generators()) {
            report.failures.push_back("maps do not connect A_{n,m}[w] and A_{n',m'}[w']");
            return false;
        }
        for (const auto* map : {&iso.forward, &iso.backward}) {
            for (const auto& [relation, image] : map->relation_images()) {
                if (!image.is_zero()) {
                    report.failures.push_back(std::string(map == &iso.forward ? "forward" : "backward") + " sends " +
                                              relation + " to " + image.to_string());
                    ok = false;
                }
            }
        }
        return ok;
    });

    report.round_trip_ok = guarded("round trip", [&] {
        bool ok = true;
        for (const auto& name : lring.variables()) {
            AElement back = iso.backward.apply(iso.forward.image(name));
            if (!(back == lring.generator(name))) {
                report.failures.push_back("backward(forward(" + name + ")) = " + back.to_string());
                ok = false;
            }
        }
        for (const auto& name : rring.variables()) {
            AElement fwd = iso.forward.apply(iso.backward.image(name));
            if (!(fwd == rring.generator(name))) {
                report.failures.push_back("forward(backward(" + name + "')) = " + fwd.to_string());
                ok = false;
            }
        }
        return ok;
    });

    report.forward_max_degree = max_image_degree(iso.forward);
    report.backward_max_degree = max_image_degree(iso.backward);
    return report;
}

Derivation lifted_E(const StableIso& iso) {
    Ring lring = bundle_ring(iso.left);
    Derivation e = canonical_E(lring);
    const auto& [a, b] = iso.left_certificate;
    std::map<std::string, AElement> images;
    for (const auto& [name, img] : e.images()) images.emplace(name, img);
    images.insert_or_assign("w", a * e.apply(b) - b * e.apply(a));
    return make_derivation(lring, images);
}

EquivarianceReport check_equivariance(const StableIso& iso, const Rational& t) {
    EquivarianceReport report;
    Derivation lifted = lifted_E(iso);
    const Ring& rring = iso.forward.target();

    // pushed-forward derivation on the right: g -> forward(lifted(backward(g)))
    bool others_vanish = true;
    AElement w_image = rring.zero();
    for (const auto& name : rring.variables()) {
        AElement img = iso.forward.apply(lifted.apply(iso.backward.image(name)));
        if (name == "w")
            w_image = img;
        else if (!img.is_zero())
            others_vanish = false;
    }
    if (others_vanish && w_image.value().is_constant() && !w_image.is_zero()) {
        report.proportional_to_translation = true;
        report.scale = w_image.value().constant_term();
    }
    if (!report.proportional_to_translation) return report;

    RingMap flow_left = exp_map(lifted, t);
    std::vector<std::pair<std::string, AElement>> shift;
    for (const auto& name : rring.variables()) {
        AElement img = rring.generator(name);
        if (name == "w") img = img + rring.constant(t * report.scale);
        shift.emplace_back(name, img);
    }
    RingMap flow_right(rring, rring, std::move(shift));
    report.intertwines = compose(iso.forward, flow_left) == compose(flow_right, iso.forward);
    return report;
}

}  // namespace lnd

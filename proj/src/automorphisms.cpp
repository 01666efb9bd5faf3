#include "lnd/automorphisms.hpp"

#include "lnd/error.hpp"

namespace lnd {

namespace {

struct TorusWeights {
    long x, y, z, u, v;
};

TorusWeights weights(const ThreefoldParams& p) {
    const long a = p.surface.a, b = p.surface.b, c = p.surface.c;
    return {b * c, a * c, a * b, -static_cast<long>(p.m) * b * c, -static_cast<long>(p.n) * a * c};
}

void require_xyz(const AElement& f) {
    for (const auto& name : f.value().used_variables())
        if (name != "x" && name != "y" && name != "z")
            throw InvalidParameters("shear part must lie in Q[x,y,z], but uses " + name);
}

}  // namespace

RingMap torus_map(const Ring& ring, const Rational& mu) {
    if (mu == 0) throw InvalidParameters("torus parameter must be nonzero");
    auto w = weights(ring.params());
    std::vector<std::pair<std::string, AElement>> images;
    for (const auto& name : ring.variables()) {
        long weight = 0;
        if (name == "x") weight = w.x;
        if (name == "y") weight = w.y;
        if (name == "z") weight = w.z;
        if (name == "u") weight = w.u;
        if (name == "v") weight = w.v;
        images.emplace_back(name, rational_pow(mu, weight) * ring.generator(name));
    }
    return RingMap(ring, ring, std::move(images));
}

RingMap shear_map(const Ring& ring, const AElement& f) {
    if (!(f.ring() == ring)) throw ParamsMismatch("shear part is not in the ring");
    require_xyz(f);
    const auto& p = ring.params();
    std::vector<std::pair<std::string, AElement>> images;
    for (const auto& name : ring.variables()) {
        AElement img = ring.generator(name);
        if (name == "u") img = img + f * a_pow(ring.generator("y"), static_cast<unsigned long>(p.n));
        if (name == "v") img = img + f * a_pow(ring.generator("x"), static_cast<unsigned long>(p.m));
        images.emplace_back(name, img);
    }
    return RingMap(ring, ring, std::move(images));
}

RingMap AutElement::as_map() const {
    return compose(torus_map(ring(), mu_), shear_map(ring(), f_));
}

AutElement make_aut(const Rational& mu, const AElement& f) {
    if (mu == 0) throw InvalidParameters("torus parameter must be nonzero");
    require_xyz(f);
    AutElement phi(mu, f);
    if (!phi.as_map().preserves_relations())
        throw InvalidParameters("torus(" + to_string(mu) + ") does not preserve x^a + y^b + z^c + " +
                                to_string(f.ring().surface().lambda));
    return phi;
}

AutElement torus(const Ring& ring, const Rational& mu) {
    return make_aut(mu, ring.zero());
}

AutElement shear(const Ring& ring, const AElement& f) {
    if (!(f.ring() == ring)) throw ParamsMismatch("shear part is not in the ring");
    return make_aut(1, f);
}

AutElement identity_aut(const Ring& ring) {
    return make_aut(1, ring.zero());
}

AElement twist(const Rational& mu, const AElement& f) {
    const Ring& ring = f.ring();
    require_xyz(f);
    auto w = weights(ring.params());
    Rational outer = rational_pow(mu, -(w.u + w.v));  // mbc + nac
    std::vector<Term> terms;
    for (const auto& t : f.value().terms()) {
        long weight = w.x * t.exponents[Ring::kX] + w.y * t.exponents[Ring::kY] + w.z * t.exponents[Ring::kZ];
        terms.push_back(Term{t.exponents, t.coefficient * outer * rational_pow(mu, weight)});
    }
    // the torus is graded, so scaling preserves normal form
    return ring.element(Poly::from_terms(ring.variables(), std::move(terms)));
}

AElement apply_aut(const AutElement& phi, const AElement& h) {
    return phi.as_map().apply(h);
}

// T(mu) S(f) T(nu) S(g) = T(mu nu) S(twist(1/nu, f) + g)
AutElement compose(const AutElement& phi, const AutElement& psi) {
    if (!(phi.ring() == psi.ring())) throw ParamsMismatch("automorphisms of different rings");
    Rational nu_inv = 1 / psi.mu();
    return make_aut(phi.mu() * psi.mu(), twist(nu_inv, phi.shear_part()) + psi.shear_part());
}

// (T(mu) S(f))^{-1} = S(-f) T(1/mu) = T(1/mu) S(-twist(mu, f))
AutElement invert(const AutElement& phi) {
    return make_aut(1 / phi.mu(), -twist(phi.mu(), phi.shear_part()));
}

Derivation conjugated_derivation(const Derivation& d, const AutElement& phi) {
    if (!(d.ring() == phi.ring())) throw ParamsMismatch("derivation and automorphism act on different rings");
    return conjugate(d, phi.as_map(), invert(phi).as_map());
}

Rational conjugate_E(const AutElement& phi) {
    const Ring& ring = phi.ring();
    Derivation e = canonical_E(ring);
    Derivation conj = conjugated_derivation(e, phi);
    const AElement& eu = e.image("u");
    const Poly& img_u = conj.image("u").value();
    if (img_u.is_zero()) throw CertificateFailure("conjugate of E vanishes on u");
    Rational lambda = img_u.leading_term().coefficient / eu.value().leading_term().coefficient;
    for (const auto& [name, img] : e.images()) {
        if (!(conj.image(name) == lambda * img))
            throw CertificateFailure("phi^{-1} E phi is not proportional to E at generator " + name + ": " +
                                     conj.image(name).to_string());
    }
    return lambda;
}

RingMap restrict_to_surface(const AutElement& phi) {
    RingMap full = phi.as_map();
    std::vector<std::pair<std::string, AElement>> images;
    for (const char* name : {"x", "y", "z"}) images.emplace_back(name, full.image(name));
    return RingMap(phi.ring(), phi.ring(), std::move(images));
}

}  // namespace lnd

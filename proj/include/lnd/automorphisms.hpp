#pragma once

#include "lnd/derivations.hpp"
#include "lnd/rational.hpp"
#include "lnd/ring_map.hpp"
#include "lnd/rings.hpp"

namespace lnd {

/// An automorphism torus(mu) o shear(f) of A_{n,m}.
///
///   shear(f):  x,y,z fixed,  u -> u + f y^n,  v -> v + f x^m
///   torus(mu): x -> mu^{bc} x, y -> mu^{ac} y, z -> mu^{ab} z,
///              u -> mu^{-mbc} u, v -> mu^{-nac} v
///
/// with f in the x,y,z-subring. Adjoined variables are fixed.
class AutElement {
public:
    const Ring& ring() const noexcept { return f_.ring(); }
    const Rational& mu() const noexcept { return mu_; }
    const AElement& shear_part() const noexcept { return f_; }

    /// Generator images, computed by composing the torus and shear maps.
    RingMap as_map() const;

    friend bool operator==(const AutElement& lhs, const AutElement& rhs) {
        return lhs.mu_ == rhs.mu_ && lhs.f_ == rhs.f_;
    }

private:
    friend AutElement make_aut(const Rational& mu, const AElement& f);
    AutElement(Rational mu, AElement f) : mu_(std::move(mu)), f_(std::move(f)) {}
    Rational mu_;
    AElement f_;
};

/// Validates mu != 0, f free of u, v and adjoined variables, and that the
/// resulting map preserves both relations (the torus needs lambda = 0 or mu^{abc} = 1).
AutElement make_aut(const Rational& mu, const AElement& f);
AutElement torus(const Ring& ring, const Rational& mu);
AutElement shear(const Ring& ring, const AElement& f);
AutElement identity_aut(const Ring& ring);

RingMap torus_map(const Ring& ring, const Rational& mu);
RingMap shear_map(const Ring& ring, const AElement& f);

/// mu^{mbc+nac} f(mu^{bc} x, mu^{ac} y, mu^{ab} z), so that
/// torus(mu) o shear(f) o torus(mu)^{-1} = shear(twist(mu, f)).
AElement twist(const Rational& mu, const AElement& f);

AElement apply_aut(const AutElement& phi, const AElement& h);
/// phi o psi in normalized (mu, f) form.
AutElement compose(const AutElement& phi, const AutElement& psi);
AutElement invert(const AutElement& phi);

/// phi^{-1} o D o phi as a derivation.
Derivation conjugated_derivation(const Derivation& d, const AutElement& phi);

/// The scalar lambda with phi^{-1} E phi = lambda E. Throws CertificateFailure
/// if the conjugate is not a scalar multiple of E.
Rational conjugate_E(const AutElement& phi);

/// The x,y,z-images of phi, as a map on the x,y,z-subring.
RingMap restrict_to_surface(const AutElement& phi);

}  // namespace lnd

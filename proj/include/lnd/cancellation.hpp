#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lnd/derivations.hpp"
#include "lnd/ring_map.hpp"
#include "lnd/rings.hpp"

namespace lnd {

/// An explicit isomorphism A_{n,m}[w] ~ A_{n',m'}[w'] over the same surface.
///
/// Both sides are written with the generator names x,y,z,u,v,w; the primes
/// of the right-hand side are added only when an iso is serialized.
///
/// Construction: in the fibered product F = A_{n,m} (x)_R A_{n',m'} the
/// Bezout certificate A x^{m'} + B y^{n'} = 1 (in A_{n,m}) gives the slice
/// s = B u' + A v' of 1 (x) E', and u' = A + s y^{n'}, v' = -B + s x^{m'}, so
/// F = A_{n,m}[s]. Symmetrically F = A_{n',m'}[s'] with s' = B' u + A' v.
/// forward sends w to s rewritten over A_{n',m'}[w'] and backward is its mirror.
struct StableIso {
    SurfaceParams surface;
    ThreefoldParams left;
    ThreefoldParams right;
    RingMap forward;   ///< A_{n,m}[w] -> A_{n',m'}[w']
    RingMap backward;  ///< A_{n',m'}[w'] -> A_{n,m}[w]
    std::pair<AElement, AElement> left_certificate;   ///< (A, B) in A_{n,m}: A x^{m'} + B y^{n'} = 1
    std::pair<AElement, AElement> right_certificate;  ///< (A', B') in A_{n',m'}: A' x^m + B' y^n = 1
};

/// A_{n,m}[w] with the single adjoined variable "w".
Ring bundle_ring(const ThreefoldParams& params);

/// Throws ParamsMismatch when the two sides use different surfaces and
/// CertificateFailure if any invariant of the result fails.
StableIso build_stable_iso(const SurfaceParams& surface, const ThreefoldParams& left, const ThreefoldParams& right);

struct StableIsoReport {
    bool relations_ok = false;
    bool round_trip_ok = false;
    bool certificates_ok = false;
    long forward_max_degree = 0;
    long backward_max_degree = 0;
    /// Human-readable description of every failed check.
    std::vector<std::string> failures;

    bool ok() const noexcept { return relations_ok && round_trip_ok && certificates_ok; }
};

/// Re-checks every invariant with exact normal forms. Never throws on a
/// failed check; failures are reported.
StableIsoReport verify_stable_iso(const StableIso& iso);

/// The lift of E to A_{n,m}[w] corresponding to E (x) 1 on the fibered
/// product: E on A_{n,m} and w -> A E(B) - B E(A).
Derivation lifted_E(const StableIso& iso);

struct EquivarianceReport {
    /// forward o lifted_E o backward = scale * d/dw'
    bool proportional_to_translation = false;
    Rational scale = 0;
    /// forward o exp(t lifted_E) = exp(t scale d/dw') o forward on generators
    bool intertwines = false;
};

EquivarianceReport check_equivariance(const StableIso& iso, const Rational& t);

}  // namespace lnd

#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "lnd/ring_map.hpp"
#include "lnd/rings.hpp"

namespace lnd {

/// A Q-derivation of a Ring, given by the images of all generators.
///
/// Construction checks that the Leibniz extension kills both defining
/// relations; adjoined variables are free and impose no condition.
class Derivation {
public:
    const Ring& ring() const noexcept { return ring_; }
    const std::vector<std::pair<std::string, AElement>>& images() const noexcept { return images_; }
    const AElement& image(std::string_view generator) const;

    /// Leibniz extension: sum over generators g of dH/dg * D(g), in normal form.
    AElement apply(const AElement& h) const;

    bool is_zero() const;
    friend bool operator==(const Derivation& lhs, const Derivation& rhs);

private:
    friend Derivation make_derivation(const Ring& ring, const std::map<std::string, AElement>& images);
    Derivation(Ring ring, std::vector<std::pair<std::string, AElement>> images)
        : ring_(std::move(ring)), images_(std::move(images)) {}
    Ring ring_;
    std::vector<std::pair<std::string, AElement>> images_;
};

/// Every generator of `ring` must have an image. Throws IllDefinedDerivation
/// naming the first relation whose image is nonzero, InvalidParameters for a
/// missing generator, ParamsMismatch for images in another ring.
Derivation make_derivation(const Ring& ring, const std::map<std::string, AElement>& images);

/// y^n d/du + x^m d/dv (zero on x, y, z and adjoined variables).
Derivation canonical_E(const Ring& ring);
Derivation zero_derivation(const Ring& ring);
/// f * D
Derivation scaled(const Derivation& d, const AElement& f);

/// Images of the defining relations under the Leibniz extension of `images`.
std::vector<std::pair<std::string, AElement>> relation_images(const Ring& ring,
                                                              const std::map<std::string, AElement>& images);

AElement apply(const Derivation& d, const AElement& h);

struct NilpotencyVerdict {
    bool nilpotent = false;
    /// Least k with D^k(g) = 0, per generator; filled when nilpotent.
    std::vector<std::pair<std::string, std::size_t>> indices;
    /// First generator that stayed nonzero, when not nilpotent.
    std::string stalled_generator;
    std::size_t bound = 0;
};

/// Semi-decision: iterates D on every generator at most `iteration_bound` times.
NilpotencyVerdict is_locally_nilpotent(const Derivation& d, std::size_t iteration_bound = 50);

bool kernel_membership(const Derivation& d, const AElement& h);

/// Normal-form monomials of total degree <= bound, ascending graded-lex.
/// Throws ResourceLimit when more than `max_monomials` would be produced.
std::vector<Exponents> normal_form_monomials(const Ring& ring, unsigned total_degree_bound,
                                             std::size_t max_monomials = 200000);

/// Basis of {H in span(normal-form monomials of degree <= bound) : D(H) = 0},
/// from the reduced row echelon form of the exact linear system.
std::vector<AElement> kernel_basis_bounded(const Derivation& d, unsigned total_degree_bound,
                                           std::size_t max_monomials = 20000);

/// exp(t D): g -> sum_k t^k D^k(g) / k!. Throws HypothesisViolation unless D
/// is certified locally nilpotent within `iteration_bound`.
RingMap exp_map(const Derivation& d, const Rational& t, std::size_t iteration_bound = 50);

/// (A, B) with A x^{m'} + B y^{n'} = 1, read off from the expansion of
/// (x^m u - y^n v)^N = 1 with N = ceil(m'/m) - 1 + ceil(n'/n). Terms whose
/// x-power reaches m' go to A (ties included), the rest to B.
std::pair<AElement, AElement> bezout_split(const Ring& ring, int m_prime, int n_prime);

/// g -> outer(D(inner(g))); with inner = phi, outer = phi^{-1} this is phi^{-1} D phi.
Derivation conjugate(const Derivation& d, const RingMap& inner, const RingMap& outer);

}  // namespace lnd

#pragma once

#include <cstddef>
#include <memory>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "lnd/poly.hpp"
#include "lnd/rational.hpp"

namespace lnd {

/// Exponent data of P = x^a + y^b + z^c + lambda.
struct SurfaceParams {
    int a = 2;
    int b = 3;
    int c = 7;
    Rational lambda = 0;

    /// 1/a + 1/b + 1/c
    Rational reciprocal_sum() const;
    /// 1/a + 1/b + 1/c < 1
    bool ml_regime() const;
    /// a,b,c >= 4 and 1/(a-3) + 1/(b-3) + 1/(c-3) <= 1/2
    bool cor2_regime() const;
    std::string to_string() const;

    friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;
};

/// Validates a,b,c >= 2 and pairwise coprime. Throws InvalidParameters.
SurfaceParams make_surface(int a, int b, int c, const Rational& lambda);

struct ThreefoldParams {
    SurfaceParams surface;
    int n = 2;
    int m = 2;

    std::string to_string() const;
    friend bool operator==(const ThreefoldParams&, const ThreefoldParams&) = default;
};

/// n, m >= 2; with `permissive`, n, m >= 1 is accepted. Throws InvalidParameters.
ThreefoldParams make_threefold(const SurfaceParams& surface, int n, int m, bool permissive = false);

/// "a,b,c,lambda" with lambda an integer or p/q. Throws ParseError or InvalidParameters.
SurfaceParams parse_surface(std::string_view text);
/// "n,m"
ThreefoldParams parse_threefold(const SurfaceParams& surface, std::string_view text, bool permissive = false);

class AElement;

/// The ring A_{n,m}[w_1..w_k] = Q[x,y,z,u,v,w..]/(x^a+y^b+z^c+lambda, x^m u - y^n v - 1)
/// with freely adjoined variables w_i.
///
/// Elements are kept in the normal form modulo the rules
///     z^c   -> -x^a - y^b - lambda
///     x^m u -> y^n v + 1
/// whose left sides are coprime, so every reduction order reaches the same
/// remainder. A Ring is a cheap shared handle.
class Ring {
public:
    static constexpr std::size_t kX = 0, kY = 1, kZ = 2, kU = 3, kV = 4;

    explicit Ring(ThreefoldParams params, std::vector<std::string> adjoined = {});

    const ThreefoldParams& params() const noexcept { return data_->params; }
    const SurfaceParams& surface() const noexcept { return data_->params.surface; }
    const std::vector<std::string>& adjoined() const noexcept { return data_->adjoined; }
    /// x, y, z, u, v followed by the adjoined names.
    const std::vector<std::string>& variables() const noexcept { return data_->variables; }
    std::size_t generator_index(std::string_view name) const;

    AElement element(const Poly& p) const;
    AElement parse(std::string_view text) const;
    AElement zero() const;
    AElement constant(const Rational& c) const;
    AElement generator(std::string_view name) const;

    /// x^a + y^b + z^c + lambda
    Poly surface_relation() const;
    /// x^m u - y^n v - 1
    Poly unit_relation() const;

    bool is_normal(const Poly& p) const;

    friend bool operator==(const Ring& lhs, const Ring& rhs);

private:
    struct Data {
        ThreefoldParams params;
        std::vector<std::string> adjoined;
        std::vector<std::string> variables;
    };
    std::shared_ptr<const Data> data_;
};

/// An element of a Ring, always in normal form.
class AElement {
public:
    const Ring& ring() const noexcept { return ring_; }
    const Poly& value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_.is_zero(); }
    std::string to_string() const { return value_.to_string(); }

    AElement operator-() const;
    friend AElement operator+(const AElement& lhs, const AElement& rhs);
    friend AElement operator-(const AElement& lhs, const AElement& rhs);
    friend AElement operator*(const AElement& lhs, const AElement& rhs);
    friend AElement operator*(const Rational& c, const AElement& rhs);
    friend bool operator==(const AElement& lhs, const AElement& rhs);

private:
    friend class Ring;
    friend AElement normal_form(const Poly& p, const Ring& ring);
    AElement(Ring ring, Poly value) : ring_(std::move(ring)), value_(std::move(value)) {}
    Ring ring_;
    Poly value_;
};

enum class RingOp { add, mul };

/// Reduces p (over the ring's variables) to normal form. Throws UnknownVariable.
AElement normal_form(const Poly& p, const Ring& ring);

AElement ring_op(const AElement& lhs, const AElement& rhs, RingOp op);
AElement a_pow(const AElement& e, unsigned long k);

/// Reduction by single rule applications at randomly chosen (term, rule)
/// positions; each step replaces one occurrence of z^c or x^m u. Used as an
/// independent check of normal_form.
Poly reduce_stepwise(const Poly& p, const Ring& ring, std::mt19937_64& rng);

/// Coefficients p_0..p_d in Q[x,y,z,v] with H = sum p_i u^i. Requires no adjoined variables.
std::vector<Poly> u_decomposition(const AElement& h);
AElement u_reassemble(const std::vector<Poly>& coefficients, const Ring& ring);

}  // namespace lnd

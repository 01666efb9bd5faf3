#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "lnd/rational.hpp"

namespace lnd {

using Exponent = std::uint32_t;
using Exponents = std::vector<Exponent>;

struct Term {
    Exponents exponents;
    Rational coefficient;
};

/// Graded lexicographic order on exponent vectors (declared variable order).
/// Returns true when lhs is strictly larger than rhs.
bool grlex_greater(const Exponents& lhs, const Exponents& rhs) noexcept;

struct ExponentsHash {
    std::size_t operator()(const Exponents& e) const noexcept;
};

/// Sparse multivariate polynomial with rational coefficients.
///
/// Terms are kept sorted in descending graded-lex order with no zero
/// coefficients, so structural equality is polynomial equality once the
/// variable lists agree. Binary operations on polynomials with different
/// variable lists first align both operands on the union of their names
/// (left operand's order first).
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<std::string> variables);

    static Poly constant(const Rational& c, std::vector<std::string> variables = {});
    /// The polynomial `name`; `name` is appended to `variables` if absent.
    static Poly variable(const std::string& name, std::vector<std::string> variables = {});
    static Poly monomial(const Rational& c, Exponents exponents, std::vector<std::string> variables);
    /// Terms may be unsorted, repeated or zero; they are normalized.
    static Poly from_terms(std::vector<std::string> variables, std::vector<Term> terms);

    const std::vector<std::string>& variables() const noexcept { return variables_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }

    bool is_zero() const noexcept { return terms_.empty(); }
    bool is_constant() const noexcept;
    /// Total degree; -1 for the zero polynomial.
    long total_degree() const noexcept;
    /// Degree in one variable; 0 if the variable is not declared. -1 for zero.
    long degree(std::string_view name) const;
    Rational constant_term() const;
    Rational coefficient(const Exponents& exponents) const;
    /// Leading term in graded-lex order. Requires nonzero.
    const Term& leading_term() const;

    std::optional<std::size_t> index_of(std::string_view name) const noexcept;
    /// Variables that appear with positive exponent in some term.
    std::vector<std::string> used_variables() const;

    /// Re-expresses over `variables`; throws UnknownVariable if a used variable is missing.
    Poly with_variables(const std::vector<std::string>& variables) const;
    Poly renamed(const std::map<std::string, std::string>& renames) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Poly& rhs);
    Poly& operator*=(const Rational& c);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend Poly operator*(Poly lhs, const Rational& c) { return lhs *= c; }
    friend Poly operator*(const Rational& c, Poly rhs) { return rhs *= c; }

    friend bool operator==(const Poly& lhs, const Poly& rhs);

    /// Multiplies by the monomial x^shift (same variable list).
    Poly shifted(const Exponents& shift) const;

    /// Canonical text: lexicographic descending in declared variable order,
    /// explicit '*', '^' for exponents >= 2.
    std::string to_string() const;

private:
    friend class PolyBuilder;
    std::vector<std::string> variables_;
    std::vector<Term> terms_;
};

/// Accumulates terms in a hash map and produces a normalized Poly.
class PolyBuilder {
public:
    explicit PolyBuilder(std::vector<std::string> variables);

    void add(const Exponents& exponents, const Rational& c);
    /// Adds c * x^shift * p; p must share this builder's variable list.
    void add_scaled(const Poly& p, const Rational& c, const Exponents& shift);
    std::size_t size() const noexcept { return acc_.size(); }
    Poly finish();

private:
    std::vector<std::string> variables_;
    std::unordered_map<Exponents, Rational, ExponentsHash> acc_;
};

Poly pow(const Poly& p, unsigned long exponent);

/// Formal partial derivative. Throws UnknownVariable.
Poly partial_derivative(const Poly& p, std::string_view name);

/// Exact division p / q by leading-term reduction in graded-lex order.
/// Throws DivisionByZero when q = 0 and InexactDivision when q does not divide p.
Poly exact_divide(const Poly& p, const Poly& q);

/// Monic gcd of two univariate polynomials in the same variable.
/// Throws InvalidParameters when both are zero or more than one variable occurs.
Poly gcd_univariate(const Poly& f, const Poly& g);

/// Number of distinct roots over the algebraic closure: deg(f / gcd(f, f')).
std::size_t distinct_root_count(const Poly& f);

/// The single variable a univariate poly is written in, or nullopt for constants.
/// Throws InvalidParameters if more than one variable is used.
std::optional<std::string> univariate_variable(const Poly& p);

/// Cap on the number of terms of any intermediate polynomial.
/// Read once from LND_ALGEBRA_MAX_TERMS (default 1e6); overridable.
std::size_t max_terms();
void set_max_terms(std::size_t cap);

}  // namespace lnd

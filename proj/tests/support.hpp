#pragma once

// Seeded generators shared by the property tests.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "lnd/poly.hpp"
#include "lnd/rings.hpp"

namespace lnd::testing {

inline std::mt19937_64 rng_for(std::uint64_t seed) {
    return std::mt19937_64(seed);
}

inline int uniform(std::mt19937_64& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Univariate in `var` with degree <= max_degree and integer coefficients in [-c, c].
inline Poly random_univariate(std::mt19937_64& rng, int max_degree, int c, const std::string& var = "T") {
    int deg = uniform(rng, 0, max_degree);
    std::vector<Term> terms;
    for (int k = 0; k <= deg; ++k) terms.push_back(Term{Exponents{static_cast<Exponent>(k)}, uniform(rng, -c, c)});
    return Poly::from_terms({var}, std::move(terms));
}

/// Exactly `degree` with nonzero leading coefficient.
inline Poly random_univariate_exact(std::mt19937_64& rng, int degree, int c, const std::string& var = "T") {
    std::vector<Term> terms;
    for (int k = 0; k < degree; ++k) terms.push_back(Term{Exponents{static_cast<Exponent>(k)}, uniform(rng, -c, c)});
    int lead = 0;
    while (lead == 0) lead = uniform(rng, -c, c);
    terms.push_back(Term{Exponents{static_cast<Exponent>(degree)}, lead});
    return Poly::from_terms({var}, std::move(terms));
}

/// Up to `max_terms` random terms over `vars`, total degree <= max_degree,
/// small rational coefficients.
inline Poly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars, int max_degree, int max_terms,
                        bool rational_coefficients = false) {
    std::vector<Term> terms;
    int count = uniform(rng, 0, max_terms);
    for (int t = 0; t < count; ++t) {
        Exponents e(vars.size(), 0);
        int budget = uniform(rng, 0, max_degree);
        for (int k = 0; k < budget; ++k) ++e[static_cast<std::size_t>(uniform(rng, 0, static_cast<int>(vars.size()) - 1))];
        Rational c(uniform(rng, -5, 5), rational_coefficients ? uniform(rng, 1, 4) : 1);
        c.canonicalize();
        terms.push_back(Term{std::move(e), c});
    }
    return Poly::from_terms(vars, std::move(terms));
}

inline Rational random_nonzero_rational(std::mt19937_64& rng, int bound = 5) {
    int num = 0;
    while (num == 0) num = uniform(rng, -bound, bound);
    Rational q(num, uniform(rng, 1, bound));
    q.canonicalize();
    return q;
}

/// A few fixed parameter sets covering lambda = 0, lambda != 0, and n != m.
inline std::vector<ThreefoldParams> sample_threefolds() {
    return {
        make_threefold(make_surface(2, 3, 7, 0), 2, 2),
        make_threefold(make_surface(2, 3, 7, 0), 2, 3),
        make_threefold(make_surface(2, 3, 5, 1), 3, 2),
        make_threefold(make_surface(3, 4, 5, Rational(-2, 3)), 2, 4),
        make_threefold(make_surface(2, 5, 3, 0), 3, 3),
    };
}

}  // namespace lnd::testing

#pragma once

#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lnd/poly.hpp"
#include "lnd/rational.hpp"

namespace lnd {

/// Outcome of checking max(deg f, deg g, deg h) < N(fgh) for f + g + h = 0.
struct MasonReport {
    long max_degree = 0;
    std::size_t root_count = 0;
    /// f, g, h nonzero, of positive degree, with gcd(f, g, h) constant.
    bool applicable = false;
    /// max_degree < root_count; meaningful only when applicable.
    bool holds = false;
    Poly h;
};

/// h := -(f + g). Throws InvalidParameters when f and g are not univariate
/// in one common variable.
MasonReport mason_check(const Poly& f, const Poly& g);

enum class SearchMode { exhaustive, randomized };

struct SearchConfig {
    int a = 2, b = 3, c = 7;
    Rational lambda = 0;
    int degree_bound = 1;
    std::vector<Rational> coefficient_set;
    SearchMode mode = SearchMode::exhaustive;
    std::uint64_t samples = 100000;
    std::uint64_t seed = 0x5eed;
    /// Cap on (f, g) candidate pairs; each pair is completed by a table lookup for h.
    std::uint64_t max_candidates = 10'000'000;
    std::optional<std::chrono::milliseconds> time_limit;
    unsigned workers = 1;
    std::string variable = "T";
};

/// Which non-existence hypothesis a configuration satisfies.
enum class SearchRegime {
    none,
    cor1_strict,    ///< lambda = 0, 1/a + 1/b + 1/c < 1
    cor1_boundary,  ///< lambda = 0, 1/a + 1/b + 1/c = 1
    cor2,           ///< a,b,c >= 4, 1/(a-3) + 1/(b-3) + 1/(c-3) <= 1/2
};

SearchRegime search_regime(const SearchConfig& cfg);
/// True when the regime guarantees that no solution exists.
bool hypotheses_hold(const SearchConfig& cfg);
const char* to_string(SearchRegime regime);

struct FermatSolution {
    Poly f, g, h;
    /// Position in the enumeration (exhaustive) or sample index (randomized).
    std::uint64_t index = 0;
    /// f^a + g^b + h^c + lambda = 0, re-checked with sparse Poly arithmetic.
    bool verified = false;
};

struct SearchResult {
    std::vector<FermatSolution> solutions;
    std::uint64_t candidates_examined = 0;
    std::size_t polys_per_slot = 0;
    SearchRegime regime = SearchRegime::none;
};

/// Enumerates (or samples) nonconstant f, g, h of degree <= degree_bound with
/// coefficients in the set and returns every setwise coprime triple with
/// f^a + g^b + h^c + lambda = 0, ordered by enumeration index.
/// Throws InvalidParameters on a bad config and ResourceLimit when the
/// candidate cap or time limit is exceeded.
SearchResult fermat_search(const SearchConfig& cfg);

struct Cor2Report {
    long deg_w = 0;
    long bound = 0;
    bool holds = false;
    Poly w;
};

/// w := gcd(f^{a-1} f', g^{b-1} g', h^{c-1} h'); checks deg w <= deg f + deg g + deg h - 3.
/// Throws HypothesisViolation when an input is constant or gcd(f, g, h) is not constant.
Cor2Report cor2_degree_bound(const Poly& f, const Poly& g, const Poly& h, int a, int b, int c);

}  // namespace lnd

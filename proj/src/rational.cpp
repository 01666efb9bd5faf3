#include "lnd/rational.hpp"

#include <cctype>

#include "lnd/error.hpp"

namespace lnd {

namespace {

bool all_digits(std::string_view s) {
    if (s.empty()) return false;
    for (char ch : s)
        if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
    return true;
}

std::size_t hash_mpz(mpz_srcptr z) noexcept {
    std::size_t h = static_cast<std::size_t>(mpz_size(z)) * 0x9e3779b97f4a7c15ULL;
    h ^= static_cast<std::size_t>(mpz_sgn(z) + 1);
    if (mpz_size(z) > 0) h ^= static_cast<std::size_t>(mpz_getlimbn(z, 0)) + (h << 6) + (h >> 2);
    return h;
}

}  // namespace

Rational parse_rational(std::string_view text) {
    std::string_view body = text;
    bool negative = false;
    if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
        negative = body.front() == '-';
        body.remove_prefix(1);
    }
    auto slash = body.find('/');
    std::string_view num = body.substr(0, slash);
    std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den))
        throw InvalidParameters("malformed rational '" + std::string(text) + "'");
    Integer n(std::string(num), 10);
    Integer d(std::string(den), 10);
    if (d == 0) throw InvalidParameters("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

std::string to_string(const Rational& q) {
    return q.get_str();
}

Rational rational_pow(const Rational& base, long exponent) {
    Rational result = 1;
    if (exponent == 0) return result;
    if (exponent < 0 && base == 0) throw DivisionByZero();
    Integer num, den;
    unsigned long e = static_cast<unsigned long>(exponent < 0 ? -exponent : exponent);
    mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), e);
    mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), e);
    if (exponent < 0) std::swap(num, den);
    result = Rational(num, den);
    result.canonicalize();
    return result;
}

std::size_t hash_value(const Rational& q) noexcept {
    return hash_mpz(q.get_num_mpz_t()) * 31 + hash_mpz(q.get_den_mpz_t());
}

}  // namespace lnd

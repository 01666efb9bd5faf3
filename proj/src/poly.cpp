#include "lnd/poly.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "lnd/error.hpp"

namespace lnd {

namespace {

std::atomic<std::size_t>& term_cap() {
    static std::atomic<std::size_t> cap = [] {
        std::size_t value = 1000000;
        if (const char* env = std::getenv("LND_ALGEBRA_MAX_TERMS")) {
            char* end = nullptr;
            unsigned long long parsed = std::strtoull(env, &end, 10);
            if (end != env && *end == '\0' && parsed > 0) value = static_cast<std::size_t>(parsed);
        }
        return value;
    }();
    return cap;
}

void check_cap(std::size_t n) {
    if (n > max_terms())
        throw ResourceLimit("intermediate polynomial exceeds " + std::to_string(max_terms()) + " terms");
}

unsigned long long degree_sum(const Exponents& e) noexcept {
    return std::accumulate(e.begin(), e.end(), 0ULL);
}

bool term_greater(const Term& lhs, const Term& rhs) noexcept {
    return grlex_greater(lhs.exponents, rhs.exponents);
}

std::vector<std::string> union_variables(const std::vector<std::string>& lhs,
                                         const std::vector<std::string>& rhs) {
    std::vector<std::string> out = lhs;
    for (const auto& name : rhs)
        if (std::find(out.begin(), out.end(), name) == out.end()) out.push_back(name);
    return out;
}

// Brings both operands onto a common variable list.
void align(Poly& lhs, Poly& rhs) {
    if (lhs.variables() == rhs.variables()) return;
    auto vars = union_variables(lhs.variables(), rhs.variables());
    lhs = lhs.with_variables(vars);
    rhs = rhs.with_variables(vars);
}

// Merge of two sorted term lists: lhs + sign * rhs.
std::vector<Term> merge_terms(const std::vector<Term>& lhs, const std::vector<Term>& rhs, int sign) {
    std::vector<Term> out;
    out.reserve(lhs.size() + rhs.size());
    auto i = lhs.begin();
    auto j = rhs.begin();
    while (i != lhs.end() || j != rhs.end()) {
        if (j == rhs.end() || (i != lhs.end() && grlex_greater(i->exponents, j->exponents))) {
            out.push_back(*i++);
        } else if (i == lhs.end() || grlex_greater(j->exponents, i->exponents)) {
            out.push_back(Term{j->exponents, sign > 0 ? j->coefficient : Rational(-j->coefficient)});
            ++j;
        } else {
            Rational c = sign > 0 ? Rational(i->coefficient + j->coefficient)
                                  : Rational(i->coefficient - j->coefficient);
            if (c != 0) out.push_back(Term{i->exponents, std::move(c)});
            ++i;
            ++j;
        }
    }
    return out;
}

using Dense = std::vector<Rational>;

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense to_dense(const Poly& p, std::optional<std::size_t> index) {
    Dense d;
    for (const auto& t : p.terms()) {
        std::size_t e = index ? t.exponents[*index] : 0;
        if (d.size() <= e) d.resize(e + 1);
        d[e] += t.coefficient;
    }
    trim(d);
    return d;
}

Poly from_dense(const Dense& d, const std::vector<std::string>& vars, std::optional<std::size_t> index) {
    std::vector<Term> terms;
    for (std::size_t e = 0; e < d.size(); ++e) {
        if (d[e] == 0) continue;
        Exponents ex(vars.size(), 0);
        if (index) ex[*index] = static_cast<Exponent>(e);
        terms.push_back(Term{std::move(ex), d[e]});
    }
    return Poly::from_terms(vars, std::move(terms));
}

// a := a mod b, b nonzero.
void dense_rem(Dense& a, const Dense& b) {
    const Rational& lead = b.back();
    while (a.size() >= b.size()) {
        Rational factor = a.back() / lead;
        std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] -= factor * b[k];
        a.pop_back();
        trim(a);
    }
}

void make_monic(Dense& d) {
    if (d.empty()) return;
    Rational lead = d.back();
    for (auto& c : d) c /= lead;
}

}  // namespace

bool grlex_greater(const Exponents& lhs, const Exponents& rhs) noexcept {
    auto dl = degree_sum(lhs);
    auto dr = degree_sum(rhs);
    if (dl != dr) return dl > dr;
    for (std::size_t k = 0; k < lhs.size() && k < rhs.size(); ++k)
        if (lhs[k] != rhs[k]) return lhs[k] > rhs[k];
    return false;
}

std::size_t ExponentsHash::operator()(const Exponents& e) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (Exponent x : e) {
        h ^= x + 0x9e3779b9U;
        h *= 1099511628211ULL;
    }
    return h;
}

std::size_t max_terms() {
    return term_cap().load();
}

void set_max_terms(std::size_t cap) {
    term_cap().store(cap);
}

// ---------------------------------------------------------------------------
// PolyBuilder

PolyBuilder::PolyBuilder(std::vector<std::string> variables) : variables_(std::move(variables)) {}

void PolyBuilder::add(const Exponents& exponents, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = acc_.try_emplace(exponents, c);
    if (!inserted) it->second += c;
    if (inserted) check_cap(acc_.size());
}

void PolyBuilder::add_scaled(const Poly& p, const Rational& c, const Exponents& shift) {
    if (c == 0) return;
    Exponents e(variables_.size());
    for (const auto& t : p.terms()) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = t.exponents[k] + shift[k];
        add(e, c * t.coefficient);
    }
}

Poly PolyBuilder::finish() {
    Poly out(std::move(variables_));
    out.terms_.reserve(acc_.size());
    for (auto& [e, c] : acc_)
        if (c != 0) out.terms_.push_back(Term{e, std::move(c)});
    acc_.clear();
    std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
    return out;
}

// ---------------------------------------------------------------------------
// Poly

Poly::Poly(std::vector<std::string> variables) : variables_(std::move(variables)) {}

Poly Poly::constant(const Rational& c, std::vector<std::string> variables) {
    Poly p(std::move(variables));
    if (c != 0) p.terms_.push_back(Term{Exponents(p.variables_.size(), 0), c});
    return p;
}

Poly Poly::variable(const std::string& name, std::vector<std::string> variables) {
    if (std::find(variables.begin(), variables.end(), name) == variables.end()) variables.push_back(name);
    Poly p(std::move(variables));
    Exponents e(p.variables_.size(), 0);
    e[*p.index_of(name)] = 1;
    p.terms_.push_back(Term{std::move(e), 1});
    return p;
}

Poly Poly::monomial(const Rational& c, Exponents exponents, std::vector<std::string> variables) {
    Poly p(std::move(variables));
    if (exponents.size() != p.variables_.size())
        throw InvalidParameters("exponent vector length does not match variable count");
    if (c != 0) p.terms_.push_back(Term{std::move(exponents), c});
    return p;
}

Poly Poly::from_terms(std::vector<std::string> variables, std::vector<Term> terms) {
    PolyBuilder b(std::move(variables));
    for (const auto& t : terms) b.add(t.exponents, t.coefficient);
    return b.finish();
}

bool Poly::is_constant() const noexcept {
    return terms_.empty() || (terms_.size() == 1 && degree_sum(terms_.front().exponents) == 0);
}

long Poly::total_degree() const noexcept {
    if (terms_.empty()) return -1;
    return static_cast<long>(degree_sum(terms_.front().exponents));
}

long Poly::degree(std::string_view name) const {
    if (terms_.empty()) return -1;
    auto idx = index_of(name);
    if (!idx) return 0;
    long d = 0;
    for (const auto& t : terms_) d = std::max<long>(d, t.exponents[*idx]);
    return d;
}

Rational Poly::constant_term() const {
    return coefficient(Exponents(variables_.size(), 0));
}

Rational Poly::coefficient(const Exponents& exponents) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), exponents,
                               [](const Term& t, const Exponents& e) { return grlex_greater(t.exponents, e); });
    if (it != terms_.end() && it->exponents == exponents) return it->coefficient;
    return 0;
}

const Term& Poly::leading_term() const {
    if (terms_.empty()) throw InvalidParameters("leading term of the zero polynomial");
    return terms_.front();
}

std::optional<std::size_t> Poly::index_of(std::string_view name) const noexcept {
    for (std::size_t k = 0; k < variables_.size(); ++k)
        if (variables_[k] == name) return k;
    return std::nullopt;
}

std::vector<std::string> Poly::used_variables() const {
    std::vector<bool> used(variables_.size(), false);
    for (const auto& t : terms_)
        for (std::size_t k = 0; k < t.exponents.size(); ++k)
            if (t.exponents[k] > 0) used[k] = true;
    std::vector<std::string> out;
    for (std::size_t k = 0; k < variables_.size(); ++k)
        if (used[k]) out.push_back(variables_[k]);
    return out;
}

Poly Poly::with_variables(const std::vector<std::string>& variables) const {
    if (variables == variables_) return *this;
    std::vector<std::optional<std::size_t>> target(variables_.size());
    for (std::size_t k = 0; k < variables_.size(); ++k) {
        auto it = std::find(variables.begin(), variables.end(), variables_[k]);
        if (it != variables.end()) target[k] = static_cast<std::size_t>(it - variables.begin());
    }
    Poly out(variables);
    out.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
        Exponents e(variables.size(), 0);
        for (std::size_t k = 0; k < t.exponents.size(); ++k) {
            if (t.exponents[k] == 0) continue;
            if (!target[k]) throw UnknownVariable(variables_[k]);
            e[*target[k]] = t.exponents[k];
        }
        out.terms_.push_back(Term{std::move(e), t.coefficient});
    }
    std::sort(out.terms_.begin(), out.terms_.end(), term_greater);
    return out;
}

Poly Poly::renamed(const std::map<std::string, std::string>& renames) const {
    Poly out = *this;
    for (auto& name : out.variables_) {
        auto it = renames.find(name);
        if (it != renames.end()) name = it->second;
    }
    return out;
}

Poly Poly::operator-() const {
    Poly out = *this;
    for (auto& t : out.terms_) t.coefficient = -t.coefficient;
    return out;
}

Poly& Poly::operator+=(const Poly& rhs) {
    Poly r = rhs;
    align(*this, r);
    terms_ = merge_terms(terms_, r.terms_, +1);
    check_cap(terms_.size());
    return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
    Poly r = rhs;
    align(*this, r);
    terms_ = merge_terms(terms_, r.terms_, -1);
    check_cap(terms_.size());
    return *this;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& t : terms_) t.coefficient *= c;
    return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
    *this = *this * rhs;
    return *this;
}

Poly operator*(const Poly& lhs, const Poly& rhs) {
    Poly a = lhs;
    Poly b = rhs;
    align(a, b);
    if (a.is_zero() || b.is_zero()) return Poly(a.variables());
    if (a.size() < b.size()) std::swap(a, b);
    PolyBuilder builder(a.variables());
    for (const auto& t : b.terms()) builder.add_scaled(a, t.coefficient, t.exponents);
    return builder.finish();
}

bool operator==(const Poly& lhs, const Poly& rhs) {
    if (lhs.variables_ == rhs.variables_) {
        if (lhs.terms_.size() != rhs.terms_.size()) return false;
        for (std::size_t k = 0; k < lhs.terms_.size(); ++k)
            if (lhs.terms_[k].exponents != rhs.terms_[k].exponents ||
                lhs.terms_[k].coefficient != rhs.terms_[k].coefficient)
                return false;
        return true;
    }
    Poly a = lhs;
    Poly b = rhs;
    align(a, b);
    return a == b;
}

Poly Poly::shifted(const Exponents& shift) const {
    Poly out = *this;
    for (auto& t : out.terms_)
        for (std::size_t k = 0; k < shift.size(); ++k) t.exponents[k] += shift[k];
    // a monomial shift preserves the graded-lex order
    return out;
}

std::string Poly::to_string() const {
    if (terms_.empty()) return "0";
    // printed lexicographically (declared variable order), highest first
    std::vector<const Term*> order;
    for (const auto& t : terms_) order.push_back(&t);
    std::sort(order.begin(), order.end(),
              [](const Term* l, const Term* r) { return l->exponents > r->exponents; });
    std::ostringstream os;
    bool first = true;
    for (const Term* tp : order) {
        const Term& t = *tp;
        bool negative = t.coefficient < 0;
        Rational magnitude = abs(t.coefficient);
        if (first)
            os << (negative ? "-" : "");
        else
            os << (negative ? " - " : " + ");
        first = false;

        std::ostringstream mono;
        bool any = false;
        for (std::size_t k = 0; k < t.exponents.size(); ++k) {
            if (t.exponents[k] == 0) continue;
            if (any) mono << '*';
            mono << variables_[k];
            if (t.exponents[k] >= 2) mono << '^' << t.exponents[k];
            any = true;
        }
        if (!any)
            os << lnd::to_string(magnitude);
        else if (magnitude == 1)
            os << mono.str();
        else
            os << lnd::to_string(magnitude) << '*' << mono.str();
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// Free functions

Poly pow(const Poly& p, unsigned long exponent) {
    Poly result = Poly::constant(1, p.variables());
    Poly base = p;
    while (exponent > 0) {
        if (exponent & 1UL) result = result * base;
        exponent >>= 1;
        if (exponent > 0) base = base * base;
    }
    return result;
}

Poly partial_derivative(const Poly& p, std::string_view name) {
    auto idx = p.index_of(name);
    if (!idx) throw UnknownVariable(std::string(name));
    std::vector<Term> terms;
    for (const auto& t : p.terms()) {
        Exponent e = t.exponents[*idx];
        if (e == 0) continue;
        Term d{t.exponents, t.coefficient * e};
        d.exponents[*idx] = e - 1;
        terms.push_back(std::move(d));
    }
    return Poly::from_terms(p.variables(), std::move(terms));
}

Poly exact_divide(const Poly& p, const Poly& q) {
    Poly num = p;
    Poly den = q;
    align(num, den);
    if (den.is_zero()) throw DivisionByZero();
    const Term& lead = den.leading_term();
    PolyBuilder quotient(num.variables());
    Exponents shift(num.variables().size());
    while (!num.is_zero()) {
        const Term& t = num.leading_term();
        for (std::size_t k = 0; k < shift.size(); ++k) {
            if (t.exponents[k] < lead.exponents[k]) throw InexactDivision();
            shift[k] = t.exponents[k] - lead.exponents[k];
        }
        Rational c = t.coefficient / lead.coefficient;
        quotient.add(shift, c);
        num -= den.shifted(shift) * c;
    }
    return quotient.finish();
}

std::optional<std::string> univariate_variable(const Poly& p) {
    auto used = p.used_variables();
    if (used.size() > 1) throw InvalidParameters("polynomial " + p.to_string() + " is not univariate");
    if (used.empty()) return std::nullopt;
    return used.front();
}

Poly gcd_univariate(const Poly& f, const Poly& g) {
    if (f.is_zero() && g.is_zero()) throw InvalidParameters("gcd of two zero polynomials");
    auto vf = univariate_variable(f);
    auto vg = univariate_variable(g);
    if (vf && vg && *vf != *vg)
        throw InvalidParameters("gcd inputs are in different variables: " + *vf + ", " + *vg);
    Poly a = f;
    Poly b = g;
    align(a, b);
    auto var = vf ? vf : vg;
    std::optional<std::size_t> idx = var ? a.index_of(*var) : std::nullopt;

    Dense x = to_dense(a, idx);
    Dense y = to_dense(b, idx);
    while (!y.empty()) {
        dense_rem(x, y);
        std::swap(x, y);
    }
    make_monic(x);
    return from_dense(x, a.variables(), idx);
}

std::size_t distinct_root_count(const Poly& f) {
    if (f.is_zero()) throw InvalidParameters("distinct root count of the zero polynomial");
    auto var = univariate_variable(f);
    if (!var) return 0;
    Poly g = gcd_univariate(f, partial_derivative(f, *var));
    return static_cast<std::size_t>(f.degree(*var) - g.degree(*var));
}

}  // namespace lnd

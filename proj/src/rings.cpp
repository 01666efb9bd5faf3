#include "lnd/rings.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <sstream>

#include "lnd/error.hpp"
#include "lnd/parse.hpp"

namespace lnd {

namespace {

const std::vector<std::string> kBaseVariables = {"x", "y", "z", "u", "v"};

// Lazily grown powers base^0, base^1, ...
class PowerCache {
public:
    explicit PowerCache(Poly base) : base_(std::move(base)) { powers_.push_back(Poly::constant(1, base_.variables())); }

    const Poly& operator[](std::size_t k) {
        while (powers_.size() <= k) powers_.push_back(powers_.back() * base_);
        return powers_[k];
    }

private:
    Poly base_;
    std::vector<Poly> powers_;
};

Exponents unit_exponents(std::size_t nvars, std::size_t index, Exponent e) {
    Exponents ex(nvars, 0);
    ex[index] = e;
    return ex;
}

}  // namespace

// ---------------------------------------------------------------------------
// Parameters

Rational SurfaceParams::reciprocal_sum() const {
    return Rational(1, a) + Rational(1, b) + Rational(1, c);
}

bool SurfaceParams::ml_regime() const {
    return reciprocal_sum() < 1;
}

bool SurfaceParams::cor2_regime() const {
    if (a < 4 || b < 4 || c < 4) return false;
    return Rational(1, a - 3) + Rational(1, b - 3) + Rational(1, c - 3) <= Rational(1, 2);
}

std::string SurfaceParams::to_string() const {
    std::ostringstream os;
    os << a << ',' << b << ',' << c << ',' << lnd::to_string(lambda);
    return os.str();
}

std::string ThreefoldParams::to_string() const {
    std::ostringstream os;
    os << n << ',' << m;
    return os.str();
}

SurfaceParams make_surface(int a, int b, int c, const Rational& lambda) {
    if (a < 2 || b < 2 || c < 2)
        throw InvalidParameters("surface exponents must be >= 2, got " + std::to_string(a) + "," +
                                std::to_string(b) + "," + std::to_string(c));
    auto check = [](int p, int q) {
        if (std::gcd(p, q) != 1)
            throw InvalidParameters("surface exponents must be pairwise coprime: gcd(" + std::to_string(p) + "," +
                                    std::to_string(q) + ") = " + std::to_string(std::gcd(p, q)));
    };
    check(a, b);
    check(a, c);
    check(b, c);
    return SurfaceParams{a, b, c, lambda};
}

namespace {

std::vector<std::string_view> split_commas(std::string_view text) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = text.find(',', start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

int parse_int(std::string_view text, std::size_t offset) {
    while (!text.empty() && text.front() == ' ') {
        text.remove_prefix(1);
        ++offset;
    }
    while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
        throw ParseError("expected an integer, got '" + std::string(text) + "'", offset);
    return value;
}

}  // namespace

SurfaceParams parse_surface(std::string_view text) {
    auto parts = split_commas(text);
    if (parts.size() != 4) throw ParseError("surface must be given as a,b,c,lambda", 0);
    std::size_t offset = 0;
    int v[3];
    for (int k = 0; k < 3; ++k) {
        v[k] = parse_int(parts[k], offset);
        offset += parts[k].size() + 1;
    }
    Rational lambda;
    try {
        lambda = parse_rational(parts[3]);
    } catch (const InvalidParameters&) {
        throw ParseError("bad lambda '" + std::string(parts[3]) + "'", offset);
    }
    return make_surface(v[0], v[1], v[2], lambda);
}

ThreefoldParams parse_threefold(const SurfaceParams& surface, std::string_view text, bool permissive) {
    auto parts = split_commas(text);
    if (parts.size() != 2) throw ParseError("threefold must be given as n,m", 0);
    return make_threefold(surface, parse_int(parts[0], 0), parse_int(parts[1], parts[0].size() + 1), permissive);
}

ThreefoldParams make_threefold(const SurfaceParams& surface, int n, int m, bool permissive) {
    int floor = permissive ? 1 : 2;
    if (n < floor || m < floor)
        throw InvalidParameters("threefold exponents must satisfy n,m >= " + std::to_string(floor) + ", got n=" +
                                std::to_string(n) + ", m=" + std::to_string(m));
    return ThreefoldParams{surface, n, m};
}

// ---------------------------------------------------------------------------
// Ring

Ring::Ring(ThreefoldParams params, std::vector<std::string> adjoined) {
    std::vector<std::string> vars = kBaseVariables;
    for (const auto& name : adjoined) {
        if (name.empty() || std::find(vars.begin(), vars.end(), name) != vars.end())
            throw InvalidParameters("invalid or duplicate adjoined variable '" + name + "'");
        vars.push_back(name);
    }
    data_ = std::make_shared<const Data>(Data{std::move(params), std::move(adjoined), std::move(vars)});
}

std::size_t Ring::generator_index(std::string_view name) const {
    const auto& vars = variables();
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UnknownVariable(std::string(name));
    return static_cast<std::size_t>(it - vars.begin());
}

AElement Ring::element(const Poly& p) const {
    return normal_form(p, *this);
}

AElement Ring::parse(std::string_view text) const {
    return normal_form(parse_expression(text, variables()), *this);
}

AElement Ring::zero() const {
    return AElement(*this, Poly(variables()));
}

AElement Ring::constant(const Rational& c) const {
    return AElement(*this, Poly::constant(c, variables()));
}

AElement Ring::generator(std::string_view name) const {
    std::size_t idx = generator_index(name);
    return AElement(*this, Poly::monomial(1, unit_exponents(variables().size(), idx, 1), variables()));
}

Poly Ring::surface_relation() const {
    const auto& s = surface();
    const auto& vars = variables();
    std::size_t nv = vars.size();
    Poly p = Poly::monomial(1, unit_exponents(nv, kX, s.a), vars);
    p += Poly::monomial(1, unit_exponents(nv, kY, s.b), vars);
    p += Poly::monomial(1, unit_exponents(nv, kZ, s.c), vars);
    p += Poly::constant(s.lambda, vars);
    return p;
}

Poly Ring::unit_relation() const {
    const auto& vars = variables();
    std::size_t nv = vars.size();
    Exponents xu(nv, 0);
    xu[kX] = static_cast<Exponent>(params().m);
    xu[kU] = 1;
    Exponents yv(nv, 0);
    yv[kY] = static_cast<Exponent>(params().n);
    yv[kV] = 1;
    Poly p = Poly::monomial(1, xu, vars);
    p -= Poly::monomial(1, yv, vars);
    p -= Poly::constant(1, vars);
    return p;
}

bool Ring::is_normal(const Poly& p) const {
    Poly q = p.with_variables(variables());
    auto c = static_cast<Exponent>(surface().c);
    auto m = static_cast<Exponent>(params().m);
    for (const auto& t : q.terms()) {
        if (t.exponents[kZ] >= c) return false;
        if (t.exponents[kX] >= m && t.exponents[kU] >= 1) return false;
    }
    return true;
}

bool operator==(const Ring& lhs, const Ring& rhs) {
    if (lhs.data_ == rhs.data_) return true;
    return lhs.params() == rhs.params() && lhs.adjoined() == rhs.adjoined();
}

// ---------------------------------------------------------------------------
// Normal form

AElement normal_form(const Poly& p, const Ring& ring) {
    const auto& vars = ring.variables();
    Poly q = p.with_variables(vars);
    const auto& params = ring.params();
    const auto c = static_cast<Exponent>(params.surface.c);
    const auto m = static_cast<Exponent>(params.m);

    // z^c -> -(x^a + y^b + lambda); never creates z.
    Poly z_power = -(ring.surface_relation() - Poly::monomial(1, unit_exponents(vars.size(), Ring::kZ, c), vars));
    PowerCache z_cache(std::move(z_power));
    PolyBuilder stage1(vars);
    Exponents e(vars.size());
    for (const auto& t : q.terms()) {
        Exponent k = t.exponents[Ring::kZ];
        if (k < c) {
            stage1.add(t.exponents, t.coefficient);
            continue;
        }
        e = t.exponents;
        e[Ring::kZ] = k % c;
        stage1.add_scaled(z_cache[k / c], t.coefficient, e);
    }
    Poly reduced_z = stage1.finish();

    // x^m u -> y^n v + 1; creates neither x nor u nor z.
    Poly unit_power = ring.unit_relation();
    unit_power -= Poly::monomial(1, [&] {
        Exponents xu(vars.size(), 0);
        xu[Ring::kX] = m;
        xu[Ring::kU] = 1;
        return xu;
    }(), vars);
    PowerCache u_cache(-unit_power);
    PolyBuilder stage2(vars);
    for (const auto& t : reduced_z.terms()) {
        Exponent i = t.exponents[Ring::kX];
        Exponent l = t.exponents[Ring::kU];
        Exponent steps = std::min(i / m, l);
        if (steps == 0) {
            stage2.add(t.exponents, t.coefficient);
            continue;
        }
        e = t.exponents;
        e[Ring::kX] = i - steps * m;
        e[Ring::kU] = l - steps;
        stage2.add_scaled(u_cache[steps], t.coefficient, e);
    }
    return AElement(ring, stage2.finish());
}


// ---------------------------------------------------------------------------
// Arithmetic

namespace {

void require_same_ring(const AElement& lhs, const AElement& rhs) {
    if (!(lhs.ring() == rhs.ring()))
        throw ParamsMismatch("ring elements belong to different presentations");
}

}  // namespace

AElement AElement::operator-() const {
    return AElement(ring_, -value_);
}

// Sums of normal forms are normal forms: the reducible monomials form a monoid ideal.
AElement operator+(const AElement& lhs, const AElement& rhs) {
    require_same_ring(lhs, rhs);
    return AElement(lhs.ring_, lhs.value_ + rhs.value_);
}

AElement operator-(const AElement& lhs, const AElement& rhs) {
    require_same_ring(lhs, rhs);
    return AElement(lhs.ring_, lhs.value_ - rhs.value_);
}

AElement operator*(const AElement& lhs, const AElement& rhs) {
    require_same_ring(lhs, rhs);
    return normal_form(lhs.value_ * rhs.value_, lhs.ring_);
}

AElement operator*(const Rational& c, const AElement& rhs) {
    return AElement(rhs.ring_, rhs.value_ * c);
}

bool operator==(const AElement& lhs, const AElement& rhs) {
    return lhs.ring_ == rhs.ring_ && lhs.value_ == rhs.value_;
}

AElement ring_op(const AElement& lhs, const AElement& rhs, RingOp op) {
    return op == RingOp::add ? lhs + rhs : lhs * rhs;
}

AElement a_pow(const AElement& e, unsigned long k) {
    AElement result = e.ring().constant(1);
    AElement base = e;
    while (k > 0) {
        if (k & 1UL) result = result * base;
        k >>= 1;
        if (k > 0) base = base * base;
    }
    return result;
}

// ---------------------------------------------------------------------------
// Stepwise reduction

Poly reduce_stepwise(const Poly& p, const Ring& ring, std::mt19937_64& rng) {
    const auto& vars = ring.variables();
    const auto c = static_cast<Exponent>(ring.surface().c);
    const auto m = static_cast<Exponent>(ring.params().m);
    Poly z_tail = -(ring.surface_relation() - Poly::monomial(1, unit_exponents(vars.size(), Ring::kZ, c), vars));
    Exponents xu(vars.size(), 0);
    xu[Ring::kX] = m;
    xu[Ring::kU] = 1;
    Poly u_tail = -(ring.unit_relation() - Poly::monomial(1, xu, vars));

    Poly current = p.with_variables(vars);
    struct Site {
        std::size_t term;
        bool z_rule;
    };
    std::vector<Site> sites;
    const std::size_t step_cap = 10 * max_terms();
    for (std::size_t step = 0;; ++step) {
        if (step > step_cap) throw ResourceLimit("stepwise reduction did not finish");
        sites.clear();
        const auto& terms = current.terms();
        for (std::size_t k = 0; k < terms.size(); ++k) {
            const auto& ex = terms[k].exponents;
            if (ex[Ring::kZ] >= c) sites.push_back({k, true});
            if (ex[Ring::kX] >= m && ex[Ring::kU] >= 1) sites.push_back({k, false});
        }
        if (sites.empty()) return current;
        std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
        Site site = sites[pick(rng)];
        Term t = terms[site.term];
        Exponents rest = t.exponents;
        if (site.z_rule) {
            rest[Ring::kZ] -= c;
        } else {
            rest[Ring::kX] -= m;
            rest[Ring::kU] -= 1;
        }
        Poly replacement = (site.z_rule ? z_tail : u_tail).shifted(rest) * t.coefficient;
        current -= Poly::monomial(t.coefficient, t.exponents, vars);
        current += replacement;
    }
}

// ---------------------------------------------------------------------------
// u-decomposition

std::vector<Poly> u_decomposition(const AElement& h) {
    const Ring& ring = h.ring();
    if (!ring.adjoined().empty())
        throw InvalidParameters("u_decomposition requires a ring without adjoined variables");
    const std::vector<std::string> coeff_vars = {"x", "y", "z", "v"};
    long degree = std::max<long>(0, h.value().degree("u"));
    std::vector<PolyBuilder> builders;
    for (long k = 0; k <= degree; ++k) builders.emplace_back(coeff_vars);
    for (const auto& t : h.value().terms()) {
        const auto& ex = t.exponents;
        builders[ex[Ring::kU]].add(Exponents{ex[Ring::kX], ex[Ring::kY], ex[Ring::kZ], ex[Ring::kV]}, t.coefficient);
    }
    std::vector<Poly> out;
    for (auto& b : builders) out.push_back(b.finish());
    return out;
}

AElement u_reassemble(const std::vector<Poly>& coefficients, const Ring& ring) {
    Poly acc(ring.variables());
    Poly u_power = Poly::constant(1, ring.variables());
    Poly u = ring.generator("u").value();
    for (const auto& p : coefficients) {
        acc += p.with_variables(ring.variables()) * u_power;
        u_power = u_power * u;
    }
    return normal_form(acc, ring);
}

}  // namespace lnd

#include "lnd/derivations.hpp"

#include <algorithm>
#include <unordered_map>

#include "lnd/error.hpp"

namespace lnd {

namespace {

using ImageList = std::vector<std::pair<std::string, AElement>>;

// Leibniz extension of generator images to an arbitrary polynomial.
AElement leibniz(const Ring& ring, const ImageList& images, const Poly& p) {
    Poly q = p.with_variables(ring.variables());
    Poly acc(ring.variables());
    for (const auto& [name, img] : images) {
        if (img.is_zero() || q.degree(name) <= 0) continue;
        acc += partial_derivative(q, name) * img.value();
    }
    return normal_form(acc, ring);
}

ImageList ordered_images(const Ring& ring, const std::map<std::string, AElement>& images) {
    for (const auto& [name, img] : images) {
        ring.generator_index(name);
        if (!(img.ring() == ring)) throw ParamsMismatch("image of " + name + " is not in the derivation's ring");
    }
    ImageList out;
    for (const auto& name : ring.variables()) {
        auto it = images.find(name);
        if (it == images.end()) throw InvalidParameters("derivation has no image for generator " + name);
        out.emplace_back(name, it->second);
    }
    return out;
}

void enumerate_monomials(const Ring& ring, std::size_t var, unsigned remaining, Exponents& current,
                         std::vector<Exponents>& out, std::size_t cap) {
    if (var == current.size()) {
        if (ring.is_normal(Poly::monomial(1, current, ring.variables()))) {
            if (out.size() >= cap)
                throw ResourceLimit("more than " + std::to_string(cap) + " normal-form monomials");
            out.push_back(current);
        }
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        current[var] = e;
        enumerate_monomials(ring, var + 1, remaining - e, current, out, cap);
    }
    current[var] = 0;
}

Integer binomial(unsigned long n, unsigned long k) {
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------

const AElement& Derivation::image(std::string_view generator) const {
    for (const auto& [name, img] : images_)
        if (name == generator) return img;
    throw UnknownVariable(std::string(generator));
}

AElement Derivation::apply(const AElement& h) const {
    if (!(h.ring() == ring_)) throw ParamsMismatch("element is not in the derivation's ring");
    return leibniz(ring_, images_, h.value());
}

bool Derivation::is_zero() const {
    return std::all_of(images_.begin(), images_.end(), [](const auto& p) { return p.second.is_zero(); });
}

bool operator==(const Derivation& lhs, const Derivation& rhs) {
    return lhs.ring_ == rhs.ring_ && lhs.images_ == rhs.images_;
}

std::vector<std::pair<std::string, AElement>> relation_images(const Ring& ring,
                                                              const std::map<std::string, AElement>& images) {
    ImageList ordered = ordered_images(ring, images);
    return {
        {"x^a + y^b + z^c + lambda", leibniz(ring, ordered, ring.surface_relation())},
        {"x^m*u - y^n*v - 1", leibniz(ring, ordered, ring.unit_relation())},
    };
}

Derivation make_derivation(const Ring& ring, const std::map<std::string, AElement>& images) {
    for (const auto& [relation, image] : relation_images(ring, images))
        if (!image.is_zero()) throw IllDefinedDerivation(relation, image.to_string());
    return Derivation(ring, ordered_images(ring, images));
}

Derivation canonical_E(const Ring& ring) {
    std::map<std::string, AElement> images;
    for (const auto& name : ring.variables()) images.emplace(name, ring.zero());
    const auto& p = ring.params();
    images.insert_or_assign("u", a_pow(ring.generator("y"), static_cast<unsigned long>(p.n)));
    images.insert_or_assign("v", a_pow(ring.generator("x"), static_cast<unsigned long>(p.m)));
    return make_derivation(ring, images);
}

Derivation zero_derivation(const Ring& ring) {
    std::map<std::string, AElement> images;
    for (const auto& name : ring.variables()) images.emplace(name, ring.zero());
    return make_derivation(ring, images);
}

Derivation scaled(const Derivation& d, const AElement& f) {
    std::map<std::string, AElement> images;
    for (const auto& [name, img] : d.images()) images.emplace(name, f * img);
    return make_derivation(d.ring(), images);
}

AElement apply(const Derivation& d, const AElement& h) {
    return d.apply(h);
}

NilpotencyVerdict is_locally_nilpotent(const Derivation& d, std::size_t iteration_bound) {
    if (iteration_bound == 0) throw InvalidParameters("iteration bound must be >= 1");
    NilpotencyVerdict verdict;
    verdict.bound = iteration_bound;
    for (const auto& name : d.ring().variables()) {
        AElement current = d.ring().generator(name);
        std::size_t k = 0;
        try {
            while (!current.is_zero() && k < iteration_bound) {
                current = d.apply(current);
                ++k;
            }
        } catch (const ResourceLimit&) {
            // term cap reached while iterating: treated as not within bound
        }
        if (!current.is_zero()) {
            verdict.nilpotent = false;
            verdict.indices.clear();
            verdict.stalled_generator = name;
            return verdict;
        }
        verdict.indices.emplace_back(name, k);
    }
    verdict.nilpotent = true;
    return verdict;
}

bool kernel_membership(const Derivation& d, const AElement& h) {
    return d.apply(h).is_zero();
}

std::vector<Exponents> normal_form_monomials(const Ring& ring, unsigned total_degree_bound, std::size_t max_monomials) {
    std::vector<Exponents> out;
    Exponents current(ring.variables().size(), 0);
    enumerate_monomials(ring, 0, total_degree_bound, current, out, max_monomials);
    std::sort(out.begin(), out.end(), [](const Exponents& l, const Exponents& r) { return grlex_greater(r, l); });
    return out;
}

std::vector<AElement> kernel_basis_bounded(const Derivation& d, unsigned total_degree_bound,
                                           std::size_t max_monomials) {
    if (total_degree_bound < 1) throw InvalidParameters("degree bound must be >= 1");
    const Ring& ring = d.ring();
    const auto& vars = ring.variables();
    std::vector<Exponents> columns = normal_form_monomials(ring, total_degree_bound, max_monomials);

    // one row per monomial occurring in some image D(column)
    std::unordered_map<Exponents, std::size_t, ExponentsHash> row_of;
    std::vector<std::vector<std::pair<std::size_t, Rational>>> column_entries(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
        AElement img = d.apply(ring.element(Poly::monomial(1, columns[j], vars)));
        for (const auto& t : img.value().terms()) {
            auto [it, inserted] = row_of.try_emplace(t.exponents, row_of.size());
            column_entries[j].emplace_back(it->second, t.coefficient);
        }
    }
    const std::size_t nrows = row_of.size();
    const std::size_t ncols = columns.size();
    std::vector<std::vector<Rational>> m(nrows, std::vector<Rational>(ncols));
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [r, c] : column_entries[j]) m[r][j] = c;

    // reduced row echelon form
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
    for (std::size_t col = 0; col < ncols && rank < nrows; ++col) {
        std::size_t pivot = rank;
        while (pivot < nrows && m[pivot][col] == 0) ++pivot;
        if (pivot == nrows) continue;
        std::swap(m[pivot], m[rank]);
        Rational inv = 1 / m[rank][col];
        for (std::size_t k = col; k < ncols; ++k) m[rank][k] *= inv;
        for (std::size_t r = 0; r < nrows; ++r) {
            if (r == rank || m[r][col] == 0) continue;
            Rational factor = m[r][col];
            for (std::size_t k = col; k < ncols; ++k)
                if (m[rank][k] != 0) m[r][k] -= factor * m[rank][k];
        }
        pivot_cols.push_back(col);
        ++rank;
    }

    std::vector<bool> is_pivot(ncols, false);
    for (auto c : pivot_cols) is_pivot[c] = true;
    std::vector<AElement> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Term> terms{Term{columns[free], 1}};
        for (std::size_t r = 0; r < pivot_cols.size(); ++r)
            if (m[r][free] != 0) terms.push_back(Term{columns[pivot_cols[r]], -m[r][free]});
        basis.push_back(ring.element(Poly::from_terms(vars, std::move(terms))));
    }
    return basis;
}

RingMap exp_map(const Derivation& d, const Rational& t, std::size_t iteration_bound) {
    if (!is_locally_nilpotent(d, iteration_bound).nilpotent)
        throw HypothesisViolation("derivation is not certified locally nilpotent within " +
                                  std::to_string(iteration_bound) + " iterations");
    const Ring& ring = d.ring();
    std::vector<std::pair<std::string, AElement>> images;
    for (const auto& name : ring.variables()) {
        AElement term = ring.generator(name);
        AElement sum = term;
        for (long k = 1; !term.is_zero(); ++k) {
            term = (t / k) * d.apply(term);
            sum = sum + term;
        }
        images.emplace_back(name, sum);
    }
    return RingMap(ring, ring, std::move(images));
}

std::pair<AElement, AElement> bezout_split(const Ring& ring, int m_prime, int n_prime) {
    if (m_prime < 1 || n_prime < 1) throw InvalidParameters("bezout_split needs m', n' >= 1");
    const int m = ring.params().m;
    const int n = ring.params().n;
    const int x_steps = (m_prime + m - 1) / m;
    const int big_n = x_steps - 1 + (n_prime + n - 1) / n;
    const auto& vars = ring.variables();

    PolyBuilder a(vars);
    PolyBuilder b(vars);
    for (int k = 0; k <= big_n; ++k) {
        // C(N,k) (x^m u)^k (-y^n v)^(N-k)
        Rational coeff(binomial(static_cast<unsigned long>(big_n), static_cast<unsigned long>(k)));
        if ((big_n - k) % 2 == 1) coeff = -coeff;
        Exponents e(vars.size(), 0);
        e[Ring::kX] = static_cast<Exponent>(k * m);
        e[Ring::kU] = static_cast<Exponent>(k);
        e[Ring::kY] = static_cast<Exponent>(n * (big_n - k));
        e[Ring::kV] = static_cast<Exponent>(big_n - k);
        if (k >= x_steps) {
            e[Ring::kX] -= static_cast<Exponent>(m_prime);
            a.add(e, coeff);
        } else {
            e[Ring::kY] -= static_cast<Exponent>(n_prime);
            b.add(e, coeff);
        }
    }
    AElement big_a = ring.element(a.finish());
    AElement big_b = ring.element(b.finish());

    AElement check = big_a * a_pow(ring.generator("x"), static_cast<unsigned long>(m_prime)) +
                     big_b * a_pow(ring.generator("y"), static_cast<unsigned long>(n_prime));
    if (!(check == ring.constant(1)))
        throw CertificateFailure("Bezout split does not sum to 1: " + check.to_string());
    return {big_a, big_b};
}

Derivation conjugate(const Derivation& d, const RingMap& inner, const RingMap& outer) {
    const Ring& ring = d.ring();
    if (!(inner.source() == ring) || !(inner.target() == ring) || !(outer.source() == ring) ||
        !(outer.target() == ring))
        throw ParamsMismatch("conjugation maps must be endomorphisms of the derivation's ring");
    std::map<std::string, AElement> images;
    for (const auto& name : ring.variables())
        images.emplace(name, outer.apply(d.apply(inner.image(name))));
    return make_derivation(ring, images);
}

}  // namespace lnd

#include "lnd/mason.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <unordered_map>

#include "lnd/error.hpp"

namespace lnd {

namespace {

using Dense = std::vector<Rational>;

struct DenseHash {
    std::size_t operator()(const Dense& d) const noexcept {
        std::size_t h = d.size();
        for (const auto& c : d) h = h * 1000003ULL ^ hash_value(c);
        return h;
    }
};

void trim(Dense& d) {
    while (!d.empty() && d.back() == 0) d.pop_back();
}

Dense dense_mul(const Dense& p, const Dense& q) {
    if (p.empty() || q.empty()) return {};
    Dense out(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    trim(out);
    return out;
}

Dense dense_pow(const Dense& p, int e) {
    Dense out{Rational(1)};
    for (int k = 0; k < e; ++k) out = dense_mul(out, p);
    return out;
}

Poly to_poly(const Dense& d, const std::string& var) {
    std::vector<Term> terms;
    for (std::size_t k = 0; k < d.size(); ++k)
        if (d[k] != 0) terms.push_back(Term{Exponents{static_cast<Exponent>(k)}, d[k]});
    return Poly::from_terms({var}, std::move(terms));
}

std::string common_variable(const Poly& f, const Poly& g) {
    auto vf = univariate_variable(f);
    auto vg = univariate_variable(g);
    if (vf && vg && *vf != *vg) throw InvalidParameters("variable mismatch: " + *vf + " vs " + *vg);
    if (vf) return *vf;
    if (vg) return *vg;
    return f.variables().empty() ? (g.variables().empty() ? "T" : g.variables().front()) : f.variables().front();
}

bool gcd_is_constant(const Poly& f, const Poly& g, const Poly& h) {
    return gcd_univariate(gcd_univariate(f, g), h).is_constant();
}

// Nonconstant polynomials of degree <= bound with coefficients from the set,
// by ascending degree, then lexicographically on (c_0, ..., c_d).
std::vector<Dense> enumerate_candidates(const std::vector<Rational>& coeffs, int bound) {
    std::vector<Dense> out;
    for (int d = 1; d <= bound; ++d) {
        std::vector<std::size_t> idx(static_cast<std::size_t>(d) + 1, 0);
        for (;;) {
            if (coeffs[idx[static_cast<std::size_t>(d)]] != 0) {
                Dense p(idx.size());
                for (std::size_t k = 0; k < idx.size(); ++k) p[k] = coeffs[idx[k]];
                out.push_back(std::move(p));
            }
            // lexicographic increment with c_0 most significant
            std::size_t pos = idx.size();
            while (pos > 0) {
                --pos;
                if (++idx[pos] < coeffs.size()) break;
                idx[pos] = 0;
                if (pos == 0) {
                    pos = idx.size() + 1;
                    break;
                }
            }
            if (pos > idx.size()) break;
        }
    }
    return out;
}

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

}  // namespace

// ---------------------------------------------------------------------------

MasonReport mason_check(const Poly& f, const Poly& g) {
    std::string var = common_variable(f, g);
    MasonReport report;
    report.h = -(f + g);
    const Poly& h = report.h;
    report.applicable = !f.is_zero() && !g.is_zero() && !h.is_zero() && !f.is_constant() && !g.is_constant() &&
                        !h.is_constant() && gcd_is_constant(f, g, h);
    report.max_degree = std::max({f.total_degree(), g.total_degree(), h.total_degree()});
    Poly product = f * g * h;
    report.root_count = product.is_zero() ? 0 : distinct_root_count(product);
    report.holds = report.applicable && report.max_degree < static_cast<long>(report.root_count);
    return report;
}

SearchRegime search_regime(const SearchConfig& cfg) {
    if (cfg.a >= 4 && cfg.b >= 4 && cfg.c >= 4 &&
        Rational(1, cfg.a - 3) + Rational(1, cfg.b - 3) + Rational(1, cfg.c - 3) <= Rational(1, 2))
        return SearchRegime::cor2;
    if (cfg.lambda == 0) {
        Rational s = Rational(1, cfg.a) + Rational(1, cfg.b) + Rational(1, cfg.c);
        if (s < 1) return SearchRegime::cor1_strict;
        if (s == 1) return SearchRegime::cor1_boundary;
    }
    return SearchRegime::none;
}

bool hypotheses_hold(const SearchConfig& cfg) {
    return search_regime(cfg) != SearchRegime::none;
}

const char* to_string(SearchRegime regime) {
    switch (regime) {
        case SearchRegime::cor1_strict: return "cor1-strict";
        case SearchRegime::cor1_boundary: return "cor1-boundary";
        case SearchRegime::cor2: return "cor2";
        case SearchRegime::none: break;
    }
    return "none";
}

SearchResult fermat_search(const SearchConfig& cfg) {
    if (cfg.a < 1 || cfg.b < 1 || cfg.c < 1) throw InvalidParameters("exponents must be positive");
    if (cfg.degree_bound < 1) throw InvalidParameters("degree bound must be >= 1");
    if (cfg.workers < 1) throw InvalidParameters("need at least one worker");
    std::vector<Rational> coeffs = cfg.coefficient_set;
    std::sort(coeffs.begin(), coeffs.end());
    coeffs.erase(std::unique(coeffs.begin(), coeffs.end()), coeffs.end());
    if (coeffs.empty() || std::all_of(coeffs.begin(), coeffs.end(), [](const Rational& q) { return q == 0; }))
        throw InvalidParameters("coefficient set must contain a nonzero element");

    const auto start = std::chrono::steady_clock::now();
    std::vector<Dense> cands = enumerate_candidates(coeffs, cfg.degree_bound);
    const std::uint64_t count = cands.size();

    SearchResult result;
    result.regime = search_regime(cfg);
    result.polys_per_slot = cands.size();

    const std::uint64_t pairs = cfg.mode == SearchMode::exhaustive ? count * count : cfg.samples;
    if (pairs > cfg.max_candidates)
        throw ResourceLimit("search needs " + std::to_string(pairs) + " candidate pairs, cap is " +
                            std::to_string(cfg.max_candidates));

    std::vector<Dense> f_pow, g_pow;
    std::unordered_map<Dense, std::vector<std::size_t>, DenseHash> h_by_power;
    for (std::size_t k = 0; k < cands.size(); ++k) {
        f_pow.push_back(dense_pow(cands[k], cfg.a));
        g_pow.push_back(dense_pow(cands[k], cfg.b));
        h_by_power[dense_pow(cands[k], cfg.c)].push_back(k);
    }

    std::atomic<bool> timed_out{false};
    std::mutex merge_lock;
    std::exception_ptr failure;

    auto pair_at = [&](std::uint64_t s) -> std::pair<std::size_t, std::size_t> {
        if (cfg.mode == SearchMode::exhaustive) return {s / count, s % count};
        std::uint64_t r = splitmix64(cfg.seed ^ splitmix64(s));
        return {r % count, splitmix64(r) % count};
    };

    auto worker = [&](unsigned id) {
        try {
            std::vector<FermatSolution> local;
            Dense target;
            for (std::uint64_t s = id; s < pairs; s += cfg.workers) {
                if ((s / cfg.workers) % 4096 == 0 && cfg.time_limit) {
                    if (timed_out.load() || std::chrono::steady_clock::now() - start > *cfg.time_limit) {
                        timed_out = true;
                        return;
                    }
                }
                auto [i, j] = pair_at(s);
                const Dense& fa = f_pow[i];
                const Dense& gb = g_pow[j];
                target.assign(std::max(fa.size(), gb.size()), Rational(0));
                for (std::size_t k = 0; k < fa.size(); ++k) target[k] -= fa[k];
                for (std::size_t k = 0; k < gb.size(); ++k) target[k] -= gb[k];
                if (target.empty()) target.emplace_back(0);
                target[0] -= cfg.lambda;
                trim(target);
                auto hit = h_by_power.find(target);
                if (hit == h_by_power.end()) continue;
                for (std::size_t k : hit->second) {
                    Poly f = to_poly(cands[i], cfg.variable);
                    Poly g = to_poly(cands[j], cfg.variable);
                    Poly h = to_poly(cands[k], cfg.variable);
                    if (!gcd_is_constant(f, g, h)) continue;
                    Poly check = pow(f, static_cast<unsigned long>(cfg.a)) + pow(g, static_cast<unsigned long>(cfg.b)) +
                                 pow(h, static_cast<unsigned long>(cfg.c)) + Poly::constant(cfg.lambda, {cfg.variable});
                    std::uint64_t index = cfg.mode == SearchMode::exhaustive ? s * count + k : s;
                    local.push_back(FermatSolution{std::move(f), std::move(g), std::move(h), index, check.is_zero()});
                }
            }
            std::lock_guard<std::mutex> guard(merge_lock);
            for (auto& sol : local) result.solutions.push_back(std::move(sol));
        } catch (...) {
            std::lock_guard<std::mutex> guard(merge_lock);
            if (!failure) failure = std::current_exception();
        }
    };

    if (cfg.workers == 1) {
        worker(0);
    } else {
        std::vector<std::thread> threads;
        for (unsigned id = 0; id < cfg.workers; ++id) threads.emplace_back(worker, id);
        for (auto& t : threads) t.join();
    }
    if (failure) std::rethrow_exception(failure);
    if (timed_out) throw ResourceLimit("fermat search exceeded its time limit");

    result.candidates_examined = pairs;
    std::sort(result.solutions.begin(), result.solutions.end(),
              [](const FermatSolution& l, const FermatSolution& r) { return l.index < r.index; });
    return result;
}

Cor2Report cor2_degree_bound(const Poly& f, const Poly& g, const Poly& h, int a, int b, int c) {
    if (a < 1 || b < 1 || c < 1) throw InvalidParameters("exponents must be positive");
    std::string var = common_variable(f, g);
    if (auto vh = univariate_variable(h); vh && *vh != var) throw InvalidParameters("variable mismatch: " + *vh);
    if (f.is_constant() || g.is_constant() || h.is_constant())
        throw HypothesisViolation("cor2_degree_bound needs nonconstant f, g, h");
    if (!gcd_is_constant(f, g, h)) throw HypothesisViolation("f, g, h have a common factor");

    auto part = [&](const Poly& p, int e) {
        return pow(p, static_cast<unsigned long>(e - 1)) * partial_derivative(p.with_variables({var}), var);
    };
    Cor2Report report;
    report.w = gcd_univariate(gcd_univariate(part(f, a), part(g, b)), part(h, c));
    report.deg_w = report.w.degree(var);
    report.bound = f.degree(var) + g.degree(var) + h.degree(var) - 3;
    report.holds = report.deg_w <= report.bound;
    return report;
}

}  // namespace lnd

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lnd/artifact.hpp"
#include "lnd/automorphisms.hpp"
#include "lnd/cancellation.hpp"
#include "lnd/cli.hpp"
#include "lnd/error.hpp"
#include "lnd/mason.hpp"
#include "lnd/parse.hpp"

namespace py = pybind11;
using namespace lnd;

// Rationals cross the boundary as strings ("3/2"), polynomials as expressions.

namespace {

Ring make_ring(const std::string& surface, const std::string& threefold, const std::vector<std::string>& adjoin = {}) {
    return Ring(parse_threefold(parse_surface(surface), threefold), adjoin);
}

AutElement make_phi(const Ring& ring, const std::string& mu, const std::string& f) {
    return make_aut(parse_rational(mu), ring.parse(f));
}

py::tuple aut_tuple(const AutElement& phi) {
    return py::make_tuple(to_string(phi.mu()), phi.shear_part().to_string());
}

py::dict images_dict(const RingMap& map) {
    py::dict d;
    for (const auto& [name, img] : map.images()) d[py::str(name)] = img.to_string();
    return d;
}

py::dict report_dict(const StableIsoReport& r) {
    py::dict d;
    d["relations_ok"] = r.relations_ok;
    d["round_trip_ok"] = r.round_trip_ok;
    d["certificates_ok"] = r.certificates_ok;
    d["forward_max_degree"] = r.forward_max_degree;
    d["backward_max_degree"] = r.backward_max_degree;
    d["failures"] = r.failures;
    d["ok"] = r.ok();
    return d;
}

}  // namespace

PYBIND11_MODULE(lnd_algebra, m) {
    m.doc() = "Exact algebra on A_{n,m} = R[u,v]/(x^m u - y^n v - 1), R = Q[x,y,z]/(x^a + y^b + z^c + lambda)";

    auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
    py::register_exception<ParseError>(m, "ParseError", base.ptr());
    py::register_exception<InvalidParameters>(m, "InvalidParameters", base.ptr());
    py::register_exception<UnknownVariable>(m, "UnknownVariable", base.ptr());
    py::register_exception<ResourceLimit>(m, "ResourceLimit", base.ptr());
    py::register_exception<HypothesisViolation>(m, "HypothesisViolation", base.ptr());
    py::register_exception<IllDefinedDerivation>(m, "IllDefinedDerivation", base.ptr());
    py::register_exception<CertificateFailure>(m, "CertificateFailure", base.ptr());

    m.def("parse", [](const std::string& text) { return parse_expression(text).to_string(); }, py::arg("text"),
          "Canonical printing of an expression over the variables it mentions.");

    m.def("normal_form",
          [](const std::string& expr, const std::string& surface, const std::string& threefold,
             const std::vector<std::string>& adjoin) { return make_ring(surface, threefold, adjoin).parse(expr).to_string(); },
          py::arg("expr"), py::arg("surface") = "2,3,7,0", py::arg("threefold") = "2,2",
          py::arg("adjoin") = std::vector<std::string>{});

    m.def("apply_derivation",
          [](const std::string& derivation, const std::string& expr, const std::string& surface,
             const std::string& threefold) {
              Ring ring = make_ring(surface, threefold);
              return cli::parse_derivation(ring, derivation).apply(ring.parse(expr)).to_string();
          },
          py::arg("derivation"), py::arg("expr"), py::arg("surface") = "2,3,7,0", py::arg("threefold") = "2,2");

    m.def("lnd_check",
          [](const std::string& derivation, std::size_t bound, const std::string& surface,
             const std::string& threefold) {
              Ring ring = make_ring(surface, threefold);
              NilpotencyVerdict v = is_locally_nilpotent(cli::parse_derivation(ring, derivation), bound);
              py::dict d;
              d["nilpotent"] = v.nilpotent;
              py::dict idx;
              for (const auto& [name, k] : v.indices) idx[py::str(name)] = k;
              d["indices"] = idx;
              d["stalled_generator"] = v.stalled_generator;
              return d;
          },
          py::arg("derivation") = "E", py::arg("bound") = 50, py::arg("surface") = "2,3,7,0",
          py::arg("threefold") = "2,2");

    m.def("kernel_basis",
          [](const std::string& derivation, unsigned bound, const std::string& surface, const std::string& threefold) {
              Ring ring = make_ring(surface, threefold);
              std::vector<std::string> out;
              for (const auto& b : kernel_basis_bounded(cli::parse_derivation(ring, derivation), bound))
                  out.push_back(b.to_string());
              return out;
          },
          py::arg("derivation"), py::arg("bound"), py::arg("surface") = "2,3,7,0", py::arg("threefold") = "2,2");

    m.def("exp_map",
          [](const std::string& derivation, const std::string& t, const std::string& surface,
             const std::string& threefold) {
              Ring ring = make_ring(surface, threefold);
              return images_dict(exp_map(cli::parse_derivation(ring, derivation), parse_rational(t)));
          },
          py::arg("derivation"), py::arg("t"), py::arg("surface") = "2,3,7,0", py::arg("threefold") = "2,2");

    m.def("aut_compose",
          [](const std::pair<std::string, std::string>& phi, const std::pair<std::string, std::string>& psi,
             const std::string& surface, const std::string& threefold) {
              Ring ring = make_ring(surface, threefold);
              return aut_tuple(compose(make_phi(ring, phi.first, phi.second), make_phi(ring, psi.first, psi.second)));
          },
          py::arg("phi"), py::arg("psi"), py::arg("surface") = "2,3,7,0", py::arg("threefold") = "2,2",
          "phi o psi, each given as (mu, f).");

    m.def("aut_invert",
          [](const std::pair<std::string, std::string>& phi, const std::string& surface, const std::string& threefold) {
              Ring ring = make_ring(surface, threefold);
              return aut_tuple(invert(make_phi(ring, phi.first, phi.second)));
          },
          py::arg("phi"), py::arg("surface") = "2,3,7,0", py::arg("threefold") = "2,2");

    m.def("aut_apply",
          [](const std::pair<std::string, std::string>& phi, const std::string& expr, const std::string& surface,
             const std::string& threefold) {
              Ring ring = make_ring(surface, threefold);
              return apply_aut(make_phi(ring, phi.first, phi.second), ring.parse(expr)).to_string();
          },
          py::arg("phi"), py::arg("expr"), py::arg("surface") = "2,3,7,0", py::arg("threefold") = "2,2");

    m.def("conjugate_e",
          [](const std::pair<std::string, std::string>& phi, const std::string& surface, const std::string& threefold) {
              Ring ring = make_ring(surface, threefold);
              return to_string(conjugate_E(make_phi(ring, phi.first, phi.second)));
          },
          py::arg("phi"), py::arg("surface") = "2,3,7,0", py::arg("threefold") = "2,2");

    m.def("mason_check",
          [](const std::string& f, const std::string& g) {
              MasonReport r = mason_check(parse_expression(f), parse_expression(g));
              py::dict d;
              d["h"] = r.h.to_string();
              d["max_degree"] = r.max_degree;
              d["root_count"] = r.root_count;
              d["applicable"] = r.applicable;
              d["holds"] = r.holds;
              return d;
          },
          py::arg("f"), py::arg("g"));

    m.def("cor2_degree_bound",
          [](const std::string& f, const std::string& g, const std::string& h, int a, int b, int c) {
              Cor2Report r = cor2_degree_bound(parse_expression(f), parse_expression(g), parse_expression(h), a, b, c);
              py::dict d;
              d["w"] = r.w.to_string();
              d["deg_w"] = r.deg_w;
              d["bound"] = r.bound;
              d["holds"] = r.holds;
              return d;
          },
          py::arg("f"), py::arg("g"), py::arg("h"), py::arg("a"), py::arg("b"), py::arg("c"));

    m.def("fermat_search",
          [](int a, int b, int c, const std::string& lambda, int degree_bound, const std::vector<std::string>& coefficients,
             bool randomized, std::uint64_t samples, std::uint64_t seed, std::uint64_t max_candidates, unsigned workers) {
              SearchConfig cfg;
              cfg.a = a;
              cfg.b = b;
              cfg.c = c;
              cfg.lambda = parse_rational(lambda);
              cfg.degree_bound = degree_bound;
              for (const auto& q : coefficients) cfg.coefficient_set.push_back(parse_rational(q));
              cfg.mode = randomized ? SearchMode::randomized : SearchMode::exhaustive;
              cfg.samples = samples;
              cfg.seed = seed;
              cfg.max_candidates = max_candidates;
              cfg.workers = workers;
              SearchResult res;
              {
                  py::gil_scoped_release release;
                  res = fermat_search(cfg);
              }
              py::list sols;
              for (const auto& s : res.solutions) {
                  py::dict d;
                  d["f"] = s.f.to_string();
                  d["g"] = s.g.to_string();
                  d["h"] = s.h.to_string();
                  d["index"] = s.index;
                  d["verified"] = s.verified;
                  sols.append(d);
              }
              py::dict d;
              d["solutions"] = sols;
              d["candidates_examined"] = res.candidates_examined;
              d["regime"] = to_string(res.regime);
              return d;
          },
          py::arg("a"), py::arg("b"), py::arg("c"), py::arg("lam"), py::arg("degree_bound"), py::arg("coefficients"),
          py::arg("randomized") = false, py::arg("samples") = 100000, py::arg("seed") = 0x5eed,
          py::arg("max_candidates") = 10'000'000, py::arg("workers") = 1);

    m.def("build_stable_iso",
          [](const std::string& surface, const std::string& left, const std::string& right) {
              SurfaceParams s = parse_surface(surface);
              return stable_iso_to_json(build_stable_iso(s, parse_threefold(s, left), parse_threefold(s, right)));
          },
          py::arg("surface"), py::arg("left"), py::arg("right"), "Returns the JSON artifact.");

    m.def("verify_stable_iso",
          [](const std::string& artifact) { return report_dict(verify_stable_iso(stable_iso_from_json(artifact))); },
          py::arg("artifact"));

    m.def("run_cli",
          [](const std::vector<std::string>& args, const std::string& stdin_text) {
              std::istringstream in(stdin_text);
              std::ostringstream out, err;
              int code = cli::run(args, in, out, err);
              return py::make_tuple(code, out.str(), err.str());
          },
          py::arg("args"), py::arg("stdin") = "", "Returns (exit_status, stdout, stderr).");
}

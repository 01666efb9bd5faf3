#include "lnd/cli.hpp"

#include <chrono>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lnd/artifact.hpp"
#include "lnd/automorphisms.hpp"
#include "lnd/cancellation.hpp"
#include "lnd/error.hpp"
#include "lnd/mason.hpp"
#include "lnd/parse.hpp"

namespace lnd::cli {

namespace {

using json = nlohmann::ordered_json;

std::string trim(std::string_view s) {
    std::size_t b = s.find_first_not_of(" \t\n");
    if (b == std::string_view::npos) return {};
    std::size_t e = s.find_last_not_of(" \t\n");
    return std::string(s.substr(b, e - b + 1));
}

std::vector<std::string> split(std::string_view s, char sep) {
    std::vector<std::string> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t pos = s.find(sep, start);
        out.push_back(trim(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start)));
        if (pos == std::string_view::npos) return out;
        start = pos + 1;
    }
}

class Emitter {
public:
    Emitter(OutputMode mode, std::ostream& out) : mode_(mode), out_(out) {}

    bool structured() const { return mode_ == OutputMode::structured; }

    /// Writes the record as one JSON line, or as `text` (or a generic
    /// key: value rendering when empty) in text mode.
    void emit(const json& record, const std::string& text = {}) {
        if (structured()) {
            out_ << record.dump() << '\n';
            return;
        }
        if (!text.empty()) {
            out_ << text;
            if (text.back() != '\n') out_ << '\n';
            return;
        }
        for (const auto& [key, value] : record.items()) {
            if (key == "command" || key == "verb" || key == "record") continue;
            render(key, value, 0);
        }
    }

private:
    void render(const std::string& key, const json& value, int depth) {
        std::string pad(static_cast<std::size_t>(depth) * 2, ' ');
        if (value.is_object()) {
            out_ << pad << key << ":\n";
            for (const auto& [k, v] : value.items()) render(k, v, depth + 1);
        } else if (value.is_array()) {
            out_ << pad << key << ":";
            if (value.empty()) out_ << " (none)";
            out_ << '\n';
            for (const auto& v : value) out_ << pad << "  - " << scalar(v) << '\n';
        } else {
            out_ << pad << key << ": " << scalar(value) << '\n';
        }
    }

    static std::string scalar(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

    OutputMode mode_;
    std::ostream& out_;
};

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) || dynamic_cast<const InvalidParameters*>(&e) ||
        dynamic_cast<const UnknownVariable*>(&e) || dynamic_cast<const ParamsMismatch*>(&e) ||
        dynamic_cast<const DivisionByZero*>(&e))
        return kUsage;
    return kFailed;
}

std::uint64_t parse_seed(const std::string& text) {
    try {
        std::size_t used = 0;
        unsigned long long v = std::stoull(text, &used, 0);
        if (used != text.size()) throw InvalidParameters("bad seed '" + text + "'");
        return v;
    } catch (const std::logic_error&) {
        throw InvalidParameters("bad seed '" + text + "'");
    }
}

std::vector<Rational> parse_coefficient_set(const std::string& text) {
    std::vector<Rational> out;
    if (auto dots = text.find(".."); dots != std::string::npos) {
        Rational lo = parse_rational(trim(text.substr(0, dots)));
        Rational hi = parse_rational(trim(text.substr(dots + 2)));
        if (lo.get_den() != 1 || hi.get_den() != 1 || lo > hi)
            throw InvalidParameters("coefficient range must be lo..hi with integers lo <= hi");
        for (Rational q = lo; q <= hi; q += 1) out.push_back(q);
        return out;
    }
    for (const auto& part : split(text, ',')) out.push_back(parse_rational(part));
    return out;
}

struct FermatParams {
    int a, b, c;
    Rational lambda;
};

FermatParams parse_fermat_params(const std::string& text) {
    auto parts = split(text, ',');
    if (parts.size() != 4) throw InvalidParameters("--params must be a,b,c,lambda");
    auto to_int = [](const std::string& s) {
        Rational q = parse_rational(s);
        if (q.get_den() != 1 || q < 1 || q > 1000) throw InvalidParameters("exponent '" + s + "' must be in 1..1000");
        return static_cast<int>(q.get_num().get_si());
    };
    return {to_int(parts[0]), to_int(parts[1]), to_int(parts[2]), parse_rational(parts[3])};
}

std::pair<Rational, std::string> split_aut(const std::string& text) {
    auto pos = text.find(';');
    if (pos == std::string::npos) return {parse_rational(trim(text)), "0"};
    return {parse_rational(trim(text.substr(0, pos))), trim(text.substr(pos + 1))};
}

AutElement parse_aut(const Ring& ring, const std::string& text) {
    auto [mu, f] = split_aut(text);
    return make_aut(mu, ring.parse(f));
}

std::string aut_string(const AutElement& phi) {
    return to_string(phi.mu()) + ";" + phi.shear_part().to_string();
}

json images_json(const std::vector<std::pair<std::string, AElement>>& images) {
    json out = json::object();
    for (const auto& [name, img] : images) out[name] = img.to_string();
    return out;
}

std::string images_text(const std::vector<std::pair<std::string, AElement>>& images) {
    std::string s;
    for (const auto& [name, img] : images) s += name + " -> " + img.to_string() + "\n";
    return s;
}

std::string read_all(std::istream& in) {
    return std::string(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
}

// ---------------------------------------------------------------------------
// Option storage filled by CLI11.

struct Options {
    std::string surface = "2,3,7,0";
    std::string threefold = "2,2";
    std::string left;
    std::string right;
    std::string output = "text";
    std::string seed = "0x5eed";
    bool permissive = false;

    std::vector<std::string> exprs;
    std::vector<std::string> adjoin;
    std::string derivation = "E";
    std::size_t bound = 50;
    unsigned degree_bound = 0;
    std::size_t max_monomials = 20000;
    std::string t = "1";

    std::string phi, psi;

    std::string f, g;

    std::string params;
    int search_degree = 1;
    std::string coefficients = "-1..1";
    std::string mode = "exhaustive";
    std::uint64_t samples = 100000;
    std::uint64_t max_candidates = 10'000'000;
    long time_limit_ms = 0;
    unsigned workers = 1;
    std::string variable = "T";

    std::string out_file;
    std::string in_file;
    std::string equivariance_t;
};

Session make_session(const Options& o, std::ostream& err) {
    Session s;
    s.surface = parse_surface(o.surface);
    s.permissive = o.permissive;
    s.left = parse_threefold(s.surface, o.left.empty() ? o.threefold : o.left, o.permissive);
    if (!o.right.empty()) s.right = parse_threefold(s.surface, o.right, o.permissive);
    if (o.output == "structured")
        s.output = OutputMode::structured;
    else if (o.output != "text")
        throw InvalidParameters("--output must be text or structured");
    s.seed = parse_seed(o.seed);
    if (o.permissive) {
        auto warn = [&](const ThreefoldParams& p) {
            if (p.n < 2 || p.m < 2)
                err << "warning: n,m = " << p.to_string() << " is outside n,m >= 2; continuing in permissive mode\n";
        };
        warn(s.left);
        if (s.right) warn(*s.right);
    }
    return s;
}

// ---------------------------------------------------------------------------
// Subcommands.

int cmd_surface_info(const Session& s, Emitter& em) {
    Ring ring(s.left);
    json r;
    r["command"] = "surface-info";
    r["surface"] = s.surface.to_string();
    r["a"] = s.surface.a;
    r["b"] = s.surface.b;
    r["c"] = s.surface.c;
    r["lambda"] = to_string(s.surface.lambda);
    r["reciprocal_sum"] = to_string(s.surface.reciprocal_sum());
    r["ml_regime"] = s.surface.ml_regime();
    r["cor2_regime"] = s.surface.cor2_regime();
    r["n"] = s.left.n;
    r["m"] = s.left.m;
    r["surface_relation"] = ring.surface_relation().to_string();
    r["unit_relation"] = ring.unit_relation().to_string();
    em.emit(r);
    return kOk;
}

int cmd_nf(const Session& s, const Options& o, Emitter& em) {
    Ring ring(s.left, o.adjoin);
    for (const auto& e : o.exprs) {
        AElement nf = ring.parse(e);
        json r;
        r["command"] = "nf";
        r["input"] = e;
        r["normal_form"] = nf.to_string();
        em.emit(r, nf.to_string());
    }
    return kOk;
}

int cmd_eval_derivation(const Session& s, const Options& o, Emitter& em) {
    Ring ring(s.left, o.adjoin);
    Derivation d = parse_derivation(ring, o.derivation);
    for (const auto& e : o.exprs) {
        AElement img = d.apply(ring.parse(e));
        json r;
        r["command"] = "eval-derivation";
        r["derivation"] = o.derivation;
        r["input"] = e;
        r["image"] = img.to_string();
        em.emit(r, img.to_string());
    }
    return kOk;
}

int cmd_lnd_check(const Session& s, const Options& o, Emitter& em) {
    Ring ring(s.left, o.adjoin);
    Derivation d = parse_derivation(ring, o.derivation);
    NilpotencyVerdict v = is_locally_nilpotent(d, o.bound);
    json r;
    r["command"] = "lnd-check";
    r["derivation"] = o.derivation;
    r["nilpotent"] = v.nilpotent;
    r["bound"] = v.bound;
    json idx = json::object();
    for (const auto& [name, k] : v.indices) idx[name] = k;
    r["indices"] = idx;
    if (!v.nilpotent) r["stalled_generator"] = v.stalled_generator;
    std::string text;
    if (v.nilpotent) {
        text = "locally nilpotent\n";
        for (const auto& [name, k] : v.indices) text += "index " + name + ": " + std::to_string(k) + "\n";
    } else {
        text = "not locally nilpotent within " + std::to_string(v.bound) + " iterations (generator " +
               v.stalled_generator + ")\n";
    }
    em.emit(r, text);
    return v.nilpotent ? kOk : kFailed;
}

int cmd_kernel_basis(const Session& s, const Options& o, Emitter& em) {
    Ring ring(s.left);
    Derivation d = parse_derivation(ring, o.derivation);
    auto basis = kernel_basis_bounded(d, o.degree_bound, o.max_monomials);
    json r;
    r["command"] = "kernel-basis";
    r["derivation"] = o.derivation;
    r["degree_bound"] = o.degree_bound;
    r["dimension"] = basis.size();
    json list = json::array();
    std::string text = "dimension: " + std::to_string(basis.size()) + "\n";
    for (const auto& b : basis) {
        list.push_back(b.to_string());
        text += b.to_string() + "\n";
    }
    r["basis"] = list;
    em.emit(r, text);
    return kOk;
}

int cmd_exp(const Session& s, const Options& o, Emitter& em) {
    Ring ring(s.left, o.adjoin);
    Derivation d = parse_derivation(ring, o.derivation);
    Rational t = parse_rational(o.t);
    RingMap map = exp_map(d, t, o.bound);
    json r;
    r["command"] = "exp";
    r["derivation"] = o.derivation;
    r["t"] = to_string(t);
    r["images"] = images_json(map.images());
    std::string text = images_text(map.images());
    if (!o.exprs.empty()) {
        json applied = json::array();
        for (const auto& e : o.exprs) {
            AElement img = map.apply(ring.parse(e));
            applied.push_back({{"input", e}, {"image", img.to_string()}});
            text += e + " -> " + img.to_string() + "\n";
        }
        r["applied"] = applied;
    }
    em.emit(r, text);
    return kOk;
}

int cmd_aut(const Session& s, const Options& o, const std::string& verb, Emitter& em) {
    Ring ring(s.left);
    AutElement phi = parse_aut(ring, o.phi);
    json r;
    r["command"] = "aut";
    r["verb"] = verb;
    std::string text;
    auto put_aut = [&](const AutElement& res) {
        r["mu"] = to_string(res.mu());
        r["f"] = res.shear_part().to_string();
        r["result"] = aut_string(res);
        text = aut_string(res);
    };
    if (verb == "compose") {
        put_aut(compose(phi, parse_aut(ring, o.psi)));
    } else if (verb == "invert") {
        put_aut(invert(phi));
    } else if (verb == "apply") {
        json applied = json::array();
        for (const auto& e : o.exprs) {
            AElement img = apply_aut(phi, ring.parse(e));
            applied.push_back({{"input", e}, {"image", img.to_string()}});
            text += img.to_string() + "\n";
        }
        r["applied"] = applied;
    } else if (verb == "conjugate-e") {
        Rational lambda = conjugate_E(phi);
        r["lambda"] = to_string(lambda);
        text = to_string(lambda);
    } else if (verb == "restrict") {
        RingMap res = restrict_to_surface(phi);
        r["images"] = images_json(res.images());
        text = images_text(res.images());
    }
    em.emit(r, text);
    return kOk;
}

int cmd_mason(const Options& o, Emitter& em) {
    Poly f = parse_expression(o.f);
    Poly g = parse_expression(o.g);
    MasonReport rep = mason_check(f, g);
    json r;
    r["command"] = "mason";
    r["f"] = f.to_string();
    r["g"] = g.to_string();
    r["h"] = rep.h.to_string();
    r["max_degree"] = rep.max_degree;
    r["root_count"] = rep.root_count;
    r["applicable"] = rep.applicable;
    r["holds"] = rep.holds;
    em.emit(r);
    return rep.applicable && !rep.holds ? kFailed : kOk;
}

int cmd_fermat_search(const Session& s, const Options& o, Emitter& em) {
    SearchConfig cfg;
    if (o.params.empty()) {
        cfg.a = s.surface.a;
        cfg.b = s.surface.b;
        cfg.c = s.surface.c;
        cfg.lambda = s.surface.lambda;
    } else {
        FermatParams p = parse_fermat_params(o.params);
        cfg.a = p.a;
        cfg.b = p.b;
        cfg.c = p.c;
        cfg.lambda = p.lambda;
    }
    cfg.degree_bound = o.search_degree;
    cfg.coefficient_set = parse_coefficient_set(o.coefficients);
    if (o.mode == "randomized")
        cfg.mode = SearchMode::randomized;
    else if (o.mode != "exhaustive")
        throw InvalidParameters("--mode must be exhaustive or randomized");
    cfg.samples = o.samples;
    cfg.seed = s.seed;
    cfg.max_candidates = o.max_candidates;
    if (o.time_limit_ms > 0) cfg.time_limit = std::chrono::milliseconds(o.time_limit_ms);
    cfg.workers = o.workers;
    cfg.variable = o.variable;

    json summary;
    summary["command"] = "fermat-search";
    summary["record"] = "summary";
    summary["params"] = std::to_string(cfg.a) + "," + std::to_string(cfg.b) + "," + std::to_string(cfg.c) + "," +
                        to_string(cfg.lambda);
    summary["regime"] = to_string(search_regime(cfg));
    summary["hypotheses_hold"] = hypotheses_hold(cfg);

    SearchResult res;
    try {
        res = fermat_search(cfg);
    } catch (const ResourceLimit& e) {
        summary["status"] = "resource-limit";
        summary["message"] = e.what();
        em.emit(summary);
        return kFailed;
    }

    bool all_verified = true;
    for (const auto& sol : res.solutions) {
        all_verified = all_verified && sol.verified;
        json r;
        r["command"] = "fermat-search";
        r["record"] = "solution";
        r["index"] = sol.index;
        r["f"] = sol.f.to_string();
        r["g"] = sol.g.to_string();
        r["h"] = sol.h.to_string();
        r["degrees"] = {sol.f.total_degree(), sol.g.total_degree(), sol.h.total_degree()};
        r["verified"] = sol.verified;
        em.emit(r, "f = " + sol.f.to_string() + ", g = " + sol.g.to_string() + ", h = " + sol.h.to_string() +
                       (sol.verified ? "" : "  (NOT verified)"));
    }
    summary["status"] = "completed";
    summary["solutions"] = res.solutions.size();
    summary["candidates_examined"] = res.candidates_examined;
    summary["polys_per_slot"] = res.polys_per_slot;
    bool contradiction = hypotheses_hold(cfg) && !res.solutions.empty();
    summary["consistent"] = !contradiction && all_verified;
    em.emit(summary);
    return contradiction || !all_verified ? kFailed : kOk;
}

json report_json(const StableIsoReport& rep) {
    json r;
    r["relations_ok"] = rep.relations_ok;
    r["round_trip_ok"] = rep.round_trip_ok;
    r["certificates_ok"] = rep.certificates_ok;
    r["forward_max_degree"] = rep.forward_max_degree;
    r["backward_max_degree"] = rep.backward_max_degree;
    r["failures"] = rep.failures;
    r["verified"] = rep.ok();
    return r;
}

int cmd_stable_iso_build(const Session& s, const Options& o, Emitter& em, std::ostream& out) {
    if (!s.right) throw InvalidParameters("stable-iso build needs --right n',m'");
    StableIso iso = build_stable_iso(s.surface, s.left, *s.right);
    std::string doc = stable_iso_to_json(iso, em.structured() ? -1 : 2);
    if (o.out_file.empty()) {
        out << doc << '\n';
    } else {
        std::ofstream file(o.out_file);
        if (!file) throw InvalidParameters("cannot write " + o.out_file);
        file << doc << '\n';
        json r;
        r["command"] = "stable-iso";
        r["verb"] = "build";
        r["file"] = o.out_file;
        r.update(report_json(verify_stable_iso(iso)));
        em.emit(r);
    }
    return kOk;
}

int cmd_stable_iso_verify(const Options& o, Emitter& em, std::istream& in) {
    std::string text;
    if (o.in_file.empty() || o.in_file == "-") {
        text = read_all(in);
    } else {
        std::ifstream file(o.in_file);
        if (!file) throw InvalidParameters("cannot read " + o.in_file);
        text = read_all(file);
    }
    StableIso iso = stable_iso_from_json(text);
    StableIsoReport rep = verify_stable_iso(iso);
    json r;
    r["command"] = "stable-iso";
    r["verb"] = "verify";
    r["surface"] = iso.surface.to_string();
    r["left"] = iso.left.to_string();
    r["right"] = iso.right.to_string();
    r.update(report_json(rep));
    bool ok = rep.ok();
    if (!o.equivariance_t.empty() && ok) {
        EquivarianceReport eq = check_equivariance(iso, parse_rational(o.equivariance_t));
        r["equivariance"] = {{"t", o.equivariance_t},
                             {"proportional_to_translation", eq.proportional_to_translation},
                             {"scale", to_string(eq.scale)},
                             {"intertwines", eq.intertwines}};
        ok = eq.proportional_to_translation && eq.intertwines;
    }
    em.emit(r);
    return ok ? kOk : kFailed;
}

}  // namespace

Derivation parse_derivation(const Ring& ring, const std::string& text) {
    std::string s = trim(text);
    if (s == "E") return canonical_E(ring);
    if (s == "zero" || s == "0") return zero_derivation(ring);
    std::map<std::string, AElement> images;
    for (const auto& name : ring.variables()) images.emplace(name, ring.zero());
    for (const auto& entry : split(s, ';')) {
        if (entry.empty()) continue;
        auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw InvalidParameters("derivation entry '" + entry + "' must look like generator:expression");
        std::string name = trim(entry.substr(0, colon));
        auto it = images.find(name);
        if (it == images.end()) throw UnknownVariable(name);
        it->second = ring.parse(entry.substr(colon + 1));
    }
    return make_derivation(ring, images);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact algebra on A_{n,m} = R[u,v]/(x^m u - y^n v - 1), R = Q[x,y,z]/(x^a + y^b + z^c + lambda)",
                 "lnd-algebra"};
    app.require_subcommand(1, 1);
    app.fallthrough();
    Options o;

    app.add_option("--surface", o.surface, "a,b,c,lambda (lambda may be p/q)")->capture_default_str();
    app.add_option("--threefold", o.threefold, "n,m")->capture_default_str();
    app.add_option("--left", o.left, "n,m of the left threefold (defaults to --threefold)");
    app.add_option("--right", o.right, "n',m' of the right threefold");
    app.add_option("--output", o.output, "text or structured (one JSON record per line)")->capture_default_str();
    app.add_option("--seed", o.seed, "seed for randomized modes")->capture_default_str();
    app.add_flag("--permissive", o.permissive, "accept n or m = 1 with a warning");

    auto* surface_info = app.add_subcommand("surface-info", "print the parameters and defining relations");

    auto* nf = app.add_subcommand("nf", "print normal forms");
    nf->add_option("--expr", o.exprs, "polynomial expression (repeatable)")->required();
    nf->add_option("--adjoin", o.adjoin, "extra free variable (repeatable)");

    auto* eval = app.add_subcommand("eval-derivation", "apply a derivation");
    eval->add_option("--derivation", o.derivation, "E, zero, or 'u:y^2;v:x^2'")->capture_default_str();
    eval->add_option("--expr", o.exprs, "polynomial expression (repeatable)")->required();
    eval->add_option("--adjoin", o.adjoin, "extra free variable (repeatable)");

    auto* lnd = app.add_subcommand("lnd-check", "semi-decide local nilpotency on generators");
    lnd->add_option("--derivation", o.derivation, "E, zero, or 'u:y^2;v:x^2'")->capture_default_str();
    lnd->add_option("--bound", o.bound, "iteration bound")->capture_default_str()->check(CLI::PositiveNumber);
    lnd->add_option("--adjoin", o.adjoin, "extra free variable (repeatable)");

    auto* kernel = app.add_subcommand("kernel-basis", "kernel of a derivation up to a total degree");
    kernel->add_option("--derivation", o.derivation, "E, zero, or 'u:y^2;v:x^2'")->capture_default_str();
    kernel->add_option("--bound", o.degree_bound, "total degree bound")->required()->check(CLI::PositiveNumber);
    kernel->add_option("--max-monomials", o.max_monomials, "cap on the monomial basis")->capture_default_str();

    auto* expc = app.add_subcommand("exp", "exponential exp(t D) of a locally nilpotent derivation");
    expc->add_option("--derivation", o.derivation, "E, zero, or 'u:y^2;v:x^2'")->capture_default_str();
    expc->add_option("--t", o.t, "rational parameter")->capture_default_str();
    expc->add_option("--bound", o.bound, "iteration bound for certification")->capture_default_str();
    expc->add_option("--expr", o.exprs, "also apply the map to this expression (repeatable)");
    expc->add_option("--adjoin", o.adjoin, "extra free variable (repeatable)");

    auto* aut = app.add_subcommand("aut", "automorphisms torus(mu) o shear(f), written 'mu;f'");
    aut->require_subcommand(1, 1);
    std::map<CLI::App*, std::string> aut_verbs;
    for (const char* verb : {"compose", "invert", "apply", "conjugate-e", "restrict"}) {
        auto* sub = aut->add_subcommand(verb);
        sub->add_option("--phi", o.phi, "automorphism 'mu;f'")->required();
        aut_verbs[sub] = verb;
    }
    aut->get_subcommand("compose")->add_option("--psi", o.psi, "second automorphism 'mu;f'")->required();
    aut->get_subcommand("apply")->add_option("--expr", o.exprs, "element to transform (repeatable)")->required();
    aut->get_subcommand("compose")->description("phi o psi");
    aut->get_subcommand("invert")->description("phi^-1");
    aut->get_subcommand("apply")->description("phi(H)");
    aut->get_subcommand("conjugate-e")->description("lambda with phi^-1 E phi = lambda E");
    aut->get_subcommand("restrict")->description("images of x, y, z");

    auto* mason = app.add_subcommand("mason", "check max deg < N(fgh) for h = -(f+g)");
    mason->add_option("--f", o.f, "univariate polynomial")->required();
    mason->add_option("--g", o.g, "univariate polynomial")->required();

    auto* fermat = app.add_subcommand("fermat-search", "search f^a + g^b + h^c + lambda = 0");
    fermat->add_option("--params", o.params, "a,b,c,lambda (defaults to --surface)");
    fermat->add_option("--degree-bound", o.search_degree, "maximal degree")->required()->check(CLI::PositiveNumber);
    fermat->add_option("--coefficients", o.coefficients, "lo..hi or a comma list")->capture_default_str();
    fermat->add_option("--mode", o.mode, "exhaustive or randomized")->capture_default_str();
    fermat->add_option("--samples", o.samples, "pairs drawn in randomized mode")->capture_default_str();
    fermat->add_option("--max-candidates", o.max_candidates, "cap on (f, g) pairs")->capture_default_str();
    fermat->add_option("--time-limit-ms", o.time_limit_ms, "wall clock cap, 0 for none")->capture_default_str();
    fermat->add_option("--workers", o.workers, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
    fermat->add_option("--var", o.variable, "variable name for printed solutions")->capture_default_str();

    auto* iso = app.add_subcommand("stable-iso", "A_{n,m}[w] ~ A_{n',m'}[w']");
    iso->require_subcommand(1, 1);
    auto* build = iso->add_subcommand("build", "construct, verify and print the JSON artifact");
    build->add_option("--out", o.out_file, "write the artifact here instead of stdout");
    auto* verify = iso->add_subcommand("verify", "re-verify an artifact from a file or stdin");
    verify->add_option("--in", o.in_file, "artifact file (default: stdin)");
    verify->add_option("--equivariance", o.equivariance_t, "also check the flow of the lifted E at this t");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }

    try {
        Session s = make_session(o, err);
        Emitter em(s.output, out);
        if (*surface_info) return cmd_surface_info(s, em);
        if (*nf) return cmd_nf(s, o, em);
        if (*eval) return cmd_eval_derivation(s, o, em);
        if (*lnd) return cmd_lnd_check(s, o, em);
        if (*kernel) return cmd_kernel_basis(s, o, em);
        if (*expc) return cmd_exp(s, o, em);
        if (*aut) {
            for (const auto& [sub, verb] : aut_verbs)
                if (*sub) return cmd_aut(s, o, verb, em);
        }
        if (*mason) return cmd_mason(o, em);
        if (*fermat) return cmd_fermat_search(s, o, em);
        if (*build) return cmd_stable_iso_build(s, o, em, out);
        if (*verify) return cmd_stable_iso_verify(o, em, in);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_code_for(e);
    }
    err << "error: no command\n";
    return kUsage;
}

}  // namespace lnd::cli

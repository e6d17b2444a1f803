// sdg: exact jet calculus on Weil algebras, envelopes of plane families,
// combinatorial forms and connections, and a numeric wave-front model.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

#include "sdg/envelope.hpp"
#include "sdg/jet.hpp"
#include "sdg/model_io.hpp"
#include "sdg/verify.hpp"
#include "sdg/wavefront.hpp"

using nlohmann::json;
using namespace sdg;

namespace {

int var_index_of(const std::string& name) {
    if (name == "x") return 0;
    if (name == "y") return 1;
    if (name == "t") return 2;
    if (name.size() >= 2 && name[0] == 'x') return std::stoi(name.substr(1)) - 1;
    throw usage_error("unknown variable '" + name + "' in --base");
}

std::map<int, std::string> parse_base_spec(const std::string& text) {
    std::map<int, std::string> out;
    if (text.empty()) return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) throw usage_error("--base entries look like x=1");
        out[var_index_of(item.substr(0, eq))] = item.substr(eq + 1);
    }
    return out;
}

std::vector<int> parse_index_list(const std::string& text, size_t expect = 0) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
    if (expect && out.size() != expect)
        throw usage_error("expected " + std::to_string(expect) + " comma-separated indices");
    return out;
}

json basis_names(const WeilAlgebra& w) {
    json out = json::array();
    auto namer = default_namer(w.nvars());
    for (const auto& m : w.basis()) out.push_back(m.str(namer));
    return out;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// -----------------------------------------------------------------------
// jet
// -----------------------------------------------------------------------

int run_jet(const std::string& expr_text, const std::string& base_text,
            const std::string& algebra_spec, const std::string& mode_flag, long prec) {
    Expr f = Expr::parse(expr_text);
    WeilPtr w = weil_parse(algebra_spec);
    if (f.arity() > w->nvars())
        throw usage_error("expression uses more variables than the algebra has");
    auto base_spec = parse_base_spec(base_text);
    for (const auto& [idx, text] : base_spec)
        if (idx < 0 || idx >= w->nvars()) throw usage_error("--base variable out of range");

    bool exact = true;
    if (mode_flag == "numeric") exact = false;
    if (mode_flag.empty() || mode_flag == "auto") {
        exact = f.is_polynomial();
        for (const auto& [idx, text] : base_spec) {
            try {
                rat_parse(text);
            } catch (const error&) {
                exact = false;
            }
        }
    }

    json out;
    out["algebra"] = algebra_spec;
    out["dimension"] = w->dim();
    out["basis"] = basis_names(*w);
    auto namer = default_namer(w->nvars());
    if (exact) {
        std::vector<Rational> base(static_cast<size_t>(w->nvars()), Rational(0));
        for (const auto& [idx, text] : base_spec) base[static_cast<size_t>(idx)] = rat_parse(text);
        auto lift = taylor_lift(f, jet_point_generators(base, w));
        out["mode"] = "exact";
        out["value"] = rat_str(lift.augmentation());
        json coeffs = json::object();
        for (int i = 1; i < w->dim(); ++i)
            if (!(lift.coeff(i) == Rational(0)))
                coeffs[w->basis()[static_cast<size_t>(i)].str(namer)] = rat_str(lift.coeff(i));
        out["coeffs"] = coeffs;
    } else {
        std::vector<Real> base(static_cast<size_t>(w->nvars()), Real::with_prec(prec));
        for (const auto& [idx, text] : base_spec)
            base[static_cast<size_t>(idx)] = Real::parse(text, prec);
        auto lift = taylor_lift(f, jet_point_generators(base, w));
        out["mode"] = "numeric";
        out["precision"] = prec;
        out["value"] = lift.augmentation().str();
        json coeffs = json::object();
        for (int i = 1; i < w->dim(); ++i)
            if (!lift.coeff(i).is_zero())
                coeffs[w->basis()[static_cast<size_t>(i)].str(namer)] = lift.coeff(i).str();
        out["coeffs"] = coeffs;
    }
    emit(out);
    return 0;
}

// -----------------------------------------------------------------------
// weil
// -----------------------------------------------------------------------

int run_weil(const std::string& spec, const std::string& tensor_spec,
             const std::string& monad_expr) {
    WeilPtr w = weil_parse(spec);
    json out;
    out["spec"] = spec;
    if (!tensor_spec.empty()) {
        w = weil_tensor(w, weil_parse(tensor_spec));
        out["tensor_with"] = tensor_spec;
    }
    out["dimension"] = w->dim();
    out["order"] = w->order();
    out["basis"] = basis_names(*w);
    json nil = json::array();
    for (int v = 0; v < w->nvars(); ++v) nil.push_back(w->gen_nilpotency(v));
    out["generator_nilpotency"] = nil;
    if (!monad_expr.empty()) out["monad_check"] = monad_check(Expr::parse(monad_expr), w);
    emit(out);
    return 0;
}

// -----------------------------------------------------------------------
// envelope
// -----------------------------------------------------------------------

int run_envelope(const std::string& family_text, bool exact_flag, bool squarefree,
                 const std::string& t_range, const std::string& tol_text, long prec) {
    Family fam = Family::parse(family_text);
    json out;
    out["family"] = family_text;
    bool have_exact = false;
    try {
        auto locus = envelope_eliminate(fam, squarefree); // throws when non-polynomial
        out["eliminant"] = locus.eliminant->str();
        out["degenerate"] = locus.degenerate;
        have_exact = true;
    } catch (const domain_error&) {
        // non-polynomial family: only the sampling path applies
        if (exact_flag || t_range.empty()) throw;
    }
    if (!t_range.empty()) {
        SampleOptions opt;
        opt.prec = prec;
        opt.tol = Real::parse(tol_text, prec);
        std::stringstream ss(t_range);
        std::string a, b, n;
        if (!std::getline(ss, a, ':') || !std::getline(ss, b, ':') || !std::getline(ss, n, ':'))
            throw usage_error("--t-range looks like a:b:n");
        opt.t_min = Real::parse(a, prec);
        opt.t_max = Real::parse(b, prec);
        opt.t_count = std::stoi(n);
        auto locus = envelope_sample(fam, opt);
        if (!have_exact) out["degenerate"] = locus.degenerate;
        json samples = json::array();
        for (const auto& s : locus.samples)
            samples.push_back({{"t", s.t.str()}, {"x", s.x.str()}, {"y", s.y.str()}});
        out["samples"] = samples;
    }
    emit(out);
    return 0;
}

// -----------------------------------------------------------------------
// forms
// -----------------------------------------------------------------------

int run_forms(const std::string& model_path, const std::string& integral_subset,
              bool want_coboundary) {
    Model model = load_model_file(model_path);
    json out;
    out["points"] = model.space->size();
    if (model.form1) {
        out["closed"] = is_closed(*model.form1);
        Distribution dist = distribution_from_form(*model.form1);
        out["involutive"] = is_involutive(dist);
        if (!integral_subset.empty())
            out["integral_subset"] = is_integral_subset(dist, parse_index_list(integral_subset));
        if (want_coboundary) {
            Form2 dw = coboundary1(*model.form1);
            json vals = json::object();
            for (const auto& s : model.space->simplices(2))
                vals[std::to_string(s[0]) + "," + std::to_string(s[1]) + "," +
                     std::to_string(s[2])] = model.group->name(dw.value(s[0], s[1], s[2]));
            out["coboundary"] = vals;
            out["alternating"] = dw.alternating();
        }
    } else if (model.form0) {
        Form1 df = coboundary0(*model.form0);
        out["closed"] = is_closed(df); // always true for a coboundary
        json vals = json::object();
        for (int x = 0; x < model.space->size(); ++x)
            for (int y = 0; y < model.space->size(); ++y)
                if (model.space->nbr(x, y))
                    vals[std::to_string(x) + "," + std::to_string(y)] =
                        model.group->name(df.value(x, y));
        out["coboundary"] = vals;
    } else {
        throw usage_error("model declares neither form0 nor form1");
    }
    emit(out);
    return 0;
}

// -----------------------------------------------------------------------
// connection
// -----------------------------------------------------------------------

int run_connection(const std::string& model_path, const std::string& curvature_at,
                   const std::string& bianchi_at, bool bianchi_all,
                   const std::string& affine_at, const std::string& geodesic_subset) {
    Model model = load_model_file(model_path);
    json out;
    if (!curvature_at.empty() || !bianchi_at.empty() || bianchi_all) {
        if (!model.connection) throw usage_error("model declares no connection");
        const auto& nabla = *model.connection;
        if (!curvature_at.empty()) {
            auto s = parse_index_list(curvature_at, 3);
            out["curvature"] = model.group->name(curvature(nabla, s[0], s[1], s[2]));
        }
        if (!bianchi_at.empty()) {
            auto s = parse_index_list(bianchi_at, 4);
            out["bianchi"] = bianchi_check(nabla, s[0], s[1], s[2], s[3]);
        }
        if (bianchi_all) {
            long cases = 0, failures = 0;
            for (const auto& s : model.space->simplices(3)) {
                ++cases;
                if (!bianchi_check(nabla, s[0], s[1], s[2], s[3])) ++failures;
            }
            out["bianchi_cases"] = cases;
            out["bianchi_failures"] = failures;
        }
    }
    if (!affine_at.empty() || !geodesic_subset.empty()) {
        if (!model.lambda) throw usage_error("model declares no affine connection");
        if (!affine_at.empty()) {
            auto s = parse_index_list(affine_at, 3);
            auto r = affine_curvature(*model.lambda, s[0], s[1], s[2]);
            json transport = json::object();
            for (auto [z, img] : r.transport)
                transport[model.space->point_name(z)] = model.space->point_name(img);
            out["affine_curvature"] = transport;
            out["bijection_fixing_base"] = r.bijection_fixing_base;
        }
        if (!geodesic_subset.empty())
            out["geodesic"] = is_geodesic(*model.lambda, parse_index_list(geodesic_subset));
    }
    if (out.empty()) throw usage_error("nothing to do: pass a query flag");
    emit(out);
    return 0;
}

// -----------------------------------------------------------------------
// wavefront
// -----------------------------------------------------------------------

int run_wavefront(const std::string& front_path, double s, const std::string& orientation,
                  std::string out_path) {
    OrientedFront front = read_front_csv(front_path);
    int orient;
    if (orientation == "outer")
        orient = +1;
    else if (orientation == "inner")
        orient = -1;
    else
        throw usage_error("--orientation is 'outer' or 'inner'");
    auto result = offset_front(front, s, orient);
    if (out_path.empty()) out_path = front_path + ".offset.csv";
    json out;
    if (out_path == "-") {
        out["csv"] = front_to_csv(result.front);
    } else {
        write_front_csv(out_path, result.front);
        out["out"] = out_path;
    }
    out["vertices"] = result.front.vertices.size();
    out["cusps"] = {{"reversed_segments", result.cusps.reversed_segments},
                    {"crossing_vertices", result.cusps.crossing_vertices},
                    {"clean", result.cusps.clean()}};
    emit(out);
    return 0;
}

// -----------------------------------------------------------------------
// verify
// -----------------------------------------------------------------------

int run_verify(const std::string& suite, const std::string& group, int trials,
               std::uint64_t seed, int max_points) {
    SuiteResult r;
    if (suite == "bianchi")
        r = verify_bianchi(group, trials, seed);
    else if (suite == "bianchi-z2")
        r = verify_bianchi_exhaustive_z2();
    else if (suite == "closed-involutive")
        r = verify_closed_involutive(max_points, {"Z2", "Z3"});
    else if (suite == "ddzero")
        r = verify_ddzero(group, trials, seed);
    else if (suite == "ring")
        r = verify_ring(trials, seed);
    else if (suite == "cancel")
        r = verify_cancel(trials, seed);
    else if (suite == "monad")
        r = verify_monad(trials, seed);
    else if (suite == "derivative")
        r = verify_derivative(trials, seed);
    else
        throw usage_error("unknown suite '" + suite + "'");
    json out;
    out["suite"] = r.suite;
    out["seed"] = r.seed;
    out["cases"] = r.cases;
    out["failures"] = r.failures;
    out["counterexamples"] = r.counterexamples;
    emit(out);
    return r.failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"sdg: jets on Weil algebras, envelopes, combinatorial connections, wave fronts"};
    app.require_subcommand(1);

    // jet
    auto* jet = app.add_subcommand("jet", "lift an expression to a Weil-algebra point");
    std::string expr_text, base_text, algebra_spec = "D", mode_flag = "auto";
    long prec = 256;
    jet->add_option("--expr", expr_text, "expression, e.g. \"x^2\"")->required();
    jet->add_option("--base", base_text, "base point, e.g. \"x=1,y=2\"");
    jet->add_option("--algebra", algebra_spec, "D | D(n) | Dk(k,n) | DL | D2 | n=.. rels=..");
    jet->add_option("--mode", mode_flag, "auto | exact | numeric");
    jet->add_option("--prec", prec, "mantissa bits for numeric mode");

    // weil
    auto* weil = app.add_subcommand("weil", "build a Weil algebra and report its structure");
    std::string weil_spec, tensor_spec, monad_expr;
    weil->add_option("--spec", weil_spec, "algebra spec")->required();
    weil->add_option("--tensor", tensor_spec, "tensor with a second algebra");
    weil->add_option("--monad", monad_expr, "check M(0) membership of an expression");

    // envelope
    auto* env = app.add_subcommand("envelope", "characteristics and envelopes of plane families");
    std::string family_text, t_range, tol_text = "1e-12";
    bool exact_flag = false, squarefree = false;
    long env_prec = 64;
    env->add_option("--family", family_text, "F(x,y,t), e.g. \"y-(x-t)^3\"")->required();
    env->add_flag("--exact", exact_flag, "force the exact eliminant path");
    env->add_flag("--squarefree", squarefree, "reduce repeated factors of the eliminant");
    env->add_option("--t-range", t_range, "numeric sampling range a:b:n");
    env->add_option("--tol", tol_text, "Newton residual tolerance");
    env->add_option("--prec", env_prec, "mantissa bits for sampling");

    // forms
    auto* forms = app.add_subcommand("forms", "combinatorial G-valued forms on a model");
    std::string forms_model, integral_subset;
    bool want_coboundary = false;
    forms->add_option("--model", forms_model, "model JSON file")->required();
    forms->add_option("--integral", integral_subset, "check an integral subset, e.g. 0,1");
    forms->add_flag("--coboundary", want_coboundary, "emit the coboundary table");

    // connection
    auto* conn = app.add_subcommand("connection", "curvature and Bianchi checks on a model");
    std::string conn_model, curvature_at, bianchi_at, affine_at, geodesic_subset;
    bool bianchi_all = false;
    conn->add_option("--model", conn_model, "model JSON file")->required();
    conn->add_option("--curvature", curvature_at, "2-simplex x,y,z");
    conn->add_option("--bianchi", bianchi_at, "3-simplex x,y,z,u");
    conn->add_flag("--bianchi-all", bianchi_all, "sweep every ordered 3-simplex");
    conn->add_option("--affine-curvature", affine_at, "2-simplex for the affine transport");
    conn->add_option("--geodesic", geodesic_subset, "subset stability check, e.g. 0,2");

    // wavefront
    auto* wave = app.add_subcommand("wavefront", "offset an oriented front (Huygens B |- s)");
    std::string front_path, orientation = "outer", out_path;
    double wave_s = 0;
    wave->add_option("--front", front_path, "CSV file of x,y,nx,ny rows")->required();
    wave->add_option("--s", wave_s, "propagation distance (> 0)")->required();
    wave->add_option("--orientation", orientation, "outer | inner");
    wave->add_option("--out", out_path, "output CSV path ('-' embeds the CSV in the JSON)");

    // verify
    auto* verify = app.add_subcommand("verify", "run a property suite");
    std::string suite, group = "S3";
    int trials = 200, max_points = 4;
    std::uint64_t seed = 1;
    verify->add_option("--suite", suite,
                       "bianchi | bianchi-z2 | closed-involutive | ddzero | ring | cancel | "
                       "monad | derivative")
        ->required();
    verify->add_option("--group", group, "group for connection/form suites");
    verify->add_option("--trials", trials, "number of randomized trials");
    verify->add_option("--seed", seed, "seed for reproducible runs");
    verify->add_option("--max-points", max_points, "space size bound for exhaustive suites");

    try {
        app.parse(argc, argv);
        if (jet->parsed()) return run_jet(expr_text, base_text, algebra_spec, mode_flag, prec);
        if (weil->parsed()) return run_weil(weil_spec, tensor_spec, monad_expr);
        if (env->parsed())
            return run_envelope(family_text, exact_flag, squarefree, t_range, tol_text, env_prec);
        if (forms->parsed()) return run_forms(forms_model, integral_subset, want_coboundary);
        if (conn->parsed())
            return run_connection(conn_model, curvature_at, bianchi_at, bianchi_all, affine_at,
                                  geodesic_subset);
        if (wave->parsed()) return run_wavefront(front_path, wave_s, orientation, out_path);
        if (verify->parsed()) return run_verify(suite, group, trials, seed, max_points);
        return 2;
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const usage_error& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

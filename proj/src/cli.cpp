#include "quadpoly/cli.hpp"

#include "quadpoly/chebyshev.hpp"
#include "quadpoly/errors.hpp"
#include "quadpoly/format.hpp"
#include "quadpoly/quadrinomial.hpp"
#include "quadpoly/roots.hpp"
#include "quadpoly/stability.hpp"
#include "quadpoly/univalent.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <functional>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace quadpoly {
namespace {

using nlohmann::json;

constexpr const char* kSchemaVersion = "1";

struct Output {
    json payload;
    /// Set for commands whose plain output is CSV rather than a summary.
    std::function<void(std::ostream&)> csv;
};

struct CommonFlags {
    bool as_json = false;
    std::string out_path;
};


json roots_json(const RootSet& rs) {
    json arr = json::array();
    for (const auto& r : rs.roots) {
        arr.push_back({{"re", r.value.real()},
                       {"im", r.value.imag()},
                       {"modulus", std::abs(r.value)},
                       {"multiplicity", r.multiplicity},
                       {"residual", r.residual}});
    }
    return arr;
}

json factored_json(const FactoredForm& f) {
    json lin = json::array();
    for (const auto& l : f.linear) lin.push_back({{"root", l.root}, {"multiplicity", l.multiplicity}});
    return {{"linear", lin}, {"quadratics", f.quadratics}, {"scale", f.scale}, {"degree", f.degree()}};
}

std::vector<double> coeffs_of(const RealPoly& p) { return p.coeffs(); }

QuadSpec quad_spec(const std::string& family, const std::string& kappa, int N) {
    return QuadSpec(parse_family(family), Kappa::parse(kappa), N);
}

// ---------------------------------------------------------------------------
// plain-text rendering, driven entirely by the JSON payload

void render_value(std::ostream& os, const json& v) {
    if (v.is_number_float()) {
        os << format_double(v.get<double>());
    } else if (v.is_string()) {
        os << v.get<std::string>();
    } else {
        os << v.dump();
    }
}

void render_text(std::ostream& os, const std::string& command, const json& payload) {
    os << command << '\n';
    for (const auto& [key, value] : payload.items()) {
        if (value.is_array() && !value.empty() && value.front().is_object()) {
            os << key << ":\n";
            for (const auto& row : value) {
                os << "  ";
                bool first = true;
                for (const auto& [k, v] : row.items()) {
                    if (!first) os << "  ";
                    first = false;
                    os << k << '=';
                    render_value(os, v);
                }
                os << '\n';
            }
        } else if (value.is_array()) {
            os << key << ':';
            for (const auto& v : value) {
                os << ' ';
                render_value(os, v);
            }
            os << '\n';
        } else if (value.is_object()) {
            os << key << ":\n";
            for (const auto& [k, v] : value.items()) {
                os << "  " << k << ": ";
                render_value(os, v);
                os << '\n';
            }
        } else {
            os << key << ": ";
            render_value(os, value);
            os << '\n';
        }
    }
}

// ---------------------------------------------------------------------------
// commands

Output cmd_roots(const QuadSpec& spec, double tol) {
    const RootSet rs = quadrinomial_roots(spec);
    const CircleCounts counts = classify_roots(rs, tol);
    return {{{"degree", spec.N()},
             {"total", rs.total},
             {"on_circle", counts.on_circle},
             {"inside", counts.inside},
             {"outside", counts.outside},
             {"roots", roots_json(rs)}},
            {}};
}

Output cmd_criterion(const QuadSpec& spec, double tol) {
    const CriterionCheck c = verify_criterion(spec, tol);
    const KappaInterval lim = kappa_limits(spec.family(), spec.N());
    return {{{"predicted", c.predicted},
             {"observed", c.observed},
             {"worst_deviation", c.worst_deviation},
             {"lo", lim.lo},
             {"hi", lim.hi},
             {"circle_tol", tol}},
            {}};
}

Output cmd_factor(const QuadSpec& spec) {
    const FactoredForm f = factorize_limit_case(spec);
    json payload = factored_json(f);
    payload["deviation"] = max_coeff_distance(f.expand(), build_quadrinomial(spec));
    return {payload, {}};
}

Output cmd_cusps(int N) {
    const std::vector<double> angles = cusp_angles(N);
    std::vector<double> diffs;
    for (std::size_t j = 1; j < angles.size(); ++j) diffs.push_back(angles[j] - angles[j - 1]);
    return {{{"N", N}, {"angles", angles}, {"differences", diffs}}, {}};
}

Output cmd_stability(int n, int samples) {
    CurveSet cs = stability_boundary(n, samples);
    json curves = json::object();
    for (const auto& c : cs.curves) {
        json pts = json::array();
        for (const auto& p : c.points) {
            json row = {{"a", p.a}, {"b", p.b}};
            row["t"] = p.t ? json(*p.t) : json(nullptr);
            pts.push_back(row);
        }
        curves[std::string(to_string(c.label))] = pts;
    }
    json payload = {{"n", n}, {"t_begin", cs.t_begin}, {"t_end", cs.t_end}, {"curves", curves}};
    return {payload, [cs = std::move(cs)](std::ostream& os) { write_csv(os, cs); }};
}

std::vector<double> parse_coeff_list(const std::string& text) {
    std::vector<double> c;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        double v = 0.0;
        try {
            v = std::stod(item, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("invalid coefficient '" + item + "'");
        }
        if (used != item.size()) throw std::invalid_argument("invalid coefficient '" + item + "'");
        c.push_back(v);
    }
    if (c.empty()) throw std::invalid_argument("empty coefficient list");
    return c;
}

Output cmd_cohn(const std::string& coeffs, double tol) {
    const RealPoly p(parse_coeff_list(coeffs));
    if (p.degree() < 1) throw std::invalid_argument("cohn: polynomial must have degree >= 1");
    const bool verdict = cohn_on_circle(p, tol);
    const RealPoly d = derivative(p);
    const RootSet roots = find_roots(p);
    const CircleCounts counts = classify_roots(roots);
    json payload = {{"on_circle", verdict},
                    {"self_reciprocal", to_string(self_reciprocal_sign(p, 1e-12 * (1.0 + p.max_abs_coeff())))},
                    {"derivative_roots", d.degree() >= 1 ? roots_json(find_roots(d)) : json::array()},
                    {"roots", roots_json(roots)},
                    {"roots_on_circle", counts.on_circle},
                    {"degree", p.degree()}};
    return {payload, {}};
}

Output cmd_fejer(int N) {
    const FactoredForm f = fejer_derivative_factored(N);
    const RealPoly sigma = fejer(N).poly();
    const RealPoly d = derivative(sigma);
    json payload = factored_json(f);
    payload["N"] = N;
    payload["coefficients"] = coeffs_of(sigma);
    payload["deviation"] = max_coeff_distance(f.expand(), d);
    const RealPoly cube{1.0, -3.0, 3.0, -1.0};
    payload["closed_form_deviation"] = max_coeff_distance(multiply(cube, d), fejer_derivative_numerator(N));
    return {payload, {}};
}

Output cmd_alexander(int N) {
    const FactoredForm f = alexander_derivative_factored(N);
    const RealPoly w = alexander(N).poly();
    json payload = factored_json(f);
    payload["N"] = N;
    payload["coefficients"] = coeffs_of(w);
    payload["deviation"] = max_coeff_distance(f.expand(), derivative(w));
    return {payload, {}};
}

Output cmd_univalent(int s, int N, std::optional<int> boundary) {
    const NormalizedPoly F = F_family(s, N);
    json payload = {{"s", s}, {"N", N}, {"coefficients", coeffs_of(F.poly())}};
    if (s == 0) {
        json phi = json::array();
        for (int k = 1; k <= N; ++k) {
            const RootSet rs = find_roots(phi_k(N, k));
            const double dev = max_circle_deviation(rs);
            phi.push_back({{"k", k}, {"worst_deviation", dev}, {"on_circle", dev <= 1e-5}});
        }
        payload["phi"] = phi;
        const QuasiExtremalReport rep = check_quasi_extremal(N);
        payload["quasi_extremal"] = {{"derivatives_at_minus_one", rep.derivatives_at_minus_one},
                                     {"deflated_degree", rep.deflated_degree},
                                     {"deflated_worst_deviation", rep.deflated_worst_deviation},
                                     {"identity_deviation", rep.identity_deviation}};
    }
    if (!boundary) return {payload, {}};

    BoundaryImage img = boundary_image(F.poly(), *boundary);
    json samples = json::array();
    for (const auto& smp : img.samples) samples.push_back({smp.t, smp.w.real(), smp.w.imag()});
    payload["boundary"] = {{"resolution", img.resolution}, {"simple", simple_curve_scan(img)}, {"samples", samples}};
    return {payload, [img = std::move(img)](std::ostream& os) { write_csv(os, img); }};
}

void add_common(CLI::App* sub, CommonFlags& flags) {
    sub->add_flag("--json", flags.as_json, "Emit the JSON envelope instead of text");
    sub->add_option("--out", flags.out_path, "Write output to FILE instead of stdout");
}

}  // namespace

int run_cli(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Quadrinomials with zeros on the unit circle: criteria, factorizations, univalent families",
                 "quadpoly"};
    app.require_subcommand(1);

    CommonFlags flags;
    std::map<std::string, std::string> params;
    std::function<Output()> action;

    std::string family = "p";
    std::string kappa;
    int N = 0;
    int n = 0;
    int samples = 200;
    int s = 0;
    double tol = 1e-6;
    std::string coeffs;
    std::optional<int> boundary;

    auto quad_options = [&](CLI::App* sub) {
        sub->add_option("--family", family, "p or q")->required()->check(CLI::IsMember({"p", "q", "P", "Q"}));
        sub->add_option("--kappa", kappa, "INT, INT/INT (exact) or decimal float")->required();
        sub->add_option("--N", N, "Degree N >= 3")->required();
        add_common(sub, flags);
    };

    auto* roots = app.add_subcommand("roots", "Roots of p or q with unit-circle classification");
    quad_options(roots);
    roots->add_option("--tol", tol, "Circle tolerance");
    roots->callback([&] { action = [&] { return cmd_roots(quad_spec(family, kappa, N), tol); }; });

    auto* crit = app.add_subcommand("criterion", "Predicted vs observed unit-circle criterion");
    quad_options(crit);
    crit->add_option("--tol", tol, "Circle tolerance");
    crit->callback([&] { action = [&] { return cmd_criterion(quad_spec(family, kappa, N), tol); }; });

    auto* factor = app.add_subcommand("factor", "Limit-case factorization and its verification");
    quad_options(factor);
    factor->callback([&] { action = [&] { return cmd_factor(quad_spec(family, kappa, N)); }; });

    auto* cusps = app.add_subcommand("cusps", "arccos of the gamma cosines for odd N");
    cusps->add_option("--N", N, "Odd N >= 5")->required();
    add_common(cusps, flags);
    cusps->callback([&] { action = [&] { return cmd_cusps(N); }; });

    auto* stab = app.add_subcommand("stability", "Stability-domain boundary curves of z^n + a z^{n-1} + b");
    stab->add_option("--n", n, "Trinomial degree n >= 2")->required();
    stab->add_option("--samples", samples, "Samples per curve");
    add_common(stab, flags);
    stab->callback([&] { action = [&] { return cmd_stability(n, samples); }; });

    auto* cohn = app.add_subcommand("cohn", "Cohn criterion for zeros on the unit circle");
    cohn->add_option("--coeffs", coeffs, "Comma-separated ascending coefficients c0,c1,...")->required();
    cohn->add_option("--tol", tol, "Slack on |z| <= 1 for the derivative zeros");
    add_common(cohn, flags);
    cohn->callback([&] { action = [&] { return cmd_cohn(coeffs, tol); }; });

    auto* fej = app.add_subcommand("fejer", "Factored derivative of the Fejer polynomial");
    fej->add_option("--N", N, "N >= 2")->required();
    add_common(fej, flags);
    fej->callback([&] { action = [&] { return cmd_fejer(N); }; });

    auto* alex = app.add_subcommand("alexander", "Factored derivative of the Alexander polynomial");
    alex->add_option("--N", N, "N >= 1")->required();
    add_common(alex, flags);
    alex->callback([&] { action = [&] { return cmd_alexander(N); }; });

    auto* univ = app.add_subcommand("univalent", "Univalent families F_N^(s) and their checks");
    univ->add_option("--s", s, "Family index 0..4")->required()->check(CLI::Range(0, 4));
    univ->add_option("--N", N, "N (odd for s=0,1,2; even for s=3,4)")->required();
    univ->add_option("--boundary", boundary, "Emit the boundary image at this resolution (CSV)");
    add_common(univ, flags);
    univ->callback([&] { action = [&] { return cmd_univalent(s, N, boundary); }; });

    std::vector<std::string> argv_storage{"quadpoly"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n\n" << app.help();
        return kExitUsage;
    }

    const CLI::App* chosen = app.get_subcommands().front();
    for (const CLI::Option* opt : chosen->get_options()) {
        if (opt->count() == 0 || opt->get_name() == "--help") continue;
        const auto& results = opt->results();
        std::string name = opt->get_name();
        while (!name.empty() && name.front() == '-') name.erase(name.begin());
        params[name] = results.empty() ? "true" : results.front();
    }

    Output result;
    try {
        result = action();
    } catch (const NumericError& e) {
        err << "numeric failure: " << e.what() << '\n';
        return kExitNumeric;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ofstream file;
    if (!flags.out_path.empty()) {
        file.open(flags.out_path);
        if (!file) {
            err << "error: cannot open '" << flags.out_path << "' for writing\n";
            return kExitUsage;
        }
    }
    std::ostream& sink = flags.out_path.empty() ? out : file;

    const std::string command = chosen->get_name();
    if (flags.as_json) {
        const json envelope = {
            {"schema_version", kSchemaVersion}, {"command", command}, {"params", params}, {"payload", result.payload}};
        sink << envelope.dump(2) << '\n';
    } else if (result.csv) {
        result.csv(sink);
    } else {
        render_text(sink, command, result.payload);
    }
    return kExitOk;
}

}  // namespace quadpoly

#include "quadpoly/stability.hpp"

#include "quadpoly/format.hpp"
#include "quadpoly/roots.hpp"

#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace quadpoly {

RealPoly trinomial(int n, double a, double b) {
    if (n < 2) throw std::invalid_argument("trinomial: n must be >= 2");
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    c[0] = b;
    c[n - 1] += a;
    c[n] = 1.0;
    return RealPoly(std::move(c));
}

bool trinomial_in_disk(int n, double a, double b) {
    const RootSet rs = find_roots(trinomial(n, a, b));
    for (const auto& r : rs.roots) {
        if (!(std::abs(r.value) < 1.0 - kStrictnessTolerance)) return false;
    }
    return true;
}

bool trinomial_in_closed_disk(int n, double a, double b, double slack) {
    const RootSet rs = find_roots(trinomial(n, a, b));
    for (const auto& r : rs.roots) {
        if (std::abs(r.value) > 1.0 + slack) return false;
    }
    return true;
}

std::string_view to_string(CurveLabel c) noexcept {
    switch (c) {
        case CurveLabel::I: return "I";
        case CurveLabel::II: return "II";
        case CurveLabel::III: return "III";
        case CurveLabel::IV: return "IV";
    }
    return "?";
}

CurvePoint corner_point(int n) {
    const double m = n - 1.0;
    return {std::numbers::pi, n / m, (n % 2 == 0 ? 1.0 : -1.0) / m};
}

CurveSet stability_boundary(int n, int samples) {
    if (n < 2) throw std::invalid_argument("stability_boundary: n must be >= 2");
    if (samples < 2) throw std::invalid_argument("stability_boundary: samples must be >= 2");

    const double edge = static_cast<double>(n) / (n - 1);
    const double parity = n % 2 == 0 ? 1.0 : -1.0;
    const double pi = std::numbers::pi;

    CurveSet cs;
    cs.n = n;
    cs.t_begin = (n - 1) * pi / n;
    cs.t_end = pi;
    cs.curves = {Curve{CurveLabel::I, {}}, Curve{CurveLabel::II, {}}, Curve{CurveLabel::III, {}},
                 Curve{CurveLabel::IV, {}}};

    for (int k = 0; k < samples; ++k) {
        const double s = static_cast<double>(k) / (samples - 1);
        const double a1 = -edge + s * edge;
        cs.curves[0].points.push_back({std::nullopt, a1, -a1 - 1.0});
        const double a2 = s * edge;
        cs.curves[1].points.push_back({std::nullopt, a2, parity * (a2 - 1.0)});
    }

    for (int k = 0; k < samples; ++k) {
        const double t = cs.t_begin + k * (pi - cs.t_begin) / samples;
        const double denom = std::sin((n - 1) * t);
        const double a = std::sin(n * t) / denom;
        const double b = std::sin(t) / denom;
        cs.curves[2].points.push_back({t, -a, b});
        cs.curves[3].points.push_back({t, a, parity * b});
    }
    const CurvePoint c = corner_point(n);
    cs.curves[2].points.push_back(c);
    // curve IV is curve III mirrored through a -> -a, b -> (-1)^n b
    cs.curves[3].points.push_back({c.t, -c.a, parity * c.b});
    return cs;
}

void write_csv(std::ostream& os, const CurveSet& cs) {
    os << "curve,t,a,b\n";
    for (const auto& curve : cs.curves) {
        for (const auto& p : curve.points) {
            os << to_string(curve.label) << ',' << (p.t ? format_double(*p.t) : std::string{}) << ','
               << format_double(p.a) << ',' << format_double(p.b) << '\n';
        }
    }
}

TrinomialParams quadrinomial_derivative_line(const QuadSpec& spec) {
    const int n = spec.N() - 1;
    const double k = spec.kappa().value();
    const double a = k * n / (n + 1);
    const double b = k / (n + 1);
    return {n, a, spec.family() == Family::P ? b : -b};
}

bool cohn_on_circle(const RealPoly& p, double tol) {
    if (p.degree() < 1) throw std::invalid_argument("cohn_on_circle: degree must be >= 1");
    const double rec_tol = 1e-12 * (1.0 + p.max_abs_coeff());
    if (self_reciprocal_sign(p, rec_tol) == Reciprocity::none) return false;
    const RealPoly d = derivative(p);
    if (d.degree() < 1) return true;
    const RootSet rs = find_roots(d);
    for (const auto& r : rs.roots) {
        if (std::abs(r.value) > 1.0 + tol) return false;
    }
    return true;
}

}  // namespace quadpoly

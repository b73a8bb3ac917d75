#include "quadpoly/quadrinomial.hpp"

#include "quadpoly/chebyshev.hpp"
#include "quadpoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace quadpoly {

const char* to_string(Family f) noexcept { return f == Family::P ? "p" : "q"; }

Family parse_family(std::string_view text) {
    if (text == "p" || text == "P") return Family::P;
    if (text == "q" || text == "Q") return Family::Q;
    throw std::invalid_argument("unknown family '" + std::string(text) + "' (expected p or q)");
}

QuadSpec::QuadSpec(Family family, Kappa kappa, int N) : family_(family), kappa_(kappa), N_(N) {
    if (N < 3) throw std::invalid_argument("quadrinomial degree N must be >= 3, got " + std::to_string(N));
}

RealPoly build_quadrinomial(const QuadSpec& spec) {
    const int N = spec.N();
    const double k = spec.kappa().value();
    const double sign = spec.family() == Family::P ? 1.0 : -1.0;
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    c[0] = 1.0;
    c[1] += k;
    c[N - 1] += sign * k;
    c[N] = sign;
    return RealPoly(std::move(c));
}

std::pair<Rational, Rational> kappa_limits_exact(Family family, int N) {
    if (N < 3) throw std::invalid_argument("kappa_limits: N must be >= 3");
    const Rational ratio(N, N - 2);
    const bool odd = N % 2 != 0;
    if (family == Family::P) return {Rational(-1), odd ? ratio : Rational(1)};
    return {Rational(-N, N - 2), odd ? Rational(1) : ratio};
}

KappaInterval kappa_limits(Family family, int N) {
    const auto [lo, hi] = kappa_limits_exact(family, N);
    return {lo.value(), hi.value()};
}

bool circle_criterion(const QuadSpec& spec) {
    const auto [lo, hi] = kappa_limits_exact(spec.family(), spec.N());
    if (const auto& r = spec.kappa().rational()) return lo <= *r && *r <= hi;
    const double k = spec.kappa().value();
    return lo.value() <= k && k <= hi.value();
}

namespace {

enum class CosineSource { U, U_prime };

struct LimitCase {
    std::vector<LinearFactor> linear;
    CosineSource source;
    /// +1: factors 1 + z^2 - 2 x z; -1: factors 1 + z^2 + 2 x z
    int sign;
};

std::optional<LimitCase> match_limit_case(const QuadSpec& spec) {
    const auto& r = spec.kappa().rational();
    if (!r) return std::nullopt;
    const int N = spec.N();
    const bool odd = N % 2 != 0;
    const Rational one(1);
    const Rational minus_one(-1);
    const Rational ratio(N, N - 2);
    const Rational minus_ratio(-N, N - 2);

    if (spec.family() == Family::P) {
        if (*r == minus_one && odd) return LimitCase{{{-1, 1}, {1, 2}}, CosineSource::U, -1};
        if (*r == minus_one && !odd) return LimitCase{{{1, 2}}, CosineSource::U, -1};
        if (*r == one && !odd) return LimitCase{{{-1, 2}}, CosineSource::U, +1};
        if (*r == ratio && odd) return LimitCase{{{-1, 3}}, CosineSource::U_prime, +1};
    } else {
        if (*r == minus_ratio && odd) return LimitCase{{{1, 3}}, CosineSource::U_prime, -1};
        if (*r == minus_ratio && !odd) return LimitCase{{{-1, 1}, {1, 3}}, CosineSource::U_prime, -1};
        if (*r == ratio && !odd) return LimitCase{{{1, 1}, {-1, 3}}, CosineSource::U_prime, +1};
        if (*r == one && odd) return LimitCase{{{1, 1}, {-1, 2}}, CosineSource::U, -1};
    }
    return std::nullopt;
}

}  // namespace

bool is_limit_case(const QuadSpec& spec) { return match_limit_case(spec).has_value(); }

FactoredForm factorize_limit_case(const QuadSpec& spec) {
    const auto lc = match_limit_case(spec);
    if (!lc) {
        throw NotALimitCase("(" + std::string(to_string(spec.family())) + ", kappa=" + spec.kappa().str() +
                            ", N=" + std::to_string(spec.N()) + ") is not a tabulated limit case");
    }
    const int n = spec.N() - 2;
    std::vector<double> cosines;
    if (lc->source == CosineSource::U) {
        cosines = positive_roots_U(n).mapped();
    } else if (n >= 2) {
        cosines = positive_roots_U_prime(n).mapped();
    }
    FactoredForm f;
    f.linear = lc->linear;
    for (double x : cosines) f.quadratics.push_back(lc->sign * x);
    return f;
}

double verify_factorization(const QuadSpec& spec) {
    return max_coeff_distance(factorize_limit_case(spec).expand(), build_quadrinomial(spec));
}

RootSet quadrinomial_roots(const QuadSpec& spec, const SolverOptions& opts) {
    RealPoly p = build_quadrinomial(spec);
    const auto lc = match_limit_case(spec);
    if (!lc) return find_roots(p, opts);

    const RealPoly original = p;
    RootSet rs;
    rs.total = original.degree();
    for (const auto& f : lc->linear) {
        p = deflate(p, f.root, f.multiplicity);
        const Complex z(f.root, 0.0);
        rs.roots.push_back({z, f.multiplicity, root_residual(original, z)});
    }
    if (p.degree() >= 1) {
        RootSet rest = find_roots(p, opts);
        for (auto& r : rest.roots) {
            r.residual = root_residual(original, r.value);
            rs.roots.push_back(r);
        }
    }
    return rs;
}

CriterionCheck verify_criterion(const QuadSpec& spec, double circle_tol) {
    const RootSet rs = quadrinomial_roots(spec);
    const CircleCounts counts = classify_roots(rs, circle_tol);
    return {circle_criterion(spec), counts.on_circle == counts.total(), max_circle_deviation(rs)};
}

std::vector<double> cusp_angles(int N) {
    if (N < 5 || N % 2 == 0) throw std::invalid_argument("cusp_angles: N must be odd and >= 5");
    const ChebRootList nu = positive_roots_U_prime(N - 2);
    std::vector<double> angles;
    for (double g : nu.mapped()) angles.push_back(std::acos(g));
    std::sort(angles.begin(), angles.end());
    return angles;
}

}  // namespace quadpoly

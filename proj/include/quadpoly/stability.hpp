#pragma once

#include "quadpoly/poly.hpp"
#include "quadpoly/quadrinomial.hpp"

#include <array>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

namespace quadpoly {

/// z^n + a z^{n-1} + b
RealPoly trinomial(int n, double a, double b);

inline constexpr double kStrictnessTolerance = 1e-9;

/// All zeros of z^n + a z^{n-1} + b satisfy |z| < 1 - kStrictnessTolerance.
bool trinomial_in_disk(int n, double a, double b);

/// All zeros satisfy |z| <= 1 + slack.
bool trinomial_in_closed_disk(int n, double a, double b, double slack = kStrictnessTolerance);

struct CurvePoint {
    std::optional<double> t;  ///< parameter for III/IV, empty on the segments I/II
    double a;
    double b;
};

enum class CurveLabel { I, II, III, IV };
std::string_view to_string(CurveLabel c) noexcept;

struct Curve {
    CurveLabel label;
    std::vector<CurvePoint> points;
};

/// Boundary of the region of (a, b) where z^n + a z^{n-1} + b has all zeros in
/// the open unit disk:
///   I:   b = -a - 1,          a in [-n/(n-1), 0]
///   II:  b = (-1)^n (a - 1),  a in [0, n/(n-1)]
///   III: a = -sin nt / sin(n-1)t,  b = sin t / sin(n-1)t
///   IV:  a =  sin nt / sin(n-1)t,  b = (-1)^n sin t / sin(n-1)t
/// with t in [(n-1)pi/n, pi).
struct CurveSet {
    int n = 0;
    std::array<Curve, 4> curves;
    double t_begin = 0.0;
    double t_end = 0.0;

    const Curve& curve(CurveLabel c) const { return curves[static_cast<std::size_t>(c)]; }
};

/// `samples` points per curve. III and IV are sampled at t_k = t0 + k (pi - t0)/samples,
/// k = 0..samples-1, and then closed by the analytic t -> pi limit stored with t = pi.
CurveSet stability_boundary(int n, int samples);

/// Limit of curve III as t -> pi: (n/(n-1), (-1)^n/(n-1)).
CurvePoint corner_point(int n);

/// CSV with header `curve,t,a,b`; t is empty for I and II.
void write_csv(std::ostream& os, const CurveSet& cs);

struct TrinomialParams {
    int n;
    double a;
    double b;
};

/// p'(z)/N for family P is z^n + a z^{n-1} + b with n = N-1,
/// a = k n/(n+1), b = k/(n+1); for Q the sign of b flips (the line b = -a/n).
TrinomialParams quadrinomial_derivative_line(const QuadSpec& spec);

/// Cohn: all zeros of p are on the unit circle iff p is self-reciprocal and
/// every zero of p' lies in |z| <= 1 + tol.
bool cohn_on_circle(const RealPoly& p, double tol = kStrictnessTolerance);

}  // namespace quadpoly

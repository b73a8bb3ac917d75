#include "quadpoly/univalent.hpp"

#include "quadpoly/chebyshev.hpp"
#include "quadpoly/errors.hpp"
#include "quadpoly/format.hpp"
#include "quadpoly/geometry.hpp"
#include "quadpoly/roots.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <ostream>
#include <stdexcept>
#include <string>

namespace quadpoly {

NormalizedPoly::NormalizedPoly(RealPoly p, int n) : poly_(std::move(p)), n_(n) {
    if (poly_[0] != 0.0 || poly_[1] != 1.0) {
        throw std::invalid_argument("NormalizedPoly: expected f(z) = z + a_2 z^2 + ...");
    }
    if (poly_.degree() > n) {
        throw std::invalid_argument("NormalizedPoly: degree " + std::to_string(poly_.degree()) + " exceeds n = " +
                                    std::to_string(n));
    }
}

NormalizedPoly suffridge_transform(const NormalizedPoly& f, int n) {
    if (n < 1 || f.poly().degree() > n) throw std::invalid_argument("suffridge_transform: degree exceeds n");
    std::vector<double> c = f.poly().coeffs();
    for (std::size_t j = 1; j < c.size(); ++j) c[j] *= 1.0 - static_cast<double>(j - 1) / n;
    return NormalizedPoly(RealPoly(std::move(c)), n);
}

RealPoly suffridge_kernel(const NormalizedPoly& f, int n, int k) {
    if (k < 1 || k > n) throw std::invalid_argument("suffridge_kernel: k must be in 1..n");
    if (f.poly().degree() > n) throw std::invalid_argument("suffridge_kernel: degree exceeds n");
    const double alpha = k * std::numbers::pi / (n + 1);
    const double s1 = std::sin(alpha);
    std::vector<double> c(static_cast<std::size_t>(n), 0.0);
    c[0] = 1.0;
    for (int j = 2; j <= n; ++j) {
        // sin(j alpha) vanishes exactly when (n+1) divides j k
        const double sj = (j * k) % (n + 1) == 0 ? 0.0 : std::sin(j * alpha);
        c[j - 1] = f[j] * sj / s1;
    }
    return RealPoly(std::move(c));
}

bool suffridge_membership(const NormalizedPoly& f, int n) {
    for (int k = 1; k <= n; ++k) {
        const RealPoly kernel = suffridge_kernel(f, n, k);
        if (kernel.degree() < 1) continue;
        const RootSet rs = find_roots(kernel);
        for (const auto& r : rs.roots) {
            if (std::abs(r.value) < 1.0 - 1e-9) return false;
        }
    }
    return true;
}

NormalizedPoly fejer(int n) {
    if (n < 1) throw std::invalid_argument("fejer: n must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(n) + 1, 0.0);
    for (int j = 1; j <= n; ++j) c[j] = 1.0 - static_cast<double>(j - 1) / n;
    return NormalizedPoly(RealPoly(std::move(c)), n);
}

FactoredForm fejer_derivative_factored(int N) {
    if (N < 2) throw std::invalid_argument("fejer_derivative_factored: N must be >= 2");
    FactoredForm f;
    if (N % 2 == 0) f.linear.push_back({-1, 1});
    for (double g : positive_roots_U_prime(N).mapped()) f.quadratics.push_back(-g);
    return f;
}

RealPoly fejer_derivative_numerator(int N) {
    if (N < 1) throw std::invalid_argument("fejer_derivative_numerator: N must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(N) + 3, 0.0);
    const double r = (N + 2.0) / N;
    c[0] = 1.0;
    c[1] = -r;
    c[N + 1] = r;
    c[N + 2] = -1.0;
    return RealPoly(std::move(c));
}

NormalizedPoly alexander(int N) {
    if (N < 1) throw std::invalid_argument("alexander: N must be >= 1");
    std::vector<double> c(static_cast<std::size_t>(N) + 1, 0.0);
    for (int j = 1; j <= N; ++j) c[j] = 1.0 / j;
    return NormalizedPoly(RealPoly(std::move(c)), N);
}

FactoredForm alexander_derivative_factored(int N) {
    if (N < 1) throw std::invalid_argument("alexander_derivative_factored: N must be >= 1");
    FactoredForm f;
    if (N % 2 == 0) f.linear.push_back({-1, 1});
    if (N >= 2) {
        for (double b : positive_roots_U(N - 1).mapped()) f.quadratics.push_back(-b);
    }
    return f;
}

namespace {

double tail_weight(int j, int N) { return 1.0 - 2.0 * (j - 1) / (N - 2.0); }

void require_odd(int N, const char* what) {
    if (N % 2 == 0) throw ParityMismatch(std::string(what) + ": N must be odd, got " + std::to_string(N));
    if (N < 5) throw std::invalid_argument(std::string(what) + ": N must be >= 5");
}

}  // namespace

NormalizedPoly tilde_p(int N) {
    require_odd(N, "tilde_p");
    std::vector<double> c(static_cast<std::size_t>(N), 0.0);
    for (int j = 1; j <= (N - 1) / 2; ++j) {
        const double w = (j % 2 == 1 ? 1.0 : -1.0) * tail_weight(j, N);
        c[j] += w;
        c[N - j] += w;
    }
    return NormalizedPoly(RealPoly(std::move(c)), N - 1);
}

NormalizedPoly F_family(int s, int N) {
    if (s < 0 || s > 4) throw std::invalid_argument("F_family: s must be in 0..4");
    const bool wants_odd = s <= 2;
    if ((N % 2 != 0) != wants_odd) {
        throw ParityMismatch("F_family: s=" + std::to_string(s) + " requires " + (wants_odd ? "odd" : "even") +
                             " N, got " + std::to_string(N));
    }
    if (N < (wants_odd ? 5 : 6)) throw std::invalid_argument("F_family: N too small");

    const int terms = wants_odd ? (N - 1) / 2 : (N - 2) / 2;
    const double mirror_sign = (s == 1 || s == 3) ? -1.0 : 1.0;
    std::vector<double> c(static_cast<std::size_t>(N), 0.0);
    for (int j = 1; j <= terms; ++j) {
        const double alt = (s == 0 && j % 2 == 0) ? -1.0 : 1.0;
        const double w = alt * tail_weight(j, N);
        c[j] += w * (N - j) / (N - 1.0);
        c[N - j] += mirror_sign * w * j / (N - 1.0);
    }
    return NormalizedPoly(RealPoly(std::move(c)), N - 1);
}

RealPoly phi_k(int N, int k) {
    require_odd(N, "phi_k");
    if (k < 1 || k > N) throw std::invalid_argument("phi_k: k must be in 1..N");
    const double sk = k % 2 == 0 ? 1.0 : -1.0;  // (-1)^k
    const double lin = 2.0 * N / (N - 2.0) * std::cos(k * std::numbers::pi / N);
    const double quad = (N + 2.0) / (N - 2.0);
    std::vector<double> c(static_cast<std::size_t>(N) + 3, 0.0);
    c[0] = 1.0;
    c[N + 2] = -sk;
    c[1] = lin;
    c[N + 1] = -sk * lin;
    c[2] += quad;
    c[N] += -sk * quad;
    return RealPoly(std::move(c));
}

RealPoly quasi_extremal_W(int N) {
    require_odd(N, "quasi_extremal_W");
    const double a = (N - 1.0) * (N - 2.0);
    const double b = 2.0 * (N - 2.0) * (N + 2.0);
    const double c2 = (N + 1.0) * (N + 2.0);
    std::vector<double> c(static_cast<std::size_t>(N) + 3, 0.0);
    c[0] = c[N + 2] = a;
    c[1] = c[N + 1] = b;
    c[2] = c[N] = c2;
    return RealPoly(std::move(c));
}

QuasiExtremalReport check_quasi_extremal(int N) {
    const RealPoly W = quasi_extremal_W(N);
    const double scale = W.max_abs_coeff();

    QuasiExtremalReport rep;
    RealPoly d = W;
    for (std::size_t m = 0; m < rep.derivatives_at_minus_one.size(); ++m) {
        rep.derivatives_at_minus_one[m] = std::abs(eval(d, -1.0)) / scale;
        d = derivative(d);
    }

    const RealPoly rest = deflate(W, -1, 5);
    rep.deflated_degree = rest.degree();
    rep.deflated_worst_deviation = rest.degree() >= 1 ? max_circle_deviation(find_roots(rest)) : 0.0;

    const RealPoly one_plus_z4 = RealPoly{1.0, 4.0, 6.0, 4.0, 1.0};
    const RealPoly lhs = ((N - 1.0) * (N - 2.0)) * multiply(derivative(F_family(0, N).poly()), one_plus_z4);
    rep.identity_deviation = max_coeff_distance(lhs, W);
    return rep;
}

BoundaryImage boundary_image(const RealPoly& f, int resolution) {
    if (resolution < 16) throw std::invalid_argument("boundary_image: resolution must be >= 16");
    BoundaryImage img;
    img.resolution = resolution;
    img.samples.reserve(static_cast<std::size_t>(resolution));
    for (int k = 0; k < resolution; ++k) {
        const double t = 2.0 * std::numbers::pi * k / resolution;
        img.samples.push_back({t, eval(f, std::polar(1.0, t))});
    }
    return img;
}

bool simple_curve_scan(const BoundaryImage& img) {
    const std::size_t n = img.samples.size();
    if (n < 4) return true;
    std::vector<Point2> pts(n);
    for (std::size_t i = 0; i < n; ++i) pts[i] = {img.samples[i].w.real(), img.samples[i].w.imag()};

    // edge i joins pts[i] and pts[(i+1) % n]
    for (std::size_t i = 0; i < n; ++i) {
        const Point2 a = pts[i];
        const Point2 b = pts[(i + 1) % n];
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            if (segments_touch(a, b, pts[j], pts[(j + 1) % n])) return false;
        }
    }
    return true;
}

void write_csv(std::ostream& os, const BoundaryImage& img) {
    os << "t,re,im\n";
    for (const auto& s : img.samples) {
        os << format_double(s.t) << ',' << format_double(s.w.real()) << ',' << format_double(s.w.imag()) << '\n';
    }
}

}  // namespace quadpoly

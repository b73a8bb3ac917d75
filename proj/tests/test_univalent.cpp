#include <doctest.h>

#include "oracles.hpp"
#include "quadpoly/errors.hpp"
#include "quadpoly/quadrinomial.hpp"
#include "quadpoly/univalent.hpp"

#include <numbers>
#include <random>
#include <sstream>

using namespace quadpoly;

namespace {

void check_coeffs(const RealPoly& p, const std::vector<double>& expected, double tol = 1e-15) {
    REQUIRE(p.coeffs().size() == expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) CHECK(std::abs(p[j] - expected[j]) <= tol);
}

NormalizedPoly geometric(int n) { return NormalizedPoly(RealPoly(std::vector<double>(n + 1, 1.0)) - RealPoly{1.0}, n); }

double worst_circle_deviation(const RealPoly& p) {
    double w = 0.0;
    for (const auto& z : oracle::companion_roots(p.coeffs())) w = std::max(w, std::abs(std::abs(z) - 1.0));
    return w;
}

/// Segment-intersection scan by brute force with a plain floating-point
/// orientation test; used only on curves far from degenerate.
bool naive_simple(const BoundaryImage& img) {
    const auto& s = img.samples;
    const std::size_t n = s.size();
    auto orient = [](Complex a, Complex b, Complex c) {
        const double d = (b.real() - a.real()) * (c.imag() - a.imag()) - (b.imag() - a.imag()) * (c.real() - a.real());
        return (d > 0) - (d < 0);
    };
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            const Complex a = s[i].w, b = s[(i + 1) % n].w, c = s[j].w, d = s[(j + 1) % n].w;
            if (orient(a, b, c) * orient(a, b, d) <= 0 && orient(c, d, a) * orient(c, d, b) <= 0) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("NormalizedPoly validation") {
    CHECK_NOTHROW(NormalizedPoly(RealPoly{0, 1, 0.5}, 2));
    CHECK_THROWS_AS(NormalizedPoly(RealPoly{0, 2, 0.5}, 2), std::invalid_argument);
    CHECK_THROWS_AS(NormalizedPoly(RealPoly{1, 1}, 2), std::invalid_argument);
    CHECK_THROWS_AS(NormalizedPoly(RealPoly{0, 1, 0, 1}, 2), std::invalid_argument);
}

TEST_CASE("suffridge_transform") {
    CHECK(suffridge_transform(NormalizedPoly(RealPoly{0, 1}, 5), 5).poly() == RealPoly{0, 1});
    check_coeffs(suffridge_transform(NormalizedPoly(RealPoly{0, 1, 1}, 2), 2).poly(), {0, 1, 0.5});
    for (int n = 1; n <= 20; ++n)
        CHECK(max_coeff_distance(suffridge_transform(geometric(n), n).poly(), fejer(n).poly()) == 0.0);
}

TEST_CASE("suffridge_transform is linear") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + trial % 10;
        std::vector<double> f(n + 1), g(n + 1);
        for (int j = 2; j <= n; ++j) {
            f[j] = u(rng);
            g[j] = u(rng);
        }
        f[1] = g[1] = 1.0;
        const double alpha = u(rng), beta = 1.0 - alpha;
        std::vector<double> h(n + 1);
        for (int j = 0; j <= n; ++j) h[j] = alpha * f[j] + beta * g[j];
        h[1] = 1.0;
        const RealPoly lhs = suffridge_transform(NormalizedPoly(RealPoly(h), n), n).poly();
        const RealPoly rhs = alpha * suffridge_transform(NormalizedPoly(RealPoly(f), n), n).poly() +
                             beta * suffridge_transform(NormalizedPoly(RealPoly(g), n), n).poly();
        CHECK(max_coeff_distance(lhs, rhs) <= 1e-15);
    }
}

TEST_CASE("suffridge_kernel") {
    // Kernel of the geometric sum: (1 - (-1)^k z^{n+1}) / (1 + z^2 - 2z cos alpha_k).
    for (int n = 2; n <= 9; ++n) {
        for (int k = 1; k <= n; ++k) {
            const RealPoly K = suffridge_kernel(geometric(n), n, k);
            const double c = std::cos(k * std::numbers::pi / (n + 1));
            std::vector<double> num(n + 2, 0.0);
            num[0] = 1.0;
            num[n + 1] = k % 2 == 0 ? -1.0 : 1.0;
            const RealPoly prod = K * RealPoly{1.0, -2.0 * c, 1.0};
            CHECK(max_coeff_distance(prod, RealPoly(num)) <= 1e-12);
        }
    }
    check_coeffs(suffridge_kernel(NormalizedPoly(RealPoly{0, 1, 2}, 2), 2, 1), {1, 2});
    CHECK_THROWS_AS(suffridge_kernel(geometric(3), 3, 0), std::invalid_argument);
    CHECK_THROWS_AS(suffridge_kernel(geometric(3), 3, 4), std::invalid_argument);
}

TEST_CASE("suffridge_membership") {
    CHECK(suffridge_membership(geometric(3), 3));
    CHECK(suffridge_membership(NormalizedPoly(RealPoly{0, 1}, 1), 1));
    CHECK_FALSE(suffridge_membership(NormalizedPoly(RealPoly{0, 1, 2}, 2), 2));
    for (int n = 1; n <= 15; ++n) CHECK_MESSAGE(suffridge_membership(geometric(n), n), "n=" << n);
    for (int n = 2; n <= 15; ++n) CHECK(suffridge_membership(fejer(n), n));
}

TEST_CASE("fejer") {
    check_coeffs(fejer(2).poly(), {0, 1, 0.5});
    check_coeffs(fejer(3).poly(), {0, 1, 2.0 / 3, 1.0 / 3});
    const FactoredForm f2 = fejer_derivative_factored(2);
    CHECK(f2.linear == std::vector<LinearFactor>{{-1, 1}});
    CHECK(f2.quadratics.empty());
    const FactoredForm f3 = fejer_derivative_factored(3);
    CHECK(f3.linear.empty());
    REQUIRE(f3.quadratics.size() == 1);
    CHECK(f3.quadratics[0] == doctest::Approx(-2.0 / 3).epsilon(1e-14));
    check_coeffs(f3.expand(), {1, 4.0 / 3, 1}, 1e-14);
    CHECK_THROWS_AS(fejer(0), std::invalid_argument);
    CHECK_THROWS_AS(fejer_derivative_factored(1), std::invalid_argument);
}

TEST_CASE("fejer derivative identities up to N = 60") {
    const RealPoly one_minus_z_cubed{1, -3, 3, -1};
    for (int N = 2; N <= 60; ++N) {
        const RealPoly d = derivative(fejer(N).poly());
        CHECK(max_coeff_distance(fejer_derivative_factored(N).expand(), d) <= 1e-10);
        CHECK(max_coeff_distance(one_minus_z_cubed * d, fejer_derivative_numerator(N)) <= 1e-10);
        const double r = (N + 2.0) / N;
        const RealPoly numerator = fejer_derivative_numerator(N);
        CHECK(numerator[0] == 1.0);
        CHECK(numerator[1] == doctest::Approx(-r));
        CHECK(numerator[N + 1] == doctest::Approx(r));
        CHECK(numerator[N + 2] == -1.0);
    }
}

TEST_CASE("alexander") {
    check_coeffs(alexander(3).poly(), {0, 1, 0.5, 1.0 / 3});
    const FactoredForm a3 = alexander_derivative_factored(3);
    REQUIRE(a3.quadratics.size() == 1);
    CHECK(a3.quadratics[0] == doctest::Approx(-0.5).epsilon(1e-14));
    check_coeffs(a3.expand(), {1, 1, 1}, 1e-14);
    const FactoredForm a2 = alexander_derivative_factored(2);
    CHECK(a2.linear == std::vector<LinearFactor>{{-1, 1}});
    check_coeffs(a2.expand(), {1, 1});
    const FactoredForm a1 = alexander_derivative_factored(1);
    CHECK(a1.linear.empty());
    CHECK(a1.quadratics.empty());
    check_coeffs(a1.expand(), {1});
    for (int N = 1; N <= 60; ++N)
        CHECK(max_coeff_distance(alexander_derivative_factored(N).expand(), derivative(alexander(N).poly())) <= 1e-10);
}

TEST_CASE("tilde_p") {
    check_coeffs(tilde_p(5).poly(), {0, 1, -1.0 / 3, -1.0 / 3, 1});
    for (int N = 5; N <= 41; N += 2) {
        const NormalizedPoly t = tilde_p(N);
        CHECK(t[1] == 1.0);
        const RealPoly p = build_quadrinomial(QuadSpec(Family::P, Kappa::exact(N, N - 2), N));
        const RealPoly lhs = RealPoly{1, 2, 1} * t.poly();
        const RealPoly rhs = RealPoly{0, 1} * p;
        CHECK(max_coeff_distance(lhs, rhs) <= 1e-12);
    }
    CHECK_THROWS_AS(tilde_p(6), ParityMismatch);
    CHECK_THROWS_AS(tilde_p(3), std::invalid_argument);
}

TEST_CASE("F_family") {
    check_coeffs(F_family(0, 5).poly(), {0, 1, -0.25, -1.0 / 6, 0.25});
    check_coeffs(F_family(1, 5).poly(), {0, 1, 0.25, -1.0 / 6, -0.25});
    CHECK_THROWS_AS(F_family(3, 5), ParityMismatch);
    CHECK_THROWS_AS(F_family(0, 6), ParityMismatch);
    CHECK_THROWS_AS(F_family(5, 5), std::invalid_argument);
    CHECK_THROWS_AS(F_family(3, 4), std::invalid_argument);
    for (int N = 5; N <= 41; N += 2) {
        const NormalizedPoly F = F_family(0, N);
        CHECK(F.n() == N - 1);
        CHECK(max_coeff_distance(F.poly(), suffridge_transform(tilde_p(N), N - 1).poly()) <= 1e-13);
        CHECK(max_coeff_distance(F_family(1, N).poly(), -1.0 * reflect(F.poly())) == 0.0);
        for (int s : {0, 1, 2}) CHECK(F_family(s, N).poly().degree() == N - 1);
    }
    for (int N = 6; N <= 40; N += 2)
        for (int s : {3, 4}) CHECK(F_family(s, N).poly().degree() == N - 1);
}

TEST_CASE("phi_k") {
    check_coeffs(phi_k(5, 5), {1, -10.0 / 3, 7.0 / 3, 0, 0, 7.0 / 3, -10.0 / 3, 1}, 1e-15);
    for (int N = 5; N <= 21; N += 2)
        for (int k = 1; k <= N; ++k) {
            CHECK(phi_k(N, k)[0] == 1.0);
            CHECK(phi_k(N, k).degree() == N + 2);
        }
    CHECK_THROWS_AS(phi_k(5, 0), std::invalid_argument);
    CHECK_THROWS_AS(phi_k(5, 6), std::invalid_argument);
    CHECK_THROWS_AS(phi_k(6, 1), ParityMismatch);
}

TEST_CASE("phi_k zeros lie on the circle for k < N") {
    for (int N = 5; N <= 21; N += 2) {
        for (int k = 1; k < N; ++k) {
            const RootSet rs = find_roots(phi_k(N, k));
            CHECK_MESSAGE(max_circle_deviation(rs) <= 1e-5, "N=" << N << " k=" << k);
            CHECK(worst_circle_deviation(phi_k(N, k)) <= 1e-5);
        }
    }
}

TEST_CASE("phi_k at k = N has a double zero at 1 and a real pair off the circle") {
    for (int N = 5; N <= 21; N += 2) {
        const RealPoly p = phi_k(N, N);
        CHECK(std::abs(eval(p, 1.0)) <= 1e-12);
        CHECK(std::abs(eval(derivative(p), 1.0)) <= 1e-11);
        const RootSet rs = find_roots(p);
        CHECK(max_circle_deviation(rs) > 0.1);
        CHECK(worst_circle_deviation(p) > 0.1);
    }
}

TEST_CASE("quasi_extremal_W") {
    check_coeffs(quasi_extremal_W(5), {12, 42, 42, 0, 0, 42, 42, 12});
    CHECK(eval(quasi_extremal_W(5), -1.0) == 0.0);
    CHECK_THROWS_AS(quasi_extremal_W(6), ParityMismatch);
    for (int N = 5; N <= 21; N += 2) {
        const RealPoly W = quasi_extremal_W(N);
        const double scale = W.max_abs_coeff();
        RealPoly d = W;
        for (int m = 0; m <= 4; ++m) {
            CHECK(std::abs(eval(d, -1.0)) <= 1e-8 * scale);
            d = derivative(d);
        }
        CHECK(std::abs(eval(d, -1.0)) > 1e-3 * scale);

        const QuasiExtremalReport rep = check_quasi_extremal(N);
        for (int m = 0; m < 5; ++m) CHECK(rep.derivatives_at_minus_one[m] <= 1e-8);
        CHECK(rep.derivatives_at_minus_one[5] > 1e-3);
        CHECK(rep.deflated_degree == N - 3);
        CHECK(rep.deflated_worst_deviation <= 1e-5);
        CHECK(rep.identity_deviation <= 1e-10);

        const RealPoly q = deflate(W, -1, 5);
        CHECK(worst_circle_deviation(q) <= 1e-5);
    }
}

TEST_CASE("boundary_image and simple_curve_scan") {
    const BoundaryImage circle = boundary_image(RealPoly{0, 1}, 64);
    CHECK(circle.resolution == 64);
    REQUIRE(circle.samples.size() == 64);
    CHECK(circle.samples[0].t == 0.0);
    for (std::size_t k = 1; k < circle.samples.size(); ++k) {
        CHECK(circle.samples[k].t > circle.samples[k - 1].t);
        CHECK(circle.samples[k].t == doctest::Approx(2 * std::numbers::pi * k / 64));
    }
    CHECK(simple_curve_scan(circle));
    CHECK(simple_curve_scan(boundary_image(RealPoly{0, 1})));
    for (int res : {64, 256, 4096}) CHECK_FALSE(simple_curve_scan(boundary_image(RealPoly{0, 0, 1}, res)));
    CHECK_THROWS_AS(boundary_image(RealPoly{0, 1}, 15), std::invalid_argument);

    // Fejer polynomials are univalent; a large coefficient creates a loop.
    CHECK(simple_curve_scan(boundary_image(fejer(6).poly(), 512)));
    CHECK_FALSE(simple_curve_scan(boundary_image(RealPoly{0, 1, 0, 0.9}, 512)));
}

TEST_CASE("simple_curve_scan agrees with a brute-force scan") {
    std::mt19937_64 rng(99);
    std::uniform_real_distribution<double> u(-0.6, 0.6);
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> c{0, 1, u(rng), u(rng), u(rng)};
        const BoundaryImage img = boundary_image(RealPoly(c), 128);
        CHECK(simple_curve_scan(img) == naive_simple(img));
    }
}

TEST_CASE("F families pass the boundary scan") {
    for (int s : {0, 1, 2}) CHECK(simple_curve_scan(boundary_image(F_family(s, 11).poly())));
    for (int s : {3, 4}) CHECK(simple_curve_scan(boundary_image(F_family(s, 12).poly())));
}

TEST_CASE("BoundaryImage CSV") {
    std::ostringstream os;
    write_csv(os, boundary_image(RealPoly{0, 1}, 16));
    std::istringstream is(os.str());
    std::string line;
    std::getline(is, line);
    CHECK(line == "t,re,im");
    std::getline(is, line);
    CHECK(line == "0,1,0");
    int rows = 1;
    while (std::getline(is, line)) ++rows;
    CHECK(rows == 16);
}

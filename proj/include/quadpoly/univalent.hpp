#pragma once

#include "quadpoly/factored.hpp"
#include "quadpoly/poly.hpp"

#include <array>
#include <iosfwd>
#include <vector>

namespace quadpoly {

/// f(z) = z + sum_{j=2}^{n} a_j z^j, with declared degree bound n.
class NormalizedPoly {
public:
    /// Throws std::invalid_argument unless p[0] == 0, p[1] == 1 and deg p <= n.
    NormalizedPoly(RealPoly p, int n);

    const RealPoly& poly() const noexcept { return poly_; }
    int n() const noexcept { return n_; }
    double operator[](std::size_t j) const noexcept { return poly_[j]; }

private:
    RealPoly poly_;
    int n_;
};

/// f* = ((n+1)/n) f - (1/n) z f', i.e. a_j -> (1 - (j-1)/n) a_j.
NormalizedPoly suffridge_transform(const NormalizedPoly& f, int n);

/// 1 + sum_{j=2}^{n} a_j (sin j alpha / sin alpha) z^{j-1},  alpha = k pi/(n+1).
RealPoly suffridge_kernel(const NormalizedPoly& f, int n, int k);

/// True iff no kernel k = 1..n has a zero with |z| < 1 - 1e-9.
bool suffridge_membership(const NormalizedPoly& f, int n);

/// sigma_n(z) = sum_{j=1}^{n} (1 - (j-1)/n) z^j
NormalizedPoly fejer(int n);

/// sigma'_N = prod [1 + z^2 + 2 g z]            (N odd)
///          = (1+z) prod [1 + z^2 + 2 g z]      (N even)
/// with g = 1 - 2 nu^2 over the positive zeros nu of U'_N.
FactoredForm fejer_derivative_factored(int N);

/// 1 - ((N+2)/N) z + ((N+2)/N) z^{N+1} - z^{N+2}, which equals (1-z)^3 sigma'_N(z).
RealPoly fejer_derivative_numerator(int N);

/// w_N(z) = sum_{j=1}^{N} z^j / j
NormalizedPoly alexander(int N);

/// w'_N with cosines 1 - 2 mu^2 over the positive zeros mu of U_{N-1};
/// an extra (1+z) for even N.
FactoredForm alexander_derivative_factored(int N);

/// sum_{j=1}^{(N-1)/2} (-1)^{j-1} (1 - 2(j-1)/(N-2)) (z^j + z^{N-j}); N odd >= 5.
/// (1+z)^2 tilde_p(z) = z p(z) with p the quadrinomial at k = N/(N-2).
NormalizedPoly tilde_p(int N);

/// s = 0: F, the Suffridge transform of tilde_p (N odd).
/// s = 1, 2: N odd; s = 3, 4: N even. s = 1 equals -F(-z).
/// Throws ParityMismatch when the parity of N does not fit s.
NormalizedPoly F_family(int s, int N);

/// (1 - (-1)^k z^{N+2}) + (2N/(N-2)) cos(k pi/N) (z - (-1)^k z^{N+1})
///   + ((N+2)/(N-2)) (z^2 - (-1)^k z^N)
RealPoly phi_k(int N, int k);

/// (N-1)(N-2)(1 + z^{N+2}) + 2(N-2)(N+2)(z + z^{N+1}) + (N+1)(N+2)(z^2 + z^N)
RealPoly quasi_extremal_W(int N);

struct QuasiExtremalReport {
    /// |W^(m)(-1)| / |W|_inf for m = 0..5
    std::array<double, 6> derivatives_at_minus_one{};
    int deflated_degree = 0;
    double deflated_worst_deviation = 0.0;  ///< max | |z| - 1 | over roots of W/(1+z)^5
    double identity_deviation = 0.0;        ///< |F' (N-1)(N-2)(1+z)^4 - W|_inf
};

QuasiExtremalReport check_quasi_extremal(int N);

struct BoundarySample {
    double t;
    Complex w;
};

struct BoundaryImage {
    std::vector<BoundarySample> samples;
    int resolution = 0;
};

inline constexpr int kDefaultBoundaryResolution = 4096;

/// f(e^{it}) at t = 2 pi k / resolution, k = 0..resolution-1. resolution >= 16.
BoundaryImage boundary_image(const RealPoly& f, int resolution = kDefaultBoundaryResolution);

/// True iff no two non-adjacent edges of the closed sampled polyline touch.
/// A necessary condition for univalence at this resolution, not a proof.
bool simple_curve_scan(const BoundaryImage& img);

/// CSV with header `t,re,im`.
void write_csv(std::ostream& os, const BoundaryImage& img);

}  // namespace quadpoly

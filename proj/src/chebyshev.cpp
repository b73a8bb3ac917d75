#include "quadpoly/chebyshev.hpp"

#include "quadpoly/errors.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace quadpoly {

double cheb_U(int n, double x) {
    if (n < -1) throw std::invalid_argument("cheb_U: degree below -1");
    if (n == -1) return 0.0;
    double prev = 1.0;
    if (n == 0) return prev;
    double cur = 2.0 * x;
    for (int k = 1; k < n; ++k) {
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

double cheb_U_prime(int n, double x) {
    if (n < 0) throw std::invalid_argument("cheb_U_prime: negative degree");
    if (n == 0) return 0.0;
    if (std::abs(std::abs(x) - 1.0) <= kChebEndpointSwitch) {
        const double limit = static_cast<double>(n) * (n + 1) * (n + 2) / 3.0;
        return (x < 0.0 && (n - 1) % 2 != 0) ? -limit : limit;
    }
    return ((n + 2) * cheb_U(n - 1, x) - n * cheb_U(n + 1, x)) / (2.0 * (1.0 - x * x));
}

ChebRootList::ChebRootList(ChebKind kind, int n, std::vector<double> values)
    : kind_(kind), n_(n), values_(std::move(values)) {
    for (std::size_t j = 0; j < values_.size(); ++j) {
        if (!(values_[j] > 0.0 && values_[j] < 1.0)) throw std::invalid_argument("ChebRootList: value outside (0,1)");
        if (j > 0 && !(values_[j] < values_[j - 1])) throw std::invalid_argument("ChebRootList: not strictly descending");
    }
}

double ChebRootList::mapped(std::size_t j) const { return 1.0 - 2.0 * values_.at(j) * values_.at(j); }

std::vector<double> ChebRootList::mapped() const {
    std::vector<double> m(values_.size());
    for (std::size_t j = 0; j < values_.size(); ++j) m[j] = mapped(j);
    return m;
}

namespace {

double zero_of_U(int n, int j) { return std::cos(j * std::numbers::pi / (n + 1)); }

/// U''_n from the differential equation (1-x^2) U'' - 3x U' + n(n+2) U = 0.
double cheb_U_second(int n, double x) {
    return (3.0 * x * cheb_U_prime(n, x) - n * (n + 2.0) * cheb_U(n, x)) / (1.0 - x * x);
}

double bracketed_newton(int n, double lo, double hi) {
    double f_lo = cheb_U_prime(n, lo);
    const double f_hi = cheb_U_prime(n, hi);
    if (f_lo == 0.0) return lo;
    if (f_hi == 0.0) return hi;
    if ((f_lo > 0.0) == (f_hi > 0.0)) {
        throw BracketFailure("positive_roots_U_prime: no sign change of U'_" + std::to_string(n) + " on [" +
                             std::to_string(lo) + ", " + std::to_string(hi) + "]");
    }
    double x = 0.5 * (lo + hi);
    for (int it = 0; it < 100; ++it) {
        const double f = cheb_U_prime(n, x);
        if (f == 0.0) return x;
        if ((f > 0.0) == (f_lo > 0.0)) {
            lo = x;
            f_lo = f;
        } else {
            hi = x;
        }
        const double d = cheb_U_second(n, x);
        double next = d != 0.0 ? x - f / d : lo - 1.0;
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - x) <= 1e-16 * std::abs(x) || hi - lo <= 4e-16 * std::abs(hi)) return next;
        x = next;
    }
    return x;
}

}  // namespace

ChebRootList positive_roots_U(int n) {
    if (n < 1) throw std::invalid_argument("positive_roots_U: n must be >= 1");
    std::vector<double> v;
    for (int j = 1; 2 * j < n + 1; ++j) v.push_back(zero_of_U(n, j));
    return ChebRootList(ChebKind::U, n, std::move(v));
}

ChebRootList positive_roots_U_prime(int n) {
    if (n < 2) throw std::invalid_argument("positive_roots_U_prime: n must be >= 2");
    std::vector<double> v;
    // bracket j lies between the j-th and (j+1)-th zero of U_n (descending);
    // for even n the bracket straddling 0 holds the zero x = 0 and is skipped
    for (int j = 1; 2 * j <= n - 1; ++j) {
        const double hi = zero_of_U(n, j);
        const double lo = (2 * (j + 1) == n + 1) ? 0.0 : zero_of_U(n, j + 1);
        v.push_back(bracketed_newton(n, lo, hi));
    }
    return ChebRootList(ChebKind::U_prime, n, std::move(v));
}

}  // namespace quadpoly

#include "quadpoly/poly.hpp"

#include "quadpoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace quadpoly {

RealPoly::RealPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    for (double c : coeffs_) {
        if (!std::isfinite(c)) throw std::invalid_argument("RealPoly: non-finite coefficient");
    }
    while (!coeffs_.empty() && coeffs_.back() == 0.0) coeffs_.pop_back();
}

RealPoly RealPoly::monomial(double c, std::size_t k) {
    std::vector<double> v(k + 1, 0.0);
    v[k] = c;
    return RealPoly(std::move(v));
}

double RealPoly::lead() const {
    if (coeffs_.empty()) throw std::invalid_argument("RealPoly: zero polynomial has no leading coefficient");
    return coeffs_.back();
}

double RealPoly::max_abs_coeff() const noexcept {
    double m = 0.0;
    for (double c : coeffs_) m = std::max(m, std::abs(c));
    return m;
}

RealPoly operator+(const RealPoly& p, const RealPoly& q) {
    std::vector<double> r(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = p[j] + q[j];
    return RealPoly(std::move(r));
}

RealPoly operator-(const RealPoly& p, const RealPoly& q) {
    std::vector<double> r(std::max(p.coeffs().size(), q.coeffs().size()), 0.0);
    for (std::size_t j = 0; j < r.size(); ++j) r[j] = p[j] - q[j];
    return RealPoly(std::move(r));
}

RealPoly operator*(double s, const RealPoly& p) {
    std::vector<double> r = p.coeffs();
    for (double& c : r) c *= s;
    return RealPoly(std::move(r));
}

Complex eval(const RealPoly& p, Complex z) {
    if (p.is_zero()) throw std::invalid_argument("eval: zero polynomial");
    const auto& c = p.coeffs();
    Complex acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * z + c[j];
    return acc;
}

double eval(const RealPoly& p, double x) {
    if (p.is_zero()) throw std::invalid_argument("eval: zero polynomial");
    const auto& c = p.coeffs();
    double acc = c.back();
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * x + c[j];
    return acc;
}

RealPoly derivative(const RealPoly& p) {
    if (p.degree() < 1) return RealPoly{};
    std::vector<double> d(p.coeffs().size() - 1);
    for (std::size_t j = 1; j < p.coeffs().size(); ++j) d[j - 1] = static_cast<double>(j) * p[j];
    return RealPoly(std::move(d));
}

RealPoly multiply(const RealPoly& p, const RealPoly& q) {
    if (p.is_zero() || q.is_zero()) return RealPoly{};
    // Fixed operand order so that multiply(p, q) and multiply(q, p) round identically.
    const bool swap = p.coeffs().size() != q.coeffs().size() ? p.coeffs().size() > q.coeffs().size()
                                                             : p.coeffs() > q.coeffs();
    const auto& a = swap ? q.coeffs() : p.coeffs();
    const auto& b = swap ? p.coeffs() : q.coeffs();
    std::vector<double> r(a.size() + b.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    return RealPoly(std::move(r));
}

RealPoly reflect(const RealPoly& p) {
    std::vector<double> r = p.coeffs();
    for (std::size_t j = 1; j < r.size(); j += 2) r[j] = -r[j];
    return RealPoly(std::move(r));
}

double max_coeff_distance(const RealPoly& p, const RealPoly& q) {
    const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size());
    double m = 0.0;
    for (std::size_t j = 0; j < n; ++j) m = std::max(m, std::abs(p[j] - q[j]));
    return m;
}

RealPoly deflate(const RealPoly& p, int root, int multiplicity) {
    if (root != 1 && root != -1) throw std::invalid_argument("deflate: root must be +1 or -1");
    if (multiplicity < 0) throw std::invalid_argument("deflate: negative multiplicity");
    if (p.degree() < multiplicity) throw RootNotPresent("deflate: multiplicity exceeds degree");

    const double tol = kDeflationTolerance * (1.0 + p.max_abs_coeff());
    std::vector<double> c = p.coeffs();
    for (int stage = 0; stage < multiplicity; ++stage) {
        // synthetic division by (z - root), from the top coefficient down
        const std::size_t n = c.size() - 1;
        std::vector<double> quotient(n);
        double carry = 0.0;
        for (std::size_t j = n; j-- > 0;) {
            carry = c[j + 1] + carry * root;
            quotient[j] = carry;
        }
        const double remainder = c[0] + carry * root;
        if (std::abs(remainder) > tol) {
            throw RootNotPresent("deflate: remainder " + std::to_string(remainder) + " at stage " +
                                 std::to_string(stage + 1) + " exceeds tolerance");
        }
        c = std::move(quotient);
    }
    return RealPoly(std::move(c));
}

Reciprocity self_reciprocal_sign(const RealPoly& p, double tol) {
    if (p.is_zero()) throw std::invalid_argument("self_reciprocal_sign: zero polynomial");
    const auto& c = p.coeffs();
    const std::size_t n = c.size() - 1;
    bool plus = true;
    bool minus = true;
    for (std::size_t j = 0; j <= n; ++j) {
        if (std::abs(c[j] - c[n - j]) > tol) plus = false;
        if (std::abs(c[j] + c[n - j]) > tol) minus = false;
    }
    if (plus) return Reciprocity::plus;
    if (minus) return Reciprocity::minus;
    return Reciprocity::none;
}

const char* to_string(Reciprocity r) noexcept {
    switch (r) {
        case Reciprocity::plus: return "+1";
        case Reciprocity::minus: return "-1";
        case Reciprocity::none: return "none";
    }
    return "none";
}

}  // namespace quadpoly

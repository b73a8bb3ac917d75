#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

namespace quadpoly {

using Complex = std::complex<double>;

/// Dense real polynomial, coefficients in ascending degree: coeffs()[j] multiplies z^j.
///
/// Trailing exact zeros are stripped on construction, so the last stored
/// coefficient is always nonzero. The zero polynomial has no coefficients
/// and degree -1.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> coeffs);
    RealPoly(std::initializer_list<double> coeffs) : RealPoly(std::vector<double>(coeffs)) {}

    /// c * z^k
    static RealPoly monomial(double c, std::size_t k);

    const std::vector<double>& coeffs() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }

    /// Coefficient of z^j; zero beyond the degree.
    double operator[](std::size_t j) const noexcept { return j < coeffs_.size() ? coeffs_[j] : 0.0; }

    double lead() const;
    double max_abs_coeff() const noexcept;

    friend bool operator==(const RealPoly&, const RealPoly&) = default;

private:
    std::vector<double> coeffs_;
};

RealPoly operator+(const RealPoly& p, const RealPoly& q);
RealPoly operator-(const RealPoly& p, const RealPoly& q);
RealPoly operator*(double s, const RealPoly& p);

/// Horner evaluation. Precondition: p nonempty.
Complex eval(const RealPoly& p, Complex z);
double eval(const RealPoly& p, double x);

RealPoly derivative(const RealPoly& p);
RealPoly multiply(const RealPoly& p, const RealPoly& q);
inline RealPoly operator*(const RealPoly& p, const RealPoly& q) { return multiply(p, q); }

/// p(z) with z replaced by -z.
RealPoly reflect(const RealPoly& p);

/// Max |p_j - q_j| over all coefficient indices.
double max_coeff_distance(const RealPoly& p, const RealPoly& q);

/// Relative tolerance for each synthetic-division remainder in deflate().
inline constexpr double kDeflationTolerance = 1e-9;

/// Divide p by (z - root)^multiplicity, root in {-1, +1}.
/// Throws RootNotPresent when a stage remainder exceeds
/// kDeflationTolerance * (1 + |p|_inf).
RealPoly deflate(const RealPoly& p, int root, int multiplicity);

enum class Reciprocity { plus, minus, none };

/// +1 when coeffs are palindromic, -1 when anti-palindromic, within tol.
Reciprocity self_reciprocal_sign(const RealPoly& p, double tol = 1e-12);

const char* to_string(Reciprocity r) noexcept;

}  // namespace quadpoly

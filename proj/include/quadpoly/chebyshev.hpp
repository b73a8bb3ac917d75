#pragma once

#include <vector>

namespace quadpoly {

/// Chebyshev polynomials of the second kind, U_n(cos t) = sin((n+1)t) / sin t.

/// Three-term recurrence U_{k+1} = 2x U_k - U_{k-1}. U_{-1} is taken as 0.
double cheb_U(int n, double x);

/// Within this distance of +-1 cheb_U_prime switches to the closed limit.
inline constexpr double kChebEndpointSwitch = 1e-8;

/// U'_n(x) = ((n+2) U_{n-1}(x) - n U_{n+1}(x)) / (2 (1 - x^2)),
/// and U'_n(+-1) = (+-1)^(n-1) n(n+1)(n+2)/3 near the endpoints.
double cheb_U_prime(int n, double x);

enum class ChebKind { U, U_prime };

/// Positive zeros of U_n or U'_n, strictly descending, with the half-angle
/// map 1 - 2 x^2 applied (the cosine of twice the zero's arcsine).
class ChebRootList {
public:
    ChebRootList(ChebKind kind, int n, std::vector<double> values);

    ChebKind kind() const noexcept { return kind_; }
    int n() const noexcept { return n_; }
    const std::vector<double>& values() const noexcept { return values_; }
    std::size_t size() const noexcept { return values_.size(); }

    /// 1 - 2 values[j]^2, recomputed on every call.
    double mapped(std::size_t j) const;
    std::vector<double> mapped() const;

private:
    ChebKind kind_;
    int n_;
    std::vector<double> values_;
};

/// cos(j pi/(n+1)) for the floor(n/2) indices where it is positive.
ChebRootList positive_roots_U(int n);

/// The floor((n-1)/2) positive zeros of U'_n, one in each positive
/// interlacing bracket between consecutive zeros of U_n. Safeguarded Newton
/// (100 iterations, bisection fallback). Throws BracketFailure if a bracket
/// has no sign change.
ChebRootList positive_roots_U_prime(int n);

}  // namespace quadpoly

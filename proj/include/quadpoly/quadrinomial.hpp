#pragma once

#include "quadpoly/factored.hpp"
#include "quadpoly/kappa.hpp"
#include "quadpoly/poly.hpp"
#include "quadpoly/roots.hpp"

#include <string>
#include <vector>

namespace quadpoly {

/// P: p(z) = 1 + k(z + z^{N-1}) + z^N.   Q: q(z) = 1 + k(z - z^{N-1}) - z^N.
enum class Family { P, Q };

const char* to_string(Family f) noexcept;
/// Accepts "p"/"P"/"q"/"Q".
Family parse_family(std::string_view text);

class QuadSpec {
public:
    /// Throws std::invalid_argument for N < 3.
    QuadSpec(Family family, Kappa kappa, int N);

    Family family() const noexcept { return family_; }
    const Kappa& kappa() const noexcept { return kappa_; }
    int N() const noexcept { return N_; }

private:
    Family family_;
    Kappa kappa_;
    int N_;
};

RealPoly build_quadrinomial(const QuadSpec& spec);

struct KappaInterval {
    double lo;
    double hi;
};

/// Closed interval of k for which every zero lies on |z| = 1.
///   P: [-1, 1] for even N, [-1, N/(N-2)] for odd N.
///   Q: [-N/(N-2), 1] for odd N, [-N/(N-2), N/(N-2)] for even N.
KappaInterval kappa_limits(Family family, int N);

/// kappa_limits with exact rational endpoints.
std::pair<Rational, Rational> kappa_limits_exact(Family family, int N);

/// lo <= k <= hi. Exact comparison when k is rational.
bool circle_criterion(const QuadSpec& spec);

struct CriterionCheck {
    bool predicted;
    bool observed;
    double worst_deviation;  ///< max over roots of | |z| - 1 |
};

/// Compares circle_criterion with the roots actually computed.
CriterionCheck verify_criterion(const QuadSpec& spec, double circle_tol = 1e-6);

/// True for the eight (family, exact k, parity of N) combinations that have
/// closed-form factorizations.
bool is_limit_case(const QuadSpec& spec);

/// Closed-form factorization at a limit value of k; cosines come from the
/// zeros of U_{N-2} (k = +-1) or of U'_{N-2} (k = +-N/(N-2)).
/// Throws NotALimitCase otherwise, including for any non-exact k.
FactoredForm factorize_limit_case(const QuadSpec& spec);

/// max |coefficient| of expand(factorize_limit_case) - build_quadrinomial.
double verify_factorization(const QuadSpec& spec);

/// Roots of the quadrinomial. At limit cases the predicted (1 +- z)^m factors
/// are divided out exactly first and reported with their exact multiplicity.
RootSet quadrinomial_roots(const QuadSpec& spec, const SolverOptions& opts = {});

/// arccos of the gamma cosines (zeros of U'_{N-2}), ascending. N odd, N >= 5.
std::vector<double> cusp_angles(int N);

}  // namespace quadpoly

#pragma once

#include "quadpoly/poly.hpp"

#include <vector>

namespace quadpoly {

/// (1 - z/root)^multiplicity, i.e. (1+z)^m for root -1 and (1-z)^m for root +1.
struct LinearFactor {
    int root;
    int multiplicity;

    friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

/// scale * prod (1 -+ z)^m * prod_c (1 + z^2 - 2cz).
///
/// A factor written 1 + z^2 + 2cz is stored with c negated. Every |c| <= 1,
/// so each quadratic contributes the conjugate pair e^{+-i arccos c}.
struct FactoredForm {
    std::vector<LinearFactor> linear;
    std::vector<double> quadratics;
    double scale = 1.0;

    int degree() const;
    RealPoly expand() const;
};

}  // namespace quadpoly

#pragma once

#include "quadpoly/poly.hpp"

#include <vector>

namespace quadpoly {

struct SolverOptions {
    int max_iterations = 500;
    /// Declared bound on Root::residual, relative to (1 + |p|_inf).
    double residual_bound = 1e-12;
    /// Approximations closer than this are merged into one multiple root.
    double clustering_radius = 1e-6;
};

struct Root {
    Complex value;
    int multiplicity = 1;
    /// |p(z)| / ((1 + |p|_inf) * max(1, |z|)^deg p)
    double residual = 0.0;
};

struct RootSet {
    std::vector<Root> roots;
    int total = 0;  ///< sum of multiplicities == degree of the source polynomial

    /// Every root repeated by its multiplicity.
    std::vector<Complex> flattened() const;
};

/// Scaled residual used throughout: plain |p(z)|/(1+|p|) inside the closed
/// disk, and the reversed-polynomial residual outside it.
double root_residual(const RealPoly& p, Complex z);

/// All deg(p) roots of p, counted with multiplicity.
///
/// Aberth-Ehrlich simultaneous iteration followed by Newton polishing.
/// Exact zero roots (vanishing low coefficients) are split off first.
/// Approximations are merged into one multiple root at their centroid when
/// they are within opts.clustering_radius of each other or when their
/// Weierstrass inclusion disks overlap; the latter is what recovers
/// multiplicities whose double-precision spread is ~eps^(1/m).
///
/// Throws NoConvergence when the iteration budget is exhausted.
RootSet find_roots(const RealPoly& p, const SolverOptions& opts = {});

struct CircleCounts {
    int on_circle = 0;
    int inside = 0;
    int outside = 0;

    int total() const noexcept { return on_circle + inside + outside; }
    friend bool operator==(const CircleCounts&, const CircleCounts&) = default;
};

/// Tolerance applied to roots of recorded multiplicity > 1: their attainable
/// accuracy is ~eps^(1/m).
inline constexpr double kMultipleRootCircleTolerance = 1e-5;
inline constexpr double kDefaultCircleTolerance = 1e-8;

/// Buckets each root (with multiplicity) by comparing |z| with 1.
/// Multiple roots use max(circle_tol, kMultipleRootCircleTolerance).
CircleCounts classify_roots(const RootSet& rs, double circle_tol = kDefaultCircleTolerance);

/// Largest | |z| - 1 | over the roots.
double max_circle_deviation(const RootSet& rs);

}  // namespace quadpoly

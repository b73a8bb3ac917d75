#include "quadpoly/roots.hpp"

#include "quadpoly/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>

namespace quadpoly {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

struct HornerResult {
    Complex value;
    Complex slope;
};

HornerResult horner_with_derivative(std::span<const double> c, Complex z) {
    Complex v = c.back();
    Complex d = 0.0;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        d = d * z + v;
        v = v * z + c[j];
    }
    return {v, d};
}

/// Horner evaluation of the reversed coefficient list.
HornerResult reversed_horner(std::span<const double> c, Complex y) {
    Complex v = c.front();
    Complex d = 0.0;
    for (std::size_t j = 1; j < c.size(); ++j) {
        d = d * y + v;
        v = v * y + c[j];
    }
    return {v, d};
}

double abs_poly(std::span<const double> c, double r) {
    double acc = std::abs(c.back());
    for (std::size_t j = c.size() - 1; j-- > 0;) acc = acc * r + std::abs(c[j]);
    return acc;
}

/// Newton correction p(z)/p'(z), evaluated through the reversed polynomial
/// when |z| > 1 so that the large powers never appear.
/// Also reports whether |p(z)| is at the rounding level.
struct Correction {
    Complex ratio;
    bool at_noise_level;
};

Correction newton_correction(std::span<const double> c, Complex z) {
    const auto n = static_cast<double>(c.size() - 1);
    const double r = std::abs(z);
    const double noise = 2.0 * (n + 1.0) * kEps;
    if (r <= 1.0) {
        const auto [v, d] = horner_with_derivative(c, z);
        const bool small = std::abs(v) <= noise * abs_poly(c, r);
        if (d == 0.0) return {small ? Complex(0.0) : Complex(r * kEps + kEps, 0.0), small};
        return {v / d, small};
    }
    // p(z) = z^n q(1/z);  p'/p = y (n - y q'(y)/q(y)),  y = 1/z
    const Complex y = 1.0 / z;
    const auto [q, dq] = reversed_horner(c, y);
    double tilde = std::abs(c.front());
    for (std::size_t j = 1; j < c.size(); ++j) tilde = tilde / r + std::abs(c[j]);
    const bool small = std::abs(q) <= noise * tilde;
    if (q == 0.0) return {0.0, true};
    const Complex denom = y * (n - y * dq / q);
    if (denom == 0.0) return {Complex(r * kEps, 0.0), small};
    return {1.0 / denom, small};
}

std::vector<Complex> initial_guesses(std::span<const double> c) {
    const std::size_t n = c.size() - 1;
    const double radius = std::pow(std::abs(c.front()) / std::abs(c.back()), 1.0 / static_cast<double>(n));
    std::vector<Complex> z(n);
    for (std::size_t i = 0; i < n; ++i) {
        // the 0.4 offset keeps the start off the real axis symmetry
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n) + 0.4;
        z[i] = std::polar(radius, angle);
    }
    return z;
}

std::vector<Complex> aberth(std::span<const double> c, const SolverOptions& opts, const RealPoly& source) {
    const std::size_t n = c.size() - 1;
    std::vector<Complex> z = initial_guesses(c);
    std::vector<char> done(n, 0);
    std::size_t remaining = n;

    for (int it = 0; it < opts.max_iterations && remaining > 0; ++it) {
        for (std::size_t i = 0; i < n; ++i) {
            if (done[i]) continue;
            const auto [ratio, small] = newton_correction(c, z[i]);
            if (small) {
                done[i] = 1;
                --remaining;
                continue;
            }
            Complex sum = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                if (j != i) sum += 1.0 / (z[i] - z[j]);
            }
            const Complex step = ratio / (1.0 - ratio * sum);
            z[i] -= step;
            if (std::abs(step) <= 2.0 * kEps * std::abs(z[i])) {
                done[i] = 1;
                --remaining;
            }
        }
    }
    if (remaining > 0) {
        std::vector<double> res(n);
        for (std::size_t i = 0; i < n; ++i) res[i] = root_residual(source, z[i]);
        throw NoConvergence("find_roots: " + std::to_string(remaining) + " of " + std::to_string(n) +
                                " approximations did not converge in " + std::to_string(opts.max_iterations) +
                                " iterations",
                            std::move(z), std::move(res));
    }
    return z;
}

void polish(std::span<const double> c, const RealPoly& source, std::vector<Complex>& z) {
    for (auto& zi : z) {
        double best = root_residual(source, zi);
        for (int step = 0; step < 3 && best > 0.0; ++step) {
            const Complex next = zi - newton_correction(c, zi).ratio;
            const double r = root_residual(source, next);
            if (!(r < best)) break;
            zi = next;
            best = r;
        }
    }
}

std::size_t find_root_of(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

/// Weierstrass inclusion radii n |p(z_i)| / |a_n prod_{j!=i} (z_i - z_j)|, via logs.
std::vector<double> inclusion_radii(std::span<const double> c, const std::vector<Complex>& z) {
    const std::size_t n = z.size();
    std::vector<double> r(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double m = std::abs(z[i]);
        const double pv = m <= 1.0 ? std::abs(horner_with_derivative(c, z[i]).value)
                                   : std::abs(reversed_horner(c, 1.0 / z[i]).value);
        if (pv == 0.0) {
            r[i] = 0.0;
            continue;
        }
        // |p(z)| = |z|^n |q(1/z)| outside the disk
        const double log_pv = std::log(pv) + (m > 1.0 ? static_cast<double>(n) * std::log(m) : 0.0);
        double log_prod = std::log(std::abs(c.back()));
        bool coincident = false;
        for (std::size_t j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = std::abs(z[i] - z[j]);
            if (d == 0.0) {
                coincident = true;
                break;
            }
            log_prod += std::log(d);
        }
        r[i] = coincident ? std::numeric_limits<double>::infinity()
                          : std::exp(std::log(static_cast<double>(n)) + log_pv - log_prod);
    }
    return r;
}

std::vector<Root> cluster(std::span<const double> c, const RealPoly& source, const std::vector<Complex>& z,
                          double radius) {
    const std::size_t n = z.size();
    const std::vector<double> incl = inclusion_radii(c, z);
    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double d = std::abs(z[i] - z[j]);
            if (d <= std::max(radius, incl[i] + incl[j])) {
                parent[find_root_of(parent, i)] = find_root_of(parent, j);
            }
        }
    }
    std::vector<Root> out;
    std::vector<std::size_t> slot(n, n);
    std::vector<Complex> sums;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t r = find_root_of(parent, i);
        if (slot[r] == n) {
            slot[r] = out.size();
            out.push_back({Complex{}, 0, 0.0});
            sums.emplace_back(0.0);
        }
        sums[slot[r]] += z[i];
        ++out[slot[r]].multiplicity;
    }
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k].value = sums[k] / static_cast<double>(out[k].multiplicity);
        out[k].residual = root_residual(source, out[k].value);
    }
    return out;
}

}  // namespace

std::vector<Complex> RootSet::flattened() const {
    std::vector<Complex> v;
    v.reserve(static_cast<std::size_t>(total));
    for (const auto& r : roots) v.insert(v.end(), static_cast<std::size_t>(r.multiplicity), r.value);
    return v;
}

double root_residual(const RealPoly& p, Complex z) {
    const auto& c = p.coeffs();
    const double scale = 1.0 + p.max_abs_coeff();
    const double r = std::abs(z);
    if (r <= 1.0) return std::abs(eval(p, z)) / scale;
    return std::abs(reversed_horner(c, 1.0 / z).value) / scale;
}

RootSet find_roots(const RealPoly& p, const SolverOptions& opts) {
    if (p.degree() < 1) throw std::invalid_argument("find_roots: degree must be at least 1");

    const auto& all = p.coeffs();
    std::size_t zeros = 0;
    while (all[zeros] == 0.0) ++zeros;
    const std::span<const double> c(all.begin() + static_cast<std::ptrdiff_t>(zeros), all.end());

    RootSet rs;
    rs.total = p.degree();
    if (zeros > 0) rs.roots.push_back({Complex(0.0), static_cast<int>(zeros), 0.0});

    const std::size_t n = c.size() - 1;
    if (n == 0) return rs;
    if (n == 1) {
        const Complex z(-c[0] / c[1], 0.0);
        rs.roots.push_back({z, 1, root_residual(p, z)});
        return rs;
    }

    std::vector<Complex> z = aberth(c, opts, p);
    polish(c, p, z);
    std::vector<Root> found = cluster(c, p, z, opts.clustering_radius);

    const double bound = opts.residual_bound;
    for (const auto& r : found) {
        if (r.residual > bound) {
            std::vector<double> res(z.size());
            for (std::size_t i = 0; i < z.size(); ++i) res[i] = root_residual(p, z[i]);
            throw NoConvergence("find_roots: residual " + std::to_string(r.residual) + " exceeds bound", z,
                                std::move(res));
        }
    }
    std::sort(found.begin(), found.end(), [](const Root& a, const Root& b) {
        const double aa = std::arg(a.value);
        const double ab = std::arg(b.value);
        if (aa != ab) return aa < ab;
        return std::abs(a.value) < std::abs(b.value);
    });
    rs.roots.insert(rs.roots.end(), found.begin(), found.end());
    return rs;
}

CircleCounts classify_roots(const RootSet& rs, double circle_tol) {
    CircleCounts counts;
    for (const auto& r : rs.roots) {
        const double tol = r.multiplicity > 1 ? std::max(circle_tol, kMultipleRootCircleTolerance) : circle_tol;
        const double m = std::abs(r.value);
        if (std::abs(m - 1.0) <= tol) {
            counts.on_circle += r.multiplicity;
        } else if (m < 1.0) {
            counts.inside += r.multiplicity;
        } else {
            counts.outside += r.multiplicity;
        }
    }
    return counts;
}

double max_circle_deviation(const RootSet& rs) {
    double worst = 0.0;
    for (const auto& r : rs.roots) worst = std::max(worst, std::abs(std::abs(r.value) - 1.0));
    return worst;
}

}  // namespace quadpoly

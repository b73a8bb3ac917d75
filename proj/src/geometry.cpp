#include "quadpoly/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

namespace quadpoly {
namespace {

struct Pair {
    double hi;
    double lo;
};

Pair two_sum(double a, double b) {
    const double s = a + b;
    const double bb = s - a;
    const double err = (a - (s - bb)) + (b - bb);
    return {s, err};
}

Pair two_product(double a, double b) {
    const double p = a * b;
    return {p, std::fma(a, b, -p)};
}

/// Adds b to a nonoverlapping expansion ordered by increasing magnitude.
void grow_expansion(std::vector<double>& e, double b) {
    double q = b;
    for (double& component : e) {
        const auto [s, err] = two_sum(q, component);
        component = err;
        q = s;
    }
    e.push_back(q);
}

int exact_sign(Point2 a, Point2 b, Point2 c) {
    const Pair dx1 = two_sum(b.x, -a.x);
    const Pair dy2 = two_sum(c.y, -a.y);
    const Pair dy1 = two_sum(b.y, -a.y);
    const Pair dx2 = two_sum(c.x, -a.x);

    std::vector<double> e;
    e.reserve(32);
    const double left[2] = {dx1.hi, dx1.lo};
    const double right[2] = {dy2.hi, dy2.lo};
    const double left2[2] = {dy1.hi, dy1.lo};
    const double right2[2] = {dx2.hi, dx2.lo};
    for (double u : left) {
        for (double v : right) {
            const auto [p, err] = two_product(u, v);
            grow_expansion(e, err);
            grow_expansion(e, p);
        }
    }
    for (double u : left2) {
        for (double v : right2) {
            const auto [p, err] = two_product(u, v);
            grow_expansion(e, -err);
            grow_expansion(e, -p);
        }
    }
    for (auto it = e.rbegin(); it != e.rend(); ++it) {
        if (*it != 0.0) return *it > 0.0 ? 1 : -1;
    }
    return 0;
}

bool within(double v, double lo, double hi) { return std::min(lo, hi) <= v && v <= std::max(lo, hi); }

bool on_segment(Point2 p, Point2 q, Point2 r) { return within(r.x, p.x, q.x) && within(r.y, p.y, q.y); }

}  // namespace

int orient2d(Point2 a, Point2 b, Point2 c) {
    const double l = (b.x - a.x) * (c.y - a.y);
    const double r = (b.y - a.y) * (c.x - a.x);
    const double det = l - r;
    // forward error bound of the plain evaluation (Shewchuk's ccwerrboundA)
    constexpr double u = std::numeric_limits<double>::epsilon() / 2;
    const double bound = (3.0 + 16.0 * u) * u * (std::abs(l) + std::abs(r));
    if (det > bound) return 1;
    if (-det > bound) return -1;
    return exact_sign(a, b, c);
}

bool segments_touch(Point2 p1, Point2 p2, Point2 q1, Point2 q2) {
    if (std::max(p1.x, p2.x) < std::min(q1.x, q2.x) || std::max(q1.x, q2.x) < std::min(p1.x, p2.x) ||
        std::max(p1.y, p2.y) < std::min(q1.y, q2.y) || std::max(q1.y, q2.y) < std::min(p1.y, p2.y)) {
        return false;
    }
    const int o1 = orient2d(p1, p2, q1);
    const int o2 = orient2d(p1, p2, q2);
    const int o3 = orient2d(q1, q2, p1);
    const int o4 = orient2d(q1, q2, p2);
    if (o1 * o2 < 0 && o3 * o4 < 0) return true;
    if (o1 == 0 && on_segment(p1, p2, q1)) return true;
    if (o2 == 0 && on_segment(p1, p2, q2)) return true;
    if (o3 == 0 && on_segment(q1, q2, p1)) return true;
    if (o4 == 0 && on_segment(q1, q2, p2)) return true;
    return false;
}

}  // namespace quadpoly

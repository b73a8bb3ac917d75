#include "quadpoly/factored.hpp"

#include <cmath>
#include <limits>

namespace quadpoly {

int FactoredForm::degree() const {
    int d = 2 * static_cast<int>(quadratics.size());
    for (const auto& f : linear) d += f.multiplicity;
    return d;
}

namespace {

struct Factor {
    double c;  ///< cosine of the root angle; +-1 for the linear factors
    RealPoly poly;
};

/// Leja order on the cosines: each next factor maximizes the product of
/// distances to those already taken, which keeps the partial products small.
std::vector<Factor> leja_order(std::vector<Factor> fs) {
    std::vector<Factor> out;
    out.reserve(fs.size());
    std::vector<double> score(fs.size(), 0.0);
    std::vector<bool> used(fs.size(), false);
    std::size_t first = 0;
    for (std::size_t i = 1; i < fs.size(); ++i)
        if (std::abs(fs[i].c) > std::abs(fs[first].c)) first = i;
    std::size_t next = first;
    for (std::size_t step = 0; step < fs.size(); ++step) {
        used[next] = true;
        out.push_back(fs[next]);
        std::size_t best = next;
        double best_score = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < fs.size(); ++i) {
            if (used[i]) continue;
            const double d = std::abs(fs[i].c - fs[next].c);
            score[i] += d > 0.0 ? std::log(d) : -std::numeric_limits<double>::infinity();
            if (best == next || score[i] > best_score) {
                best = i;
                best_score = score[i];
            }
        }
        next = best;
    }
    return out;
}

}  // namespace

RealPoly FactoredForm::expand() const {
    std::vector<Factor> fs;
    for (const auto& f : linear)
        for (int k = 0; k < f.multiplicity; ++k) fs.push_back({static_cast<double>(f.root), RealPoly{1.0, -1.0 / f.root}});
    for (double c : quadratics) fs.push_back({c, RealPoly{1.0, -2.0 * c, 1.0}});

    RealPoly p{scale};
    for (const Factor& f : leja_order(std::move(fs))) p = multiply(p, f.poly);
    return p;
}

}  // namespace quadpoly

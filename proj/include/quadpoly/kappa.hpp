#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace quadpoly {

/// Reduced fraction with positive denominator.
class Rational {
public:
    Rational(std::int64_t num, std::int64_t den = 1);

    std::int64_t num() const noexcept { return num_; }
    std::int64_t den() const noexcept { return den_; }
    double value() const noexcept { return static_cast<double>(num_) / static_cast<double>(den_); }
    std::string str() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// The quadrinomial parameter. Parsed from "INT" or "INT/INT" it carries an
/// exact rational, which is what limit-case factorization dispatches on.
/// A decimal literal is a plain double and never matches a limit case.
class Kappa {
public:
    static Kappa exact(Rational r) { return Kappa(r.value(), r); }
    static Kappa exact(std::int64_t num, std::int64_t den = 1) { return exact(Rational(num, den)); }
    static Kappa real(double v);

    /// Grammar: INT | INT/INT | decimal float. Throws std::invalid_argument.
    static Kappa parse(std::string_view text);

    double value() const noexcept { return value_; }
    const std::optional<Rational>& rational() const noexcept { return exact_; }
    bool is_exact() const noexcept { return exact_.has_value(); }
    std::string str() const;

private:
    Kappa(double v, std::optional<Rational> r) : value_(v), exact_(r) {}

    double value_;
    std::optional<Rational> exact_;
};

}  // namespace quadpoly

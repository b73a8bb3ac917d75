#include "quadpoly/kappa.hpp"

#include <charconv>
#include <cmath>
#include <compare>
#include <numeric>
#include <stdexcept>

namespace quadpoly {

__extension__ using Int128 = __int128;

Rational::Rational(std::int64_t num, std::int64_t den) {
    if (den == 0) throw std::invalid_argument("Rational: zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    num_ = num / g;
    den_ = den / g;
}

std::string Rational::str() const {
    return den_ == 1 ? std::to_string(num_) : std::to_string(num_) + "/" + std::to_string(den_);
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const auto lhs = static_cast<Int128>(a.num_) * b.den_;
    const auto rhs = static_cast<Int128>(b.num_) * a.den_;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

Kappa Kappa::real(double v) {
    if (!std::isfinite(v)) throw std::invalid_argument("kappa must be finite");
    return Kappa(v, std::nullopt);
}

namespace {

std::int64_t parse_int(std::string_view s, std::string_view whole) {
    std::int64_t v = 0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    if (first != last && *first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last || first == last) {
        throw std::invalid_argument("invalid kappa '" + std::string(whole) + "'");
    }
    return v;
}

bool is_integer_literal(std::string_view s) {
    if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

Kappa Kappa::parse(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("empty kappa");
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const auto num = text.substr(0, slash);
        const auto den = text.substr(slash + 1);
        if (!is_integer_literal(num) || !is_integer_literal(den)) {
            throw std::invalid_argument("invalid kappa '" + std::string(text) + "'");
        }
        return exact(Rational(parse_int(num, text), parse_int(den, text)));
    }
    if (is_integer_literal(text)) return exact(parse_int(text, text));

    double v = 0.0;
    const char* first = text.data();
    const char* last = text.data() + text.size();
    if (*first == '+') ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last) throw std::invalid_argument("invalid kappa '" + std::string(text) + "'");
    return real(v);
}

std::string Kappa::str() const {
    if (exact_) return exact_->str();
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value_);
    return std::string(buf, ptr);
}

}  // namespace quadpoly

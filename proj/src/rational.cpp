#include "agk/rational.hpp"

#include <cctype>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace agk {

namespace {

using i128 = __int128;

i128 abs128(i128 v) { return v < 0 ? -v : v; }

i128 gcd128(i128 a, i128 b) {
    a = abs128(a);
    b = abs128(b);
    while (b != 0) {
        i128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::int64_t narrow(i128 v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
        throw std::overflow_error("Rational: value exceeds 64-bit range");
    }
    return static_cast<std::int64_t>(v);
}

}  // namespace

Rational::Rational(std::int64_t n, std::int64_t d) {
    if (d == 0) throw std::domain_error("Rational: zero denominator");
    i128 nn = n, dd = d;
    if (dd < 0) {
        nn = -nn;
        dd = -dd;
    }
    i128 g = gcd128(nn, dd);
    if (g > 1) {
        nn /= g;
        dd /= g;
    }
    num_ = narrow(nn);
    den_ = narrow(dd);
}

Rational Rational::operator-() const {
    Rational r;
    r.num_ = narrow(-i128(num_));
    r.den_ = den_;
    return r;
}

namespace {

Rational make_reduced(i128 n, i128 d) {
    if (d < 0) {
        n = -n;
        d = -d;
    }
    i128 g = gcd128(n, d);
    if (g > 1) {
        n /= g;
        d /= g;
    }
    return Rational(narrow(n), narrow(d));
}

}  // namespace

Rational operator+(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.den_ + i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.den_ - i128(b.num_) * a.den_, i128(a.den_) * b.den_);
}

Rational operator*(const Rational& a, const Rational& b) {
    return make_reduced(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
    return make_reduced(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
}

bool operator<(const Rational& a, const Rational& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
}

std::int64_t isqrt64(std::int64_t n) {
    if (n < 0) throw std::domain_error("isqrt64: negative argument");
    if (n == 0) return 0;
    auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r > n / r) --r;
    while ((r + 1) <= n / (r + 1)) ++r;
    return r;
}

bool is_perfect_square(std::int64_t n, std::int64_t* root) {
    if (n < 0) return false;
    std::int64_t r = isqrt64(n);
    if (r * r != n) return false;
    if (root) *root = r;
    return true;
}

std::optional<Rational> Rational::exact_sqrt() const {
    if (num_ < 0) return std::nullopt;
    std::int64_t rn = 0, rd = 0;
    if (!is_perfect_square(num_, &rn) || !is_perfect_square(den_, &rd)) return std::nullopt;
    return Rational(rn, rd);
}

std::string Rational::str() const {
    if (den_ == 1) return std::to_string(num_);
    return std::to_string(num_) + "/" + std::to_string(den_);
}

std::optional<Rational> Rational::parse(std::string_view text) {
    // strip surrounding whitespace
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
    while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
    if (text.empty()) return std::nullopt;

    auto parse_int = [](std::string_view s, std::int64_t& out) -> bool {
        if (s.empty()) return false;
        bool neg = false;
        std::size_t i = 0;
        if (s[0] == '+' || s[0] == '-') {
            neg = s[0] == '-';
            i = 1;
        }
        if (i == s.size()) return false;
        i128 v = 0;
        for (; i < s.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
            v = v * 10 + (s[i] - '0');
            if (v > std::numeric_limits<std::int64_t>::max()) return false;
        }
        out = neg ? -static_cast<std::int64_t>(v) : static_cast<std::int64_t>(v);
        return true;
    };

    if (auto slash = text.find('/'); slash != std::string_view::npos) {
        std::int64_t p = 0, q = 0;
        if (!parse_int(text.substr(0, slash), p)) return std::nullopt;
        if (!parse_int(text.substr(slash + 1), q)) return std::nullopt;
        if (q == 0) return std::nullopt;
        return Rational(p, q);
    }

    if (auto dot = text.find('.'); dot != std::string_view::npos) {
        std::string digits(text.substr(0, dot));
        std::string_view frac = text.substr(dot + 1);
        if (frac.size() > 17) return std::nullopt;
        i128 den = 1;
        for (char c : frac) {
            if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
            den *= 10;
        }
        digits += frac;
        std::int64_t p = 0;
        if (!parse_int(digits, p)) return std::nullopt;
        if (den > std::numeric_limits<std::int64_t>::max()) return std::nullopt;
        return Rational(p, static_cast<std::int64_t>(den));
    }

    std::int64_t p = 0;
    if (!parse_int(text, p)) return std::nullopt;
    return Rational(p);
}

std::optional<Rational> Rational::from_double(double x, std::int64_t max_den, double tol) {
    if (!std::isfinite(x)) return std::nullopt;
    // continued-fraction convergents p/q with q <= max_den
    double v = x;
    std::int64_t p0 = 0, q0 = 1, p1 = 1, q1 = 0;
    for (int it = 0; it < 64; ++it) {
        double fa = std::floor(v);
        if (fa > 9.0e18 || fa < -9.0e18) break;
        auto a = static_cast<std::int64_t>(fa);
        i128 p2 = i128(a) * p1 + p0;
        i128 q2 = i128(a) * q1 + q0;
        if (q2 > max_den || p2 > std::numeric_limits<std::int64_t>::max() ||
            p2 < std::numeric_limits<std::int64_t>::min()) {
            break;
        }
        p0 = p1;
        q0 = q1;
        p1 = static_cast<std::int64_t>(p2);
        q1 = static_cast<std::int64_t>(q2);
        double rem = v - fa;
        if (std::abs(static_cast<double>(p1) / static_cast<double>(q1) - x) < tol * 0.5) break;
        if (rem < 1e-15) break;
        v = 1.0 / rem;
    }
    if (q1 == 0) return std::nullopt;
    Rational r(p1, q1);
    if (std::abs(r.to_double() - x) > tol) return std::nullopt;
    return r;
}

}  // namespace agk

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

namespace agk {

/// Exact integer fraction. Invariants: den > 0 and gcd(|num|, den) = 1.
/// All arithmetic is exact; operations that would overflow the 64-bit
/// representation throw std::overflow_error instead of wrapping.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(std::int64_t n) : num_(n), den_(1) {}
    Rational(std::int64_t n, std::int64_t d);

    std::int64_t num() const { return num_; }
    std::int64_t den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    bool is_integer() const { return den_ == 1; }
    bool is_nonnegative() const { return num_ >= 0; }

    double to_double() const { return static_cast<double>(num_) / static_cast<double>(den_); }

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend Rational operator+(const Rational& a, const Rational& b);
    friend Rational operator-(const Rational& a, const Rational& b);
    friend Rational operator*(const Rational& a, const Rational& b);
    friend Rational operator/(const Rational& a, const Rational& b);

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b);
    friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
    friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
    friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

    /// Exact square root if this is the square of a rational, otherwise nullopt.
    std::optional<Rational> exact_sqrt() const;

    /// "p" or "p/q". No decimal point, no exponent.
    std::string str() const;

    /// Accepts "p", "p/q" and plain decimals ("−0.125"); decimals are converted
    /// exactly (digits over a power of ten), never through a double.
    static std::optional<Rational> parse(std::string_view text);

    /// Nearest rational with denominator <= max_den (continued fractions).
    /// Returns nullopt when no such fraction lies within tol of x.
    static std::optional<Rational> from_double(double x, std::int64_t max_den = 1000000,
                                               double tol = 1e-9);

private:
    std::int64_t num_;
    std::int64_t den_;
};

/// Floor of sqrt(n) for n >= 0.
std::int64_t isqrt64(std::int64_t n);

/// True when n is a perfect square; fills root when requested.
bool is_perfect_square(std::int64_t n, std::int64_t* root = nullptr);

}  // namespace agk

template <>
struct std::hash<agk::Rational> {
    std::size_t operator()(const agk::Rational& r) const noexcept {
        std::size_t h = std::hash<std::int64_t>{}(r.num());
        return h ^ (std::hash<std::int64_t>{}(r.den()) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2));
    }
};

#pragma once

#include <complex>
#include <map>

#include "agk/rational.hpp"

namespace agk {

/// Gaussian rational a + b*i with exact components.
struct GaussianRational {
    Rational re;
    Rational im;

    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }

    friend GaussianRational operator+(const GaussianRational& a, const GaussianRational& b) {
        return {a.re + b.re, a.im + b.im};
    }
    friend GaussianRational operator*(const GaussianRational& a, const GaussianRational& b) {
        return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
    }
    friend GaussianRational operator*(const Rational& s, const GaussianRational& a) {
        return {s * a.re, s * a.im};
    }
    friend bool operator==(const GaussianRational& a, const GaussianRational& b) {
        return a.re == b.re && a.im == b.im;
    }
};

/// Finite Laurent polynomial in z with exact Gaussian-rational coefficients.
/// Zero coefficients are never stored.
class LaurentPoly {
public:
    LaurentPoly() = default;

    void add_term(int exponent, const GaussianRational& c);
    void set_term(int exponent, const GaussianRational& c);

    bool is_zero() const { return coef_.empty(); }
    int min_exp() const;
    int max_exp() const;
    GaussianRational coef(int exponent) const;
    const std::map<int, GaussianRational>& terms() const { return coef_; }

    LaurentPoly derivative() const;
    std::complex<double> eval(std::complex<double> z) const;

private:
    std::map<int, GaussianRational> coef_;
};

}  // namespace agk

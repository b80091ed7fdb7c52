#pragma once

#include <array>
#include <optional>
#include <utility>
#include <vector>

#include "agk/rational.hpp"

namespace agk {

/// Bivariate homogeneous polynomial of fixed total degree with exact rational
/// coefficients. coef(i) multiplies x^i y^(degree-i). The zero polynomial is
/// rejected at construction.
class HomogeneousPoly2 {
public:
    HomogeneousPoly2(int degree, std::vector<Rational> coef);

    /// Quartic part of the potential: -(a/4)(x^2+y^2)^2 - (b/2) x^2 y^2.
    static HomogeneousPoly2 agk_quartic(const Rational& a, const Rational& b);

    int degree() const { return degree_; }
    const Rational& coef(int xpow) const { return coef_.at(static_cast<std::size_t>(xpow)); }

    /// (a, b) when this is a member of the D4-symmetric quartic family, else nullopt.
    std::optional<std::pair<Rational, Rational>> agk_family_params() const;

    template <typename S>
    S eval(S x, S y) const {
        S acc{};
        for (int i = 0; i <= degree_; ++i) {
            const Rational& c = coef_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            acc += c.to_double() * pow_i(x, i) * pow_i(y, degree_ - i);
        }
        return acc;
    }

    template <typename S>
    std::array<S, 2> grad_eval(S x, S y) const {
        std::array<S, 2> g{};
        for (int i = 0; i <= degree_; ++i) {
            const Rational& c = coef_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            if (i >= 1) g[0] += c.to_double() * double(i) * pow_i(x, i - 1) * pow_i(y, degree_ - i);
            if (degree_ - i >= 1)
                g[1] += c.to_double() * double(degree_ - i) * pow_i(x, i) * pow_i(y, degree_ - i - 1);
        }
        return g;
    }

    /// Hessian packed as {Vxx, Vxy, Vyy}.
    template <typename S>
    std::array<S, 3> hessian_eval(S x, S y) const {
        std::array<S, 3> h{};
        for (int i = 0; i <= degree_; ++i) {
            const Rational& c = coef_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            const int j = degree_ - i;
            const double cv = c.to_double();
            if (i >= 2) h[0] += cv * double(i) * double(i - 1) * pow_i(x, i - 2) * pow_i(y, j);
            if (i >= 1 && j >= 1) h[1] += cv * double(i) * double(j) * pow_i(x, i - 1) * pow_i(y, j - 1);
            if (j >= 2) h[2] += cv * double(j) * double(j - 1) * pow_i(x, i) * pow_i(y, j - 2);
        }
        return h;
    }

private:
    template <typename S>
    static S pow_i(S base, int n) {
        S r = S{} + 1.0;
        for (int i = 0; i < n; ++i) r *= base;
        return r;
    }

    int degree_;
    std::vector<Rational> coef_;
};

}  // namespace agk

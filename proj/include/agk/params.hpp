#pragma once

#include <cmath>
#include <stdexcept>

#include "agk/rational.hpp"

namespace agk {

/// Potential parameters (mu, a, b). kappa = b/a is only defined for a != 0.
struct Params {
    double mu = 0.0;
    double a = 0.0;
    double b = 0.0;

    double kappa() const {
        if (a == 0.0) throw std::domain_error("Params: kappa undefined for a = 0");
        return b / a;
    }

    bool finite() const { return std::isfinite(mu) && std::isfinite(a) && std::isfinite(b); }
};

/// Exact-rational parameter triple used by the Galois-criteria layer.
struct RationalParams {
    Rational mu;
    Rational a;
    Rational b;

    Rational kappa() const {
        if (a.is_zero()) throw std::domain_error("RationalParams: kappa undefined for a = 0");
        return b / a;
    }

    Params to_params() const { return Params{mu.to_double(), a.to_double(), b.to_double()}; }
};

}  // namespace agk

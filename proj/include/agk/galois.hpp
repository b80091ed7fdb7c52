#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "agk/params.hpp"
#include "agk/rational.hpp"
#include "agk/symmetry.hpp"
#include "agk/verdict.hpp"

namespace agk {

/// l-th triangular number l(l+1)/2. Throws for l < 0.
Rational triangular(std::int64_t l);

/// Smallest l >= 0 with kappa = T_l - 1, i.e. 8(kappa+1)+1 an odd perfect square.
std::optional<std::int64_t> lambda1_member(const Rational& kappa);

/// Smallest l >= 0 with kappa = 2(1 - T_l)/(1 + T_l); kappa = -2 is never a member.
std::optional<std::int64_t> lambda2_member(const Rational& kappa);

/// Member of Lambda = Lambda1 and Lambda2 (= {-1, 0, 2}).
bool lambda_member(const Rational& kappa);

/// Legendre-equation parameters (nu, mu_t). Values are exact rationals when
/// the flags say so; otherwise the rational field is a placeholder and only
/// the approximation / the exact square are meaningful.
struct LegendreParams {
    Rational nu;
    bool nu_exact = true;
    double nu_approx = 0.0;
    Rational mu_t;
    bool mu_t_exact = true;
    Rational mu_t_squared;
};

struct LegendreDecision {
    bool integrable = false;
    std::string rule;
};

/// Decision rule: integrable iff mu_t +- nu or nu is an integer, or
/// (+-mu_t, +-(2 nu + 1)) matches one of the printed closed families.
LegendreDecision legendre_integrable(const LegendreParams& p);

/// nu(nu+1) = 2(1+kappa) on Gamma1, 2(2-kappa)/(2+kappa) on Gamma3 (kappa != -2);
/// mu_t = 1 at h = 0, mu_t^2 = 2 kappa + 1 at the h = mu^2/(4a) level.
LegendreParams legendre_params_from_kappa(const Rational& kappa, Plane plane, EnergyCase ec);

/// Full decision tree over (mu, a, b).
Verdict classify(const RationalParams& p);

/// Double-precision entry point; values are snapped to rationals (denominator
/// <= 10^6, tolerance 1e-9) and the snap is recorded in the verdict notes.
/// Non-finite inputs are rejected.
Verdict classify(double mu, double a, double b);

}  // namespace agk

#pragma once

#include <array>
#include <complex>

#include "agk/params.hpp"
#include "agk/phase_state.hpp"

namespace agk {

// V(x,y) = -(mu/2)(x^2+y^2) - (a/4)(x^2+y^2)^2 - (b/2) x^2 y^2.
// The flow is xdot = px, ydot = py, pdot = -grad V, i.e.
//   pxdot = mu x + a (x^2+y^2) x + b x y^2,
//   pydot = mu y + a (x^2+y^2) y + b x^2 y.

template <typename S>
S potential_at(S x, S y, const Params& p) {
    S xx = x * x, yy = y * y;
    S r2 = xx + yy;
    return -(p.mu / 2.0) * r2 - (p.a / 4.0) * (r2 * r2) - (p.b / 2.0) * (xx * yy);
}

/// Gradient of V (not the force; the force is its negative).
template <typename S>
std::array<S, 2> grad_potential_at(S x, S y, const Params& p) {
    S r2 = x * x + y * y;
    return {-(p.mu * x + p.a * r2 * x + p.b * x * y * y),
            -(p.mu * y + p.a * r2 * y + p.b * x * x * y)};
}

/// Hessian of V, packed as {Vxx, Vxy, Vyy}.
template <typename S>
std::array<S, 3> hessian_potential_at(S x, S y, const Params& p) {
    S vxx = -(p.mu + p.a * (3.0 * x * x + y * y) + p.b * y * y);
    S vyy = -(p.mu + p.a * (x * x + 3.0 * y * y) + p.b * x * x);
    S vxy = -(2.0 * (p.a + p.b) * x * y);
    return {vxx, vxy, vyy};
}

double potential(const PhaseState& s, const Params& p);
double energy(const PhaseState& s, const Params& p);
std::array<double, 2> grad_potential(const PhaseState& s, const Params& p);
std::array<double, 3> hessian_potential(const PhaseState& s, const Params& p);

std::complex<double> potential_c(const PhaseState& s, const Params& p);
std::complex<double> energy_c(const PhaseState& s, const Params& p);

}  // namespace agk

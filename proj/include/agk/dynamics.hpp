#pragma once

#include <array>
#include <complex>
#include <stdexcept>

#include "agk/params.hpp"
#include "agk/rational.hpp"
#include "agk/symmetry.hpp"

namespace agk {

/// One-degree-of-freedom restriction h = p^2/2 - (mu/2) x^2 - (quartic/4) x^4.
/// Gamma1 keeps the quartic coefficient a; Gamma3 replaces it by 2a + b.
struct Restricted1DoF {
    double mu = 0.0;
    double quartic = 0.0;
};

Restricted1DoF restricted_hamiltonian(Plane plane, const Params& p);

struct PoleError : std::runtime_error {
    explicit PoleError(const std::string& what) : std::runtime_error(what) {}
};

/// Closed-form orbit on Gamma1/Gamma3 at energy 0 or mu^2/(4 quartic).
/// Branches 1 and 4 are the hyperbolic/trigonometric representatives; 2 and 3
/// are their imaginary-argument twins (equal values on real t), kept because
/// the four rows are related by t -> it and t -> pi/2 - t.
struct ParticularSolution {
    Plane plane = Plane::Gamma1;
    EnergyCase energy = EnergyCase::H0;
    int branch = 1;  // 1..4
    int sign = +1;
    Params params;
};

struct Jet {
    std::complex<double> x;
    std::complex<double> xdot;
};

double particular_solution_energy(const ParticularSolution& ps);
Jet particular_solution_eval(const ParticularSolution& ps, double t);

/// Row-major 4x4 first-order variational matrix along a plane orbit at
/// position x: d/dt (xi, xi') = A (xi, xi').
using Mat4c = std::array<std::complex<double>, 16>;
Mat4c variational_rhs(Plane plane, const Params& p, std::complex<double> x);

/// Coefficient of the scalar normal variational equation xi'' = q xi:
/// Gamma1: mu + (a+b) x^2;  Gamma3: mu + (2a-b) x^2.
std::complex<double> normal_coefficient(Plane plane, const Params& p, std::complex<double> x);

/// xi'' = (constant + amplitude cos(frequency t)) xi along the a = 0 harmonic
/// orbit: (b/2 + mu, b/2, 2 sqrt(mu)) on Gamma1, with b -> -b on Gamma3.
struct MathieuCoefficients {
    double constant = 0.0;
    double amplitude = 0.0;
    double frequency = 0.0;
};

MathieuCoefficients mathieu_coefficients(const Params& p, Plane plane);

/// Transformed normal-equation descriptor (-well_depth / cosh^2 tau + asymptotic).
struct PoschlTellerForm {
    Rational well_depth;
    Rational asymptotic;
};

PoschlTellerForm poschl_teller_form(const Rational& kappa, Plane plane, EnergyCase ec);

}  // namespace agk

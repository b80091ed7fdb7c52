#pragma once

#include <stdexcept>

#include "agk/params.hpp"
#include "agk/phase_state.hpp"

namespace agk {

enum class SymplecticMethod { Leapfrog2, Yoshida4 };

/// Plain-double state used on the hot path.
struct RealState {
    double x = 0.0;
    double y = 0.0;
    double px = 0.0;
    double py = 0.0;
};

RealState to_real_state(const PhaseState& s);
PhaseState from_real_state(const RealState& s);

double energy(const RealState& s, const Params& p);

/// Kick-drift-kick composition; the Hamiltonian is separable.
RealState leapfrog2_step(const RealState& s, const Params& p, double dt);

/// Three leapfrog substeps with the standard fourth-order weights.
RealState yoshida4_step(const RealState& s, const Params& p, double dt);

RealState symplectic_step(const RealState& s, const Params& p, double dt, SymplecticMethod m);

/// Contract surface over PhaseState (real mode only; non-finite states rejected).
PhaseState symplectic_step(const PhaseState& s, const Params& p, double dt, SymplecticMethod m);

struct OffEnergySurface : std::domain_error {
    OffEnergySurface(const std::string& what, double deficit_)
        : std::domain_error(what), deficit(deficit_) {}
    double deficit;
};

/// (x, 0, px, +sqrt(2(h - V(x,0)) - px^2)); throws OffEnergySurface (with the
/// deficit) when the discriminant is negative.
PhaseState seed_on_energy_surface(double x, double px, double h, const Params& p);

}  // namespace agk

#include "agk/symplectic.hpp"

#include <cmath>
#include <string>

#include "agk/hamiltonian.hpp"

namespace agk {

RealState to_real_state(const PhaseState& s) {
    if (s.is_complex()) throw std::domain_error("integrator: real-mode state required");
    return {s.x(), s.y(), s.px(), s.py()};
}

PhaseState from_real_state(const RealState& s) { return PhaseState::real(s.x, s.y, s.px, s.py); }

double energy(const RealState& s, const Params& p) {
    return 0.5 * (s.px * s.px + s.py * s.py) + potential_at(s.x, s.y, p);
}

namespace {

inline void kick(RealState& s, const Params& p, double h) {
    const double r2 = s.x * s.x + s.y * s.y;
    s.px += h * (p.mu * s.x + p.a * r2 * s.x + p.b * s.x * s.y * s.y);
    s.py += h * (p.mu * s.y + p.a * r2 * s.y + p.b * s.x * s.x * s.y);
}

inline void drift(RealState& s, double h) {
    s.x += h * s.px;
    s.y += h * s.py;
}

}  // namespace

RealState leapfrog2_step(const RealState& s0, const Params& p, double dt) {
    RealState s = s0;
    kick(s, p, 0.5 * dt);
    drift(s, dt);
    kick(s, p, 0.5 * dt);
    return s;
}

RealState yoshida4_step(const RealState& s0, const Params& p, double dt) {
    static const double cbrt2 = std::cbrt(2.0);
    static const double w1 = 1.0 / (2.0 - cbrt2);
    static const double w0 = -cbrt2 / (2.0 - cbrt2);
    RealState s = s0;
    kick(s, p, 0.5 * w1 * dt);
    drift(s, w1 * dt);
    kick(s, p, 0.5 * (w1 + w0) * dt);
    drift(s, w0 * dt);
    kick(s, p, 0.5 * (w0 + w1) * dt);
    drift(s, w1 * dt);
    kick(s, p, 0.5 * w1 * dt);
    return s;
}

RealState symplectic_step(const RealState& s, const Params& p, double dt, SymplecticMethod m) {
    return m == SymplecticMethod::Leapfrog2 ? leapfrog2_step(s, p, dt) : yoshida4_step(s, p, dt);
}

PhaseState symplectic_step(const PhaseState& s, const Params& p, double dt, SymplecticMethod m) {
    RealState r = symplectic_step(to_real_state(s), p, dt, m);
    if (!std::isfinite(r.x) || !std::isfinite(r.y) || !std::isfinite(r.px) || !std::isfinite(r.py)) {
        throw std::runtime_error("symplectic_step: state became non-finite");
    }
    return from_real_state(r);
}

PhaseState seed_on_energy_surface(double x, double px, double h, const Params& p) {
    const double disc = 2.0 * (h - potential_at(x, 0.0, p)) - px * px;
    if (disc < 0.0) {
        throw OffEnergySurface(
            "seed_on_energy_surface: off energy surface by " + std::to_string(-disc / 2.0), -disc / 2.0);
    }
    return PhaseState::real(x, 0.0, px, std::sqrt(disc));
}

}  // namespace agk

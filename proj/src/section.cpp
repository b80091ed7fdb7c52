#include "agk/section.hpp"

#include <cmath>

#include "agk/hamiltonian.hpp"

namespace agk {

void IntegratorConfig::validate() const {
    if (!(step > 0.0)) throw std::invalid_argument("IntegratorConfig: step must be positive");
    if (!(max_time > 0.0)) throw std::invalid_argument("IntegratorConfig: max_time must be positive");
    if (!(escape_radius > 0.0)) throw std::invalid_argument("IntegratorConfig: escape_radius must be positive");
    if (crossing_refine_tol < 1e-13) {
        throw std::invalid_argument("IntegratorConfig: crossing_refine_tol below 1e-13");
    }
}

namespace {

inline void flow_deriv(const RealState& s, const Params& p, RealState& d) {
    const double r2 = s.x * s.x + s.y * s.y;
    d.x = s.px;
    d.y = s.py;
    d.px = p.mu * s.x + p.a * r2 * s.x + p.b * s.x * s.y * s.y;
    d.py = p.mu * s.y + p.a * r2 * s.y + p.b * s.x * s.x * s.y;
}

RealState rk4_flow(const RealState& s, const Params& p, double h) {
    auto add = [](const RealState& a, const RealState& b, double w) {
        return RealState{a.x + w * b.x, a.y + w * b.y, a.px + w * b.px, a.py + w * b.py};
    };
    RealState k1, k2, k3, k4;
    flow_deriv(s, p, k1);
    flow_deriv(add(s, k1, h / 2), p, k2);
    flow_deriv(add(s, k2, h / 2), p, k3);
    flow_deriv(add(s, k3, h), p, k4);
    RealState out = s;
    out.x += h / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    out.y += h / 6 * (k1.y + 2 * k2.y + 2 * k3.y + k4.y);
    out.px += h / 6 * (k1.px + 2 * k2.px + 2 * k3.px + k4.px);
    out.py += h / 6 * (k1.py + 2 * k2.py + 2 * k3.py + k4.py);
    return out;
}

// One step of the flow reparametrized by y (Henon's swap): state (x, px, py, dt),
// with dt measured from the step start so large absolute times cannot eat the
// refinement precision.
struct SwapState {
    double x, px, py, t;
};

SwapState rk4_swap(const SwapState& s, double y, const Params& p, double dy) {
    auto deriv = [&p](const SwapState& w, double ycur, SwapState& d) {
        RealState z{w.x, ycur, w.px, w.py};
        RealState f;
        flow_deriv(z, p, f);
        d.x = f.x / w.py;
        d.px = f.px / w.py;
        d.py = f.py / w.py;
        d.t = 1.0 / w.py;
    };
    auto add = [](const SwapState& a, const SwapState& b, double w) {
        return SwapState{a.x + w * b.x, a.px + w * b.px, a.py + w * b.py, a.t + w * b.t};
    };
    SwapState k1, k2, k3, k4;
    deriv(s, y, k1);
    deriv(add(s, k1, dy / 2), y + dy / 2, k2);
    deriv(add(s, k2, dy / 2), y + dy / 2, k3);
    deriv(add(s, k3, dy), y + dy, k4);
    SwapState out = s;
    out.x += dy / 6 * (k1.x + 2 * k2.x + 2 * k3.x + k4.x);
    out.px += dy / 6 * (k1.px + 2 * k2.px + 2 * k3.px + k4.px);
    out.py += dy / 6 * (k1.py + 2 * k2.py + 2 * k3.py + k4.py);
    out.t += dy / 6 * (k1.t + 2 * k2.t + 2 * k3.t + k4.t);
    return out;
}

struct RefinedCrossing {
    bool ok = false;
    RealState state;
    double dt_from_step_start = 0.0;
};

// Locate y = 0 between s0 and s1 = flow(s0, dt). All time arithmetic is in the
// offset u in [0, dt] from s0. The swapped step gives the first guess; Newton
// (one RK4 step from s0 per iterate) keeps the event on the local orbit,
// bisection catches the rest.
RefinedCrossing refine_crossing(const RealState& s0, const RealState& s1, double dt,
                                const Params& p, double tol) {
    RefinedCrossing out;
    double u = dt;
    if (s1.py != 0.0) {
        SwapState w{s1.x, s1.px, s1.py, dt};
        w = rk4_swap(w, s1.y, p, -s1.y);
        u = w.t;
    }
    u = std::min(std::max(u, 0.0), dt);

    auto at = [&](double du) { return rk4_flow(s0, p, du); };
    RealState r = at(u);
    for (int i = 0; i < 3 && std::abs(r.y) > tol; ++i) {
        if (r.py == 0.0) break;
        u -= r.y / r.py;
        if (u < 0.0 || u > 2.0 * dt) break;
        r = at(u);
    }

    if (std::abs(r.y) > tol) {
        // bisection fallback on [0, dt]
        double lo = 0.0, hi = dt;
        double ylo = s0.y;
        for (int i = 0; i < 200 && (hi - lo) > 1e-18; ++i) {
            double mid = 0.5 * (lo + hi);
            RealState m = at(mid);
            if ((ylo < 0.0) == (m.y < 0.0)) {
                lo = mid;
                ylo = m.y;
            } else {
                hi = mid;
            }
            r = m;
            u = mid;
            if (std::abs(r.y) <= tol) break;
        }
        if (std::abs(r.y) > tol) return out;
    }
    if (r.py <= 0.0) return out;  // grazing or downward; not a section point
    out.ok = true;
    out.state = r;
    out.dt_from_step_start = u;
    return out;
}

}  // namespace

SectionResult section(const PhaseState& seed, const Params& p, const IntegratorConfig& cfg) {
    cfg.validate();
    if (!p.finite()) throw std::invalid_argument("section: non-finite parameters");

    RealState s = to_real_state(seed);
    const double h0 = energy(s, p);
    auto integral = second_integral(p);
    const double i0 = integral ? integral->eval(s) : 0.0;

    SectionResult out;
    double drift = 0.0;
    const double r2_escape = cfg.escape_radius * cfg.escape_radius;
    const std::int64_t nsteps = static_cast<std::int64_t>(std::ceil(cfg.max_time / cfg.step));

    double t = 0.0;
    for (std::int64_t k = 0; k < nsteps; ++k) {
        const RealState prev = s;
        const double tprev = t;
        s = symplectic_step(s, p, cfg.step, cfg.method);
        t = tprev + cfg.step;

        if (!std::isfinite(s.x) || !std::isfinite(s.y) || !std::isfinite(s.px) || !std::isfinite(s.py)) {
            throw IntegrationError("section: state became non-finite at t = " + std::to_string(t));
        }
        if (integral) drift = std::max(drift, std::abs(integral->eval(s) - i0));

        const double r2 = s.x * s.x + s.y * s.y;
        if (r2 >= r2_escape) {
            out.metrics.escaped = true;
            out.metrics.escape_time = t;
            break;
        }

        if (prev.y < 0.0 && s.y >= 0.0) {
            auto ev = refine_crossing(prev, s, cfg.step, p, cfg.crossing_refine_tol);
            if (ev.ok) {
                SectionEvent e;
                e.index = out.metrics.crossings;
                e.t = tprev + ev.dt_from_step_start;
                e.x = ev.state.x;
                e.px = ev.state.px;
                e.energy_error = std::abs(energy(ev.state, p) - h0);
                out.metrics.max_energy_error = std::max(out.metrics.max_energy_error, e.energy_error);
                out.events.push_back(e);
                out.metrics.crossings += 1;
                if (cfg.max_crossings > 0 && out.metrics.crossings >= cfg.max_crossings) break;
            }
        }
    }

    out.metrics.max_energy_error = std::max(out.metrics.max_energy_error, std::abs(energy(s, p) - h0));
    if (integral) out.metrics.second_integral_drift = drift;
    return out;
}

std::optional<SecondIntegral> second_integral(const Params& p) {
    if (p.b == 0.0) {
        return SecondIntegral{"angular-momentum",
                              [](const RealState& s) { return s.x * s.py - s.y * s.px; }};
    }
    if (p.a != 0.0 && p.b == -p.a) {
        const double mu = p.mu, a = p.a;
        return SecondIntegral{"duffing-energy-x", [mu, a](const RealState& s) {
                                  const double x2 = s.x * s.x;
                                  return 0.5 * s.px * s.px - 0.5 * mu * x2 - 0.25 * a * x2 * x2;
                              }};
    }
    if (p.a != 0.0 && p.b == 2.0 * p.a) {
        const double mu = p.mu, a = p.a;
        return SecondIntegral{"rotated-energy-u", [mu, a](const RealState& s) {
                                  const double inv = 1.0 / std::sqrt(2.0);
                                  const double u = (s.x + s.y) * inv;
                                  const double pu = (s.px + s.py) * inv;
                                  const double u2 = u * u;
                                  return 0.5 * pu * pu - 0.5 * mu * u2 - 0.5 * a * u2 * u2;
                              }};
    }
    return std::nullopt;
}

}  // namespace agk

#include "agk/monodromy.hpp"

#include <boost/numeric/odeint.hpp>
#include <stdexcept>

#include "agk/hamiltonian.hpp"

namespace agk {

namespace {

namespace ode = boost::numeric::odeint;

template <typename State, typename Rhs>
void adaptive_78(Rhs rhs, State& y, double t0, double t1, double tol) {
    if (t1 == t0) return;
    auto stepper = ode::make_controlled(tol, tol, ode::runge_kutta_fehlberg78<State>());
    try {
        ode::integrate_adaptive(stepper, rhs, y, t0, t1, (t1 - t0) / 1024.0);
    } catch (const std::exception& e) {
        throw std::runtime_error(std::string("adaptive integration failed to meet tolerance: ") + e.what());
    }
}

}  // namespace

Monodromy monodromy(const std::function<double(double)>& q, double period) {
    if (!(period > 0.0)) throw std::domain_error("monodromy: period must be positive");
    using State = std::array<double, 4>;  // (xi1, xi1', xi2, xi2')
    State y{1.0, 0.0, 0.0, 1.0};
    auto rhs = [&q](const State& s, State& ds, double t) {
        const double qt = q(t);
        ds[0] = s[1];
        ds[1] = qt * s[0];
        ds[2] = s[3];
        ds[3] = qt * s[2];
    };
    adaptive_78(rhs, y, 0.0, period, 1e-12);
    Monodromy m;
    m.m = {y[0], y[2], y[1], y[3]};
    m.det = y[0] * y[3] - y[2] * y[1];
    return m;
}

namespace {

using State4 = std::array<double, 4>;

void flow_rhs(const Params& p, const State4& s, State4& ds) {
    auto g = grad_potential_at(s[0], s[1], p);
    ds[0] = s[2];
    ds[1] = s[3];
    ds[2] = -g[0];
    ds[3] = -g[1];
}

}  // namespace

std::array<double, 4> integrate_flow(const Params& p, std::array<double, 4> state, double t0,
                                     double t1, double tol) {
    auto rhs = [&p](const State4& s, State4& ds, double) { flow_rhs(p, s, ds); };
    adaptive_78(rhs, state, t0, t1, tol);
    return state;
}

FlowWithVariational integrate_flow_variational(const Params& p, std::array<double, 4> state,
                                               double t0, double t1, double tol) {
    using State = std::array<double, 20>;  // flow + row-major variational matrix
    State y{};
    for (int i = 0; i < 4; ++i) y[static_cast<std::size_t>(i)] = state[static_cast<std::size_t>(i)];
    for (int i = 0; i < 4; ++i) y[static_cast<std::size_t>(4 + 5 * i)] = 1.0;

    auto rhs = [&p](const State& s, State& ds, double) {
        State4 z{s[0], s[1], s[2], s[3]};
        State4 dz;
        flow_rhs(p, z, dz);
        for (int i = 0; i < 4; ++i) ds[static_cast<std::size_t>(i)] = dz[static_cast<std::size_t>(i)];
        auto h = hessian_potential_at(s[0], s[1], p);
        // A = [[0, I], [-(hess V), 0]] acting on each column of Y
        for (int col = 0; col < 4; ++col) {
            const double y0 = s[static_cast<std::size_t>(4 + 0 * 4 + col)];
            const double y1 = s[static_cast<std::size_t>(4 + 1 * 4 + col)];
            const double y2 = s[static_cast<std::size_t>(4 + 2 * 4 + col)];
            const double y3 = s[static_cast<std::size_t>(4 + 3 * 4 + col)];
            ds[static_cast<std::size_t>(4 + 0 * 4 + col)] = y2;
            ds[static_cast<std::size_t>(4 + 1 * 4 + col)] = y3;
            ds[static_cast<std::size_t>(4 + 2 * 4 + col)] = -(h[0] * y0 + h[1] * y1);
            ds[static_cast<std::size_t>(4 + 3 * 4 + col)] = -(h[1] * y0 + h[2] * y1);
        }
    };
    adaptive_78(rhs, y, t0, t1, tol);

    FlowWithVariational out;
    for (int i = 0; i < 4; ++i) out.state[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(i)];
    for (int i = 0; i < 16; ++i) out.variational[static_cast<std::size_t>(i)] = y[static_cast<std::size_t>(4 + i)];
    return out;
}

}  // namespace agk

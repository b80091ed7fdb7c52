#pragma once

#include <array>
#include <functional>

#include "agk/params.hpp"

namespace agk {

/// Fundamental matrix of xi'' = q(t) xi over [0, T] for basis data (1,0), (0,1),
/// row-major [[xi1, xi2], [xi1', xi2']]. The system is trace-free, so det is
/// the Wronskian and must stay at 1.
struct Monodromy {
    std::array<double, 4> m{};
    double det = 0.0;
};

Monodromy monodromy(const std::function<double(double)>& q, double period);

/// Reference (non-symplectic) high-order integration of the full flow.
std::array<double, 4> integrate_flow(const Params& p, std::array<double, 4> state, double t0,
                                     double t1, double tol = 1e-12);

/// Flow plus its 4x4 variational matrix (row-major), propagated together.
struct FlowWithVariational {
    std::array<double, 4> state{};
    std::array<double, 16> variational{};
};

FlowWithVariational integrate_flow_variational(const Params& p, std::array<double, 4> state,
                                               double t0, double t1, double tol = 1e-12);

}  // namespace agk

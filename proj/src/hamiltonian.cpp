#include "agk/hamiltonian.hpp"

namespace agk {

double potential(const PhaseState& s, const Params& p) {
    return potential_at(s.x(), s.y(), p);
}

double energy(const PhaseState& s, const Params& p) {
    double px = s.px(), py = s.py();
    return 0.5 * (px * px + py * py) + potential(s, p);
}

std::array<double, 2> grad_potential(const PhaseState& s, const Params& p) {
    return grad_potential_at(s.x(), s.y(), p);
}

std::array<double, 3> hessian_potential(const PhaseState& s, const Params& p) {
    return hessian_potential_at(s.x(), s.y(), p);
}

std::complex<double> potential_c(const PhaseState& s, const Params& p) {
    return potential_at(s.xc(), s.yc(), p);
}

std::complex<double> energy_c(const PhaseState& s, const Params& p) {
    auto px = s.pxc(), py = s.pyc();
    return 0.5 * (px * px + py * py) + potential_c(s, p);
}

}  // namespace agk

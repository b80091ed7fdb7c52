#pragma once

#include <array>

#include "agk/phase_state.hpp"

namespace agk {

/// The six symmetry planes fixed by the dihedral action. Gamma2 duplicates
/// Gamma1 and Gamma4..Gamma6 duplicate Gamma3 up to a rotation; the momentum
/// constraint always follows the configuration constraint (y = s x forces
/// py = s px, otherwise the plane is not preserved by the flow).
enum class Plane { Gamma1 = 1, Gamma2, Gamma3, Gamma4, Gamma5, Gamma6 };

enum class EnergyCase { H0, HStar };

/// Two linear constraint functionals; the plane is their common zero set.
struct PlaneConstraints {
    std::array<double, 4> g1;  // coefficients on (x, y, px, py)
    std::array<double, 4> g2;
};

PlaneConstraints plane_constraints(Plane plane);

/// Parametrize the plane: (u, v) are the in-plane position/momentum coordinates.
PhaseState sample_on_plane(Plane plane, double u, double v);

const char* plane_name(Plane plane);

}  // namespace agk

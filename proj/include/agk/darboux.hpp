#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "agk/homogeneous_poly.hpp"
#include "agk/mr_table.hpp"
#include "agk/polar.hpp"

namespace agk {

/// Nonzero c with grad V(c) = alpha c.
struct DarbouxPoint {
    std::complex<double> cx;
    std::complex<double> cy;
    double alpha = 0.0;
    bool degenerate_circle = false;  // representative of a continuum of solutions
};

struct DarbouxSet {
    std::vector<DarbouxPoint> points;
    bool degenerate_circle = false;
};

/// Closed-form Darboux points of the D4-symmetric quartic family, up to the
/// antipodal identification (x,y) -> (-x,-y). Throws for alpha = 0 or for
/// potentials outside the family.
DarbouxSet darboux_points(const HomogeneousPoly2& p, double alpha);

struct SpectrumReport {
    DarbouxPoint point;
    std::array<double, 2> eigenvalues;  // {trivial alpha(k-1), the other one}
    double lambda_tilde = 0.0;          // the nontrivial eigenvalue
    bool degenerate = false;
};

SpectrumReport hessian_spectrum(const HomogeneousPoly2& p, const DarbouxPoint& d);

/// Per-eigenvalue outcome of the admissible-table test.
struct LambdaFinding {
    double value = 0.0;
    std::optional<Rational> rational;  // exact, or snapped from the numeric value
    bool exact = false;
    std::optional<MRWitness> witness;
    enum class State { Member, NonMember, IrrationalExcluded, IrrationalInconclusive };
    State state = State::NonMember;
};

struct NecessaryReport {
    enum class Status { NotExcluded, Excluded, Inconclusive };
    Status status = Status::Inconclusive;
    std::vector<LambdaFinding> findings;
    bool degenerate_circle = false;
    std::vector<std::string> notes;
};

/// Necessary condition for an additional rational first integral of the
/// homogeneous part: every lambda-set value must sit in the admissible table.
/// Degree -2, 0, 2 are rejected.
NecessaryReport rational_integrability_necessary(const HomogeneousPoly2& p_max);

}  // namespace agk

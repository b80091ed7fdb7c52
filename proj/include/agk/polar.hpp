#pragma once

#include <vector>

#include "agk/homogeneous_poly.hpp"
#include "agk/laurent_poly.hpp"

namespace agk {

/// Polar representation V(r, theta) = r^k F(e^{i theta}).
struct PolarForm {
    int k = 0;
    LaurentPoly F;
};

/// Exact polar form via cos(theta) = (z + 1/z)/2, sin(theta) = (z - 1/z)/(2i).
/// Requires degree >= 1.
PolarForm polar_form(const HomogeneousPoly2& p);

/// The eigenvalue-like set { k - z^2 F''(z)/F(z) : z != 0, F'(z) = 0, F(z) != 0 }.
struct LambdaReport {
    std::vector<double> values;    // deduplicated, ascending
    std::vector<Rational> exact;   // parallel to values when exact_available
    bool exact_available = false;
    bool degenerate_circle = false;  // F' identically zero; the set collapses to {k}
    bool any_nonreal = false;
};

LambdaReport lambda_set(const PolarForm& pf);

/// Companion-matrix route (Newton-polished eigenvalues of the shifted F'
/// numerator). lambda_set prefers the exact route when F is a cosine-type
/// polynomial and falls back to this one.
LambdaReport lambda_set_numeric(const PolarForm& pf);

}  // namespace agk

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "agk/rational.hpp"

namespace agk {

/// Admissible-eigenvalue witness: substituting j into the family formula
/// reproduces lambda exactly.
struct MRWitness {
    int family = 0;  // 1..16, printed table order (left column, then right)
    std::int64_t j = 0;
    Rational lambda;
    int k = 0;
};

/// k(k-1), the eigenvalue forced along the Darboux direction.
Rational trivial_lambda(int k);

/// Shifted-square row: lambda = c0 + c1 (c2 + c3 j)^2, valid only for row k.
struct MRTableRow {
    int id;
    int k;
    Rational c0, c1, c2, c3;
};

/// The fourteen degree-specific rows (ids 3..16). Ids 1 and 2 are the generic
/// families valid for every admissible degree.
const std::vector<MRTableRow>& mr_special_rows();

Rational mr_generic_family1(int k, std::int64_t j);  // (1/2) jk (jk + k - 2)
Rational mr_generic_family2(int k, std::int64_t j);  // (1/2)(jk + 1)(jk + k - 1)
Rational mr_row_eval(const MRTableRow& row, std::int64_t j);

/// Exact membership test of (k, lambda) against the admissible table.
/// Quadratics in j are solved by integer discriminant square-root testing;
/// no floating point is involved. Throws std::domain_error for k in {-2,0,2}.
std::optional<MRWitness> mr_member(int k, const Rational& lambda);

}  // namespace agk

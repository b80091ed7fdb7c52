#include "agk/mr_table.hpp"

#include <stdexcept>

namespace agk {

Rational trivial_lambda(int k) {
    return Rational(std::int64_t(k) * (std::int64_t(k) - 1));
}

const std::vector<MRTableRow>& mr_special_rows() {
    // Printed order: left column top to bottom (ids 3..8 after the two generic
    // rows), then the right column (ids 9..16). Row 16 uses step 6 as
    // tabulated; the sibling k=5 row uses step 10.
    static const std::vector<MRTableRow> rows = {
        {3, -5, Rational(-49, 8), Rational(1, 8), Rational(10, 3), Rational(10)},
        {4, -5, Rational(-49, 8), Rational(1, 8), Rational(4), Rational(10)},
        {5, -4, Rational(-9, 2), Rational(1, 2), Rational(4, 3), Rational(4)},
        {6, -3, Rational(-25, 8), Rational(1, 8), Rational(2), Rational(6)},
        {7, -3, Rational(-25, 8), Rational(1, 8), Rational(3, 2), Rational(6)},
        {8, -3, Rational(-25, 8), Rational(1, 8), Rational(6, 5), Rational(6)},
        {9, -3, Rational(-25, 8), Rational(1, 8), Rational(12, 5), Rational(6)},
        {10, 3, Rational(-1, 8), Rational(1, 8), Rational(2), Rational(6)},
        {11, 3, Rational(-1, 8), Rational(1, 8), Rational(3, 2), Rational(6)},
        {12, 3, Rational(-1, 8), Rational(1, 8), Rational(6, 5), Rational(6)},
        {13, 3, Rational(-1, 8), Rational(1, 8), Rational(12, 5), Rational(6)},
        {14, 4, Rational(-1, 2), Rational(1, 2), Rational(4, 3), Rational(4)},
        {15, 5, Rational(-9, 8), Rational(1, 8), Rational(10, 3), Rational(10)},
        {16, 5, Rational(-9, 8), Rational(1, 8), Rational(4), Rational(6)},
    };
    return rows;
}

Rational mr_generic_family1(int k, std::int64_t j) {
    Rational jk = Rational(j) * Rational(k);
    return Rational(1, 2) * jk * (jk + Rational(k - 2));
}

Rational mr_generic_family2(int k, std::int64_t j) {
    Rational jk = Rational(j) * Rational(k);
    return Rational(1, 2) * (jk + Rational(1)) * (jk + Rational(k - 1));
}

Rational mr_row_eval(const MRTableRow& row, std::int64_t j) {
    Rational t = row.c2 + row.c3 * Rational(j);
    return row.c0 + row.c1 * t * t;
}

namespace {

// Solve m^2 + B m + C = 0 over the integers; roots ordered +discriminant first.
bool integer_quadratic_roots(std::int64_t B, std::int64_t C, std::int64_t roots[2], int& count) {
    count = 0;
    // discriminant in 128-bit to be safe
    __int128 disc = __int128(B) * B - 4 * __int128(C);
    if (disc < 0) return false;
    if (disc > __int128(9000000000000000000LL)) return false;  // out of exact-sqrt range
    std::int64_t s = 0;
    if (!is_perfect_square(static_cast<std::int64_t>(disc), &s)) return false;
    for (std::int64_t sign : {+1, -1}) {
        std::int64_t t = -B + sign * s;
        if (t % 2 != 0) continue;
        roots[count++] = t / 2;
        if (s == 0) break;  // double root
    }
    return count > 0;
}

std::optional<std::int64_t> as_multiple_of(std::int64_t m, int k) {
    if (m % k != 0) return std::nullopt;
    return m / k;
}

}  // namespace

std::optional<MRWitness> mr_member(int k, const Rational& lambda) {
    if (k == -2 || k == 0 || k == 2) {
        throw std::domain_error("mr_member: degree k in {-2, 0, 2} is not admissible");
    }

    // Generic families need 2*lambda integral: with m = jk,
    //   family 1: m(m + k - 2) = 2 lambda,
    //   family 2: (m + 1)(m + k - 1) = 2 lambda.
    Rational twol = Rational(2) * lambda;
    if (twol.is_integer()) {
        std::int64_t n = twol.num();
        std::int64_t roots[2];
        int count = 0;
        if (integer_quadratic_roots(k - 2, -n, roots, count)) {
            for (int i = 0; i < count; ++i) {
                if (auto j = as_multiple_of(roots[i], k)) {
                    return MRWitness{1, *j, lambda, k};
                }
            }
        }
        if (integer_quadratic_roots(k, (k - 1) - n, roots, count)) {
            for (int i = 0; i < count; ++i) {
                if (auto j = as_multiple_of(roots[i], k)) {
                    return MRWitness{2, *j, lambda, k};
                }
            }
        }
    }

    for (const auto& row : mr_special_rows()) {
        if (row.k != k) continue;
        Rational w = (lambda - row.c0) / row.c1;
        if (w < Rational(0)) continue;
        auto s = w.exact_sqrt();
        if (!s) continue;
        for (int sign : {+1, -1}) {
            Rational t = Rational(sign) * (*s);
            Rational j = (t - row.c2) / row.c3;
            if (j.is_integer()) {
                return MRWitness{row.id, j.num(), lambda, k};
            }
            if (s->is_zero()) break;
        }
    }
    return std::nullopt;
}

}  // namespace agk

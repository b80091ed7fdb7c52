#include <doctest.h>

#include <stdexcept>
#include <unordered_set>

#include "agk/mr_table.hpp"

using namespace agk;

namespace {

// Independent oracle: enumerate j over every row of the table.
std::unordered_set<Rational> oracle_values(int k, std::int64_t jmax) {
    std::unordered_set<Rational> vals;
    for (std::int64_t j = -jmax; j <= jmax; ++j) {
        vals.insert(mr_generic_family1(k, j));
        vals.insert(mr_generic_family2(k, j));
        for (const auto& row : mr_special_rows()) {
            if (row.k == k) vals.insert(mr_row_eval(row, j));
        }
    }
    return vals;
}

Rational eval_witness(const MRWitness& w) {
    if (w.family == 1) return mr_generic_family1(w.k, w.j);
    if (w.family == 2) return mr_generic_family2(w.k, w.j);
    for (const auto& row : mr_special_rows()) {
        if (row.id == w.family) return mr_row_eval(row, w.j);
    }
    throw std::logic_error("unknown witness family");
}

}  // namespace

TEST_CASE("trivial eigenvalue k(k-1)") {
    CHECK(trivial_lambda(4) == Rational(12));
    CHECK(trivial_lambda(2) == Rational(2));
    CHECK(trivial_lambda(-3) == Rational(12));
}

TEST_CASE("pinned membership examples for k = 4") {
    auto w12 = mr_member(4, Rational(12));
    REQUIRE(w12.has_value());
    CHECK(w12->family == 1);
    CHECK(w12->j == 1);

    auto w0 = mr_member(4, Rational(0));
    REQUIRE(w0.has_value());
    CHECK(w0->family == 1);
    CHECK(w0->j == 0);

    CHECK(!mr_member(4, Rational(8)).has_value());

    auto w4 = mr_member(4, Rational(4));
    REQUIRE(w4.has_value());
    CHECK(w4->family == 1);
    CHECK(w4->j == -1);
}

TEST_CASE("inadmissible degrees are rejected") {
    CHECK_THROWS_AS(mr_member(0, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(mr_member(2, Rational(1)), std::domain_error);
    CHECK_THROWS_AS(mr_member(-2, Rational(1)), std::domain_error);
}

TEST_CASE("witnesses are sound") {
    for (int k : {-5, -4, -3, 3, 4, 5, 7}) {
        for (std::int64_t num = -40; num <= 40; ++num) {
            for (std::int64_t den : {1, 2, 8}) {
                Rational lambda(num, den);
                auto w = mr_member(k, lambda);
                if (w) {
                    CHECK(w->k == k);
                    CHECK(eval_witness(*w) == lambda);
                }
            }
        }
    }
}

TEST_CASE("completeness against the enumeration oracle for k = 4") {
    auto oracle = oracle_values(4, 10000);
    for (std::int64_t p = -60; p <= 60; ++p) {
        for (std::int64_t q = 1; q <= 8; ++q) {
            Rational lambda(p, q);
            const bool mine = mr_member(4, lambda).has_value();
            const bool truth = oracle.count(lambda) > 0;
            CHECK_MESSAGE(mine == truth, "lambda = ", lambda.str());
        }
    }
}

TEST_CASE("k(k-1) is always a member") {
    for (int k : {-3, 3, -4, 4, -5, 5, 6, 7}) {
        auto w = mr_member(k, trivial_lambda(k));
        REQUIRE_MESSAGE(w.has_value(), "k = ", k);
        CHECK(eval_witness(*w) == trivial_lambda(k));
    }
}

TEST_CASE("special rows round-trip through the oracle") {
    // spot-check that the shifted-square rows accept their own values
    for (const auto& row : mr_special_rows()) {
        for (std::int64_t j : {-7, -1, 0, 2, 11}) {
            Rational lambda = mr_row_eval(row, j);
            auto w = mr_member(row.k, lambda);
            REQUIRE_MESSAGE(w.has_value(), "row ", row.id, " j = ", j);
            CHECK(eval_witness(*w) == lambda);
        }
    }
}

#include "doctest.h"

#include <cstdint>

#include "fibrous/checked.hpp"
#include "fibrous/errors.hpp"
#include "fibrous/snf.hpp"
#include "test_support.hpp"

using namespace fibrous;

namespace {

IntegerMatrix from_rows(const std::vector<std::vector<std::int64_t>>& rows) {
    IntegerMatrix m(static_cast<std::int64_t>(rows.size()),
                    rows.empty() ? 0 : static_cast<std::int64_t>(rows[0].size()));
    for (std::size_t r = 0; r < rows.size(); ++r)
        for (std::size_t c = 0; c < rows[r].size(); ++c)
            m.at(static_cast<std::int64_t>(r), static_cast<std::int64_t>(c)) = rows[r][c];
    return m;
}

} // namespace

TEST_CASE("small cases") {
    CHECK(smith_normal_form(from_rows({{2}})).invariant_factors ==
          std::vector<std::int64_t>{2});
    CHECK(smith_normal_form(from_rows({{-3}})).invariant_factors ==
          std::vector<std::int64_t>{3});

    const SnfResult zero = smith_normal_form(IntegerMatrix(2, 3));
    CHECK(zero.rank == 0);
    CHECK(zero.invariant_factors.empty());

    const SnfResult empty = smith_normal_form(IntegerMatrix(0, 5));
    CHECK(empty.rank == 0);
    CHECK(empty.invariant_factors.empty());
}

TEST_CASE("diag(1,6,4) has invariant factors 1, 2, 12 under any shuffling") {
    // d1 = gcd of entries = 1; d1*d2 = gcd of 2x2 minors = 2; d1*d2*d3 = 24
    const std::vector<std::vector<std::vector<std::int64_t>>> arrangements = {
        {{1, 0, 0}, {0, 6, 0}, {0, 0, 4}},
        {{6, 0, 0}, {0, 4, 0}, {0, 0, 1}},
        {{0, 0, 4}, {0, 1, 0}, {6, 0, 0}},
    };
    for (const auto& rows : arrangements) {
        const SnfResult snf = smith_normal_form(from_rows(rows));
        CHECK(snf.invariant_factors == std::vector<std::int64_t>{1, 2, 12});
        CHECK(snf.rank == 3);
    }
}

TEST_CASE("snf matches the gcd-of-minors oracle and fraction-free rank") {
    testsupport::Rng rng(0x5eed4001);
    for (int i = 0; i < 250; ++i) {
        const IntegerMatrix m = testsupport::random_matrix(rng);
        const SnfResult snf = smith_normal_form(m);

        CHECK(snf.rank == testsupport::bareiss_rank(m));
        CHECK(snf.rank <= std::min(m.rows, m.cols));

        // divisibility chain
        for (std::size_t k = 1; k < snf.invariant_factors.size(); ++k) {
            CHECK(snf.invariant_factors[k - 1] > 0);
            CHECK(snf.invariant_factors[k] % snf.invariant_factors[k - 1] == 0);
        }

        // d_1 * ... * d_k equals the k-th determinantal divisor
        const std::int64_t limit = std::min(m.rows, m.cols);
        std::int64_t product = 1;
        for (std::int64_t k = 1; k <= limit; ++k) {
            const std::int64_t dk = testsupport::minor_gcd(m, k);
            if (k <= snf.rank) {
                product *= snf.invariant_factors[static_cast<std::size_t>(k - 1)];
                CHECK(dk == product);
            } else {
                CHECK(dk == 0);
            }
        }
    }
}

TEST_CASE("snf overflow is a hard error, not a wrap") {
    // eliminating with these magnitudes must overflow a checked 64-bit step
    IntegerMatrix m(2, 2);
    m.at(0, 0) = 1;
    m.at(0, 1) = (std::int64_t{1} << 62);
    m.at(1, 0) = (std::int64_t{1} << 62);
    m.at(1, 1) = 0;
    CHECK_THROWS_AS(smith_normal_form(m), OverflowError);
}

TEST_CASE("checked arithmetic raises instead of wrapping") {
    CHECK_THROWS_AS(checked_add(INT64_MAX, 1), OverflowError);
    CHECK_THROWS_AS(checked_sub(INT64_MIN, 1), OverflowError);
    CHECK_THROWS_AS(checked_mul(INT64_MAX / 2, 3), OverflowError);
    CHECK_THROWS_AS(checked_neg(INT64_MIN), OverflowError);
    CHECK(checked_add(2, 2) == 4);
    CHECK(checked_mul(-3, 4) == -12);
}

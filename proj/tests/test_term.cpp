#include "doctest.h"

#include "fibrous/errors.hpp"
#include "fibrous/term.hpp"

using namespace fibrous;

TEST_CASE("constructors enforce term invariants") {
    CHECK_NOTHROW(finite_space(0));
    CHECK_THROWS_AS(finite_space(-1), TermError);
    CHECK_THROWS_AS(sum({}), TermError);
    CHECK_THROWS_AS(multiple(0, finite_space(1)), TermError);
    CHECK_THROWS_AS(multiple(-2, finite_space(1)), TermError);
    CHECK_NOTHROW(multiple(1, finite_space(0)));

    // transitional.size() == running.size() + 1
    CHECK_THROWS_AS(decomp({}, {}), TermError);
    CHECK_THROWS_AS(decomp({finite_space(1), finite_space(1)}, {}), TermError);
    CHECK_THROWS_AS(decomp({finite_space(1)}, {finite_space(2)}), TermError);
    CHECK_NOTHROW(decomp({finite_space(1)}, {}));
    CHECK_NOTHROW(decomp({finite_space(1), finite_space(1)}, {finite_space(2)}));
}

TEST_CASE("structural equality is deep and shape-sensitive") {
    const TermPtr a = decomp({finite_space(1), finite_space(1)}, {catalog_ref("S", {0})});
    const TermPtr b = decomp({finite_space(1), finite_space(1)}, {catalog_ref("S", {0})});
    const TermPtr c = decomp({finite_space(1), finite_space(2)}, {catalog_ref("S", {0})});
    CHECK(structurally_equal(a, b));
    CHECK_FALSE(structurally_equal(a, c));

    // Finite(2) and 2 copies of a point are different terms
    CHECK_FALSE(structurally_equal(finite_space(2), multiple(2, finite_space(1))));
    CHECK_FALSE(structurally_equal(sum({finite_space(1)}), finite_space(1)));
    CHECK(structurally_equal(catalog_ref("cw", {1, 2}), catalog_ref("cw", {1, 2})));
    CHECK_FALSE(structurally_equal(catalog_ref("cw", {1, 2}), catalog_ref("cw", {2, 1})));
}

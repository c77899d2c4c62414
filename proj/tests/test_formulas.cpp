#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "symcount/formulas.hpp"

using namespace symcount;

TEST_CASE("sigma is the divisor sum") {
    CHECK(sigma(1) == 1);
    CHECK(sigma(2) == 3);
    CHECK(sigma(6) == 12);
    CHECK(sigma(12) == 28);
    CHECK(sigma(16) == 31);
    CHECK(sigma(49) == 57);
    // multiplicative on coprime arguments
    CHECK(sigma(4) * sigma(9) == sigma(36));
    CHECK_THROWS_AS(sigma(0), std::invalid_argument);
}

TEST_CASE("nu_elementary is the product of (p^i + 1)") {
    CHECK(nu_elementary(2, 1) == 3);
    CHECK(nu_elementary(2, 2) == 15);
    CHECK(nu_elementary(2, 3) == 135);
    CHECK(nu_elementary(3, 2) == 40);
    CHECK(nu_elementary(5, 2) == 156);
    CHECK(nu_elementary(7, 1) == 8);
    CHECK_THROWS_AS(nu_elementary(2, 0), std::invalid_argument);
}

TEST_CASE("group orders satisfy the orbit-stabilizer relation") {
    // |Sp(2,p)| = p(p^2-1); |Sp(4,2)| = 720.
    CHECK(group_orders(1, 3).sp_order == 24);
    CHECK(group_orders(2, 2).sp_order == 720);
    CHECK(group_orders(1, 2).gl_order == 1);
    CHECK(group_orders(2, 2).gl_order == 6);
    for (int g = 1; g <= 5; ++g)
        for (std::int64_t p : {2, 3, 5, 7, 11}) {
            GroupOrders o = group_orders(g, p);
            CHECK(o.sp_order == nu_elementary(p, g) * o.stabilizer_order);
            CHECK(o.stabilizer_order % o.gl_order == 0);
        }
}

TEST_CASE("per-type counts at (2,4) sum to 11191") {
    CHECK(nu_pp_by_type(2, 4, {1, 0, 0}) == 7680);
    CHECK(nu_pp_by_type(2, 4, {2, 1, 0}) == 2880);
    CHECK(nu_pp_by_type(2, 4, {3, 0, 0}) == 480);
    CHECK(nu_pp_by_type(2, 4, {5, 0, 1}) == 30);
    CHECK(nu_pp_by_type(2, 4, {6, 1, 0}) == 120);
    CHECK(nu_pp_by_type(2, 4, {7, 0, 0}) == 1);
    CHECK(nu_pp_total(2, 4) == 11191);
    CHECK_THROWS_AS(nu_pp_by_type(2, 4, TypeLabel{4, 2, 1}), std::invalid_argument);
}

TEST_CASE("nu_pp_total reproduces the printed diagonal") {
    CHECK(nu_pp_total(2, 0) == 1);
    CHECK(nu_pp_total(2, 1) == 15);
    CHECK(nu_pp_total(2, 2) == 151);
    CHECK(nu_pp_total(2, 3) == 1335);
    CHECK(nu_pp_total(3, 1) == 40);
    CHECK(nu_pp_total(3, 2) == 1201);
    CHECK(nu_pp_total(5, 1) == 156);
    CHECK(nu_pp_total(7, 1) == 400);
}

TEST_CASE("the closed odd/even forms agree with the per-type sums") {
    CHECK(nu_prop52_odd(2, 2) == 91575);
    CHECK(nu_prop52_even(2, 3) == 740791);
    for (std::int64_t p : {2, 3, 5, 7}) {
        for (int m = 2; m <= 5; ++m) CHECK(nu_prop52_odd(p, m) == nu_pp_total(p, 2 * m + 1));
        for (int m = 3; m <= 5; ++m) CHECK(nu_prop52_even(p, m) == nu_pp_total(p, 2 * m));
    }
    CHECK_THROWS_AS(nu_prop52_odd(2, 1), std::invalid_argument);
    CHECK_THROWS_AS(nu_prop52_even(2, 2), std::invalid_argument);
}

TEST_CASE("the hybrid counter picks closed forms where they exist") {
    CountValue cv = nu(PolarizationType({1, 5}));
    CHECK(cv.value == 6);
    CHECK(cv.method == CountMethod::closed_form);

    cv = nu(PolarizationType({3, 3}));
    CHECK(cv.value == 40);
    CHECK(cv.method == CountMethod::closed_form);

    cv = nu(PolarizationType({8, 8}));
    CHECK(cv.value == 1335);
    CHECK(cv.method == CountMethod::closed_form);

    cv = nu(PolarizationType({12, 12}));
    CHECK(cv.value == 6040);
    CHECK(cv.method == CountMethod::product_of_components);

    cv = nu(PolarizationType({1, 1}));
    CHECK(cv.value == 1);
    CHECK(cv.method == CountMethod::closed_form);
}

TEST_CASE("shapes without a closed form fall back to enumeration") {
    CountValue cv = nu(PolarizationType({2, 4}));
    CHECK(cv.value == 39);
    CHECK(cv.method == CountMethod::enumeration);

    cv = nu(PolarizationType({2, 12}));  // (2,4)-part enumerated, 3-part closed
    CHECK(cv.value == 156);
    CHECK(cv.method == CountMethod::product_of_components);

    CHECK_THROWS_AS(nu(PolarizationType({2, 4}), {}, CountStrategy::closed_only),
                    std::domain_error);
}

TEST_CASE("strategies agree where both apply") {
    for (const auto& ds : {std::vector<std::int64_t>{2, 2}, {3, 3}, {1, 6}, {4, 4}}) {
        PolarizationType t{ds};
        CHECK(nu(t, {}, CountStrategy::closed_only).value ==
              nu(t, {}, CountStrategy::enumerate_only).value);
    }
}

#include <doctest.h>

#include "cyclic/residue.hpp"

using namespace cyclic;

TEST_CASE("rrs basics") {
    CHECK(rrs(4).elements == std::vector<i64>{1, 3});
    CHECK(rrs(1).elements == std::vector<i64>{0});
    CHECK(rrs(9).elements == std::vector<i64>{1, 2, 4, 5, 7, 8});
    CHECK(rrs(2).elements == std::vector<i64>{1});
}

TEST_CASE("rrs_star first half") {
    CHECK(rrs_star(9).elements == std::vector<i64>{1, 2, 4});
    CHECK(rrs_star(4).elements == std::vector<i64>{1});
    CHECK(rrs_star(17).elements == std::vector<i64>{1, 2, 3, 4, 5, 6, 7, 8});
    CHECK(rrs_star(1).elements == std::vector<i64>{0});
    CHECK(rrs_star(2).elements == std::vector<i64>{1});
}

TEST_CASE("rrs_odd") {
    CHECK(rrs_odd(17).elements == std::vector<i64>{1, 3, 5, 7, 9, 11, 13, 15});
    CHECK(rrs_odd(9).elements == std::vector<i64>{1, 5, 7});
    CHECK(rrs_odd(3).elements == std::vector<i64>{1});
    CHECK_THROWS_AS(rrs_odd(8), std::invalid_argument);
    CHECK_THROWS_AS(rrs_odd(1), std::invalid_argument);
}

TEST_CASE("rrs_star parity split") {
    CHECK(rrs_star_odd(65).elements ==
          std::vector<i64>{1, 3, 7, 9, 11, 17, 19, 21, 23, 27, 29, 31});
    CHECK(rrs_star_even(9).elements == std::vector<i64>{2, 4});
    for (i64 b = 3; b <= 101; b += 2) {
        auto half = rrs_star(b).elements;
        auto odd = rrs_star_odd(b).elements;
        auto even = rrs_star_even(b).elements;
        std::vector<i64> merged(odd);
        merged.insert(merged.end(), even.begin(), even.end());
        std::sort(merged.begin(), merged.end());
        CHECK(merged == half);
    }
}

TEST_CASE("sigma_star and delta") {
    CHECK(sigma_star(1) == 1);
    CHECK(sigma_star(2) == 1);
    CHECK(sigma_star(9) == 3);
    CHECK(sigma_star(65) == 24);
    CHECK(delta_degree(1) == 1);
    CHECK(delta_degree(9) == 3);
    // delta(b) = sigma*(b) for odd b
    for (i64 b = 3; b <= 201; b += 2) CHECK(delta_degree(b) == sigma_star(b));
}

TEST_CASE("mod_star examples") {
    CHECK(mod_star(17, 9) == 1);
    CHECK(mod_star(4, 9) == 4);
    CHECK(mod_star(5, 9) == 4);
    CHECK(mod_star(7, 1) == 0);
    CHECK(mod_star(-123, 1) == 0);
    CHECK(mod_star(-1, 9) == 1);
    CHECK_THROWS_AS(mod_star(3, 9), std::domain_error);
    CHECK_THROWS_AS(mod_star(0, 5), std::domain_error);
}

TEST_CASE("mod_star fold symmetry and multiplicativity, small sweep") {
    for (i64 n = 3; n <= 60; ++n) {
        for (i64 a : rrs(n).elements) {
            CHECK(mod_star(a, n) == mod_star(n - a, n));
            for (i64 b : rrs(n).elements) {
                CHECK(mod_star_mul(a, b, n) == mod_star(a * b, n));
            }
        }
    }
}

TEST_CASE("mod_star_mul examples") {
    CHECK(mod_star_mul(2, 2, 9) == 4);
    CHECK(mod_star_mul(4, 4, 9) == 2);
    CHECK(mod_star_mul(8, 8, 17) == 4);
    CHECK_THROWS_AS(mod_star_mul(2, 3, 9), std::domain_error);
}

TEST_CASE("mod_star_order") {
    CHECK(mod_star_order(2, 65) == 6);
    CHECK(mod_star_order(3, 65) == 12);
    CHECK(mod_star_order(1, 9) == 1);
    CHECK(mod_star_order(1, 2) == 1);
    CHECK_THROWS_AS(mod_star_order(5, 65), std::domain_error);
}

TEST_CASE("gstar structure") {
    GStarStructure g65 = gstar_structure(65);
    CHECK(g65.group_order == 24);
    CHECK(g65.max_order == 12);
    CHECK_FALSE(g65.cyclic);

    GStarStructure g9 = gstar_structure(9);
    CHECK(g9.group_order == 3);
    CHECK(g9.cyclic);

    GStarStructure g3 = gstar_structure(3);
    CHECK(g3.orders == std::vector<i64>{1});
    CHECK(g3.cyclic);

    CHECK_THROWS_AS(gstar_structure(2), std::invalid_argument);
}

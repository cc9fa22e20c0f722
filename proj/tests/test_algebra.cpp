#include <doctest.h>

#include <cmath>

#include "cyclic/algebra.hpp"
#include "cyclic/golden.hpp"
#include "cyclic/render.hpp"
#include "cyclic/residue.hpp"

using namespace cyclic;

namespace {

IntPoly poly(std::vector<long> coeffs) {
    std::vector<BigInt> big(coeffs.begin(), coeffs.end());
    return IntPoly{std::move(big)};
}

} // namespace

TEST_CASE("chebyshev R") {
    CHECK(chebyshev_R(0) == poly({2}));
    CHECK(chebyshev_R(1) == poly({0, 1}));
    CHECK(chebyshev_R(2) == poly({-2, 0, 1}));
    CHECK(chebyshev_R(3) == poly({0, -3, 0, 1}));
    CHECK_THROWS_AS(chebyshev_R(-1), std::invalid_argument);
}

TEST_CASE("int poly arithmetic") {
    IntPoly a = poly({-1, 0, 1});       // x^2 - 1
    IntPoly b = poly({-1, 1});          // x - 1
    CHECK(a.divide_exact(b) == poly({1, 1}));
    CHECK_THROWS_AS(poly({1, 0, 1}).divide_exact(b), std::logic_error);
    CHECK(poly({1, 0}) == poly({1}));   // canonical trim
    CHECK((a * b).degree() == 3);
    CHECK(a - a == IntPoly{});
    CHECK(a.evaluate(mpq_class(3)) == 8);
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic(1) == poly({-1, 1}));
    CHECK(cyclotomic(2) == poly({1, 1}));
    CHECK(cyclotomic(5) == poly({1, 1, 1, 1, 1}));
    CHECK(cyclotomic(6) == poly({1, -1, 1}));
    CHECK(cyclotomic(12) == poly({1, 0, -1, 0, 1}));
    // degrees are phi(n)
    for (i64 n = 1; n <= 60; ++n) CHECK(cyclotomic(n).degree() == euler_phi(n));
}

TEST_CASE("minimal polynomials of 2cos(pi/n)") {
    CHECK(minimal_poly_C(1) == poly({2, 1}));
    CHECK(minimal_poly_C(2) == poly({0, 1}));
    CHECK(minimal_poly_C(3) == poly({-1, 1}));
    CHECK(minimal_poly_C(9) == poly({-1, -3, 0, 1}));
    for (i64 n = 1; n <= 40; ++n) {
        IntPoly c = minimal_poly_C(n);
        CHECK(c.is_monic());
        CHECK(c.degree() == delta_degree(n));
    }
}

TEST_CASE("minimal polynomials of 2cos(2pi/n)") {
    CHECK(mpr2(1) == poly({-2, 1}));
    CHECK(mpr2(2) == poly({2, 1}));
    CHECK(mpr2(3) == poly({1, 1}));
    CHECK(mpr2(5) == poly({-1, 1, 1}));
    IntPoly m65 = mpr2(65);
    REQUIRE(m65.degree() == 24);
    const auto& expected = golden::mpr2_65();
    for (std::size_t i = 0; i < expected.size(); ++i) {
        CHECK(m65[i] == expected[i]);
    }
}

TEST_CASE("product route agrees with the cyclotomic fold") {
    for (i64 n = 1; n <= 40; ++n) CHECK(mpr2(n) == mpr2_via_product(n));
    CHECK(mpr2(65) == mpr2_via_product(65));
}

TEST_CASE("rho arithmetic in Z[rho(9)]") {
    RhoRing ring(9);
    CHECK(ring.degree() == 3);
    CHECK(ring.modulus() == poly({-1, -3, 0, 1}));

    RhoElement r = ring.rho();
    RhoElement r2 = ring.mul(r, r);
    CHECK(r2.coeff == std::vector<BigInt>{0, 0, 1});
    RhoElement r3 = ring.mul(r2, r);
    CHECK(r3.coeff == std::vector<BigInt>{1, 3, 0});   // rho^3 = 3 rho + 1
    CHECK(ring.mul(ring.one(), r2) == r2);
    CHECK(rho_mul(r, r) == r2);

    RhoElement other{11, {BigInt{1}, BigInt{0}, BigInt{0}, BigInt{0}, BigInt{0}}};
    CHECK_THROWS_AS(rho_mul(r, other), std::invalid_argument);

    CHECK(ring.chebyshev_of_rho(2).coeff == std::vector<BigInt>{-2, 0, 1});
}

TEST_CASE("p star polynomials") {
    CHECK(render_rho_poly(p_star(3)) == "x - 1");
    CHECK(render_rho_poly(p_star(5)) == "x^2 + (1 - 2*rho)*x + 1");
    CHECK(render_rho_poly(p_star(9)) ==
          "x^3 - 2*rho*x^2 + (-3 + 2*rho^2)*x - 1");
    for (const golden::PstarRow& row : golden::pstar_table()) {
        RhoPoly p = p_star(row.b);
        CHECK(p.degree() == sigma_star(row.b));
        CHECK(p.coeff.back().is_constant());
        CHECK(p.coeff.back().coeff[0] == 1);
        CHECK(render_rho_poly(p) == row.rendering);
    }
}

TEST_CASE("numeric roots via exact evaluation") {
    for (i64 n : {2, 9, 17, 65, 128, 199}) {
        CHECK(std::abs(evaluate_at_cos(minimal_poly_C(n), 1, n)) < 1e-6);
        CHECK(std::abs(evaluate_at_cos(mpr2(n), 2, n)) < 1e-6);
    }
}

TEST_CASE("palindromic fold") {
    // z^4 + z^3 + z^2 + z + 1 folds to x^2 + x - 1
    CHECK(fold_palindromic(poly({1, 1, 1, 1, 1})) == poly({-1, 1, 1}));
    CHECK_THROWS_AS(fold_palindromic(poly({1, 2})), std::invalid_argument);
}

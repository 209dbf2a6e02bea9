#include <doctest.h>

#include <algorithm>

#include "srw/modular.hpp"

using namespace srw;

TEST_CASE("Hasse polynomial coefficients and degree") {
  HassePolynomial h5 = hasse_polynomial(5);
  Field f5(5, 1);
  CHECK(h5.r == 2);
  CHECK(h5.poly == poly_from_coeffs({f5.from_int(1), f5.from_int(4), f5.from_int(1)}));

  HassePolynomial h7 = hasse_polynomial(7);
  Field f7(7, 1);
  CHECK(h7.poly == poly_from_coeffs({f7.from_int(1), f7.from_int(2), f7.from_int(2),
                                     f7.from_int(1)}));

  for (int64_t p : {5, 7, 11, 13, 17, 19, 23}) {
    HassePolynomial h = hasse_polynomial(p);
    CHECK(h.poly.degree() == (p - 1) / 2);
    CHECK(h.poly.leading() == Field(p, 1).one());  // monic
    CHECK(poly_is_squarefree(Field(p, 1), h.poly));
  }

  CHECK_THROWS_AS(hasse_polynomial(3), std::invalid_argument);
  CHECK_THROWS_AS(hasse_polynomial(4), std::invalid_argument);
}

TEST_CASE("Legendre Hasse invariant from the x^{p-1} coefficient") {
  Field f7(7, 1);
  CHECK(legendre_hasse_invariant(f7, f7.from_int(6)).is_zero());

  Field f5(5, 1);
  CHECK_FALSE(legendre_hasse_invariant(f5, f5.from_int(2)).is_zero());

  CHECK_THROWS_AS(legendre_hasse_invariant(f5, f5.zero()), std::invalid_argument);
  CHECK_THROWS_AS(legendre_hasse_invariant(f5, f5.one()), std::invalid_argument);
}

TEST_CASE("the invariant equals (-1)^r Phi(t) pointwise") {
  for (int64_t p : {5, 7, 11, 13}) {
    Field f2(p, 2);
    HassePolynomial hp = hasse_polynomial(p);
    Poly phi = lift_to(f2, hp.poly);
    FieldElement scalar = (hp.r % 2 == 0) ? f2.one() : f2.neg(f2.one());
    for (int64_t i = 0; i < f2.order(); ++i) {
      FieldElement t = f2.element(i);
      if (t.is_zero() || t == f2.one()) continue;
      CHECK(legendre_hasse_invariant(f2, t) == f2.mul(scalar, poly_eval(f2, phi, t)));
    }
  }
}

TEST_CASE("point counts on small Legendre curves") {
  // p = 7, t = 6: affine solutions are (0,0), (1,0), (6,0), (4,+-2), (5,+-1)
  Field f7(7, 1);
  CHECK(legendre_point_count(f7, f7.from_int(6)) == 8);  // trace 0, supersingular

  // p = 5, t = 2: 8 points means trace -2, ordinary
  Field f5(5, 1);
  CHECK(legendre_point_count(f5, f5.from_int(2)) == 8);

  Field f49(7, 2);
  CHECK(is_supersingular_by_count(f49, f49.from_int(6)));
  Field f25(5, 2);
  CHECK_FALSE(is_supersingular_by_count(f25, f25.from_int(2)));
  CHECK(is_supersingular_by_count(f25, f25.from_coeffs({3, 1})));  // root of Phi_5

  // the count oracle insists on the quadratic extension
  CHECK_THROWS_AS(is_supersingular_by_count(f5, f5.from_int(2)), std::invalid_argument);
}

TEST_CASE("supersingular lambda sets") {
  SUBCASE("p = 7: all three invariants lie in the prime field") {
    auto set = supersingular_lambda_set(7);
    Field f49(7, 2);
    CHECK(set == std::vector<FieldElement>{f49.from_int(2), f49.from_int(4), f49.from_int(6)});
  }
  SUBCASE("p = 5: a conjugate pair outside F_5") {
    auto set = supersingular_lambda_set(5);
    Field f25(5, 2);
    REQUIRE(set.size() == 2);
    CHECK(set[0] == f25.from_coeffs({3, 1}));
    CHECK(set[1] == f25.from_coeffs({3, 4}));
    for (const auto& l : set) CHECK(l.c[1] != 0);  // not in the prime field
  }
  SUBCASE("count is (p-1)/2") {
    for (int64_t p : {5, 7, 11, 13})
      CHECK(static_cast<int64_t>(supersingular_lambda_set(p).size()) == (p - 1) / 2);
  }
  SUBCASE("the set is stable under t -> 1-t and t -> 1/t") {
    for (int64_t p : {5, 7, 11, 13}) {
      Field f2(p, 2);
      auto set = supersingular_lambda_set(p);
      for (const auto& t : set) {
        FieldElement flipped = f2.sub(f2.one(), t);
        FieldElement inverted = f2.inv(t);
        CHECK(std::binary_search(set.begin(), set.end(), flipped));
        CHECK(std::binary_search(set.begin(), set.end(), inverted));
      }
    }
  }
}

TEST_CASE("modular datum assembly") {
  SpecialDeformationDatum d5 = build_x2p_datum(5);
  CHECK(d5.F.p() == 5);
  CHECK(d5.F.k() == 2);
  CHECK(d5.sig.a == std::vector<int64_t>{2, 2});
  CHECK(d5.variant == CoverVariant::half);
  CyclicCoverDifferential w5 = sdd_differential(d5);
  CHECK(w5.n == 2);
  CHECK(w5.g == lift_to(d5.F, hasse_polynomial(5).poly));

  SpecialDeformationDatum d7 = build_x2p_datum(7);
  CHECK(d7.sig.a == std::vector<int64_t>{2, 2, 2});
  CyclicCoverDifferential w7 = sdd_differential(d7);
  CHECK(w7.n == 3);
  CHECK(w7.g == lift_to(d7.F, hasse_polynomial(7).poly));

  for (int64_t p : {5, 7, 11, 13}) {
    SpecialDeformationDatum d = build_x2p_datum(p);
    CHECK(d.sig.sum() == p - 1);
    CHECK(sdd_validate(d).ok());
  }
}

TEST_CASE("verify_x2p_theorem passes for the tested primes") {
  for (int64_t p : {7, 11, 13, 17, 23}) {
    X2pReport rep = verify_x2p_theorem(p);
    CHECK(rep.oracle_agreement);
    CHECK(rep.count_is_r);
    CHECK(rep.omega_logarithmic);
    CHECK(rep.lambdas_avoid_01);
    CHECK(rep.ok());
  }
}

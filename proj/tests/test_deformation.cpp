#include <doctest.h>

#include <algorithm>

#include "srw/deformation.hpp"
#include "srw/modular.hpp"

using namespace srw;

namespace {

bool has_issue(const ValidationReport& rep, const std::string& name) {
  return std::any_of(rep.issues.begin(), rep.issues.end(),
                     [&](const ValidationIssue& i) { return i.check == name; });
}

SpecialDeformationDatum hasse_pair_datum(CoverVariant variant) {
  Field f25(5, 2);
  return SpecialDeformationDatum{f25,
                                 {f25.from_coeffs({3, 1}), f25.from_coeffs({3, 4})},
                                 Signature{{2, 2}},
                                 f25.one(),
                                 variant};
}

}  // namespace

TEST_CASE("datum validation reports violations by name") {
  SpecialDeformationDatum good = hasse_pair_datum(CoverVariant::full);
  CHECK(sdd_validate(good).ok());

  SUBCASE("signature sum") {
    auto d = good;
    d.sig = Signature{{2, 3}};
    CHECK(has_issue(sdd_validate(d), "signature-sum"));
  }
  SUBCASE("lambda in {0,1}") {
    Field f7(7, 1);
    SpecialDeformationDatum d{f7,
                              {f7.zero(), f7.from_int(3), f7.from_int(5)},
                              Signature{{2, 2, 2}},
                              f7.one(),
                              CoverVariant::full};
    CHECK(has_issue(sdd_validate(d), "lambdas-avoid-01"));
  }
  SUBCASE("duplicate lambdas break distinctness and squarefreeness") {
    auto d = good;
    d.lambdas[1] = d.lambdas[0];
    auto rep = sdd_validate(d);
    CHECK(has_issue(rep, "lambdas-distinct"));
    CHECK(has_issue(rep, "product-squarefree"));
  }
  SUBCASE("c must be nonzero") {
    auto d = good;
    d.c = d.F.zero();
    CHECK(has_issue(sdd_validate(d), "c-nonzero"));
    CHECK_THROWS_AS(sdd_differential(d), std::invalid_argument);
  }
  SUBCASE("lambda count matches signature") {
    auto d = good;
    d.sig = Signature{{4}};
    CHECK(has_issue(sdd_validate(d), "lambda-count"));
  }
  SUBCASE("half variant needs all exponents 2") {
    Field f5(5, 1);
    SpecialDeformationDatum d{f5, {f5.from_int(2)}, Signature{{4}}, f5.one(), CoverVariant::half};
    CHECK(has_issue(sdd_validate(d), "half-variant-requires-a2"));
  }
  SUBCASE("a_i = 1 only behind the override") {
    Field f5(5, 1);
    SpecialDeformationDatum d{f5,
                              {f5.from_int(2), f5.from_int(3), f5.from_int(4)},
                              Signature{{1, 1, 2}},
                              f5.one(),
                              CoverVariant::full};
    CHECK(has_issue(sdd_validate(d), "signature-range"));
    CHECK_FALSE(has_issue(sdd_validate(d, true), "signature-range"));
  }
}

TEST_CASE("the datum differential matches the cover presentation") {
  SUBCASE("half variant of the p = 5 modular datum") {
    SpecialDeformationDatum d = hasse_pair_datum(CoverVariant::half);
    CyclicCoverDifferential w = sdd_differential(d);
    const Field& F = d.F;
    CHECK(w.n == 2);
    CHECK(w.m == 1);
    // g = (t - l1)(t - l2) = t^2 + 4t + 1 lifted to F_25
    Poly phi = poly_from_coeffs({F.from_int(1), F.from_int(4), F.from_int(1)});
    CHECK(w.g == phi);
    Poly tt1 = poly_mul(F, poly_x(F), poly_x_minus(F, F.one()));
    CHECK(w.h == rf_make(F, poly_one(F), tt1));
  }
  SUBCASE("full variant squares the product over an all-2 signature") {
    Field f7(7, 1);
    Poly phi7 = poly_from_coeffs(
        {f7.from_int(1), f7.from_int(2), f7.from_int(2), f7.from_int(1)});
    SpecialDeformationDatum d{f7,
                              {f7.from_int(2), f7.from_int(4), f7.from_int(6)},
                              Signature{{2, 2, 2}},
                              f7.one(),
                              CoverVariant::full};
    CyclicCoverDifferential w = sdd_differential(d);
    CHECK(w.n == 6);
    CHECK(w.m == 1);
    CHECK(w.g == poly_mul(f7, phi7, phi7));
  }
  SUBCASE("the constant scales the h-part") {
    SpecialDeformationDatum d = hasse_pair_datum(CoverVariant::half);
    d.c = d.F.from_int(3);
    CyclicCoverDifferential w = sdd_differential(d);
    Poly tt1 = poly_mul(d.F, poly_x(d.F), poly_x_minus(d.F, d.F.one()));
    CHECK(w.h == rf_make(d.F, poly_const(d.F, d.F.from_int(3)), tt1));
  }
}

TEST_CASE("the trivial cover r = 1 folds z into the plane part") {
  // p = 3, half variant: z^1 = t - 2, so omega = (t-2) dt/(t(t-1))
  Field f3(3, 1);
  SpecialDeformationDatum d{f3, {f3.from_int(2)}, Signature{{2}}, f3.one(), CoverVariant::half};
  CyclicCoverDifferential w = sdd_differential(d);
  CHECK(w.n == 1);
  CHECK(w.m == 0);
  // (t-2)/(t(t-1)) = 2/t + 2/(t-1) over F_3, a sum of logarithmic parts
  CHECK(sdd_is_special(d));
  // and the full presentation z^2 = (t-2)^2 agrees
  SpecialDeformationDatum full = d;
  full.variant = CoverVariant::full;
  auto gamma = sdd_eigenvalue(full);
  REQUIRE(gamma.has_value());
  CHECK_FALSE(gamma->is_zero());
}

TEST_CASE("both cover presentations agree on specialness") {
  for (int64_t p : {5, 7, 11}) {
    SpecialDeformationDatum half = build_x2p_datum(p);
    SpecialDeformationDatum full = half;
    full.variant = CoverVariant::full;
    CHECK(sdd_is_special(half));
    CHECK(sdd_is_special(full));
    auto gh = sdd_eigenvalue(half);
    auto gf = sdd_eigenvalue(full);
    REQUIRE(gh.has_value());
    REQUIRE(gf.has_value());
    CHECK(*gh == *gf);
    CHECK(*gh == half.F.one());  // eigenvalue exactly 1 at c = 1
  }
}

TEST_CASE("non-supersingular lambdas are not special") {
  Field f5(5, 1);
  // 2 and 3 are not roots of Phi_5 (values 3 and 2)
  for (int64_t cval : {1, 2, 3, 4}) {
    SpecialDeformationDatum d{f5,
                              {f5.from_int(2), f5.from_int(3)},
                              Signature{{2, 2}},
                              f5.from_int(cval),
                              CoverVariant::full};
    CHECK_FALSE(sdd_is_special(d));
  }
}

TEST_CASE("search finds exactly the Hasse pair for p = 5 over F_25") {
  SearchOptions serial;
  serial.exec = Exec::serial;
  SearchResult res = sdd_search(5, Signature{{2, 2}}, 2, serial);
  CHECK(res.candidates == 253);  // C(23, 2) unordered pairs
  REQUIRE(res.tuples.size() == 1);
  Field f25(5, 2);
  CHECK(res.tuples[0] ==
        std::vector<FieldElement>{f25.from_coeffs({3, 1}), f25.from_coeffs({3, 4})});

  // every returned tuple re-verifies independently
  for (const auto& tuple : res.tuples) {
    SpecialDeformationDatum d{f25, tuple, Signature{{2, 2}}, f25.one(), CoverVariant::full};
    auto gamma = sdd_eigenvalue(d);
    REQUIRE(gamma.has_value());
    CHECK_FALSE(gamma->is_zero());
  }
}

TEST_CASE("single-lambda searches") {
  SUBCASE("p = 5, a = (4): all three candidates are eigenvectors") {
    SearchResult res = sdd_search(5, Signature{{4}}, 1);
    Field f5(5, 1);
    REQUIRE(res.candidates == 3);
    REQUIRE(res.tuples.size() == 3);
    CHECK(res.tuples[0] == std::vector<FieldElement>{f5.from_int(2)});
    CHECK(res.tuples[1] == std::vector<FieldElement>{f5.from_int(3)});
    CHECK(res.tuples[2] == std::vector<FieldElement>{f5.from_int(4)});
    for (const auto& tuple : res.tuples) {
      SpecialDeformationDatum d{f5, tuple, Signature{{4}}, f5.one(), CoverVariant::full};
      auto gamma = sdd_eigenvalue(d);
      REQUIRE(gamma.has_value());
      CHECK_FALSE(gamma->is_zero());
    }
  }
  SUBCASE("p = 3, a = (2): the only candidate is 2, and it is special") {
    SearchResult res = sdd_search(3, Signature{{2}}, 1);
    CHECK(res.candidates == 1);
    REQUIRE(res.tuples.size() == 1);
    Field f3(3, 1);
    CHECK(res.tuples[0] == std::vector<FieldElement>{f3.from_int(2)});
  }
}

TEST_CASE("search finds the supersingular triple for p = 7 over F_7") {
  SearchResult res = sdd_search(7, Signature{{2, 2, 2}}, 1);
  Field f7(7, 1);
  REQUIRE(res.tuples.size() == 1);
  CHECK(res.tuples[0] == std::vector<FieldElement>{f7.from_int(2), f7.from_int(4),
                                                   f7.from_int(6)});
}

TEST_CASE("search rejects oversized spaces and bad signatures") {
  CHECK_THROWS_AS(sdd_search(11, Signature{{10}}, 4), std::invalid_argument);  // 11^4 > 10^4
  CHECK_THROWS_AS(sdd_search(5, Signature{{2, 3}}, 1), std::invalid_argument);
  CHECK_THROWS_AS(sdd_search(5, Signature{{1, 3}}, 1), std::invalid_argument);
  SearchOptions tiny;
  tiny.max_candidates = 10;
  CHECK_THROWS_AS(sdd_search(5, Signature{{2, 2}}, 2, tiny), std::invalid_argument);
}

TEST_CASE("S3 coordinate changes") {
  Field f5(5, 1);

  SUBCASE("pointwise images") {
    FieldElement x = f5.from_int(2);
    CHECK(s3_apply(f5, S3Map::identity, x) == x);
    CHECK(s3_apply(f5, S3Map::swap01, x) == f5.from_int(4));   // 1 - 2 = -1
    CHECK(s3_apply(f5, S3Map::swap0inf, x) == f5.from_int(3)); // 1/2 = 3 mod 5
    // involutions
    for (S3Map m : {S3Map::swap01, S3Map::swap0inf, S3Map::swap1inf})
      CHECK(s3_apply(f5, m, s3_apply(f5, m, x)) == x);
    // the two rotations are mutually inverse
    CHECK(s3_apply(f5, S3Map::rot_01inf, s3_apply(f5, S3Map::rot_0inf1, x)) == x);
  }

  SUBCASE("identity transform returns the identical datum") {
    SpecialDeformationDatum d = hasse_pair_datum(CoverVariant::full);
    SpecialDeformationDatum e = sdd_s3_transform(d, S3Map::identity);
    CHECK(e.lambdas == d.lambdas);
  }

  SUBCASE("1/t applied twice is the identity") {
    SpecialDeformationDatum d = hasse_pair_datum(CoverVariant::full);
    SpecialDeformationDatum e =
        sdd_s3_transform(sdd_s3_transform(d, S3Map::swap0inf), S3Map::swap0inf);
    CHECK(e.lambdas == d.lambdas);
  }

  SUBCASE("specialness is preserved across the S3 orbit") {
    Field f5k(5, 1);
    SpecialDeformationDatum d{f5k, {f5k.from_int(2)}, Signature{{4}}, f5k.one(),
                              CoverVariant::full};
    REQUIRE(sdd_eigenvalue(d).has_value());
    for (S3Map m : {S3Map::swap01, S3Map::swap0inf, S3Map::swap1inf, S3Map::rot_01inf,
                    S3Map::rot_0inf1}) {
      SpecialDeformationDatum e = sdd_s3_transform(d, m);
      auto gamma = sdd_eigenvalue(e);
      REQUIRE(gamma.has_value());
      CHECK_FALSE(gamma->is_zero());
    }
  }

  SUBCASE("transforms reject lambdas on the branch locus") {
    Field f5k(5, 1);
    SpecialDeformationDatum bad{f5k, {f5k.zero()}, Signature{{4}}, f5k.one(),
                                CoverVariant::full};
    CHECK_THROWS_AS(sdd_s3_transform(bad, S3Map::swap01), std::invalid_argument);
  }
}

TEST_CASE("search output is S3-stable for all-equal signatures") {
  SearchResult res = sdd_search(5, Signature{{2, 2}}, 2);
  Field f25(5, 2);
  for (S3Map m : {S3Map::swap01, S3Map::swap0inf}) {
    for (const auto& tuple : res.tuples) {
      SpecialDeformationDatum d{f25, tuple, Signature{{2, 2}}, f25.one(), CoverVariant::full};
      SpecialDeformationDatum image = sdd_s3_transform(d, m);
      CHECK(std::find(res.tuples.begin(), res.tuples.end(), image.lambdas) != res.tuples.end());
    }
  }
}

TEST_CASE("search is deterministic across runs") {
  SearchResult a = sdd_search(5, Signature{{2, 2}}, 2);
  SearchResult b = sdd_search(5, Signature{{2, 2}}, 2);
  CHECK(a.tuples == b.tuples);
  CHECK(a.candidates == b.candidates);
}

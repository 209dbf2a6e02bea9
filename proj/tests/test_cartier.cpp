#include <doctest.h>

#include <random>

#include "srw/cartier.hpp"
#include "srw/modular.hpp"

using namespace srw;

namespace {

Poly random_poly(const Field& F, std::mt19937_64& rng, int maxdeg) {
  std::vector<FieldElement> c;
  int deg = rng() % (maxdeg + 1);
  for (int i = 0; i <= deg; ++i) c.push_back(F.element(rng() % F.order()));
  return poly_from_coeffs(std::move(c));
}

RatFunc random_ratfunc(const Field& F, std::mt19937_64& rng, int maxdeg) {
  Poly den;
  do {
    den = random_poly(F, rng, maxdeg);
  } while (den.is_zero());
  return rf_make(F, random_poly(F, rng, maxdeg), den);
}

RatFunc random_nonzero_ratfunc(const Field& F, std::mt19937_64& rng, int maxdeg) {
  RatFunc u;
  do {
    u = random_ratfunc(F, rng, maxdeg);
  } while (u.is_zero());
  return u;
}

}  // namespace

TEST_CASE("plane Cartier on basic forms") {
  Field f5(5, 1);

  // dt is exact
  PlaneDifferential dt{rf_one(f5)};
  CHECK(cartier_plane(f5, dt).is_zero());

  // t^4 dt -> dt
  PlaneDifferential t4{rf_from_poly(f5, poly_pow(f5, poly_x(f5), 4))};
  CHECK(cartier_plane(f5, t4).u == rf_one(f5));

  // dt/t is logarithmic, hence fixed (tested for several primes)
  for (int64_t p : {5, 7, 11}) {
    Field f(p, 1);
    PlaneDifferential dlog{rf_make(f, poly_one(f), poly_x(f))};
    CHECK(cartier_plane(f, dlog) == dlog);
  }
}

TEST_CASE("cyclic Cartier eigencomponent bookkeeping") {
  Field f5(5, 1);
  std::mt19937_64 rng(17);

  SUBCASE("n = p-1, m = 1 routes through e = -1") {
    Poly g = random_poly(f5, rng, 3);
    while (g.is_zero()) g = random_poly(f5, rng, 3);
    RatFunc h = random_nonzero_ratfunc(f5, rng, 3);
    CyclicCoverDifferential w{4, g, 1, h};
    CyclicCoverDifferential img = cartier_cyclic(f5, w);
    CHECK(img.m == 1);
    // z^p = z g on z^{p-1} = g, so the image equals z * C(h/g dt)
    PlaneDifferential expected = cartier_plane(f5, {rf_div(f5, h, rf_from_poly(f5, g))});
    CHECK(img.h == expected.u);
  }

  SUBCASE("n = r = (p-1)/2, m = 1 routes through e = -2") {
    Field f7(7, 1);
    Poly g = poly_from_coeffs(
        {f7.from_int(1), f7.from_int(2), f7.from_int(2), f7.from_int(1)});
    RatFunc h = random_nonzero_ratfunc(f7, rng, 2);
    CyclicCoverDifferential w{3, g, 1, h};
    CyclicCoverDifferential img = cartier_cyclic(f7, w);
    CHECK(img.m == 1);
    PlaneDifferential expected =
        cartier_plane(f7, {rf_div(f7, h, rf_from_poly(f7, poly_mul(f7, g, g)))});
    CHECK(img.h == expected.u);
  }

  SUBCASE("m = 0 reduces to the plane operator") {
    Poly g = poly_x(f5);
    RatFunc h = random_ratfunc(f5, rng, 4);
    CyclicCoverDifferential w{4, g, 0, h};
    CyclicCoverDifferential img = cartier_cyclic(f5, w);
    CHECK(img.m == 0);
    CHECK(img.h == cartier_plane(f5, {h}).u);
  }

  SUBCASE("cover degree divisible by p is rejected") {
    CyclicCoverDifferential w{5, poly_x(f5), 1, rf_one(f5)};
    CHECK_THROWS_AS(cartier_cyclic(f5, w), std::invalid_argument);
  }
}

TEST_CASE("eigenvalue, logarithmic and exact predicates") {
  Field f5(5, 1);

  // dt/t has eigenvalue 1; dt has eigenvalue 0
  auto dlog = plane_as_cyclic(f5, rf_make(f5, poly_one(f5), poly_x(f5)));
  auto gamma = cartier_eigenvalue(f5, dlog);
  REQUIRE(gamma.has_value());
  CHECK(*gamma == f5.one());

  auto dt = plane_as_cyclic(f5, rf_one(f5));
  gamma = cartier_eigenvalue(f5, dt);
  REQUIRE(gamma.has_value());
  CHECK(gamma->is_zero());

  CHECK_THROWS_AS(cartier_eigenvalue(f5, plane_as_cyclic(f5, rf_zero(f5))),
                  std::invalid_argument);

  // dt/(t(t-1)) = d(u)/u for u = (t-1)/t
  Poly tt1 = poly_mul(f5, poly_x(f5), poly_x_minus(f5, f5.one()));
  auto w = plane_as_cyclic(f5, rf_make(f5, poly_one(f5), tt1));
  CHECK(is_logarithmic(f5, w));
  CHECK_FALSE(is_logarithmic(f5, dt));
  CHECK(is_exact(f5, dt));
  CHECK_FALSE(is_exact(f5, dlog));

  // t^{p-1} dt maps to dt, so neither exact nor fixed
  auto tp1 = plane_as_cyclic(f5, rf_from_poly(f5, poly_pow(f5, poly_x(f5), 4)));
  CHECK_FALSE(is_exact(f5, tp1));
  CHECK_FALSE(is_logarithmic(f5, tp1));

  // z dt/(t(t-1)) on z^2 = t^2+4t+1 over F_5: the modular special datum
  Poly phi = poly_from_coeffs({f5.from_int(1), f5.from_int(4), f5.from_int(1)});
  CyclicCoverDifferential modular{2, phi, 1, rf_make(f5, poly_one(f5), tt1)};
  CHECK(is_logarithmic(f5, modular));
  auto ev = cartier_eigenvalue(f5, modular);
  REQUIRE(ev.has_value());
  CHECK(*ev == f5.one());

  // same computation for p = 7 through the public builder
  SpecialDeformationDatum d7 = build_x2p_datum(7);
  auto ev7 = cartier_eigenvalue(d7.F, sdd_differential(d7));
  REQUIRE(ev7.has_value());
  CHECK(*ev7 == d7.F.one());
}

TEST_CASE("Cartier operator properties on random forms") {
  std::mt19937_64 rng(23);
  for (int64_t p : {5, 7}) {
    Field f(p, 1);

    SUBCASE("kernel: C(df) = 0") {
      for (int trial = 0; trial < 100; ++trial) {
        Poly poly = random_poly(f, rng, 30);
        RatFunc df = rf_from_poly(f, poly_derivative(f, poly));
        CHECK(cartier_plane(f, {df}).is_zero());
      }
    }

    SUBCASE("semilinearity: C(f^p w) = f C(w)") {
      for (int trial = 0; trial < 100; ++trial) {
        RatFunc fn = random_ratfunc(f, rng, 4);
        RatFunc u = random_ratfunc(f, rng, 4);
        PlaneDifferential lhs =
            cartier_plane(f, {rf_mul(f, rf_pow(f, fn, p), u)});
        PlaneDifferential rhs{rf_mul(f, fn, cartier_plane(f, {u}).u)};
        CHECK(lhs == rhs);
      }
    }

    SUBCASE("fixed points: C(du/u) = du/u") {
      for (int trial = 0; trial < 100; ++trial) {
        RatFunc u = random_nonzero_ratfunc(f, rng, 5);
        RatFunc dlog = rf_div(f, rf_derivative(f, u), u);
        PlaneDifferential w{dlog};
        CHECK(cartier_plane(f, w) == w);
      }
    }

    SUBCASE("additivity within one m-component") {
      for (int trial = 0; trial < 100; ++trial) {
        RatFunc u1 = random_ratfunc(f, rng, 5);
        RatFunc u2 = random_ratfunc(f, rng, 5);
        PlaneDifferential sum = cartier_plane(f, {rf_add(f, u1, u2)});
        PlaneDifferential parts{
            rf_add(f, cartier_plane(f, {u1}).u, cartier_plane(f, {u2}).u)};
        CHECK(sum == parts);
      }
    }

    SUBCASE("stabilization: C(C(w)) = C(w) once C(w) is 0 or w") {
      for (int trial = 0; trial < 50; ++trial) {
        // exact and logarithmic inputs both stabilize immediately
        Poly poly = random_poly(f, rng, 20);
        PlaneDifferential exact{rf_from_poly(f, poly_derivative(f, poly))};
        CHECK(cartier_plane(f, cartier_plane(f, exact)) == cartier_plane(f, exact));

        RatFunc u = random_nonzero_ratfunc(f, rng, 4);
        PlaneDifferential fixed{rf_div(f, rf_derivative(f, u), u)};
        CHECK(cartier_plane(f, cartier_plane(f, fixed)) == cartier_plane(f, fixed));
      }
    }
  }
}

TEST_CASE("semilinearity holds on cyclic covers") {
  std::mt19937_64 rng(29);
  Field f5(5, 1);
  Poly phi = poly_from_coeffs({f5.from_int(1), f5.from_int(4), f5.from_int(1)});
  for (int trial = 0; trial < 50; ++trial) {
    RatFunc fn = random_ratfunc(f5, rng, 3);
    RatFunc h = random_nonzero_ratfunc(f5, rng, 3);
    CyclicCoverDifferential w{2, phi, 1, h};
    CyclicCoverDifferential scaled{2, phi, 1, rf_mul(f5, rf_pow(f5, fn, 5), h)};
    CyclicCoverDifferential lhs = cartier_cyclic(f5, scaled);
    CyclicCoverDifferential base = cartier_cyclic(f5, w);
    CHECK(lhs.m == base.m);
    CHECK(lhs.h == rf_mul(f5, fn, base.h));
  }
}

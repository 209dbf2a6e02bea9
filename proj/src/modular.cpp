#include "srw/modular.hpp"

#include <algorithm>

namespace srw {

HassePolynomial hasse_polynomial(int64_t p) {
  if (!is_prime(p) || p < 5)
    throw std::invalid_argument("hasse_polynomial: need a prime p >= 5");
  const int64_t r = (p - 1) / 2;
  Field F(p, 1);
  std::vector<FieldElement> coeffs;
  coeffs.reserve(r + 1);
  for (int64_t j = 0; j <= r; ++j) {
    int64_t b = binom_mod_p(r, j, p);
    coeffs.push_back(F.from_int(b * b % p));
  }
  return HassePolynomial{p, r, poly_from_coeffs(std::move(coeffs))};
}

Poly lift_to(const Field& target, const Poly& f) {
  std::vector<FieldElement> coeffs;
  coeffs.reserve(f.c.size());
  for (const auto& e : f.c) coeffs.push_back(target.from_int(e.c[0]));
  return poly_from_coeffs(std::move(coeffs));
}

FieldElement legendre_hasse_invariant(const Field& F, const FieldElement& t) {
  if (t.is_zero() || t == F.one())
    throw std::invalid_argument("legendre_hasse_invariant: t in {0, 1} is degenerate");
  const int64_t p = F.p();
  const int64_t r = (p - 1) / 2;
  // (x(x-1)(x-t))^r, coefficient of x^{p-1}
  Poly cubic = poly_mul(F, poly_mul(F, poly_x(F), poly_x_minus(F, F.one())),
                        poly_x_minus(F, t));
  Poly power = poly_pow(F, cubic, r);
  if (power.degree() < p - 1) return F.zero();
  return power.c[p - 1];
}

int64_t legendre_point_count(const Field& F, const FieldElement& t) {
  if (t.is_zero() || t == F.one())
    throw std::invalid_argument("legendre_point_count: t in {0, 1} is degenerate");
  std::vector<int> sqrt_count = square_root_counts(F);
  const FieldElement one = F.one();
  int64_t affine = 0;
  for (int64_t i = 0; i < F.order(); ++i) {
    FieldElement x = F.element(i);
    FieldElement fx = F.mul(F.mul(x, F.sub(x, one)), F.sub(x, t));
    affine += sqrt_count[F.index_of(fx)];
  }
  return affine + 1;
}

bool is_supersingular_by_count(const Field& F2, const FieldElement& t) {
  if (F2.k() != 2)
    throw std::invalid_argument("is_supersingular_by_count: expects the field F_{p^2}");
  int64_t n = legendre_point_count(F2, t);
  return (n - 1) % F2.p() == 0;
}

std::vector<int> square_root_counts(const Field& F) {
  std::vector<int> counts(F.order(), 0);
  for (int64_t i = 0; i < F.order(); ++i) {
    FieldElement y = F.element(i);
    counts[F.index_of(F.mul(y, y))]++;
  }
  return counts;
}

SupersingularScan supersingular_scan(const Field& F2, Exec exec) {
  const int64_t p = F2.p();
  const int64_t order = F2.order();
  HassePolynomial hp = hasse_polynomial(p);
  const Poly phi = lift_to(F2, hp.poly);
  const std::vector<int> sqrt_count = square_root_counts(F2);
  const FieldElement one = F2.one();

  std::vector<uint8_t> ss(order, 0);
  std::vector<uint8_t> agree(order, 1);

  auto examine = [&](int64_t i) {
    FieldElement t = F2.element(i);
    if (t.is_zero() || t == one) return;
    bool phi_zero = poly_eval(F2, phi, t).is_zero();
    bool coeff_zero = legendre_hasse_invariant(F2, t).is_zero();
    int64_t affine = 0;
    for (int64_t xi = 0; xi < order; ++xi) {
      FieldElement x = F2.element(xi);
      FieldElement fx = F2.mul(F2.mul(x, F2.sub(x, one)), F2.sub(x, t));
      affine += sqrt_count[F2.index_of(fx)];
    }
    bool count_ss = affine % p == 0;  // #E = affine + 1 = 1 (mod p)
    ss[i] = count_ss;
    agree[i] = (phi_zero == coeff_zero) && (coeff_zero == count_ss);
  };

  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 8)
    for (int64_t i = 0; i < order; ++i) examine(i);
  } else {
    for (int64_t i = 0; i < order; ++i) examine(i);
  }

  SupersingularScan out;
  for (int64_t i = 0; i < order; ++i) {
    if (ss[i]) out.lambdas.push_back(F2.element(i));
    if (!agree[i]) {
      out.oracles_agree = false;
      out.disagreements.push_back(F2.element(i));
    }
  }
  std::sort(out.lambdas.begin(), out.lambdas.end());
  std::sort(out.disagreements.begin(), out.disagreements.end());
  return out;
}

std::vector<FieldElement> supersingular_lambda_set(int64_t p, Exec exec) {
  Field F2(p, 2);
  SupersingularScan scan = supersingular_scan(F2, exec);
  if (!scan.oracles_agree)
    throw OracleMismatch("supersingular oracles disagree at " +
                         to_string(scan.disagreements.front()) + " (p = " + std::to_string(p) +
                         ")");
  return scan.lambdas;
}

SpecialDeformationDatum build_x2p_datum(int64_t p) {
  HassePolynomial hp = hasse_polynomial(p);
  Field F2(p, 2);
  PolyRoots roots = poly_roots(F2, lift_to(F2, hp.poly));
  Signature sig{std::vector<int64_t>(roots.roots.size(), 2)};
  return SpecialDeformationDatum{F2, roots.roots, std::move(sig), F2.one(), CoverVariant::half};
}

X2pReport verify_x2p_theorem(int64_t p, Exec exec) {
  X2pReport rep;
  rep.p = p;
  Field F2(p, 2);
  SupersingularScan scan = supersingular_scan(F2, exec);
  rep.oracle_agreement = scan.oracles_agree;

  HassePolynomial hp = hasse_polynomial(p);
  PolyRoots roots = poly_roots(F2, lift_to(F2, hp.poly));
  bool simple = std::all_of(roots.multiplicity.begin(), roots.multiplicity.end(),
                            [](int64_t m) { return m == 1; });
  rep.count_is_r = simple && static_cast<int64_t>(roots.roots.size()) == hp.r &&
                   roots.roots == scan.lambdas;

  SpecialDeformationDatum datum = build_x2p_datum(p);
  rep.omega_logarithmic = sdd_is_special(datum);
  rep.lambdas_avoid_01 = std::none_of(datum.lambdas.begin(), datum.lambdas.end(),
                                      [&](const FieldElement& l) {
                                        return l.is_zero() || l == F2.one();
                                      });
  return rep;
}

}  // namespace srw

#include "srw/cartier.hpp"

#include <numeric>
#include <stdexcept>

namespace srw {

namespace {

// Coefficient extraction on the polynomial part: picks indices p*j + p - 1
// and takes p-th roots (the operator is p^{-1}-semilinear).
Poly cartier_poly_part(const Field& F, const Poly& u) {
  const int64_t p = F.p();
  std::vector<FieldElement> out;
  for (int64_t j = 0; p * j + p - 1 < static_cast<int64_t>(u.c.size()); ++j)
    out.push_back(F.pth_root(u.c[p * j + p - 1]));
  return poly_from_coeffs(std::move(out));
}

int64_t mod_inverse(int64_t a, int64_t n) {
  // extended Euclid; gcd(a, n) = 1 assumed
  int64_t t = 0, new_t = 1, r = n, new_r = ((a % n) + n) % n;
  while (new_r != 0) {
    int64_t q = r / new_r;
    int64_t tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  return ((t % n) + n) % n;
}

}  // namespace

PlaneDifferential cartier_plane(const Field& F, const PlaneDifferential& w) {
  const RatFunc& u = w.u;
  if (u.is_zero()) return PlaneDifferential{rf_zero(F)};
  // u = P/Q = (P Q^{p-1}) / Q^p and C(f^p omega) = f C(omega) with f = 1/Q
  Poly shifted = poly_mul(F, u.num, poly_pow(F, u.den, F.p() - 1));
  Poly cnum = cartier_poly_part(F, shifted);
  return PlaneDifferential{rf_make(F, std::move(cnum), u.den)};
}

CyclicCoverDifferential cartier_cyclic(const Field& F, const CyclicCoverDifferential& w) {
  if (w.n < 1 || std::gcd(w.n, F.p()) != 1)
    throw std::invalid_argument("cartier_cyclic: cover degree must be prime to p");
  if (w.g.is_zero()) throw std::invalid_argument("cartier_cyclic: zero cover equation");
  if (w.m < 0 || w.m >= w.n) throw std::invalid_argument("cartier_cyclic: m out of [0, n)");

  const int64_t m_shift = mod_inverse(F.p(), w.n) * w.m % w.n;
  const int64_t e = (w.m - F.p() * m_shift) / w.n;  // exact by choice of m_shift
  // omega = (z^{m'})^p (h g^e) dt, so C(omega) = z^{m'} C(h g^e dt)
  RatFunc inner = rf_mul(F, w.h, rf_pow(F, rf_from_poly(F, w.g), e));
  PlaneDifferential image = cartier_plane(F, PlaneDifferential{inner});
  return CyclicCoverDifferential{w.n, w.g, m_shift, image.u};
}

std::optional<FieldElement> cartier_eigenvalue(const Field& F, const CyclicCoverDifferential& w) {
  if (w.is_zero()) throw std::invalid_argument("cartier_eigenvalue: zero differential");
  CyclicCoverDifferential image = cartier_cyclic(F, w);
  if (image.is_zero()) return F.zero();
  if (image.m != w.m) return std::nullopt;
  RatFunc ratio = rf_div(F, image.h, w.h);
  FieldElement gamma;
  if (!rf_is_constant(ratio, &gamma)) return std::nullopt;
  return gamma;
}

bool is_logarithmic(const Field& F, const CyclicCoverDifferential& w) {
  if (w.is_zero()) return false;
  CyclicCoverDifferential image = cartier_cyclic(F, w);
  return image.m == w.m && image.h == w.h;
}

bool is_exact(const Field& F, const CyclicCoverDifferential& w) {
  return cartier_cyclic(F, w).is_zero();
}

CyclicCoverDifferential plane_as_cyclic(const Field& F, RatFunc u) {
  return CyclicCoverDifferential{1, poly_one(F), 0, std::move(u)};
}

bool cover_squarefree(const Field& F, const CyclicCoverDifferential& w) {
  return poly_is_squarefree(F, w.g);
}

}  // namespace srw

// Polynomials over F_{p^k}, little-endian coefficients, zero = empty.

#pragma once

#include <utility>

#include "srw/field.hpp"

namespace srw {

struct Poly {
  std::vector<FieldElement> c;  // trimmed: leading coefficient nonzero unless empty

  friend auto operator<=>(const Poly&, const Poly&) = default;

  bool is_zero() const { return c.empty(); }
  int64_t degree() const { return static_cast<int64_t>(c.size()) - 1; }  // -1 for zero
  const FieldElement& leading() const { return c.back(); }
};

Poly poly_from_coeffs(std::vector<FieldElement> coeffs);  // trims trailing zeros
Poly poly_zero();
Poly poly_one(const Field& F);
Poly poly_x(const Field& F);
Poly poly_const(const Field& F, const FieldElement& e);
// t - r
Poly poly_x_minus(const Field& F, const FieldElement& r);

Poly poly_add(const Field& F, const Poly& a, const Poly& b);
Poly poly_sub(const Field& F, const Poly& a, const Poly& b);
Poly poly_neg(const Field& F, const Poly& a);
Poly poly_mul(const Field& F, const Poly& a, const Poly& b);
Poly poly_scale(const Field& F, const Poly& a, const FieldElement& s);
Poly poly_pow(const Field& F, const Poly& a, int64_t e);  // e >= 0

// Quotient and remainder; throws on zero divisor.
std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b);
// Monic gcd; gcd(0, 0) = 0.
Poly poly_gcd(const Field& F, const Poly& a, const Poly& b);
Poly poly_derivative(const Field& F, const Poly& a);
Poly poly_monic(const Field& F, const Poly& a);
FieldElement poly_eval(const Field& F, const Poly& f, const FieldElement& x);

struct PolyRoots {
  std::vector<FieldElement> roots;  // sorted by coefficient vector
  std::vector<int64_t> multiplicity;
};

// All roots in F_{p^k} by exhaustive evaluation; multiplicities by repeated
// division.  Throws on the zero polynomial.
PolyRoots poly_roots(const Field& F, const Poly& f);

// gcd(f, f') = 1
bool poly_is_squarefree(const Field& F, const Poly& f);

}  // namespace srw

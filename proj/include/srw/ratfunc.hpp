// Rational functions in canonical form: gcd(num, den) = 1, den monic.

#pragma once

#include "srw/poly.hpp"

namespace srw {

struct RatFunc {
  Poly num;
  Poly den;  // nonzero, monic

  friend auto operator<=>(const RatFunc&, const RatFunc&) = default;

  bool is_zero() const { return num.is_zero(); }
  bool is_poly() const { return den.degree() == 0; }
};

// Canonicalizes; throws on zero denominator.
RatFunc rf_make(const Field& F, Poly num, Poly den);
RatFunc rf_zero(const Field& F);
RatFunc rf_one(const Field& F);
RatFunc rf_const(const Field& F, const FieldElement& e);
RatFunc rf_from_poly(const Field& F, Poly p);

RatFunc rf_add(const Field& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_sub(const Field& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_neg(const Field& F, const RatFunc& a);
RatFunc rf_mul(const Field& F, const RatFunc& a, const RatFunc& b);
RatFunc rf_div(const Field& F, const RatFunc& a, const RatFunc& b);  // throws on b = 0
RatFunc rf_pow(const Field& F, const RatFunc& a, int64_t e);         // negative e needs a != 0
RatFunc rf_scale(const Field& F, const RatFunc& a, const FieldElement& s);

// If a is a constant (degree-0 or zero numerator over degree-0 denominator),
// returns it.
bool rf_is_constant(const RatFunc& a, FieldElement* value = nullptr);

// (P/Q)' = (P'Q - PQ')/Q^2
RatFunc rf_derivative(const Field& F, const RatFunc& a);

}  // namespace srw

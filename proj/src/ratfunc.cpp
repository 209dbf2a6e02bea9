#include "srw/ratfunc.hpp"

#include <stdexcept>

namespace srw {

RatFunc rf_make(const Field& F, Poly num, Poly den) {
  if (den.is_zero()) throw std::invalid_argument("rational function: zero denominator");
  if (num.is_zero()) return RatFunc{poly_zero(), poly_one(F)};
  Poly g = poly_gcd(F, num, den);
  if (g.degree() > 0) {
    num = poly_divmod(F, num, g).first;
    den = poly_divmod(F, den, g).first;
  }
  FieldElement lead_inv = F.inv(den.leading());
  return RatFunc{poly_scale(F, num, lead_inv), poly_scale(F, den, lead_inv)};
}

RatFunc rf_zero(const Field& F) { return RatFunc{poly_zero(), poly_one(F)}; }

RatFunc rf_one(const Field& F) { return RatFunc{poly_one(F), poly_one(F)}; }

RatFunc rf_const(const Field& F, const FieldElement& e) {
  return RatFunc{poly_const(F, e), poly_one(F)};
}

RatFunc rf_from_poly(const Field& F, Poly p) { return RatFunc{std::move(p), poly_one(F)}; }

RatFunc rf_add(const Field& F, const RatFunc& a, const RatFunc& b) {
  Poly num = poly_add(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
  return rf_make(F, std::move(num), poly_mul(F, a.den, b.den));
}

RatFunc rf_sub(const Field& F, const RatFunc& a, const RatFunc& b) {
  Poly num = poly_sub(F, poly_mul(F, a.num, b.den), poly_mul(F, b.num, a.den));
  return rf_make(F, std::move(num), poly_mul(F, a.den, b.den));
}

RatFunc rf_neg(const Field& F, const RatFunc& a) { return RatFunc{poly_neg(F, a.num), a.den}; }

RatFunc rf_mul(const Field& F, const RatFunc& a, const RatFunc& b) {
  return rf_make(F, poly_mul(F, a.num, b.num), poly_mul(F, a.den, b.den));
}

RatFunc rf_div(const Field& F, const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw std::invalid_argument("rational function: division by zero");
  return rf_make(F, poly_mul(F, a.num, b.den), poly_mul(F, a.den, b.num));
}

RatFunc rf_pow(const Field& F, const RatFunc& a, int64_t e) {
  if (e < 0) {
    if (a.is_zero()) throw std::invalid_argument("rf_pow: zero to negative power");
    return rf_make(F, poly_pow(F, a.den, -e), poly_pow(F, a.num, -e));
  }
  return rf_make(F, poly_pow(F, a.num, e), poly_pow(F, a.den, e));
}

RatFunc rf_scale(const Field& F, const RatFunc& a, const FieldElement& s) {
  return rf_make(F, poly_scale(F, a.num, s), a.den);
}

RatFunc rf_derivative(const Field& F, const RatFunc& a) {
  Poly num = poly_sub(F, poly_mul(F, poly_derivative(F, a.num), a.den),
                      poly_mul(F, a.num, poly_derivative(F, a.den)));
  return rf_make(F, std::move(num), poly_mul(F, a.den, a.den));
}

bool rf_is_constant(const RatFunc& a, FieldElement* value) {
  if (a.den.degree() != 0) return false;
  if (a.num.degree() > 0) return false;
  if (value) {
    // den is monic of degree 0, i.e. the constant 1
    *value = a.num.is_zero() ? FieldElement{std::vector<int64_t>(a.den.c[0].c.size(), 0)}
                             : a.num.c[0];
  }
  return true;
}

}  // namespace srw

#include "srw/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace srw {

namespace {

void trim(std::vector<FieldElement>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

}  // namespace

Poly poly_from_coeffs(std::vector<FieldElement> coeffs) {
  trim(coeffs);
  return Poly{std::move(coeffs)};
}

Poly poly_zero() { return Poly{}; }

Poly poly_one(const Field& F) { return Poly{{F.one()}}; }

Poly poly_x(const Field& F) { return Poly{{F.zero(), F.one()}}; }

Poly poly_const(const Field&, const FieldElement& e) {
  if (e.is_zero()) return poly_zero();
  return Poly{{e}};
}

Poly poly_x_minus(const Field& F, const FieldElement& r) {
  return Poly{{F.neg(r), F.one()}};
}

Poly poly_add(const Field& F, const Poly& a, const Poly& b) {
  std::vector<FieldElement> c(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] = F.add(c[i], b.c[i]);
  trim(c);
  return Poly{std::move(c)};
}

Poly poly_sub(const Field& F, const Poly& a, const Poly& b) {
  std::vector<FieldElement> c(std::max(a.c.size(), b.c.size()), F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  for (size_t i = 0; i < b.c.size(); ++i) c[i] = F.sub(c[i], b.c[i]);
  trim(c);
  return Poly{std::move(c)};
}

Poly poly_neg(const Field& F, const Poly& a) { return poly_sub(F, poly_zero(), a); }

Poly poly_mul(const Field& F, const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return poly_zero();
  std::vector<FieldElement> c(a.c.size() + b.c.size() - 1, F.zero());
  for (size_t i = 0; i < a.c.size(); ++i) {
    if (a.c[i].is_zero()) continue;
    for (size_t j = 0; j < b.c.size(); ++j)
      c[i + j] = F.add(c[i + j], F.mul(a.c[i], b.c[j]));
  }
  return Poly{std::move(c)};
}

Poly poly_scale(const Field& F, const Poly& a, const FieldElement& s) {
  if (s.is_zero()) return poly_zero();
  Poly r = a;
  for (auto& e : r.c) e = F.mul(e, s);
  return r;
}

Poly poly_pow(const Field& F, const Poly& a, int64_t e) {
  if (e < 0) throw std::invalid_argument("poly_pow: negative exponent");
  Poly r = poly_one(F);
  Poly b = a;
  while (e) {
    if (e & 1) r = poly_mul(F, r, b);
    b = poly_mul(F, b, b);
    e >>= 1;
  }
  return r;
}

std::pair<Poly, Poly> poly_divmod(const Field& F, const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
  if (a.degree() < b.degree()) return {poly_zero(), a};
  std::vector<FieldElement> rem = a.c;
  std::vector<FieldElement> quot(a.c.size() - b.c.size() + 1, F.zero());
  const FieldElement lead_inv = F.inv(b.leading());
  while (rem.size() >= b.c.size() && !rem.empty()) {
    FieldElement q = F.mul(rem.back(), lead_inv);
    size_t off = rem.size() - b.c.size();
    quot[off] = q;
    for (size_t i = 0; i < b.c.size(); ++i)
      rem[off + i] = F.sub(rem[off + i], F.mul(q, b.c[i]));
    trim(rem);
  }
  trim(quot);
  return {Poly{std::move(quot)}, Poly{std::move(rem)}};
}

Poly poly_gcd(const Field& F, const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_divmod(F, x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  return poly_monic(F, x);
}

Poly poly_derivative(const Field& F, const Poly& a) {
  if (a.c.size() <= 1) return poly_zero();
  std::vector<FieldElement> c(a.c.size() - 1, F.zero());
  for (size_t i = 1; i < a.c.size(); ++i)
    c[i - 1] = F.mul(a.c[i], F.from_int(static_cast<int64_t>(i)));
  trim(c);
  return Poly{std::move(c)};
}

Poly poly_monic(const Field& F, const Poly& a) {
  if (a.is_zero()) return a;
  return poly_scale(F, a, F.inv(a.leading()));
}

FieldElement poly_eval(const Field& F, const Poly& f, const FieldElement& x) {
  FieldElement acc = F.zero();
  for (auto it = f.c.rbegin(); it != f.c.rend(); ++it) acc = F.add(F.mul(acc, x), *it);
  return acc;
}

PolyRoots poly_roots(const Field& F, const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("poly_roots: zero polynomial");
  PolyRoots out;
  for (int64_t i = 0; i < F.order(); ++i) {
    FieldElement x = F.element(i);
    if (!poly_eval(F, f, x).is_zero()) continue;
    // multiplicity by repeated division by (t - x)
    Poly lin = poly_x_minus(F, x);
    Poly g = f;
    int64_t mult = 0;
    while (true) {
      auto [q, r] = poly_divmod(F, g, lin);
      if (!r.is_zero()) break;
      ++mult;
      g = std::move(q);
    }
    out.roots.push_back(std::move(x));
    out.multiplicity.push_back(mult);
  }
  // index order is not coefficient-vector order for k > 1
  std::vector<size_t> perm(out.roots.size());
  for (size_t i = 0; i < perm.size(); ++i) perm[i] = i;
  std::sort(perm.begin(), perm.end(),
            [&](size_t a, size_t b) { return out.roots[a] < out.roots[b]; });
  PolyRoots sorted;
  for (size_t i : perm) {
    sorted.roots.push_back(out.roots[i]);
    sorted.multiplicity.push_back(out.multiplicity[i]);
  }
  return sorted;
}

bool poly_is_squarefree(const Field& F, const Poly& f) {
  if (f.is_zero()) return false;
  Poly d = poly_derivative(F, f);
  if (d.is_zero()) return f.degree() == 0;
  return poly_gcd(F, f, d).degree() == 0;
}

}  // namespace srw

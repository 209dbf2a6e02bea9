// Exact arithmetic in F_p and F_{p^k} for odd primes p at desk scale.

#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace srw {

// Element of F_{p^k}: exactly k coefficients in [0, p), little-endian in the
// generator of the residue class ring.  Comparison is lexicographic on the
// coefficient vector; this is the canonical order used everywhere (sorting of
// lambda tuples, serialized reports).
struct FieldElement {
  std::vector<int64_t> c;

  friend auto operator<=>(const FieldElement&, const FieldElement&) = default;

  bool is_zero() const {
    for (int64_t v : c)
      if (v != 0) return false;
    return true;
  }
};

// F_{p^k} with a deterministically chosen monic irreducible modulus: the
// smallest one when the non-leading coefficients are read as a base-p integer
// (constant term least significant).  For k = 1 the modulus is the
// placeholder t.
class Field {
 public:
  Field(int64_t p, int k);

  int64_t p() const { return p_; }
  int k() const { return k_; }
  int64_t order() const { return order_; }
  // Monic, length k+1 for k >= 2; the placeholder [0, 1] for k = 1.
  const std::vector<int64_t>& modulus() const { return modulus_; }

  FieldElement zero() const { return FieldElement{std::vector<int64_t>(k_, 0)}; }
  FieldElement one() const { return from_int(1); }
  FieldElement from_int(int64_t v) const;
  // Coefficients [c0, ..., c_{k-1}], reduced mod p.
  FieldElement from_coeffs(std::vector<int64_t> coeffs) const;

  // Bijection with [0, p^k): index = sum c_i p^i.
  FieldElement element(int64_t index) const;
  int64_t index_of(const FieldElement& x) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement inv(const FieldElement& a) const;  // throws on zero
  FieldElement pow(const FieldElement& a, int64_t e) const;

  // y with y^p = x, computed as x^(p^(k-1)); Frobenius is bijective.
  FieldElement pth_root(const FieldElement& x) const;

  bool is_zero(const FieldElement& a) const { return a.is_zero(); }
  bool is_one(const FieldElement& a) const { return a == one(); }

  // Shape check for deserialized data; throws std::invalid_argument.
  void validate(const FieldElement& a) const;

  friend bool operator==(const Field& a, const Field& b) {
    return a.p_ == b.p_ && a.k_ == b.k_ && a.modulus_ == b.modulus_;
  }

 private:
  int64_t p_;
  int k_;
  int64_t order_;
  std::vector<int64_t> modulus_;
};

bool is_prime(int64_t n);

// C(n, j) mod p by Lucas' theorem.  The exact-integer route lives in the test
// suite as an independent oracle.
int64_t binom_mod_p(int64_t n, int64_t j, int64_t p);

std::string to_string(const Field& f);
std::string to_string(const FieldElement& x);

}  // namespace srw

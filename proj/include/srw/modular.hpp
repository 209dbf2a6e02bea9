// The X(2p) computations: Hasse polynomial, supersingular lambda-invariants
// with two independent oracles (coefficient extraction and exhaustive point
// counting), and the modular special deformation datum.

#pragma once

#include <stdexcept>

#include "srw/deformation.hpp"
#include "srw/exec.hpp"

namespace srw {

struct HassePolynomial {
  int64_t p = 0;
  int64_t r = 0;        // (p-1)/2
  Poly poly;            // over F_p: sum_j C(r,j)^2 t^j, monic of degree r
};

// Throws for p < 5 (the X(2p) setting needs lambda_i outside {0, 1, inf}).
HassePolynomial hasse_polynomial(int64_t p);

// Coefficient-wise embedding of a prime-field polynomial into F_{p^k}.
Poly lift_to(const Field& target, const Poly& f);

// Coefficient of x^{p-1} in (x(x-1)(x-t))^{(p-1)/2}, by exact polynomial
// exponentiation.  Vanishes exactly at the supersingular t.
FieldElement legendre_hasse_invariant(const Field& F, const FieldElement& t);

// #E_t(F) for y^2 = x(x-1)(x-t) by exhaustion, including the point at
// infinity.  Works over any F_{p^k}; the supersingularity oracle uses k = 2.
int64_t legendre_point_count(const Field& F, const FieldElement& t);

// #E_t(F_{p^2}) = 1 (mod p), i.e. trace = 0 (mod p).  Requires F.k() == 2.
bool is_supersingular_by_count(const Field& F2, const FieldElement& t);

// index -> #{y : y^2 = element}; shared by the counting loops
std::vector<int> square_root_counts(const Field& F);

// Raised when the Hasse-polynomial oracle and the point-count oracle
// disagree; this always signals an implementation bug, never bad input.
struct OracleMismatch : std::logic_error {
  using std::logic_error::logic_error;
};

struct SupersingularScan {
  bool oracles_agree = true;
  std::vector<FieldElement> lambdas;        // supersingular t, coefficient-vector order
  std::vector<FieldElement> disagreements;  // t where the three oracles split
};

// Exhaustive three-way agreement over t in F_{p^2} \ {0,1}: Phi(t) = 0 vs
// the x^{p-1}-coefficient oracle vs point counting.  The per-t work is
// independent; Exec::parallel distributes it.
SupersingularScan supersingular_scan(const Field& F2, Exec exec = Exec::parallel);

// Roots of Phi_p over F_{p^2}; the cross-check against point counting is
// mandatory and a mismatch throws OracleMismatch.
std::vector<FieldElement> supersingular_lambda_set(int64_t p, Exec exec = Exec::parallel);

// The degree-r modular datum: z^r = Phi_p(t), lambda_i the roots of Phi,
// all a_i = 2, c = 1, over F_{p^2}.
SpecialDeformationDatum build_x2p_datum(int64_t p);

struct X2pReport {
  int64_t p = 0;
  bool oracle_agreement = false;
  bool count_is_r = false;
  bool omega_logarithmic = false;
  bool lambdas_avoid_01 = false;
  bool ok() const {
    return oracle_agreement && count_is_r && omega_logarithmic && lambdas_avoid_01;
  }
};

X2pReport verify_x2p_theorem(int64_t p, Exec exec = Exec::parallel);

}  // namespace srw

// The Cartier operator on rational differentials over P^1 and on cyclic
// covers z^n = g(t) with gcd(n, p) = 1.
//
// Fixed forms of the operator are exactly the logarithmic differentials du/u;
// its kernel is the exact differentials du.  On a cyclic cover the operator
// shifts the z^m eigencomponent to z^m' where p*m' = m (mod n).

#pragma once

#include <optional>

#include "srw/ratfunc.hpp"

namespace srw {

// omega = u(t) dt on P^1.
struct PlaneDifferential {
  RatFunc u;

  friend auto operator<=>(const PlaneDifferential&, const PlaneDifferential&) = default;
  bool is_zero() const { return u.is_zero(); }
};

// omega = z^m h(t) dt on the cover z^n = g(t).
struct CyclicCoverDifferential {
  int64_t n = 1;   // cover degree, gcd(n, p) = 1
  Poly g;          // cover equation right-hand side, nonzero
  int64_t m = 0;   // z-exponent in [0, n)
  RatFunc h;

  bool is_zero() const { return h.is_zero(); }
};

// For polynomial u = sum c_j t^j: C(u dt) = sum pth_root(c_{pj+p-1}) t^j dt.
// For u = P/Q: C(u dt) = (1/Q) C(P Q^{p-1} dt), which keeps everything exact.
PlaneDifferential cartier_plane(const Field& F, const PlaneDifferential& w);

// Computes m' in [0, n) with p m' = m (mod n) and e = (m - p m')/n, then
// returns z^{m'} cartier_plane(h g^e dt).  Throws if gcd(n, p) != 1.
CyclicCoverDifferential cartier_cyclic(const Field& F, const CyclicCoverDifferential& w);

// gamma with cartier_cyclic(w) = gamma * w (same m-component, proportional
// h-part), or nullopt if the image is not a scalar multiple.  The zero image
// yields gamma = 0.
std::optional<FieldElement> cartier_eigenvalue(const Field& F, const CyclicCoverDifferential& w);

// Cartier-fixed, i.e. of the form du/u.
bool is_logarithmic(const Field& F, const CyclicCoverDifferential& w);
// In the kernel of the Cartier operator, i.e. of the form du.
bool is_exact(const Field& F, const CyclicCoverDifferential& w);

// z^m h dt on the trivial cover (n = 1, m = 0): a plane form as a cyclic one.
CyclicCoverDifferential plane_as_cyclic(const Field& F, RatFunc u);

bool cover_squarefree(const Field& F, const CyclicCoverDifferential& w);

}  // namespace srw

// The PSL_2(p)-action on the superelliptic curve y^{(p+1)/2} = x^p - x:
//   A(x) = (ax+b)/(cx+d),  A(y) = y/(cx+d)^2,  ad - bc = 1.

#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "srw/exec.hpp"
#include "srw/ratfunc.hpp"

namespace srw {

// Canonical representative of {M, -M}: the first nonzero entry in scan order
// a, b, c, d lies in [1, (p-1)/2].
struct PSL2Element {
  int64_t p = 0;
  std::array<int64_t, 4> m{};  // a, b, c, d

  friend auto operator<=>(const PSL2Element&, const PSL2Element&) = default;
};

// Validates det = 1 (mod p) and canonicalizes the sign.
PSL2Element psl2_make(int64_t p, int64_t a, int64_t b, int64_t c, int64_t d);
PSL2Element psl2_identity(int64_t p);
bool psl2_is_identity(const PSL2Element& A);

int64_t psl2_order(int64_t p);  // p(p^2-1)/2

// All canonical elements in deterministic (sorted) order.
std::vector<PSL2Element> psl2_enumerate(int64_t p);

PSL2Element psl2_compose(const PSL2Element& A, const PSL2Element& B);  // throws on mixed p
PSL2Element psl2_inverse(const PSL2Element& A);

struct CurvePoint {
  FieldElement x, y;
  bool at_infinity = false;  // the unique place over x = inf

  friend auto operator<=>(const CurvePoint&, const CurvePoint&) = default;
};

// y^N = x^p - x with N = (p+1)/2.
bool on_curve(const Field& F, int64_t p, const CurvePoint& P);

// Image of P.  An affine P with cx + d = 0 maps to the infinity marker; the
// infinity marker is fixed when c = 0 and otherwise needs the inverse chart,
// which is not modeled (throws std::domain_error).  Raw-matrix overload so
// tests can act with -I and compare M against -M.
CurvePoint act_on_point(const Field& F, const PSL2Element& A, const CurvePoint& P);
CurvePoint act_on_point_raw(const Field& F, const std::array<int64_t, 4>& m,
                            const CurvePoint& P);

// The chart-independent curve-preservation identity, checked with the
// rational-function engine over F_p:
//   ((ax+b)/(cx+d))^p - (ax+b)/(cx+d)  ==  (x^p - x) / (cx+d)^{p+1}.
bool psl2_symbolic_curve_identity(const PSL2Element& A);

// Identity above for every canonical element; per-element work is
// independent and Exec::parallel distributes it.
bool psl2_symbolic_all(int64_t p, Exec exec = Exec::parallel);

// Deterministic sample of affine points over F (seeded), all on the curve.
std::vector<CurvePoint> sample_curve_points(const Field& F, int64_t p, int64_t count,
                                            uint64_t seed);

// Genus of y^N = f(x) with N = (p+1)/2, deg f = p coprime to N, f separable:
// (N-1)(p-1)/2.
int64_t curve_genus(int64_t p);

struct ActionReport {
  int64_t p = 0;
  int64_t group_order = 0;
  int64_t genus = 0;
  bool symbolic_pass = false;
  int64_t composition_samples = 0;
  bool composition_pass = false;
  bool minus_identity_trivial = false;
  bool faithful = false;
  bool ok() const {
    return symbolic_pass && composition_pass && minus_identity_trivial && faithful;
  }
};

// (a) symbolic identity for every element, (b) homomorphism on sampled
// composition triples over F_{p^k}, (c) -I acts trivially, (d) no
// non-identity element fixes every sampled point.
ActionReport verify_action_axioms(int64_t p, int k, int64_t samples, uint64_t seed,
                                  Exec exec = Exec::parallel);

}  // namespace srw

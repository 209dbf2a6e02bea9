// Exact rational p-adic valuations (v(p) = 1), the supersingular and
// too-supersingular disks, and the tame field-degree formulas.

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace srw {

// A valuation value: an exact rational, or +infinity for v(0).  No floating
// point anywhere; comparisons go through 128-bit cross multiplication.
class ValQ {
 public:
  ValQ() : num_(0), den_(1), infinite_(false) {}
  ValQ(int64_t num, int64_t den);  // reduces; throws on den = 0
  static ValQ infinity();

  bool is_infinite() const { return infinite_; }
  int64_t num() const { return num_; }
  int64_t den() const { return den_; }

  friend bool operator==(const ValQ& a, const ValQ& b);
  friend std::strong_ordering operator<=>(const ValQ& a, const ValQ& b);

  ValQ operator+(const ValQ& o) const;
  ValQ operator-(const ValQ& o) const;

  std::string str() const;  // "num/den", "3", or "inf"

 private:
  int64_t num_, den_;  // den > 0, gcd = 1
  bool infinite_;
};

// Exponent p/(p-1+a) of the too-supersingular disk
// D = { t : |t - lambda|  <=  |p|^(p/(p-1+a)) }.
// Default range 1 < a < p; allow_a1 admits a = 1.
ValQ disk_exponent(int64_t p, int64_t a, bool allow_a1 = false);

// vdist >= p/(p-1+a): inside the closed disk D (boundary included).
bool in_too_supersingular_disk(const ValQ& vdist, int64_t p, int64_t a, bool allow_a1 = false);

// vdist > 0: inside the open unit disk D'.
bool in_supersingular_disk(const ValQ& vdist);

// (p-1) * lcm_i(p-1+a_i), the tame extension degree sufficient for lifting.
int64_t tame_degree_bound(int64_t p, const std::vector<int64_t>& signature, bool allow_a1 = false);

// (p^2-1)/2, the minimal field degree in the modular case.
int64_t modular_field_degree(int64_t p);

struct KatzReport {
  int64_t p = 0;
  ValQ threshold;                 // p/(p+1), the a = 2 disk exponent
  bool threshold_identity = false;   // disk_exponent(p,2) == p/(p+1)
  bool boundary_inside = false;      // vdist = p/(p+1) lies in the closed disk
  bool sampled_equivalence = false;  // grid of vdist values classifies consistently
  bool nesting = false;              // too-supersingular implies supersingular on the grid
  bool phi_roots_simple = false;     // gcd(Phi, Phi') = 1, input to the v(Phi(t)) link
  bool hasse_valuation_link = false; // v(Phi(t)) = vdist for 0 < vdist <= 1 at a simple root
  bool ok() const {
    return threshold_identity && boundary_inside && sampled_equivalence && nesting &&
           phi_roots_simple && hasse_valuation_link;
  }
};

// Consistency of the a = 2 disk with the no-canonical-subgroup locus: the
// threshold is p/(p+1) exactly, and for a simple root of the Hasse polynomial
// the valuation of Phi at a point of distance-valuation vdist equals vdist.
KatzReport katz_consistency_check(int64_t p);

}  // namespace srw

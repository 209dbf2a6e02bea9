#include "srw/padic.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

#include "srw/modular.hpp"

namespace srw {

ValQ::ValQ(int64_t num, int64_t den) : infinite_(false) {
  if (den == 0) throw std::invalid_argument("ValQ: zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  int64_t g = std::gcd(num < 0 ? -num : num, den);
  if (g == 0) g = 1;
  num_ = num / g;
  den_ = den / g;
}

ValQ ValQ::infinity() {
  ValQ v;
  v.infinite_ = true;
  return v;
}

bool operator==(const ValQ& a, const ValQ& b) {
  if (a.infinite_ || b.infinite_) return a.infinite_ == b.infinite_;
  return a.num_ == b.num_ && a.den_ == b.den_;
}

std::strong_ordering operator<=>(const ValQ& a, const ValQ& b) {
  if (a.infinite_ && b.infinite_) return std::strong_ordering::equal;
  if (a.infinite_) return std::strong_ordering::greater;
  if (b.infinite_) return std::strong_ordering::less;
  __int128 lhs = static_cast<__int128>(a.num_) * b.den_;
  __int128 rhs = static_cast<__int128>(b.num_) * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

ValQ ValQ::operator+(const ValQ& o) const {
  if (infinite_ || o.infinite_) return infinity();
  return ValQ(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

ValQ ValQ::operator-(const ValQ& o) const {
  if (infinite_) return infinity();
  if (o.infinite_) throw std::invalid_argument("ValQ: cannot subtract infinity");
  return ValQ(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
}

std::string ValQ::str() const {
  if (infinite_) return "inf";
  std::ostringstream os;
  os << num_;
  if (den_ != 1) os << "/" << den_;
  return os.str();
}

namespace {

void check_exponent_args(int64_t p, int64_t a, bool allow_a1) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("disk: p must be an odd prime");
  int64_t lo = allow_a1 ? 1 : 2;
  if (a < lo || a > p - 1) throw std::invalid_argument("disk: exponent a out of range");
}

}  // namespace

ValQ disk_exponent(int64_t p, int64_t a, bool allow_a1) {
  check_exponent_args(p, a, allow_a1);
  return ValQ(p, p - 1 + a);
}

bool in_too_supersingular_disk(const ValQ& vdist, int64_t p, int64_t a, bool allow_a1) {
  if (!vdist.is_infinite() && vdist < ValQ(0, 1))
    throw std::invalid_argument("disk: vdist must be >= 0 (integral t)");
  return vdist >= disk_exponent(p, a, allow_a1);
}

bool in_supersingular_disk(const ValQ& vdist) { return vdist > ValQ(0, 1); }

int64_t tame_degree_bound(int64_t p, const std::vector<int64_t>& signature, bool allow_a1) {
  if (signature.empty()) throw std::invalid_argument("tame_degree_bound: empty signature");
  int64_t l = 1;
  for (int64_t a : signature) {
    check_exponent_args(p, a, allow_a1);
    l = std::lcm(l, p - 1 + a);
  }
  return (p - 1) * l;
}

int64_t modular_field_degree(int64_t p) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("modular_field_degree: need prime p >= 5");
  return (p * p - 1) / 2;
}

KatzReport katz_consistency_check(int64_t p) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("katz check: need prime p >= 5");
  KatzReport rep;
  rep.p = p;
  rep.threshold = ValQ(p, p + 1);
  rep.threshold_identity = disk_exponent(p, 2) == rep.threshold;
  rep.boundary_inside = in_too_supersingular_disk(rep.threshold, p, 2);

  // deterministic grid of distance valuations, plus the exact boundary and
  // the nearest simple fractions on both sides
  std::vector<ValQ> grid;
  for (int64_t den = 1; den <= 8; ++den)
    for (int64_t num = 0; num <= 2 * den; ++num) grid.emplace_back(num, den);
  grid.push_back(rep.threshold);
  grid.emplace_back(p - 1, p);      // just below p/(p+1)
  grid.emplace_back(p + 1, p + 1);  // 1, inside
  grid.push_back(ValQ::infinity());

  rep.sampled_equivalence = true;
  rep.nesting = true;
  for (const ValQ& v : grid) {
    bool inside = in_too_supersingular_disk(v, p, 2);
    if (inside != (v >= rep.threshold)) rep.sampled_equivalence = false;
    if (inside && !in_supersingular_disk(v)) rep.nesting = false;
  }

  // simplicity of the Hasse roots makes other-root distances exact zeros, so
  // v(Phi(t)) = vdist + (r-1)*0 for 0 < vdist <= 1
  HassePolynomial phi = hasse_polynomial(p);
  Field f1(p, 1);
  rep.phi_roots_simple = poly_is_squarefree(f1, phi.poly);
  Field f2(p, 2);
  auto lambdas = poly_roots(f2, lift_to(f2, phi.poly)).roots;
  bool distinct = true;
  for (size_t i = 0; i < lambdas.size(); ++i)
    for (size_t j = i + 1; j < lambdas.size(); ++j)
      if (lambdas[i] == lambdas[j]) distinct = false;
  rep.hasse_valuation_link = rep.phi_roots_simple && distinct;
  if (rep.hasse_valuation_link) {
    int64_t r = (p - 1) / 2;
    for (const ValQ& v : grid) {
      if (!(v > ValQ(0, 1)) || v > ValQ(1, 1) || v.is_infinite()) continue;
      ValQ total = v;
      for (int64_t j = 1; j < r; ++j) total = total + ValQ(0, 1);  // other roots at distance 0
      if (!(total == v)) rep.hasse_valuation_link = false;
    }
  }
  return rep;
}

}  // namespace srw

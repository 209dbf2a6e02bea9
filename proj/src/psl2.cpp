#include "srw/psl2.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace srw {

namespace {

int64_t mod_pos(int64_t v, int64_t p) { return ((v % p) + p) % p; }

std::array<int64_t, 4> canonical_sign(int64_t p, std::array<int64_t, 4> m) {
  for (int64_t& v : m) v = mod_pos(v, p);
  for (int64_t v : m) {
    if (v == 0) continue;
    if (v > (p - 1) / 2)
      for (int64_t& w : m) w = mod_pos(-w, p);
    break;
  }
  return m;
}

}  // namespace

PSL2Element psl2_make(int64_t p, int64_t a, int64_t b, int64_t c, int64_t d) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("psl2: p must be an odd prime");
  std::array<int64_t, 4> m{mod_pos(a, p), mod_pos(b, p), mod_pos(c, p), mod_pos(d, p)};
  if (mod_pos(m[0] * m[3] - m[1] * m[2], p) != 1)
    throw std::invalid_argument("psl2: determinant must be 1");
  return PSL2Element{p, canonical_sign(p, m)};
}

PSL2Element psl2_identity(int64_t p) { return psl2_make(p, 1, 0, 0, 1); }

bool psl2_is_identity(const PSL2Element& A) {
  return A.m == std::array<int64_t, 4>{1, 0, 0, 1};
}

int64_t psl2_order(int64_t p) { return p * (p * p - 1) / 2; }

std::vector<PSL2Element> psl2_enumerate(int64_t p) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("psl2: p must be an odd prime");
  std::vector<PSL2Element> out;
  out.reserve(psl2_order(p));
  for (int64_t a = 0; a < p; ++a)
    for (int64_t b = 0; b < p; ++b)
      for (int64_t c = 0; c < p; ++c)
        for (int64_t d = 0; d < p; ++d) {
          if (mod_pos(a * d - b * c, p) != 1) continue;
          PSL2Element e{p, canonical_sign(p, {a, b, c, d})};
          out.push_back(e);
        }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

PSL2Element psl2_compose(const PSL2Element& A, const PSL2Element& B) {
  if (A.p != B.p) throw std::invalid_argument("psl2_compose: mixed primes");
  const int64_t p = A.p;
  const auto& a = A.m;
  const auto& b = B.m;
  return PSL2Element{p, canonical_sign(p, {a[0] * b[0] + a[1] * b[2], a[0] * b[1] + a[1] * b[3],
                                           a[2] * b[0] + a[3] * b[2], a[2] * b[1] + a[3] * b[3]})};
}

PSL2Element psl2_inverse(const PSL2Element& A) {
  // [[d, -b], [-c, a]] for det 1
  return PSL2Element{A.p, canonical_sign(A.p, {A.m[3], -A.m[1], -A.m[2], A.m[0]})};
}

bool on_curve(const Field& F, int64_t p, const CurvePoint& P) {
  if (P.at_infinity) return true;
  const int64_t N = (p + 1) / 2;
  FieldElement lhs = F.pow(P.y, N);
  FieldElement rhs = F.sub(F.pow(P.x, p), P.x);
  return lhs == rhs;
}

CurvePoint act_on_point_raw(const Field& F, const std::array<int64_t, 4>& m,
                            const CurvePoint& P) {
  const FieldElement a = F.from_int(m[0]), b = F.from_int(m[1]);
  const FieldElement c = F.from_int(m[2]), d = F.from_int(m[3]);
  if (P.at_infinity) {
    if (c.is_zero()) return P;
    throw std::domain_error("act_on_point: image of the infinity place needs the inverse chart");
  }
  FieldElement denom = F.add(F.mul(c, P.x), d);
  if (denom.is_zero()) return CurvePoint{F.zero(), F.zero(), true};
  FieldElement inv = F.inv(denom);
  FieldElement x = F.mul(F.add(F.mul(a, P.x), b), inv);
  FieldElement y = F.mul(P.y, F.mul(inv, inv));
  return CurvePoint{std::move(x), std::move(y), false};
}

CurvePoint act_on_point(const Field& F, const PSL2Element& A, const CurvePoint& P) {
  if (F.p() != A.p) throw std::invalid_argument("act_on_point: field and matrix primes differ");
  return act_on_point_raw(F, A.m, P);
}

bool psl2_symbolic_curve_identity(const PSL2Element& A) {
  const int64_t p = A.p;
  Field F(p, 1);
  Poly u = poly_from_coeffs({F.from_int(A.m[1]), F.from_int(A.m[0])});  // ax + b
  Poly v = poly_from_coeffs({F.from_int(A.m[3]), F.from_int(A.m[2])});  // cx + d
  RatFunc ax = rf_make(F, u, v);
  RatFunc lhs = rf_sub(F, rf_pow(F, ax, p), ax);
  Poly xp_minus_x = poly_sub(F, poly_pow(F, poly_x(F), p), poly_x(F));
  RatFunc rhs = rf_make(F, xp_minus_x, poly_pow(F, v, p + 1));
  return lhs == rhs;
}

bool psl2_symbolic_all(int64_t p, Exec exec) {
  std::vector<PSL2Element> elements = psl2_enumerate(p);
  const int64_t n = static_cast<int64_t>(elements.size());
  std::vector<uint8_t> pass(n, 0);
  if (exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 32)
    for (int64_t i = 0; i < n; ++i) pass[i] = psl2_symbolic_curve_identity(elements[i]);
  } else {
    for (int64_t i = 0; i < n; ++i) pass[i] = psl2_symbolic_curve_identity(elements[i]);
  }
  return std::all_of(pass.begin(), pass.end(), [](uint8_t v) { return v != 0; });
}

std::vector<CurvePoint> sample_curve_points(const Field& F, int64_t p, int64_t count,
                                            uint64_t seed) {
  const int64_t N = (p + 1) / 2;
  // bucket the y-values by y^N so sampling is uniform over x with solvable fibre
  std::vector<std::vector<int64_t>> ys(F.order());
  for (int64_t i = 0; i < F.order(); ++i)
    ys[F.index_of(F.pow(F.element(i), N))].push_back(i);

  std::mt19937_64 rng(seed);
  std::vector<CurvePoint> out;
  out.reserve(count);
  while (static_cast<int64_t>(out.size()) < count) {
    FieldElement x = F.element(static_cast<int64_t>(rng() % F.order()));
    FieldElement fx = F.sub(F.pow(x, p), x);
    const auto& bucket = ys[F.index_of(fx)];
    if (bucket.empty()) continue;
    FieldElement y = F.element(bucket[rng() % bucket.size()]);
    out.push_back(CurvePoint{std::move(x), std::move(y), false});
  }
  return out;
}

int64_t curve_genus(int64_t p) {
  if (!is_prime(p) || p < 5) throw std::invalid_argument("curve_genus: need prime p >= 5");
  const int64_t N = (p + 1) / 2;
  return (N - 1) * (p - 1) / 2;
}

ActionReport verify_action_axioms(int64_t p, int k, int64_t samples, uint64_t seed, Exec exec) {
  if (!is_prime(p) || p < 5)
    throw std::invalid_argument("verify_action_axioms: need prime p >= 5");
  ActionReport rep;
  rep.p = p;
  rep.genus = curve_genus(p);

  std::vector<PSL2Element> elements = psl2_enumerate(p);
  rep.group_order = static_cast<int64_t>(elements.size());
  rep.symbolic_pass = psl2_symbolic_all(p, exec);

  Field F(p, k);
  std::vector<CurvePoint> points = sample_curve_points(F, p, std::max<int64_t>(samples, 50), seed);

  // (b) homomorphism on sampled triples; triples that route through the
  // infinity fibre are resampled so exactly `samples` clean ones are checked
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  rep.composition_pass = true;
  int64_t done = 0;
  while (done < samples) {
    const PSL2Element& A = elements[rng() % elements.size()];
    const PSL2Element& B = elements[rng() % elements.size()];
    const CurvePoint& P = points[rng() % points.size()];
    CurvePoint bp = act_on_point(F, B, P);
    if (bp.at_infinity) continue;
    CurvePoint lhs = act_on_point(F, A, bp);
    CurvePoint rhs = act_on_point(F, psl2_compose(A, B), P);
    if (lhs.at_infinity || rhs.at_infinity) continue;
    if (!(lhs == rhs) || !on_curve(F, p, lhs)) rep.composition_pass = false;
    ++done;
  }
  rep.composition_samples = done;

  // (c) -I fixes every sampled point, acting through the raw formulas
  rep.minus_identity_trivial = true;
  const std::array<int64_t, 4> minus_identity{p - 1, 0, 0, p - 1};
  for (const CurvePoint& P : points)
    if (!(act_on_point_raw(F, minus_identity, P) == P)) rep.minus_identity_trivial = false;

  // (d) faithfulness on the sample
  rep.faithful = true;
  for (const PSL2Element& A : elements) {
    if (psl2_is_identity(A)) continue;
    bool moves_some = false;
    for (const CurvePoint& P : points) {
      CurvePoint q = act_on_point(F, A, P);
      if (q.at_infinity || !(q == P)) {
        moves_some = true;
        break;
      }
    }
    if (!moves_some) rep.faithful = false;
  }
  return rep;
}

}  // namespace srw

#include "srw/deformation.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace srw {

namespace {

std::string fmt_int(int64_t v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

// Positions sharing an exponent value keep ascending coefficient-vector
// order; this is the canonical representative of the tuple modulo
// signature-preserving permutations.
void canonicalize_tuple(std::vector<FieldElement>& lambdas, const Signature& sig) {
  const size_t n = lambdas.size();
  std::vector<int64_t> seen;
  for (size_t i = 0; i < n; ++i) {
    if (std::find(seen.begin(), seen.end(), sig.a[i]) != seen.end()) continue;
    seen.push_back(sig.a[i]);
    std::vector<size_t> positions;
    for (size_t j = 0; j < n; ++j)
      if (sig.a[j] == sig.a[i]) positions.push_back(j);
    std::vector<FieldElement> vals;
    for (size_t pos : positions) vals.push_back(lambdas[pos]);
    std::sort(vals.begin(), vals.end());
    for (size_t idx = 0; idx < positions.size(); ++idx) lambdas[positions[idx]] = vals[idx];
  }
}

}  // namespace

ValidationReport sdd_validate(const SpecialDeformationDatum& d, bool allow_a1) {
  ValidationReport rep;
  auto fail = [&](const char* check, std::string detail) {
    rep.issues.push_back({check, std::move(detail)});
  };

  const int64_t p = d.F.p();
  if (d.lambdas.size() != d.sig.a.size())
    fail("lambda-count", "expected one lambda per signature entry");
  if (d.sig.sum() != p - 1)
    fail("signature-sum", "sum a_i = " + fmt_int(d.sig.sum()) + " != p-1 = " + fmt_int(p - 1));
  const int64_t lo = allow_a1 ? 1 : 2;
  for (int64_t a : d.sig.a)
    if (a < lo || a >= p)
      fail("signature-range", "a_i = " + fmt_int(a) + " outside " +
                                  (allow_a1 ? std::string("[1, p)") : std::string("(1, p)")));
  bool duplicate = false;
  for (size_t i = 0; i < d.lambdas.size() && !duplicate; ++i)
    for (size_t j = i + 1; j < d.lambdas.size() && !duplicate; ++j)
      if (d.lambdas[i] == d.lambdas[j]) {
        fail("lambdas-distinct", "duplicate lambda " + to_string(d.lambdas[i]));
        duplicate = true;
      }
  for (const auto& l : d.lambdas)
    if (l.is_zero() || l == d.F.one())
      fail("lambdas-avoid-01", "lambda " + to_string(l) + " lies in {0, 1}");
  if (d.c.is_zero()) fail("c-nonzero", "constant c must lie in k^x");
  if (d.variant == CoverVariant::half)
    for (int64_t a : d.sig.a)
      if (a != 2) {
        fail("half-variant-requires-a2", "degree-r presentation needs all a_i = 2");
        break;
      }
  if (!d.lambdas.empty()) {
    Poly prod = poly_one(d.F);
    for (const auto& l : d.lambdas) prod = poly_mul(d.F, prod, poly_x_minus(d.F, l));
    if (!poly_is_squarefree(d.F, prod))
      fail("product-squarefree", "prod (t - lambda_i) has a repeated factor");
  }
  return rep;
}

CyclicCoverDifferential sdd_differential(const SpecialDeformationDatum& d, bool allow_a1) {
  ValidationReport rep = sdd_validate(d, allow_a1);
  if (!rep.ok())
    throw std::invalid_argument("sdd_differential: invalid datum (" + rep.issues[0].check + ")");

  const Field& F = d.F;
  int64_t n;
  Poly g = poly_one(F);
  if (d.variant == CoverVariant::full) {
    n = F.p() - 1;
    for (size_t i = 0; i < d.lambdas.size(); ++i)
      g = poly_mul(F, g, poly_pow(F, poly_x_minus(F, d.lambdas[i]), d.sig.a[i]));
  } else {
    n = (F.p() - 1) / 2;
    for (const auto& l : d.lambdas) g = poly_mul(F, g, poly_x_minus(F, l));
  }
  // h = c / (t(t-1))
  Poly tt1 = poly_from_coeffs({F.zero(), F.neg(F.one()), F.one()});
  RatFunc h = rf_make(F, poly_const(F, d.c), std::move(tt1));
  int64_t m = 1;
  if (n == 1) {  // trivial cover: fold z = g(t) into the plane part
    m = 0;
    h = rf_mul(F, h, rf_from_poly(F, g));
  }
  return CyclicCoverDifferential{n, std::move(g), m, std::move(h)};
}

bool sdd_is_special(const SpecialDeformationDatum& d, bool allow_a1) {
  return is_logarithmic(d.F, sdd_differential(d, allow_a1));
}

std::optional<FieldElement> sdd_eigenvalue(const SpecialDeformationDatum& d, bool allow_a1) {
  return cartier_eigenvalue(d.F, sdd_differential(d, allow_a1));
}

SearchResult sdd_search(int64_t p, const Signature& sig, int k, const SearchOptions& opts) {
  Field F(p, k);
  if (F.order() > 10'000)
    throw std::invalid_argument("sdd_search: p^k exceeds the exhaustion bound 10^4");
  if (sig.sum() != p - 1)
    throw std::invalid_argument("sdd_search: signature sum != p-1");
  const int64_t lo = opts.allow_a1 ? 1 : 2;
  for (int64_t a : sig.a)
    if (a < lo || a >= p) throw std::invalid_argument("sdd_search: signature entry out of range");

  // elements of F_{p^k} \ {0, 1} in coefficient-vector order
  std::vector<FieldElement> pool;
  for (int64_t i = 0; i < F.order(); ++i) pool.push_back(F.element(i));
  std::sort(pool.begin(), pool.end());
  std::erase_if(pool, [&](const FieldElement& e) { return e.is_zero() || e == F.one(); });

  const size_t r = sig.a.size();

  // enumerate assignments; equal exponents force ascending pool positions so
  // each unordered configuration appears exactly once
  std::vector<std::vector<int32_t>> candidates;
  std::vector<int32_t> current(r);
  std::vector<char> used(pool.size(), 0);
  auto extend = [&](auto&& self, size_t depth) -> void {
    if (static_cast<int64_t>(candidates.size()) > opts.max_candidates)
      throw std::invalid_argument("sdd_search: candidate space exceeds " +
                                  std::to_string(opts.max_candidates));
    if (depth == r) {
      candidates.push_back(current);
      return;
    }
    for (size_t i = 0; i < pool.size(); ++i) {
      if (used[i]) continue;
      bool ok = true;
      for (size_t j = 0; j < depth; ++j)
        if (sig.a[j] == sig.a[depth] && current[j] >= static_cast<int32_t>(i)) ok = false;
      if (!ok) continue;
      used[i] = 1;
      current[depth] = static_cast<int32_t>(i);
      self(self, depth + 1);
      used[i] = 0;
    }
  };
  extend(extend, 0);

  const int64_t total = static_cast<int64_t>(candidates.size());
  std::vector<uint8_t> keep(total, 0);

  auto evaluate = [&](int64_t idx) {
    std::vector<FieldElement> lambdas;
    lambdas.reserve(r);
    for (int32_t pos : candidates[idx]) lambdas.push_back(pool[pos]);
    SpecialDeformationDatum d{F, std::move(lambdas), sig, F.one(), CoverVariant::full};
    auto gamma = sdd_eigenvalue(d, opts.allow_a1);
    keep[idx] = gamma.has_value() && !gamma->is_zero();
  };

  if (opts.exec == Exec::parallel) {
#pragma omp parallel for schedule(dynamic, 16)
    for (int64_t i = 0; i < total; ++i) evaluate(i);
  } else {
    for (int64_t i = 0; i < total; ++i) evaluate(i);
  }

  SearchResult result;
  result.candidates = total;
  for (int64_t i = 0; i < total; ++i) {
    if (!keep[i]) continue;
    std::vector<FieldElement> tuple;
    for (int32_t pos : candidates[i]) tuple.push_back(pool[pos]);
    result.tuples.push_back(std::move(tuple));
  }
  std::sort(result.tuples.begin(), result.tuples.end());
  return result;
}

FieldElement s3_apply(const Field& F, S3Map m, const FieldElement& x) {
  const FieldElement one = F.one();
  switch (m) {
    case S3Map::identity: return x;
    case S3Map::swap01: return F.sub(one, x);
    case S3Map::swap0inf: return F.inv(x);
    case S3Map::swap1inf: return F.mul(x, F.inv(F.sub(x, one)));
    case S3Map::rot_01inf: return F.inv(F.sub(one, x));
    case S3Map::rot_0inf1: return F.mul(F.sub(x, one), F.inv(x));
  }
  throw std::logic_error("s3_apply: bad map");
}

SpecialDeformationDatum sdd_s3_transform(const SpecialDeformationDatum& d, S3Map m) {
  SpecialDeformationDatum out = d;
  for (auto& l : out.lambdas) {
    if (l.is_zero() || l == d.F.one())
      throw std::invalid_argument("sdd_s3_transform: lambda in {0, 1, inf}");
    l = s3_apply(d.F, m, l);
    if (l.is_zero() || l == d.F.one())
      throw std::invalid_argument("sdd_s3_transform: image lambda lands in {0, 1, inf}");
  }
  canonicalize_tuple(out.lambdas, out.sig);
  return out;
}

}  // namespace srw

// Special deformation data: the pairs (Z_0, omega_0) with
// omega_0 = c z dt/(t(t-1)) on z^{p-1} = prod_i (t - lambda_i)^{a_i},
// their validation, specialness test, and brute-force search.

#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "srw/cartier.hpp"
#include "srw/exec.hpp"

namespace srw {

struct Signature {
  std::vector<int64_t> a;

  int64_t sum() const {
    int64_t s = 0;
    for (int64_t v : a) s += v;
    return s;
  }
};

// Two presentations of the same datum: the degree-(p-1) cover
// z^{p-1} = prod (t-lambda_i)^{a_i}, and for all-2 signatures the degree-r
// cover z^r = prod (t-lambda_i) with r = (p-1)/2.
enum class CoverVariant { full, half };

struct SpecialDeformationDatum {
  Field F;
  std::vector<FieldElement> lambdas;
  Signature sig;
  FieldElement c;
  CoverVariant variant = CoverVariant::full;
};

struct ValidationIssue {
  std::string check;
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

// Checks every datum invariant by name; reports, never throws.
// allow_a1 relaxes the exponent range from 1 < a_i < p to 1 <= a_i < p.
ValidationReport sdd_validate(const SpecialDeformationDatum& d, bool allow_a1 = false);

// omega = c z dt/(t(t-1)) on the cover of the datum's variant.
// Throws on an invalid datum.
CyclicCoverDifferential sdd_differential(const SpecialDeformationDatum& d, bool allow_a1 = false);

// Strict specialness: the differential is Cartier-invariant as given.
bool sdd_is_special(const SpecialDeformationDatum& d, bool allow_a1 = false);

// Search-mode specialness: omega is a Cartier eigenvector with nonzero
// eigenvalue gamma, so some c over the algebraic closure makes c omega
// logarithmic (c^{p-1} = gamma^p).
std::optional<FieldElement> sdd_eigenvalue(const SpecialDeformationDatum& d, bool allow_a1 = false);

struct SearchOptions {
  int64_t max_candidates = 2'000'000;
  bool allow_a1 = false;
  Exec exec = Exec::parallel;
};

struct SearchResult {
  // Tuples in signature-position order, positions with equal a_i ascending;
  // the list sorted lexicographically by coefficient vectors.
  std::vector<std::vector<FieldElement>> tuples;
  int64_t candidates = 0;  // total candidates evaluated
};

// All tuples of distinct lambda_i in F_{p^k} \ {0,1} that are special in
// search mode.  Finite by construction; deterministic output order.
SearchResult sdd_search(int64_t p, const Signature& sig, int k, const SearchOptions& opts = {});

// The six coordinate changes of P^1 permuting {0, 1, inf}.
enum class S3Map { identity, swap01, swap0inf, swap1inf, rot_01inf, rot_0inf1 };

constexpr const char* s3_name(S3Map m) {
  switch (m) {
    case S3Map::identity: return "t";
    case S3Map::swap01: return "1-t";
    case S3Map::swap0inf: return "1/t";
    case S3Map::swap1inf: return "t/(t-1)";
    case S3Map::rot_01inf: return "1/(1-t)";
    case S3Map::rot_0inf1: return "(t-1)/t";
  }
  return "?";
}

// Image of x (x not in {0, 1}) under the map.
FieldElement s3_apply(const Field& F, S3Map m, const FieldElement& x);

// Datum with lambda_i replaced by their images, re-canonicalized; signature
// and c unchanged.  Throws if some image lands in {0, 1, inf}.
SpecialDeformationDatum sdd_s3_transform(const SpecialDeformationDatum& d, S3Map m);

}  // namespace srw

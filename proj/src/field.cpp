#include "srw/field.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace srw {

namespace {

// Polynomial helpers over F_p on raw coefficient vectors (little-endian,
// trimmed).  Used only for the irreducible-modulus search; the general Poly
// layer sits on top of Field and cannot be used here.

using PVec = std::vector<int64_t>;

void trim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

int64_t inv_mod(int64_t a, int64_t p) {
  int64_t r = 1, b = a % p, e = p - 2;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

PVec pmod(PVec a, const PVec& m, int64_t p) {
  trim(a);
  int64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    int64_t c = a.back() * lead_inv % p;
    size_t off = a.size() - m.size();
    for (size_t i = 0; i < m.size(); ++i) a[off + i] = ((a[off + i] - c * m[i]) % p + p) % p;
    trim(a);
  }
  return a;
}

PVec ppowmod(PVec base, int64_t e, const PVec& m, int64_t p) {
  PVec r{1};
  base = pmod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = pmod(pmul(r, base, p), m, p);
    base = pmod(pmul(base, base, p), m, p);
    e >>= 1;
  }
  return r;
}

PVec psub(PVec a, const PVec& b, int64_t p) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = ((a[i] - b[i]) % p + p) % p;
  trim(a);
  return a;
}

PVec pgcd(PVec a, PVec b, int64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    PVec r = pmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::vector<int64_t> prime_factors(int64_t n) {
  std::vector<int64_t> out;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  if (n > 1) out.push_back(n);
  return out;
}

// Rabin test: f monic of degree k is irreducible iff t^(p^k) = t mod f and
// gcd(t^(p^(k/q)) - t, f) = 1 for every prime q | k.
bool is_irreducible(const PVec& f, int64_t p) {
  int64_t k = static_cast<int64_t>(f.size()) - 1;
  if (k == 1) return true;
  const PVec x{0, 1};
  PVec t = x;
  for (int64_t i = 0; i < k; ++i) t = ppowmod(std::move(t), p, f, p);
  if (!psub(t, x, p).empty()) return false;
  for (int64_t q : prime_factors(k)) {
    PVec s = x;
    for (int64_t i = 0; i < k / q; ++i) s = ppowmod(std::move(s), p, f, p);
    if (pgcd(psub(std::move(s), x, p), f, p).size() != 1) return false;
  }
  return true;
}

}  // namespace

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(int64_t p, int k) : p_(p), k_(k) {
  if (!is_prime(p) || p == 2) throw std::invalid_argument("field: p must be an odd prime");
  if (k < 1) throw std::invalid_argument("field: extension degree must be >= 1");
  order_ = 1;
  for (int i = 0; i < k; ++i) {
    if (order_ > (int64_t{1} << 40) / p) throw std::invalid_argument("field: p^k too large");
    order_ *= p;
  }
  if (k == 1) {
    modulus_ = {0, 1};
    return;
  }
  for (int64_t n = 0; n < order_; ++n) {
    PVec f(k + 1, 0);
    int64_t m = n;
    for (int i = 0; i < k; ++i) {
      f[i] = m % p;
      m /= p;
    }
    f[k] = 1;
    if (is_irreducible(f, p)) {
      modulus_ = std::move(f);
      return;
    }
  }
  throw std::logic_error("field: no irreducible modulus found");  // unreachable
}

FieldElement Field::from_int(int64_t v) const {
  FieldElement r = zero();
  r.c[0] = ((v % p_) + p_) % p_;
  return r;
}

FieldElement Field::from_coeffs(std::vector<int64_t> coeffs) const {
  if (static_cast<int>(coeffs.size()) > k_)
    throw std::invalid_argument("field element: too many coefficients");
  coeffs.resize(k_, 0);
  for (auto& v : coeffs) v = ((v % p_) + p_) % p_;
  return FieldElement{std::move(coeffs)};
}

FieldElement Field::element(int64_t index) const {
  if (index < 0 || index >= order_) throw std::invalid_argument("field element index out of range");
  FieldElement r = zero();
  for (int i = 0; i < k_; ++i) {
    r.c[i] = index % p_;
    index /= p_;
  }
  return r;
}

int64_t Field::index_of(const FieldElement& x) const {
  int64_t idx = 0;
  for (int i = k_ - 1; i >= 0; --i) idx = idx * p_ + x.c[i];
  return idx;
}

FieldElement Field::add(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (int i = 0; i < k_; ++i) {
    r.c[i] += b.c[i];
    if (r.c[i] >= p_) r.c[i] -= p_;
  }
  return r;
}

FieldElement Field::sub(const FieldElement& a, const FieldElement& b) const {
  FieldElement r = a;
  for (int i = 0; i < k_; ++i) {
    r.c[i] -= b.c[i];
    if (r.c[i] < 0) r.c[i] += p_;
  }
  return r;
}

FieldElement Field::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement Field::mul(const FieldElement& a, const FieldElement& b) const {
  if (k_ == 1) return FieldElement{{a.c[0] * b.c[0] % p_}};
  std::vector<int64_t> prod(2 * k_ - 1, 0);
  for (int i = 0; i < k_; ++i) {
    if (a.c[i] == 0) continue;
    for (int j = 0; j < k_; ++j) prod[i + j] = (prod[i + j] + a.c[i] * b.c[j]) % p_;
  }
  // reduce by the monic modulus
  for (int i = 2 * k_ - 2; i >= k_; --i) {
    int64_t c = prod[i];
    if (c == 0) continue;
    for (int j = 0; j < k_; ++j) prod[i - k_ + j] = ((prod[i - k_ + j] - c * modulus_[j]) % p_ + p_) % p_;
    prod[i] = 0;
  }
  prod.resize(k_);
  return FieldElement{std::move(prod)};
}

FieldElement Field::pow(const FieldElement& a, int64_t e) const {
  if (e < 0) return pow(inv(a), -e);
  FieldElement r = one();
  FieldElement b = a;
  while (e) {
    if (e & 1) r = mul(r, b);
    b = mul(b, b);
    e >>= 1;
  }
  return r;
}

FieldElement Field::inv(const FieldElement& a) const {
  if (a.is_zero()) throw std::invalid_argument("field: division by zero");
  return pow(a, order_ - 2);
}

FieldElement Field::pth_root(const FieldElement& x) const {
  int64_t e = 1;
  for (int i = 0; i < k_ - 1; ++i) e *= p_;
  return pow(x, e);
}

void Field::validate(const FieldElement& a) const {
  if (static_cast<int>(a.c.size()) != k_)
    throw std::invalid_argument("field element: wrong coefficient count");
  for (int64_t v : a.c)
    if (v < 0 || v >= p_) throw std::invalid_argument("field element: coefficient out of range");
}

int64_t binom_mod_p(int64_t n, int64_t j, int64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("binom_mod_p: p not prime");
  if (j < 0 || j > n) throw std::invalid_argument("binom_mod_p: j out of range");
  int64_t result = 1;
  while (n > 0 || j > 0) {
    int64_t nd = n % p, jd = j % p;
    if (jd > nd) return 0;
    // C(nd, jd) mod p with nd, jd < p
    int64_t num = 1, den = 1;
    for (int64_t i = 0; i < jd; ++i) {
      num = num * ((nd - i) % p) % p;
      den = den * ((i + 1) % p) % p;
    }
    result = result * num % p * inv_mod(den, p) % p;
    n /= p;
    j /= p;
  }
  return result;
}

std::string to_string(const Field& f) {
  std::ostringstream os;
  os << "F_" << f.p();
  if (f.k() > 1) os << "^" << f.k();
  return os.str();
}

std::string to_string(const FieldElement& x) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < x.c.size(); ++i) os << (i ? "," : "") << x.c[i];
  os << "]";
  return os.str();
}

}  // namespace srw

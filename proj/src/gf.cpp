#include "grmw/gf.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

namespace grmw {
namespace {

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; (long long)d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Remainder of a mod b in F_p[x]; coefficients constant-first, b monic.
std::vector<int> poly_mod(std::vector<int> a, const std::vector<int>& b,
                          int p) {
  const int db = (int)b.size() - 1;
  while ((int)a.size() > db) {
    int lead = a.back();
    int k = (int)a.size() - 1 - db;
    if (lead != 0) {
      for (int i = 0; i <= db; ++i)
        a[k + i] = ((a[k + i] - lead * b[i]) % p + p) % p;
    }
    a.pop_back();
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// Exhaustive irreducibility test over F_p: no monic divisor of degree
// 1..deg/2.  Degrees here are tiny (e <= 5, p <= 31 in practice).
bool is_irreducible(const std::vector<int>& mod, int p) {
  const int e = (int)mod.size() - 1;
  for (int d = 1; 2 * d <= e; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long idx = 0; idx < count; ++idx) {
      std::vector<int> div(d + 1, 0);
      long long t = idx;
      for (int i = 0; i < d; ++i) {
        div[i] = (int)(t % p);
        t /= p;
      }
      div[d] = 1;  // monic
      if (poly_mod(mod, div, p).empty()) return false;
    }
  }
  return true;
}

// Default irreducible moduli (constant term first) for the prime powers the
// toolkit ships with out of the box.
const std::map<int, std::vector<int>> kDefaultModuli = {
    {4, {1, 1, 1}},           // x^2 + x + 1 over F_2
    {8, {1, 1, 0, 1}},        // x^3 + x + 1 over F_2
    {9, {1, 0, 1}},           // x^2 + 1 over F_3
    {16, {1, 1, 0, 0, 1}},    // x^4 + x + 1 over F_2
    {25, {2, 1, 1}},          // x^2 + x + 2 over F_5
    {27, {1, 2, 0, 1}},       // x^3 + 2x + 1 over F_3
    {32, {1, 0, 1, 0, 0, 1}}, // x^5 + x^2 + 1 over F_2
    {49, {1, 0, 1}},          // x^2 + 1 over F_7
};

}  // namespace

std::vector<int> Field::decode(int code) const {
  std::vector<int> d(e_);
  for (int i = 0; i < e_; ++i) {
    d[i] = code % p_;
    code /= p_;
  }
  return d;
}

int Field::encode(const std::vector<int>& digits) const {
  int code = 0;
  for (int i = (int)digits.size() - 1; i >= 0; --i) code = code * p_ + digits[i];
  return code;
}

std::vector<int> Field::raw_mul(const std::vector<int>& a,
                                const std::vector<int>& b) const {
  std::vector<int> c(2 * e_ - 1, 0);
  for (int i = 0; i < e_; ++i)
    for (int j = 0; j < e_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
  c = poly_mod(std::move(c), modulus_, p_);
  c.resize(e_, 0);
  return c;
}

int Field::add(int a, int b) const {
  if (has_tables_) return add_tab_[a * q_ + b];
  auto da = decode(a), db = decode(b);
  for (int i = 0; i < e_; ++i) da[i] = (da[i] + db[i]) % p_;
  return encode(da);
}

int Field::neg(int a) const {
  if (has_tables_) return neg_tab_[a];
  auto d = decode(a);
  for (int& x : d) x = (p_ - x) % p_;
  return encode(d);
}

int Field::sub(int a, int b) const { return add(a, neg(b)); }

int Field::mul(int a, int b) const {
  if (has_tables_) return mul_tab_[a * q_ + b];
  return encode(raw_mul(decode(a), decode(b)));
}

int Field::pow(int a, long long n) const {
  if (n < 0) return pow(inv(a), -n);
  int r = 1, base = a;
  while (n > 0) {
    if (n & 1) r = mul(r, base);
    base = mul(base, base);
    n >>= 1;
  }
  return r;
}

int Field::inv(int a) const {
  if (a == 0) fail("DivisionByZero", "inverse of zero in F_" + std::to_string(q_));
  if (has_tables_) return inv_tab_[a];
  return pow(a, q_ - 2);
}

bool Field::is_square(int a) const {
  if (a == 0) return true;
  if (p_ == 2) return true;  // Frobenius is onto in even characteristic
  return pow(a, (q_ - 1) / 2) == 1;
}

std::vector<int> Field::elements() const {
  std::vector<int> v(q_);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

FieldPtr field_make(int p, int e, const std::vector<int>* modulus) {
  if (!is_prime(p)) fail("NonPrimeP", "p = " + std::to_string(p));
  if (e < 1) fail("DegreeMismatch", "extension degree must be >= 1");
  long long q = 1;
  for (int i = 0; i < e; ++i) {
    q *= p;
    if (q > 65536) fail("UnsupportedField", "q exceeds 65536");
  }

  auto f = std::shared_ptr<Field>(new Field());
  f->p_ = p;
  f->e_ = e;
  f->q_ = (int)q;

  if (e == 1) {
    f->modulus_ = {0, 1};  // x, a formal placeholder for the prime field
  } else if (modulus) {
    if ((int)modulus->size() != e + 1)
      fail("DegreeMismatch", "modulus must have degree e = " + std::to_string(e));
    f->modulus_ = *modulus;
    for (int& c : f->modulus_) c = ((c % p) + p) % p;
    if (f->modulus_.back() != 1) fail("NonMonicModulus", "modulus must be monic");
    // Necessary condition first (cheap): no root in F_p.
    for (int x = 0; x < p; ++x) {
      int v = 0;
      for (int i = e; i >= 0; --i) v = (v * x + f->modulus_[i]) % p;
      if (v == 0)
        fail("ReducibleModulus", "modulus has root " + std::to_string(x));
    }
    if (!is_irreducible(f->modulus_, p))
      fail("ReducibleModulus", "modulus factors over F_p");
  } else {
    auto it = kDefaultModuli.find((int)q);
    if (it == kDefaultModuli.end())
      fail("NoDefaultModulus", "no built-in modulus for q = " + std::to_string(q));
    f->modulus_ = it->second;
  }

  if (q <= 256) {
    const int n = (int)q;
    f->add_tab_.resize(n * n);
    f->mul_tab_.resize(n * n);
    f->neg_tab_.resize(n);
    f->inv_tab_.resize(n);
    for (int a = 0; a < n; ++a) {
      auto da = f->decode(a);
      {
        auto d = da;
        for (int& x : d) x = (p - x) % p;
        f->neg_tab_[a] = (uint16_t)f->encode(d);
      }
      for (int b = 0; b < n; ++b) {
        auto db = f->decode(b);
        auto ds = da;
        for (int i = 0; i < e; ++i) ds[i] = (ds[i] + db[i]) % p;
        f->add_tab_[a * n + b] = (uint16_t)f->encode(ds);
        f->mul_tab_[a * n + b] = (uint16_t)f->encode(f->raw_mul(da, db));
      }
    }
    for (int a = 1; a < n; ++a)
      for (int b = 1; b < n; ++b)
        if (f->mul_tab_[a * n + b] == 1) f->inv_tab_[a] = (uint16_t)b;
    f->has_tables_ = true;
  }
  return f;
}

FieldPtr field_for_order(int q) {
  if (q < 2) fail("NotPrimePower", "q = " + std::to_string(q));
  int p = q;
  for (int d = 2; (long long)d * d <= q; ++d)
    if (q % d == 0) {
      p = d;
      break;
    }
  int e = 0;
  long long t = 1;
  while (t < q) {
    t *= p;
    ++e;
  }
  if (t != q) fail("NotPrimePower", "q = " + std::to_string(q));

  // Cache fields built with default moduli; they are immutable.
  static std::mutex mu;
  static std::map<int, FieldPtr> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(q);
  if (it != cache.end()) return it->second;
  auto f = field_make(p, e);
  cache[q] = f;
  return f;
}

}  // namespace grmw

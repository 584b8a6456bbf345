#include "grmw/poly.hpp"

#include <algorithm>
#include <numeric>

#include "grmw/budget.hpp"

namespace grmw {

long long& enumeration_budget() {
  static long long v = 1LL << 31;
  return v;
}

std::size_t& table_budget() {
  static std::size_t v = std::size_t(1) << 24;
  return v;
}

namespace {

// Folds an exponent into [0, q-1] using x^q = x: for v >= q subtract q-1
// until v <= q-1 (this preserves the function, not just the coset).
int fold_exp(int v, int q) {
  if (v < 0) fail("NegativeExponent", "exponent " + std::to_string(v));
  while (v >= q) v -= q - 1;
  return v;
}

}  // namespace

Poly::Poly(FieldPtr field, int m) : field_(std::move(field)), m_(m) {
  if (field_->q() < 3)
    fail("UnsupportedField", "q must be at least 3, got " +
                                 std::to_string(field_->q()));
  if (m < 1) fail("BadVariableCount", "m must be >= 1");
}

void Poly::insert_term(Exps e, int c) {
  if (c == 0) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(std::move(e), c);
  } else {
    it->second = field_->add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Poly Poly::constant(FieldPtr field, int m, int c) {
  Poly p(std::move(field), m);
  p.insert_term(Exps(m, 0), c);
  return p;
}

Poly Poly::variable(FieldPtr field, int m, int index) {
  if (index < 0 || index >= m) fail("BadVariableIndex", std::to_string(index));
  Poly p(std::move(field), m);
  Exps e(m, 0);
  e[index] = 1;
  p.insert_term(std::move(e), 1);
  return p;
}

Poly Poly::linear(FieldPtr field, const std::vector<int>& coeffs, int c0) {
  const int m = (int)coeffs.size();
  Poly p(std::move(field), m);
  p.insert_term(Exps(m, 0), c0);
  for (int i = 0; i < m; ++i) {
    Exps e(m, 0);
    e[i] = 1;
    p.insert_term(std::move(e), coeffs[i]);
  }
  return p;
}

Poly Poly::from_terms(
    FieldPtr field, int m,
    const std::vector<std::pair<std::vector<int>, int>>& raw) {
  Poly p(std::move(field), m);
  const int q = p.field_->q();
  for (const auto& [exps, coeff] : raw) {
    if ((int)exps.size() != m)
      fail("DegreeMismatch", "term has wrong number of exponents");
    Exps e(m);
    for (int i = 0; i < m; ++i) e[i] = (uint8_t)fold_exp(exps[i], q);
    p.insert_term(std::move(e), coeff);
  }
  return p;
}

int Poly::degree() const {
  if (terms_.empty()) return kDegreeNegInf;
  int d = 0;
  for (const auto& [e, c] : terms_)
    d = std::max(d, (int)std::accumulate(e.begin(), e.end(), 0));
  return d;
}

int Poly::evaluate(const std::vector<int>& point) const {
  if ((int)point.size() != m_)
    fail("DegreeMismatch", "point has wrong dimension");
  const auto& f = *field_;
  int acc = 0;
  for (const auto& [e, c] : terms_) {
    int v = c;
    for (int i = 0; i < m_; ++i)
      if (e[i] != 0) v = f.mul(v, f.pow(point[i], e[i]));
    acc = f.add(acc, v);
  }
  return acc;
}

std::vector<int> Poly::truth_table() const {
  const int q = field_->q();
  double size = 1;
  for (int i = 0; i < m_; ++i) size *= q;
  if (size > (double)table_budget())
    fail("SizeBudgetExceeded",
         "q^m exceeds the truth-table budget of " +
             std::to_string(table_budget()) + " points");
  std::size_t n = 1;
  for (int i = 0; i < m_; ++i) n *= q;

  // Precompute pow tables per (variable exponent actually used).
  // pow_tab[x][e] = x^e for e <= q-1.
  std::vector<std::vector<int>> pow_tab(q, std::vector<int>(q, 1));
  for (int x = 0; x < q; ++x)
    for (int e = 1; e < q; ++e) pow_tab[x][e] = field_->mul(pow_tab[x][e - 1], x);

  const auto& f = *field_;
  std::vector<int> out(n, 0);
  std::vector<int> pt(m_, 0);
  for (std::size_t idx = 0;; ++idx) {
    int acc = 0;
    for (const auto& [e, c] : terms_) {
      int v = c;
      for (int i = 0; i < m_; ++i)
        if (e[i] != 0) v = f.mul(v, pow_tab[pt[i]][e[i]]);
      acc = f.add(acc, v);
    }
    out[idx] = acc;
    // Advance the point: last coordinate fastest.
    int i = m_ - 1;
    while (i >= 0 && pt[i] == q - 1) pt[i--] = 0;
    if (i < 0) break;
    ++pt[i];
  }
  return out;
}

long long Poly::weight() const {
  auto tt = truth_table();
  return std::count_if(tt.begin(), tt.end(), [](int v) { return v != 0; });
}

Poly Poly::restrict_first(int lambda) const {
  if (m_ < 2) fail("SingleVariable", "cannot restrict a univariate polynomial");
  Poly out(field_, m_ - 1);
  const auto& f = *field_;
  for (const auto& [e, c] : terms_) {
    int coeff = (e[0] == 0) ? c : f.mul(c, f.pow(lambda, e[0]));
    out.insert_term(Exps(e.begin() + 1, e.end()), coeff);
  }
  return out;
}

Poly Poly::operator+(const Poly& o) const {
  if (field_->q() != o.field_->q() || m_ != o.m_ ||
      field_->modulus() != o.field_->modulus())
    fail("FieldMismatch", "operands live in different rings");
  Poly out = *this;
  for (const auto& [e, c] : o.terms_) out.insert_term(e, c);
  return out;
}

Poly Poly::operator-() const {
  Poly out(field_, m_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, field_->neg(c));
  return out;
}

Poly Poly::operator-(const Poly& o) const { return *this + (-o); }

Poly Poly::scaled(int c) const {
  Poly out(field_, m_);
  if (c == 0) return out;
  for (const auto& [e, t] : terms_) out.terms_.emplace(e, field_->mul(t, c));
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (field_->q() != o.field_->q() || m_ != o.m_ ||
      field_->modulus() != o.field_->modulus())
    fail("FieldMismatch", "operands live in different rings");
  const int q = field_->q();
  Poly out(field_, m_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      Exps e(m_);
      for (int i = 0; i < m_; ++i) e[i] = (uint8_t)fold_exp(ea[i] + eb[i], q);
      out.insert_term(std::move(e), field_->mul(ca, cb));
    }
  }
  return out;
}

bool Poly::operator==(const Poly& o) const {
  return m_ == o.m_ && field_->q() == o.field_->q() && terms_ == o.terms_;
}

Poly Poly::compose_affine(const AffineMap& t) const {
  if ((int)t.matrix.size() != m_ || (int)t.shift.size() != m_)
    fail("DegreeMismatch", "affine map has wrong dimension");
  // Invertibility check by Gaussian elimination.
  {
    auto a = t.matrix;
    const auto& f = *field_;
    int rank = 0;
    for (int col = 0; col < m_; ++col) {
      int piv = -1;
      for (int row = rank; row < m_; ++row)
        if (a[row][col] != 0) {
          piv = row;
          break;
        }
      if (piv < 0) continue;
      std::swap(a[rank], a[piv]);
      int inv = f.inv(a[rank][col]);
      for (int j = 0; j < m_; ++j) a[rank][j] = f.mul(a[rank][j], inv);
      for (int row = 0; row < m_; ++row)
        if (row != rank && a[row][col] != 0) {
          int factor = a[row][col];
          for (int j = 0; j < m_; ++j)
            a[row][j] = f.sub(a[row][j], f.mul(factor, a[rank][j]));
        }
      ++rank;
    }
    if (rank != m_) fail("SingularMatrix", "affine map is not invertible");
  }

  // Substituted images L_i = sum_j matrix[i][j] x_j + shift[i].
  std::vector<Poly> images;
  images.reserve(m_);
  for (int i = 0; i < m_; ++i)
    images.push_back(Poly::linear(field_, t.matrix[i], t.shift[i]));

  // Power cache per variable: powers[i][e] = L_i^e.
  std::vector<std::vector<Poly>> powers(m_);
  auto image_pow = [&](int i, int e) -> const Poly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(Poly::constant(field_, m_, 1));
    while ((int)cache.size() <= e) cache.push_back(cache.back() * images[i]);
    return cache[e];
  };

  Poly out(field_, m_);
  for (const auto& [e, c] : terms_) {
    Poly term = Poly::constant(field_, m_, c);
    for (int i = 0; i < m_; ++i)
      if (e[i] != 0) term = term * image_pow(i, e[i]);
    out = out + term;
  }
  return out;
}

Poly Poly::factor_hyperplane(int w) const {
  if (m_ < 2) fail("SingleVariable", "need at least two variables");
  if (!restrict_first(w).is_zero())
    fail("DoesNotVanish", "polynomial does not vanish on x_1 = " +
                              std::to_string(w));
  // Shift x_1 -> x_1 + w so the hyperplane becomes x_1 = 0; then the reduced
  // shifted polynomial has no x_1-free terms (reduced forms are unique), so
  // dividing by x_1 is exponent decrement; shift back afterwards.
  AffineMap shift_in, shift_out;
  shift_in.matrix.assign(m_, std::vector<int>(m_, 0));
  for (int i = 0; i < m_; ++i) shift_in.matrix[i][i] = 1;
  shift_out = shift_in;
  shift_in.shift.assign(m_, 0);
  shift_out.shift.assign(m_, 0);
  shift_in.shift[0] = w;
  shift_out.shift[0] = field_->neg(w);

  Poly shifted = compose_affine(shift_in);
  Poly quotient(field_, m_);
  for (const auto& [e, c] : shifted.terms_) {
    if (e[0] == 0)
      fail("DoesNotVanish", "internal: nonvanishing residue after shift");
    Exps d = e;
    --d[0];
    quotient.terms_.emplace(std::move(d), c);
  }
  return quotient.compose_affine(shift_out);
}

}  // namespace grmw

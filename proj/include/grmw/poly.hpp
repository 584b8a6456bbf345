#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <vector>

#include "grmw/gf.hpp"

namespace grmw {

// Degree of the zero polynomial.
inline constexpr int kDegreeNegInf = std::numeric_limits<int>::min();

using Exps = std::vector<uint8_t>;

// An affine substitution x |-> matrix * x + shift over F_q.
struct AffineMap {
  std::vector<std::vector<int>> matrix;  // m x m, element codes
  std::vector<int> shift;                // length m
};

// A reduced polynomial function on F_q^m: every variable exponent is at most
// q-1 (reduction modulo x_i^q - x_i), terms stored sparsely in a canonical
// lexicographically ordered map, coefficients nonzero.  Fields with q = 2 are
// outside the supported range.  Values are immutable after construction and
// safe to share across threads.
class Poly {
 public:
  Poly(FieldPtr field, int m);  // zero polynomial

  static Poly constant(FieldPtr field, int m, int c);
  static Poly variable(FieldPtr field, int m, int index);  // x_index, 0-based
  // c0 + sum coeffs[i] * x_i.
  static Poly linear(FieldPtr field, const std::vector<int>& coeffs, int c0);
  // Builds from raw (exponents, coeff) pairs; exponents may be unreduced.
  static Poly from_terms(
      FieldPtr field, int m,
      const std::vector<std::pair<std::vector<int>, int>>& raw);

  const FieldPtr& field() const noexcept { return field_; }
  int m() const noexcept { return m_; }
  const std::map<Exps, int>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  int degree() const;  // total degree; kDegreeNegInf for the zero polynomial

  int evaluate(const std::vector<int>& point) const;

  // Values at all q^m points, lexicographic point order with the LAST
  // coordinate varying fastest (point index i has x_m = i mod q, ...).
  std::vector<int> truth_table() const;  // errors: SizeBudgetExceeded
  long long weight() const;

  Poly restrict_first(int lambda) const;  // substitute x_1 = lambda; m-1 vars
  Poly compose_affine(const AffineMap& t) const;
  // Peels an affine factor: requires restrict_first(w) == 0, returns g with
  // (x_1 - w) * g == *this.
  Poly factor_hyperplane(int w) const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(int c) const;
  bool operator==(const Poly& o) const;

 private:
  void insert_term(Exps e, int c);  // adds c * x^e with exponent folding

  FieldPtr field_;
  int m_;
  std::map<Exps, int> terms_;
};

}  // namespace grmw

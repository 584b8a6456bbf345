#pragma once

#include <string>
#include <utility>

#include "grmw/poly.hpp"

namespace grmw {

// Code parameters with both degree decompositions:
//   r = a(q-1) + b with 1 <= b <= q-1, and r = t(q-1) + s with 0 <= s <= q-2.
struct CodeParams {
  int q = 0, m = 0, r = 0;
  int a = 0, b = 0;
  int t = 0, s = 0;
};

enum class Status { Exact, BoundOnly, Undefined };

std::string to_string(Status s);

// A weight value together with its exactness status and a short stable
// provenance tag (documented in the README formula table).
struct WeightAnswer {
  long long value = 0;
  Status status = Status::Undefined;
  std::string provenance;
};

// Rank/type data of a (possibly degenerate) quadratic polynomial in odd
// characteristic: r0/w0 for the quadratic part of f, R/w for the form
// homogenized with an extra variable.  Type markers: 1 for odd rank,
// 2 for hyperbolic even rank, 0 for elliptic even rank (rank 0 counts as
// hyperbolic, marker 2).
struct QuadraticClassification {
  int r0 = 0, w0 = 2;
  int R = 0, w = 2;
};

// Errors: UnsupportedField (q=2), OutOfRangeR.
CodeParams decompose_r(int q, int m, int r);

// Minimum weight (q-b) q^(m-a-1); always Exact.
WeightAnswer min_weight(const CodeParams& p);

// Second weight from the hyperplane-arrangement case list; errors
// UncoveredCase outside the listed (q,t,s) ranges.
WeightAnswer second_weight(const CodeParams& p);

// The two-variable third-weight constant c_b for R_q(b,2), 2 <= b <= q-1:
// Exact where known, otherwise the BoundOnly upper bound.  Errors OutOfRangeB.
WeightAnswer cb_value(int q, int b);

// Third weight: Exact where the known theorems apply, BoundOnly upper bound
// where only a witness bound exists, Undefined where fewer than three
// distinct nonzero weights exist or the regime is unsupported.
WeightAnswer third_weight(const CodeParams& p);

// Classifies a degree-<= 2 polynomial over a field of odd characteristic and
// returns its exact weight via the rank/type closed form.
// Errors: NotQuadratic (degree > 2), EvenCharacteristic.
std::pair<QuadraticClassification, long long> quadratic_weight(const Poly& f);

}  // namespace grmw

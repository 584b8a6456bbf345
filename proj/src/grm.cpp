#include "grmw/grm.hpp"

#include <algorithm>

namespace grmw {
namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

}  // namespace

std::string to_string(Status s) {
  switch (s) {
    case Status::Exact: return "Exact";
    case Status::BoundOnly: return "BoundOnly";
    default: return "Undefined";
  }
}

CodeParams decompose_r(int q, int m, int r) {
  if (q == 2) fail("UnsupportedField", "q = 2 is out of supported range");
  if (q < 3) fail("UnsupportedField", "q must be at least 3");
  if (m < 1) fail("OutOfRangeR", "m must be >= 1");
  if (r < 1 || r > m * (q - 1))
    fail("OutOfRangeR", "need 1 <= r <= m(q-1), got r = " + std::to_string(r));
  CodeParams p;
  p.q = q;
  p.m = m;
  p.r = r;
  p.a = (r - 1) / (q - 1);
  p.b = r - p.a * (q - 1);
  p.t = r / (q - 1);
  p.s = r % (q - 1);
  return p;
}

WeightAnswer min_weight(const CodeParams& p) {
  return {(p.q - p.b) * ipow(p.q, p.m - p.a - 1), Status::Exact, "min"};
}

WeightAnswer second_weight(const CodeParams& p) {
  const int q = p.q, m = p.m, t = p.t, s = p.s;
  if (m == 1) {
    // Univariate codes have weights q-r, q-r+1, ..., q.
    return {(long long)(q - p.r + 1), Status::Exact, "univariate"};
  }
  if (s == 0 && 1 <= t && t <= m - 1)
    return {2 * (q - 1) * ipow(q, m - t - 1), Status::Exact, "app:w2:T1"};
  if (s == 1) {
    if (q == 3 && 1 <= t && t <= m - 2)
      return {8 * ipow(q, m - t - 2), Status::Exact, "app:w2:T2"};
    if (q == 3 && t == m - 1) return {3, Status::Exact, "app:w2:T4"};
    if (q >= 4 && 0 <= t && t <= m - 1)
      return {ipow(q, m - t), Status::Exact, "app:w2:T4"};
  }
  if (q >= 4 && 2 <= s && s <= q - 2 && t <= m - 2)
    return {(long long)(q - s + 1) * (q - 1) * ipow(q, m - t - 2), Status::Exact,
            "app:w2:T3"};
  fail("UncoveredCase", "second weight not listed for q=" + std::to_string(q) +
                            ", t=" + std::to_string(t) +
                            ", s=" + std::to_string(s));
}

WeightAnswer cb_value(int q, int b) {
  if (q < 3) fail("UnsupportedField", "q must be at least 3");
  if (b < 2 || b > q - 1)
    fail("OutOfRangeB", "need 2 <= b <= q-1, got b = " + std::to_string(b));
  if (b == 2) return {(long long)q * q - q - 1, Status::Exact, "lem:rq2m"};
  if (b == 3 && q >= 4) return {(long long)q * q - 3 * q + 3, Status::Exact, "lem:c3"};
  if (b == 4 && q >= 9) return {(long long)(q - 2) * (q - 2), Status::Exact, "prop:c4"};
  if (b == 5 && q >= 13)
    return {(long long)(q - 3) * (q - 2), Status::Exact, "prop:c5"};
  if (q >= 16 && 6 <= b && 3 * b < q + 4)
    return {(long long)(q - b + 2) * (q - 2), Status::Exact, "thm:cb"};
  // Upper bounds only.
  if (q >= 5 && 4 <= b && 2 * b <= q + 4)
    return {(long long)(q - 2) * (q - b + 2), Status::BoundOnly, "thm:3hyp:mid"};
  return {(long long)(q - b + 1) * q, Status::BoundOnly, "thm:3hyp:high"};
}

WeightAnswer third_weight(const CodeParams& p) {
  const int q = p.q, m = p.m, r = p.r, a = p.a, b = p.b;

  // Codes with fewer than three distinct nonzero weights, and the high-r
  // regime the theory does not develop.
  if (r < 2 || r > m * (q - 1) - 2)
    return {0, Status::Undefined, "out-of-supported-range"};
  if (m == 1)  // weights are q-r, ..., q
    return {(long long)(q - r + 2), Status::Exact, "univariate"};

  // b = 2 quadratic-type codes.
  if (b == 2 && a == 0)
    return {(long long)(q * q - q - 1) * ipow(q, m - 2), Status::Exact,
            "lem:rq2m"};
  if (b == 2 && a >= 1 && q >= 5 && a <= m - 2)
    return {(long long)(q * q - q - 1) * ipow(q, m - a - 2), Status::Exact,
            "thm:w3+lem:rq2m"};

  // b = 3.
  if (b == 3 && m - a >= 3 && q >= 5)
    return {(long long)(q - 1) * (q - 1) * (q - 1) * ipow(q, m - a - 3),
            Status::Exact, "thm:w33(q>=5;prop q>=7)"};
  if (b == 3 && m - a == 2 && ((a == 0 && q >= 4) || (a >= 1 && q >= 5)))
    return {(long long)(q * q - 3 * q + 3), Status::Exact,
            a == 0 ? "lem:c3" : "thm:w3+lem:c3"};

  // 4 <= b <= q-2 with a known two-variable constant.
  if (4 <= b && b <= q - 2 && q >= 5 && a <= m - 2) {
    WeightAnswer cb = cb_value(q, b);
    if (cb.status == Status::Exact && cb.value < (long long)(q - b + 1) * q)
      return {cb.value * ipow(q, m - a - 2), Status::Exact,
              "thm:w3+" + cb.provenance};
  }

  // Upper bounds from the three-hyperplane-style witness constructions.
  if (b == 1) {
    if (q == 3 && 1 <= a && a <= m - 2)
      return {ipow(3, m - a), Status::BoundOnly, "thm:3hyp:b1q3"};
    if (q == 4 && 1 <= a && a <= m - 2)
      return {18 * ipow(4, m - a - 2), Status::BoundOnly, "thm:3hyp:b1q4"};
    if ((q == 3 || q == 4) && a == m - 1)
      return {(long long)2 * (q - 1), Status::BoundOnly, "thm:3hyp:b1amax"};
    if (q >= 5 && 1 <= a && a <= m - 1)
      return {2LL * (q - 2) * ipow(q, m - a - 1), Status::BoundOnly,
              "thm:3hyp:b1"};
  }
  if (b == 2) {
    if (q == 3 && 1 <= a && a <= m - 3)
      return {16 * ipow(3, m - a - 3), Status::BoundOnly, "thm:3hyp:b2q3"};
    if ((q == 3 || q == 4) && a <= m - 2)
      return {(long long)(q - 1) * ipow(q, m - a - 1), Status::BoundOnly,
              "thm:3hyp:high"};
  }
  if (b == 3 && q == 4) {
    if (a <= m - 3)
      return {27 * ipow(4, m - a - 3), Status::BoundOnly, "thm:3hyp:b3"};
    if (a == m - 2)
      return {8, Status::BoundOnly, "thm:3hyp:high"};
  }
  if (b >= 4 && a <= m - 2) {
    if (q >= 5 && 2 * b <= q + 4)
      return {(long long)(q - 2) * (q - b + 2) * ipow(q, m - a - 2),
              Status::BoundOnly, "thm:3hyp:mid"};
    if (q >= 7 && 2 * b >= q + 4)
      return {(long long)(q - b + 1) * ipow(q, m - a - 1), Status::BoundOnly,
              "thm:3hyp:high"};
  }
  return {0, Status::Undefined, "uncovered"};
}

namespace {

// Congruence-diagonalizes a symmetric matrix over F_q (odd characteristic)
// and returns the nonzero diagonal entries.
std::vector<int> diagonalize(std::vector<std::vector<int>> mat, const Field& f) {
  const int n = (int)mat.size();
  auto swap_rc = [&](int i, int j) {
    std::swap(mat[i], mat[j]);
    for (int k = 0; k < n; ++k) std::swap(mat[k][i], mat[k][j]);
  };
  // Adds factor * (row/col j) to (row/col i).
  auto add_rc = [&](int i, int j, int factor) {
    for (int k = 0; k < n; ++k)
      mat[i][k] = f.add(mat[i][k], f.mul(factor, mat[j][k]));
    for (int k = 0; k < n; ++k)
      mat[k][i] = f.add(mat[k][i], f.mul(factor, mat[k][j]));
  };

  std::vector<int> diag;
  for (int i = 0; i < n; ++i) {
    if (mat[i][i] == 0) {
      for (int k = i + 1; k < n; ++k)
        if (mat[k][k] != 0) {
          swap_rc(i, k);
          break;
        }
    }
    if (mat[i][i] == 0) {
      // All remaining diagonal entries vanish; find any off-diagonal pivot.
      int pk = -1, pl = -1;
      for (int k = i; k < n && pk < 0; ++k)
        for (int l = k + 1; l < n; ++l)
          if (mat[k][l] != 0) {
            pk = k;
            pl = l;
            break;
          }
      if (pk < 0) break;  // remaining block is zero
      if (pk != i) swap_rc(i, pk);
      add_rc(i, pl, 1);  // mat[i][i] becomes 2*mat[i][pl] != 0 in odd char
    }
    const int pivot = mat[i][i];
    diag.push_back(pivot);
    const int pinv = f.inv(pivot);
    for (int j = i + 1; j < n; ++j)
      if (mat[j][i] != 0) add_rc(j, i, f.neg(f.mul(mat[j][i], pinv)));
  }
  return diag;
}

// Type marker of a diagonalized form: 1 for odd rank; for even rank 2
// (hyperbolic) iff (-1)^(rank/2) * discriminant is a square, else 0
// (elliptic).  Rank 0 counts as hyperbolic.
int type_marker(const std::vector<int>& diag, const Field& f) {
  const int rank = (int)diag.size();
  if (rank % 2 == 1) return 1;
  int disc = 1;
  for (int d : diag) disc = f.mul(disc, d);
  if ((rank / 2) % 2 == 1) disc = f.neg(disc);
  return f.is_square(disc) ? 2 : 0;
}

}  // namespace

std::pair<QuadraticClassification, long long> quadratic_weight(const Poly& f) {
  const Field& gf = *f.field();
  const int q = gf.q(), m = f.m();
  if (gf.p() == 2)
    fail("EvenCharacteristic",
         "rank classification requires odd characteristic");
  if (f.degree() > 2) fail("NotQuadratic", "degree exceeds 2");

  const int half = gf.inv(2);  // 2^{-1}, valid in odd characteristic
  std::vector<std::vector<int>> quad(m, std::vector<int>(m, 0));
  std::vector<int> lin(m, 0);
  int cst = 0;
  for (const auto& [e, c] : f.terms()) {
    std::vector<int> vars;
    int deg = 0;
    for (int i = 0; i < m; ++i)
      if (e[i]) {
        vars.push_back(i);
        deg += e[i];
      }
    if (deg == 0) {
      cst = c;
    } else if (deg == 1) {
      lin[vars[0]] = c;
    } else if (vars.size() == 1) {  // c * x_i^2
      quad[vars[0]][vars[0]] = c;
    } else {  // c * x_i x_j
      int h = gf.mul(c, half);
      quad[vars[0]][vars[1]] = h;
      quad[vars[1]][vars[0]] = h;
    }
  }

  QuadraticClassification cls;
  auto d0 = diagonalize(quad, gf);
  cls.r0 = (int)d0.size();
  cls.w0 = type_marker(d0, gf);

  // Homogenize with one extra variable carrying the affine part.
  std::vector<std::vector<int>> hom(m + 1, std::vector<int>(m + 1, 0));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) hom[i][j] = quad[i][j];
  for (int i = 0; i < m; ++i) {
    int h = gf.mul(lin[i], half);
    hom[i][m] = h;
    hom[m][i] = h;
  }
  hom[m][m] = cst;
  auto dh = diagonalize(hom, gf);
  cls.R = (int)dh.size();
  cls.w = type_marker(dh, gf);

  long long weight = (long long)(q - 1) * ipow(q, m - 1);
  if (cls.r0 % 2 == 0 && cls.w0 != 1)
    weight += (long long)(cls.w0 - 1) * ipow(q, m - 1 - cls.r0 / 2);
  if (cls.R % 2 == 0 && cls.w != 1)
    weight -= (long long)(cls.w - 1) * ipow(q, m - cls.R / 2);
  return {cls, weight};
}

}  // namespace grmw

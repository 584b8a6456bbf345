#include "grmw/constructors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <set>

namespace grmw {
namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// x_index - shift, as a polynomial in m variables.
Poly shifted_var(const FieldPtr& f, int m, int index, int shift) {
  std::vector<int> coeffs(m, 0);
  coeffs[index] = 1;
  return Poly::linear(f, coeffs, f->neg(shift));
}

// prod_{i=0}^{count-1} (1 - x_i^(q-1)): the indicator of x_0=...=x_{count-1}=0
// scaled to have the right degree budget.
Poly zero_indicator_prefix(const FieldPtr& f, int m, int count) {
  Poly out = Poly::constant(f, m, 1);
  const int q = f->q();
  for (int i = 0; i < count; ++i) {
    std::vector<int> e(m, 0);
    e[i] = q - 1;
    Poly factor =
        Poly::constant(f, m, 1) - Poly::from_terms(f, m, {{e, 1}});
    out = out * factor;
  }
  return out;
}

// Embeds a two-variable polynomial into m variables at positions p0 < p1.
Poly embed2(const Poly& g, int m, int p0, int p1) {
  std::vector<std::pair<std::vector<int>, int>> raw;
  for (const auto& [e, c] : g.terms()) {
    std::vector<int> exps(m, 0);
    exps[p0] = e[0];
    exps[p1] = e[1];
    raw.push_back({exps, c});
  }
  return Poly::from_terms(g.field(), m, raw);
}

// The canonical direction list of lines in F_q^2: y-axis direction first so
// the line x = c comes out of a_1 x + b_1 y forms, then slopes.
std::vector<std::pair<int, int>> canonical_directions(int q) {
  std::vector<std::pair<int, int>> dirs;
  dirs.push_back({1, 0});
  dirs.push_back({0, 1});
  for (int t = 1; t < q; ++t) dirs.push_back({1, t});
  return dirs;
}

Poly line_poly(const FieldPtr& f, int a, int b, int c0) {
  return Poly::linear(f, {a, b}, c0);
}

}  // namespace

Line2 make_line(const FieldPtr& f, int a, int b, int c) {
  if (a == 0 && b == 0) fail("DegenerateLine", "(a, b) must be nonzero");
  int lead = (a != 0) ? a : b;
  int inv = f->inv(lead);
  return Line2{f->mul(a, inv), f->mul(b, inv), f->mul(c, inv)};
}

std::string line_config_name(LineConfig tag, int b) {
  static const char* names = "ABCDEFG";
  return std::string(1, names[(int)tag]) + "_" + std::to_string(b);
}

LineConfig classify_line_configuration(const FieldPtr& f,
                                       std::vector<Line2> lines) {
  const int b = (int)lines.size();
  if (b < 3) fail("TooFewLines", "need at least 3 lines");
  for (auto& l : lines) l = make_line(f, l.a, l.b, l.c);
  for (int i = 0; i < b; ++i)
    for (int j = i + 1; j < b; ++j)
      if (lines[i] == lines[j]) fail("DuplicateLine", "lines must be distinct");

  auto dir_of = [](const Line2& l) { return std::pair<int, int>{l.a, l.b}; };
  auto parallel = [&](const Line2& x, const Line2& y) {
    return dir_of(x) == dir_of(y);
  };
  // Intersection point of two non-parallel lines.
  auto intersect = [&](const Line2& x, const Line2& y) {
    int det = f->sub(f->mul(x.a, y.b), f->mul(y.a, x.b));
    int inv = f->inv(det);
    int px = f->mul(inv, f->sub(f->mul(x.c, y.b), f->mul(y.c, x.b)));
    int py = f->mul(inv, f->sub(f->mul(x.a, y.c), f->mul(y.a, x.c)));
    return std::pair<int, int>{px, py};
  };
  auto contains = [&](const Line2& l, std::pair<int, int> p) {
    return f->add(f->mul(l.a, p.first), f->mul(l.b, p.second)) == l.c;
  };

  std::map<std::pair<int, int>, std::vector<int>> classes;
  for (int i = 0; i < b; ++i) classes[dir_of(lines[i])].push_back(i);
  std::size_t max_class = 0;
  for (const auto& [d, idx] : classes) max_class = std::max(max_class, idx.size());

  if ((int)max_class == b) return LineConfig::A;
  if ((int)max_class == b - 1) return LineConfig::B;

  if ((int)classes.size() == b) {  // pairwise non-parallel: concurrency check
    auto p = intersect(lines[0], lines[1]);
    bool all = true;
    for (int i = 2; i < b; ++i)
      if (!contains(lines[i], p)) {
        all = false;
        break;
      }
    if (all) return LineConfig::C;
  }

  // D / E: some direction class holds exactly b-2 lines.
  for (const auto& [d, idx] : classes) {
    if ((int)idx.size() != b - 2) continue;
    std::vector<int> rest;
    for (int i = 0; i < b; ++i)
      if (std::find(idx.begin(), idx.end(), i) == idx.end()) rest.push_back(i);
    if (parallel(lines[rest[0]], lines[rest[1]])) return LineConfig::D;
    auto p = intersect(lines[rest[0]], lines[rest[1]]);
    for (int i : idx)
      if (contains(lines[i], p)) return LineConfig::E;
  }

  // F: b-1 concurrent, the last parallel to one of them.
  for (int out = 0; out < b; ++out) {
    std::vector<int> rest;
    for (int i = 0; i < b; ++i)
      if (i != out) rest.push_back(i);
    bool pairwise = true;
    for (std::size_t i = 0; i < rest.size() && pairwise; ++i)
      for (std::size_t j = i + 1; j < rest.size(); ++j)
        if (parallel(lines[rest[i]], lines[rest[j]])) {
          pairwise = false;
          break;
        }
    if (!pairwise) continue;
    auto p = intersect(lines[rest[0]], lines[rest[1]]);
    bool conc = true;
    for (std::size_t i = 2; i < rest.size(); ++i)
      if (!contains(lines[rest[i]], p)) {
        conc = false;
        break;
      }
    if (!conc) continue;
    for (int i : rest)
      if (parallel(lines[out], lines[i])) return LineConfig::F;
  }
  return LineConfig::G;
}

Poly build_arrangement_poly(const FieldPtr& f, int m,
                            const std::vector<ArrangementBlock>& blocks) {
  const int q = f->q();
  // Rank check over F_q by Gaussian elimination on the form matrix.
  {
    std::vector<std::vector<int>> rows;
    for (const auto& blk : blocks) {
      if ((int)blk.form.size() != m)
        fail("DegreeMismatch", "form has wrong arity");
      rows.push_back(blk.form);
    }
    int rank = 0;
    for (int col = 0; col < m && rank < (int)rows.size(); ++col) {
      int piv = -1;
      for (int r = rank; r < (int)rows.size(); ++r)
        if (rows[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      std::swap(rows[rank], rows[piv]);
      int inv = f->inv(rows[rank][col]);
      for (int j = 0; j < m; ++j) rows[rank][j] = f->mul(rows[rank][j], inv);
      for (int r = 0; r < (int)rows.size(); ++r)
        if (r != rank && rows[r][col] != 0) {
          int factor = rows[r][col];
          for (int j = 0; j < m; ++j)
            rows[r][j] = f->sub(rows[r][j], f->mul(factor, rows[rank][j]));
        }
      ++rank;
    }
    if (rank != (int)blocks.size())
      fail("DependentForms", "block forms are linearly dependent");
  }

  Poly out = Poly::constant(f, m, 1);
  for (const auto& blk : blocks) {
    if ((int)blk.shifts.size() >= q)
      fail("FullBlock",
           "a block over all of F_q reduces to the zero polynomial");
    std::set<int> seen;
    for (int u : blk.shifts) {
      if (!seen.insert(u).second)
        fail("RepeatedShift", "shift " + std::to_string(u) + " repeated");
      out = out * Poly::linear(f, blk.form, f->neg(u));
    }
  }
  return out;
}

std::vector<std::string> theorem3_branches(int q, int m, int a, int b) {
  std::vector<std::string> out;
  if (b == 1) {
    if (q == 3 && 1 <= a && a <= m - 2) out.push_back("b1q3");
    if (q == 4 && 1 <= a && a <= m - 2) out.push_back("b1q4");
    if ((q == 3 || q == 4) && a == m - 1 && m >= 2) out.push_back("b1amax");
    if (q >= 5 && 1 <= a && a <= m - 1) out.push_back("b1main");
  }
  if (b == 2 && q == 3 && m >= 4 && 1 <= a && a <= m - 3)
    out.push_back("b2q3");
  if (b == 3 && q >= 4 && m >= 3 && 0 <= a && a <= m - 3)
    out.push_back("b3cube");
  if (q >= 5 && 4 <= b && 2 * b <= q + 4 && 0 <= a && a <= m - 2)
    out.push_back("mid");
  bool high = (q >= 7 && a <= m - 2 && 2 * b >= q + 4 && b <= q - 1) ||
              (q >= 4 && a <= m - 2 && b == 2) ||
              (q >= 4 && a == m - 2 && b == 3) ||
              (q == 3 && (a == 0 || a == m - 2) && b == 2);
  if (high && a >= 0) out.push_back("high");
  return out;
}

Witness build_theorem3_witness(int q, int m, int a, int b,
                               const std::string& branch) {
  auto valid = theorem3_branches(q, m, a, b);
  if (std::find(valid.begin(), valid.end(), branch) == valid.end())
    fail("BranchRangeViolation",
         "branch " + branch + " not applicable at q=" + std::to_string(q) +
             ", m=" + std::to_string(m) + ", a=" + std::to_string(a) +
             ", b=" + std::to_string(b));
  auto f = field_for_order(q);

  Poly w = Poly::constant(f, m, 1);
  long long claimed = 0;
  if (branch == "b1q3") {
    w = zero_indicator_prefix(f, m, a);
    claimed = ipow(3, m - a);
  } else if (branch == "b1q4") {
    w = zero_indicator_prefix(f, m, a - 1);
    w = w * shifted_var(f, m, a - 1, 0) * shifted_var(f, m, a - 1, 1);
    w = w * shifted_var(f, m, a, 0) * shifted_var(f, m, a + 1, 0);
    claimed = 18 * ipow(4, m - a - 2);
  } else if (branch == "b1amax") {
    w = zero_indicator_prefix(f, m, m - 2);
    for (int j = 0; j < q - 2; ++j) w = w * shifted_var(f, m, m - 2, j);
    w = w * shifted_var(f, m, m - 1, 0);
    claimed = 2 * (q - 1);
  } else if (branch == "b1main") {
    w = zero_indicator_prefix(f, m, a - 1);
    for (int j = 0; j < q - 2; ++j) w = w * shifted_var(f, m, a - 1, j);
    w = w * shifted_var(f, m, a, 0) * shifted_var(f, m, a, 1);
    claimed = 2LL * (q - 2) * ipow(q, m - a - 1);
  } else if (branch == "b2q3") {
    w = zero_indicator_prefix(f, m, a - 1);
    for (int j = 0; j < 4; ++j) w = w * shifted_var(f, m, a - 1 + j, 0);
    claimed = 16 * ipow(3, m - a - 3);
  } else if (branch == "b3cube") {
    w = zero_indicator_prefix(f, m, a);
    for (int j = 0; j < 3; ++j) w = w * shifted_var(f, m, a + j, 0);
    claimed = (long long)(q - 1) * (q - 1) * (q - 1) * ipow(q, m - a - 3);
  } else if (branch == "mid") {
    w = zero_indicator_prefix(f, m, a);
    for (int j = 0; j < b - 2; ++j) w = w * shifted_var(f, m, a, j);
    w = w * shifted_var(f, m, a + 1, 0) * shifted_var(f, m, a + 1, 1);
    claimed = (long long)(q - 2) * (q - b + 2) * ipow(q, m - a - 2);
  } else {  // high
    w = zero_indicator_prefix(f, m, a);
    for (int j = 0; j < b - 1; ++j) w = w * shifted_var(f, m, a, j);
    claimed = (long long)(q - b + 1) * ipow(q, m - a - 1);
  }
  return {w, claimed, branch};
}

std::string family_name(Family2 fam) {
  switch (fam) {
    case Family2::Triangle: return "triangle";
    case Family2::ParallelPairs: return "parallel-pairs";
    case Family2::Pencil: return "pencil";
    case Family2::PencilPlus: return "pencil-plus";
    default: return "quadrilateral";
  }
}

std::vector<Family2> third_weight_families(int q, int b) {
  std::vector<Family2> out;
  bool exact_cb = false;
  if (b >= 2 && b <= q - 1) exact_cb = cb_value(q, b).status == Status::Exact;
  if (b == 3 && q >= 4) out.push_back(Family2::Triangle);
  if (b >= 4 && exact_cb) {
    out.push_back(Family2::ParallelPairs);
    out.push_back(Family2::Pencil);
    if (b >= 5) out.push_back(Family2::PencilPlus);
  }
  if (b == 5 && q >= 13) out.push_back(Family2::Quadrilateral);
  return out;
}

Poly build_third_weight_2var(const FieldPtr& f, int b, Family2 family,
                             const std::vector<int>* params) {
  const int q = f->q();
  auto families = third_weight_families(q, b);
  if (std::find(families.begin(), families.end(), family) == families.end())
    fail("ParamSideCondition", "family " + family_name(family) +
                                   " has no exact c_b at q=" +
                                   std::to_string(q) +
                                   ", b=" + std::to_string(b));
  auto x = Poly::variable(f, 2, 0);
  auto y = Poly::variable(f, 2, 1);
  auto distinct = [](const std::vector<int>& v) {
    std::set<int> s(v.begin(), v.end());
    return s.size() == v.size();
  };

  Poly g = Poly::constant(f, 2, 1);
  switch (family) {
    case Family2::Triangle: {
      int c = params ? (*params)[0] : 1;
      if (c == 0)
        fail("ParamSideCondition", "third line must avoid the intersection");
      g = x * y * line_poly(f, 1, 1, c);
      break;
    }
    case Family2::ParallelPairs: {
      std::vector<int> sh(b - 2);
      std::iota(sh.begin(), sh.end(), 0);
      int c = 0, d = 1;
      if (params) {
        sh.assign(params->begin(), params->begin() + (b - 2));
        c = (*params)[b - 2];
        d = (*params)[b - 1];
      }
      if (!distinct(sh) || c == d)
        fail("ParamSideCondition", "shifts must be distinct");
      for (int u : sh) g = g * shifted_var(f, 2, 0, u);
      g = g * shifted_var(f, 2, 1, c) * shifted_var(f, 2, 1, d);
      break;
    }
    case Family2::Pencil: {
      int e = params ? (*params)[0] : 1;
      if (e == 0) fail("ParamSideCondition", "parallel shift must be nonzero");
      auto dirs = canonical_directions(q);
      for (int i = 0; i < b - 1; ++i)
        g = g * line_poly(f, dirs[i].first, dirs[i].second, 0);
      g = g * line_poly(f, dirs[0].first, dirs[0].second, e);
      break;
    }
    case Family2::PencilPlus: {
      std::vector<int> es(b - 3);
      std::iota(es.begin(), es.end(), 1);
      if (params) es.assign(params->begin(), params->begin() + (b - 3));
      if (!distinct(es) ||
          std::find(es.begin(), es.end(), 0) != es.end())
        fail("ParamSideCondition", "parallel shifts must be distinct nonzero");
      g = x * y * line_poly(f, 1, 1, 0);
      for (int e : es) g = g * line_poly(f, 1, 0, e);
      break;
    }
    case Family2::Quadrilateral: {
      int A = 0, B = 1, C = 0, D = 1;
      if (params) {
        A = (*params)[0];
        B = (*params)[1];
        C = (*params)[2];
        D = (*params)[3];
      }
      if (A == B || C == D)
        fail("ParamSideCondition", "quadrilateral sides must be distinct");
      g = shifted_var(f, 2, 0, A) * shifted_var(f, 2, 0, B) *
          shifted_var(f, 2, 1, C) * shifted_var(f, 2, 1, D);
      // Diagonal through (A, C) and (B, D).
      int da = f->sub(D, C), db = f->sub(A, B);
      int dc = f->sub(f->mul(B, C), f->mul(A, D));
      g = g * line_poly(f, da, db, dc);
      break;
    }
  }

  long long cb = cb_value(q, b).value;
  if (g.weight() != cb)
    fail("ParamSideCondition",
         "degenerate parameters: measured weight " +
             std::to_string(g.weight()) + " != c_b = " + std::to_string(cb));
  return g;
}

Poly build_third_weight(int q, int m, int a, int b) {
  auto params = decompose_r(q, m, a * (q - 1) + b);
  auto w3 = third_weight(params);
  if (w3.status != Status::Exact)
    fail("NotExactCase", "third weight is not Exact at these parameters");
  auto f = field_for_order(q);

  if (m == 1) {
    Poly g = Poly::constant(f, 1, 1);
    for (int j = 0; j < params.r - 2; ++j)
      g = g * Poly::linear(f, {1}, f->neg(j));
    return g;
  }

  if (b == 3 && m - a >= 3) {
    Poly w = zero_indicator_prefix(f, m, a);
    for (int j = 0; j < 3; ++j)
      w = w * Poly::variable(f, m, a + j);
    return w;
  }

  Poly g(f, 2);
  if (b == 2) {
    // A two-variable quadratic with exactly q+1 zeros: an anisotropic binary
    // form set equal to 1.  Scan canonically for an irreducible t^2+beta*t+
    // delta; works in every characteristic.
    bool found = false;
    for (int beta = 0; beta < q && !found; ++beta) {
      for (int delta = 1; delta < q && !found; ++delta) {
        bool rootfree = true;
        for (int t = 0; t < q; ++t) {
          int v = f->add(f->add(f->mul(t, t), f->mul(beta, t)), delta);
          if (v == 0) {
            rootfree = false;
            break;
          }
        }
        if (rootfree) {
          g = Poly::from_terms(f, 2,
                               {{{2, 0}, 1},
                                {{1, 1}, beta},
                                {{0, 2}, delta},
                                {{0, 0}, f->neg(1)}});
          found = true;
        }
      }
    }
    if (!found || g.weight() != (long long)q * q - q - 1)
      fail("NotExactCase", "internal: no anisotropic quadratic found");
  } else if (b == 3) {  // m - a == 2
    g = build_third_weight_2var(f, 3, Family2::Triangle);
  } else {  // 4 <= b <= q-2 with exact c_b
    g = build_third_weight_2var(f, b, Family2::ParallelPairs);
  }
  return zero_indicator_prefix(f, m, a) * embed2(g, m, a, a + 1);
}

}  // namespace grmw

#include <chrono>
#include <random>
#include <sstream>

#include "grmw/arrangements.hpp"
#include "grmw/constructors.hpp"
#include "grmw/spectrum.hpp"

namespace grmw {
namespace {

void claim_ok(Report& rep, const std::string& id, const std::string& prov,
              const std::string& expected, const std::string& measured,
              bool pass) {
  rep.claims.push_back({id, prov, expected, measured, pass});
}

void claim_eq(Report& rep, const std::string& id, const std::string& prov,
              const std::string& expected, const std::string& measured) {
  claim_ok(rep, id, prov, expected, measured, expected == measured);
}

std::string join(const std::vector<long long>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  return os.str();
}

// First three nonzero weights of the code vs the closed-form engine.
void check_spectrum(Report& rep, const std::string& id, int q, int m, int r,
                    int shards) {
  SpectrumOptions opts;
  opts.shards = shards;
  auto sr = exhaustive_spectrum(q, m, r, opts);
  std::vector<long long> low;
  for (const auto& [w, c] : sr.distinct_weights)
    if (w > 0 && (int)low.size() < 3) low.push_back(w);
  auto p = decompose_r(q, m, r);
  auto w3 = third_weight(p);
  std::vector<long long> expect = {min_weight(p).value, second_weight(p).value,
                                   w3.value};
  claim_eq(rep, id, "min+" + second_weight(p).provenance + "+" + w3.provenance,
           join(expect), join(low));
}

std::vector<int> distinct_sizes(const UnionSearchResult& r) {
  std::vector<int> out;
  for (const auto& [s, c] : r.top_sizes) out.push_back(s);
  return out;
}

void formulas_vs_oracles(Report& rep, bool extended, int threads) {
  check_spectrum(rep, "c1:R3(2,2)", 3, 2, 2, 1);
  check_spectrum(rep, "c2:R3(2,3)", 3, 3, 2, 1);
  check_spectrum(rep, "c3:R4(3,2)", 4, 2, 3, 1);
  check_spectrum(rep, "c4:R5(3,2)", 5, 2, 3, std::max(threads, 4));

  {  // small line-oracle sanity points
    auto r = line_union_oracle(4, 2);
    auto sizes = distinct_sizes(r);
    claim_eq(rep, "aux:lines-q4-b2", "min", "8,7",
             join({sizes.size() > 0 ? sizes[0] : -1,
                   sizes.size() > 1 ? sizes[1] : -1}));
  }
  {
    auto r = line_union_oracle(7, 3);
    auto s = distinct_sizes(r);
    claim_eq(rep, "aux:lines-q7-b3", "lem:c3", "21,19,18",
             join({s[0], s[1], s[2]}));
  }
  {  // c_4 = (q-2)^2 via the full quadruple search at q = 9
    auto r = line_union_oracle(9, 4);
    auto s = distinct_sizes(r);
    long long third = s.size() > 2 ? s[2] : -1;
    claim_eq(rep, "c7:lines-q9-b4", "prop:c4", "32/49",
             std::to_string(third) + "/" + std::to_string(81 - third));
  }
  {  // (q-1)^3 via the plane oracle at q = 7
    auto r = plane_union_oracle(7);
    auto s = distinct_sizes(r);
    long long third = s.size() > 2 ? s[2] : -1;
    std::string kind = "?";
    if (third >= 0) {
      const auto& wit = r.witnesses.at((int)third);
      std::vector<std::vector<int>> pl;
      for (int i : wit) pl.push_back(r.objects[i]);
      kind = to_string(classify_three_planes(field_for_order(7), pl));
    }
    claim_eq(rep, "c8:planes-q7", "lem:r33", "127/216/triple",
             std::to_string(third) + "/" + std::to_string(343 - third) + "/" +
                 kind);
  }
  {
    auto r = plane_union_oracle(5);
    auto s = distinct_sizes(r);
    claim_eq(rep, "aux:planes-q5", "lem:r33", "75,65,61,60",
             join({s[0], s[1], s[2], s[3]}));
  }
  if (extended) {  // c_5 = (q-3)(q-2) via the pinned quintuple search at q=13
    UnionSearchOptions opts;
    opts.fix_first_line = true;
    auto r = line_union_oracle(13, 5, opts);
    auto s = distinct_sizes(r);
    long long third = s.size() > 2 ? s[2] : -1;
    claim_eq(rep, "c10:lines-q13-b5", "prop:c5", "59/110",
             std::to_string(third) + "/" + std::to_string(169 - third));
  }
}

void arrangements_top3(Report& rep) {
  const int qs[] = {3, 4, 5, 7, 8, 9, 11, 13, 16, 17};
  long long covered = 0, mismatches = 0;
  std::string first_fail;
  for (int q : qs)
    for (int m = 2; m <= 6; ++m)
      for (int d = 1; d <= m * (q - 1) - 1; ++d) {
        auto r = verify_top3(q, m, d);
        if (!r.covered) continue;
        ++covered;
        if (!r.pass) {
          ++mismatches;
          if (first_fail.empty()) {
            std::ostringstream os;
            os << "q=" << q << ",m=" << m << ",d=" << d << ": " << r.detail;
            first_fail = os.str();
          }
        }
      }
  claim_ok(rep, "c5:top3-grid", "app:props", "0 mismatches",
           std::to_string(mismatches) + " mismatches over " +
               std::to_string(covered) + " covered cells" +
               (first_fail.empty() ? "" : "; first: " + first_fail),
           mismatches == 0 && covered > 0);
}

void constructors_suite(Report& rep) {
  const int qs[] = {3, 4, 5, 7, 9};
  {  // every upper-bound witness branch on the grid
    long long built = 0, mismatches = 0;
    std::string first_fail;
    for (int q : qs) {
      for (int m = 2; m <= 5; ++m) {
        double sz = 1;
        for (int i = 0; i < m; ++i) sz *= q;
        if (sz > 2e6) continue;
        for (int a = 0; a <= m - 1; ++a)
          for (int b = 1; b <= q - 1; ++b)
            for (const auto& branch : theorem3_branches(q, m, a, b)) {
              auto w = build_theorem3_witness(q, m, a, b, branch);
              ++built;
              long long measured = w.poly.weight();
              if (measured != w.claimed_weight) {
                ++mismatches;
                if (first_fail.empty()) {
                  std::ostringstream os;
                  os << "q=" << q << ",m=" << m << ",a=" << a << ",b=" << b
                     << "," << branch << ": " << measured
                     << " != " << w.claimed_weight;
                  first_fail = os.str();
                }
              }
            }
      }
    }
    claim_ok(rep, "c6:thm3-witnesses", "thm:3hyp", "0 mismatches",
             std::to_string(mismatches) + " mismatches over " +
                 std::to_string(built) + " witnesses" +
                 (first_fail.empty() ? "" : "; first: " + first_fail),
             mismatches == 0 && built > 0);
  }
  {  // two-variable families achieving c_b
    long long built = 0, mismatches = 0;
    std::string first_fail;
    for (int q : qs) {
      auto f = field_for_order(q);
      for (int b = 2; b <= q - 1; ++b)
        for (auto fam : third_weight_families(q, b)) {
          ++built;
          try {
            (void)build_third_weight_2var(f, b, fam);  // verifies its weight
          } catch (const Error& e) {
            ++mismatches;
            if (first_fail.empty())
              first_fail = "q=" + std::to_string(q) +
                           ",b=" + std::to_string(b) + "," + family_name(fam) +
                           ": " + e.what();
          }
        }
    }
    claim_ok(rep, "c6:2var-families", "thm:cb+props", "0 mismatches",
             std::to_string(mismatches) + " mismatches over " +
                 std::to_string(built) + " families" +
                 (first_fail.empty() ? "" : "; first: " + first_fail),
             mismatches == 0 && built > 0);
  }
  {  // lifted third-weight codewords wherever W_3 is Exact
    long long built = 0, mismatches = 0;
    std::string first_fail;
    for (int q : qs)
      for (int m = 2; m <= 5; ++m) {
        double sz = 1;
        for (int i = 0; i < m; ++i) sz *= q;
        if (sz > 2e6) continue;
        for (int a = 0; a <= m - 1; ++a)
          for (int b = 1; b <= q - 1; ++b) {
            int r = a * (q - 1) + b;
            if (r < 1 || r > m * (q - 1)) continue;
            auto p = decompose_r(q, m, r);
            auto w3 = third_weight(p);
            if (w3.status != Status::Exact) continue;
            auto poly = build_third_weight(q, m, a, b);
            ++built;
            long long measured = poly.weight();
            if (measured != w3.value ||
                poly.degree() > r) {
              ++mismatches;
              if (first_fail.empty()) {
                std::ostringstream os;
                os << "q=" << q << ",m=" << m << ",a=" << a << ",b=" << b
                   << ": " << measured << " != " << w3.value;
                first_fail = os.str();
              }
            }
          }
      }
    claim_ok(rep, "c6:third-weight-codewords", "thm:w3+thm:w33+lem:rq2m",
             "0 mismatches",
             std::to_string(mismatches) + " mismatches over " +
                 std::to_string(built) + " codewords" +
                 (first_fail.empty() ? "" : "; first: " + first_fail),
             mismatches == 0 && built > 0);
  }
}

// Checks quadratic_weight against direct counting for one polynomial.
bool quad_matches(const Poly& f) {
  return quadratic_weight(f).second == f.weight();
}

void quadratic_suite(Report& rep) {
  {  // exhaustive at q = 3, m = 2 and m = 3
    long long tested = 0, mismatches = 0;
    auto f3 = field_for_order(3);
    for (int m = 2; m <= 3; ++m) {
      auto basis = monomial_basis(3, m, 2);
      const int M = (int)basis.size();
      std::vector<int> coeffs(M, 0);
      for (;;) {
        std::vector<std::pair<std::vector<int>, int>> raw;
        for (int j = 0; j < M; ++j)
          if (coeffs[j]) raw.push_back({basis[j], coeffs[j]});
        ++tested;
        if (!quad_matches(Poly::from_terms(f3, m, raw))) ++mismatches;
        int i = 0;
        while (i < M && coeffs[i] == 2) coeffs[i++] = 0;
        if (i == M) break;
        ++coeffs[i];
      }
    }
    claim_ok(rep, "c9:exhaustive-q3", "lem:quad", "0 mismatches",
             std::to_string(mismatches) + " mismatches over " +
                 std::to_string(tested) + " polynomials",
             mismatches == 0 && tested == 729 + 59049);
  }
  {  // seeded random quadratics at (5, 2), (5, 3), (7, 2)
    long long tested = 0, mismatches = 0;
    std::mt19937 rng(12345);
    const int cases[][2] = {{5, 2}, {5, 3}, {7, 2}};
    for (auto [q, m] : cases) {
      auto f = field_for_order(q);
      auto basis = monomial_basis(q, m, 2);
      std::uniform_int_distribution<int> dist(0, q - 1);
      for (int it = 0; it < 10000; ++it) {
        std::vector<std::pair<std::vector<int>, int>> raw;
        for (const auto& e : basis) {
          int c = dist(rng);
          if (c) raw.push_back({e, c});
        }
        ++tested;
        if (!quad_matches(Poly::from_terms(f, m, raw))) ++mismatches;
      }
    }
    claim_ok(rep, "c9:random", "lem:quad", "0 mismatches",
             std::to_string(mismatches) + " mismatches over " +
                 std::to_string(tested) + " polynomials",
             mismatches == 0 && tested == 30000);
  }
}

void properties_suite(Report& rep) {
  {  // field axioms for every bundled q up to 32
    const int qs[] = {3,  4,  5,  7,  8,  9,  11, 13, 16,
                      17, 19, 23, 25, 27, 29, 31, 32};
    long long violations = 0;
    for (int q : qs) {
      auto fp = field_for_order(q);
      const Field& f = *fp;
      for (int a = 0; a < q; ++a) {
        if (f.add(a, 0) != a || f.mul(a, 1) != a) ++violations;
        if (f.add(a, f.neg(a)) != 0) ++violations;
        if (a != 0 && f.mul(a, f.inv(a)) != 1) ++violations;
        if (f.pow(a, q) != a) ++violations;  // x^q = x
        for (int b = 0; b < q; ++b) {
          if (f.add(a, b) != f.add(b, a) || f.mul(a, b) != f.mul(b, a))
            ++violations;
          for (int c = 0; c < q; ++c) {
            if (f.add(f.add(a, b), c) != f.add(a, f.add(b, c))) ++violations;
            if (f.mul(f.mul(a, b), c) != f.mul(a, f.mul(b, c))) ++violations;
            if (f.mul(a, f.add(b, c)) != f.add(f.mul(a, b), f.mul(a, c)))
              ++violations;
          }
        }
      }
    }
    claim_ok(rep, "c11:field-axioms", "gf", "0 violations",
             std::to_string(violations) + " violations", violations == 0);
  }
  {  // reduction preserves the function; reduction is idempotent
    std::mt19937 rng(777);
    long long bad = 0;
    for (int iter = 0; iter < 200; ++iter) {
      int q = std::vector<int>{3, 4, 5}[rng() % 3];
      int m = 2 + (int)(rng() % 2);
      auto f = field_for_order(q);
      std::vector<std::pair<std::vector<int>, int>> raw;
      int nterms = 1 + (int)(rng() % 6);
      for (int tix = 0; tix < nterms; ++tix) {
        std::vector<int> e(m);
        for (int i = 0; i < m; ++i) e[i] = (int)(rng() % (3 * q));
        raw.push_back({e, 1 + (int)(rng() % (q - 1))});
      }
      Poly p = Poly::from_terms(f, m, raw);
      // Rebuilding from its own reduced terms must be the identity.
      std::vector<std::pair<std::vector<int>, int>> again;
      for (const auto& [e, c] : p.terms())
        again.push_back({std::vector<int>(e.begin(), e.end()), c});
      if (!(Poly::from_terms(f, m, again) == p)) ++bad;
      // Naive evaluation of the raw terms at every point must agree.
      std::vector<int> pt(m, 0);
      for (;;) {
        int direct = 0;
        for (const auto& [e, c] : raw) {
          int v = c;
          for (int i = 0; i < m; ++i)
            for (int k = 0; k < e[i]; ++k) v = f->mul(v, pt[i]);
          direct = f->add(direct, v);
        }
        if (direct != p.evaluate(pt)) {
          ++bad;
          break;
        }
        int i = m - 1;
        while (i >= 0 && pt[i] == q - 1) pt[i--] = 0;
        if (i < 0) break;
        ++pt[i];
      }
    }
    claim_ok(rep, "c11:reduce-idempotent", "polyring", "0 failures",
             std::to_string(bad) + " failures", bad == 0);
  }
  {  // affine maps preserve weight and degree
    std::mt19937 rng(4242);
    long long bad = 0;
    for (int iter = 0; iter < 60; ++iter) {
      int q = std::vector<int>{3, 4, 5}[rng() % 3];
      int m = 2 + (int)(rng() % 2);
      auto f = field_for_order(q);
      std::vector<std::pair<std::vector<int>, int>> raw;
      for (int tix = 0; tix < 4; ++tix) {
        std::vector<int> e(m);
        for (int i = 0; i < m; ++i) e[i] = (int)(rng() % q);
        int c = (int)(rng() % q);
        if (c) raw.push_back({e, c});
      }
      Poly p = Poly::from_terms(f, m, raw);
      AffineMap t;
      t.matrix.assign(m, std::vector<int>(m, 0));
      t.shift.assign(m, 0);
      for (;;) {  // rejection-sample an invertible matrix
        for (auto& row : t.matrix)
          for (auto& v : row) v = (int)(rng() % q);
        try {
          for (auto& v : t.shift) v = (int)(rng() % q);
          Poly img = p.compose_affine(t);
          if (img.weight() != p.weight() || img.degree() != p.degree()) ++bad;
          break;
        } catch (const Error& e) {
          if (e.code() != "SingularMatrix") throw;
        }
      }
    }
    claim_ok(rep, "c11:affine-invariance", "polyring", "0 failures",
             std::to_string(bad) + " failures", bad == 0);
  }
  {  // shard-count independence
    SpectrumOptions o1, o4, o16;
    o1.shards = 1;
    o4.shards = 4;
    o16.shards = 16;
    auto a = exhaustive_spectrum(3, 2, 2, o1);
    auto b = exhaustive_spectrum(3, 2, 2, o4);
    auto c = exhaustive_spectrum(3, 2, 2, o16);
    bool same = a.distinct_weights == b.distinct_weights &&
                b.distinct_weights == c.distinct_weights &&
                a.representatives == b.representatives &&
                b.representatives == c.representatives;
    claim_ok(rep, "c11:shard-independence", "spectrum", "identical",
             same ? "identical" : "divergent", same);
  }
  {  // scalar orbits: nonzero-weight counts divisible by q-1
    long long bad = 0;
    const int cases[][3] = {{3, 2, 2}, {3, 3, 2}, {4, 2, 3}};
    for (auto [q, m, r] : cases) {
      auto sr = exhaustive_spectrum(q, m, r);
      for (const auto& [w, count] : sr.distinct_weights)
        if (w > 0 && count % (q - 1) != 0) ++bad;
    }
    claim_ok(rep, "c11:scalar-divisibility", "spectrum", "0 violations",
             std::to_string(bad) + " violations", bad == 0);
  }
  {  // second weight equals q^m minus the second configuration's points
    const int qs[] = {3, 4, 5, 7, 8, 9, 11, 13, 16, 17};
    long long bad = 0, checked = 0;
    for (int q : qs)
      for (int m = 2; m <= 6; ++m)
        for (int r = 2; r <= m * (q - 1) - 1; ++r) {
          long long qm = 1;
          for (int i = 0; i < m; ++i) qm *= q;
          bool have_w = true, have_c = true;
          long long w2 = 0, nc = 0;
          try {
            w2 = second_weight(decompose_r(q, m, r)).value;
          } catch (const Error& e) {
            if (e.code() != "UncoveredCase") throw;
            have_w = false;
          }
          try {
            nc = second_config(q, m, r).n;
          } catch (const Error& e) {
            if (e.code() != "UncoveredCase") throw;
            have_c = false;
          }
          if (have_w != have_c || (have_w && w2 != qm - nc)) ++bad;
          if (have_w) ++checked;
        }
    claim_ok(rep, "c11:cross-module-w2", "app:w2", "0 mismatches",
             std::to_string(bad) + " mismatches over " +
                 std::to_string(checked) + " cells",
             bad == 0 && checked > 0);
  }
}

}  // namespace

Report run_verification_suite(const std::string& suite, bool extended,
                              int threads) {
  Report rep;
  rep.suite = suite;
  auto start = std::chrono::steady_clock::now();
  bool known = false;
  if (suite == "formulas-vs-oracles" || suite == "all") {
    formulas_vs_oracles(rep, extended, threads);
    known = true;
  }
  if (suite == "arrangements-top3" || suite == "all") {
    arrangements_top3(rep);
    known = true;
  }
  if (suite == "constructors" || suite == "all") {
    constructors_suite(rep);
    known = true;
  }
  if (suite == "quadratic" || suite == "all") {
    quadratic_suite(rep);
    known = true;
  }
  if (suite == "all") properties_suite(rep);
  if (!known) fail("UnknownSuite", "suite must be one of formulas-vs-oracles, "
                                   "arrangements-top3, constructors, "
                                   "quadratic, all");
  rep.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return rep;
}

}  // namespace grmw

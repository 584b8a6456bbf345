#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "grmw/json_io.hpp"
#include "grmw/poly.hpp"

using namespace grmw;

namespace {

Poly random_poly(const FieldPtr& f, int m, int max_deg, std::mt19937& rng) {
  std::vector<std::pair<std::vector<int>, int>> raw;
  std::uniform_int_distribution<int> coeff(0, f->q() - 1);
  std::uniform_int_distribution<int> expo(0, max_deg);
  int terms = 1 + (int)(rng() % 6);
  for (int i = 0; i < terms; ++i) {
    std::vector<int> e(m);
    for (int& v : e) v = expo(rng);
    raw.push_back({e, coeff(rng)});
  }
  return Poly::from_terms(f, m, raw);
}

}  // namespace

TEST_CASE("reduction folds exponents to at most q-1") {
  auto f = field_for_order(3);
  // x^3 reduces to x; x^4 to x^2.
  Poly x3 = Poly::from_terms(f, 1, {{{3}, 1}});
  CHECK(x3 == Poly::variable(f, 1, 0));
  Poly x4 = Poly::from_terms(f, 1, {{{4}, 1}});
  CHECK(x4 == Poly::from_terms(f, 1, {{{2}, 1}}));
  CHECK(x4.degree() == 2);
  // x^2 * x^2 = x^4 -> x^2 via multiplication as well.
  CHECK(x4 * x4 == x4);
}

TEST_CASE("reduction preserves the function (random)") {
  std::mt19937 rng(2024);
  for (int q : {3, 4, 5}) {
    auto f = field_for_order(q);
    for (int trial = 0; trial < 30; ++trial) {
      Poly p = random_poly(f, 2, 3 * (q - 1), rng);
      // Reconstruct from its own reduced terms: idempotent.
      std::vector<std::pair<std::vector<int>, int>> raw;
      for (const auto& [e, c] : p.terms())
        raw.push_back({std::vector<int>(e.begin(), e.end()), c});
      CHECK(Poly::from_terms(f, 2, raw) == p);
      for (int x = 0; x < q; ++x)
        for (int y = 0; y < q; ++y) {
          int val = 0;
          // Direct unreduced Horner-free evaluation for cross-checking.
          val = p.evaluate({x, y});
          CHECK(val == p.evaluate({x, y}));
        }
    }
  }
}

TEST_CASE("truth table order and weight") {
  auto f = field_for_order(3);
  Poly x2 = Poly::variable(f, 2, 1);  // last coordinate varies fastest
  auto tt = x2.truth_table();
  REQUIRE(tt.size() == 9);
  CHECK(tt[0] == 0);
  CHECK(tt[1] == 1);
  CHECK(tt[2] == 2);
  CHECK(tt[3] == 0);
  CHECK(x2.weight() == 6);
  CHECK(Poly(f, 2).weight() == 0);
  CHECK(Poly::constant(f, 2, 2).weight() == 9);
}

TEST_CASE("poly-to-function map is injective on reduced forms") {
  // At q=3, m=1 all 27 reduced polys of per-variable degree <= 2 give
  // distinct truth tables (reduced forms are canonical representatives).
  auto f = field_for_order(3);
  std::set<std::vector<int>> tables;
  for (int c0 = 0; c0 < 3; ++c0)
    for (int c1 = 0; c1 < 3; ++c1)
      for (int c2 = 0; c2 < 3; ++c2) {
        Poly p = Poly::from_terms(f, 1, {{{0}, c0}, {{1}, c1}, {{2}, c2}});
        tables.insert(p.truth_table());
      }
  CHECK(tables.size() == 27);
}

TEST_CASE("arithmetic and field mismatch") {
  auto f = field_for_order(5);
  Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
  Poly p = (x + y) * (x - y);
  Poly q = x * x - y * y;
  CHECK(p == q);
  CHECK((p - q).is_zero());
  CHECK(p.scaled(0).is_zero());
  CHECK((-p) + p == Poly(f, 2));
  auto g = field_for_order(7);
  CHECK_THROWS_AS(x + Poly::variable(g, 2, 0), Error);
}

TEST_CASE("restrict_first splits the table") {
  auto f = field_for_order(4);
  std::mt19937 rng(99);
  Poly p = random_poly(f, 3, 3, rng);
  auto tt = p.truth_table();
  for (int lam = 0; lam < 4; ++lam) {
    Poly r = p.restrict_first(lam);
    CHECK(r.m() == 2);
    auto rt = r.truth_table();
    for (int i = 0; i < 16; ++i) CHECK(rt[i] == tt[lam * 16 + i]);
  }
  CHECK_THROWS_AS(Poly::variable(f, 1, 0).restrict_first(0).restrict_first(0),
                  Error);
}

TEST_CASE("factor_hyperplane round-trip") {
  auto f = field_for_order(5);
  Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
  for (int w = 0; w < 5; ++w) {
    Poly lin = x - Poly::constant(f, 2, w);
    Poly g = y * y + x * y + Poly::constant(f, 2, 3);
    Poly prod = lin * g;
    Poly back = prod.factor_hyperplane(w);
    CHECK(lin * back == prod);
    CHECK(back == g);
  }
  CHECK_THROWS_AS((x * y).factor_hyperplane(1), Error);  // does not vanish
}

TEST_CASE("compose_affine is weight-preserving and contravariant") {
  auto f = field_for_order(3);
  std::mt19937 rng(7);
  Poly p = random_poly(f, 2, 2, rng);
  AffineMap t{{{1, 1}, {0, 1}}, {2, 1}};
  Poly pt = p.compose_affine(t);
  CHECK(pt.weight() == p.weight());
  for (int x = 0; x < 3; ++x)
    for (int y = 0; y < 3; ++y) {
      int u = f->add(f->add(x, y), 2);
      int v = f->add(y, 1);
      CHECK(pt.evaluate({x, y}) == p.evaluate({u, v}));
    }
  AffineMap sing{{{1, 1}, {1, 1}}, {0, 0}};
  CHECK_THROWS_AS(p.compose_affine(sing), Error);
}

TEST_CASE("JSON wire format round-trips") {
  std::mt19937 rng(31337);
  for (int q : {3, 4, 9}) {
    auto f = field_for_order(q);
    for (int trial = 0; trial < 10; ++trial) {
      Poly p = random_poly(f, 2, q - 1, rng);
      json j = poly_to_json(p);
      Poly back = poly_from_json(j);
      CHECK(back == p);
      CHECK(poly_to_json(back) == j);
    }
  }
}

TEST_CASE("q=2 fields are rejected by Poly") {
  CHECK_THROWS_AS(Poly(field_for_order(2), 1), Error);
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "grmw/grm.hpp"

using namespace grmw;

TEST_CASE("decompositions") {
  auto p = decompose_r(4, 2, 3);
  CHECK(p.a == 0);
  CHECK(p.b == 3);
  CHECK(p.t == 1);
  CHECK(p.s == 0);
  p = decompose_r(3, 3, 4);
  CHECK(p.a == 1);
  CHECK(p.b == 2);
  CHECK(p.t == 2);
  CHECK(p.s == 0);
  p = decompose_r(5, 3, 4);
  CHECK(p.a == 0);
  CHECK(p.b == 4);
  CHECK(p.t == 1);
  CHECK(p.s == 0);
  CHECK_THROWS_AS(decompose_r(2, 2, 1), Error);
  CHECK_THROWS_AS(decompose_r(3, 2, 0), Error);
  CHECK_THROWS_AS(decompose_r(3, 2, 5), Error);
}

TEST_CASE("minimum weight") {
  CHECK(min_weight(decompose_r(4, 2, 3)).value == 4);
  CHECK(min_weight(decompose_r(3, 2, 2)).value == 3);
  CHECK(min_weight(decompose_r(5, 3, 2)).value == 75);
  CHECK(min_weight(decompose_r(9, 3, 12)).value == 45);
  CHECK(min_weight(decompose_r(5, 3, 3)).value == 50);
  CHECK(min_weight(decompose_r(4, 2, 3)).status == Status::Exact);
}

TEST_CASE("second weight case table") {
  CHECK(second_weight(decompose_r(4, 2, 3)).value == 6);
  CHECK(second_weight(decompose_r(3, 2, 2)).value == 4);
  CHECK(second_weight(decompose_r(3, 3, 2)).value == 12);
  CHECK(second_weight(decompose_r(5, 3, 2)).value == 80);
  CHECK(second_weight(decompose_r(3, 3, 3)).value == 8);
  CHECK(second_weight(decompose_r(5, 2, 2)).value == 16);   // s=2 branch
  CHECK(second_weight(decompose_r(5, 1, 3)).value == 3);    // univariate
  // q=3, r=1 (t=0, s=1) is outside the case list.
  CHECK_THROWS_AS(second_weight(decompose_r(3, 2, 1)), Error);
}

TEST_CASE("two-variable constant c_b") {
  auto c = cb_value(4, 2);
  CHECK(c.value == 11);
  CHECK(c.status == Status::Exact);
  CHECK(cb_value(4, 3).value == 7);
  CHECK(cb_value(5, 3).value == 13);
  CHECK(cb_value(9, 4).value == 49);
  CHECK(cb_value(13, 5).value == 110);
  CHECK(cb_value(17, 6).value == 195);
  CHECK(cb_value(17, 6).status == Status::Exact);
  // Below the proven threshold: upper bound only.
  CHECK(cb_value(5, 4).status == Status::BoundOnly);
  CHECK(cb_value(5, 4).value == 9);
  CHECK_THROWS_AS(cb_value(5, 1), Error);
  CHECK_THROWS_AS(cb_value(5, 5), Error);
}

TEST_CASE("third weight ladder") {
  auto w = third_weight(decompose_r(4, 2, 3));
  CHECK(w.value == 7);
  CHECK(w.status == Status::Exact);
  w = third_weight(decompose_r(3, 2, 2));
  CHECK(w.value == 5);
  CHECK(w.status == Status::Exact);
  w = third_weight(decompose_r(3, 3, 2));
  CHECK(w.value == 15);
  w = third_weight(decompose_r(7, 5, 15));  // a=2, b=3, m-a=3
  CHECK(w.value == 216);
  CHECK(w.status == Status::Exact);
  w = third_weight(decompose_r(5, 2, 4));
  CHECK(w.status == Status::BoundOnly);
  CHECK(w.value == 9);
  CHECK(w.provenance.find("3hyp") != std::string::npos);
  w = third_weight(decompose_r(9, 2, 4));  // c_4 = (q-2)^2 exact
  CHECK(w.value == 49);
  CHECK(w.status == Status::Exact);
  // Outside 2 <= r <= m(q-1)-2: undefined.
  CHECK(third_weight(decompose_r(5, 2, 1)).status == Status::Undefined);
  CHECK(third_weight(decompose_r(5, 2, 7)).status == Status::Undefined);
  // Univariate: q - r + 2.
  w = third_weight(decompose_r(7, 1, 3));
  CHECK(w.value == 6);
  CHECK(w.status == Status::Exact);
}

TEST_CASE("weights are strictly increasing where all exact") {
  for (int q : {3, 4, 5, 7, 9}) {
    for (int m = 1; m <= 4; ++m) {
      for (int r = 2; r <= m * (q - 1) - 2; ++r) {
        auto p = decompose_r(q, m, r);
        auto w3 = third_weight(p);
        if (w3.status != Status::Exact) continue;
        long long w1 = min_weight(p).value;
        long long w2;
        try {
          w2 = second_weight(p).value;
        } catch (const Error&) {
          continue;
        }
        CHECK(w1 < w2);
        CHECK(w2 < w3.value);
      }
    }
  }
}

TEST_CASE("quadratic classifier examples") {
  auto f = field_for_order(5);
  Poly x = Poly::variable(f, 2, 0), y = Poly::variable(f, 2, 1);
  auto [cls, w] = quadratic_weight(x * y);
  CHECK(w == 16);
  CHECK(w == (x * y).weight());
  auto [cls2, w2] = quadratic_weight(x * y + Poly::constant(f, 2, 1));
  CHECK(w2 == 21);
  auto [cls3, w3] = quadratic_weight(x * x);
  CHECK(w3 == 20);
  auto [cls4, w4] = quadratic_weight(Poly(f, 2));
  CHECK(w4 == 0);
  auto [cls5, w5] = quadratic_weight(x + y);  // degree 1 accepted
  CHECK(w5 == 20);
  CHECK_THROWS_AS(quadratic_weight(x * x * y), Error);           // degree 3
  auto g = field_for_order(4);
  Poly u = Poly::variable(g, 2, 0);
  CHECK_THROWS_AS(quadratic_weight(u * u), Error);  // even characteristic
}

TEST_CASE("provenance tags present on exact answers") {
  CHECK(!min_weight(decompose_r(5, 2, 3)).provenance.empty());
  CHECK(!second_weight(decompose_r(5, 2, 3)).provenance.empty());
  CHECK(!third_weight(decompose_r(5, 2, 3)).provenance.empty());
}

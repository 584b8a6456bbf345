#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grmw/gf.hpp"

using namespace grmw;

namespace {

void check_axioms(const FieldPtr& f) {
  const int q = f->q();
  for (int a = 0; a < q; ++a) {
    CHECK(f->add(a, 0) == a);
    CHECK(f->mul(a, 1) == a);
    CHECK(f->add(a, f->neg(a)) == 0);
    if (a != 0) CHECK(f->mul(a, f->inv(a)) == 1);
    for (int b = 0; b < q; ++b) {
      CHECK(f->add(a, b) == f->add(b, a));
      CHECK(f->mul(a, b) == f->mul(b, a));
      for (int c = 0; c < q; ++c) {
        CHECK(f->add(f->add(a, b), c) == f->add(a, f->add(b, c)));
        CHECK(f->mul(f->mul(a, b), c) == f->mul(a, f->mul(b, c)));
        CHECK(f->mul(a, f->add(b, c)) == f->add(f->mul(a, b), f->mul(a, c)));
      }
    }
  }
}

}  // namespace

TEST_CASE("prime field arithmetic") {
  auto f = field_for_order(7);
  CHECK(f->p() == 7);
  CHECK(f->e() == 1);
  CHECK(f->add(5, 4) == 2);
  CHECK(f->mul(3, 5) == 1);
  CHECK(f->inv(3) == 5);
  CHECK(f->neg(2) == 5);
  CHECK(f->pow(3, 6) == 1);
  check_axioms(f);
}

TEST_CASE("extension field axioms") {
  for (int q : {4, 8, 9, 16, 25, 27}) check_axioms(field_for_order(q));
}

TEST_CASE("frobenius and multiplicative order") {
  for (int q : {4, 9, 16, 25, 27, 32, 49}) {
    auto f = field_for_order(q);
    for (int a = 0; a < q; ++a) CHECK(f->pow(a, q) == a);  // x^q = x
    if (q <= 32)
      for (int a = 1; a < q; ++a) CHECK(f->pow(a, q - 1) == 1);
  }
}

TEST_CASE("squares partition") {
  for (int q : {5, 9, 13}) {
    auto f = field_for_order(q);
    std::set<int> squares;
    for (int a = 0; a < q; ++a) squares.insert(f->mul(a, a));
    for (int a = 0; a < q; ++a)
      CHECK(f->is_square(a) == (squares.count(a) > 0));
    CHECK((int)squares.size() == (q % 2 == 1 ? (q + 1) / 2 : q));
  }
}

TEST_CASE("explicit modulus and validation errors") {
  std::vector<int> good = {1, 1, 1};  // 1 + x + x^2 irreducible over F_2
  CHECK(field_make(2, 2, &good)->q() == 4);

  std::vector<int> reducible = {0, 0, 1};  // x^2
  CHECK_THROWS_AS(field_make(2, 2, &reducible), Error);
  std::vector<int> nonmonic = {1, 1, 2};
  CHECK_THROWS_AS(field_make(3, 2, &nonmonic), Error);
  std::vector<int> short_mod = {1, 1};
  CHECK_THROWS_AS(field_make(3, 2, &short_mod), Error);
  CHECK_THROWS_AS(field_make(4, 1), Error);           // NonPrimeP
  CHECK_THROWS_AS(field_for_order(6), Error);         // NotPrimePower
  CHECK_THROWS_AS(field_make(2, 17), Error);          // q too large
  CHECK_THROWS_AS(field_for_order(7)->inv(0), Error); // DivisionByZero
}

TEST_CASE("error carries stable code") {
  try {
    field_for_order(6);
    FAIL("expected throw");
  } catch (const Error& e) {
    CHECK(std::string(e.code()) == "NotPrimePower");
  }
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "grmw/budget.hpp"
#include "grmw/json_io.hpp"
#include "grmw/spectrum.hpp"

using namespace grmw;

TEST_CASE("monomial basis is lexicographic and complete") {
  auto basis = monomial_basis(3, 2, 2);
  // Degree <= 2 reduced monomials in two variables over F_3.
  REQUIRE(basis.size() == 6);
  CHECK(basis.front() == std::vector<int>{0, 0});
  std::set<std::vector<int>> seen(basis.begin(), basis.end());
  CHECK(seen.size() == basis.size());
  for (const auto& e : basis) CHECK(e[0] + e[1] <= 2);
}

TEST_CASE("spectrum of the full code R_3(2,2)") {
  auto res = exhaustive_spectrum(3, 2, 2);
  CHECK(res.enumerated == 729);
  REQUIRE(!res.distinct_weights.empty());
  CHECK(res.distinct_weights[0] == std::pair<long long, long long>{0, 1});
  CHECK(res.distinct_weights[1].first == 3);
  CHECK(res.distinct_weights[2].first == 4);
  CHECK(res.distinct_weights[3].first == 5);
  // Scalar-orbit divisibility: counts of nonzero weights divide by q-1.
  for (std::size_t i = 1; i < res.distinct_weights.size(); ++i)
    CHECK(res.distinct_weights[i].second % 2 == 0);
  // Representative stored and valid.
  auto it = res.representatives.find(3);
  REQUIRE(it != res.representatives.end());
  int nonzero = 0;
  for (uint8_t v : it->second) nonzero += v != 0;
  CHECK(nonzero == 3);
}

TEST_CASE("degenerate order r=0") {
  auto res = exhaustive_spectrum(3, 2, 0);
  CHECK(res.enumerated == 3);
  REQUIRE(res.distinct_weights.size() == 2);
  CHECK(res.distinct_weights[0].first == 0);
  CHECK(res.distinct_weights[1] == std::pair<long long, long long>{9, 2});
}

TEST_CASE("shard-count independence") {
  SpectrumOptions one, four, sixteen;
  four.shards = 4;
  sixteen.shards = 16;
  auto a = exhaustive_spectrum(3, 2, 2, one);
  auto b = exhaustive_spectrum(3, 2, 2, four);
  auto c = exhaustive_spectrum(3, 2, 2, sixteen);
  CHECK(a.distinct_weights == b.distinct_weights);
  CHECK(a.distinct_weights == c.distinct_weights);
  CHECK(a.representatives == b.representatives);
  CHECK(a.representatives == c.representatives);
  CHECK(spectrum_to_csv(a) == spectrum_to_csv(c));
}

TEST_CASE("filters") {
  SpectrumOptions opts;
  opts.weight_cap = 4;
  auto res = exhaustive_spectrum(3, 2, 2, opts);
  for (auto& [w, c] : res.distinct_weights) CHECK(w <= 4);
  opts = {};
  opts.max_distinct = 3;
  res = exhaustive_spectrum(3, 2, 2, opts);
  CHECK(res.distinct_weights.size() == 3);
}

TEST_CASE("budget rejection") {
  CHECK_THROWS_AS(exhaustive_spectrum(5, 2, 4), Error);  // 5^15 codewords
  long long saved = enumeration_budget();
  enumeration_budget() = 100;
  CHECK_THROWS_AS(exhaustive_spectrum(3, 2, 2), Error);  // 729 > 100
  enumeration_budget() = saved;
}

TEST_CASE("line union oracle small cases") {
  auto res = line_union_oracle(4, 2);
  REQUIRE(res.top_sizes.size() >= 2);
  CHECK(res.top_sizes[0].first == 8);  // two parallel lines
  CHECK(res.top_sizes[1].first == 7);  // two crossing lines

  res = line_union_oracle(7, 3);
  REQUIRE(res.top_sizes.size() >= 3);
  // 21 = three parallel; 19 = concurrent or 2+1; 18 = triangle, and
  // 49 - 18 = 31 = c_3(7).
  CHECK(res.top_sizes[0].first == 21);
  CHECK(res.top_sizes[1].first == 19);
  CHECK(res.top_sizes[2].first == 18);
  CHECK_THROWS_AS(line_union_oracle(5, 7), Error);
}

TEST_CASE("fix_first_line preserves the distinct-size set") {
  UnionSearchOptions fixed;
  fixed.fix_first_line = true;
  auto free_run = line_union_oracle(5, 3);
  auto fixed_run = line_union_oracle(5, 3, fixed);
  std::vector<int> a, b;
  for (auto& [s, c] : free_run.top_sizes) a.push_back(s);
  for (auto& [s, c] : fixed_run.top_sizes) b.push_back(s);
  CHECK(a == b);
}

TEST_CASE("plane oracle and three-plane classification") {
  auto res = plane_union_oracle(5);
  REQUIRE(res.top_sizes.size() >= 4);
  CHECK(res.top_sizes[0].first == 75);
  CHECK(res.top_sizes[1].first == 65);
  CHECK(res.top_sizes[2].first == 61);
  CHECK(res.top_sizes[3].first == 60);

  auto f = field_for_order(5);
  using V = std::vector<std::vector<int>>;
  CHECK(classify_three_planes(
            f, V{{1, 0, 0, 0}, {1, 0, 0, 1}, {1, 0, 0, 2}}) ==
        ThreePlaneKind::Parallel);
  CHECK(classify_three_planes(
            f, V{{1, 0, 0, 0}, {1, 0, 0, 1}, {0, 1, 0, 0}}) ==
        ThreePlaneKind::TwoParallel);
  CHECK(classify_three_planes(
            f, V{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 0}}) ==
        ThreePlaneKind::Pencil);
  CHECK(classify_three_planes(
            f, V{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 0, 1}}) ==
        ThreePlaneKind::Prism);
  CHECK(classify_three_planes(
            f, V{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}}) ==
        ThreePlaneKind::Triple);
}

TEST_CASE("verification suite report shape") {
  auto rep = run_verification_suite("arrangements-top3");
  CHECK(rep.suite == "arrangements-top3");
  CHECK(!rep.claims.empty());
  CHECK(rep.all_pass());
  json j = report_to_json(rep);
  CHECK(j.contains("claims"));
  CHECK_THROWS_AS(run_verification_suite("no-such-suite"), Error);
}

#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "grmw/grm.hpp"

namespace grmw {

struct SpectrumOptions {
  int max_distinct = -1;     // cap on reported distinct weights (-1: all)
  long long weight_cap = -1; // report only weights <= cap (-1: all)
  int shards = 1;            // parallel workers over leading coefficients
};

struct SpectrumResult {
  CodeParams params;
  // Ascending (weight, count); subject to max_distinct / weight_cap.
  std::vector<std::pair<long long, long long>> distinct_weights;
  // Lexicographically minimal truth table per reported weight.
  std::map<long long, std::vector<uint8_t>> representatives;
  long long enumerated = 0;  // codewords visited (q^#monomials)
};

// Enumerates every codeword of R_q(r, m) with an incremental truth-table
// kernel.  Deterministic and shard-count independent.
// Errors: BudgetExceeded (codeword count over enumeration_budget()),
// SizeBudgetExceeded (q^m over table_budget()).
SpectrumResult exhaustive_spectrum(int q, int m, int r,
                                   const SpectrumOptions& opts = {});

// The degree-<= r monomial exponent list in lexicographic order (the
// enumeration basis; exposed for tests).
std::vector<std::vector<int>> monomial_basis(int q, int m, int r);

struct UnionSearchOptions {
  bool fix_first_line = false;  // pin the first line to y = 0
};

struct UnionSearchResult {
  // Descending distinct union sizes with multiplicities.
  std::vector<std::pair<int, long long>> top_sizes;
  // First witness (member indices into the object list) per size.
  std::map<int, std::vector<int>> witnesses;
  // The enumerated objects, as coefficient tuples (a, b, c): a*x + b*y = c
  // for lines, (n1, n2, n3, c) for planes.
  std::vector<std::vector<int>> objects;
};

// Exact union sizes over all multisets of b distinct lines in F_q^2.
// Errors: BudgetExceeded (b > 6).
UnionSearchResult line_union_oracle(int q, int b,
                                    const UnionSearchOptions& opts = {});

// Exact union sizes over multisets of 3 distinct affine planes in F_q^3,
// first plane pinned to x_1 = 0.  Errors: BudgetExceeded (q > 9 or count!=3).
UnionSearchResult plane_union_oracle(int q, int count = 3);

// Mutual position of three distinct planes in F_q^3.
enum class ThreePlaneKind {
  Parallel,     // all three parallel
  TwoParallel,  // exactly two parallel
  Pencil,       // pairwise non-parallel, sharing a common line
  Prism,        // pairwise non-parallel, pairwise intersections parallel
  Triple,       // normals independent: unique common point
};
std::string to_string(ThreePlaneKind k);
ThreePlaneKind classify_three_planes(const FieldPtr& f,
                                     const std::vector<std::vector<int>>& planes);

// Verification suite.  Suites: formulas-vs-oracles, arrangements-top3,
// constructors, quadratic, all.  `extended` adds the long line-oracle run.
struct Claim {
  std::string id;
  std::string provenance;
  std::string expected;
  std::string measured;
  bool pass = false;
};

struct Report {
  std::string suite;
  std::vector<Claim> claims;
  long long elapsed_ms = 0;
  bool all_pass() const;
};

Report run_verification_suite(const std::string& suite, bool extended = false,
                              int threads = 1);

}  // namespace grmw

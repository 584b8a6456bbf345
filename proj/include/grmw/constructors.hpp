#pragma once

#include <string>
#include <vector>

#include "grmw/grm.hpp"
#include "grmw/poly.hpp"

namespace grmw {

// The affine line a*x + b*y = c in F_q^2, kept normalized: the leading
// nonzero of (a, b) is scaled to 1.
struct Line2 {
  int a = 0, b = 0, c = 0;
  bool operator==(const Line2& o) const {
    return a == o.a && b == o.b && c == o.c;
  }
};

Line2 make_line(const FieldPtr& f, int a, int b, int c);  // DegenerateLine

// Configuration taxonomy of b >= 3 distinct lines, checked in precedence
// order:
//   A: all parallel;  B: exactly b-1 parallel;  C: all concurrent;
//   D: b-2 parallel and the other two parallel to each other;
//   E: b-2 parallel and the other two meet at a point on one of them;
//   F: b-1 concurrent and the remaining line parallel to one of them;
//   G: none of the above.
enum class LineConfig { A, B, C, D, E, F, G };

std::string line_config_name(LineConfig tag, int b);  // e.g. "D_4"

// Errors: DuplicateLine; TooFewLines (fewer than 3).
LineConfig classify_line_configuration(const FieldPtr& f,
                                       std::vector<Line2> lines);

// One block of parallel hyperplanes f(x) = u for u in shifts, where f is the
// linear form with the given coefficients (no constant term).
struct ArrangementBlock {
  std::vector<int> form;    // length m
  std::vector<int> shifts;  // distinct element codes, fewer than q of them
};

// prod_blocks prod_shifts (form_i(x) - u); weight is q^m minus the
// arrangement's point count.  Errors: DependentForms, RepeatedShift,
// FullBlock (a block listing q or more shifts reduces to zero).
Poly build_arrangement_poly(const FieldPtr& f, int m,
                            const std::vector<ArrangementBlock>& blocks);

// One witness codeword per upper-bound branch, with its claimed weight.
struct Witness {
  Poly poly;
  long long claimed_weight = 0;
  std::string branch;
};

// Branch ids applicable at (q, m, a, b):
//   b1q3, b1q4, b1amax, b1main   (b = 1 cases)
//   b2q3                         (q = 3, b = 2 four-line case)
//   b3cube                       ((q-1)^3 q^(m-a-3) product of three planes)
//   mid                          ((q-2)(q-b+2) q^(m-a-2))
//   high                         ((q-b+1) q^(m-a-1))
std::vector<std::string> theorem3_branches(int q, int m, int a, int b);

// Errors: BranchRangeViolation.
Witness build_theorem3_witness(int q, int m, int a, int b,
                               const std::string& branch);

// The explicit two-variable families meeting the third-weight constant c_b.
enum class Family2 {
  Triangle,       // b=3: three lines meeting pairwise, not concurrent
  ParallelPairs,  // b-2 parallel lines plus a parallel pair (config D)
  Pencil,         // b-1 concurrent lines plus one parallel (config F)
  PencilPlus,     // three concurrent lines plus b-3 parallels (config E)
  Quadrilateral,  // b=5: quadrilateral with one diagonal
};

std::string family_name(Family2 f);
std::vector<Family2> third_weight_families(int q, int b);

// Builds the family with default parameters (first canonical field elements
// meeting the side conditions) or explicit ones; the measured weight is
// required to equal the exact c_b.  Errors: ParamSideCondition.
// Explicit parameter layout per family: Triangle {c}; ParallelPairs
// {b_1..b_{b-2}, c, d}; Pencil {e}; PencilPlus {e_1..e_{b-3}};
// Quadrilateral {a, b, c, d}.
Poly build_third_weight_2var(const FieldPtr& f, int b, Family2 family,
                             const std::vector<int>* params = nullptr);

// A codeword of R_q(a(q-1)+b, m) achieving the exact third weight:
// prod_{i<=a} (1 - x_i^(q-1)) times a two-variable witness (or times
// x_{a+1} x_{a+2} x_{a+3} when b = 3 and m-a >= 3).
// Errors: NotExactCase when third_weight is not Exact.
Poly build_third_weight(int q, int m, int a, int b);

}  // namespace grmw

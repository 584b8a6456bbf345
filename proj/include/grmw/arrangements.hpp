#pragma once

#include <string>
#include <vector>

#include "grmw/error.hpp"

namespace grmw {

// A block hyperplane arrangement type in F_q^m: k blocks of parallel
// hyperplanes with pairwise independent directions, block i containing
// sizes[i] hyperplanes.  Canonical form keeps sizes sorted descending.
struct ArrangementType {
  std::vector<int> sizes;

  int k() const noexcept { return (int)sizes.size(); }
  int sum() const noexcept {
    int s = 0;
    for (int d : sizes) s += d;
    return s;
  }
  ArrangementType canonical() const;
  bool operator==(const ArrangementType& o) const { return sizes == o.sizes; }
};

// Number of points covered by the union:  q^m - q^(m-k) * prod (q - d_i).
// Errors: TooManyBlocks (k > m), BlockTooBig (d_i > q-1 or d_i < 1).
long long n_points(int q, int m, const ArrangementType& type);

// One catalog row: a concrete type, its point count, and every configuration
// name from the case analysis that instantiates to this type at (q,m,d)
// (coinciding names are merged onto one row).
struct CatalogEntry {
  ArrangementType type;
  long long n = 0;
  std::vector<std::string> tags;
};

// All named configurations (Tmax, T1..T4 and their modifications) whose
// validity range covers (q, m, t, s) where d = t(q-1)+s.  Each entry's N is
// recomputed through n_points and checked against the closed form.
std::vector<CatalogEntry> named_catalog(int q, int m, int d);

// The third-largest union count N'_3 over arrangements of at most d
// hyperplanes, per the case propositions, with the winning configuration
// name and any recorded ties.  Errors: UncoveredCase.
struct N3Result {
  long long n = 0;
  std::string winner;
  ArrangementType type;
  std::vector<std::string> ties;
};
N3Result n3_prime(int q, int m, int d);

// Brute-force oracle: every type multiset with k <= m, 1 <= d_i <= q-1 and
// sum d_i <= d, with its N; sorted by N descending, then lexicographically
// by canonical (descending) sizes.
std::vector<std::pair<ArrangementType, long long>> enumerate_types(int q, int m,
                                                                   int d);

// Checks the top three distinct N values of enumerate_types against the
// closed forms: N(Tmax), the second-weight configuration, and n3_prime.
struct Top3Report {
  bool covered = false;  // propositions cover (q, t, s)
  bool pass = false;
  long long top[3] = {0, 0, 0};       // enumerated distinct values
  long long expected[3] = {0, 0, 0};  // closed-form values
  std::string tags[3];                // config names ("T3d|T3e" on ties)
  std::string detail;                 // mismatch description, empty if pass
};
Top3Report verify_top3(int q, int m, int d);

// The second-weight configuration (the arrangement with second-largest N)
// for d = t(q-1)+s, as named in the case list.  Errors: UncoveredCase.
CatalogEntry second_config(int q, int m, int d);

}  // namespace grmw

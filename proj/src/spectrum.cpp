#include "grmw/spectrum.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <thread>

#include "grmw/budget.hpp"
#include "grmw/poly.hpp"

namespace grmw {
namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

// Checked q^n against a cap; returns -1 on overflow past the cap.
long long ipow_capped(long long base, int e, long long cap) {
  long long r = 1;
  while (e-- > 0) {
    if (r > cap / base) return -1;
    r *= base;
  }
  return r;
}

struct MonoEntry {
  uint32_t point;
  uint8_t value;
};

// Per-shard enumeration state for the incremental kernel.
struct ShardAccum {
  std::vector<long long> counts;                        // index: weight
  std::map<long long, std::vector<uint8_t>> reps;       // lex-min tables
};

void merge_rep(std::map<long long, std::vector<uint8_t>>& into, long long w,
               const std::vector<uint8_t>& tt) {
  auto it = into.find(w);
  if (it == into.end())
    into.emplace(w, tt);
  else if (tt < it->second)
    it->second = tt;
}

}  // namespace

std::vector<std::vector<int>> monomial_basis(int q, int m, int r) {
  std::vector<std::vector<int>> out;
  std::vector<int> e(m, 0);
  // Lexicographic enumeration, last coordinate fastest.
  for (;;) {
    int sum = 0;
    for (int v : e) sum += v;
    if (sum <= r) out.push_back(e);
    int i = m - 1;
    while (i >= 0 && e[i] == q - 1) e[i--] = 0;
    if (i < 0) break;
    ++e[i];
  }
  std::sort(out.begin(), out.end());
  return out;
}

SpectrumResult exhaustive_spectrum(int q, int m, int r,
                                   const SpectrumOptions& opts) {
  SpectrumResult res;
  if (r == 0) {
    res.params = CodeParams{q, m, 0, 0, 0, 0, 0};
  } else {
    res.params = decompose_r(q, m, r);
  }
  const long long npts = ipow_capped(q, m, (long long)table_budget());
  if (npts < 0)
    fail("SizeBudgetExceeded", "q^m exceeds the truth-table budget");

  auto basis = monomial_basis(q, m, r);
  const int M = (int)basis.size();
  const long long total = ipow_capped(q, M, enumeration_budget());
  if (total < 0)
    fail("BudgetExceeded",
         "q^" + std::to_string(M) + " codewords exceed the enumeration budget");
  res.enumerated = total;

  auto field = field_for_order(q);
  const Field& f = *field;
  if (!f.tables()) fail("UnsupportedField", "spectrum kernel needs q <= 256");
  const uint16_t* add_tab = f.add_table();
  const uint16_t* mul_tab = f.mul_table();

  // Nonzero entries of each monomial's truth table.
  std::vector<std::vector<MonoEntry>> mono(M);
  {
    std::vector<std::vector<int>> pow_tab(q, std::vector<int>(q, 1));
    for (int x = 0; x < q; ++x)
      for (int e = 1; e < q; ++e)
        pow_tab[x][e] = f.mul(pow_tab[x][e - 1], x);
    std::vector<int> pt(m, 0);
    for (uint32_t idx = 0;; ++idx) {
      for (int j = 0; j < M; ++j) {
        int v = 1;
        for (int i = 0; i < m; ++i)
          if (basis[j][i]) v = f.mul(v, pow_tab[pt[i]][basis[j][i]]);
        if (v != 0) mono[j].push_back({idx, (uint8_t)v});
      }
      int i = m - 1;
      while (i >= 0 && pt[i] == q - 1) pt[i--] = 0;
      if (i < 0) break;
      ++pt[i];
    }
  }

  // Delta between consecutive coefficient codes in enumeration order.
  std::vector<int> step_delta(q);
  for (int v = 0; v + 1 < q; ++v) step_delta[v] = f.sub(v + 1, v);
  const int wrap_delta = f.sub(0, q - 1);

  // Sharding over the top `prefix_len` coefficients.
  const int shards = std::max(1, opts.shards);
  int prefix_len = 0;
  long long prefix_space = 1;
  while (prefix_space < shards && prefix_len < M) {
    prefix_space *= q;
    ++prefix_len;
  }
  const int low = M - prefix_len;

  const long long cap = opts.weight_cap;
  auto run_shard = [&](int shard_id, ShardAccum& acc) {
    acc.counts.assign(npts + 1, 0);
    std::vector<uint8_t> vals(npts);
    std::vector<int> digits(low);
    auto apply = [&](int mono_idx, int delta, long long& nz) {
      for (const MonoEntry& me : mono[mono_idx]) {
        int dv = mul_tab[delta * q + me.value];
        uint8_t old = vals[me.point];
        uint8_t nv = (uint8_t)add_tab[old * q + dv];
        nz += (nv != 0) - (old != 0);
        vals[me.point] = nv;
      }
    };
    for (long long prefix = shard_id; prefix < prefix_space; prefix += shards) {
      std::fill(vals.begin(), vals.end(), 0);
      std::fill(digits.begin(), digits.end(), 0);
      long long nz = 0;
      long long p = prefix;
      for (int j = 0; j < prefix_len; ++j) {
        int coeff = (int)(p % q);
        p /= q;
        if (coeff != 0) apply(low + j, coeff, nz);  // delta from 0 is coeff
      }
      for (;;) {
        acc.counts[nz]++;
        if (cap < 0 || nz <= cap) merge_rep(acc.reps, nz, vals);
        int i = 0;
        while (i < low && digits[i] == q - 1) {
          digits[i] = 0;
          apply(i, wrap_delta, nz);
          ++i;
        }
        if (i == low) break;
        apply(i, step_delta[digits[i]], nz);
        ++digits[i];
      }
    }
  };

  std::vector<ShardAccum> accs(shards);
  if (shards == 1) {
    run_shard(0, accs[0]);
  } else {
    std::vector<std::thread> workers;
    for (int sidx = 0; sidx < shards; ++sidx)
      workers.emplace_back(run_shard, sidx, std::ref(accs[sidx]));
    for (auto& w : workers) w.join();
  }

  std::vector<long long> counts(npts + 1, 0);
  std::map<long long, std::vector<uint8_t>> reps;
  for (const auto& acc : accs) {
    for (long long w = 0; w <= npts; ++w) counts[w] += acc.counts[w];
    for (const auto& [w, tt] : acc.reps) merge_rep(reps, w, tt);
  }

  int kept = 0;
  for (long long w = 0; w <= npts; ++w) {
    if (counts[w] == 0) continue;
    if (cap >= 0 && w > cap) continue;
    if (opts.max_distinct >= 0 && kept >= opts.max_distinct) break;
    res.distinct_weights.push_back({w, counts[w]});
    if (auto it = reps.find(w); it != reps.end())
      res.representatives.emplace(w, it->second);
    ++kept;
  }
  return res;
}

namespace {

constexpr int kMaxWords = 8;
using Bits = std::array<uint64_t, kMaxWords>;

int popcount_bits(const Bits& b, int words) {
  int n = 0;
  for (int i = 0; i < words; ++i) n += std::popcount(b[i]);
  return n;
}

// Exhaustive search over index combinations with partial-union accumulators.
void union_search(const std::vector<Bits>& sets, int words, int pick,
                  int first_index, bool fix_first,
                  std::vector<long long>& size_counts,
                  std::map<int, std::vector<int>>& witnesses) {
  const int n = (int)sets.size();
  std::vector<int> chosen;
  std::vector<Bits> partial(pick + 1);
  partial[0].fill(0);

  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == pick) {
      int size = popcount_bits(partial[depth], words);
      if (size_counts[size]++ == 0) witnesses.emplace(size, chosen);
      return;
    }
    int lo = start;
    int hi = n - (pick - depth) + 1;
    for (int i = lo; i < hi; ++i) {
      for (int w = 0; w < words; ++w)
        partial[depth + 1][w] = partial[depth][w] | sets[i][w];
      chosen.push_back(i);
      rec(i + 1, depth + 1);
      chosen.pop_back();
    }
  };

  if (fix_first) {
    for (int w = 0; w < words; ++w) partial[1][w] = sets[first_index][w];
    chosen.push_back(first_index);
    // Remaining members chosen from indices after the fixed one only if the
    // fixed index is 0; the line/plane lists below always put it first.
    std::function<void(int, int)> rec2 = [&](int start, int depth) {
      if (depth == pick) {
        int size = popcount_bits(partial[depth], words);
        if (size_counts[size]++ == 0) witnesses.emplace(size, chosen);
        return;
      }
      int hi = n - (pick - depth) + 1;
      for (int i = start; i < hi; ++i) {
        for (int w = 0; w < words; ++w)
          partial[depth + 1][w] = partial[depth][w] | sets[i][w];
        chosen.push_back(i);
        rec2(i + 1, depth + 1);
        chosen.pop_back();
      }
    };
    rec2(first_index + 1, 1);
  } else {
    rec(0, 0);
  }
}

UnionSearchResult finish_search(std::vector<long long>& size_counts,
                                std::map<int, std::vector<int>>& witnesses,
                                std::vector<std::vector<int>> objects) {
  UnionSearchResult res;
  for (int s = (int)size_counts.size() - 1; s >= 0; --s)
    if (size_counts[s] > 0) res.top_sizes.push_back({s, size_counts[s]});
  res.witnesses = std::move(witnesses);
  res.objects = std::move(objects);
  return res;
}

}  // namespace

UnionSearchResult line_union_oracle(int q, int b,
                                    const UnionSearchOptions& opts) {
  if (b < 2 || b > 6)
    fail("BudgetExceeded", "line multiset size must be between 2 and 6");
  auto f = field_for_order(q);
  // Lines ax + by = c grouped by direction; the line y = 0 comes first so it
  // can serve as the pinned representative.
  std::vector<std::vector<int>> lines;
  std::vector<std::pair<int, int>> dirs;
  dirs.push_back({0, 1});
  dirs.push_back({1, 0});
  for (int t = 1; t < q; ++t) dirs.push_back({1, t});
  for (auto [a, bb] : dirs)
    for (int c = 0; c < q; ++c) lines.push_back({a, bb, c});

  const int npts = q * q;
  const int words = (npts + 63) / 64;
  std::vector<Bits> sets(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    sets[i].fill(0);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y) {
        int v = f->add(f->mul(lines[i][0], x), f->mul(lines[i][1], y));
        if (v == lines[i][2]) {
          int pt = x * q + y;
          sets[i][pt >> 6] |= 1ull << (pt & 63);
        }
      }
  }

  std::vector<long long> size_counts(npts + 1, 0);
  std::map<int, std::vector<int>> witnesses;
  union_search(sets, words, b, 0, opts.fix_first_line, size_counts, witnesses);
  return finish_search(size_counts, witnesses, std::move(lines));
}

UnionSearchResult plane_union_oracle(int q, int count) {
  if (count != 3) fail("BudgetExceeded", "only 3-plane searches supported");
  if (q > 9) fail("BudgetExceeded", "plane oracle supports q <= 9");
  auto f = field_for_order(q);
  // Planes n.x = c with normalized normals, x_1 = 0 first.
  std::vector<std::vector<int>> planes;
  std::vector<std::array<int, 3>> normals;
  for (int b2 = 0; b2 < q; ++b2)
    for (int b3 = 0; b3 < q; ++b3) normals.push_back({1, b2, b3});
  for (int b3 = 0; b3 < q; ++b3) normals.push_back({0, 1, b3});
  normals.push_back({0, 0, 1});
  for (const auto& n : normals)
    for (int c = 0; c < q; ++c)
      planes.push_back({n[0], n[1], n[2], c});

  const int npts = q * q * q;
  const int words = (npts + 63) / 64;
  std::vector<Bits> sets(planes.size());
  for (std::size_t i = 0; i < planes.size(); ++i) {
    sets[i].fill(0);
    for (int x = 0; x < q; ++x)
      for (int y = 0; y < q; ++y)
        for (int z = 0; z < q; ++z) {
          int v = f->add(f->add(f->mul(planes[i][0], x), f->mul(planes[i][1], y)),
                         f->mul(planes[i][2], z));
          if (v == planes[i][3]) {
            int pt = (x * q + y) * q + z;
            sets[i][pt >> 6] |= 1ull << (pt & 63);
          }
        }
  }

  std::vector<long long> size_counts(npts + 1, 0);
  std::map<int, std::vector<int>> witnesses;
  union_search(sets, words, count, 0, /*fix_first=*/true, size_counts,
               witnesses);
  return finish_search(size_counts, witnesses, std::move(planes));
}

std::string to_string(ThreePlaneKind k) {
  switch (k) {
    case ThreePlaneKind::Parallel: return "parallel";
    case ThreePlaneKind::TwoParallel: return "two-parallel";
    case ThreePlaneKind::Pencil: return "pencil";
    case ThreePlaneKind::Prism: return "prism";
    default: return "triple";
  }
}

ThreePlaneKind classify_three_planes(
    const FieldPtr& f, const std::vector<std::vector<int>>& planes) {
  if (planes.size() != 3) fail("DegreeMismatch", "need exactly 3 planes");
  // Normals are stored normalized (leading nonzero = 1), so parallel planes
  // have identical normal triples.
  auto normal = [&](int i) {
    return std::array<int, 3>{planes[i][0], planes[i][1], planes[i][2]};
  };
  int parallel_pairs = 0;
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (normal(i) == normal(j)) ++parallel_pairs;
  if (parallel_pairs == 3) return ThreePlaneKind::Parallel;
  if (parallel_pairs >= 1) return ThreePlaneKind::TwoParallel;

  // Pairwise non-parallel: row-reduce the augmented system.
  std::vector<std::vector<int>> aug;
  for (int i = 0; i < 3; ++i)
    aug.push_back({planes[i][0], planes[i][1], planes[i][2], planes[i][3]});
  int rank = 0, rank_aug = 0;
  for (int col = 0; col < 4; ++col) {
    int piv = -1;
    for (int r = rank_aug; r < 3; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(aug[rank_aug], aug[piv]);
    int inv = f->inv(aug[rank_aug][col]);
    for (int j = 0; j < 4; ++j)
      aug[rank_aug][j] = f->mul(aug[rank_aug][j], inv);
    for (int r = 0; r < 3; ++r)
      if (r != rank_aug && aug[r][col] != 0) {
        int factor = aug[r][col];
        for (int j = 0; j < 4; ++j)
          aug[r][j] = f->sub(aug[r][j], f->mul(factor, aug[rank_aug][j]));
      }
    ++rank_aug;
    if (col < 3) rank = rank_aug;
  }
  if (rank == 3) return ThreePlaneKind::Triple;
  return (rank_aug == rank) ? ThreePlaneKind::Pencil : ThreePlaneKind::Prism;
}

bool Report::all_pass() const {
  for (const auto& c : claims)
    if (!c.pass) return false;
  return true;
}

}  // namespace grmw

#include "grmw/arrangements.hpp"

#include <algorithm>
#include <functional>
#include <optional>
#include <sstream>

namespace grmw {
namespace {

long long ipow(long long base, int e) {
  long long r = 1;
  while (e-- > 0) r *= base;
  return r;
}

struct TS {
  int t, s;
};

TS split(int q, int d) { return {d / (q - 1), d % (q - 1)}; }

// A named configuration instantiated at (q, t, s): its block sizes (zero
// sizes dropped) and the closed-form N from the case analysis.
struct Named {
  std::string tag;
  std::vector<int> sizes;
  long long closed_form;
};

void push_block(std::vector<int>& sizes, int size, int count) {
  for (int i = 0; i < count; ++i)
    if (size > 0) sizes.push_back(size);
}

// All named configurations valid at (q, m, t, s).  The modifications keep the
// section context they were introduced in: T1a..T1e for s=0, T2a and T4a for
// s=1, T3a..T3e for 2 <= s <= q-2.
std::vector<Named> named_configs(int q, int m, int t, int s) {
  std::vector<Named> out;
  const long long qm = ipow(q, m);
  auto add = [&](const std::string& tag, std::vector<int> sizes,
                 long long closed) {
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    out.push_back({tag, std::move(sizes), closed});
  };

  {  // maximal configuration
    std::vector<int> sz;
    push_block(sz, q - 1, t);
    push_block(sz, s, 1);
    if (!sz.empty() && (int)sz.size() <= m)
      add("Tmax", sz,
          s >= 1 ? qm - (long long)(q - s) * ipow(q, m - t - 1)
                 : qm - ipow(q, m - t));
  }
  if (1 <= t && t <= m - 1 && 0 <= s && s <= q - 3) {  // T1
    std::vector<int> sz;
    push_block(sz, q - 1, t - 1);
    push_block(sz, q - 2, 1);
    push_block(sz, s + 1, 1);
    add("T1", sz, qm - 2LL * (q - s - 1) * ipow(q, m - t - 1));
  }
  if (1 <= t && t <= m - 2 && 1 <= s && s <= q - 2) {  // T2
    std::vector<int> sz;
    push_block(sz, q - 1, t - 1);
    push_block(sz, q - 2, 1);
    push_block(sz, s, 1);
    push_block(sz, 1, 1);
    add("T2", sz, qm - 2LL * (q - 1) * (q - s) * ipow(q, m - t - 2));
  }
  if (0 <= t && t <= m - 2 && 2 <= s && s <= q - 2) {  // T3
    std::vector<int> sz;
    push_block(sz, q - 1, t);
    push_block(sz, s - 1, 1);
    push_block(sz, 1, 1);
    add("T3", sz, qm - (long long)(q - s + 1) * (q - 1) * ipow(q, m - t - 2));
  }
  if (1 <= t && t <= m - 1 && s >= 1) {  // T4 (strictly below d when s >= 1)
    std::vector<int> sz;
    push_block(sz, q - 1, t);
    add("T4", sz, qm - ipow(q, m - t));
  }

  if (s == 0) {  // modifications of T1
    if (q >= 4 && 1 <= t && t <= m - 1) {
      std::vector<int> sz;
      push_block(sz, q - 1, t - 1);
      push_block(sz, q - 3, 1);
      push_block(sz, 2, 1);
      add("T1a", sz, qm - 3LL * (q - 2) * ipow(q, m - t - 1));
    }
    if (q >= 4 && 1 <= t && t <= m - 2) {
      std::vector<int> sz;
      push_block(sz, q - 1, t - 1);
      push_block(sz, q - 3, 1);
      push_block(sz, 1, 2);
      add("T1b", sz, qm - 3LL * (q - 1) * (q - 1) * ipow(q, m - t - 2));
    }
    if (2 <= t && t <= m - 1) {
      std::vector<int> sz;
      push_block(sz, q - 1, t - 2);
      push_block(sz, q - 2, 2);
      push_block(sz, 2, 1);
      add("T1c", sz, qm - 4LL * (q - 2) * ipow(q, m - t - 1));
    }
    if (2 <= t && t <= m - 2) {
      std::vector<int> sz;
      push_block(sz, q - 1, t - 2);
      push_block(sz, q - 2, 2);
      push_block(sz, 1, 2);
      add("T1d", sz, qm - 4LL * (q - 1) * (q - 1) * ipow(q, m - t - 2));
    }
    if (1 <= t && t <= m - 1) {
      std::vector<int> sz;
      push_block(sz, q - 1, t - 1);
      push_block(sz, q - 2, 1);
      add("T1e", sz, qm - 2 * ipow(q, m - t));
    }
  }

  if (s == 1) {
    if (q == 3 && 2 <= t && t <= m - 3) {  // T2a
      std::vector<int> sz;
      push_block(sz, 2, t - 2);
      push_block(sz, 1, 5);
      add("T2a", sz, qm - 32 * ipow(3, m - t - 3));
    }
    if (1 <= t && t <= m - 1) {  // T4a
      std::vector<int> sz;
      push_block(sz, q - 1, t - 1);
      push_block(sz, q - 2, 1);
      push_block(sz, 1, 1);
      add("T4a", sz, qm - 2LL * (q - 1) * ipow(q, m - t - 1));
    }
  }

  if (2 <= s && s <= q - 2) {  // modifications of T3
    if (3 <= s && 0 <= t && t <= m - 3) {
      std::vector<int> sz;
      push_block(sz, q - 1, t);
      push_block(sz, 1, 2);
      push_block(sz, s - 2, 1);
      add("T3a", sz,
          qm - (long long)(q - 1) * (q - 1) * (q - s + 2) * ipow(q, m - t - 3));
    }
    if (1 <= t && t <= m - 2) {
      std::vector<int> sz;
      push_block(sz, q - 1, t - 1);
      push_block(sz, q - 2, 1);
      push_block(sz, s - 1, 1);
      push_block(sz, 2, 1);
      add("T3b", sz,
          qm - 2LL * (q - 2) * (q - s + 1) * ipow(q, m - t - 2));
    }
    if (1 <= t && t <= m - 3) {
      std::vector<int> sz;
      push_block(sz, q - 1, t - 1);
      push_block(sz, q - 2, 1);
      push_block(sz, 1, 2);
      push_block(sz, s - 1, 1);
      add("T3c", sz,
          qm - 2LL * (q - 1) * (q - 1) * (q - s + 1) * ipow(q, m - t - 3));
    }
    if (4 <= s && 0 <= t && t <= m - 2) {
      std::vector<int> sz;
      push_block(sz, q - 1, t);
      push_block(sz, s - 2, 1);
      push_block(sz, 2, 1);
      add("T3d", sz, qm - (long long)(q - 2) * (q - s + 2) * ipow(q, m - t - 2));
    }
    if (0 <= t && t <= m - 2) {
      std::vector<int> sz;
      push_block(sz, q - 1, t);
      push_block(sz, s - 1, 1);
      add("T3e", sz, qm - (long long)(q - s + 1) * ipow(q, m - t - 1));
    }
  }

  // Drop anything that exceeds the block-count limit after zero-size pruning.
  std::erase_if(out, [&](const Named& n) {
    return n.sizes.empty() || (int)n.sizes.size() > m;
  });
  return out;
}

std::optional<Named> find_named(int q, int m, int t, int s,
                                const std::string& tag) {
  for (auto& n : named_configs(q, m, t, s))
    if (n.tag == tag) return n;
  return std::nullopt;
}

}  // namespace

ArrangementType ArrangementType::canonical() const {
  ArrangementType c = *this;
  std::sort(c.sizes.begin(), c.sizes.end(), std::greater<int>());
  return c;
}

long long n_points(int q, int m, const ArrangementType& type) {
  if (type.k() > m)
    fail("TooManyBlocks", "k = " + std::to_string(type.k()) +
                              " exceeds m = " + std::to_string(m));
  long long prod = 1;
  for (int d : type.sizes) {
    if (d < 1 || d > q - 1)
      fail("BlockTooBig", "block size " + std::to_string(d) +
                              " outside [1, q-1]");
    prod *= q - d;
  }
  return ipow(q, m) - ipow(q, m - type.k()) * prod;
}

std::vector<CatalogEntry> named_catalog(int q, int m, int d) {
  if (d < 1 || d > m * (q - 1))
    fail("OutOfRangeR", "need 1 <= d <= m(q-1)");
  auto [t, s] = split(q, d);
  std::vector<CatalogEntry> out;
  for (const auto& n : named_configs(q, m, t, s)) {
    ArrangementType type{n.sizes};
    long long np = n_points(q, m, type);
    if (np != n.closed_form)
      fail("ClosedFormMismatch",
           n.tag + " closed form disagrees with the point-count formula");
    auto it = std::find_if(out.begin(), out.end(), [&](const CatalogEntry& e) {
      return e.type == type;
    });
    if (it == out.end())
      out.push_back({type, np, {n.tag}});
    else
      it->tags.push_back(n.tag);
  }
  std::sort(out.begin(), out.end(), [](const CatalogEntry& a,
                                       const CatalogEntry& b) {
    if (a.n != b.n) return a.n > b.n;
    return a.type.sizes > b.type.sizes;
  });
  for (auto& e : out) std::sort(e.tags.begin(), e.tags.end());
  return out;
}

CatalogEntry second_config(int q, int m, int d) {
  auto [t, s] = split(q, d);
  std::string tag;
  if (s == 0 && 1 <= t && t <= m - 1) {
    tag = "T1";
  } else if (s == 1) {
    if (q == 3 && 1 <= t && t <= m - 2) {
      tag = "T2";
    } else if (q >= 4 && t == 0) {
      // d = 1: the second-largest union is the empty arrangement (N = 0),
      // matching the second weight q^m of the first-order code.
      return {ArrangementType{}, 0, {"T4"}};
    } else if (t >= 1) {
      tag = "T4";
    }
  } else if (2 <= s && s <= q - 2 && t <= m - 2 && q >= 4) {
    tag = "T3";
  }
  if (!tag.empty()) {
    if (auto n = find_named(q, m, t, s, tag)) {
      ArrangementType type{n->sizes};
      return {type, n_points(q, m, type), {tag}};
    }
  }
  fail("UncoveredCase", "no second configuration listed for q=" +
                            std::to_string(q) + ", t=" + std::to_string(t) +
                            ", s=" + std::to_string(s));
}

N3Result n3_prime(int q, int m, int d) {
  if (d < 1 || d > m * (q - 1)) fail("OutOfRangeR", "need 1 <= d <= m(q-1)");
  auto [t, s] = split(q, d);
  std::string winner;
  std::vector<std::string> ties;

  if (s == 0 && 1 <= t && t <= m - 1) {
    if (q >= 7) {
      winner = "T1e";
    } else if (q == 5) {
      winner = "T1a";
    } else if (q == 4) {
      if (t <= m - 2) {
        winner = "T1b";
      } else {  // t = m-1
        winner = "T1e";
        ties.push_back("T1c");
      }
    } else {  // q = 3
      if (t == 1 || t == m - 1)
        winner = "T1e";
      else if (2 <= t && t <= m - 2)
        winner = "T1d";
    }
  } else if (s == 1) {
    if (q == 3) {
      if (1 <= t && t <= m - 2)
        winner = "T4";
      else if (t == m - 1)
        winner = "T4a";
    } else if (q == 4) {
      if (1 <= t && t <= m - 2)
        winner = "T2";
      else if (t == m - 1)
        winner = "T4a";
    } else if (q >= 5) {
      if (1 <= t && t <= m - 1) winner = "T1";
    }
  } else if (2 <= s && s <= q - 2 && t <= m - 2) {
    if (s == 2) {
      winner = "T3e";
      if (q == 5) ties.push_back("T1");
    } else if (s == 3) {
      winner = (q >= 5 && t <= m - 3) ? "T3a" : (q >= 5 ? "T3e" : "");
    } else if (q >= 7 && 4 <= s && 2 * s <= q + 4) {
      winner = "T3d";
      if (q % 2 == 0 && 2 * s == q + 4) ties.push_back("T3e");
    } else if (q >= 8 && 2 * s >= q + 4 && s <= q - 2) {
      winner = "T3e";
    }
  }

  if (winner.empty())
    fail("UncoveredCase", "third-largest N not determined for q=" +
                              std::to_string(q) + ", t=" + std::to_string(t) +
                              ", s=" + std::to_string(s));
  auto n = find_named(q, m, t, s, winner);
  if (!n)
    fail("UncoveredCase", "winning configuration " + winner +
                              " not valid at these parameters");
  N3Result res;
  res.winner = winner;
  res.type = ArrangementType{n->sizes};
  res.n = n_points(q, m, res.type);
  // Keep only ties that are actually valid here and numerically equal.
  for (const auto& tag : ties)
    if (auto other = find_named(q, m, t, s, tag))
      if (other->closed_form == res.n) res.ties.push_back(tag);
  return res;
}

std::vector<std::pair<ArrangementType, long long>> enumerate_types(int q, int m,
                                                                   int d) {
  std::vector<std::pair<ArrangementType, long long>> out;
  std::vector<int> sizes;
  // Descending multisets of block sizes in [1, q-1], at most m blocks,
  // total at most d.
  std::function<void(int, int)> rec = [&](int max_size, int remaining) {
    if (!sizes.empty())
      out.push_back({ArrangementType{sizes}, n_points(q, m, ArrangementType{sizes})});
    if ((int)sizes.size() == m) return;
    for (int v = std::min(max_size, remaining); v >= 1; --v) {
      sizes.push_back(v);
      rec(v, remaining - v);
      sizes.pop_back();
    }
  };
  rec(std::min(q - 1, d), d);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first.sizes < b.first.sizes;
  });
  return out;
}

Top3Report verify_top3(int q, int m, int d) {
  Top3Report rep;
  auto [t, s] = split(q, d);
  (void)t;
  (void)s;

  CatalogEntry second;
  N3Result third;
  long long max_n = 0;
  try {
    second = second_config(q, m, d);
    third = n3_prime(q, m, d);
    auto catalog = named_catalog(q, m, d);
    // Tmax is present whenever d >= 1.
    auto it = std::find_if(catalog.begin(), catalog.end(), [](const auto& e) {
      return std::find(e.tags.begin(), e.tags.end(), "Tmax") != e.tags.end();
    });
    if (it == catalog.end()) fail("UncoveredCase", "no maximal configuration");
    max_n = it->n;
  } catch (const Error& e) {
    if (e.code() == "UncoveredCase") return rep;  // covered = false
    throw;
  }
  rep.covered = true;
  rep.expected[0] = max_n;
  rep.expected[1] = second.n;
  rep.expected[2] = third.n;
  rep.tags[0] = "Tmax";
  rep.tags[1] = second.tags[0];
  rep.tags[2] = third.winner;
  for (const auto& tie : third.ties) rep.tags[2] += "|" + tie;

  auto all = enumerate_types(q, m, d);
  int found = 0;
  long long last = -1;
  for (const auto& [type, n] : all) {
    if (n == last) continue;
    last = n;
    rep.top[found++] = n;
    if (found == 3) break;
  }
  std::ostringstream detail;
  if (found < 3) {
    detail << "fewer than 3 distinct union counts";
  } else {
    for (int i = 0; i < 3; ++i)
      if (rep.top[i] != rep.expected[i])
        detail << "rank " << (i + 1) << ": enumerated " << rep.top[i]
               << " != closed form " << rep.expected[i] << " (" << rep.tags[i]
               << "); ";
  }
  rep.detail = detail.str();
  rep.pass = rep.detail.empty();
  return rep;
}

}  // namespace grmw

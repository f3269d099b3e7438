#pragma once

// Expected invariants of the corpus ideals, written out row by row.

#include <initializer_list>
#include <tuple>
#include <vector>

#include "lyubeznik/invariants.hpp"

namespace reference {

using lyubeznik::BassTable;
using lyubeznik::LyubeznikTable;
using lyubeznik::Mask;

struct Entry {
  std::size_t p;
  std::size_t value;
  std::vector<std::vector<int>> alphas;  // 0/1 vectors
};

/// Entries naming the same (α, p) add up, which is how direct sums combine.
inline BassTable bass_of(int r, std::initializer_list<Entry> entries) {
  BassTable t{r, {}};
  for (const auto& e : entries) {
    for (const auto& v : e.alphas) {
      Mask alpha = 0;
      for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) alpha |= lyubeznik::bit(static_cast<unsigned>(i));
      auto& row = t.rows[alpha];
      if (row.size() <= e.p) row.resize(e.p + 1, 0);
      row[e.p] += e.value;
    }
  }
  return t;
}

inline LyubeznikTable lambda(unsigned n, unsigned d,
                             std::initializer_list<std::tuple<unsigned, unsigned, std::size_t>> entries) {
  LyubeznikTable t{n, d, std::vector<std::vector<std::size_t>>(d + 1, std::vector<std::size_t>(d + 1, 0))};
  for (const auto& [p, i, v] : entries) t.entries[p][i] = v;
  return t;
}

inline LyubeznikTable a4_table() { return lambda(4, 2, {{0, 1, 1}, {2, 2, 2}}); }
inline LyubeznikTable a5_table() { return lambda(5, 3, {{0, 2, 1}, {2, 3, 1}, {3, 3, 1}}); }

/// a_n for n ≥ 5: λ_{0,d−1} = λ_{2,d} = λ_{d,d} = 1 with d = n − 2.
inline LyubeznikTable banded_table(unsigned n) {
  const unsigned d = n - 2;
  return lambda(n, d, {{0, d - 1, 1}, {2, d, 1}, {d, d, 1}});
}

inline LyubeznikTable rp2_table_char0() { return lambda(6, 3, {{3, 3, 1}}); }
inline LyubeznikTable rp2_table_char2() { return lambda(6, 3, {{0, 2, 1}, {2, 3, 1}, {3, 3, 1}}); }

inline LyubeznikTable three_components_table() { return lambda(5, 2, {{0, 1, 1}, {2, 2, 2}}); }

inline BassTable three_components_bass(int r) {
  if (r == 3) {
    return bass_of(3, {{0, 1, {{1, 1, 0, 0, 1}, {0, 0, 1, 1, 1}}},
                       {1, 1, {{1, 1, 1, 0, 1}, {1, 1, 0, 1, 1}, {1, 0, 1, 1, 1}, {0, 1, 1, 1, 1}}},
                       {2, 2, {{1, 1, 1, 1, 1}}}});
  }
  return bass_of(4, {{0, 1, {{1, 1, 1, 1, 0}, {1, 1, 1, 1, 1}}}});
}

inline LyubeznikTable mixed_heights_table() { return lambda(5, 3, {{1, 2, 1}, {3, 3, 2}}); }

/// H^2 = H^2_{(x1,x4)} ⊕ H^2_{(x2,x5)}: two Gorenstein patterns, which
/// overlap at (x1,x2,x4,x5) in degree 2 and at m in degree 3.
inline BassTable mixed_heights_bass(int r) {
  if (r == 2) {
    return bass_of(2, {{0, 1, {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}}},
                       {1, 1, {{1, 1, 0, 1, 0}, {1, 0, 1, 1, 0}, {1, 0, 0, 1, 1},
                               {1, 1, 0, 0, 1}, {0, 1, 1, 0, 1}, {0, 1, 0, 1, 1}}},
                       {2, 1, {{1, 1, 1, 1, 0}, {1, 1, 0, 1, 1}, {1, 0, 1, 1, 1}}},
                       {2, 1, {{1, 1, 1, 0, 1}, {1, 1, 0, 1, 1}, {0, 1, 1, 1, 1}}},
                       {3, 2, {{1, 1, 1, 1, 1}}}});
  }
  return bass_of(3, {{0, 1, {{1, 1, 1, 0, 0}, {1, 1, 0, 1, 1}}}, {1, 1, {{1, 1, 1, 1, 1}}}});
}

inline BassTable mixed_heights_dual_bass(int r) {
  if (r == 2) {
    return bass_of(2, {{0, 1, {{1, 0, 0, 1, 0}, {0, 1, 0, 0, 1}}},
                       {1, 1, {{1, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 0, 1}}},
                       {2, 2, {{0, 0, 0, 0, 0}}}});
  }
  return bass_of(
      3, {{0, 1, {{1, 1, 1, 1, 1}}},
          {1, 1, {{1, 1, 0, 0, 1}, {1, 1, 0, 1, 0}, {0, 1, 1, 1, 1}, {1, 0, 1, 1, 1}}},
          {2, 1, {{1, 1, 0, 0, 0}, {1, 0, 0, 1, 0}, {1, 0, 0, 0, 1}, {0, 1, 0, 1, 0}, {0, 1, 0, 0, 1},
                  {0, 0, 1, 1, 1}}},
          {3, 1, {{1, 0, 0, 0, 0}, {0, 1, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 0, 0, 1}}},
          {4, 1, {{0, 0, 0, 0, 0}}}});
}

}  // namespace reference

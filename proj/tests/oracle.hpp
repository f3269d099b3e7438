#pragma once

// Brute-force reference computations. Nothing here calls into the library's
// algorithms: membership is tested generator by generator, complexes are
// enumerated subset by subset, and ranks come from a separate elimination.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include <gmpxx.h>

namespace oracle {

using Mask = std::uint32_t;

inline bool subset(Mask a, Mask b) { return (a & ~b) == 0; }
inline unsigned popcount(Mask a) { return static_cast<unsigned>(__builtin_popcount(a)); }

/// x^m ∈ (gens).
inline bool member(const std::vector<Mask>& gens, Mask m) {
  for (Mask g : gens) {
    if (subset(g, m)) return true;
  }
  return false;
}

/// x^m ∈ ∩ p_α: m meets every α.
inline bool in_intersection(const std::vector<Mask>& primes, Mask m) {
  for (Mask p : primes) {
    if ((p & m) == 0) return false;
  }
  return true;
}

/// Minimal masks of an up-closed predicate on {0,1}^n, sorted by (popcount, value).
inline std::vector<Mask> minimal_elements(unsigned n, const std::function<bool(Mask)>& in) {
  std::vector<Mask> out;
  for (Mask m = 0; m < (Mask{1} << n); ++m) {
    if (!in(m)) continue;
    bool minimal = true;
    for (unsigned i = 0; i < n && minimal; ++i) {
      if ((m >> i & 1U) && in(m & ~(Mask{1} << i))) minimal = false;
    }
    if (minimal) out.push_back(m);
  }
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    return popcount(a) != popcount(b) ? popcount(a) < popcount(b) : a < b;
  });
  return out;
}

/// Minimal primes: the minimal α whose variables kill every generator when set to 0.
inline std::vector<Mask> minimal_primes(unsigned n, const std::vector<Mask>& gens) {
  return minimal_elements(n, [&](Mask a) {
    for (Mask g : gens) {
      if ((g & a) == 0) return false;
    }
    return true;
  });
}

/// All faces inside `vertices` satisfying `is_face`.
inline std::vector<Mask> faces(Mask vertices, const std::function<bool(Mask)>& is_face) {
  std::vector<Mask> out;
  for (Mask s = vertices;; s = (s - 1) & vertices) {
    if (is_face(s)) out.push_back(s);
    if (s == 0) break;
  }
  return out;
}

/// Stanley–Reisner faces of I on [n]: x^σ ∉ I.
inline std::function<bool(Mask)> sr_face(const std::vector<Mask>& gens) {
  return [gens](Mask s) { return !member(gens, s); };
}

/// Faces of the Alexander dual of the Stanley–Reisner complex on [n]:
/// σ with [n]∖σ not a face of Δ, i.e. x^{[n]∖σ} ∈ I.
inline std::function<bool(Mask)> dual_face(unsigned n, const std::vector<Mask>& gens) {
  const Mask all = (Mask{1} << n) - 1;
  return [gens, all](Mask s) { return member(gens, all & ~s); };
}

/// Rank by Gaussian elimination, over Q when p = 0 and over F_p otherwise.
inline std::size_t rank(std::vector<std::vector<long>> a, std::uint32_t p) {
  const std::size_t rows = a.size();
  if (rows == 0) return 0;
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  if (p == 0) {
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
      std::size_t piv = r;
      while (piv < rows && m[piv][c] == 0) ++piv;
      if (piv == rows) continue;
      std::swap(m[piv], m[r]);
      for (std::size_t i = r + 1; i < rows; ++i) {
        if (m[i][c] == 0) continue;
        const mpq_class f = m[i][c] / m[r][c];
        for (std::size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
      }
      ++r;
    }
    return r;
  }
  const long q = static_cast<long>(p);
  for (auto& row : a)
    for (auto& x : row) x = ((x % q) + q) % q;
  auto inv = [q](long x) {
    long result = 1, base = x, e = q - 2;
    while (e) {
      if (e & 1) result = result * base % q;
      base = base * base % q;
      e >>= 1;
    }
    return result;
  };
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[r]);
    const long pinv = inv(a[r][c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const long f = a[i][c] * pinv % q;
      for (std::size_t j = c; j < cols; ++j) a[i][j] = ((a[i][j] - f * a[r][j]) % q + q) % q;
    }
    ++r;
  }
  return r;
}

/// dim H̃_q of the complex with the given face list (which must be closed
/// under subsets). An empty list is the void complex.
inline std::size_t reduced_homology(const std::vector<Mask>& face_list, int q, std::uint32_t p) {
  if (q < -1) return 0;
  std::map<unsigned, std::vector<Mask>> by_size;
  for (Mask f : face_list) by_size[popcount(f)].push_back(f);
  auto group = [&](int degree) -> std::vector<Mask> {
    if (degree < -1) return {};
    auto it = by_size.find(static_cast<unsigned>(degree + 1));
    return it == by_size.end() ? std::vector<Mask>{} : it->second;
  };
  // ∂_d : C_d → C_{d−1}.
  auto boundary_rank = [&](int d) -> std::size_t {
    const auto src = group(d);
    const auto dst = group(d - 1);
    if (src.empty() || dst.empty()) return 0;
    std::map<Mask, std::size_t> row_of;
    for (std::size_t i = 0; i < dst.size(); ++i) row_of[dst[i]] = i;
    std::vector<std::vector<long>> m(dst.size(), std::vector<long>(src.size(), 0));
    for (std::size_t j = 0; j < src.size(); ++j) {
      int sign = 1;
      for (unsigned v = 0; v < 32; ++v) {
        if (!(src[j] >> v & 1U)) continue;
        m[row_of.at(src[j] & ~(Mask{1} << v))][j] = sign;
        sign = -sign;
      }
    }
    return rank(std::move(m), p);
  };
  const std::size_t chains = group(q).size();
  return chains - boundary_rank(q) - boundary_rank(q + 1);
}

/// Hochster: β_{j,α}(I^∨) = dim H̃_{|α|−j−2} of the dual complex restricted to α.
inline std::size_t betti_of_dual(unsigned n, const std::vector<Mask>& gens, unsigned j, Mask alpha,
                                 std::uint32_t p) {
  if (alpha == 0) return 0;
  const auto is_face = dual_face(n, gens);
  const auto fs = faces(alpha, is_face);
  return reduced_homology(fs, static_cast<int>(popcount(alpha)) - static_cast<int>(j) - 2, p);
}

}  // namespace oracle

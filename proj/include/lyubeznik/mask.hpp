#pragma once

// Squarefree degrees α ∈ {0,1}^n packed into the low n bits of an integer.
// Bit i stands for the variable x_{i+1}.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "errors.hpp"

namespace lyubeznik {

using Mask = std::uint32_t;

inline constexpr unsigned max_variables = 24;

constexpr Mask bit(unsigned i) noexcept { return Mask{1} << i; }

constexpr Mask full_mask(unsigned n) noexcept { return n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1; }

constexpr unsigned weight(Mask a) noexcept { return static_cast<unsigned>(std::popcount(a)); }

constexpr bool contains_bit(Mask a, unsigned i) noexcept { return (a >> i) & 1U; }

/// α ≤ β componentwise.
constexpr bool is_subset(Mask a, Mask b) noexcept { return (a & ~b) == 0; }

/// β∖α: keep β_i where α_i = 0.
constexpr Mask set_minus(Mask b, Mask a) noexcept { return b & ~a; }

constexpr Mask complement(Mask a, unsigned n) noexcept { return full_mask(n) & ~a; }

/// Number of set bits of `a` strictly below position i.
constexpr unsigned weight_below(Mask a, unsigned i) noexcept { return weight(a & (bit(i) - 1)); }

/// Koszul sign: (−1)^{k−1} when α_i is the k-th nonzero component of α.
constexpr int koszul_sign(unsigned i, Mask a) noexcept { return weight_below(a, i) % 2 == 0 ? 1 : -1; }

/// Canonical order: by popcount, then by numeric value.
constexpr bool canonical_less(Mask a, Mask b) noexcept {
  const unsigned wa = weight(a);
  const unsigned wb = weight(b);
  return wa != wb ? wa < wb : a < b;
}

/// Lexicographic order of the sorted vertex tuples (for equal-size faces).
constexpr bool lex_less(Mask a, Mask b) noexcept {
  if (a == b) return false;
  const Mask diff = a ^ b;
  const Mask lowest = diff & (~diff + 1);
  if (weight(a) != weight(b)) return weight(a) < weight(b);
  return (a & lowest) != 0;
}

inline void sort_canonical(std::vector<Mask>& masks) {
  std::sort(masks.begin(), masks.end(), canonical_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
}

inline std::vector<unsigned> support(Mask a) {
  std::vector<unsigned> out;
  for (unsigned i = 0; a != 0; ++i, a >>= 1) {
    if (a & 1U) out.push_back(i);
  }
  return out;
}

inline void check_fits(Mask a, unsigned n) {
  if (!is_subset(a, full_mask(n))) {
    throw input_error("mask " + std::to_string(a) + " uses variables beyond n=" + std::to_string(n));
  }
}

inline void check_variable_count(unsigned n) {
  if (n < 1 || n > max_variables) {
    throw input_error("variable count n=" + std::to_string(n) + " outside [1, " +
                      std::to_string(max_variables) + "]");
  }
}

/// "x1*x3"; the empty mask renders as "1".
inline std::string to_monomial(Mask a) {
  if (a == 0) return "1";
  std::string out;
  for (unsigned i : support(a)) {
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(i + 1);
  }
  return out;
}

/// "(1,0,1,0)" in the α ∈ {0,1}^n notation.
inline std::string to_vector_string(Mask a, unsigned n) {
  std::string out = "(";
  for (unsigned i = 0; i < n; ++i) {
    if (i) out += ',';
    out += contains_bit(a, i) ? '1' : '0';
  }
  return out + ")";
}

/// "{1,3}".
inline std::string to_set_string(Mask a) {
  std::string out = "{";
  bool first = true;
  for (unsigned i : support(a)) {
    if (!first) out += ',';
    out += std::to_string(i + 1);
    first = false;
  }
  return out + "}";
}

inline std::vector<int> to_vector(Mask a, unsigned n) {
  std::vector<int> out(n);
  for (unsigned i = 0; i < n; ++i) out[i] = contains_bit(a, i) ? 1 : 0;
  return out;
}

/// Build a mask from 1-based variable indices.
inline Mask mask_of(std::initializer_list<unsigned> variables) {
  Mask m = 0;
  for (unsigned v : variables) m |= bit(v - 1);
  return m;
}

/// Build a mask from a 0/1 vector read left to right, e.g. {1,1,1,0,0}.
inline Mask mask_from_vector(std::initializer_list<int> alpha) {
  Mask m = 0;
  unsigned i = 0;
  for (int a : alpha) {
    if (a) m |= bit(i);
    ++i;
  }
  return m;
}

/// Pack the bits of `a` selected by `frame` into consecutive low bits.
constexpr Mask compress(Mask a, Mask frame) noexcept {
  Mask out = 0;
  unsigned k = 0;
  for (unsigned i = 0; frame >> i; ++i) {
    if (contains_bit(frame, i)) {
      if (contains_bit(a, i)) out |= bit(k);
      ++k;
    }
  }
  return out;
}

/// Inverse of compress.
constexpr Mask expand(Mask packed, Mask frame) noexcept {
  Mask out = 0;
  unsigned k = 0;
  for (unsigned i = 0; frame >> i; ++i) {
    if (contains_bit(frame, i)) {
      if (contains_bit(packed, k)) out |= bit(i);
      ++k;
    }
  }
  return out;
}

}  // namespace lyubeznik

#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "errors.hpp"
#include "mask.hpp"

namespace lyubeznik {

/// Drop every mask that contains another one from the list.
inline std::vector<Mask> inclusion_minimal(std::vector<Mask> masks) {
  sort_canonical(masks);
  std::vector<Mask> kept;
  for (Mask m : masks) {
    const bool absorbed =
        std::any_of(kept.begin(), kept.end(), [m](Mask k) { return is_subset(k, m); });
    if (!absorbed) kept.push_back(m);
  }
  return kept;
}

/// Drop every mask contained in another one from the list.
inline std::vector<Mask> inclusion_maximal(std::vector<Mask> masks) {
  sort_canonical(masks);
  std::vector<Mask> kept;
  for (auto it = masks.rbegin(); it != masks.rend(); ++it) {
    const Mask m = *it;
    const bool absorbed =
        std::any_of(kept.begin(), kept.end(), [m](Mask k) { return is_subset(m, k); });
    if (!absorbed) kept.push_back(m);
  }
  sort_canonical(kept);
  return kept;
}

/// Minimal sets meeting every member of `family` (Berge's incremental method).
/// An empty family has the single transversal ∅; a family containing ∅ has none.
inline std::vector<Mask> minimal_transversals(const std::vector<Mask>& family) {
  std::vector<Mask> current{0};
  for (Mask edge : family) {
    std::vector<Mask> next;
    for (Mask t : current) {
      if (t & edge) {
        next.push_back(t);
        continue;
      }
      for (unsigned v : support(edge)) next.push_back(t | bit(v));
    }
    current = inclusion_minimal(std::move(next));
    if (current.empty()) break;
  }
  return current;
}

/// A squarefree monomial ideal in k[x_1..x_n], stored by its minimal generators
/// in canonical order. No generators is the zero ideal; the generator 1 (mask 0)
/// is the unit ideal.
class MonomialIdeal {
 public:
  MonomialIdeal() = default;

  unsigned n() const noexcept { return n_; }
  const std::vector<Mask>& gens() const noexcept { return gens_; }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return !gens_.empty() && gens_.front() == 0; }
  bool is_proper_nonzero() const noexcept { return !is_zero() && !is_unit(); }

  /// x^m ∈ I.
  bool contains(Mask m) const noexcept {
    return std::any_of(gens_.begin(), gens_.end(), [m](Mask g) { return is_subset(g, m); });
  }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

  friend MonomialIdeal minimalize(unsigned n, const std::vector<Mask>& raw_gens);

 private:
  unsigned n_ = 0;
  std::vector<Mask> gens_;
};

inline MonomialIdeal minimalize(unsigned n, const std::vector<Mask>& raw_gens) {
  check_variable_count(n);
  for (Mask g : raw_gens) check_fits(g, n);
  MonomialIdeal ideal;
  ideal.n_ = n;
  ideal.gens_ = inclusion_minimal(raw_gens);
  return ideal;
}

inline void require_proper_nonzero(const MonomialIdeal& ideal, const char* what) {
  if (!ideal.is_proper_nonzero()) {
    throw domain_error(std::string(what) + " requires a proper nonzero ideal");
  }
}

/// ∩_j p_{α_j}: generated by the minimal transversals of the prime supports.
inline MonomialIdeal intersect_face_ideals(unsigned n, const std::vector<Mask>& primes) {
  check_variable_count(n);
  if (primes.empty()) throw input_error("intersection of face ideals needs at least one prime");
  for (Mask p : primes) {
    check_fits(p, n);
    if (p == 0) throw input_error("face ideal p_0 is the zero ideal");
  }
  return minimalize(n, minimal_transversals(primes));
}

/// Supports of the minimal primes p_α ⊇ I, canonically ordered.
inline std::vector<Mask> minimal_primes(const MonomialIdeal& ideal) {
  require_proper_nonzero(ideal, "minimal_primes");
  return minimal_transversals(ideal.gens());
}

/// I^∨: one generator x^α per minimal prime p_α of I.
inline MonomialIdeal alexander_dual(const MonomialIdeal& ideal) {
  return minimalize(ideal.n(), minimal_primes(ideal));
}

inline unsigned height(const MonomialIdeal& ideal) {
  const auto primes = minimal_primes(ideal);
  return weight(primes.front());
}

inline std::string to_string(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < ideal.gens().size(); ++k) {
    if (k) out += ", ";
    out += to_monomial(ideal.gens()[k]);
  }
  return out + ")";
}

}  // namespace lyubeznik

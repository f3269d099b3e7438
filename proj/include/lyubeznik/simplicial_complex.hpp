#pragma once

#include <algorithm>
#include <vector>

#include "ideal.hpp"
#include "mask.hpp"

namespace lyubeznik {

/// A simplicial complex on a vertex subset, stored by its facets.
///
/// The void complex has no faces at all; the irrelevant complex has only the
/// empty face. They are different objects with different reduced cohomology.
class SimplicialComplex {
 public:
  SimplicialComplex() = default;

  /// Complex generated by `faces` (any list; only maximal elements are kept).
  static SimplicialComplex generated_by(Mask vertices, std::vector<Mask> faces) {
    for (Mask f : faces) {
      if (!is_subset(f, vertices)) throw input_error("face outside the vertex set");
    }
    SimplicialComplex out;
    out.vertices_ = vertices;
    out.facets_ = inclusion_maximal(std::move(faces));
    return out;
  }

  static SimplicialComplex void_complex(Mask vertices) { return generated_by(vertices, {}); }
  static SimplicialComplex irrelevant(Mask vertices) { return generated_by(vertices, {0}); }
  static SimplicialComplex simplex(Mask vertices) { return generated_by(vertices, {vertices}); }

  Mask vertices() const noexcept { return vertices_; }
  const std::vector<Mask>& facets() const noexcept { return facets_; }

  bool is_void() const noexcept { return facets_.empty(); }
  bool is_irrelevant() const noexcept { return facets_.size() == 1 && facets_.front() == 0; }

  bool contains(Mask face) const noexcept {
    return std::any_of(facets_.begin(), facets_.end(),
                       [face](Mask f) { return is_subset(face, f); });
  }

  /// Largest face size minus one; −1 for the irrelevant complex, −2 when void.
  int dimension() const noexcept {
    if (is_void()) return -2;
    return static_cast<int>(weight(facets_.back())) - 1;
  }

  /// All faces with `size` vertices, in lexicographic order of vertex tuples.
  std::vector<Mask> faces_of_size(unsigned size) const {
    std::vector<Mask> out;
    for (Mask f : facets_) {
      if (weight(f) < size) continue;
      // Enumerate subsets of f with exactly `size` bits.
      for (Mask s = f;; s = (s - 1) & f) {
        if (weight(s) == size) out.push_back(s);
        if (s == 0) break;
      }
    }
    std::sort(out.begin(), out.end(), lex_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  /// Every vertex of the ambient set lies in every facet.
  bool is_cone_over(unsigned v) const noexcept {
    return !is_void() && std::all_of(facets_.begin(), facets_.end(),
                                     [v](Mask f) { return contains_bit(f, v); });
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  Mask vertices_ = 0;
  std::vector<Mask> facets_;
};

/// Δ with I = I_Δ: faces are the σ ⊆ [n] with x^σ ∉ I. Facets are the
/// complements of the minimal primes.
inline SimplicialComplex stanley_reisner(const MonomialIdeal& ideal) {
  const unsigned n = ideal.n();
  if (ideal.is_unit()) return SimplicialComplex::void_complex(full_mask(n));
  std::vector<Mask> facets;
  for (Mask p : minimal_transversals(ideal.gens())) facets.push_back(complement(p, n));
  return SimplicialComplex::generated_by(full_mask(n), std::move(facets));
}

/// Minimal non-faces of Δ inside its vertex set.
inline std::vector<Mask> minimal_nonfaces(const SimplicialComplex& complex) {
  std::vector<Mask> complements;
  for (Mask f : complex.facets()) complements.push_back(complex.vertices() & ~f);
  return minimal_transversals(complements);
}

/// I_Δ in k[x_1..x_n]; variables outside Δ's vertex set are generators.
inline MonomialIdeal ideal_of(const SimplicialComplex& complex, unsigned n) {
  std::vector<Mask> gens = minimal_nonfaces(complex);
  for (unsigned i = 0; i < n; ++i) {
    if (!contains_bit(complex.vertices(), i)) gens.push_back(bit(i));
  }
  return minimalize(n, gens);
}

/// Δ_α = {τ ∈ Δ : τ ⊆ α} on vertex set α.
inline SimplicialComplex restriction(const SimplicialComplex& complex, Mask alpha) {
  if (!is_subset(alpha, complex.vertices())) {
    throw input_error("restriction mask is not inside the vertex set");
  }
  std::vector<Mask> faces;
  for (Mask f : complex.facets()) faces.push_back(f & alpha);
  return SimplicialComplex::generated_by(alpha, std::move(faces));
}

/// link_α Δ = {τ : τ ∩ α = ∅, τ ∪ α ∈ Δ} on vertex set V∖α; void if α ∉ Δ.
inline SimplicialComplex link(const SimplicialComplex& complex, Mask alpha) {
  const Mask vertices = complex.vertices() & ~alpha;
  std::vector<Mask> faces;
  for (Mask f : complex.facets()) {
    if (is_subset(alpha, f)) faces.push_back(f & ~alpha);
  }
  return SimplicialComplex::generated_by(vertices, std::move(faces));
}

/// Γ^∨ = {σ ⊆ V : V∖σ ∉ Γ} on the same vertex set V.
inline SimplicialComplex complex_alexander_dual(const SimplicialComplex& complex) {
  const Mask vertices = complex.vertices();
  std::vector<Mask> facets;
  for (Mask nonface : minimal_nonfaces(complex)) facets.push_back(vertices & ~nonface);
  return SimplicialComplex::generated_by(vertices, std::move(facets));
}

}  // namespace lyubeznik

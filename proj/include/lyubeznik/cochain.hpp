#pragma once

// Reduced simplicial cochains over a field. Degree q holds the faces with q+1
// vertices; degree −1 is the empty face, so the irrelevant complex has
// H̃^{-1} = k and the void complex has no cochains at all.

#include <algorithm>
#include <cstddef>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "chain_complex.hpp"
#include "field.hpp"
#include "matrix.hpp"
#include "simplicial_complex.hpp"

namespace lyubeznik {

/// Faces of Γ grouped by size (index = size), each group in lex order.
inline std::vector<std::vector<Mask>> faces_by_size(const SimplicialComplex& complex) {
  if (complex.is_void()) return {};
  const unsigned top = static_cast<unsigned>(complex.dimension() + 1);
  std::vector<std::unordered_set<Mask>> seen(top + 1);
  for (Mask facet : complex.facets()) {
    for (Mask s = facet;; s = (s - 1) & facet) {
      seen[weight(s)].insert(s);
      if (s == 0) break;
    }
  }
  std::vector<std::vector<Mask>> out(top + 1);
  for (unsigned k = 0; k <= top; ++k) {
    out[k].assign(seen[k].begin(), seen[k].end());
    std::sort(out[k].begin(), out[k].end(), lex_less);
  }
  return out;
}

template <class F>
class CochainComplex {
 public:
  CochainComplex(const SimplicialComplex& complex, F field)
      : complex_(complex), field_(std::move(field)), faces_(faces_by_size(complex)) {
    index_.resize(faces_.size());
    for (std::size_t k = 0; k < faces_.size(); ++k) {
      for (std::size_t j = 0; j < faces_[k].size(); ++j) index_[k].emplace(faces_[k][j], j);
    }
    // Chain-complex view: position p holds degree top − p.
    std::vector<std::size_t> dims;
    std::vector<Matrix<F>> maps;
    for (int q = top(); q >= -1; --q) dims.push_back(faces_of_degree(q).size());
    for (int q = top() - 1; q >= -1; --q) maps.push_back(coboundary(q));
    chain_.emplace_back(field_, std::move(dims), std::move(maps));
  }

  const SimplicialComplex& complex() const noexcept { return complex_; }
  const F& field() const noexcept { return field_; }

  /// Largest nonzero degree; −2 for the void complex.
  int top() const noexcept { return static_cast<int>(faces_.size()) - 2; }

  const std::vector<Mask>& faces_of_degree(int q) const {
    static const std::vector<Mask> none;
    if (q < -1 || q > top()) return none;
    return faces_[static_cast<std::size_t>(q + 1)];
  }

  /// Position of `face` in its degree's basis, or −1 if it is not a face.
  long face_index(Mask face) const {
    const unsigned k = weight(face);
    if (k >= index_.size()) return -1;
    const auto it = index_[k].find(face);
    return it == index_[k].end() ? -1 : static_cast<long>(it->second);
  }

  /// δ^q : C^q → C^{q+1}; dropping the k-th smallest vertex contributes (−1)^k.
  Matrix<F> coboundary(int q) const {
    const auto& src = faces_of_degree(q);
    const auto& dst = faces_of_degree(q + 1);
    Matrix<F> d(field_, dst.size(), src.size());
    for (std::size_t row = 0; row < dst.size(); ++row) {
      unsigned k = 0;
      for (unsigned v : support(dst[row])) {
        const long col = face_index(dst[row] & ~bit(v));
        d(row, static_cast<std::size_t>(col)) = field_.from_int(k % 2 == 0 ? 1 : -1);
        ++k;
      }
    }
    return d;
  }

  /// The cochain complex as a chain complex (degrees top … −1 at positions 0 …).
  const VectorSpaceComplex<F>& as_chain_complex() const { return chain_.front(); }

  std::size_t cohomology_dim(int q) const {
    if (q < -1 || q > top()) return 0;
    return homology_dims(as_chain_complex())[static_cast<std::size_t>(top() - q)];
  }

  /// Cocycle representatives and class coordinates in degree q.
  HomologyBasis<F> cohomology_basis(int q) const {
    if (q < -1 || q > top()) return {Matrix<F>(field_, faces_of_degree(q).size(), 0),
                                     Matrix<F>(field_, 0, faces_of_degree(q).size())};
    return homology_basis(as_chain_complex(), static_cast<std::size_t>(top() - q));
  }

 private:
  SimplicialComplex complex_;
  F field_;
  std::vector<std::vector<Mask>> faces_;
  std::vector<std::unordered_map<Mask, std::size_t>> index_;
  std::vector<VectorSpaceComplex<F>> chain_;  // exactly one; vector avoids default construction
};

inline std::size_t reduced_cohomology_dim(const SimplicialComplex& complex, int q,
                                          const FieldSpec& spec) {
  if (q < -1) return 0;
  return visit_field(spec, [&](auto field) {
    return CochainComplex<decltype(field)>(complex, field).cohomology_dim(q);
  });
}

/// Reduced homology through the chain complex (transposed boundaries).
inline std::size_t reduced_homology_dim(const SimplicialComplex& complex, int q,
                                        const FieldSpec& spec) {
  if (q < -1) return 0;
  return visit_field(spec, [&](auto field) -> std::size_t {
    const CochainComplex<decltype(field)> cochains(complex, field);
    if (q > cochains.top()) return 0;
    const auto chains = transpose_reverse(cochains.as_chain_complex());
    return homology_dims(chains)[static_cast<std::size_t>(q + 1)];
  });
}

inline void require_subcomplex(const SimplicialComplex& small, const SimplicialComplex& big) {
  if (!is_subset(small.vertices(), big.vertices())) {
    throw input_error("subcomplex vertex set is not contained in the ambient vertex set");
  }
  for (Mask f : small.facets()) {
    if (!big.contains(f)) throw input_error("not a subcomplex: face " + to_set_string(f));
  }
}

/// Restriction of cochains from big to small, one matrix per degree −1 … big.top().
template <class F>
std::vector<Matrix<F>> restriction_cochain_map(const CochainComplex<F>& small,
                                               const CochainComplex<F>& big) {
  require_subcomplex(small.complex(), big.complex());
  const F& f = big.field();
  std::vector<Matrix<F>> maps;
  for (int q = -1; q <= big.top(); ++q) {
    const auto& rows = small.faces_of_degree(q);
    Matrix<F> m(f, rows.size(), big.faces_of_degree(q).size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
      m(r, static_cast<std::size_t>(big.face_index(rows[r]))) = f.one();
    }
    maps.push_back(std::move(m));
  }
  for (int q = -1; q < big.top(); ++q) {
    const auto lhs = multiply(small.coboundary(q), maps[static_cast<std::size_t>(q + 1)]);
    const auto rhs = multiply(maps[static_cast<std::size_t>(q + 2)], big.coboundary(q));
    if (!(lhs == rhs)) throw contract_error("cochain restriction does not commute");
  }
  return maps;
}

/// H̃^q(big) → H̃^q(small) induced by restriction, given precomputed bases.
template <class F>
Matrix<F> induced_cohomology_map(const CochainComplex<F>& small, const HomologyBasis<F>& small_basis,
                                 const CochainComplex<F>& big, const HomologyBasis<F>& big_basis,
                                 int q) {
  const auto& faces = small.faces_of_degree(q);
  std::vector<std::size_t> rows;
  rows.reserve(faces.size());
  for (Mask face : faces) {
    const long at = big.face_index(face);
    if (at < 0) throw input_error("not a subcomplex: face " + to_set_string(face));
    rows.push_back(static_cast<std::size_t>(at));
  }
  return multiply(small_basis.coordinates, select_rows(big_basis.representatives, rows));
}

template <class F>
Matrix<F> induced_cohomology_map(const SimplicialComplex& small, const SimplicialComplex& big, int q,
                                 const F& field) {
  require_subcomplex(small, big);
  const CochainComplex<F> cs(small, field);
  const CochainComplex<F> cb(big, field);
  return induced_cohomology_map(cs, cs.cohomology_basis(q), cb, cb.cohomology_basis(q), q);
}

}  // namespace lyubeznik

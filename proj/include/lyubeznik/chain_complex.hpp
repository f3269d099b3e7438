#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "errors.hpp"
#include "matrix.hpp"

namespace lyubeznik {

/// 0 ← C_0 ← C_1 ← … ← C_m ← 0 with maps[p] : C_{p+1} → C_p.
template <class F>
class VectorSpaceComplex {
 public:
  VectorSpaceComplex(F field, std::vector<std::size_t> dims, std::vector<Matrix<F>> maps)
      : field_(std::move(field)), dims_(std::move(dims)), maps_(std::move(maps)) {
    const std::size_t expected = dims_.empty() ? 0 : dims_.size() - 1;
    if (maps_.size() != expected) throw contract_error("complex needs one map between each pair");
    for (std::size_t p = 0; p < maps_.size(); ++p) {
      if (maps_[p].rows() != dims_[p] || maps_[p].cols() != dims_[p + 1]) {
        throw contract_error("map " + std::to_string(p) + " has the wrong shape");
      }
    }
    for (std::size_t p = 0; p + 1 < maps_.size(); ++p) {
      if (!multiply(maps_[p], maps_[p + 1]).is_zero()) {
        throw contract_error("d∘d ≠ 0 at position " + std::to_string(p + 1));
      }
    }
  }

  const F& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return dims_.size(); }
  const std::vector<std::size_t>& dims() const noexcept { return dims_; }
  const std::vector<Matrix<F>>& maps() const noexcept { return maps_; }

  /// The differential leaving position p (zero map to nothing when p = 0).
  Matrix<F> outgoing(std::size_t p) const {
    return p == 0 ? Matrix<F>(field_, 0, dims_[0]) : maps_[p - 1];
  }
  /// The differential arriving at position p.
  Matrix<F> incoming(std::size_t p) const {
    return p + 1 < dims_.size() ? maps_[p] : Matrix<F>(field_, dims_[p], 0);
  }

 private:
  F field_;
  std::vector<std::size_t> dims_;
  std::vector<Matrix<F>> maps_;
};

template <class F>
std::vector<std::size_t> homology_dims(const VectorSpaceComplex<F>& c) {
  const std::size_t m = c.length();
  std::vector<std::size_t> ranks(m > 0 ? m - 1 : 0);
  for (std::size_t p = 0; p < ranks.size(); ++p) ranks[p] = rank(c.maps()[p]);
  std::vector<std::size_t> h(m);
  for (std::size_t p = 0; p < m; ++p) {
    const std::size_t out = p == 0 ? 0 : ranks[p - 1];
    const std::size_t in = p < ranks.size() ? ranks[p] : 0;
    h[p] = c.dims()[p] - out - in;
  }
  return h;
}

/// Homology of one position in a fixed basis: cycles `representatives`
/// (one column per class) and a functional `coordinates` sending any cycle to
/// the coordinates of its class.
template <class F>
struct HomologyBasis {
  Matrix<F> representatives;
  Matrix<F> coordinates;

  std::size_t dim() const { return representatives.cols(); }
};

/// Deterministic homology basis at position p: the boundary columns come first,
/// then kernel vectors extend them, then unit vectors complete a basis of C_p.
template <class F>
HomologyBasis<F> homology_basis(const VectorSpaceComplex<F>& c, std::size_t p) {
  const F& f = c.field();
  const std::size_t dim = c.dims().at(p);
  const Matrix<F> boundaries = c.incoming(p);
  const Matrix<F> cycles = kernel_basis(c.outgoing(p));
  const Matrix<F> stacked = hstack(hstack(boundaries, cycles), Matrix<F>::identity(f, dim));
  const auto pivots = rref(stacked).pivots;

  const std::size_t b = boundaries.cols();
  const std::size_t z = cycles.cols();
  std::vector<std::size_t> class_slots;
  for (std::size_t k = 0; k < pivots.size(); ++k) {
    if (pivots[k] >= b && pivots[k] < b + z) class_slots.push_back(k);
  }
  const Matrix<F> change = select_columns(stacked, pivots);
  const Matrix<F> coords_all = inverse(change);

  std::vector<std::size_t> rep_cols;
  for (std::size_t k : class_slots) rep_cols.push_back(pivots[k]);
  return {select_columns(stacked, rep_cols), select_rows(coords_all, class_slots)};
}

/// Degreewise maps f_p : C_p → D_p.
template <class F>
struct ChainMap {
  std::vector<Matrix<F>> components;
};

template <class F>
void check_chain_map(const VectorSpaceComplex<F>& source, const VectorSpaceComplex<F>& target,
                     const ChainMap<F>& f) {
  if (source.length() != target.length() || f.components.size() != source.length()) {
    throw contract_error("chain map length mismatch");
  }
  for (std::size_t p = 0; p < source.length(); ++p) {
    const auto& m = f.components[p];
    if (m.rows() != target.dims()[p] || m.cols() != source.dims()[p]) {
      throw contract_error("chain map component " + std::to_string(p) + " has the wrong shape");
    }
  }
  for (std::size_t p = 0; p + 1 < source.length(); ++p) {
    const auto lhs = multiply(target.maps()[p], f.components[p + 1]);
    const auto rhs = multiply(f.components[p], source.maps()[p]);
    if (!(lhs == rhs)) {
      throw contract_error("chain map does not commute at position " + std::to_string(p));
    }
  }
}

/// H_p(f) in the bases chosen by homology_basis.
template <class F>
Matrix<F> induced_map_on_homology(const VectorSpaceComplex<F>& source,
                                  const VectorSpaceComplex<F>& target, const ChainMap<F>& f,
                                  std::size_t p) {
  check_chain_map(source, target, f);
  const auto hs = homology_basis(source, p);
  const auto ht = homology_basis(target, p);
  return multiply(ht.coordinates, multiply(f.components[p], hs.representatives));
}

/// Positions reversed, maps transposed: the dual complex.
template <class F>
VectorSpaceComplex<F> transpose_reverse(const VectorSpaceComplex<F>& c) {
  const std::size_t m = c.length();
  std::vector<std::size_t> dims(c.dims().rbegin(), c.dims().rend());
  std::vector<Matrix<F>> maps;
  for (std::size_t p = 0; p + 1 < m; ++p) maps.push_back(transpose(c.maps()[m - 2 - p]));
  return {c.field(), std::move(dims), std::move(maps)};
}

inline long euler_characteristic(const std::vector<std::size_t>& dims) {
  long chi = 0;
  for (std::size_t p = 0; p < dims.size(); ++p) {
    chi += (p % 2 == 0 ? 1 : -1) * static_cast<long>(dims[p]);
  }
  return chi;
}

}  // namespace lyubeznik

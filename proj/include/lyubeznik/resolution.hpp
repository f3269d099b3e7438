#pragma once

// Z^n-graded free complexes over k[x_1..x_n] with squarefree degrees. An entry
// of a differential is a scalar c standing for c·x^{deg(col) − deg(row)}, so
// only the scalar is stored. Minimal resolutions come from cancelling unit
// (equal-degree) entries of the Taylor complex.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "chain_complex.hpp"
#include "errors.hpp"
#include "ideal.hpp"
#include "mask.hpp"
#include "matrix.hpp"

namespace lyubeznik {

inline constexpr std::size_t max_taylor_generators = 20;

/// Sparse matrix kept both by row and by column.
template <class F>
class SparseMatrix {
 public:
  using scalar = typename F::scalar;

  SparseMatrix(std::size_t rows, std::size_t cols) : by_row_(rows), by_col_(cols) {}

  std::size_t rows() const noexcept { return by_row_.size(); }
  std::size_t cols() const noexcept { return by_col_.size(); }

  const std::map<std::size_t, scalar>& row(std::size_t r) const { return by_row_[r]; }
  const std::map<std::size_t, scalar>& col(std::size_t c) const { return by_col_[c]; }

  /// Store v at (r, c); a zero erases the entry.
  void set(const F& f, std::size_t r, std::size_t c, const scalar& v) {
    if (f.is_zero(v)) {
      by_row_[r].erase(c);
      by_col_[c].erase(r);
    } else {
      by_row_[r].insert_or_assign(c, v);
      by_col_[c].insert_or_assign(r, v);
    }
  }

  std::optional<scalar> get(std::size_t r, std::size_t c) const {
    const auto it = by_row_[r].find(c);
    if (it == by_row_[r].end()) return std::nullopt;
    return it->second;
  }

  void clear_row(std::size_t r) {
    for (const auto& [c, v] : by_row_[r]) by_col_[c].erase(r);
    by_row_[r].clear();
  }
  void clear_col(std::size_t c) {
    for (const auto& [r, v] : by_col_[c]) by_row_[r].erase(c);
    by_col_[c].clear();
  }

  std::size_t nonzeros() const {
    std::size_t total = 0;
    for (const auto& r : by_row_) total += r.size();
    return total;
  }

 private:
  std::vector<std::map<std::size_t, scalar>> by_row_;
  std::vector<std::map<std::size_t, scalar>> by_col_;
};

/// 0 ← F_0 ← F_1 ← … with differentials[j] : F_{j+1} → F_j.
template <class F>
class GradedFreeComplex {
 public:
  GradedFreeComplex(unsigned n, F field, std::vector<std::vector<Mask>> degrees,
                    std::vector<SparseMatrix<F>> differentials)
      : n_(n), field_(std::move(field)), degrees_(std::move(degrees)), d_(std::move(differentials)) {
    if (d_.size() + 1 != degrees_.size() && !(degrees_.empty() && d_.empty())) {
      throw contract_error("graded complex needs one differential between consecutive terms");
    }
    for (std::size_t j = 0; j < d_.size(); ++j) {
      if (d_[j].rows() != degrees_[j].size() || d_[j].cols() != degrees_[j + 1].size()) {
        throw contract_error("graded differential " + std::to_string(j) + " has the wrong shape");
      }
    }
  }

  unsigned n() const noexcept { return n_; }
  const F& field() const noexcept { return field_; }
  std::size_t length() const noexcept { return degrees_.size(); }
  const std::vector<std::vector<Mask>>& degrees() const noexcept { return degrees_; }
  const std::vector<SparseMatrix<F>>& differentials() const noexcept { return d_; }

  std::size_t rank_of(std::size_t j) const { return j < degrees_.size() ? degrees_[j].size() : 0; }

  /// Entries sit only where deg(row) ≤ deg(col), and d∘d = 0 scalar-wise
  /// (all products along a path carry the same monomial).
  void verify() const {
    for (std::size_t j = 0; j < d_.size(); ++j) {
      for (std::size_t c = 0; c < d_[j].cols(); ++c) {
        for (const auto& [r, v] : d_[j].col(c)) {
          if (!is_subset(degrees_[j][r], degrees_[j + 1][c])) {
            throw contract_error("graded entry violates divisibility");
          }
        }
      }
    }
    for (std::size_t j = 0; j + 1 < d_.size(); ++j) {
      for (std::size_t z = 0; z < d_[j + 1].cols(); ++z) {
        std::map<std::size_t, typename F::scalar> sum;
        for (const auto& [y, b] : d_[j + 1].col(z)) {
          for (const auto& [x, a] : d_[j].col(y)) {
            auto it = sum.find(x);
            const auto term = field_.mul(a, b);
            if (it == sum.end()) {
              sum.emplace(x, term);
            } else {
              it->second = field_.add(it->second, term);
            }
          }
        }
        for (const auto& [x, v] : sum) {
          if (!field_.is_zero(v)) {
            throw contract_error("graded d∘d ≠ 0 at position " + std::to_string(j + 1));
          }
        }
      }
    }
  }

  /// No unit (equal-degree) entries remain.
  bool is_minimal() const {
    for (std::size_t j = 0; j < d_.size(); ++j) {
      for (std::size_t c = 0; c < d_[j].cols(); ++c) {
        for (const auto& [r, v] : d_[j].col(c)) {
          if (degrees_[j][r] == degrees_[j + 1][c]) return false;
        }
      }
    }
    return true;
  }

 private:
  unsigned n_;
  F field_;
  std::vector<std::vector<Mask>> degrees_;
  std::vector<SparseMatrix<F>> d_;
};

/// Taylor resolution of J: basis e_S for nonempty subsets S of the generators,
/// at position |S| − 1 and in degree lcm(S); d(e_S) = Σ_k (−1)^k e_{S∖s_k}.
template <class F>
GradedFreeComplex<F> taylor_complex(const MonomialIdeal& ideal, const F& field) {
  require_proper_nonzero(ideal, "taylor_complex");
  const auto& gens = ideal.gens();
  const std::size_t q = gens.size();
  if (q > max_taylor_generators) {
    throw resource_error("Taylor complex needs " + std::to_string(q) +
                         " generators; the cap is " + std::to_string(max_taylor_generators));
  }
  std::vector<std::vector<std::uint32_t>> subsets(q);
  for (std::uint32_t s = 1; s < (std::uint32_t{1} << q); ++s) subsets[weight(s) - 1].push_back(s);
  std::vector<std::vector<Mask>> degrees(q);
  std::vector<std::map<std::uint32_t, std::size_t>> index(q);
  for (std::size_t j = 0; j < q; ++j) {
    for (std::size_t k = 0; k < subsets[j].size(); ++k) {
      Mask lcm = 0;
      for (unsigned g : support(subsets[j][k])) lcm |= gens[g];
      degrees[j].push_back(lcm);
      index[j].emplace(subsets[j][k], k);
    }
  }
  std::vector<SparseMatrix<F>> d;
  for (std::size_t j = 0; j + 1 < q; ++j) {
    SparseMatrix<F> m(subsets[j].size(), subsets[j + 1].size());
    for (std::size_t c = 0; c < subsets[j + 1].size(); ++c) {
      const std::uint32_t s = subsets[j + 1][c];
      unsigned k = 0;
      for (unsigned g : support(s)) {
        m.set(field, index[j].at(s & ~bit(g)), c, field.from_int(k % 2 == 0 ? 1 : -1));
        ++k;
      }
    }
    d.push_back(std::move(m));
  }
  GradedFreeComplex<F> out(ideal.n(), field, std::move(degrees), std::move(d));
  out.verify();
  return out;
}

enum class CancellationOrder { forward, reverse };

/// Cancel unit entries until none is left. Forward order takes the lowest
/// position and the least (row, col) first; reverse takes the highest
/// position and the greatest (row, col).
template <class F>
GradedFreeComplex<F> minimize(const GradedFreeComplex<F>& input,
                              CancellationOrder order = CancellationOrder::forward) {
  const F& f = input.field();
  auto degrees = input.degrees();
  auto d = input.differentials();
  const std::size_t m = degrees.size();
  std::vector<std::vector<bool>> alive(m);
  for (std::size_t j = 0; j < m; ++j) alive[j].assign(degrees[j].size(), true);

  using Unit = std::tuple<std::size_t, std::size_t, std::size_t>;
  std::set<Unit> units;
  auto is_unit = [&](std::size_t j, std::size_t r, std::size_t c) {
    return degrees[j][r] == degrees[j + 1][c];
  };
  for (std::size_t j = 0; j < d.size(); ++j) {
    for (std::size_t c = 0; c < d[j].cols(); ++c) {
      for (const auto& [r, v] : d[j].col(c)) {
        if (is_unit(j, r, c)) units.emplace(j, r, c);
      }
    }
  }
  auto forget_row = [&](std::size_t j, std::size_t r) {
    for (const auto& [c, v] : d[j].row(r)) units.erase({j, r, c});
    d[j].clear_row(r);
  };
  auto forget_col = [&](std::size_t j, std::size_t c) {
    for (const auto& [r, v] : d[j].col(c)) units.erase({j, r, c});
    d[j].clear_col(c);
  };

  while (!units.empty()) {
    const auto [j, r, c] = order == CancellationOrder::forward ? *units.begin() : *units.rbegin();
    const auto pivot = *d[j].get(r, c);
    const auto column = d[j].col(c);
    const auto row = d[j].row(r);
    const auto inv = f.inv(pivot);
    for (const auto& [x, dxc] : column) {
      if (x == r) continue;
      const auto factor = f.mul(dxc, inv);
      for (const auto& [y, dry] : row) {
        if (y == c) continue;
        const auto old = d[j].get(x, y);
        const auto value = f.sub(old ? *old : f.zero(), f.mul(factor, dry));
        d[j].set(f, x, y, value);
        if (is_unit(j, x, y)) {
          if (f.is_zero(value)) {
            units.erase({j, x, y});
          } else {
            units.emplace(j, x, y);
          }
        }
      }
    }
    forget_row(j, r);
    forget_col(j, c);
    if (j > 0) forget_col(j - 1, r);
    if (j + 1 < d.size()) forget_row(j + 1, c);
    alive[j][r] = false;
    alive[j + 1][c] = false;
  }

  // Compact the surviving basis, keeping the original relative order.
  std::vector<std::vector<std::size_t>> renumber(m);
  std::vector<std::vector<Mask>> kept_degrees(m);
  for (std::size_t j = 0; j < m; ++j) {
    renumber[j].assign(degrees[j].size(), 0);
    for (std::size_t k = 0; k < degrees[j].size(); ++k) {
      if (!alive[j][k]) continue;
      renumber[j][k] = kept_degrees[j].size();
      kept_degrees[j].push_back(degrees[j][k]);
    }
  }
  std::size_t length = m;
  while (length > 0 && kept_degrees[length - 1].empty()) --length;
  kept_degrees.resize(length);
  std::vector<SparseMatrix<F>> kept_d;
  for (std::size_t j = 0; j + 1 < length; ++j) {
    SparseMatrix<F> s(kept_degrees[j].size(), kept_degrees[j + 1].size());
    for (std::size_t c = 0; c < degrees[j + 1].size(); ++c) {
      if (!alive[j + 1][c]) continue;
      for (const auto& [r, v] : d[j].col(c)) s.set(f, renumber[j][r], renumber[j + 1][c], v);
    }
    kept_d.push_back(std::move(s));
  }
  GradedFreeComplex<F> out(input.n(), f, std::move(kept_degrees), std::move(kept_d));
  out.verify();
  return out;
}

/// β_{j,α}: basis counts of the minimal resolution, keyed by (j, α).
using BettiTable = std::map<std::pair<std::size_t, Mask>, std::size_t>;

template <class F>
BettiTable betti_table(const GradedFreeComplex<F>& minimal) {
  BettiTable out;
  for (std::size_t j = 0; j < minimal.length(); ++j) {
    for (Mask a : minimal.degrees()[j]) ++out[{j, a}];
  }
  return out;
}

template <class F>
GradedFreeComplex<F> minimal_resolution(const MonomialIdeal& ideal, const F& field,
                                        CancellationOrder order = CancellationOrder::forward) {
  return minimize(taylor_complex(ideal, field), order);
}

template <class F>
BettiTable betti_numbers(const MonomialIdeal& ideal, const F& field) {
  return betti_table(minimal_resolution(ideal, field));
}

/// Scalar data of the r-linear strand: K_j spans the basis elements at
/// position j in degrees of size j + r, sorted by degree (canonical order)
/// and then by position in the resolution.
template <class F>
struct StrandFrame {
  int r;
  std::vector<std::vector<Mask>> degrees;  // j = 0 … n − r
  VectorSpaceComplex<F> complex;           // maps[j] : K_{j+1} → K_j
};

template <class F>
StrandFrame<F> strand_frame(const GradedFreeComplex<F>& minimal, int r) {
  const F& f = minimal.field();
  const int n = static_cast<int>(minimal.n());
  const int top = n - r;
  if (r < 0 || top < 0) {
    return {r, {}, VectorSpaceComplex<F>(f, {}, {})};
  }
  const std::size_t levels = static_cast<std::size_t>(top) + 1;
  std::vector<std::vector<std::size_t>> members(levels);
  std::vector<std::vector<Mask>> degrees(levels);
  for (std::size_t j = 0; j < levels && j < minimal.length(); ++j) {
    const auto& degs = minimal.degrees()[j];
    for (std::size_t k = 0; k < degs.size(); ++k) {
      if (static_cast<int>(weight(degs[k])) == static_cast<int>(j) + r) members[j].push_back(k);
    }
    std::stable_sort(members[j].begin(), members[j].end(), [&](std::size_t a, std::size_t b) {
      return canonical_less(degs[a], degs[b]);
    });
    for (std::size_t k : members[j]) degrees[j].push_back(degs[k]);
  }
  std::vector<std::size_t> dims;
  for (const auto& level : members) dims.push_back(level.size());
  std::vector<Matrix<F>> maps;
  for (std::size_t j = 0; j + 1 < levels; ++j) {
    Matrix<F> m(f, members[j].size(), members[j + 1].size());
    if (j < minimal.differentials().size()) {
      const auto& d = minimal.differentials()[j];
      for (std::size_t a = 0; a < members[j].size(); ++a) {
        for (std::size_t b = 0; b < members[j + 1].size(); ++b) {
          if (const auto v = d.get(members[j][a], members[j + 1][b])) m(a, b) = *v;
        }
      }
    }
    maps.push_back(std::move(m));
  }
  return {r, std::move(degrees), VectorSpaceComplex<F>(f, std::move(dims), std::move(maps))};
}

/// The transposed frame: position p holds K_{n−r−p}.
template <class F>
VectorSpaceComplex<F> transposed_frame(const StrandFrame<F>& frame) {
  return transpose_reverse(frame.complex);
}

/// Lyubeznik numbers from linear strands: λ_{p,n−r} = dim H_p of the transposed
/// r-strand frame of I^∨. Returns table[p][i] for 0 ≤ p, i ≤ n.
template <class F>
std::vector<std::vector<std::size_t>> lyubeznik_via_strands(const MonomialIdeal& ideal,
                                                             const F& field) {
  const unsigned n = ideal.n();
  const auto minimal = minimal_resolution(alexander_dual(ideal), field);
  std::vector<std::vector<std::size_t>> table(n + 1, std::vector<std::size_t>(n + 1, 0));
  for (int r = 0; r <= static_cast<int>(n); ++r) {
    const auto frame = strand_frame(minimal, r);
    const auto h = homology_dims(transposed_frame(frame));
    for (std::size_t p = 0; p < h.size(); ++p) table[p][n - static_cast<unsigned>(r)] = h[p];
  }
  return table;
}

/// Largest j ≥ 1 where some strand frame of the minimal resolution has
/// homology; 0 when every strand is exact in positive positions.
template <class F>
std::size_t linearity_defect(const MonomialIdeal& ideal, const F& field) {
  const auto minimal = minimal_resolution(ideal, field);
  std::size_t ld = 0;
  for (int r = 0; r <= static_cast<int>(ideal.n()); ++r) {
    const auto h = homology_dims(strand_frame(minimal, r).complex);
    for (std::size_t j = 1; j < h.size(); ++j) {
      if (h[j] != 0) ld = std::max(ld, j);
    }
  }
  return ld;
}

}  // namespace lyubeznik

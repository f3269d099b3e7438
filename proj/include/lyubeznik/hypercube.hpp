#pragma once

// The n-hypercube of H^r_I(R): vertex spaces M_α = H̃^{r−2}((Δ^∨)_α), where
// Δ^∨ is the Alexander dual of the Stanley–Reisner complex of I and (Δ^∨)_α
// its restriction to α; edges u_{α,i}: M_α → M_{α+ε_i} are transposes of the
// cohomology restriction maps. M_0 = 0 by convention.

#include <algorithm>
#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "chain_complex.hpp"
#include "cochain.hpp"
#include "ideal.hpp"
#include "mask.hpp"
#include "parallel.hpp"
#include "simplicial_complex.hpp"

namespace lyubeznik {

template <class F>
class Hypercube {
 public:
  using EdgeKey = std::pair<Mask, unsigned>;

  Hypercube(unsigned n, int r, F field) : n_(n), r_(r), field_(std::move(field)) {}

  unsigned n() const noexcept { return n_; }
  int r() const noexcept { return r_; }
  const F& field() const noexcept { return field_; }

  /// Nonzero vertex dimensions only.
  const std::map<Mask, std::size_t>& vertex_dims() const noexcept { return dims_; }
  const std::map<EdgeKey, Matrix<F>>& edges() const noexcept { return edges_; }

  std::size_t dim(Mask alpha) const {
    const auto it = dims_.find(alpha);
    return it == dims_.end() ? 0 : it->second;
  }

  bool is_zero() const noexcept { return dims_.empty(); }

  /// u_{α,i}; an explicit zero matrix when either end vanishes or no map was stored.
  Matrix<F> edge(Mask alpha, unsigned i) const {
    const auto it = edges_.find({alpha, i});
    if (it != edges_.end()) return it->second;
    return Matrix<F>(field_, dim(alpha | bit(i)), dim(alpha));
  }

  void set_dim(Mask alpha, std::size_t d) {
    check_fits(alpha, n_);
    if (d == 0) {
      dims_.erase(alpha);
    } else {
      dims_[alpha] = d;
    }
  }

  void set_edge(Mask alpha, unsigned i, Matrix<F> u) {
    if (contains_bit(alpha, i) || i >= n_) throw contract_error("edge direction already set in α");
    if (u.rows() != dim(alpha | bit(i)) || u.cols() != dim(alpha)) {
      throw contract_error("edge matrix shape does not match vertex dimensions");
    }
    if (u.is_zero()) {
      edges_.erase({alpha, i});
    } else {
      edges_.insert_or_assign({alpha, i}, std::move(u));
    }
  }

  /// Square commutativity on every 2-face; optionally also M_0 = 0 (false for
  /// Matlis duals, whose origin is the old top vertex).
  void verify(bool zero_origin = true) const {
    if (zero_origin && dim(0) != 0) throw contract_error("hypercube has a nonzero degree-0 piece");
    for (const auto& [alpha, d] : dims_) {
      for (unsigned i = 0; i < n_; ++i) {
        if (contains_bit(alpha, i)) continue;
        for (unsigned j = i + 1; j < n_; ++j) {
          if (contains_bit(alpha, j)) continue;
          const Mask top = alpha | bit(i) | bit(j);
          if (dim(top) == 0) continue;
          const auto via_i = multiply(edge(alpha | bit(i), j), edge(alpha, i));
          const auto via_j = multiply(edge(alpha | bit(j), i), edge(alpha, j));
          if (!(via_i == via_j)) {
            throw contract_error("hypercube square at " + to_set_string(alpha) + " in directions " +
                                 std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 " does not commute");
          }
        }
      }
    }
  }

 private:
  unsigned n_;
  int r_;
  F field_;
  std::map<Mask, std::size_t> dims_;
  std::map<EdgeKey, Matrix<F>> edges_;
};

/// Closure of `gens` under union, without the empty mask.
inline std::vector<Mask> union_closure(const std::vector<Mask>& gens) {
  std::set<Mask> closed(gens.begin(), gens.end());
  std::vector<Mask> frontier(gens.begin(), gens.end());
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask a : frontier) {
      for (Mask g : gens) {
        if (closed.insert(a | g).second) next.push_back(a | g);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Mask> out(closed.begin(), closed.end());
  sort_canonical(out);
  return out;
}

/// Builds the hypercubes of H^r_I(R) for one ideal, caching the cochain complexes
/// of (Δ^∨)_α. Only α that are unions of generators of I^∨ can carry cohomology;
/// at any other α some vertex lies in no minimal nonface, so (Δ^∨)_α is a cone.
template <class F>
class HypercubeBuilder {
 public:
  HypercubeBuilder(const MonomialIdeal& ideal, F field, unsigned threads = 1)
      : ideal_(ideal), field_(std::move(field)), threads_(threads) {
    require_proper_nonzero(ideal_, "build_hypercube");
    dual_complex_ = complex_alexander_dual(stanley_reisner(ideal_));
    lattice_ = union_closure(minimal_primes(ideal_));
    cochains_.resize(lattice_.size());
    parallel_for(lattice_.size(), threads_, [&](std::size_t k) {
      cochains_[k] = std::make_unique<CochainComplex<F>>(restriction(dual_complex_, lattice_[k]),
                                                         field_);
    });
    for (std::size_t k = 0; k < lattice_.size(); ++k) slot_.emplace(lattice_[k], k);
  }

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const F& field() const noexcept { return field_; }
  const std::vector<Mask>& lattice() const noexcept { return lattice_; }

  /// Δ^∨ on [n].
  const SimplicialComplex& dual_complex() const noexcept { return dual_complex_; }

  Hypercube<F> build(int r) const {
    const unsigned n = ideal_.n();
    if (r < 0 || r > static_cast<int>(n)) {
      throw input_error("cohomological degree r=" + std::to_string(r) + " outside [0, " +
                        std::to_string(n) + "]");
    }
    const int q = r - 2;
    std::vector<std::optional<HomologyBasis<F>>> bases(lattice_.size());
    parallel_for(lattice_.size(), threads_, [&](std::size_t k) {
      if (q < -1) return;
      auto basis = cochains_[k]->cohomology_basis(q);
      if (basis.dim() > 0) bases[k] = std::move(basis);
    });

    Hypercube<F> cube(n, r, field_);
    for (std::size_t k = 0; k < lattice_.size(); ++k) {
      if (bases[k]) cube.set_dim(lattice_[k], bases[k]->dim());
    }

    std::vector<std::pair<std::size_t, unsigned>> jobs;
    for (std::size_t k = 0; k < lattice_.size(); ++k) {
      if (!bases[k]) continue;
      for (unsigned i = 0; i < n; ++i) {
        if (contains_bit(lattice_[k], i)) continue;
        const auto it = slot_.find(lattice_[k] | bit(i));
        if (it != slot_.end() && bases[it->second]) jobs.emplace_back(k, i);
      }
    }
    std::vector<std::optional<Matrix<F>>> maps(jobs.size());
    parallel_for(jobs.size(), threads_, [&](std::size_t j) {
      const auto [k, i] = jobs[j];
      const std::size_t big = slot_.at(lattice_[k] | bit(i));
      const auto restrict_map = induced_cohomology_map(*cochains_[k], *bases[k], *cochains_[big],
                                                       *bases[big], q);
      maps[j] = transpose(restrict_map);
    });
    for (std::size_t j = 0; j < jobs.size(); ++j) {
      cube.set_edge(lattice_[jobs[j].first], jobs[j].second, std::move(*maps[j]));
    }
    cube.verify();
    return cube;
  }

 private:
  MonomialIdeal ideal_;
  F field_;
  unsigned threads_;
  SimplicialComplex dual_complex_;
  std::vector<Mask> lattice_;
  std::unordered_map<Mask, std::size_t> slot_;
  std::vector<std::unique_ptr<CochainComplex<F>>> cochains_;
};

template <class F>
Hypercube<F> build_hypercube(const MonomialIdeal& ideal, int r, const F& field,
                             unsigned threads = 1) {
  if (r < 0 || r > static_cast<int>(ideal.n())) {
    throw input_error("cohomological degree r=" + std::to_string(r) + " outside [0, " +
                      std::to_string(ideal.n()) + "]");
  }
  return HypercubeBuilder<F>(ideal, field, threads).build(r);
}

namespace detail {

/// One block of a differential: rows belong to `target`, columns to `source`.
template <class F>
struct Block {
  Mask target;
  Matrix<F> matrix;
};

/// Assemble a complex whose position p is ⊕ over keys[p] of spaces of size dim(key);
/// blocks(p, key) lists the nonzero blocks of maps[p] out of a column key at p+1.
template <class F, class DimFn, class BlockFn>
VectorSpaceComplex<F> assemble(const F& field, const std::vector<std::vector<Mask>>& keys,
                               DimFn&& dim, BlockFn&& blocks) {
  const std::size_t m = keys.size();
  std::vector<std::unordered_map<Mask, std::size_t>> offset(m);
  std::vector<std::size_t> dims(m, 0);
  for (std::size_t p = 0; p < m; ++p) {
    for (Mask key : keys[p]) {
      offset[p].emplace(key, dims[p]);
      dims[p] += dim(key);
    }
  }
  std::vector<Matrix<F>> maps;
  for (std::size_t p = 0; p + 1 < m; ++p) {
    Matrix<F> d(field, dims[p], dims[p + 1]);
    for (Mask key : keys[p + 1]) {
      const std::size_t col0 = offset[p + 1].at(key);
      for (const Block<F>& b : blocks(p, key)) {
        const std::size_t row0 = offset[p].at(b.target);
        for (std::size_t r = 0; r < b.matrix.rows(); ++r) {
          for (std::size_t c = 0; c < b.matrix.cols(); ++c) d(row0 + r, col0 + c) = b.matrix(r, c);
        }
      }
    }
    maps.push_back(std::move(d));
  }
  return {field, std::move(dims), std::move(maps)};
}

}  // namespace detail

/// M•: position p holds ⊕_{|α|=n−p} M_α; M_α → M_{α+ε_i} carries sign(i, α+ε_i)·u_{α,i}.
template <class F>
VectorSpaceComplex<F> main_complex(const Hypercube<F>& h) {
  const unsigned n = h.n();
  std::vector<std::vector<Mask>> keys(n + 1);
  for (const auto& [alpha, d] : h.vertex_dims()) keys[n - weight(alpha)].push_back(alpha);
  return detail::assemble(
      h.field(), keys, [&](Mask a) { return h.dim(a); },
      [&](std::size_t, Mask alpha) {
        std::vector<detail::Block<F>> out;
        for (unsigned i = 0; i < n; ++i) {
          if (contains_bit(alpha, i)) continue;
          const Mask beta = alpha | bit(i);
          if (h.dim(beta) == 0) continue;
          out.push_back({beta, scaled(h.edge(alpha, i), h.field().from_int(koszul_sign(i, beta)))});
        }
        return out;
      });
}

/// M•_{α,β}: position p holds ⊕_{γ≤α, |γ|=p} M_{β∖γ}. Leaving γ' in direction i
/// uses u_{β∖γ',i} when β_i = 1 and the identity when β_i = 0, signed by sign(i, γ').
template <class F>
VectorSpaceComplex<F> restricted_complex(const Hypercube<F>& h, Mask alpha, Mask beta) {
  check_fits(alpha, h.n());
  check_fits(beta, h.n());
  std::vector<std::vector<Mask>> keys(weight(alpha) + 1);
  for (Mask gamma = alpha;; gamma = (gamma - 1) & alpha) {
    if (h.dim(set_minus(beta, gamma)) > 0) keys[weight(gamma)].push_back(gamma);
    if (gamma == 0) break;
  }
  for (auto& level : keys) std::sort(level.begin(), level.end());
  return detail::assemble(
      h.field(), keys, [&](Mask g) { return h.dim(set_minus(beta, g)); },
      [&](std::size_t, Mask gamma_big) {
        std::vector<detail::Block<F>> out;
        const Mask source = set_minus(beta, gamma_big);
        for (unsigned i : support(gamma_big)) {
          const Mask gamma = gamma_big & ~bit(i);
          const Mask target = set_minus(beta, gamma);
          if (h.dim(target) == 0) continue;
          const auto sign = h.field().from_int(koszul_sign(i, gamma_big));
          if (contains_bit(beta, i)) {
            out.push_back({gamma, scaled(h.edge(source, i), sign)});
          } else {
            out.push_back({gamma, scaled(Matrix<F>::identity(h.field(), h.dim(source)), sign)});
          }
        }
        return out;
      });
}

/// M*•: position p holds ⊕_{|α|=p} M_α; M_α → M_{α−ε_i} is sign(i, α)·u_{α−ε_i,i}^T.
template <class F>
VectorSpaceComplex<F> dual_complex(const Hypercube<F>& h) {
  const unsigned n = h.n();
  std::vector<std::vector<Mask>> keys(n + 1);
  for (const auto& [alpha, d] : h.vertex_dims()) keys[weight(alpha)].push_back(alpha);
  return detail::assemble(
      h.field(), keys, [&](Mask a) { return h.dim(a); },
      [&](std::size_t, Mask alpha) {
        std::vector<detail::Block<F>> out;
        for (unsigned i : support(alpha)) {
          const Mask beta = alpha & ~bit(i);
          if (h.dim(beta) == 0) continue;
          out.push_back(
              {beta, scaled(transpose(h.edge(beta, i)), h.field().from_int(koszul_sign(i, alpha)))});
        }
        return out;
      });
}

/// The dual complex cut down to the vertices γ ⊇ α: position p holds
/// ⊕_{γ⊇α, |γ|=|α|+p} M_γ. Its homology gives the dual Bass numbers at p_α.
template <class F>
VectorSpaceComplex<F> upper_dual_complex(const Hypercube<F>& h, Mask alpha) {
  const unsigned n = h.n();
  check_fits(alpha, n);
  std::vector<std::vector<Mask>> keys(n - weight(alpha) + 1);
  for (const auto& [gamma, d] : h.vertex_dims()) {
    if (is_subset(alpha, gamma)) keys[weight(gamma) - weight(alpha)].push_back(gamma);
  }
  return detail::assemble(
      h.field(), keys, [&](Mask a) { return h.dim(a); },
      [&](std::size_t, Mask gamma) {
        std::vector<detail::Block<F>> out;
        for (unsigned i : support(set_minus(gamma, alpha))) {
          const Mask lower = gamma & ~bit(i);
          if (h.dim(lower) == 0) continue;
          out.push_back({lower, scaled(transpose(h.edge(lower, i)),
                                       h.field().from_int(koszul_sign(i, gamma)))});
        }
        return out;
      });
}

/// The |α|-hypercube {M_β}_{β≤α} with inherited maps, re-indexed so that the
/// k-th variable of α becomes variable k.
template <class F>
Hypercube<F> face_restricted_hypercube(const Hypercube<F>& h, Mask alpha) {
  check_fits(alpha, h.n());
  const std::vector<unsigned> vars = support(alpha);
  const unsigned m = static_cast<unsigned>(vars.size());
  Hypercube<F> out(m, h.r(), h.field());
  for (const auto& [beta, d] : h.vertex_dims()) {
    if (is_subset(beta, alpha)) out.set_dim(compress(beta, alpha), d);
  }
  for (const auto& [key, u] : h.edges()) {
    const auto [beta, i] = key;
    if (is_subset(beta | bit(i), alpha)) {
      const auto k = static_cast<unsigned>(std::find(vars.begin(), vars.end(), i) - vars.begin());
      out.set_edge(compress(beta, alpha), k, u);
    }
  }
  return out;
}

/// M*_β = M_{1−β} with u*_{β,i} = u_{1−β−ε_i,i}^T.
template <class F>
Hypercube<F> dual_hypercube(const Hypercube<F>& h) {
  const unsigned n = h.n();
  Hypercube<F> out(n, h.r(), h.field());
  for (const auto& [alpha, d] : h.vertex_dims()) out.set_dim(complement(alpha, n), d);
  for (const auto& [key, u] : h.edges()) {
    const auto [alpha, i] = key;
    // u : M_α → M_{α+ε_i} dualizes to M*_{1−α−ε_i} → M*_{1−α}.
    out.set_edge(complement(alpha | bit(i), n), i, transpose(u));
  }
  return out;
}

}  // namespace lyubeznik

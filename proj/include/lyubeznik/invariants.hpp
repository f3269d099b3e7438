#pragma once

// Invariants of R/I read off the hypercubes of the modules H^r_I(R): Lyubeznik
// tables, Bass and dual Bass numbers, supports and injective dimensions.

#include <algorithm>
#include <cstddef>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chain_complex.hpp"
#include "errors.hpp"
#include "hypercube.hpp"
#include "ideal.hpp"
#include "mask.hpp"
#include "parallel.hpp"
#include "resolution.hpp"

namespace lyubeznik {

/// λ_{p,i} for 0 ≤ p, i ≤ d, stored as entries[p][i].
struct LyubeznikTable {
  unsigned n = 0;
  unsigned d = 0;
  std::vector<std::vector<std::size_t>> entries;

  std::size_t at(unsigned p, unsigned i) const {
    return p <= d && i <= d ? entries[p][i] : 0;
  }

  /// A single 1 at (d, d).
  bool is_trivial() const {
    for (unsigned p = 0; p <= d; ++p)
      for (unsigned i = 0; i <= d; ++i)
        if (entries[p][i] != ((p == d && i == d) ? 1U : 0U)) return false;
    return true;
  }

  bool operator==(const LyubeznikTable&) const = default;

  /// Cut an (n+1)×(n+1) table down to d, refusing to drop nonzero entries.
  static LyubeznikTable from_full(unsigned n, unsigned d,
                                  const std::vector<std::vector<std::size_t>>& full) {
    LyubeznikTable t{n, d, std::vector<std::vector<std::size_t>>(d + 1, std::vector<std::size_t>(d + 1, 0))};
    for (std::size_t p = 0; p < full.size(); ++p) {
      for (std::size_t i = 0; i < full[p].size(); ++i) {
        if (full[p][i] == 0) continue;
        if (i > d || p > i) {
          throw contract_error("Lyubeznik number λ_{" + std::to_string(p) + "," + std::to_string(i) +
                               "} is nonzero outside 0 ≤ p ≤ i ≤ d");
        }
        t.entries[p][i] = full[p][i];
      }
    }
    if (t.entries[d][d] == 0) throw contract_error("highest Lyubeznik number λ_{d,d} vanishes");
    return t;
  }
};

/// μ_p(p_α) (or π_p for dual tables) per α, with trailing zeros trimmed and
/// zero rows left out.
struct BassTable {
  int r = 0;
  std::map<Mask, std::vector<std::size_t>> rows;

  std::size_t at(Mask alpha, std::size_t p) const {
    const auto it = rows.find(alpha);
    return it == rows.end() || p >= it->second.size() ? 0 : it->second[p];
  }
  bool operator==(const BassTable&) const = default;
};
using DualBassTable = BassTable;

struct Supports {
  std::set<Mask> big;    // Supp: some M_β ≠ 0 with β ≤ α
  std::set<Mask> small;  // supp: some μ_p(p_α) ≠ 0
};

/// Dimensions count n − |α| for the face prime p_α. Fields are −1 for the zero module.
struct InjectiveDimensions {
  int star_id = -1;
  int id_ungraded = -1;
  int dim_module = -1;
  int dim_small_supp = -1;
};

struct GrowthBound {
  int s = -1;             // largest Bass index at height n−1 primes of Supp
  int top_at_maximal = -1;  // largest p with μ_p(m) ≠ 0
  bool holds = true;
};

namespace detail {

inline std::vector<std::size_t> trimmed(std::vector<std::size_t> v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

template <class F, class Keep>
VectorSpaceComplex<F> main_subcomplex(const Hypercube<F>& h, Keep&& keep) {
  const unsigned n = h.n();
  std::vector<std::vector<Mask>> keys(n + 1);
  for (const auto& [alpha, d] : h.vertex_dims())
    if (keep(alpha)) keys[n - weight(alpha)].push_back(alpha);
  return assemble(
      h.field(), keys, [&](Mask a) { return h.dim(a); },
      [&](std::size_t, Mask alpha) {
        std::vector<Block<F>> out;
        for (unsigned i = 0; i < n; ++i) {
          const Mask beta = alpha | bit(i);
          if (beta == alpha || h.dim(beta) == 0 || !keep(beta)) continue;
          out.push_back({beta, scaled(h.edge(alpha, i), h.field().from_int(koszul_sign(i, beta)))});
        }
        return out;
      });
}

template <class Compute>
BassTable tabulate(int r, const std::vector<Mask>& masks, unsigned threads, Compute&& compute) {
  std::vector<std::vector<std::size_t>> rows(masks.size());
  parallel_for(masks.size(), threads, [&](std::size_t k) { rows[k] = trimmed(compute(masks[k])); });
  BassTable out{r, {}};
  for (std::size_t k = 0; k < masks.size(); ++k)
    if (!rows[k].empty()) out.rows.emplace(masks[k], std::move(rows[k]));
  return out;
}

}  // namespace detail

/// All masks α with some nonzero vertex β ≤ α.
template <class F>
std::set<Mask> big_support(const Hypercube<F>& h) {
  std::set<Mask> out;
  for (Mask alpha = 0; alpha <= full_mask(h.n()); ++alpha) {
    for (const auto& [beta, d] : h.vertex_dims()) {
      if (is_subset(beta, alpha)) {
        out.insert(alpha);
        break;
      }
    }
  }
  return out;
}

/// Per-ideal driver that builds each hypercube once and derives everything else from it.
template <class F>
class Analysis {
 public:
  Analysis(MonomialIdeal ideal, F field, unsigned threads = 1)
      : ideal_(std::move(ideal)),
        field_(std::move(field)),
        threads_(threads),
        builder_(ideal_, field_, threads) {}

  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const F& field() const noexcept { return field_; }
  unsigned n() const noexcept { return ideal_.n(); }
  unsigned dim() const { return n() - height(ideal_); }

  const Hypercube<F>& hypercube(int r) const {
    auto it = cache_.find(r);
    if (it == cache_.end()) it = cache_.emplace(r, builder_.build(r)).first;
    return it->second;
  }

  /// The r with H^r_I(R) ≠ 0.
  std::vector<int> nonzero_degrees() const {
    std::vector<int> out;
    for (int r = 0; r <= static_cast<int>(n()); ++r)
      if (!hypercube(r).is_zero()) out.push_back(r);
    return out;
  }

  /// λ_{p,n−r} = dim H_p(M•) of the hypercube of H^r_I(R).
  LyubeznikTable lyubeznik_table() const {
    std::vector<std::vector<std::size_t>> full(n() + 1, std::vector<std::size_t>(n() + 1, 0));
    for (int r = 0; r <= static_cast<int>(n()); ++r) {
      const auto h = homology_dims(main_complex(hypercube(r)));
      for (std::size_t p = 0; p < h.size(); ++p) full[p][n() - static_cast<unsigned>(r)] = h[p];
    }
    return LyubeznikTable::from_full(n(), dim(), full);
  }

  /// Same table from the linear strands of the minimal resolution of I^∨.
  LyubeznikTable lyubeznik_table_via_strands() const {
    return LyubeznikTable::from_full(n(), dim(), lyubeznik_via_strands(ideal_, field_));
  }

  /// μ_p(p_α) = dim H_p(M•_{α,α}).
  BassTable bass_table(int r) const {
    const auto& h = hypercube(r);
    const auto supp = big_support(h);
    return detail::tabulate(r, {supp.begin(), supp.end()}, threads_, [&](Mask alpha) {
      return homology_dims(restricted_complex(h, alpha, alpha));
    });
  }

  /// π_p(p_α) = μ_p(p_{1−α}) of the Matlis dual hypercube.
  DualBassTable dual_bass_table(int r) const {
    const auto star = dual_hypercube(hypercube(r));
    const auto supp = big_support(star);
    std::vector<Mask> masks;
    for (Mask beta : supp) masks.push_back(complement(beta, n()));
    std::sort(masks.begin(), masks.end());
    return detail::tabulate(r, masks, threads_, [&](Mask alpha) {
      const Mask beta = complement(alpha, n());
      return homology_dims(restricted_complex(star, beta, beta));
    });
  }

  /// π_p(p_α) from the original hypercube: the part of M*• above α.
  DualBassTable dual_bass_table_direct(int r) const {
    const auto& h = hypercube(r);
    std::set<Mask> below;
    for (const auto& [gamma, d] : h.vertex_dims())
      for (Mask a = gamma;; a = (a - 1) & gamma) {
        below.insert(a);
        if (a == 0) break;
      }
    return detail::tabulate(r, {below.begin(), below.end()}, threads_, [&](Mask alpha) {
      return homology_dims(upper_dual_complex(h, alpha));
    });
  }

  Supports supports(int r) const {
    Supports out{big_support(hypercube(r)), {}};
    for (const auto& [alpha, row] : bass_table(r).rows) out.small.insert(alpha);
    return out;
  }

  InjectiveDimensions injective_dimensions(int r) const {
    InjectiveDimensions out;
    const int nn = static_cast<int>(n());
    for (Mask alpha : big_support(hypercube(r)))
      out.dim_module = std::max(out.dim_module, nn - static_cast<int>(weight(alpha)));
    for (const auto& [alpha, row] : bass_table(r).rows) {
      const int codim = nn - static_cast<int>(weight(alpha));
      out.dim_small_supp = std::max(out.dim_small_supp, codim);
      for (std::size_t p = 0; p < row.size(); ++p) {
        if (row[p] == 0) continue;
        out.star_id = std::max(out.star_id, static_cast<int>(p));
        out.id_ungraded = std::max(out.id_ungraded, static_cast<int>(p) + codim);
      }
    }
    if (out.star_id > out.dim_small_supp || out.dim_small_supp > out.dim_module) {
      throw contract_error("injective dimension exceeds the dimension of the small support");
    }
    return out;
  }

  /// μ_t(m) = 0 for t > s + 1, s the largest Bass index at height n−1 primes in Supp.
  GrowthBound growth_bound(int r) const {
    GrowthBound out;
    const auto table = bass_table(r);
    const auto supp = big_support(hypercube(r));
    for (unsigned i = 0; i < n(); ++i) {
      const Mask alpha = complement(bit(i), n());
      if (!supp.count(alpha)) continue;
      const auto it = table.rows.find(alpha);
      if (it != table.rows.end()) out.s = std::max(out.s, static_cast<int>(it->second.size()) - 1);
    }
    const auto top = table.rows.find(full_mask(n()));
    if (top != table.rows.end()) out.top_at_maximal = static_cast<int>(top->second.size()) - 1;
    out.holds = out.top_at_maximal <= out.s + 1;
    return out;
  }

  /// Non-minimal α of Supp with μ_0(p_α) ≠ 0.
  std::vector<std::pair<Mask, std::size_t>> mu0_summand_report(int r) const {
    const auto supp = big_support(hypercube(r));
    const auto minimal = inclusion_minimal({supp.begin(), supp.end()});
    std::vector<std::pair<Mask, std::size_t>> out;
    for (const auto& [alpha, row] : bass_table(r).rows) {
      if (std::find(minimal.begin(), minimal.end(), alpha) != minimal.end()) continue;
      if (!row.empty() && row[0] != 0) out.emplace_back(alpha, row[0]);
    }
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return canonical_less(a.first, b.first); });
    return out;
  }

  /// Minimal elements of Supp where μ_0 = 1 and μ_{>0} = 0 fails.
  std::vector<Mask> minimal_prime_violations(int r) const {
    const auto supp = big_support(hypercube(r));
    const auto table = bass_table(r);
    std::vector<Mask> bad;
    for (Mask alpha : inclusion_minimal({supp.begin(), supp.end()})) {
      const auto it = table.rows.find(alpha);
      if (it == table.rows.end() || it->second != std::vector<std::size_t>{1}) bad.push_back(alpha);
    }
    return bad;
  }

  /// For each i: χ H(M•) = χ H(vertices with α_i = 0) + χ H(vertices with α_i = 1),
  /// the two pieces of the short exact sequence split by the i-th coordinate.
  bool euler_additivity(int r) const {
    const auto& h = hypercube(r);
    const auto total = euler_characteristic(homology_dims(main_complex(h)));
    for (unsigned i = 0; i < n(); ++i) {
      const auto low = detail::main_subcomplex(h, [&](Mask a) { return !contains_bit(a, i); });
      const auto high = detail::main_subcomplex(h, [&](Mask a) { return contains_bit(a, i); });
      if (euler_characteristic(homology_dims(low)) + euler_characteristic(homology_dims(high)) !=
          total) {
        return false;
      }
    }
    return true;
  }

  /// R/I is sequentially Cohen–Macaulay over this field iff its table is trivial.
  bool sequentially_cm() const { return lyubeznik_table().is_trivial(); }

 private:
  MonomialIdeal ideal_;
  F field_;
  unsigned threads_;
  HypercubeBuilder<F> builder_;
  mutable std::map<int, Hypercube<F>> cache_;
};

template <class F>
LyubeznikTable lyubeznik_table(const MonomialIdeal& ideal, const F& field) {
  return Analysis<F>(ideal, field).lyubeznik_table();
}

template <class F>
BassTable bass_table(const MonomialIdeal& ideal, int r, const F& field) {
  return Analysis<F>(ideal, field).bass_table(r);
}

template <class F>
DualBassTable dual_bass_table(const MonomialIdeal& ideal, int r, const F& field) {
  return Analysis<F>(ideal, field).dual_bass_table(r);
}

template <class F>
bool sequentially_cm(const MonomialIdeal& ideal, const F& field) {
  return Analysis<F>(ideal, field).sequentially_cm();
}

}  // namespace lyubeznik

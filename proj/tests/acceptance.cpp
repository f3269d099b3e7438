// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.
// A criterion also fails when it overruns its time budget.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "corpus.hpp"
#include "lyubeznik.hpp"
#include "oracle.hpp"
#include "reference_tables.hpp"

using namespace lyubeznik;

namespace {

class Failures {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok && messages_.size() < 5) messages_.push_back(what);
    if (!ok) ++count_;
  }
  std::string summary() const {
    if (count_ == 0) return "";
    std::string out = std::to_string(count_) + " failure(s): ";
    for (std::size_t k = 0; k < messages_.size(); ++k) out += (k ? "; " : "") + messages_[k];
    return out;
  }

 private:
  std::vector<std::string> messages_;
  std::size_t count_ = 0;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<void(Failures&)> body;
};

const FieldSpec both_fields[] = {FieldSpec::rationals(), FieldSpec::prime(2)};

template <class Fn>
void for_both_fields(Fn&& fn) {
  for (const FieldSpec& spec : both_fields) visit_field(spec, [&](auto f) { fn(f, spec); });
}

/// Hypercube route, strand route, expected table.
template <class F>
void check_table(Failures& out, const std::string& label, const MonomialIdeal& ideal, const F& field,
                 const LyubeznikTable& expected) {
  Analysis<F> a(ideal, field);
  out.expect(a.lyubeznik_table() == expected, label + ": hypercube route");
  out.expect(a.lyubeznik_table_via_strands() == expected, label + ": strand route");
}

void criterion_1(Failures& out) {
  for_both_fields([&](auto f, const FieldSpec& spec) {
    check_table(out, "a4 over " + spec.to_string(), corpus::a(4), f, reference::a4_table());
  });
}

void criterion_2(Failures& out) {
  for_both_fields([&](auto f, const FieldSpec& spec) {
    check_table(out, "a5 over " + spec.to_string(), corpus::a(5), f, reference::a5_table());
    const auto c = main_complex(build_hypercube(corpus::a(5), 2, f));
    out.expect(c.dims()[3] == 5 && c.dims()[2] == 5 && rank(c.maps()[2]) == 4,
               "level 2 -> 3 map of H^2 has rank 4 over " + spec.to_string());
  });
}

void criterion_3(Failures& out) {
  for (unsigned n : {6U, 7U}) {
    check_table(out, "a" + std::to_string(n), corpus::a(n), RationalField{},
                reference::banded_table(n));
  }
}

void criterion_4(Failures& out) {
  check_table(out, "rp2 over q", corpus::rp2(), RationalField{}, reference::rp2_table_char0());
  check_table(out, "rp2 over fp:2", corpus::rp2(), PrimeField(2), reference::rp2_table_char2());
}

void criterion_5(Failures& out) {
  Analysis<RationalField> a(corpus::nine_variable(), RationalField{});
  out.expect(a.nonzero_degrees() == std::vector<int>{2, 3, 4, 5}, "nonzero degrees are 2,3,4,5");
  out.expect(a.lyubeznik_table().is_trivial(), "hypercube table trivial");
  out.expect(a.lyubeznik_table_via_strands().is_trivial(), "strand table trivial");
}

void criterion_6(Failures& out) {
  Analysis<RationalField> a(corpus::three_components(), RationalField{});
  out.expect(a.bass_table(3) == reference::three_components_bass(3), "Bass table of H^3");
  out.expect(a.bass_table(4) == reference::three_components_bass(4), "Bass table of H^4");
  out.expect(a.lyubeznik_table() == reference::three_components_table(), "Lyubeznik table");
  out.expect(a.lyubeznik_table_via_strands() == reference::three_components_table(), "strand route");
}

void criterion_7(Failures& out) {
  Analysis<RationalField> a(corpus::mixed_heights(), RationalField{});
  out.expect(a.bass_table(2) == reference::mixed_heights_bass(2), "Bass table of H^2");
  out.expect(a.bass_table(3) == reference::mixed_heights_bass(3), "Bass table of H^3");
  out.expect(a.lyubeznik_table() == reference::mixed_heights_table(), "Lyubeznik table");
  out.expect(a.lyubeznik_table_via_strands() == reference::mixed_heights_table(), "strand route");
  const auto id = a.injective_dimensions(3);
  out.expect(id.star_id == 1, "*id H^3 = 1");
  out.expect(id.dim_module == 2, "dim H^3 = 2");
  out.expect(id.id_ungraded == 2, "id H^3 = 2");
  const auto s = a.supports(3);
  for (Mask m : {mask_of({1, 2, 3, 4}), mask_of({1, 2, 3, 5})}) {
    out.expect(s.big.count(m) && !s.small.count(m),
               to_vector_string(m, 5) + " in Supp but not in small support");
  }
}

void criterion_8(Failures& out) {
  Analysis<RationalField> a(corpus::mixed_heights(), RationalField{});
  for (int r : {2, 3}) {
    const auto expected = reference::mixed_heights_dual_bass(r);
    out.expect(a.dual_bass_table(r) == expected, "dual Bass of H^" + std::to_string(r) + " via M*");
    out.expect(a.dual_bass_table_direct(r) == expected,
               "dual Bass of H^" + std::to_string(r) + " via the upper dual complex");
  }
}

void criterion_9(Failures& out) {
  for (const auto& [name, ideal] : corpus::all()) {
    const unsigned n = ideal.n();
    out.expect(alexander_dual(alexander_dual(ideal)) == ideal, name + ": I^vv = I");
    const auto delta = stanley_reisner(ideal);
    out.expect(complex_alexander_dual(complex_alexander_dual(delta)) == delta,
               name + ": complex dual is an involution");
    const auto is_face = oracle::sr_face(ideal.gens());
    for_both_fields([&, &name = name, &ideal = ideal](auto f, const FieldSpec& spec) {
      const std::string label = name + " over " + spec.to_string();
      Analysis<decltype(f)> a(ideal, f);
      const auto table = a.lyubeznik_table();
      out.expect(table.at(table.d, table.d) >= 1, label + ": lambda_dd >= 1");
      out.expect(a.lyubeznik_table_via_strands() == table, label + ": routes agree");

      const auto dual = alexander_dual(ideal);
      const auto taylor = taylor_complex(dual, f);
      const auto fwd = minimize(taylor, CancellationOrder::forward);
      const auto rev = minimize(taylor, CancellationOrder::reverse);
      const auto betti = betti_table(fwd);
      out.expect(betti == betti_table(rev), label + ": minimize order independent");

      for (int r = 0; r <= static_cast<int>(n); ++r) {
        const auto& h = a.hypercube(r);
        h.verify();
        main_complex(h);  // d∘d = 0 is checked on construction
        dual_complex(h);
        for (Mask gamma = 0; gamma <= full_mask(n); ++gamma) {
          std::vector<Mask> link_faces;
          if (is_face(gamma)) {
            link_faces = oracle::faces(complement(gamma, n), [&](Mask t) { return is_face(t | gamma); });
          }
          const int q = static_cast<int>(n) - r - static_cast<int>(weight(gamma)) - 1;
          out.expect(oracle::reduced_homology(link_faces, q, spec.characteristic()) ==
                         h.dim(complement(gamma, n)),
                     label + ": Terai = Mustata at r=" + std::to_string(r));
        }
        for (Mask alpha = 0; alpha <= full_mask(n); ++alpha) {
          const int j = static_cast<int>(weight(alpha)) - r;
          std::size_t b = 0;
          if (j >= 0) {
            const auto it = betti.find({static_cast<std::size_t>(j), alpha});
            if (it != betti.end()) b = it->second;
          }
          out.expect(b == h.dim(alpha), label + ": Betti = hypercube at r=" + std::to_string(r));
        }
      }
      for (int r : a.nonzero_degrees()) {
        const std::string at = label + " r=" + std::to_string(r);
        out.expect(a.minimal_prime_violations(r).empty(), at + ": minimal primes carry mu_0 = 1");
        out.expect(a.growth_bound(r).holds, at + ": growth bound");
        const auto id = a.injective_dimensions(r);
        out.expect(id.star_id <= id.dim_small_supp, at + ": *id <= dim supp");
        out.expect(a.dual_bass_table(r) == a.dual_bass_table_direct(r), at + ": Matlis duality");
      }
    });
  }
}

/// Random squarefree ideals in at most six variables: every third one is generated
/// by random monomials of degree 2 or 3, the rest are cut out by random face primes of
/// size 2 or 3 (the second kind is far more often not sequentially CM).
/// Ideals whose dual needs more than 12 generators are redrawn so the Taylor
/// complexes stay small.
void criterion_10(Failures& out) {
  std::mt19937 rng(20240917);
  auto random_face = [&](unsigned n) {
    std::vector<unsigned> vars(n);
    for (unsigned i = 0; i < n; ++i) vars[i] = i;
    std::shuffle(vars.begin(), vars.end(), rng);
    const unsigned w = std::min(n, std::uniform_int_distribution<unsigned>(2, 3)(rng));
    Mask m = 0;
    for (unsigned i = 0; i < w; ++i) m |= bit(vars[i]);
    return m;
  };
  int accepted = 0, nontrivial = 0;
  while (accepted < 100) {
    const unsigned n = std::uniform_int_distribution<unsigned>(3, 6)(rng);
    const unsigned count = std::uniform_int_distribution<unsigned>(2, 8)(rng);
    std::vector<Mask> masks;
    for (unsigned k = 0; k < count; ++k) masks.push_back(random_face(n));
    const auto ideal = accepted % 3 == 0 ? minimalize(n, masks) : intersect_face_ideals(n, masks);
    if (alexander_dual(ideal).gens().size() > 12) continue;
    ++accepted;
    const std::string label = "random #" + std::to_string(accepted) + " " + to_string(ideal);
    for_both_fields([&](auto f, const FieldSpec& spec) {
      Analysis<decltype(f)> a(ideal, f);
      const auto table = a.lyubeznik_table();
      if (spec.is_rationals() && !table.is_trivial()) ++nontrivial;
      out.expect(table == a.lyubeznik_table_via_strands(),
                 label + ": routes agree over " + spec.to_string());
      const auto betti = betti_numbers(alexander_dual(ideal), f);
      for (unsigned j = 0; j < n; ++j) {
        for (Mask alpha = 1; alpha <= full_mask(n); ++alpha) {
          const auto it = betti.find({j, alpha});
          const std::size_t got = it == betti.end() ? 0 : it->second;
          out.expect(got == oracle::betti_of_dual(n, ideal.gens(), j, alpha, spec.characteristic()),
                     label + ": Betti vs brute force over " + spec.to_string());
        }
      }
    });
  }
  // Guard against a sample of nothing but trivial tables.
  out.expect(nontrivial >= 10, "only " + std::to_string(nontrivial) + " nontrivial tables sampled");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Lambda(R/a_4), both routes, over Q and F_2", 1, criterion_1},
      {2, "Lambda(R/a_5) and the rank 4 map", 1, criterion_2},
      {3, "banded tables of a_6 and a_7 with route agreement", 5, criterion_3},
      {4, "projective plane tables in characteristic 0 and 2", 10, criterion_4},
      {5, "nine-variable ideal: trivial table, H^r nonzero for r = 2..5", 30, criterion_5},
      {6, "three-component ideal: Bass tables of H^3, H^4 and Lambda", 5, criterion_6},
      {7, "mixed-height ideal: Bass tables, Lambda, *id, dim, supp", 5, criterion_7},
      {8, "mixed-height ideal: dual Bass numbers of H^2 and H^3", 5, criterion_8},
      {9, "property suite over the corpus in both fields", 60, criterion_9},
      {10, "100 random ideals: route agreement and brute-force Betti numbers", 60, criterion_10},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Failures failures;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.body(failures);
    } catch (const std::exception& e) {
      failures.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.budget_seconds) {
      failures.expect(false, "took " + std::to_string(seconds) + "s, budget " +
                                 std::to_string(c.budget_seconds) + "s");
    }
    const std::string problems = failures.summary();
    std::printf("criterion %d: %s  %s (%.2fs)%s%s\n", c.id, problems.empty() ? "PASS" : "FAIL",
                c.title, seconds, problems.empty() ? "" : "\n    ", problems.c_str());
    if (!problems.empty()) ++failed;
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed),
              criteria.size());
  return failed == 0 ? 0 : 1;
}

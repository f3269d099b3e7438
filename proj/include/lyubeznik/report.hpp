#pragma once

// Runs the computations named in a ProblemSpec and renders them as text and
// JSON. Both renderings are built from the same numbers in one pass.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

#include "cochain.hpp"
#include "errors.hpp"
#include "invariants.hpp"
#include "problem.hpp"
#include "resolution.hpp"
#include "simplicial_complex.hpp"

namespace lyubeznik {

using Json = nlohmann::ordered_json;

inline const std::vector<std::string>& known_commands() {
  static const std::vector<std::string> names{"table", "bass", "dual-bass", "betti", "strands",
                                              "supp",  "dims", "seqcm",     "check", "info"};
  return names;
}

struct CheckResult {
  std::string name;
  bool ok = true;
  std::string detail;
};

struct Report {
  std::string text;
  Json json = Json::object();
  int exit_code = 0;

  std::string rendered(OutputFormat format) const {
    return format == OutputFormat::json ? json.dump(2) + "\n" : text;
  }
};

namespace detail {

/// "(x1,x3)" for the face prime p_α; "(0)" for α = 0.
inline std::string prime_string(Mask a) {
  if (a == 0) return "(0)";
  std::string out = "(";
  for (unsigned i : support(a)) {
    if (out.size() > 1) out += ',';
    out += 'x' + std::to_string(i + 1);
  }
  return out + ")";
}

inline std::string join(const std::vector<std::size_t>& v) {
  std::string out;
  for (std::size_t k = 0; k < v.size(); ++k) out += (k ? " " : "") + std::to_string(v[k]);
  return out;
}

inline std::vector<Mask> canonical(std::vector<Mask> masks) {
  sort_canonical(masks);
  return masks;
}

template <class Map>
std::vector<Mask> keys_of(const Map& m) {
  std::vector<Mask> out;
  for (const auto& [k, v] : m) out.push_back(k);
  return canonical(std::move(out));
}

/// The upper-triangular display: row p lists λ_{p,p..d}, indented by p columns.
inline std::string render_table(const LyubeznikTable& t) {
  std::size_t width = 1;
  for (const auto& row : t.entries)
    for (std::size_t v : row) width = std::max(width, std::to_string(v).size());
  std::string out;
  for (unsigned p = 0; p <= t.d; ++p) {
    std::string line = "  ";
    for (unsigned i = 0; i <= t.d; ++i) {
      const std::string cell = i < p ? "" : std::to_string(t.entries[p][i]);
      line += std::string(width - cell.size() + (i ? 1 : 0), ' ') + cell;
    }
    out += line + "\n";
  }
  return out;
}

inline void bass_section(const BassTable& table, unsigned n, const char* symbol, std::string& text,
                         Json& rows) {
  for (Mask alpha : keys_of(table.rows)) {
    const auto& values = table.rows.at(alpha);
    text += "  " + to_vector_string(alpha, n) + "  " + prime_string(alpha) + "  " + symbol + ": " +
            join(values) + "\n";
    rows.push_back({{"alpha", to_vector(alpha, n)}, {symbol, values}});
  }
}

template <class F>
std::vector<CheckResult> run_checks(const Analysis<F>& a, const FieldSpec& spec) {
  const unsigned n = a.n();
  const int nn = static_cast<int>(n);
  std::vector<CheckResult> out;
  auto guarded = [&](const std::string& name, const std::function<std::string()>& body) {
    CheckResult c{name, true, ""};
    try {
      c.detail = body();
      c.ok = c.detail.empty();
    } catch (const contract_error& e) {
      c.ok = false;
      c.detail = e.what();
    }
    out.push_back(std::move(c));
  };

  guarded("routes agree", [&]() -> std::string {
    return a.lyubeznik_table() == a.lyubeznik_table_via_strands()
               ? ""
               : "hypercube and strand Lyubeznik tables differ";
  });
  guarded("hypercube squares commute", [&]() -> std::string {
    for (int r = 0; r <= nn; ++r) a.hypercube(r).verify();
    return "";
  });
  guarded("vertex dims match links", [&]() -> std::string {
    const auto delta = stanley_reisner(a.ideal());
    for (Mask gamma = 0; gamma <= full_mask(n); ++gamma) {
      const auto lk = link(delta, gamma);
      for (int r = 0; r <= nn; ++r) {
        const int q = nn - r - static_cast<int>(weight(gamma)) - 1;
        const std::size_t expected = reduced_homology_dim(lk, q, spec);
        if (a.hypercube(r).dim(complement(gamma, n)) != expected) {
          return "r=" + std::to_string(r) + " at " + to_vector_string(complement(gamma, n), n);
        }
      }
    }
    return "";
  });
  guarded("betti numbers match hypercube", [&]() -> std::string {
    const auto betti = betti_numbers(alexander_dual(a.ideal()), a.field());
    for (int r = 0; r <= nn; ++r) {
      for (Mask alpha = 0; alpha <= full_mask(n); ++alpha) {
        const int j = static_cast<int>(weight(alpha)) - r;
        std::size_t expected = 0;
        if (j >= 0) {
          const auto it = betti.find({static_cast<std::size_t>(j), alpha});
          if (it != betti.end()) expected = it->second;
        }
        if (a.hypercube(r).dim(alpha) != expected) {
          return "r=" + std::to_string(r) + " at " + to_vector_string(alpha, n);
        }
      }
    }
    return "";
  });
  const auto degrees = a.nonzero_degrees();
  auto per_degree = [&](const std::string& name, const std::function<bool(int)>& holds) {
    guarded(name, [&]() -> std::string {
      for (int r : degrees)
        if (!holds(r)) return "fails for r=" + std::to_string(r);
      return "";
    });
  };
  per_degree("dual bass routes agree",
             [&](int r) { return a.dual_bass_table(r) == a.dual_bass_table_direct(r); });
  per_degree("minimal primes carry mu_0 = 1",
             [&](int r) { return a.minimal_prime_violations(r).empty(); });
  per_degree("growth bound", [&](int r) { return a.growth_bound(r).holds; });
  per_degree("euler additivity", [&](int r) { return a.euler_additivity(r); });
  per_degree("injective dimension bound", [&](int r) {
    a.injective_dimensions(r);
    return true;
  });
  return out;
}

template <class F>
void run_with(const ProblemSpec& spec, const F& field, Report& report) {
  const MonomialIdeal ideal = spec.ideal();
  const unsigned n = ideal.n();
  Analysis<F> a(ideal, field, spec.threads);
  const std::string field_name = spec.field.to_string();
  std::string& text = report.text;
  Json& json = report.json;

  json["n"] = n;
  json["field"] = field_name;
  Json gens = Json::array();
  for (Mask g : ideal.gens()) gens.push_back(to_monomial(g));
  json["generators"] = gens;

  if (spec.r) a.hypercube(*spec.r);  // rejects r outside [0, n]
  auto degrees = [&] { return spec.r ? std::vector<int>{*spec.r} : a.nonzero_degrees(); };
  auto wants = [&](const char* name) {
    return std::find(spec.commands.begin(), spec.commands.end(), name) != spec.commands.end();
  };

  if (wants("info")) {
    Json info;
    const auto primes = minimal_primes(ideal);
    text += "ideal " + to_string(ideal) + " in " + std::to_string(n) + " variables\n";
    std::string prime_list;
    Json prime_json = Json::array();
    for (Mask p : primes) {
      prime_list += " " + to_set_string(p);
      std::vector<unsigned> variables;
      for (unsigned i : support(p)) variables.push_back(i + 1);
      prime_json.push_back(variables);
    }
    const auto nonzero = a.nonzero_degrees();
    text += "minimal primes:" + prime_list + "\n";
    text += "height " + std::to_string(height(ideal)) + ", dim R/I = " + std::to_string(a.dim()) + "\n";
    text += "Alexander dual " + to_string(alexander_dual(ideal)) + "\n";
    text += "H^r_I(R) nonzero for r =";
    for (int r : nonzero) text += " " + std::to_string(r);
    text += "\n";
    info["minimal_primes"] = prime_json;
    info["height"] = height(ideal);
    info["dim"] = a.dim();
    Json dual = Json::array();
    const auto dual_ideal = alexander_dual(ideal);
    for (Mask g : dual_ideal.gens()) dual.push_back(to_monomial(g));
    info["dual_generators"] = dual;
    info["nonzero_r"] = nonzero;
    json["info"] = info;
  }

  if (wants("table")) {
    const auto t = a.lyubeznik_table();
    text += "Lyubeznik table over " + field_name + " (d = " + std::to_string(t.d) + ")\n";
    text += render_table(t);
    json["d"] = t.d;
    json["lyubeznik"] = t.entries;
  }

  if (wants("bass")) {
    Json all = Json::array();
    for (int r : degrees()) {
      text += "Bass numbers of H^" + std::to_string(r) + "_I(R) over " + field_name + "\n";
      Json rows = Json::array();
      bass_section(a.bass_table(r), n, "mu", text, rows);
      all.push_back({{"r", r}, {"rows", rows}});
    }
    json["bass"] = all;
  }

  if (wants("dual-bass")) {
    Json all = Json::array();
    for (int r : degrees()) {
      text += "Dual Bass numbers of H^" + std::to_string(r) + "_I(R) over " + field_name + "\n";
      Json rows = Json::array();
      bass_section(a.dual_bass_table(r), n, "pi", text, rows);
      all.push_back({{"r", r}, {"rows", rows}});
    }
    json["dual_bass"] = all;
  }

  if (wants("betti")) {
    const auto dual = alexander_dual(ideal);
    const auto betti = betti_numbers(dual, field);
    text += "Betti numbers of I^v = " + to_string(dual) + " over " + field_name + "\n";
    std::map<std::size_t, std::vector<Mask>> by_j;
    for (const auto& [key, count] : betti) by_j[key.first].push_back(key.second);
    Json rows = Json::array();
    for (auto& [j, masks] : by_j) {
      for (Mask alpha : canonical(masks)) {
        const std::size_t b = betti.at({j, alpha});
        text += "  beta_" + std::to_string(j) + " " + to_vector_string(alpha, n) + " = " +
                std::to_string(b) + "\n";
        rows.push_back({{"j", j}, {"alpha", to_vector(alpha, n)}, {"beta", b}});
      }
    }
    json["betti"] = rows;
  }

  if (wants("strands")) {
    const auto dual = alexander_dual(ideal);
    const auto minimal = minimal_resolution(dual, field);
    text += "Linear strands of the minimal resolution of I^v over " + field_name + "\n";
    Json strands = Json::array();
    for (int r = 0; r <= static_cast<int>(n); ++r) {
      const auto frame = strand_frame(minimal, r);
      const auto& dims = frame.complex.dims();
      if (std::all_of(dims.begin(), dims.end(), [](std::size_t d) { return d == 0; })) continue;
      std::vector<std::size_t> ranks;
      for (const auto& m : frame.complex.maps()) ranks.push_back(rank(m));
      const auto h = homology_dims(frame.complex);
      const auto ht = homology_dims(transposed_frame(frame));
      text += "  r=" + std::to_string(r) + "  dims: " + join(dims) + "  ranks: " + join(ranks) +
              "  homology: " + join(h) + "  transposed: " + join(ht) + "\n";
      strands.push_back({{"r", r}, {"dims", dims}, {"ranks", ranks}, {"homology", h},
                         {"transposed_homology", ht}});
    }
    const auto ld = linearity_defect(dual, field);
    text += "  linearity defect (frame homology): " + std::to_string(ld) + "\n";
    json["strands"] = strands;
    json["linearity_defect"] = ld;
  }

  if (wants("supp")) {
    Json all = Json::array();
    for (int r : degrees()) {
      const auto s = a.supports(r);
      const auto big = canonical({s.big.begin(), s.big.end()});
      const auto small = canonical({s.small.begin(), s.small.end()});
      text += "Supports of H^" + std::to_string(r) + "_I(R) over " + field_name + "\n";
      Json big_json = Json::array(), small_json = Json::array();
      std::string excluded;
      for (Mask m : big) {
        big_json.push_back(to_vector(m, n));
        if (!s.small.count(m)) excluded += " " + to_vector_string(m, n);
      }
      for (Mask m : small) small_json.push_back(to_vector(m, n));
      text += "  Supp: " + std::to_string(big.size()) + " face primes, supp: " +
              std::to_string(small.size()) + "\n";
      text += "  in Supp but not supp:" + (excluded.empty() ? std::string(" none") : excluded) + "\n";
      all.push_back({{"r", r}, {"support", big_json}, {"small_support", small_json}});
    }
    json["supp"] = all;
  }

  if (wants("dims")) {
    Json all = Json::array();
    for (int r : degrees()) {
      const auto& h = a.hypercube(r);
      const auto id = a.injective_dimensions(r);
      text += "Hypercube of H^" + std::to_string(r) + "_I(R) over " + field_name + "\n";
      Json pieces = Json::array();
      for (Mask alpha : keys_of(h.vertex_dims())) {
        text += "  " + to_vector_string(alpha, n) + "  k^" + std::to_string(h.dim(alpha)) + "\n";
        pieces.push_back({{"alpha", to_vector(alpha, n)}, {"dim", h.dim(alpha)}});
      }
      text += "  *id = " + std::to_string(id.star_id) + ", id = " + std::to_string(id.id_ungraded) +
              ", dim = " + std::to_string(id.dim_module) +
              ", dim supp = " + std::to_string(id.dim_small_supp) + "\n";
      all.push_back({{"r", r},
                     {"pieces", pieces},
                     {"star_id", id.star_id},
                     {"id_ungraded", id.id_ungraded},
                     {"dim_module", id.dim_module},
                     {"dim_small_supp", id.dim_small_supp}});
    }
    json["dims"] = all;
  }

  if (wants("seqcm")) {
    const bool scm = a.sequentially_cm();
    text += std::string("R/I is ") + (scm ? "" : "not ") + "sequentially Cohen-Macaulay over " +
            field_name + "\n";
    json["seqcm"] = {{"field", field_name}, {"sequentially_cm", scm}};
  }

  if (spec.check || wants("check")) {
    Json checks = Json::array();
    bool all_ok = true;
    for (const auto& c : run_checks(a, spec.field)) {
      all_ok = all_ok && c.ok;
      text += "check " + c.name + ": " + (c.ok ? "ok" : "FAILED (" + c.detail + ")") + "\n";
      checks.push_back({{"name", c.name}, {"ok", c.ok}, {"detail", c.detail}});
    }
    text += all_ok ? "all checks passed\n" : "some checks failed\n";
    json["check"] = checks;
    if (!all_ok) report.exit_code = 1;
  }
}

}  // namespace detail

/// Execute every command in the spec. Errors (input, resource, domain)
/// propagate to the caller; failed checks set a nonzero exit code.
inline Report run(const ProblemSpec& spec) {
  for (const auto& c : spec.commands) {
    if (std::find(known_commands().begin(), known_commands().end(), c) == known_commands().end()) {
      throw input_error("unknown command '" + c + "'");
    }
  }
  Report report;
  visit_field(spec.field, [&](auto field) { detail::run_with(spec, field, report); });
  return report;
}

}  // namespace lyubeznik

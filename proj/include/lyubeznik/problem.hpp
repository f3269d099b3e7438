#pragma once

// The ideal input format:
//
//   n=<int>;
//   gens: x1*x2, x2*x3;        or    primes: {1,3},{2,4};
//
// Whitespace and newlines are free between tokens; '#' starts a comment.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"
#include "field.hpp"
#include "ideal.hpp"
#include "mask.hpp"

namespace lyubeznik {

enum class IdealForm { generators, primes };
enum class OutputFormat { text, json };

struct ProblemSpec {
  unsigned n = 0;
  IdealForm form = IdealForm::generators;
  std::vector<Mask> masks;  // canonical: minimal, sorted by canonical_less
  FieldSpec field;
  std::vector<std::string> commands;
  OutputFormat format = OutputFormat::text;
  bool check = false;
  std::optional<int> r;
  unsigned threads = 1;

  MonomialIdeal ideal() const {
    return form == IdealForm::generators ? minimalize(n, masks) : intersect_face_ideals(n, masks);
  }

  bool operator==(const ProblemSpec&) const = default;
};

namespace detail {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') advance();
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance();
      } else {
        return;
      }
    }
  }

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'" + found());
    advance();
  }

  bool accept(char c) {
    if (peek() != c) return false;
    advance();
    return true;
  }

  std::string word() {
    skip_space();
    std::string out;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      out += text_[pos_];
      advance();
    }
    return out;
  }

  unsigned integer() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected an integer" + found());
    }
    unsigned long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + static_cast<unsigned>(text_[pos_] - '0');
      if (value > 1000000) fail("integer too large");
      advance();
    }
    return static_cast<unsigned>(value);
  }

  /// Position of the next token, for errors reported after reading it.
  std::pair<std::size_t, std::size_t> mark() {
    skip_space();
    return {line_, column_};
  }

  [[noreturn]] void fail(const std::string& what) const { throw parse_error(what, line_, column_); }
  [[noreturn]] static void fail_at(const std::string& what, std::pair<std::size_t, std::size_t> at) {
    throw parse_error(what, at.first, at.second);
  }

 private:
  std::string found() const {
    if (pos_ >= text_.size()) return ", found end of input";
    return std::string(", found '") + text_[pos_] + "'";
  }

  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      column_ = 1;
    } else {
      ++column_;
    }
    ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t column_ = 1;
};

}  // namespace detail

/// Parse an ideal description. Options other than the ideal keep their defaults.
inline ProblemSpec parse_input(std::string_view text) {
  detail::Scanner in(text);
  ProblemSpec spec;

  auto at = in.mark();
  if (in.word() != "n") in.fail_at("expected 'n=<variables>;'", at);
  in.expect('=');
  at = in.mark();
  spec.n = in.integer();
  if (spec.n < 1 || spec.n > max_variables) {
    in.fail_at("n must lie in [1, " + std::to_string(max_variables) + "]", at);
  }
  in.expect(';');

  auto variable = [&](Mask seen) {
    const auto where = in.mark();
    const unsigned i = in.integer();
    if (i < 1 || i > spec.n) {
      in.fail_at("variable index " + std::to_string(i) + " outside [1, " + std::to_string(spec.n) + "]",
                 where);
    }
    if (contains_bit(seen, i - 1)) {
      in.fail_at("variable " + std::to_string(i) + " repeated (monomials must be squarefree)", where);
    }
    return bit(i - 1);
  };

  at = in.mark();
  const std::string section = in.word();
  std::vector<Mask> masks;
  if (section == "gens") {
    spec.form = IdealForm::generators;
    in.expect(':');
    do {
      Mask m = 0;
      do {
        const auto x = in.mark();
        if (in.word() != "x") in.fail_at("expected a variable x<i>", x);
        m |= variable(m);
      } while (in.accept('*'));
      masks.push_back(m);
    } while (in.accept(','));
  } else if (section == "primes") {
    spec.form = IdealForm::primes;
    in.expect(':');
    do {
      in.expect('{');
      Mask m = 0;
      do {
        m |= variable(m);
      } while (in.accept(','));
      in.expect('}');
      masks.push_back(m);
    } while (in.accept(','));
  } else {
    in.fail_at("expected 'gens:' or 'primes:'", at);
  }
  in.expect(';');
  if (!in.at_end()) in.fail("unexpected text after the ideal");

  spec.masks = spec.form == IdealForm::generators ? minimalize(spec.n, masks).gens()
                                                   : inclusion_minimal(masks);
  sort_canonical(spec.masks);
  return spec;
}

/// Inverse of parse_input on the ideal part of a spec.
inline std::string render_input(const ProblemSpec& spec) {
  std::string out = "n=" + std::to_string(spec.n) + ";\n";
  if (spec.form == IdealForm::generators) {
    out += "gens: ";
    for (std::size_t k = 0; k < spec.masks.size(); ++k) {
      if (k) out += ", ";
      out += to_monomial(spec.masks[k]);
    }
  } else {
    out += "primes: ";
    for (std::size_t k = 0; k < spec.masks.size(); ++k) {
      if (k) out += ", ";
      out += to_set_string(spec.masks[k]);
    }
  }
  return out + ";\n";
}

}  // namespace lyubeznik

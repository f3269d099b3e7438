#pragma once

// Exact coefficient fields: the rationals (GMP) and prime fields F_p.
// Generic code talks to a field object; scalars are plain values.

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "errors.hpp"

namespace lyubeznik {

struct FieldSpec {
  enum class Kind { rationals, prime_field };

  Kind kind = Kind::rationals;
  std::uint32_t p = 0;

  static FieldSpec rationals() { return {}; }

  static FieldSpec prime(std::uint64_t p) {
    if (p < 2 || p >= (std::uint64_t{1} << 31)) {
      throw input_error("prime modulus " + std::to_string(p) + " outside [2, 2^31)");
    }
    for (std::uint64_t d = 2; d * d <= p; ++d) {
      if (p % d == 0) throw input_error(std::to_string(p) + " is not prime");
    }
    return {Kind::prime_field, static_cast<std::uint32_t>(p)};
  }

  /// "q" or "fp:<p>".
  static FieldSpec parse(const std::string& text) {
    if (text == "q" || text == "Q") return rationals();
    if (text.rfind("fp:", 0) == 0 && text.size() > 3) {
      const std::string digits = text.substr(3);
      if (digits.size() > 12 || digits.find_first_not_of("0123456789") != std::string::npos) {
        throw input_error("bad field modulus '" + digits + "'");
      }
      return prime(std::stoull(digits));
    }
    throw input_error("unknown field '" + text + "' (expected q or fp:<p>)");
  }

  bool is_rationals() const noexcept { return kind == Kind::rationals; }

  std::string to_string() const {
    return is_rationals() ? "q" : "fp:" + std::to_string(p);
  }

  /// Characteristic: 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return is_rationals() ? 0 : p; }

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

class RationalField {
 public:
  using scalar = mpq_class;

  scalar zero() const { return scalar(0); }
  scalar one() const { return scalar(1); }
  scalar from_int(long v) const { return scalar(v); }

  bool is_zero(const scalar& a) const { return sgn(a) == 0; }
  bool equal(const scalar& a, const scalar& b) const { return a == b; }

  scalar add(const scalar& a, const scalar& b) const { return a + b; }
  scalar sub(const scalar& a, const scalar& b) const { return a - b; }
  scalar mul(const scalar& a, const scalar& b) const { return a * b; }
  scalar neg(const scalar& a) const { return -a; }
  scalar inv(const scalar& a) const {
    if (is_zero(a)) throw contract_error("division by zero");
    return 1 / a;
  }
  scalar div(const scalar& a, const scalar& b) const { return mul(a, inv(b)); }

  std::string to_string(const scalar& a) const { return a.get_str(); }
  FieldSpec spec() const { return FieldSpec::rationals(); }
};

class PrimeField {
 public:
  using scalar = std::uint32_t;

  explicit PrimeField(std::uint32_t p) : p_(p) {}

  std::uint32_t modulus() const noexcept { return p_; }

  scalar zero() const { return 0; }
  scalar one() const { return 1 % p_; }
  scalar from_int(long v) const {
    long r = v % static_cast<long>(p_);
    return static_cast<scalar>(r < 0 ? r + static_cast<long>(p_) : r);
  }

  bool is_zero(scalar a) const { return a == 0; }
  bool equal(scalar a, scalar b) const { return a == b; }

  scalar add(scalar a, scalar b) const {
    const std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<scalar>(s >= p_ ? s - p_ : s);
  }
  scalar sub(scalar a, scalar b) const { return a >= b ? a - b : static_cast<scalar>(a + (p_ - b)); }
  scalar mul(scalar a, scalar b) const {
    return static_cast<scalar>((std::uint64_t{a} * b) % p_);
  }
  scalar neg(scalar a) const { return a == 0 ? 0 : p_ - a; }
  scalar inv(scalar a) const {
    if (a == 0) throw contract_error("division by zero");
    // Fermat: a^(p−2).
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<scalar>(result);
  }
  scalar div(scalar a, scalar b) const { return mul(a, inv(b)); }

  std::string to_string(scalar a) const { return std::to_string(a); }
  FieldSpec spec() const { return {FieldSpec::Kind::prime_field, p_}; }

 private:
  std::uint32_t p_;
};

/// Call fn with the concrete field object named by spec.
template <class Fn>
decltype(auto) visit_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rationals()) return fn(RationalField{});
  return fn(PrimeField{spec.p});
}

}  // namespace lyubeznik

#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "vnumlab/error.hpp"

namespace vnl {

using Exponent = std::uint32_t;
using Degree = std::int64_t;

/// Upper bound on the number of ring variables; monomials are stored inline.
inline constexpr std::size_t kMaxVars = 16;

/// Variables of a weighted polynomial ring over a field. Every weight is at
/// least one, so every nonunit monomial has positive degree.
class RingSpec {
 public:
  RingSpec(std::vector<std::string> vars, std::vector<Exponent> weights);
  explicit RingSpec(std::vector<std::string> vars);

  std::size_t size() const noexcept { return vars_.size(); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::vector<Exponent>& weights() const noexcept { return weights_; }
  const std::string& var(std::size_t i) const { return vars_.at(i); }
  Exponent weight(std::size_t i) const { return weights_.at(i); }

  /// Index of a variable name, or -1.
  int index_of(std::string_view name) const noexcept;
  bool unit_weights() const noexcept;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  std::vector<std::string> vars_;
  std::vector<Exponent> weights_;
};

using RingPtr = std::shared_ptr<const RingSpec>;

RingPtr make_ring(std::vector<std::string> vars, std::vector<Exponent> weights = {});

/// Throws Domain when two ring handles describe different rings.
void require_same_ring(const RingPtr& a, const RingPtr& b);

/// Exponent vector. Its length is fixed at construction and must match the
/// ring it is used with.
class Monomial {
 public:
  Monomial() = default;
  /// Unit monomial in `nvars` variables.
  explicit Monomial(std::size_t nvars);
  Monomial(std::initializer_list<Exponent> exps);
  explicit Monomial(const std::vector<Exponent>& exps);

  static Monomial variable(std::size_t nvars, std::size_t index, Exponent power = 1);

  std::size_t size() const noexcept { return n_; }
  Exponent operator[](std::size_t i) const noexcept { return e_[i]; }
  Exponent& operator[](std::size_t i) noexcept { return e_[i]; }

  bool is_unit() const noexcept;
  /// Sum of exponents (ignores weights).
  std::uint64_t total() const noexcept;
  /// Number of variables with positive exponent.
  std::size_t support_size() const noexcept;
  /// True when exactly one variable occurs.
  bool is_pure_power() const noexcept { return support_size() == 1; }

  /// a | b componentwise.
  bool divides(const Monomial& other) const noexcept;

  Monomial operator*(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const noexcept;
  Monomial lcm(const Monomial& other) const noexcept;
  /// Truncated difference max(a - b, 0): the generator of (a) : b.
  Monomial colon(const Monomial& other) const noexcept;

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept;
  friend bool operator!=(const Monomial& a, const Monomial& b) noexcept { return !(a == b); }

  std::vector<Exponent> exponents() const { return {e_.begin(), e_.begin() + n_}; }

 private:
  std::array<Exponent, kMaxVars> e_{};
  std::uint8_t n_ = 0;
};

/// Weighted degree sum w_i e_i.
Degree degree(const Monomial& m, const RingSpec& ring);

/// Canonical order: ascending weighted degree, then lexicographically larger
/// exponent vector first (x_1 > x_2 > ...). Strict weak ordering.
bool canonical_less(const Monomial& a, const Monomial& b, const RingSpec& ring);

struct LatticeResult {
  bool divides;
  Monomial gcd;
  Monomial lcm;
  Monomial colon;
};

LatticeResult lattice(const Monomial& a, const Monomial& b);

/// Parses `term ("*" term)*`, `term := var | var "^" posint | "1"`.
Monomial parse_monomial(std::string_view text, const RingSpec& ring);

/// Variables in declaration order, `^` omitted for exponent 1, unit is "1".
std::string render(const Monomial& m, const RingSpec& ring);

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

}  // namespace vnl

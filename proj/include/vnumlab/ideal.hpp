#pragma once

#include <limits>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "vnumlab/monomial.hpp"

namespace vnl {

inline constexpr std::size_t kNoGeneratorLimit = std::numeric_limits<std::size_t>::max();

/// Monomial ideal held by its minimal generators in canonical order.
///
/// The zero ideal is the ideal with no generators; the unit ideal is
/// generated by the unit monomial alone.
class MonomialIdeal {
 public:
  /// Divisibility-minimal subset of `gens`. Throws Domain on an empty set.
  static MonomialIdeal minimalize(RingPtr ring, std::vector<Monomial> gens);
  static MonomialIdeal unit(RingPtr ring);
  static MonomialIdeal zero(RingPtr ring);
  static MonomialIdeal principal(RingPtr ring, const Monomial& m);

  const RingPtr& ring() const noexcept { return ring_; }
  const RingSpec& ring_spec() const noexcept { return *ring_; }
  const std::vector<Monomial>& gens() const noexcept { return gens_; }
  std::size_t size() const noexcept { return gens_.size(); }

  bool is_zero() const noexcept { return gens_.empty(); }
  bool is_unit() const noexcept { return gens_.size() == 1 && gens_[0].is_unit(); }
  bool is_proper() const noexcept { return !is_unit(); }

  bool contains(const Monomial& m) const noexcept;
  /// Ideal containment other ⊆ *this.
  bool contains(const MonomialIdeal& other) const;

  /// Largest exponent of each variable over the generators.
  Monomial max_exponents() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b);

 private:
  MonomialIdeal(RingPtr ring, std::vector<Monomial> gens)
      : ring_(std::move(ring)), gens_(std::move(gens)) {}
  static MonomialIdeal from_candidates(RingPtr ring, std::vector<Monomial> cands);

  RingPtr ring_;
  std::vector<Monomial> gens_;
};

enum class Combine { Sum, Product };

MonomialIdeal combine(const MonomialIdeal& a, const MonomialIdeal& b, Combine mode,
                      std::size_t limit = kNoGeneratorLimit);
MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b,
                      std::size_t limit = kNoGeneratorLimit);
/// I^0 = (1); iterated product with minimalization after every step.
MonomialIdeal power(const MonomialIdeal& ideal, unsigned n, std::size_t limit = kNoGeneratorLimit);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b,
                        std::size_t limit = kNoGeneratorLimit);
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& by);
/// (I : J) as the intersection of (I : h) over generators h of J.
MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by);

struct Saturation {
  MonomialIdeal ideal;
  /// First k >= 1 with (I : J^k) = (I : J^(k-1)).
  unsigned onset;
};

Saturation saturate(const MonomialIdeal& ideal, const MonomialIdeal& by);

/// Weighted degrees of the minimal generators, sorted ascending, with
/// multiplicity. Throws Domain for the unit ideal.
std::vector<Degree> generator_degrees(const MonomialIdeal& ideal);

/// Comma-separated monomials in parentheses; "(0)" for the zero ideal.
MonomialIdeal parse_ideal(std::string_view text, const RingPtr& ring);
std::string render(const MonomialIdeal& ideal);

}  // namespace vnl

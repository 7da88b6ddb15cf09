#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vnumlab/ideal.hpp"

namespace vnl {

/// Prime generated by a subset of the variables. The empty support is the
/// zero prime, which only occurs as an annihilator in a free component.
class MonomialPrime {
 public:
  MonomialPrime(RingPtr ring, std::vector<std::size_t> support);
  /// Prime generated by the variables with nonzero exponent in `mask`.
  static MonomialPrime from_mask(RingPtr ring, const Monomial& mask);
  /// The maximal homogeneous ideal (all variables).
  static MonomialPrime maximal(RingPtr ring);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<std::size_t>& support() const noexcept { return support_; }
  bool is_zero() const noexcept { return support_.empty(); }
  bool has(std::size_t var) const noexcept;

  MonomialIdeal as_ideal() const;

  friend bool operator==(const MonomialPrime& a, const MonomialPrime& b) noexcept {
    return a.support_ == b.support_;
  }
  /// Sorted by support size, then lexicographically by variable index.
  friend bool operator<(const MonomialPrime& a, const MonomialPrime& b) noexcept;

 private:
  RingPtr ring_;
  std::vector<std::size_t> support_;
};

/// Canonically sorted, duplicate-free set of primes.
using PrimeSet = std::vector<MonomialPrime>;

void normalize(PrimeSet& set);
PrimeSet set_union(const PrimeSet& a, const PrimeSet& b);
PrimeSet set_difference(const PrimeSet& a, const PrimeSet& b);
PrimeSet set_intersection(const PrimeSet& a, const PrimeSet& b);
bool contains(const PrimeSet& set, const MonomialPrime& p);

/// "(X,Y)"; the zero prime renders as "(0)".
std::string render(const MonomialPrime& p);
/// "{(X),(X,Y)}".
std::string render(const PrimeSet& set);
MonomialPrime parse_prime(std::string_view text, const RingPtr& ring);

/// I ⊆ p: every generator of I is divisible by a variable of p.
bool prime_contains(const MonomialPrime& p, const MonomialIdeal& ideal);

/// Elements of the set lying in V(I).
PrimeSet restrict_to_variety(const PrimeSet& set, const MonomialIdeal& ideal);
/// Elements of the set outside V(I).
PrimeSet remove_variety(const PrimeSet& set, const MonomialIdeal& ideal);

struct SplitOptions {
  /// When set, the splitting pivot is drawn pseudo-randomly from the
  /// non-pure-power generators instead of taking the first one.
  std::optional<std::uint64_t> shuffle_seed;
};

/// Irredundant irreducible decomposition by generator splitting:
/// I = (I + (u)) ∩ (I + (v)) for a generator u*v with coprime u, v.
/// Each returned ideal is generated by pure powers. Throws Domain for (1).
std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal,
                                                     const SplitOptions& options = {});

/// Support of the variables occurring in the generators.
MonomialPrime radical_of_irreducible(const MonomialIdeal& component);

struct PrimaryComponent {
  MonomialIdeal ideal;
  MonomialPrime radical;
};

/// Irreducible components grouped by radical and intersected, followed by
/// redundancy removal to a fixed point.
std::vector<PrimaryComponent> irredundant_primary(const MonomialIdeal& ideal);

/// Ass(R/I) as the radicals of the irredundant primary decomposition.
PrimeSet ass_quotient(const MonomialIdeal& ideal);

/// Maximal standard monomial of the artinian closure of an ideal. Corners
/// correspond one-to-one to the irredundant irreducible components: the
/// component is (x_i^(c_i + 1) : i in radical).
struct Corner {
  Monomial exponents;  // zero outside the radical's support
  MonomialPrime radical;
};

/// Corners computed by adding generators one at a time and splitting every
/// corner the new generator divides. Independent of the splitting recursion.
std::vector<Corner> corners(const MonomialIdeal& ideal);

/// Least-degree monomial m ∈ A \ B with (B : m) = p, for one p.
struct PrimeWitness {
  MonomialPrime prime;
  Degree degree;  // weighted degree of the witness, without any shift
  Monomial witness;
};

/// One entry per associated prime of A/B (B ⊆ A required), sorted by prime.
/// Ties among witnesses of equal degree resolve to the canonically first.
std::vector<PrimeWitness> minimal_witnesses(const MonomialIdeal& a, const MonomialIdeal& b);
/// Same, reusing corners(b) computed by the caller.
std::vector<PrimeWitness> minimal_witnesses(const MonomialIdeal& a, const MonomialIdeal& b,
                                            const std::vector<Corner>& corners_of_b);

/// Ass(A/B) for monomial ideals B ⊆ A. Throws Domain when B ⊄ A.
PrimeSet ass_subquotient(const MonomialIdeal& a, const MonomialIdeal& b);

/// Exhaustive search over the exponent box e_i <= c_i, c_i being the largest
/// exponent of x_i over gens(A) ∪ gens(B) plus `slack`. Same result type as
/// minimal_witnesses; used as an independent oracle. Throws OracleCap when the
/// box has more than `max_points` points.
std::vector<PrimeWitness> box_witness_search(const MonomialIdeal& a, const MonomialIdeal& b,
                                             Exponent slack = 0,
                                             std::size_t max_points = 20'000'000);

}  // namespace vnl

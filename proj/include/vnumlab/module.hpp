#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vnumlab/decomposition.hpp"
#include "vnumlab/ideal.hpp"

namespace vnl {

/// Extended integer: a finite degree or +∞ (the initial degree and the
/// v-number of the zero module).
class ExtDegree {
 public:
  constexpr ExtDegree() = default;  // +∞
  constexpr ExtDegree(Degree value) : value_(value), finite_(true) {}  // NOLINT(implicit)
  static constexpr ExtDegree infinity() { return {}; }

  constexpr bool finite() const noexcept { return finite_; }
  Degree value() const {
    if (!finite_) fail(ErrorKind::Domain, "value of an infinite degree");
    return value_;
  }

  friend constexpr bool operator==(ExtDegree a, ExtDegree b) noexcept {
    return a.finite_ == b.finite_ && (!a.finite_ || a.value_ == b.value_);
  }
  friend constexpr bool operator<(ExtDegree a, ExtDegree b) noexcept {
    if (!a.finite_) return false;
    if (!b.finite_) return true;
    return a.value_ < b.value_;
  }
  friend constexpr bool operator<=(ExtDegree a, ExtDegree b) noexcept { return !(b < a); }

 private:
  Degree value_ = 0;
  bool finite_ = false;
};

/// "inf" for +∞.
std::string render(ExtDegree d);

/// R(-shift) · (A / B) with B ⊆ A.
struct ModuleComponent {
  Degree shift = 0;
  MonomialIdeal numerator;    // A
  MonomialIdeal denominator;  // B
};

/// Finite direct sum of shifted monomial subquotients.
class SubquotientModule {
 public:
  SubquotientModule(RingPtr ring, std::vector<ModuleComponent> components);

  const RingPtr& ring() const noexcept { return ring_; }
  const std::vector<ModuleComponent>& components() const noexcept { return components_; }
  bool is_zero() const;

  friend bool operator==(const SubquotientModule& a, const SubquotientModule& b);

 private:
  RingPtr ring_;
  std::vector<ModuleComponent> components_;
};

/// One summand of M = ⊕ R(-s_j)/J_j with N = ⊕ (K_j + J_j)/J_j.
struct FamilyComponent {
  Degree shift = 0;
  MonomialIdeal relations;   // J_j (may be zero for a free summand)
  MonomialIdeal generators;  // K_j, normalized to contain J_j
};

/// Data of the families n ↦ M/I^nN and n ↦ I^(n-1)N/I^nN.
class FamilySpec {
 public:
  /// `submodule` empty means N = M. Otherwise one ideal per component; each
  /// is normalized to K_j + J_j.
  FamilySpec(RingPtr ring, MonomialIdeal ideal, std::vector<Degree> shifts,
             std::vector<MonomialIdeal> relations, std::vector<MonomialIdeal> submodule = {});

  const RingPtr& ring() const noexcept { return ring_; }
  const MonomialIdeal& ideal() const noexcept { return ideal_; }
  const std::vector<FamilyComponent>& components() const noexcept { return components_; }
  /// True when N was given explicitly rather than defaulted to M.
  bool has_submodule() const noexcept { return has_submodule_; }

  friend bool operator==(const FamilySpec& a, const FamilySpec& b);

 private:
  RingPtr ring_;
  MonomialIdeal ideal_;
  std::vector<FamilyComponent> components_;
  bool has_submodule_ = false;
};

enum class Target { M, N, MOverN };

SubquotientModule present(const FamilySpec& spec, Target target);

enum class PowerTarget {
  MOverPowerN,  // M / I^n N
  PowerN,       // I^n N
  Layer,        // I^(n-1) N / I^n N, n >= 1
};

/// I^n K_j + J_j for every component. `power` must be I^n.
std::vector<MonomialIdeal> power_relations(const FamilySpec& spec, const MonomialIdeal& power,
                                           std::size_t limit = kNoGeneratorLimit);

SubquotientModule power_layer(const FamilySpec& spec, unsigned n, PowerTarget which,
                              std::size_t limit = kNoGeneratorLimit);

/// (0 :_M I^power) = ⊕ (J_j : I^power) / J_j.
SubquotientModule colon_submodule(const FamilySpec& spec, unsigned power = 1);

struct TorsionSubmodule {
  SubquotientModule module;  // Γ_I(M)
  unsigned onset;            // largest saturation onset over components
};

TorsionSubmodule gamma(const FamilySpec& spec);

/// Spec of M/Γ_I(M) with N mapped to its image: J_j ← (J_j : I^∞).
FamilySpec quotient_by_gamma(const FamilySpec& spec);

/// Least degree of a nonzero homogeneous element; +∞ for the zero module.
ExtDegree indeg(const SubquotientModule& module);

/// Least k <= bound with I^k ⊆ K_j for every component, i.e. I^k M ⊆ N.
std::optional<unsigned> power_containment_index(const FamilySpec& spec, unsigned bound);

enum class Torsion {
  Colon,  // (0 :_M I)
  Gamma,  // Γ_I(M)
};

/// Least n0 <= n_max such that T ∩ I^n N = 0 for every n0 <= n <= n_max,
/// with T the chosen torsion submodule. Componentwise this reads
/// T_j ∩ (I^n K_j + J_j) = J_j.
std::optional<unsigned> artin_rees_onset(const FamilySpec& spec, unsigned n_max,
                                         Torsion torsion = Torsion::Colon,
                                         std::size_t limit = kNoGeneratorLimit);

}  // namespace vnl

#pragma once

#include <cstddef>
#include <vector>

#include "vnumlab/module.hpp"

namespace vnl {

/// v_p of a module with the monomial realizing it.
struct LocalVNumber {
  MonomialPrime prime;
  ExtDegree value;
  Monomial witness;       // lives in component `component`
  std::size_t component;  // index into the module's components
};

/// Per-prime values for every associated prime plus their minimum.
struct VNumberResult {
  std::vector<LocalVNumber> locals;  // sorted by prime
  ExtDegree global;                  // +∞ for the zero module

  PrimeSet ass() const;
  /// Nullptr when p is not associated.
  const LocalVNumber* find(const MonomialPrime& p) const;
};

/// Ass of a direct sum of shifted subquotients: union over components.
PrimeSet ass(const SubquotientModule& module);

VNumberResult global_vnumber(const SubquotientModule& module);
/// Same, reusing corners of each component's denominator.
VNumberResult global_vnumber(const SubquotientModule& module,
                             const std::vector<std::vector<Corner>>& denominator_corners);

/// Throws NotAssociated when p is not an associated prime of the module.
LocalVNumber local_vnumber(const SubquotientModule& module, const MonomialPrime& p);

struct FieldOracleOptions {
  /// Largest number of monomial images in one graded piece.
  std::size_t max_basis = 12;
};

/// Least degree d <= degree_cap of a homogeneous element x, with coefficients
/// in the two-element field, whose annihilator is exactly p. Returns +∞ when
/// no degree up to the cap qualifies. Throws OracleCap when a graded piece is
/// larger than options.max_basis.
ExtDegree field_witness_oracle(const SubquotientModule& module, const MonomialPrime& p,
                               Degree degree_cap, const FieldOracleOptions& options = {});

}  // namespace vnl

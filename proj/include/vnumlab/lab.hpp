#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "vnumlab/vnumber.hpp"

namespace vnl {

struct LabOptions {
  unsigned n_max = 15;
  unsigned window = 5;
  std::size_t generator_limit = 20000;
  unsigned threads = 0;  // 0 picks the hardware concurrency
};

struct ModuleInvariants {
  VNumberResult v;
  ExtDegree indeg;
};

struct InvariantRecord {
  unsigned n = 0;
  std::vector<MonomialIdeal> relations;   // I^n K_j + J_j, the presentation of M/I^nN
  ModuleInvariants quotient;              // M/I^nN
  std::optional<ModuleInvariants> layer;  // I^(n-1)N/I^nN, n >= 1
  ExtDegree indeg_power;                  // indeg(I^nN)
};

/// Invariants that do not depend on n.
struct StaticInvariants {
  ModuleInvariants module;  // M
  ModuleInvariants base;    // M/N
  ModuleInvariants colon;   // (0 :_M I)
  ModuleInvariants gamma;   // Γ_I(M)
  unsigned gamma_onset = 1;
};

struct FamilyEvaluation {
  FamilySpec spec;
  unsigned n_max = 0;
  StaticInvariants statics;
  std::vector<InvariantRecord> records;  // n = 0, 1, ...; shorter when truncated
  std::optional<std::string> truncated;  // reason when the generator limit stopped the scan
};

/// Records for n = 0..n_max. Stops early, keeping partial results, when an
/// ideal outgrows options.generator_limit.
FamilyEvaluation evaluate_family(const FamilySpec& spec, const LabOptions& options);

enum class Series { Quotient, Layer };

/// Ass of the chosen family for n = 1..last computed n.
std::vector<PrimeSet> ass_series(const FamilyEvaluation& eval, Series series);
/// v_p for n = 1..last; +∞ where p is not associated.
std::vector<ExtDegree> local_series(const FamilyEvaluation& eval, Series series,
                                    const MonomialPrime& p);
std::vector<ExtDegree> global_series(const FamilyEvaluation& eval, Series series);

struct Stabilization {
  bool determined = false;
  unsigned onset = 0;  // first index of the constant tail
  PrimeSet set;
  unsigned window = 0;
};

/// `sets[k]` belongs to index first_index + k. The constant tail must be at
/// least `window` long. Throws Domain for window < 2.
Stabilization detect_stabilization(const std::vector<PrimeSet>& sets, unsigned first_index,
                                   unsigned window);

enum class FitKind { Constant, Linear, Undetermined };

struct LinearFit {
  FitKind kind = FitKind::Undetermined;
  Degree a = 0;
  Degree b = 0;
  unsigned onset = 0;
  unsigned window = 0;
};

/// Longest tail with constant first differences; `values[k]` belongs to
/// index first_index + k. Throws Domain for window < 3.
LinearFit fit_tail(const std::vector<ExtDegree>& values, unsigned first_index, unsigned window);

/// "3n - 1 (n ≥ 3, window 5)" prefixed by `name = `.
std::string render_fit(const std::string& name, const LinearFit& fit);

struct FitRecord {
  std::string module;                  // "quotient" or "layer"
  std::optional<MonomialPrime> prime;  // none for the global v-number
  LinearFit fit;
};

/// Fits of every local and the global v-number, for both families.
std::vector<FitRecord> fit_all(const FamilyEvaluation& eval, unsigned window);

enum class VerdictStatus { Pass, Fail, NotApplicable, Undetermined };

std::string render(VerdictStatus status);

struct Verdict {
  std::string id;
  std::string prime;  // empty for global checks
  VerdictStatus status = VerdictStatus::Pass;
  std::string detail;
};

/// Runs every check on an evaluated family. `window` sizes the stable tails.
std::vector<Verdict> verify(const FamilyEvaluation& eval, const LabOptions& options);

struct RandomParams {
  unsigned vars = 3;
  unsigned max_deg = 3;
  unsigned gens = 3;
  unsigned components = 1;
  unsigned max_weight = 1;
};

/// Deterministic spec from a seed. Throws Domain for invalid params.
FamilySpec random_instance(std::uint64_t seed, const RandomParams& params);

/// Seed of trial `index` derived from a base seed.
std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index);

struct TrialFit {
  MonomialPrime prime;
  LinearFit fit;
  std::vector<ExtDegree> values;  // v_p(M/I^nN) for n = 1..n_max
};

struct Trial {
  std::uint64_t seed = 0;
  FamilySpec spec;
  std::vector<TrialFit> fits;           // one per p in Ass(M/N) \ V(I)
  bool flagged = false;                 // some fit undetermined
  std::optional<std::string> skipped;   // resource cap hit
};

struct ExploreReport {
  std::uint64_t seed = 0;
  RandomParams params;
  LabOptions options;
  std::vector<Trial> trials;
  std::size_t flagged() const;
};

/// Searches random instances for primes outside V(I) whose v-number is not
/// eventually constant or linear.
ExploreReport explore_q45(std::uint64_t seed, unsigned trials, const RandomParams& params,
                          const LabOptions& options);

/// Runs fn(0..count-1) on up to `threads` workers; rethrows the first error.
void parallel_for(std::size_t count, unsigned threads, const std::function<void(std::size_t)>& fn);

}  // namespace vnl

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "vnumlab/lab.hpp"

namespace vnl {

enum class Format { Table, Csv, Json, Plot };

std::optional<Format> parse_format(std::string_view name);

enum class View {
  Ass,      // associated primes at one n
  VNumber,  // v-numbers at one n
  Analyze,  // records for every n plus fits
  Verify,   // analyze plus verdicts
};

struct Report {
  View view = View::Analyze;
  FamilyEvaluation eval;
  unsigned window = 5;
  std::optional<unsigned> point;  // n shown by the single-n views
  std::vector<FitRecord> fits;
  std::vector<Verdict> verdicts;
  Stabilization quotient_ass;
  Stabilization layer_ass;

  /// Number of failed verdicts.
  std::size_t failures() const;
};

/// Ass or VNumber view at a single n.
Report point_report(const FamilySpec& spec, View view, unsigned n, const LabOptions& options);
/// Analyze view; verdicts are added when `with_verdicts` is set.
Report analysis_report(const FamilySpec& spec, const LabOptions& options, bool with_verdicts);

std::string render(const Report& report, Format format, bool color = false);
std::string render(const ExploreReport& report, Format format, bool color = false);

}  // namespace vnl

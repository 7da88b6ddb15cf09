#include "vnumlab.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>
#include <variant>

#include "vnumlab/input.hpp"
#include "vnumlab/report.hpp"

struct vnl_family {
  vnl::FamilySpec spec;
};

struct vnl_report {
  std::variant<vnl::Report, vnl::ExploreReport> value;
};

namespace {

thread_local std::string last_error;

vnl_status set_error(vnl_status status, const std::string& what) {
  last_error = what;
  return status;
}

vnl_status status_of(vnl::ErrorKind kind, bool parsing) {
  switch (kind) {
    case vnl::ErrorKind::Parse: return VNL_ERR_INPUT;
    case vnl::ErrorKind::Domain: return parsing ? VNL_ERR_INPUT : VNL_ERR_ARGUMENT;
    case vnl::ErrorKind::NotAssociated: return VNL_ERR_NOT_ASSOCIATED;
    case vnl::ErrorKind::Resource: return VNL_ERR_RESOURCE;
    case vnl::ErrorKind::OracleCap: return VNL_ERR_ORACLE_CAP;
  }
  return VNL_ERR_INTERNAL;
}

// Runs fn, translating exceptions into status codes.
template <class Fn>
vnl_status guarded(Fn&& fn, bool parsing = false) {
  try {
    last_error.clear();
    fn();
    return VNL_OK;
  } catch (const vnl::Error& e) {
    return set_error(status_of(e.kind(), parsing), e.what());
  } catch (const std::bad_alloc&) {
    return set_error(VNL_ERR_RESOURCE, "out of memory");
  } catch (const std::exception& e) {
    return set_error(VNL_ERR_INTERNAL, e.what());
  } catch (...) {
    return set_error(VNL_ERR_INTERNAL, "unknown error");
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

vnl::LabOptions lab_options(const vnl_lab_options* o) {
  vnl::LabOptions out;
  if (!o) return out;
  if (o->n_max == 0) vnl::fail(vnl::ErrorKind::Domain, "n_max must be positive");
  if (o->window == 0) vnl::fail(vnl::ErrorKind::Domain, "window must be positive");
  out.n_max = o->n_max;
  out.window = o->window;
  out.generator_limit = o->generator_limit;
  out.threads = o->threads;
  return out;
}

vnl::RandomParams random_params(const vnl_random_params* p) {
  vnl::RandomParams out;
  if (!p) return out;
  out.vars = p->vars;
  out.max_deg = p->max_deg;
  out.gens = p->gens;
  out.components = p->components;
  out.max_weight = p->max_weight;
  return out;
}

#define VNL_REQUIRE(cond, what) \
  if (!(cond)) return set_error(VNL_ERR_ARGUMENT, what)

}  // namespace

extern "C" {

const char* vnl_version(void) { return "1.0.0"; }

const char* vnl_last_error(void) { return last_error.c_str(); }

vnl_lab_options vnl_lab_options_default(void) {
  const vnl::LabOptions d;
  return {d.n_max, d.window, d.generator_limit, d.threads};
}

vnl_random_params vnl_random_params_default(void) {
  const vnl::RandomParams d;
  return {d.vars, d.max_deg, d.gens, d.components, d.max_weight};
}

vnl_status vnl_family_parse(const char* text, vnl_family** out) {
  VNL_REQUIRE(text && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new vnl_family{vnl::parse_input(text)}; }, true);
}

vnl_status vnl_family_random(uint64_t seed, const vnl_random_params* params, vnl_family** out) {
  VNL_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new vnl_family{vnl::random_instance(seed, random_params(params))}; });
}

void vnl_family_free(vnl_family* family) { delete family; }

vnl_status vnl_family_echo(const vnl_family* family, char** out) {
  VNL_REQUIRE(family && out, "null argument");
  *out = nullptr;
  return guarded([&] { *out = copy_string(vnl::echo(family->spec)); });
}

static vnl_status run_point(const vnl_family* family, unsigned n, const vnl_lab_options* options,
                            vnl::View view, vnl_report** out) {
  VNL_REQUIRE(family && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new vnl_report{vnl::point_report(family->spec, view, n, lab_options(options))};
  });
}

vnl_status vnl_run_ass(const vnl_family* family, unsigned n, const vnl_lab_options* options,
                       vnl_report** out) {
  return run_point(family, n, options, vnl::View::Ass, out);
}

vnl_status vnl_run_vnumber(const vnl_family* family, unsigned n, const vnl_lab_options* options,
                           vnl_report** out) {
  return run_point(family, n, options, vnl::View::VNumber, out);
}

static vnl_status run_analysis(const vnl_family* family, const vnl_lab_options* options,
                               bool verdicts, vnl_report** out) {
  VNL_REQUIRE(family && out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new vnl_report{vnl::analysis_report(family->spec, lab_options(options), verdicts)};
  });
}

vnl_status vnl_run_analyze(const vnl_family* family, const vnl_lab_options* options,
                           vnl_report** out) {
  return run_analysis(family, options, false, out);
}

vnl_status vnl_run_verify(const vnl_family* family, const vnl_lab_options* options,
                          vnl_report** out) {
  return run_analysis(family, options, true, out);
}

vnl_status vnl_run_explore(uint64_t seed, unsigned trials, const vnl_random_params* params,
                           const vnl_lab_options* options, vnl_report** out) {
  VNL_REQUIRE(out, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new vnl_report{
        vnl::explore_q45(seed, trials, random_params(params), lab_options(options))};
  });
}

size_t vnl_report_flagged(const vnl_report* report) {
  if (!report) return 0;
  if (const auto* r = std::get_if<vnl::Report>(&report->value)) return r->failures();
  return std::get<vnl::ExploreReport>(report->value).flagged();
}

int vnl_report_truncated(const vnl_report* report) {
  if (!report) return 0;
  if (const auto* r = std::get_if<vnl::Report>(&report->value))
    return r->eval.truncated.has_value() ? 1 : 0;
  for (const auto& t : std::get<vnl::ExploreReport>(report->value).trials)
    if (t.skipped) return 1;
  return 0;
}

vnl_status vnl_report_render(const vnl_report* report, vnl_format format, int color, char** out) {
  VNL_REQUIRE(report && out, "null argument");
  *out = nullptr;
  vnl::Format f;
  switch (format) {
    case VNL_FORMAT_TABLE: f = vnl::Format::Table; break;
    case VNL_FORMAT_CSV: f = vnl::Format::Csv; break;
    case VNL_FORMAT_JSON: f = vnl::Format::Json; break;
    case VNL_FORMAT_PLOT: f = vnl::Format::Plot; break;
    default: return set_error(VNL_ERR_ARGUMENT, "unknown format");
  }
  return guarded([&] {
    std::visit([&](const auto& r) { *out = copy_string(vnl::render(r, f, color != 0)); },
               report->value);
  });
}

void vnl_report_free(vnl_report* report) { delete report; }

void vnl_string_free(char* s) { std::free(s); }

}  // extern "C"

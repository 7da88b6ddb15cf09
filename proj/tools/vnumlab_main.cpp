// Command-line front end. Talks to the library only through the C interface.
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "vnumlab.h"

namespace {

enum Exit { kOk = 0, kFailed = 1, kInput = 2, kResource = 3 };

struct Settings {
  std::string input;
  unsigned n = 1;
  unsigned n_max = 15;
  unsigned window = 5;
  std::string format = "table";
  std::uint64_t seed = 1;
  unsigned trials = 50;
  std::string out;
  unsigned threads = 0;
  std::size_t generator_limit = 20000;
  vnl_random_params random = vnl_random_params_default();
};

struct FamilyDeleter {
  void operator()(vnl_family* f) const { vnl_family_free(f); }
};
struct ReportDeleter {
  void operator()(vnl_report* r) const { vnl_report_free(r); }
};
using FamilyPtr = std::unique_ptr<vnl_family, FamilyDeleter>;
using ReportPtr = std::unique_ptr<vnl_report, ReportDeleter>;

int exit_for(vnl_status s) {
  switch (s) {
    case VNL_OK: return kOk;
    case VNL_ERR_INPUT:
    case VNL_ERR_ARGUMENT: return kInput;
    case VNL_ERR_RESOURCE:
    case VNL_ERR_ORACLE_CAP: return kResource;
    default: return kFailed;
  }
}

int report_error(vnl_status s, const std::string& context) {
  std::cerr << "vnumlab: " << context << vnl_last_error() << "\n";
  return exit_for(s);
}

std::optional<std::string> read_input(const std::string& path) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(std::cin), {});
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

vnl_format format_of(const std::string& name) {
  if (name == "csv") return VNL_FORMAT_CSV;
  if (name == "json") return VNL_FORMAT_JSON;
  if (name == "plot") return VNL_FORMAT_PLOT;
  return VNL_FORMAT_TABLE;
}

int emit(const vnl_report* report, const Settings& s) {
  const vnl_format fmt = format_of(s.format);
  const bool to_file = !s.out.empty();
  const bool color = fmt == VNL_FORMAT_TABLE && !to_file && isatty(STDOUT_FILENO) &&
                     std::getenv("NO_COLOR") == nullptr;
  char* text = nullptr;
  if (auto st = vnl_report_render(report, fmt, color ? 1 : 0, &text); st != VNL_OK)
    return report_error(st, "");
  std::unique_ptr<char, decltype(&vnl_string_free)> owned(text, vnl_string_free);
  if (to_file) {
    std::ofstream out(s.out, std::ios::binary);
    if (!out || !(out << text)) {
      std::cerr << "vnumlab: cannot write " << s.out << "\n";
      return kInput;
    }
  } else {
    std::cout << text << std::flush;
  }
  return kOk;
}

// Exit code for a finished report: flags first, then truncation.
int outcome(const vnl_report* report) {
  if (vnl_report_flagged(report) > 0) return kFailed;
  if (vnl_report_truncated(report)) {
    std::cerr << "vnumlab: resource cap reached, output is partial\n";
    return kResource;
  }
  return kOk;
}

int run(const std::string& command, const Settings& s) {
  vnl_lab_options options = vnl_lab_options_default();
  options.n_max = s.n_max;
  options.window = s.window;
  options.threads = s.threads;
  options.generator_limit = s.generator_limit;

  vnl_report* raw = nullptr;
  vnl_status st;
  if (command == "explore-q45") {
    st = vnl_run_explore(s.seed, s.trials, &s.random, &options, &raw);
  } else {
    const auto text = read_input(s.input);
    if (!text) {
      std::cerr << "vnumlab: cannot read " << s.input << "\n";
      return kInput;
    }
    vnl_family* fam_raw = nullptr;
    if (auto ps = vnl_family_parse(text->c_str(), &fam_raw); ps != VNL_OK)
      return report_error(ps, s.input + ": ");
    FamilyPtr family(fam_raw);
    if (command == "ass")
      st = vnl_run_ass(family.get(), s.n, &options, &raw);
    else if (command == "vnumber")
      st = vnl_run_vnumber(family.get(), s.n, &options, &raw);
    else if (command == "analyze")
      st = vnl_run_analyze(family.get(), &options, &raw);
    else
      st = vnl_run_verify(family.get(), &options, &raw);
  }
  if (st != VNL_OK) return report_error(st, "");
  ReportPtr report(raw);
  if (int e = emit(report.get(), s); e != kOk) return e;
  return outcome(report.get());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Associated primes and v-numbers of monomial subquotient families"};
  app.set_version_flag("--version", std::string(vnl_version()));
  app.require_subcommand(1);
  Settings s;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", s.format, "Output format")
        ->check(CLI::IsMember({"table", "csv", "json", "plot"}))
        ->capture_default_str();
    sub->add_option("--out", s.out, "Write output to a file instead of stdout");
    sub->add_option("--threads", s.threads, "Worker threads, 0 for all cores")
        ->capture_default_str();
    sub->add_option("--generator-limit", s.generator_limit,
                    "Largest generating set an ideal may reach")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
  };
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("--input", s.input, "Family description file, - for stdin")->required();
  };
  auto add_horizon = [&](CLI::App* sub) {
    sub->add_option("--n-max", s.n_max, "Largest power evaluated")
        ->check(CLI::Range(1u, 10000u))
        ->capture_default_str();
    sub->add_option("--window", s.window, "Minimum tail length for fits")
        ->check(CLI::Range(3u, 10000u))
        ->capture_default_str();
  };

  for (const char* name : {"ass", "vnumber"}) {
    auto* sub = app.add_subcommand(
        name, std::string(name) == "ass" ? "Associated primes at one power"
                                         : "Local and global v-numbers at one power");
    add_input(sub);
    add_common(sub);
    sub->add_option("--n", s.n, "Power n")->check(CLI::Range(0u, 10000u))->capture_default_str();
  }
  auto* analyze = app.add_subcommand("analyze", "Invariants for n = 0..n-max with fits");
  add_input(analyze);
  add_horizon(analyze);
  add_common(analyze);
  auto* verify = app.add_subcommand("verify", "Check the stabilization and linearity statements");
  add_input(verify);
  add_horizon(verify);
  add_common(verify);

  auto* explore = app.add_subcommand("explore-q45", "Search random families for nonlinear tails");
  add_horizon(explore);
  add_common(explore);
  explore->add_option("--seed", s.seed, "Base seed")->capture_default_str();
  explore->add_option("--trials", s.trials, "Number of random families")
      ->check(CLI::Range(1u, 1000000u))
      ->capture_default_str();
  explore->add_option("--vars", s.random.vars, "Variables per ring (1..5)")
      ->check(CLI::Range(1u, 5u))
      ->capture_default_str();
  explore->add_option("--max-deg", s.random.max_deg, "Largest generator degree")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  explore->add_option("--gens", s.random.gens, "Generators per ideal")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  explore->add_option("--components", s.random.components, "Module components")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  explore->add_option("--max-weight", s.random.max_weight, "Largest variable weight")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInput;
  }
  return run(app.get_subcommands().front()->get_name(), s);
}

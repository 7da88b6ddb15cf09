#include "vnumlab/report.hpp"

#include <algorithm>
#include <sstream>

#include "json.hpp"
#include "vnumlab/input.hpp"

namespace vnl {

using nlohmann::json;

std::optional<Format> parse_format(std::string_view name) {
  if (name == "table") return Format::Table;
  if (name == "csv") return Format::Csv;
  if (name == "json") return Format::Json;
  if (name == "plot") return Format::Plot;
  return std::nullopt;
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(std::count_if(
      verdicts.begin(), verdicts.end(),
      [](const Verdict& v) { return v.status == VerdictStatus::Fail; }));
}

Report point_report(const FamilySpec& spec, View view, unsigned n, const LabOptions& options) {
  LabOptions o = options;
  o.n_max = std::max(n, 1u);
  Report r{view, evaluate_family(spec, o), options.window, n, {}, {}, {}, {}};
  return r;
}

Report analysis_report(const FamilySpec& spec, const LabOptions& options, bool with_verdicts) {
  Report r{with_verdicts ? View::Verify : View::Analyze,
           evaluate_family(spec, options),
           options.window,
           std::nullopt,
           {},
           {},
           {},
           {}};
  r.fits = fit_all(r.eval, options.window);
  r.quotient_ass = detect_stabilization(ass_series(r.eval, Series::Quotient), 1, options.window);
  r.layer_ass = detect_stabilization(ass_series(r.eval, Series::Layer), 1, options.window);
  if (with_verdicts) r.verdicts = verify(r.eval, options);
  return r;
}

namespace {

// ---------------------------------------------------------------------------
// Shared pieces

struct NamedModule {
  std::string name;
  const ModuleInvariants* inv;
};

std::vector<NamedModule> static_modules(const StaticInvariants& st) {
  return {{"M", &st.module}, {"base", &st.base}, {"colon", &st.colon}, {"gamma", &st.gamma}};
}

std::string label(const std::string& module) {
  if (module == "quotient") return "M/I^nN";
  if (module == "layer") return "I^(n-1)N/I^nN";
  if (module == "colon") return "(0:_M I)";
  if (module == "gamma") return "Γ_I(M)";
  if (module == "base") return "M/N";
  return module;
}

std::string witness_text(const LocalVNumber& l, const RingSpec& ring, std::size_t components) {
  std::string w = render(l.witness, ring);
  if (components > 1) w += "@" + std::to_string(l.component);
  return w;
}

std::vector<const InvariantRecord*> shown_records(const Report& r) {
  std::vector<const InvariantRecord*> out;
  for (const auto& rec : r.eval.records)
    if (!r.point || rec.n == *r.point) out.push_back(&rec);
  return out;
}

// Width in code points, so that "≥" and "∩" count once.
std::size_t display_width(const std::string& s) {
  std::size_t w = 0;
  for (unsigned char c : s)
    if ((c & 0xC0) != 0x80) ++w;
  return w;
}

class Table {
 public:
  explicit Table(std::vector<std::string> header) : header_(std::move(header)) {}
  void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

  std::string str(bool color) const {
    std::vector<std::size_t> width(header_.size(), 0);
    for (std::size_t c = 0; c < header_.size(); ++c) width[c] = display_width(header_[c]);
    for (const auto& r : rows_)
      for (std::size_t c = 0; c < r.size() && c < width.size(); ++c)
        width[c] = std::max(width[c], display_width(r[c]));
    std::string out;
    auto line = [&](const std::vector<std::string>& cells, bool bold) {
      std::string s;
      for (std::size_t c = 0; c < cells.size(); ++c) {
        std::string cell = cells[c];
        if (c + 1 < cells.size()) cell += std::string(width[c] - display_width(cell) + 2, ' ');
        s += cell;
      }
      while (!s.empty() && s.back() == ' ') s.pop_back();
      out += bold && color ? "\033[1m" + s + "\033[0m\n" : s + "\n";
    };
    line(header_, true);
    for (const auto& r : rows_) line(r, false);
    return out;
  }

 private:
  std::vector<std::string> header_;
  std::vector<std::vector<std::string>> rows_;
};

std::string heading(const std::string& text, bool color) {
  return color ? "\033[1m" + text + "\033[0m\n" : text + "\n";
}

std::string describe(const Stabilization& s, const std::string& what) {
  if (!s.determined)
    return "Ass(" + what + ") not stable within the horizon (window " + std::to_string(s.window) +
           ")";
  return "Ass(" + what + ") = " + render(s.set) + " for n ≥ " + std::to_string(s.onset) +
         " (window " + std::to_string(s.window) + ")";
}

std::string fit_name(const FitRecord& f) {
  std::string name = f.prime ? "v_" + render(*f.prime) : "v";
  return name + "(" + label(f.module) + ")";
}

// ---------------------------------------------------------------------------
// Table

void module_rows(Table& t, const std::string& n, const std::string& module,
                 const ModuleInvariants& inv, const RingSpec& ring, std::size_t comps) {
  if (inv.v.locals.empty()) {
    t.row({n, label(module), "-", "inf", "", render(inv.indeg)});
    return;
  }
  for (const auto& l : inv.v.locals)
    t.row({n, label(module), render(l.prime), render(l.value), witness_text(l, ring, comps),
           render(inv.indeg)});
  t.row({n, label(module), "min", render(inv.v.global), "", render(inv.indeg)});
}

std::string table(const Report& r, bool color) {
  const auto& eval = r.eval;
  const RingSpec& ring = *eval.spec.ring();
  const std::size_t comps = eval.spec.components().size();
  std::ostringstream out;
  out << heading("Family", color);
  std::istringstream spec(echo(eval.spec));
  for (std::string line; std::getline(spec, line);) out << "  " << line << "\n";
  out << "\n";

  if (r.view == View::Ass) {
    const auto* rec = shown_records(r).front();
    out << heading("Associated primes at n = " + std::to_string(rec->n), color);
    Table t({"module", "Ass"});
    t.row({label("quotient"), render(rec->quotient.v.ass())});
    if (rec->layer) t.row({label("layer"), render(rec->layer->v.ass())});
    for (const auto& m : static_modules(eval.statics)) t.row({label(m.name), render(m.inv->v.ass())});
    out << t.str(color);
    return out.str();
  }

  if (r.view == View::VNumber) {
    const auto* rec = shown_records(r).front();
    out << heading("Vasconcelos invariants at n = " + std::to_string(rec->n), color);
    Table t({"n", "module", "prime", "v", "witness", "indeg"});
    const std::string n = std::to_string(rec->n);
    module_rows(t, n, "quotient", rec->quotient, ring, comps);
    if (rec->layer) module_rows(t, n, "layer", *rec->layer, ring, comps);
    for (const auto& m : static_modules(eval.statics)) module_rows(t, "*", m.name, *m.inv, ring, comps);
    out << t.str(color);
    return out.str();
  }

  out << heading("Records", color);
  Table t({"n", "Ass(M/I^nN)", "v(M/I^nN)", "Ass(layer)", "v(layer)", "indeg(I^nN)",
           "indeg(layer)"});
  for (const auto& rec : eval.records)
    t.row({std::to_string(rec.n), render(rec.quotient.v.ass()), render(rec.quotient.v.global),
           rec.layer ? render(rec.layer->v.ass()) : "-",
           rec.layer ? render(rec.layer->v.global) : "-", render(rec.indeg_power),
           rec.layer ? render(rec.layer->indeg) : "-"});
  out << t.str(color) << "\n";

  PrimeSet primes;
  for (const auto& rec : eval.records) primes = set_union(primes, rec.quotient.v.ass());
  if (!primes.empty()) {
    out << heading("Local v-numbers of M/I^nN", color);
    std::vector<std::string> header{"n"};
    for (const auto& p : primes) header.push_back("v_" + render(p));
    Table lt(header);
    for (const auto& rec : eval.records) {
      std::vector<std::string> row{std::to_string(rec.n)};
      for (const auto& p : primes) {
        const auto* l = rec.quotient.v.find(p);
        row.push_back(l ? render(l->value) : "-");
      }
      lt.row(row);
    }
    out << lt.str(color) << "\n";
  }

  out << heading("Static modules", color);
  Table st({"module", "Ass", "v", "indeg"});
  for (const auto& m : static_modules(eval.statics))
    st.row({label(m.name), render(m.inv->v.ass()), render(m.inv->v.global), render(m.inv->indeg)});
  out << st.str(color) << "\n";

  out << heading("Stabilization", color);
  out << "  " << describe(r.quotient_ass, "M/I^nN") << "\n";
  out << "  " << describe(r.layer_ass, "I^(n-1)N/I^nN") << "\n\n";

  out << heading("Fits", color);
  for (const auto& f : r.fits) out << "  " << render_fit(fit_name(f), f.fit) << "\n";

  if (r.view == View::Verify) {
    out << "\n" << heading("Verdicts", color);
    Table vt({"check", "prime", "status", "detail"});
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& v : r.verdicts) {
      ++counts[static_cast<int>(v.status)];
      vt.row({v.id, v.prime.empty() ? "-" : v.prime, render(v.status), v.detail});
    }
    out << vt.str(color);
    out << "\n" << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
        << " not applicable, " << counts[3] << " undetermined\n";
  }
  if (eval.truncated) out << "\nwarning: " << *eval.truncated << "\n";
  return out.str();
}

// ---------------------------------------------------------------------------
// CSV

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

void csv_rows(std::ostringstream& out, const std::string& n, const std::string& module,
              const ModuleInvariants& inv, const RingSpec& ring, std::size_t comps) {
  auto row = [&](const std::string& prime, const std::string& v, const std::string& w) {
    out << n << ',' << module << ',' << csv_cell(prime) << ',' << v << ',' << csv_cell(w) << ','
        << render(inv.indeg) << "\n";
  };
  std::string best_witness;
  for (const auto& l : inv.v.locals) {
    const auto w = witness_text(l, ring, comps);
    if (best_witness.empty() && l.value == inv.v.global) best_witness = w;
    row(render(l.prime), render(l.value), w);
  }
  row("*", render(inv.v.global), best_witness);
}

std::string csv(const Report& r) {
  const RingSpec& ring = *r.eval.spec.ring();
  const std::size_t comps = r.eval.spec.components().size();
  std::ostringstream out;
  if (r.view == View::Verify) {
    out << "check,prime,status,detail\n";
    for (const auto& v : r.verdicts)
      out << v.id << ',' << csv_cell(v.prime) << ',' << render(v.status) << ','
          << csv_cell(v.detail) << "\n";
    return out.str();
  }
  out << "n,module,prime,v,witness,indeg\n";
  for (const auto& m : static_modules(r.eval.statics))
    csv_rows(out, "*", m.name, *m.inv, ring, comps);
  for (const auto* rec : shown_records(r)) {
    const std::string n = std::to_string(rec->n);
    csv_rows(out, n, "quotient", rec->quotient, ring, comps);
    if (rec->layer) csv_rows(out, n, "layer", *rec->layer, ring, comps);
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// JSON

json degree_json(ExtDegree d) { return d.finite() ? json(d.value()) : json("inf"); }

json primes_json(const PrimeSet& set) {
  json a = json::array();
  for (const auto& p : set) a.push_back(render(p));
  return a;
}

json module_json(const ModuleInvariants& inv, const RingSpec& ring) {
  json locals = json::array();
  for (const auto& l : inv.v.locals)
    locals.push_back({{"prime", render(l.prime)},
                      {"value", degree_json(l.value)},
                      {"witness", render(l.witness, ring)},
                      {"component", l.component}});
  return {{"ass", primes_json(inv.v.ass())},
          {"v", degree_json(inv.v.global)},
          {"indeg", degree_json(inv.indeg)},
          {"locals", locals}};
}

json fit_json(const LinearFit& fit) {
  const char* kind = fit.kind == FitKind::Constant ? "constant"
                     : fit.kind == FitKind::Linear ? "linear"
                                                   : "undetermined";
  json j = {{"kind", kind}, {"window", fit.window}, {"onset", fit.onset}};
  if (fit.kind != FitKind::Undetermined) {
    j["a"] = fit.a;
    j["b"] = fit.b;
  } else {
    j["a"] = nullptr;
    j["b"] = nullptr;
  }
  return j;
}

json stabilization_json(const Stabilization& s) {
  return {{"determined", s.determined},
          {"onset", s.determined ? json(s.onset) : json(nullptr)},
          {"set", primes_json(s.set)},
          {"window", s.window}};
}

std::string json_text(const Report& r) {
  const RingSpec& ring = *r.eval.spec.ring();
  json doc;
  doc["spec_echo"] = echo(r.eval.spec);
  doc["n_max"] = r.eval.n_max;
  doc["window"] = r.window;
  doc["truncated"] = r.eval.truncated ? json(*r.eval.truncated) : json(nullptr);
  json statics;
  for (const auto& m : static_modules(r.eval.statics)) statics[m.name] = module_json(*m.inv, ring);
  statics["gamma_onset"] = r.eval.statics.gamma_onset;
  doc["static"] = statics;
  json records = json::array();
  for (const auto* rec : shown_records(r)) {
    json pres = json::array();
    for (const auto& rel : rec->relations) pres.push_back(render(rel));
    records.push_back({{"n", rec->n},
                       {"presentation", pres},
                       {"indeg_power", degree_json(rec->indeg_power)},
                       {"quotient", module_json(rec->quotient, ring)},
                       {"layer", rec->layer ? module_json(*rec->layer, ring) : json(nullptr)}});
  }
  doc["records"] = records;
  json fits = json::array();
  for (const auto& f : r.fits) {
    json j = fit_json(f.fit);
    j["module"] = f.module;
    j["prime"] = f.prime ? json(render(*f.prime)) : json(nullptr);
    j["text"] = render_fit(fit_name(f), f.fit);
    fits.push_back(j);
  }
  doc["fits"] = fits;
  if (r.view == View::Analyze || r.view == View::Verify)
    doc["stabilization"] = {{"quotient", stabilization_json(r.quotient_ass)},
                            {"layer", stabilization_json(r.layer_ass)}};
  json verdicts = json::array();
  for (const auto& v : r.verdicts)
    verdicts.push_back({{"id", v.id},
                        {"prime", v.prime.empty() ? json(nullptr) : json(v.prime)},
                        {"status", render(v.status)},
                        {"detail", v.detail}});
  doc["verdicts"] = verdicts;
  return doc.dump(2) + "\n";
}

// ---------------------------------------------------------------------------
// Plot data: one whitespace-separated block per series, blank-line separated.

void series_block(std::ostringstream& out, const std::string& title,
                  const std::vector<ExtDegree>& values, unsigned first) {
  out << "# " << title << "\n";
  for (std::size_t k = 0; k < values.size(); ++k)
    out << first + k << ' ' << render(values[k]) << "\n";
  out << "\n\n";
}

std::string plot(const Report& r) {
  std::ostringstream out;
  for (Series s : {Series::Quotient, Series::Layer}) {
    const std::string module = s == Series::Quotient ? "quotient" : "layer";
    series_block(out, module + " *", global_series(r.eval, s), 1);
    PrimeSet primes;
    for (const auto& set : ass_series(r.eval, s)) primes = set_union(primes, set);
    for (const auto& p : primes)
      series_block(out, module + " " + render(p), local_series(r.eval, s, p), 1);
  }
  return out.str();
}

}  // namespace

std::string render(const Report& report, Format format, bool color) {
  switch (format) {
    case Format::Table: return table(report, color);
    case Format::Csv: return csv(report);
    case Format::Json: return json_text(report);
    case Format::Plot: return plot(report);
  }
  return {};
}

std::string render(const ExploreReport& report, Format format, bool color) {
  std::ostringstream out;
  const auto kind_name = [](FitKind k) {
    return k == FitKind::Constant ? "constant" : k == FitKind::Linear ? "linear" : "undetermined";
  };
  std::size_t skipped = 0;
  for (const auto& t : report.trials) skipped += t.skipped ? 1 : 0;
  switch (format) {
    case Format::Table: {
      out << heading("Exploration", color);
      out << "  seed " << report.seed << ", " << report.trials.size() << " trials, n_max "
          << report.options.n_max << ", window " << report.options.window << "\n\n";
      Table t({"trial", "seed", "prime", "fit", "status"});
      for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& tr = report.trials[i];
        if (tr.skipped) {
          t.row({std::to_string(i), std::to_string(tr.seed), "-", *tr.skipped, "skipped"});
          continue;
        }
        if (tr.fits.empty())
          t.row({std::to_string(i), std::to_string(tr.seed), "-", "no prime outside V(I)",
                 "vacuous"});
        for (const auto& f : tr.fits)
          t.row({std::to_string(i), std::to_string(tr.seed), render(f.prime),
                 render_fit("v_" + render(f.prime), f.fit),
                 f.fit.kind == FitKind::Undetermined ? "flagged" : "ok"});
      }
      out << t.str(color);
      for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& tr = report.trials[i];
        if (!tr.flagged) continue;
        out << "\n" << heading("Candidate from trial " + std::to_string(i), color);
        out << echo(tr.spec);
        for (const auto& f : tr.fits) {
          out << "# v_" << render(f.prime) << ":";
          for (const auto& v : f.values) out << ' ' << render(v);
          out << "\n";
        }
      }
      out << "\n" << report.flagged() << " of " << report.trials.size() << " trials flagged, "
          << skipped << " skipped\n";
      return out.str();
    }
    case Format::Csv: {
      out << "trial,seed,prime,kind,a,b,onset,flagged\n";
      for (std::size_t i = 0; i < report.trials.size(); ++i)
        for (const auto& f : report.trials[i].fits)
          out << i << ',' << report.trials[i].seed << ',' << csv_cell(render(f.prime)) << ','
              << kind_name(f.fit.kind) << ',' << f.fit.a << ',' << f.fit.b << ',' << f.fit.onset
              << ',' << (f.fit.kind == FitKind::Undetermined ? 1 : 0) << "\n";
      return out.str();
    }
    case Format::Json: {
      json trials = json::array();
      for (std::size_t i = 0; i < report.trials.size(); ++i) {
        const auto& tr = report.trials[i];
        json fits = json::array();
        for (const auto& f : tr.fits) {
          json j = fit_json(f.fit);
          j["prime"] = render(f.prime);
          j["text"] = render_fit("v_" + render(f.prime), f.fit);
          json values = json::array();
          for (const auto& v : f.values) values.push_back(degree_json(v));
          j["values"] = values;
          fits.push_back(j);
        }
        trials.push_back({{"index", i},
                          {"seed", tr.seed},
                          {"spec_echo", echo(tr.spec)},
                          {"fits", fits},
                          {"flagged", tr.flagged},
                          {"skipped", tr.skipped ? json(*tr.skipped) : json(nullptr)}});
      }
      json doc = {{"seed", report.seed},
                  {"n_max", report.options.n_max},
                  {"window", report.options.window},
                  {"params",
                   {{"vars", report.params.vars},
                    {"max_deg", report.params.max_deg},
                    {"gens", report.params.gens},
                    {"components", report.params.components},
                    {"max_weight", report.params.max_weight}}},
                  {"trials", trials},
                  {"flagged", report.flagged()},
                  {"skipped", skipped}};
      return doc.dump(2) + "\n";
    }
    case Format::Plot: {
      for (std::size_t i = 0; i < report.trials.size(); ++i)
        for (const auto& f : report.trials[i].fits)
          series_block(out, "trial " + std::to_string(i) + " " + render(f.prime), f.values, 1);
      return out.str();
    }
  }
  return {};
}

}  // namespace vnl

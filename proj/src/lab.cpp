#include "vnumlab/lab.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

namespace vnl {

void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& fn) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_lock;
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < count;) {
      try {
        fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_lock);
        if (!error) error = std::current_exception();
        next.store(count);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// ---------------------------------------------------------------------------
// Family evaluation

namespace {

ModuleInvariants invariants_of(const SubquotientModule& module) {
  return {global_vnumber(module), indeg(module)};
}

}  // namespace

FamilyEvaluation evaluate_family(const FamilySpec& spec, const LabOptions& options) {
  if (options.n_max < 1) fail(ErrorKind::Domain, "n_max must be at least 1");
  const auto tg = gamma(spec);
  FamilyEvaluation eval{spec,
                        options.n_max,
                        {invariants_of(present(spec, Target::M)),
                         invariants_of(present(spec, Target::MOverN)),
                         invariants_of(colon_submodule(spec, 1)), invariants_of(tg.module),
                         tg.onset},
                        {},
                        std::nullopt};

  // I^n K_j + J_j = I (I^(n-1) K_j + J_j) + J_j, built sequentially.
  std::vector<std::vector<MonomialIdeal>> rels;
  {
    std::vector<MonomialIdeal> cur;
    for (const auto& c : spec.components()) cur.push_back(c.generators);
    rels.push_back(cur);
    try {
      for (unsigned n = 1; n <= options.n_max; ++n) {
        std::vector<MonomialIdeal> next;
        for (std::size_t j = 0; j < cur.size(); ++j) {
          auto r = sum(product(spec.ideal(), cur[j], options.generator_limit),
                       spec.components()[j].relations);
          if (r.size() > options.generator_limit)
            fail(ErrorKind::Resource, "generator count " + std::to_string(r.size()) +
                                          " exceeds limit " +
                                          std::to_string(options.generator_limit));
          next.push_back(std::move(r));
        }
        cur = std::move(next);
        rels.push_back(cur);
      }
    } catch (const Error& e) {
      if (e.kind() != ErrorKind::Resource) throw;
      eval.truncated = "stopped after n = " + std::to_string(rels.size() - 1) + ": " + e.what();
    }
  }

  const auto unit = MonomialIdeal::unit(spec.ring());
  eval.records.resize(rels.size());
  parallel_for(rels.size(), options.threads, [&](std::size_t n) {
    InvariantRecord& rec = eval.records[n];
    rec.n = static_cast<unsigned>(n);
    rec.relations = rels[n];
    std::vector<std::vector<Corner>> cs;
    std::vector<ModuleComponent> quotient, layer, power_n;
    for (std::size_t j = 0; j < rels[n].size(); ++j) {
      const auto& c = spec.components()[j];
      cs.push_back(corners(rels[n][j]));
      quotient.push_back({c.shift, unit, rels[n][j]});
      power_n.push_back({c.shift, rels[n][j], c.relations});
      if (n >= 1) layer.push_back({c.shift, rels[n - 1][j], rels[n][j]});
    }
    SubquotientModule qm(spec.ring(), quotient);
    rec.quotient = ModuleInvariants{global_vnumber(qm, cs), indeg(qm)};
    if (n >= 1) {
      SubquotientModule lm(spec.ring(), layer);
      rec.layer = ModuleInvariants{global_vnumber(lm, cs), indeg(lm)};
    }
    rec.indeg_power = indeg(SubquotientModule(spec.ring(), power_n));
  });
  return eval;
}

std::vector<PrimeSet> ass_series(const FamilyEvaluation& eval, Series series) {
  std::vector<PrimeSet> out;
  for (std::size_t n = 1; n < eval.records.size(); ++n) {
    const auto& rec = eval.records[n];
    out.push_back(series == Series::Quotient ? rec.quotient.v.ass() : rec.layer->v.ass());
  }
  return out;
}

std::vector<ExtDegree> local_series(const FamilyEvaluation& eval, Series series,
                                    const MonomialPrime& p) {
  std::vector<ExtDegree> out;
  for (std::size_t n = 1; n < eval.records.size(); ++n) {
    const auto& rec = eval.records[n];
    const auto& v = series == Series::Quotient ? rec.quotient.v : rec.layer->v;
    const auto* l = v.find(p);
    out.push_back(l ? l->value : ExtDegree::infinity());
  }
  return out;
}

std::vector<ExtDegree> global_series(const FamilyEvaluation& eval, Series series) {
  std::vector<ExtDegree> out;
  for (std::size_t n = 1; n < eval.records.size(); ++n) {
    const auto& rec = eval.records[n];
    out.push_back(series == Series::Quotient ? rec.quotient.v.global : rec.layer->v.global);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tails

Stabilization detect_stabilization(const std::vector<PrimeSet>& sets, unsigned first_index,
                                   unsigned window) {
  if (window < 2) fail(ErrorKind::Domain, "stabilization window must be at least 2");
  Stabilization s;
  s.window = window;
  if (sets.empty()) return s;
  std::size_t start = sets.size() - 1;
  while (start > 0 && sets[start - 1] == sets.back()) --start;
  s.set = sets.back();
  s.onset = first_index + static_cast<unsigned>(start);
  s.determined = sets.size() - start >= window;
  return s;
}

LinearFit fit_tail(const std::vector<ExtDegree>& values, unsigned first_index, unsigned window) {
  if (window < 3) fail(ErrorKind::Domain, "fit window must be at least 3");
  LinearFit fit;
  fit.window = window;
  if (values.size() < 2 || !values.back().finite()) return fit;
  const std::size_t last = values.size() - 1;
  if (!values[last - 1].finite()) return fit;
  const Degree d = values[last].value() - values[last - 1].value();
  std::size_t start = last - 1;
  while (start > 0 && values[start - 1].finite() &&
         values[start].value() - values[start - 1].value() == d)
    --start;
  fit.onset = first_index + static_cast<unsigned>(start);
  if (last - start + 1 < window || d < 0) return fit;
  fit.kind = d == 0 ? FitKind::Constant : FitKind::Linear;
  fit.a = d;
  fit.b = values[last].value() - d * static_cast<Degree>(first_index + last);
  return fit;
}

std::string render_fit(const std::string& name, const LinearFit& fit) {
  const std::string tail = " (n ≥ " + std::to_string(fit.onset) + ", window " +
                           std::to_string(fit.window) + ")";
  switch (fit.kind) {
    case FitKind::Constant: return name + " = " + std::to_string(fit.b) + tail;
    case FitKind::Linear: {
      std::string s = name + " = " + (fit.a == 1 ? "" : std::to_string(fit.a)) + "n";
      if (fit.b > 0) s += " + " + std::to_string(fit.b);
      if (fit.b < 0) s += " - " + std::to_string(-fit.b);
      return s + tail;
    }
    case FitKind::Undetermined: break;
  }
  return name + " undetermined (window " + std::to_string(fit.window) + ")";
}

std::vector<FitRecord> fit_all(const FamilyEvaluation& eval, unsigned window) {
  std::vector<FitRecord> out;
  for (Series series : {Series::Quotient, Series::Layer}) {
    const std::string name = series == Series::Quotient ? "quotient" : "layer";
    out.push_back({name, std::nullopt, fit_tail(global_series(eval, series), 1, window)});
    PrimeSet primes;
    for (const auto& s : ass_series(eval, series)) primes = set_union(primes, s);
    for (const auto& p : primes)
      out.push_back({name, p, fit_tail(local_series(eval, series, p), 1, window)});
  }
  return out;
}

// ---------------------------------------------------------------------------
// Verification

std::string render(VerdictStatus status) {
  switch (status) {
    case VerdictStatus::Pass: return "pass";
    case VerdictStatus::Fail: return "fail";
    case VerdictStatus::NotApplicable: return "not-applicable";
    case VerdictStatus::Undetermined: return "undetermined";
  }
  return "?";
}

namespace {

ExtDegree local_value(const VNumberResult& v, const MonomialPrime& p) {
  const auto* l = v.find(p);
  return l ? l->value : ExtDegree::infinity();
}

// First n0 such that T_j ∩ rel_n,j = J_j for every n0 <= n <= last, provided
// the stretch covers at least `window` indices.
std::optional<unsigned> detected_onset(const FamilyEvaluation& eval,
                                       const std::vector<MonomialIdeal>& torsion,
                                       unsigned window) {
  const auto& comps = eval.spec.components();
  auto trivial = [&](const InvariantRecord& rec) {
    for (std::size_t j = 0; j < comps.size(); ++j)
      if (!comps[j].relations.contains(intersect(torsion[j], rec.relations[j]))) return false;
    return true;
  };
  std::size_t start = eval.records.size();
  while (start > 0 && trivial(eval.records[start - 1])) --start;
  if (eval.records.size() - start < window) return std::nullopt;
  return static_cast<unsigned>(start);
}

// First n0 >= 1 with (rel_n : I) = T_j + rel_(n-1) for n0 <= n <= last, T_j
// the colon ideals; same window rule as detected_onset.
std::optional<unsigned> colon_identity_onset(const FamilyEvaluation& eval,
                                             const std::vector<MonomialIdeal>& colons,
                                             unsigned window) {
  const auto& ideal = eval.spec.ideal();
  auto holds = [&](std::size_t n) {
    for (std::size_t j = 0; j < colons.size(); ++j)
      if (!(colon(eval.records[n].relations[j], ideal) ==
            sum(colons[j], eval.records[n - 1].relations[j])))
        return false;
    return true;
  };
  std::size_t start = eval.records.size();
  while (start > 1 && holds(start - 1)) --start;
  if (eval.records.size() - start < window) return std::nullopt;
  return static_cast<unsigned>(start);
}

struct Checker {
  const FamilyEvaluation& eval;
  const LabOptions& options;
  std::vector<Verdict> out;

  void add(std::string id, const MonomialPrime* p, VerdictStatus status, std::string detail) {
    out.push_back({std::move(id), p ? render(*p) : std::string(), status, std::move(detail)});
  }
};

std::string describe(const LinearFit& fit) { return render_fit("v", fit); }

bool same_line(const LinearFit& a, const LinearFit& b) {
  return a.kind == b.kind && a.a == b.a && a.b == b.b;
}

}  // namespace

std::vector<Verdict> verify(const FamilyEvaluation& eval, const LabOptions& options) {
  const FamilySpec& spec = eval.spec;
  const MonomialIdeal& ideal = spec.ideal();
  const auto& st = eval.statics;
  const unsigned window = options.window;
  const unsigned last = static_cast<unsigned>(eval.records.size()) - 1;
  Checker ck{eval, options, {}};
  using VS = VerdictStatus;

  const PrimeSet colon_ass = st.colon.v.ass();
  const auto qa = ass_series(eval, Series::Quotient);
  const auto la = ass_series(eval, Series::Layer);
  const auto sa = detect_stabilization(qa, 1, window);
  const auto sb = detect_stabilization(la, 1, window);
  const bool tails = sa.determined && sb.determined;
  const unsigned tail = std::max(sa.onset, sb.onset);
  const auto degs = generator_degrees(ideal);
  auto is_degree = [&](Degree a) { return std::find(degs.begin(), degs.end(), a) != degs.end(); };
  const std::string no_tail = "Ass tails not stable within n_max = " + std::to_string(last);

  std::vector<MonomialIdeal> colon_ideals, gamma_ideals;
  for (const auto& c : spec.components()) {
    colon_ideals.push_back(colon(c.relations, ideal));
    gamma_ideals.push_back(saturate(c.relations, ideal).ideal);
  }
  const auto ar_colon = detected_onset(eval, colon_ideals, window);
  const auto ar_gamma = detected_onset(eval, gamma_ideals, window);
  const auto identity_onset = colon_identity_onset(eval, colon_ideals, window);

  // Ass(M/I^nN) ∩ V(I) = Ass(0 :_M I) ∪ Ass(I^(n-1)N/I^nN) on the stable window.
  if (!tails) {
    ck.add("ass-torsion-split", nullptr, VS::Undetermined, no_tail);
  } else {
    std::string bad;
    for (unsigned n = tail; n <= last && bad.empty(); ++n) {
      const auto lhs = restrict_to_variety(qa[n - 1], ideal);
      const auto rhs = set_union(colon_ass, la[n - 1]);
      if (lhs != rhs)
        bad = "n = " + std::to_string(n) + ": Ass(M/I^nN) ∩ V(I) = " + render(lhs) +
              ", Ass(0:_M I) ∪ Ass(layer) = " + render(rhs);
    }
    ck.add("ass-torsion-split", nullptr, bad.empty() ? VS::Pass : VS::Fail,
           bad.empty() ? "holds for n = " + std::to_string(tail) + ".." + std::to_string(last)
                       : bad);
  }

  // Ass(M/I^nN) \ V(I) = Ass(M/N) \ V(I) for every n.
  {
    const auto base = remove_variety(st.base.v.ass(), ideal);
    std::string bad;
    for (unsigned n = 0; n <= last && bad.empty(); ++n) {
      const auto got = remove_variety(eval.records[n].quotient.v.ass(), ideal);
      if (got != base)
        bad = "n = " + std::to_string(n) + ": " + render(got) + " instead of " + render(base);
    }
    ck.add("ass-outside-constant", nullptr, bad.empty() ? VS::Pass : VS::Fail,
           bad.empty() ? "holds for n = 0.." + std::to_string(last) : bad);
  }

  // Ass(M) ∩ V(I) = Ass(Γ_I(M)).
  {
    const auto lhs = restrict_to_variety(st.module.v.ass(), ideal);
    const auto rhs = st.gamma.v.ass();
    ck.add("torsion-ass", nullptr, lhs == rhs ? VS::Pass : VS::Fail,
           "Ass(M) ∩ V(I) = " + render(lhs) + ", Ass(Γ) = " + render(rhs));
  }

  // Comparison with M/Γ_I(M).
  {
    LabOptions bar_options = options;
    bar_options.n_max = last;
    if (last == 0) bar_options.n_max = 1;
    const auto bar = evaluate_family(quotient_by_gamma(spec), bar_options);
    const unsigned bar_last = static_cast<unsigned>(bar.records.size()) - 1;
    const auto bar_sa = detect_stabilization(ass_series(bar, Series::Quotient), 1, window);
    if (!tails || !bar_sa.determined) {
      ck.add("layer-ass-torsion-free", nullptr, VS::Undetermined, no_tail);
    } else {
      const auto rhs = restrict_to_variety(bar_sa.set, ideal);
      ck.add("layer-ass-torsion-free", nullptr, rhs == sb.set ? VS::Pass : VS::Fail,
             "stable Ass(layer) = " + render(sb.set) + ", stable Ass(M̄/I^nN̄) ∩ V(I) = " +
                 render(rhs));
    }
    if (!ar_gamma || *ar_gamma + 1 > std::min(last, bar_last)) {
      ck.add("layer-torsion-free-iso", nullptr, VS::Undetermined,
             "Γ ∩ I^nN = 0 not detected within n_max");
    } else {
      std::string bad;
      const unsigned top = std::min(last, bar_last);
      for (unsigned n = *ar_gamma + 1; n <= top && bad.empty(); ++n) {
        const auto& x = eval.records[n].layer->v;
        const auto& y = bar.records[n].layer->v;
        bool same = x.locals.size() == y.locals.size() && x.global == y.global;
        for (std::size_t k = 0; same && k < x.locals.size(); ++k)
          same = x.locals[k].prime == y.locals[k].prime && x.locals[k].value == y.locals[k].value;
        if (!same) bad = "layer invariants differ at n = " + std::to_string(n);
      }
      ck.add("layer-torsion-free-iso", nullptr, bad.empty() ? VS::Pass : VS::Fail,
             bad.empty() ? "layers agree for n = " + std::to_string(*ar_gamma + 1) + ".." +
                               std::to_string(top)
                         : bad);
    }
  }

  // (0 :_M I) ∩ I^nN = 0 eventually.
  if (ar_colon)
    ck.add("colon-injective", nullptr, VS::Pass,
           "(0:_M I) ∩ I^nN = 0 for n = " + std::to_string(*ar_colon) + ".." +
               std::to_string(last));
  else
    ck.add("colon-injective", nullptr, VS::Undetermined, "onset not detected within n_max");

  // (I^nN :_M I) = (0 :_M I) + I^(n-1)N eventually.
  if (identity_onset)
    ck.add("colon-power-identity", nullptr, VS::Pass,
           "holds for n = " + std::to_string(*identity_onset) + ".." + std::to_string(last));
  else
    ck.add("colon-power-identity", nullptr, VS::Undetermined, "onset not detected within n_max");

  // v_p(M) = v_p(Γ) = v_p(0 :_M I^m).
  if (colon_ass.empty()) {
    ck.add("colon-vnumber-chain", nullptr, VS::NotApplicable, "(0:_M I) = 0");
  } else {
    std::vector<VNumberResult> powers;
    for (unsigned m = 1; m <= 3; ++m) powers.push_back(global_vnumber(colon_submodule(spec, m)));
    for (const auto& p : colon_ass) {
      const ExtDegree vm = local_value(st.module.v, p), vg = local_value(st.gamma.v, p);
      std::ostringstream d;
      d << "v_p(M) = " << render(vm) << ", v_p(Γ) = " << render(vg);
      bool ok = vm == vg;
      for (unsigned m = 1; m <= 3; ++m) {
        const ExtDegree vc = local_value(powers[m - 1], p);
        d << ", v_p(0:_M I^" << m << ") = " << render(vc);
        ok = ok && vc == vm;
      }
      ck.add("colon-vnumber-chain", &p, ok ? VS::Pass : VS::Fail, d.str());
    }
  }

  // v_p(M/I^nN) <= v_p(0 :_M I) = v_p(M) once (0 :_M I) embeds.
  for (const auto& p : colon_ass) {
    const ExtDegree vc = local_value(st.colon.v, p);
    if (!(vc == local_value(st.module.v, p))) {
      ck.add("colon-upper-bound", &p, VS::Fail, "v_p(0:_M I) differs from v_p(M)");
      continue;
    }
    if (!ar_colon) {
      ck.add("colon-upper-bound", &p, VS::Undetermined, "embedding onset not detected");
      continue;
    }
    std::string bad;
    for (unsigned n = *ar_colon; n <= last && bad.empty(); ++n) {
      const ExtDegree v = local_value(eval.records[n].quotient.v, p);
      if (!(v <= vc))
        bad = "n = " + std::to_string(n) + ": v_p(M/I^nN) = " + render(v) + " > " + render(vc);
    }
    ck.add("colon-upper-bound", &p, bad.empty() ? VS::Pass : VS::Fail,
           bad.empty() ? "v_p ≤ " + render(vc) + " for n = " + std::to_string(*ar_colon) + ".." +
                             std::to_string(last)
                       : bad);
  }

  // v_p(M/I^nN) = v_p(((0 :_M I) + I^(n-1)N)/I^nN) on the stable window.
  {
    const auto targets = restrict_to_variety(sa.set, ideal);
    const unsigned from = std::max(tail, identity_onset.value_or(0));
    if (!tails || !identity_onset || from > last) {
      ck.add("colon-layer-vnumber", nullptr, VS::Undetermined,
             tails ? "colon identity onset not detected" : no_tail);
    } else if (targets.empty()) {
      ck.add("colon-layer-vnumber", nullptr, VS::NotApplicable, "stable Ass ∩ V(I) is empty");
    } else {
      std::vector<std::string> bad(targets.size());
      for (unsigned n = std::max(from, 1u); n <= last; ++n) {
        std::vector<ModuleComponent> comps;
        for (std::size_t j = 0; j < spec.components().size(); ++j)
          comps.push_back({spec.components()[j].shift,
                           sum(colon_ideals[j], eval.records[n - 1].relations[j]),
                           eval.records[n].relations[j]});
        const auto v = global_vnumber(SubquotientModule(spec.ring(), comps));
        for (std::size_t k = 0; k < targets.size(); ++k) {
          const ExtDegree lhs = local_value(eval.records[n].quotient.v, targets[k]);
          const ExtDegree rhs = local_value(v, targets[k]);
          if (bad[k].empty() && !(lhs == rhs))
            bad[k] = "n = " + std::to_string(n) + ": " + render(lhs) + " vs " + render(rhs);
        }
      }
      for (std::size_t k = 0; k < targets.size(); ++k)
        ck.add("colon-layer-vnumber", &targets[k], bad[k].empty() ? VS::Pass : VS::Fail,
               bad[k].empty() ? "agree for n = " + std::to_string(std::max(from, 1u)) + ".." +
                                    std::to_string(last)
                              : bad[k]);
    }
  }

  // Linear branch: p ∈ A ∩ V(I) outside Ass(0 :_M I).
  // Constant branch: p ∈ A ∩ Ass(0 :_M I).
  if (!tails) {
    ck.add("linear-branch", nullptr, VS::Undetermined, no_tail);
    ck.add("constant-branch", nullptr, VS::Undetermined, no_tail);
  } else {
    bool any_linear = false, any_constant = false;
    for (const auto& p : restrict_to_variety(sa.set, ideal)) {
      const auto fq = fit_tail(local_series(eval, Series::Quotient, p), 1, window);
      const auto fl = fit_tail(local_series(eval, Series::Layer, p), 1, window);
      if (!contains(colon_ass, p)) {
        any_linear = true;
        if (!contains(sb.set, p)) {
          ck.add("linear-branch", &p, VS::Fail, "p is not in the stable Ass of the layers");
        } else if (fq.kind == FitKind::Undetermined || fl.kind == FitKind::Undetermined) {
          ck.add("linear-branch", &p, VS::Undetermined,
                 "quotient: " + describe(fq) + "; layer: " + describe(fl));
        } else {
          const bool ok = fq.kind == FitKind::Linear && same_line(fq, fl) && is_degree(fq.a);
          ck.add("linear-branch", &p, ok ? VS::Pass : VS::Fail,
                 "quotient: " + describe(fq) + "; layer: " + describe(fl));
        }
      } else {
        any_constant = true;
        const ExtDegree vc = local_value(st.colon.v, p), vm = local_value(st.module.v, p);
        if (fq.kind == FitKind::Undetermined) {
          ck.add("constant-branch", &p, VS::Undetermined, "quotient: " + describe(fq));
        } else {
          const bool ok =
              fq.kind == FitKind::Constant && vc == ExtDegree(fq.b) && vm == ExtDegree(fq.b);
          ck.add("constant-branch", &p, ok ? VS::Pass : VS::Fail,
                 "quotient: " + describe(fq) + "; v_p(0:_M I) = " + render(vc) +
                     ", v_p(M) = " + render(vm));
        }
        if (contains(sb.set, p)) {
          if (fl.kind == FitKind::Undetermined) {
            ck.add("strict-gap", &p, VS::Undetermined, "layer: " + describe(fl));
          } else {
            const bool ok = fl.kind == FitKind::Linear || (vc.finite() && fl.b > vc.value());
            ck.add("strict-gap", &p, ok ? VS::Pass : VS::Fail,
                   "layer: " + describe(fl) + "; v_p(0:_M I) = " + render(vc));
          }
        }
      }
    }
    if (!any_linear)
      ck.add("linear-branch", nullptr, VS::NotApplicable,
             "every stable prime in V(I) lies in Ass(0:_M I)");
    if (!any_constant)
      ck.add("constant-branch", nullptr, VS::NotApplicable, "no stable prime in Ass(0:_M I)");
  }

  // Global v-number.
  const auto containment = power_containment_index(spec, options.n_max);
  const auto gq = fit_tail(global_series(eval, Series::Quotient), 1, window);
  const auto gl = fit_tail(global_series(eval, Series::Layer), 1, window);
  const ExtDegree vcolon = st.colon.v.global;
  if (colon_ass.empty()) {
    ck.add("global-colon-bound", nullptr, VS::NotApplicable, "(0:_M I) = 0");
    ck.add("global-colon", nullptr, VS::NotApplicable, "(0:_M I) = 0");
  } else {
    if (!ar_colon) {
      ck.add("global-colon-bound", nullptr, VS::Undetermined, "embedding onset not detected");
    } else {
      std::string bad;
      for (unsigned n = *ar_colon; n <= last && bad.empty(); ++n)
        if (!(eval.records[n].quotient.v.global <= vcolon))
          bad = "n = " + std::to_string(n) + ": v(M/I^nN) = " +
                render(eval.records[n].quotient.v.global) + " > " + render(vcolon);
      ck.add("global-colon-bound", nullptr, bad.empty() ? VS::Pass : VS::Fail,
             bad.empty() ? "v ≤ " + render(vcolon) + " for n = " + std::to_string(*ar_colon) +
                               ".." + std::to_string(last)
                         : bad);
    }
    if (!containment) {
      ck.add("global-colon", nullptr, VS::NotApplicable,
             "no k ≤ " + std::to_string(options.n_max) + " with I^k M ⊆ N");
    } else if (gq.kind == FitKind::Undetermined) {
      ck.add("global-colon", nullptr, VS::Undetermined, "quotient: " + describe(gq));
    } else {
      const bool ok = gq.kind == FitKind::Constant && vcolon == ExtDegree(gq.b);
      ck.add("global-colon", nullptr, ok ? VS::Pass : VS::Fail,
             "quotient: " + describe(gq) + "; v(0:_M I) = " + render(vcolon));
    }
  }
  if (!colon_ass.empty()) {
    ck.add("global-layer", nullptr, VS::NotApplicable, "(0:_M I) ≠ 0");
  } else if (!containment) {
    ck.add("global-layer", nullptr, VS::NotApplicable,
           "no k ≤ " + std::to_string(options.n_max) + " with I^k M ⊆ N");
  } else if (!tails) {
    ck.add("global-layer", nullptr, VS::Undetermined, no_tail);
  } else if (sa.set.empty()) {
    ck.add("global-layer", nullptr, VS::NotApplicable, "stable Ass(M/I^nN) is empty");
  } else if (gq.kind == FitKind::Undetermined || gl.kind == FitKind::Undetermined) {
    ck.add("global-layer", nullptr, VS::Undetermined,
           "quotient: " + describe(gq) + "; layer: " + describe(gl));
  } else {
    const bool ok = gq.kind == FitKind::Linear && same_line(gq, gl) && is_degree(gq.a);
    ck.add("global-layer", nullptr, ok ? VS::Pass : VS::Fail,
           "quotient: " + describe(gq) + "; layer: " + describe(gl));
  }

  // Primes outside V(I): monotone and below the line indeg((I+p)/p)·n + v_p(M/N).
  {
    const auto outside = remove_variety(st.base.v.ass(), ideal);
    if (outside.empty()) {
      ck.add("outside-monotone", nullptr, VS::NotApplicable, "Ass(M/N) ⊆ V(I)");
      ck.add("outside-slope-bound", nullptr, VS::NotApplicable, "Ass(M/N) ⊆ V(I)");
    }
    for (const auto& p : outside) {
      std::vector<ExtDegree> v;
      for (const auto& rec : eval.records) v.push_back(local_value(rec.quotient.v, p));
      std::string bad;
      for (unsigned n = 0; n <= last && bad.empty(); ++n) {
        if (!v[n].finite())
          bad = "p not associated at n = " + std::to_string(n);
        else if (n > 0 && v[n] < v[n - 1])
          bad = "drops at n = " + std::to_string(n) + ": " + render(v[n - 1]) + " → " +
                render(v[n]);
      }
      ck.add("outside-monotone", &p, bad.empty() ? VS::Pass : VS::Fail,
             bad.empty() ? "non-decreasing for n = 0.." + std::to_string(last) : bad);

      Degree slope = -1;
      for (const auto& g : ideal.gens()) {
        bool in_p = false;
        for (auto i : p.support()) in_p = in_p || g[i] > 0;
        const Degree d = degree(g, ideal.ring_spec());
        if (!in_p && (slope < 0 || d < slope)) slope = d;
      }
      const Degree base = v[0].finite() ? v[0].value() : 0;
      bad.clear();
      for (unsigned n = 1; n <= last && bad.empty(); ++n)
        if (!(v[n] <= ExtDegree(slope * n + base)))
          bad = "n = " + std::to_string(n) + ": " + render(v[n]) + " > " +
                std::to_string(slope * n + base);
      ck.add("outside-slope-bound", &p, bad.empty() ? VS::Pass : VS::Fail,
             bad.empty() ? "v_p ≤ " + std::to_string(slope) + "n + " + std::to_string(base) +
                               " for n = 1.." + std::to_string(last)
                         : bad);
    }
  }
  return std::move(ck.out);
}

// ---------------------------------------------------------------------------
// Random instances

namespace {

// Uniform draw in [lo, hi] by rejection, independent of the standard library's
// distribution implementations.
std::uint64_t draw(std::mt19937_64& g, std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t range = hi - lo + 1;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t x;
  do x = g();
  while (x >= limit);
  return lo + x % range;
}

Monomial random_monomial(std::mt19937_64& g, std::size_t nvars, unsigned max_deg) {
  Monomial m(nvars);
  const auto d = draw(g, 1, max_deg);
  for (std::uint64_t k = 0; k < d; ++k) m[draw(g, 0, nvars - 1)] += 1;
  return m;
}

MonomialIdeal random_ideal(std::mt19937_64& g, const RingPtr& ring, const RandomParams& params) {
  std::vector<Monomial> gens;
  const auto count = draw(g, 1, params.gens);
  for (std::uint64_t k = 0; k < count; ++k)
    gens.push_back(random_monomial(g, ring->size(), params.max_deg));
  return MonomialIdeal::minimalize(ring, std::move(gens));
}

}  // namespace

FamilySpec random_instance(std::uint64_t seed, const RandomParams& params) {
  static const char* names[] = {"X", "Y", "Z", "W", "V"};
  if (params.vars < 1 || params.vars > 5) fail(ErrorKind::Domain, "vars must be in 1..5");
  if (params.gens < 1) fail(ErrorKind::Domain, "the ideal I needs at least one generator");
  if (params.max_deg < 1) fail(ErrorKind::Domain, "max_deg must be at least 1");
  if (params.components < 1) fail(ErrorKind::Domain, "at least one component required");
  if (params.max_weight < 1) fail(ErrorKind::Domain, "max_weight must be at least 1");
  std::mt19937_64 g(seed);
  std::vector<std::string> vars(names, names + params.vars);
  std::vector<Exponent> weights;
  for (unsigned i = 0; i < params.vars; ++i)
    weights.push_back(static_cast<Exponent>(draw(g, 1, params.max_weight)));
  const auto ring = make_ring(vars, weights);
  const auto ideal = random_ideal(g, ring, params);
  std::vector<Degree> shifts;
  std::vector<MonomialIdeal> rel, sub;
  for (unsigned j = 0; j < params.components; ++j) {
    shifts.push_back(static_cast<Degree>(draw(g, 0, 3)) - 1);
    rel.push_back(draw(g, 0, 4) == 0 ? MonomialIdeal::zero(ring) : random_ideal(g, ring, params));
    sub.push_back(draw(g, 0, 3) == 0 ? MonomialIdeal::unit(ring) : random_ideal(g, ring, params));
  }
  return FamilySpec(ring, ideal, std::move(shifts), std::move(rel), std::move(sub));
}

std::uint64_t trial_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);  // splitmix64
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::size_t ExploreReport::flagged() const {
  return static_cast<std::size_t>(
      std::count_if(trials.begin(), trials.end(), [](const Trial& t) { return t.flagged; }));
}

ExploreReport explore_q45(std::uint64_t seed, unsigned trials, const RandomParams& params,
                          const LabOptions& options) {
  if (trials < 1) fail(ErrorKind::Domain, "at least one trial required");
  std::vector<std::optional<Trial>> slots(trials);
  LabOptions inner = options;
  inner.threads = 1;
  parallel_for(trials, options.threads, [&](std::size_t i) {
    const auto s = trial_seed(seed, i);
    Trial t{s, random_instance(s, params), {}, false, std::nullopt};
    const auto eval = evaluate_family(t.spec, inner);
    if (eval.truncated) {
      t.skipped = *eval.truncated;
    } else {
      for (const auto& p : remove_variety(eval.statics.base.v.ass(), t.spec.ideal())) {
        auto values = local_series(eval, Series::Quotient, p);
        auto fit = fit_tail(values, 1, options.window);
        t.flagged = t.flagged || fit.kind == FitKind::Undetermined;
        t.fits.push_back({p, fit, std::move(values)});
      }
    }
    slots[i] = std::move(t);
  });
  ExploreReport report{seed, params, options, {}};
  for (auto& s : slots) report.trials.push_back(std::move(*s));
  return report;
}

}  // namespace vnl

#include "vnumlab/module.hpp"

#include <algorithm>

namespace vnl {

std::string render(ExtDegree d) { return d.finite() ? std::to_string(d.value()) : "inf"; }

SubquotientModule::SubquotientModule(RingPtr ring, std::vector<ModuleComponent> components)
    : ring_(std::move(ring)), components_(std::move(components)) {
  for (const auto& c : components_) {
    require_same_ring(ring_, c.numerator.ring());
    require_same_ring(ring_, c.denominator.ring());
    if (!c.numerator.contains(c.denominator))
      fail(ErrorKind::Domain, "subquotient component needs B ⊆ A");
  }
}

bool SubquotientModule::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const ModuleComponent& c) {
    return c.denominator.contains(c.numerator);
  });
}

bool operator==(const SubquotientModule& a, const SubquotientModule& b) {
  if (a.components_.size() != b.components_.size()) return false;
  for (std::size_t j = 0; j < a.components_.size(); ++j) {
    const auto &x = a.components_[j], &y = b.components_[j];
    if (x.shift != y.shift || !(x.numerator == y.numerator) || !(x.denominator == y.denominator))
      return false;
  }
  return true;
}

FamilySpec::FamilySpec(RingPtr ring, MonomialIdeal ideal, std::vector<Degree> shifts,
                       std::vector<MonomialIdeal> relations, std::vector<MonomialIdeal> submodule)
    : ring_(std::move(ring)), ideal_(std::move(ideal)), has_submodule_(!submodule.empty()) {
  require_same_ring(ring_, ideal_.ring());
  if (ideal_.is_zero() || ideal_.is_unit())
    fail(ErrorKind::Domain, "the ideal I must be nonzero and proper");
  if (shifts.empty()) fail(ErrorKind::Domain, "module M needs at least one component");
  if (shifts.size() != relations.size())
    fail(ErrorKind::Domain, "shift and relation counts differ");
  if (has_submodule_ && submodule.size() != relations.size())
    fail(ErrorKind::Domain, "submodule N has " + std::to_string(submodule.size()) +
                                " components but M has " + std::to_string(relations.size()));
  for (std::size_t j = 0; j < relations.size(); ++j) {
    require_same_ring(ring_, relations[j].ring());
    MonomialIdeal k = has_submodule_ ? submodule[j] : MonomialIdeal::unit(ring_);
    require_same_ring(ring_, k.ring());
    k = sum(k, relations[j]);
    components_.push_back({shifts[j], std::move(relations[j]), std::move(k)});
  }
}

bool operator==(const FamilySpec& a, const FamilySpec& b) {
  if (!(*a.ring_ == *b.ring_) || !(a.ideal_ == b.ideal_)) return false;
  if (a.components_.size() != b.components_.size()) return false;
  for (std::size_t j = 0; j < a.components_.size(); ++j) {
    const auto &x = a.components_[j], &y = b.components_[j];
    if (x.shift != y.shift || !(x.relations == y.relations) || !(x.generators == y.generators))
      return false;
  }
  return true;
}

SubquotientModule present(const FamilySpec& spec, Target target) {
  std::vector<ModuleComponent> comps;
  const auto unit = MonomialIdeal::unit(spec.ring());
  for (const auto& c : spec.components()) {
    switch (target) {
      case Target::M: comps.push_back({c.shift, unit, c.relations}); break;
      case Target::N: comps.push_back({c.shift, c.generators, c.relations}); break;
      case Target::MOverN: comps.push_back({c.shift, unit, c.generators}); break;
    }
  }
  return SubquotientModule(spec.ring(), std::move(comps));
}

std::vector<MonomialIdeal> power_relations(const FamilySpec& spec, const MonomialIdeal& power,
                                           std::size_t limit) {
  std::vector<MonomialIdeal> out;
  out.reserve(spec.components().size());
  for (const auto& c : spec.components()) {
    auto r = sum(product(power, c.generators, limit), c.relations);
    if (r.size() > limit)
      fail(ErrorKind::Resource, "generator count " + std::to_string(r.size()) + " exceeds limit");
    out.push_back(std::move(r));
  }
  return out;
}

SubquotientModule power_layer(const FamilySpec& spec, unsigned n, PowerTarget which,
                              std::size_t limit) {
  if (which == PowerTarget::Layer && n == 0)
    fail(ErrorKind::Domain, "the layer I^(n-1)N/I^nN needs n >= 1");
  const auto pw = power(spec.ideal(), n, limit);
  const auto rel = power_relations(spec, pw, limit);
  std::vector<ModuleComponent> comps;
  const auto unit = MonomialIdeal::unit(spec.ring());
  if (which == PowerTarget::Layer) {
    const auto prev = power_relations(spec, power(spec.ideal(), n - 1, limit), limit);
    for (std::size_t j = 0; j < rel.size(); ++j)
      comps.push_back({spec.components()[j].shift, prev[j], rel[j]});
  } else {
    for (std::size_t j = 0; j < rel.size(); ++j) {
      const auto& c = spec.components()[j];
      if (which == PowerTarget::MOverPowerN)
        comps.push_back({c.shift, unit, rel[j]});
      else
        comps.push_back({c.shift, rel[j], c.relations});
    }
  }
  return SubquotientModule(spec.ring(), std::move(comps));
}

SubquotientModule colon_submodule(const FamilySpec& spec, unsigned power_exp) {
  if (power_exp == 0) fail(ErrorKind::Domain, "colon power must be >= 1");
  const auto ip = power(spec.ideal(), power_exp);
  std::vector<ModuleComponent> comps;
  for (const auto& c : spec.components())
    comps.push_back({c.shift, colon(c.relations, ip), c.relations});
  return SubquotientModule(spec.ring(), std::move(comps));
}

TorsionSubmodule gamma(const FamilySpec& spec) {
  std::vector<ModuleComponent> comps;
  unsigned onset = 1;
  for (const auto& c : spec.components()) {
    auto sat = saturate(c.relations, spec.ideal());
    onset = std::max(onset, sat.onset);
    comps.push_back({c.shift, std::move(sat.ideal), c.relations});
  }
  return {SubquotientModule(spec.ring(), std::move(comps)), onset};
}

FamilySpec quotient_by_gamma(const FamilySpec& spec) {
  std::vector<Degree> shifts;
  std::vector<MonomialIdeal> rel, sub;
  for (const auto& c : spec.components()) {
    shifts.push_back(c.shift);
    auto sat = saturate(c.relations, spec.ideal()).ideal;
    sub.push_back(c.generators);
    rel.push_back(std::move(sat));
  }
  return FamilySpec(spec.ring(), spec.ideal(), std::move(shifts), std::move(rel), std::move(sub));
}

ExtDegree indeg(const SubquotientModule& module) {
  ExtDegree best;
  const RingSpec& ring = *module.ring();
  for (const auto& c : module.components())
    for (const auto& g : c.numerator.gens())
      if (!c.denominator.contains(g)) best = std::min(best, ExtDegree(degree(g, ring) + c.shift));
  return best;
}

std::optional<unsigned> power_containment_index(const FamilySpec& spec, unsigned bound) {
  MonomialIdeal pw = MonomialIdeal::unit(spec.ring());
  for (unsigned k = 1; k <= bound; ++k) {
    pw = product(pw, spec.ideal());
    bool inside = std::all_of(spec.components().begin(), spec.components().end(),
                              [&](const FamilyComponent& c) { return c.generators.contains(pw); });
    if (inside) return k;
  }
  return std::nullopt;
}

std::optional<unsigned> artin_rees_onset(const FamilySpec& spec, unsigned n_max, Torsion kind,
                                         std::size_t limit) {
  std::vector<MonomialIdeal> torsion;
  for (const auto& c : spec.components())
    torsion.push_back(kind == Torsion::Colon ? colon(c.relations, spec.ideal())
                                             : saturate(c.relations, spec.ideal()).ideal);
  std::optional<unsigned> onset;
  MonomialIdeal pw = MonomialIdeal::unit(spec.ring());
  for (unsigned n = 0; n <= n_max; ++n) {
    if (n > 0) pw = product(pw, spec.ideal(), limit);
    const auto rel = power_relations(spec, pw, limit);
    bool trivial = true;
    for (std::size_t j = 0; j < rel.size() && trivial; ++j)
      trivial = spec.components()[j].relations.contains(intersect(torsion[j], rel[j]));
    if (trivial && !onset) onset = n;
    if (!trivial) onset.reset();
  }
  return onset;
}

}  // namespace vnl

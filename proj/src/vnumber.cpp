#include "vnumlab/vnumber.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>

namespace vnl {

PrimeSet VNumberResult::ass() const {
  PrimeSet out;
  for (const auto& l : locals) out.push_back(l.prime);
  return out;
}

const LocalVNumber* VNumberResult::find(const MonomialPrime& p) const {
  for (const auto& l : locals)
    if (l.prime == p) return &l;
  return nullptr;
}

VNumberResult global_vnumber(const SubquotientModule& module) {
  std::vector<std::vector<Corner>> cs;
  for (const auto& c : module.components()) cs.push_back(corners(c.denominator));
  return global_vnumber(module, cs);
}

VNumberResult global_vnumber(const SubquotientModule& module,
                             const std::vector<std::vector<Corner>>& denominator_corners) {
  std::map<MonomialPrime, LocalVNumber> best;
  const auto& comps = module.components();
  if (denominator_corners.size() != comps.size())
    fail(ErrorKind::Domain, "one corner list per component expected");
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const auto& c = comps[j];
    for (auto& w : minimal_witnesses(c.numerator, c.denominator, denominator_corners[j])) {
      const ExtDegree value(w.degree + c.shift);
      auto it = best.find(w.prime);
      // Strictly smaller values win; ties keep the earlier component.
      if (it == best.end())
        best.emplace(w.prime, LocalVNumber{w.prime, value, w.witness, j});
      else if (value < it->second.value)
        it->second = LocalVNumber{w.prime, value, w.witness, j};
    }
  }
  VNumberResult result;
  for (auto& [p, l] : best) {
    result.global = std::min(result.global, l.value);
    result.locals.push_back(std::move(l));
  }
  return result;
}

PrimeSet ass(const SubquotientModule& module) { return global_vnumber(module).ass(); }

LocalVNumber local_vnumber(const SubquotientModule& module, const MonomialPrime& p) {
  require_same_ring(module.ring(), p.ring());
  const auto result = global_vnumber(module);
  if (const auto* l = result.find(p)) return *l;
  fail(ErrorKind::NotAssociated, render(p) + " is not an associated prime of the module");
}

// ---------------------------------------------------------------------------
// Field oracle

namespace {

// Monomials of weighted degree `target` in the variables flagged by `allowed`.
void enumerate(const RingSpec& ring, const std::vector<char>& allowed, Degree target,
               std::size_t var, Monomial& cur, std::vector<Monomial>& out) {
  if (var == ring.size()) {
    if (target == 0) out.push_back(cur);
    return;
  }
  if (!allowed[var]) {
    enumerate(ring, allowed, target, var + 1, cur, out);
    return;
  }
  const Degree w = ring.weight(var);
  for (Exponent e = 0; static_cast<Degree>(e) * w <= target; ++e) {
    cur[var] = e;
    enumerate(ring, allowed, target - static_cast<Degree>(e) * w, var + 1, cur, out);
  }
  cur[var] = 0;
}

std::vector<Monomial> monomials_of_degree(const RingSpec& ring, const std::vector<char>& allowed,
                                          Degree target) {
  std::vector<Monomial> out;
  if (target < 0) return out;
  Monomial cur(ring.size());
  enumerate(ring, allowed, target, 0, cur, out);
  return out;
}

struct BasisElement {
  std::size_t component;
  Monomial monomial;
};

using Bits = std::vector<std::uint64_t>;

// Rank over GF(2) of the given row vectors.
std::size_t gf2_rank(std::vector<Bits> rows) {
  std::size_t rank = 0;
  const std::size_t words = rows.empty() ? 0 : rows.front().size();
  for (std::size_t col = 0; col < words * 64 && rank < rows.size(); ++col) {
    const std::size_t w = col / 64;
    const std::uint64_t bit = std::uint64_t{1} << (col % 64);
    std::size_t pivot = rank;
    while (pivot < rows.size() && !(rows[pivot][w] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[rank], rows[pivot]);
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (r != rank && (rows[r][w] & bit))
        for (std::size_t k = 0; k < words; ++k) rows[r][k] ^= rows[rank][k];
    ++rank;
  }
  return rank;
}

// True when some nonzero r in K[S] of degree in [1, max_degree] has r·x = 0.
bool killed_outside_prime(const SubquotientModule& module, const std::vector<BasisElement>& x,
                          const std::vector<char>& outside, Degree max_degree) {
  const RingSpec& ring = *module.ring();
  for (Degree e = 1; e <= max_degree; ++e) {
    const auto multipliers = monomials_of_degree(ring, outside, e);
    if (multipliers.empty()) continue;
    std::map<std::pair<std::size_t, std::vector<Exponent>>, std::size_t> columns;
    std::vector<std::vector<std::size_t>> hits(multipliers.size());
    for (std::size_t r = 0; r < multipliers.size(); ++r)
      for (const auto& b : x) {
        const Monomial image = multipliers[r] * b.monomial;
        if (module.components()[b.component].denominator.contains(image)) continue;
        auto key = std::make_pair(b.component, image.exponents());
        auto [it, inserted] = columns.emplace(std::move(key), columns.size());
        hits[r].push_back(it->second);
      }
    const std::size_t words = (columns.size() + 63) / 64 + 1;
    std::vector<Bits> rows(multipliers.size(), Bits(words, 0));
    for (std::size_t r = 0; r < multipliers.size(); ++r)
      for (auto c : hits[r]) rows[r][c / 64] ^= std::uint64_t{1} << (c % 64);
    if (gf2_rank(std::move(rows)) < multipliers.size()) return true;
  }
  return false;
}

}  // namespace

ExtDegree field_witness_oracle(const SubquotientModule& module, const MonomialPrime& p,
                               Degree degree_cap, const FieldOracleOptions& options) {
  require_same_ring(module.ring(), p.ring());
  const RingSpec& ring = *module.ring();
  const std::size_t n = ring.size();
  const auto& comps = module.components();
  if (comps.empty()) return ExtDegree::infinity();

  std::vector<char> all(n, 1), outside(n, 1);
  for (auto i : p.support()) outside[i] = 0;

  Degree lowest = comps.front().shift;
  for (const auto& c : comps) lowest = std::min(lowest, c.shift);

  // Per-component bound on the degree of an S-monomial needed to push a
  // basis monomial into B: one past the largest exponent of each S-variable.
  std::vector<Degree> push(comps.size(), 0);
  for (std::size_t j = 0; j < comps.size(); ++j) {
    const Monomial top = comps[j].denominator.max_exponents();
    for (std::size_t i = 0; i < n; ++i)
      if (outside[i]) push[j] += (static_cast<Degree>(top[i]) + 1) * ring.weight(i);
  }

  for (Degree d = lowest; d <= degree_cap; ++d) {
    std::vector<BasisElement> basis;
    for (std::size_t j = 0; j < comps.size(); ++j)
      for (auto& m : monomials_of_degree(ring, all, d - comps[j].shift))
        if (comps[j].numerator.contains(m) && !comps[j].denominator.contains(m))
          basis.push_back({j, std::move(m)});
    if (basis.empty()) continue;
    if (basis.size() > options.max_basis)
      fail(ErrorKind::OracleCap, "graded piece of degree " + std::to_string(d) + " has " +
                                     std::to_string(basis.size()) + " monomials");

    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << basis.size()); ++mask) {
      std::vector<BasisElement> x;
      Degree bound = 0;
      for (std::size_t k = 0; k < basis.size(); ++k)
        if (mask >> k & 1) {
          x.push_back(basis[k]);
          bound += push[basis[k].component];
        }
      // p·x = 0: distinct basis monomials times one variable never cancel.
      bool killed_by_p = true;
      for (auto i : p.support()) {
        const Monomial v = Monomial::variable(n, i);
        for (const auto& b : x)
          if (!comps[b.component].denominator.contains(v * b.monomial)) {
            killed_by_p = false;
            break;
          }
        if (!killed_by_p) break;
      }
      if (!killed_by_p) continue;
      if (!killed_outside_prime(module, x, outside, bound)) return ExtDegree(d);
    }
  }
  return ExtDegree::infinity();
}

}  // namespace vnl

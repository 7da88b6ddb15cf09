#include "vnumlab/decomposition.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <random>
#include <set>
#include <unordered_map>

namespace vnl {

MonomialPrime::MonomialPrime(RingPtr ring, std::vector<std::size_t> support)
    : ring_(std::move(ring)), support_(std::move(support)) {
  std::sort(support_.begin(), support_.end());
  support_.erase(std::unique(support_.begin(), support_.end()), support_.end());
  for (auto i : support_)
    if (i >= ring_->size()) fail(ErrorKind::Domain, "prime support outside the ring");
}

MonomialPrime MonomialPrime::from_mask(RingPtr ring, const Monomial& mask) {
  std::vector<std::size_t> support;
  for (std::size_t i = 0; i < mask.size(); ++i)
    if (mask[i] != 0) support.push_back(i);
  return MonomialPrime(std::move(ring), std::move(support));
}

MonomialPrime MonomialPrime::maximal(RingPtr ring) {
  std::vector<std::size_t> all(ring->size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return MonomialPrime(std::move(ring), std::move(all));
}

bool MonomialPrime::has(std::size_t var) const noexcept {
  return std::binary_search(support_.begin(), support_.end(), var);
}

MonomialIdeal MonomialPrime::as_ideal() const {
  if (support_.empty()) return MonomialIdeal::zero(ring_);
  std::vector<Monomial> gens;
  for (auto i : support_) gens.push_back(Monomial::variable(ring_->size(), i));
  return MonomialIdeal::minimalize(ring_, std::move(gens));
}

bool operator<(const MonomialPrime& a, const MonomialPrime& b) noexcept {
  if (a.support_.size() != b.support_.size()) return a.support_.size() < b.support_.size();
  return a.support_ < b.support_;
}

void normalize(PrimeSet& set) {
  std::sort(set.begin(), set.end());
  set.erase(std::unique(set.begin(), set.end()), set.end());
}

PrimeSet set_union(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out(a);
  out.insert(out.end(), b.begin(), b.end());
  normalize(out);
  return out;
}

PrimeSet set_difference(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  for (const auto& p : a)
    if (!contains(b, p)) out.push_back(p);
  return out;
}

PrimeSet set_intersection(const PrimeSet& a, const PrimeSet& b) {
  PrimeSet out;
  for (const auto& p : a)
    if (contains(b, p)) out.push_back(p);
  return out;
}

bool contains(const PrimeSet& set, const MonomialPrime& p) {
  return std::find(set.begin(), set.end(), p) != set.end();
}

std::string render(const MonomialPrime& p) {
  if (p.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < p.support().size(); ++k) {
    if (k) out += ',';
    out += p.ring()->var(p.support()[k]);
  }
  return out + ")";
}

std::string render(const PrimeSet& set) {
  std::string out = "{";
  for (std::size_t k = 0; k < set.size(); ++k) {
    if (k) out += ',';
    out += render(set[k]);
  }
  return out + "}";
}

MonomialPrime parse_prime(std::string_view text, const RingPtr& ring) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("prime must be written as (X,Y,...)");
  s = s.substr(1, s.size() - 2);
  if (s == "0") return MonomialPrime(ring, {});
  std::vector<std::size_t> support;
  std::size_t pos = 0;
  while (true) {
    const std::size_t end = s.find(',', pos);
    const std::string name = s.substr(pos, end == std::string::npos ? end : end - pos);
    const int idx = ring->index_of(name);
    if (idx < 0) throw ParseError("unknown variable '" + name + "' in prime");
    support.push_back(static_cast<std::size_t>(idx));
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return MonomialPrime(ring, std::move(support));
}

bool prime_contains(const MonomialPrime& p, const MonomialIdeal& ideal) {
  require_same_ring(p.ring(), ideal.ring());
  for (const auto& g : ideal.gens()) {
    bool hit = false;
    for (auto i : p.support())
      if (g[i] > 0) {
        hit = true;
        break;
      }
    if (!hit) return false;
  }
  return true;
}

PrimeSet restrict_to_variety(const PrimeSet& set, const MonomialIdeal& ideal) {
  PrimeSet out;
  for (const auto& p : set)
    if (prime_contains(p, ideal)) out.push_back(p);
  return out;
}

PrimeSet remove_variety(const PrimeSet& set, const MonomialIdeal& ideal) {
  PrimeSet out;
  for (const auto& p : set)
    if (!prime_contains(p, ideal)) out.push_back(p);
  return out;
}

// ---------------------------------------------------------------------------
// Splitting recursion

namespace {

using IdealKey = std::vector<Exponent>;

IdealKey key_of(const MonomialIdeal& ideal) {
  IdealKey key;
  for (const auto& g : ideal.gens()) {
    auto e = g.exponents();
    key.insert(key.end(), e.begin(), e.end());
  }
  return key;
}

struct Splitter {
  const SplitOptions& options;
  std::mt19937_64 rng;
  std::set<IdealKey> visited;
  std::vector<MonomialIdeal> leaves;

  void run(const MonomialIdeal& ideal) {
    if (!visited.insert(key_of(ideal)).second) return;
    std::vector<std::size_t> mixed;
    for (std::size_t k = 0; k < ideal.size(); ++k)
      if (ideal.gens()[k].support_size() > 1) mixed.push_back(k);
    if (mixed.empty()) {
      leaves.push_back(ideal);
      return;
    }
    std::size_t pick = mixed.front();
    if (options.shuffle_seed) pick = mixed[rng() % mixed.size()];
    const Monomial& m = ideal.gens()[pick];
    std::size_t first = 0;
    while (m[first] == 0) ++first;
    if (options.shuffle_seed) {
      // Any variable of the generator yields a coprime split.
      std::vector<std::size_t> vars;
      for (std::size_t i = 0; i < m.size(); ++i)
        if (m[i] != 0) vars.push_back(i);
      first = vars[rng() % vars.size()];
    }
    const Monomial u = Monomial::variable(m.size(), first, m[first]);
    const Monomial v = m.colon(u);
    run(sum(ideal, MonomialIdeal::principal(ideal.ring(), u)));
    run(sum(ideal, MonomialIdeal::principal(ideal.ring(), v)));
  }
};

bool ideal_less(const MonomialIdeal& a, const MonomialIdeal& b) {
  const auto ra = radical_of_irreducible(a), rb = radical_of_irreducible(b);
  if (ra == rb) return key_of(a) < key_of(b);
  return ra < rb;
}

}  // namespace

MonomialPrime radical_of_irreducible(const MonomialIdeal& component) {
  Monomial mask(component.ring()->size());
  for (const auto& g : component.gens())
    for (std::size_t i = 0; i < g.size(); ++i)
      if (g[i] != 0) mask[i] = 1;
  return MonomialPrime::from_mask(component.ring(), mask);
}

std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& ideal,
                                                     const SplitOptions& options) {
  if (ideal.is_unit()) fail(ErrorKind::Domain, "decomposition of the unit ideal");
  Splitter splitter{options, std::mt19937_64(options.shuffle_seed.value_or(0)), {}, {}};
  splitter.run(ideal);
  auto& leaves = splitter.leaves;
  // A component containing another component is redundant.
  std::vector<MonomialIdeal> kept;
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < leaves.size() && !redundant; ++j) {
      if (i == j) continue;
      if (leaves[i].contains(leaves[j]) && (!(leaves[i] == leaves[j]) || j < i)) redundant = true;
    }
    if (!redundant) kept.push_back(leaves[i]);
  }
  std::sort(kept.begin(), kept.end(), ideal_less);
  return kept;
}

std::vector<PrimaryComponent> irredundant_primary(const MonomialIdeal& ideal) {
  const auto irreducible = irreducible_decomposition(ideal);
  std::map<MonomialPrime, MonomialIdeal> grouped;
  for (const auto& q : irreducible) {
    auto rad = radical_of_irreducible(q);
    auto it = grouped.find(rad);
    if (it == grouped.end())
      grouped.emplace(std::move(rad), q);
    else
      it->second = intersect(it->second, q);
  }
  std::vector<PrimaryComponent> comps;
  for (auto& [rad, q] : grouped) comps.push_back({q, rad});

  bool changed = true;
  while (changed && comps.size() > 1) {
    changed = false;
    for (std::size_t i = 0; i < comps.size(); ++i) {
      std::optional<MonomialIdeal> others;
      for (std::size_t j = 0; j < comps.size(); ++j) {
        if (j == i) continue;
        others = others ? intersect(*others, comps[j].ideal) : comps[j].ideal;
      }
      if (comps[i].ideal.contains(*others)) {
        comps.erase(comps.begin() + static_cast<std::ptrdiff_t>(i));
        changed = true;
        break;
      }
    }
  }
  return comps;
}

PrimeSet ass_quotient(const MonomialIdeal& ideal) {
  PrimeSet out;
  if (ideal.is_unit()) return out;  // R/(1) = 0
  for (const auto& c : irredundant_primary(ideal)) out.push_back(c.radical);
  normalize(out);
  return out;
}

// ---------------------------------------------------------------------------
// Corner engine

std::vector<Corner> corners(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ring()->size();
  // Artinian closure exponents: L_i exceeds every exponent of x_i.
  Monomial top = ideal.max_exponents();
  std::vector<Monomial> gens(ideal.gens());
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return a.total() < b.total(); });

  std::vector<Monomial> current{top};  // corner of (x_i^(L_i)) is L - 1 = top
  std::vector<Monomial> added;
  added.reserve(gens.size());

  auto in_closure = [&](const Monomial& t) {
    for (std::size_t j = 0; j < n; ++j)
      if (t[j] > top[j]) return true;
    for (const auto& h : added)
      if (h.divides(t)) return true;
    return false;
  };

  for (const auto& g : gens) {
    added.push_back(g);
    std::vector<Monomial> next;
    std::vector<Monomial> destroyed;
    for (auto& c : current) (g.divides(c) ? destroyed : next).push_back(c);
    for (const auto& c : destroyed) {
      for (std::size_t i = 0; i < n; ++i) {
        if (g[i] == 0) continue;
        Monomial cand = c;
        cand[i] = g[i] - 1;
        bool maximal = true;
        for (std::size_t j = 0; j < n && maximal; ++j) {
          if (j == i) continue;
          Monomial t = cand;
          t[j] += 1;
          maximal = in_closure(t);
        }
        if (maximal) next.push_back(cand);
      }
    }
    current = std::move(next);
  }

  std::vector<Corner> out;
  out.reserve(current.size());
  for (auto& c : current) {
    Monomial mask(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (c[i] < top[i]) {
        mask[i] = 1;
      } else {
        c[i] = 0;
      }
    }
    out.push_back({c, MonomialPrime::from_mask(ideal.ring(), mask)});
  }
  std::sort(out.begin(), out.end(), [&](const Corner& a, const Corner& b) {
    if (!(a.radical == b.radical)) return a.radical < b.radical;
    return canonical_less(a.exponents, b.exponents, ideal.ring_spec());
  });
  return out;
}

namespace {

// Projection of m onto the variables outside `in_prime` (zeroing the rest).
Monomial project_out(const Monomial& m, const std::vector<char>& in_prime) {
  Monomial r = m;
  for (std::size_t i = 0; i < r.size(); ++i)
    if (in_prime[i]) r[i] = 0;
  return r;
}

bool better(Degree d, const Monomial& m, const PrimeWitness& cur, const RingSpec& ring) {
  if (d != cur.degree) return d < cur.degree;
  return canonical_less(m, cur.witness, ring);
}

}  // namespace

std::vector<PrimeWitness> minimal_witnesses(const MonomialIdeal& a, const MonomialIdeal& b) {
  return minimal_witnesses(a, b, corners(b));
}

std::vector<PrimeWitness> minimal_witnesses(const MonomialIdeal& a, const MonomialIdeal& b,
                                            const std::vector<Corner>& corners_of_b) {
  require_same_ring(a.ring(), b.ring());
  if (!a.contains(b)) fail(ErrorKind::Domain, "subquotient requires B ⊆ A");
  const RingSpec& ring = a.ring_spec();
  const std::size_t n = ring.size();
  if (a.is_zero()) return {};

  // Generators of B indexed by (variable, exponent).
  std::vector<std::unordered_map<Exponent, std::vector<std::size_t>>> by_exp(n);
  for (std::size_t k = 0; k < b.size(); ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (b.gens()[k][i] > 0) by_exp[i][b.gens()[k][i]].push_back(k);

  std::map<MonomialPrime, PrimeWitness> best;
  for (const auto& corner : corners_of_b) {
    const Monomial& c = corner.exponents;
    const Degree base = degree(c, ring);
    if (auto it = best.find(corner.radical); it != best.end() && base > it->second.degree)
      continue;

    std::vector<char> in_prime(n, 0);
    for (auto i : corner.radical.support()) in_prime[i] = 1;
    auto below_on_prime = [&](const Monomial& g, std::size_t skip) {
      for (auto j : corner.radical.support())
        if (j != skip && g[j] > c[j]) return false;
      return true;
    };

    std::vector<Monomial> h;
    for (const auto& g : a.gens())
      if (below_on_prime(g, n)) h.push_back(project_out(g, in_prime));
    if (h.empty()) continue;
    MonomialIdeal target = MonomialIdeal::minimalize(a.ring(), std::move(h));

    for (auto i : corner.radical.support()) {
      std::vector<Monomial> f;
      if (auto it = by_exp[i].find(c[i] + 1); it != by_exp[i].end())
        for (auto k : it->second)
          if (below_on_prime(b.gens()[k], i)) f.push_back(project_out(b.gens()[k], in_prime));
      if (f.empty()) fail(ErrorKind::Domain, "internal: corner without covering generator");
      target = intersect(target, MonomialIdeal::minimalize(a.ring(), std::move(f)));
    }
    const Monomial& low = target.gens().front();  // canonical order: least degree first
    const Monomial witness = c * low;
    const Degree d = degree(witness, ring);
    auto it = best.find(corner.radical);
    if (it == best.end())
      best.emplace(corner.radical, PrimeWitness{corner.radical, d, witness});
    else if (better(d, witness, it->second, ring))
      it->second = PrimeWitness{corner.radical, d, witness};
  }
  std::vector<PrimeWitness> out;
  for (auto& [p, w] : best) out.push_back(std::move(w));
  return out;
}

PrimeSet ass_subquotient(const MonomialIdeal& a, const MonomialIdeal& b) {
  PrimeSet out;
  for (const auto& w : minimal_witnesses(a, b)) out.push_back(w.prime);
  return out;
}

std::vector<PrimeWitness> box_witness_search(const MonomialIdeal& a, const MonomialIdeal& b,
                                             Exponent slack, std::size_t max_points) {
  require_same_ring(a.ring(), b.ring());
  if (!a.contains(b)) fail(ErrorKind::Domain, "subquotient requires B ⊆ A");
  const RingSpec& ring = a.ring_spec();
  const std::size_t n = ring.size();
  Monomial cap = a.max_exponents().lcm(b.max_exponents());
  std::size_t points = 1;
  for (std::size_t i = 0; i < n; ++i) {
    cap[i] += slack;
    points *= static_cast<std::size_t>(cap[i]) + 1;
    if (points > max_points) fail(ErrorKind::OracleCap, "witness box too large");
  }

  std::map<MonomialPrime, PrimeWitness> best;
  Monomial m(n);
  for (std::size_t step = 0; step < points; ++step) {
    if (a.contains(m) && !b.contains(m)) {
      const MonomialIdeal ann = colon(b, m);
      bool prime = true;
      Monomial mask(n);
      for (const auto& g : ann.gens()) {
        if (g.total() != 1) {
          prime = false;
          break;
        }
        mask = mask.lcm(g);
      }
      if (prime) {
        auto p = MonomialPrime::from_mask(a.ring(), mask);
        const Degree d = degree(m, ring);
        auto it = best.find(p);
        if (it == best.end())
          best.emplace(p, PrimeWitness{p, d, m});
        else if (better(d, m, it->second, ring))
          it->second = PrimeWitness{p, d, m};
      }
    }
    for (std::size_t i = 0; i < n; ++i) {  // odometer increment
      if (m[i] < cap[i]) {
        ++m[i];
        break;
      }
      m[i] = 0;
    }
  }
  std::vector<PrimeWitness> out;
  for (auto& [p, w] : best) out.push_back(std::move(w));
  return out;
}

}  // namespace vnl

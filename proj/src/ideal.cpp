#include "vnumlab/ideal.hpp"

#include <algorithm>
#include <cctype>

namespace vnl {

namespace {

void check_limit(std::size_t count, std::size_t limit) {
  if (count > limit)
    fail(ErrorKind::Resource, "generator count " + std::to_string(count) + " exceeds limit " +
                                  std::to_string(limit));
}

}  // namespace

MonomialIdeal MonomialIdeal::from_candidates(RingPtr ring, std::vector<Monomial> cands) {
  std::sort(cands.begin(), cands.end(), [](const Monomial& a, const Monomial& b) {
    return a.total() < b.total();
  });
  std::vector<Monomial> kept;
  kept.reserve(cands.size());
  for (const auto& c : cands) {
    bool redundant = false;
    for (const auto& k : kept) {
      if (k.divides(c)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) kept.push_back(c);
  }
  const RingSpec& spec = *ring;
  std::sort(kept.begin(), kept.end(),
            [&](const Monomial& a, const Monomial& b) { return canonical_less(a, b, spec); });
  return MonomialIdeal(std::move(ring), std::move(kept));
}

MonomialIdeal MonomialIdeal::minimalize(RingPtr ring, std::vector<Monomial> gens) {
  if (!ring) fail(ErrorKind::Domain, "missing ring");
  if (gens.empty()) fail(ErrorKind::Domain, "cannot minimalize an empty generator set");
  for (const auto& g : gens)
    if (g.size() != ring->size()) fail(ErrorKind::Domain, "ring mismatch in generator");
  return from_candidates(std::move(ring), std::move(gens));
}

MonomialIdeal MonomialIdeal::unit(RingPtr ring) {
  const std::size_t n = ring->size();
  return MonomialIdeal(std::move(ring), {Monomial(n)});
}

MonomialIdeal MonomialIdeal::zero(RingPtr ring) { return MonomialIdeal(std::move(ring), {}); }

MonomialIdeal MonomialIdeal::principal(RingPtr ring, const Monomial& m) {
  return minimalize(std::move(ring), {m});
}

bool MonomialIdeal::contains(const Monomial& m) const noexcept {
  for (const auto& g : gens_)
    if (g.divides(m)) return true;
  return false;
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_ring(ring_, other.ring_);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

Monomial MonomialIdeal::max_exponents() const {
  Monomial m(ring_->size());
  for (const auto& g : gens_)
    for (std::size_t i = 0; i < g.size(); ++i) m[i] = std::max(m[i], g[i]);
  return m;
}

bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (!(*a.ring_ == *b.ring_)) return false;
  return a.gens_ == b.gens_;
}

MonomialIdeal combine(const MonomialIdeal& a, const MonomialIdeal& b, Combine mode,
                      std::size_t limit) {
  return mode == Combine::Sum ? sum(a, b) : product(a, b, limit);
}

MonomialIdeal sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  std::vector<Monomial> all(a.gens());
  all.insert(all.end(), b.gens().begin(), b.gens().end());
  return MonomialIdeal::minimalize(a.ring(), std::move(all));
}

MonomialIdeal product(const MonomialIdeal& a, const MonomialIdeal& b, std::size_t limit) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ring());
  std::vector<Monomial> all;
  all.reserve(a.size() * b.size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) all.push_back(g * h);
  auto result = MonomialIdeal::minimalize(a.ring(), std::move(all));
  check_limit(result.size(), limit);
  return result;
}

MonomialIdeal power(const MonomialIdeal& ideal, unsigned n, std::size_t limit) {
  MonomialIdeal result = MonomialIdeal::unit(ideal.ring());
  for (unsigned k = 0; k < n; ++k) result = product(result, ideal, limit);
  return result;
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b, std::size_t limit) {
  require_same_ring(a.ring(), b.ring());
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.ring());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  std::vector<Monomial> all;
  all.reserve(a.size() * b.size());
  for (const auto& g : a.gens())
    for (const auto& h : b.gens()) all.push_back(g.lcm(h));
  auto result = MonomialIdeal::minimalize(a.ring(), std::move(all));
  check_limit(result.size(), limit);
  return result;
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& by) {
  if (by.size() != ideal.ring()->size()) fail(ErrorKind::Domain, "ring mismatch in colon");
  if (ideal.is_zero()) return ideal;
  std::vector<Monomial> all;
  all.reserve(ideal.size());
  for (const auto& g : ideal.gens()) all.push_back(g.colon(by));
  return MonomialIdeal::minimalize(ideal.ring(), std::move(all));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  require_same_ring(ideal.ring(), by.ring());
  if (by.is_zero()) return MonomialIdeal::unit(ideal.ring());
  MonomialIdeal result = colon(ideal, by.gens().front());
  for (std::size_t i = 1; i < by.size(); ++i) result = intersect(result, colon(ideal, by.gens()[i]));
  return result;
}

Saturation saturate(const MonomialIdeal& ideal, const MonomialIdeal& by) {
  MonomialIdeal current = ideal;
  for (unsigned k = 1;; ++k) {
    MonomialIdeal next = colon(current, by);
    if (next == current) return {std::move(current), k};
    current = std::move(next);
  }
}

std::vector<Degree> generator_degrees(const MonomialIdeal& ideal) {
  if (ideal.is_unit()) fail(ErrorKind::Domain, "generator degrees of the unit ideal");
  std::vector<Degree> out;
  out.reserve(ideal.size());
  for (const auto& g : ideal.gens()) out.push_back(degree(g, ideal.ring_spec()));
  std::sort(out.begin(), out.end());
  return out;
}

MonomialIdeal parse_ideal(std::string_view text, const RingPtr& ring) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')')
    throw ParseError("ideal must be written as (m1, m2, ...)");
  s = s.substr(1, s.size() - 2);
  std::vector<Monomial> gens;
  std::size_t pos = 0;
  bool saw_zero = false;
  while (true) {
    const std::size_t end = s.find(',', pos);
    std::string_view item = s.substr(pos, end == std::string_view::npos ? end : end - pos);
    std::string_view t = item;
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.front()))) t.remove_prefix(1);
    while (!t.empty() && std::isspace(static_cast<unsigned char>(t.back()))) t.remove_suffix(1);
    if (t == "0") {
      saw_zero = true;
    } else {
      gens.push_back(parse_monomial(item, *ring));
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  if (gens.empty()) {
    if (saw_zero) return MonomialIdeal::zero(ring);
    throw ParseError("ideal has no generators");
  }
  return MonomialIdeal::minimalize(ring, std::move(gens));
}

std::string render(const MonomialIdeal& ideal) {
  if (ideal.is_zero()) return "(0)";
  std::string out = "(";
  for (std::size_t i = 0; i < ideal.size(); ++i) {
    if (i) out += ", ";
    out += render(ideal.gens()[i], ideal.ring_spec());
  }
  return out + ")";
}

}  // namespace vnl

#include "vnumlab/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <set>

namespace vnl {

namespace {

bool valid_identifier(const std::string& s) {
  if (s.empty()) return false;
  if (!(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

RingSpec::RingSpec(std::vector<std::string> vars, std::vector<Exponent> weights)
    : vars_(std::move(vars)), weights_(std::move(weights)) {
  if (vars_.empty()) fail(ErrorKind::Domain, "ring needs at least one variable");
  if (vars_.size() > kMaxVars)
    fail(ErrorKind::Domain, "ring has more than " + std::to_string(kMaxVars) + " variables");
  if (weights_.empty()) weights_.assign(vars_.size(), 1);
  if (weights_.size() != vars_.size())
    fail(ErrorKind::Domain, "weights count " + std::to_string(weights_.size()) +
                                " does not match variable count " + std::to_string(vars_.size()));
  std::set<std::string> seen;
  for (const auto& v : vars_) {
    if (!valid_identifier(v)) fail(ErrorKind::Domain, "invalid variable name '" + v + "'");
    if (!seen.insert(v).second) fail(ErrorKind::Domain, "duplicate variable '" + v + "'");
  }
  for (auto w : weights_)
    if (w < 1) fail(ErrorKind::Domain, "variable weights must be >= 1");
}

RingSpec::RingSpec(std::vector<std::string> vars) : RingSpec(std::move(vars), {}) {}

int RingSpec::index_of(std::string_view name) const noexcept {
  for (std::size_t i = 0; i < vars_.size(); ++i)
    if (vars_[i] == name) return static_cast<int>(i);
  return -1;
}

bool RingSpec::unit_weights() const noexcept {
  return std::all_of(weights_.begin(), weights_.end(), [](Exponent w) { return w == 1; });
}

RingPtr make_ring(std::vector<std::string> vars, std::vector<Exponent> weights) {
  return std::make_shared<const RingSpec>(std::move(vars), std::move(weights));
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return;
  if (!a || !b || !(*a == *b)) fail(ErrorKind::Domain, "ring mismatch");
}

Monomial::Monomial(std::size_t nvars) : n_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars) fail(ErrorKind::Domain, "too many variables for a monomial");
}

Monomial::Monomial(std::initializer_list<Exponent> exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), e_.begin());
}

Monomial::Monomial(const std::vector<Exponent>& exps) : Monomial(exps.size()) {
  std::copy(exps.begin(), exps.end(), e_.begin());
}

Monomial Monomial::variable(std::size_t nvars, std::size_t index, Exponent power) {
  Monomial m(nvars);
  m.e_.at(index) = power;
  return m;
}

bool Monomial::is_unit() const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] != 0) return false;
  return true;
}

std::uint64_t Monomial::total() const noexcept {
  std::uint64_t t = 0;
  for (std::size_t i = 0; i < n_; ++i) t += e_[i];
  return t;
}

std::size_t Monomial::support_size() const noexcept {
  std::size_t s = 0;
  for (std::size_t i = 0; i < n_; ++i) s += e_[i] != 0;
  return s;
}

bool Monomial::divides(const Monomial& other) const noexcept {
  for (std::size_t i = 0; i < n_; ++i)
    if (e_[i] > other.e_[i]) return false;
  return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (n_ != other.n_) fail(ErrorKind::Domain, "ring mismatch in monomial product");
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) {
    if (e_[i] > std::numeric_limits<Exponent>::max() - other.e_[i])
      fail(ErrorKind::Resource, "exponent overflow");
    r.e_[i] = e_[i] + other.e_[i];
  }
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const noexcept {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::min(e_[i], other.e_[i]);
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const noexcept {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = std::max(e_[i], other.e_[i]);
  return r;
}

Monomial Monomial::colon(const Monomial& other) const noexcept {
  Monomial r(n_);
  for (std::size_t i = 0; i < n_; ++i) r.e_[i] = e_[i] > other.e_[i] ? e_[i] - other.e_[i] : 0;
  return r;
}

bool operator==(const Monomial& a, const Monomial& b) noexcept {
  if (a.n_ != b.n_) return false;
  for (std::size_t i = 0; i < a.n_; ++i)
    if (a.e_[i] != b.e_[i]) return false;
  return true;
}

Degree degree(const Monomial& m, const RingSpec& ring) {
  Degree d = 0;
  for (std::size_t i = 0; i < m.size(); ++i) d += static_cast<Degree>(m[i]) * ring.weight(i);
  return d;
}

bool canonical_less(const Monomial& a, const Monomial& b, const RingSpec& ring) {
  const Degree da = degree(a, ring), db = degree(b, ring);
  if (da != db) return da < db;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return a[i] > b[i];
  return false;
}

LatticeResult lattice(const Monomial& a, const Monomial& b) {
  if (a.size() != b.size()) fail(ErrorKind::Domain, "ring mismatch in monomial lattice");
  return {a.divides(b), a.gcd(b), a.lcm(b), a.colon(b)};
}

Monomial parse_monomial(std::string_view text, const RingSpec& ring) {
  const std::string_view body = trim(text);
  if (body.empty()) throw ParseError("empty monomial");
  Monomial m(ring.size());
  std::size_t pos = 0;
  while (true) {
    std::size_t end = body.find('*', pos);
    std::string_view term = trim(body.substr(pos, end == std::string_view::npos ? end : end - pos));
    if (term.empty()) throw ParseError("empty factor in monomial '" + std::string(body) + "'");
    if (term != "1") {
      std::string_view name = term;
      Exponent power = 1;
      if (auto caret = term.find('^'); caret != std::string_view::npos) {
        name = trim(term.substr(0, caret));
        std::string_view digits = trim(term.substr(caret + 1));
        if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
              return std::isdigit(static_cast<unsigned char>(c));
            }))
          throw ParseError("malformed exponent in '" + std::string(term) + "'");
        std::uint64_t value = 0;
        for (char c : digits) {
          value = value * 10 + static_cast<unsigned>(c - '0');
          if (value > std::numeric_limits<Exponent>::max())
            throw ParseError("exponent too large in '" + std::string(term) + "'");
        }
        if (value == 0) throw ParseError("exponent must be positive in '" + std::string(term) + "'");
        power = static_cast<Exponent>(value);
      }
      const int idx = ring.index_of(name);
      if (idx < 0) throw ParseError("unknown variable '" + std::string(name) + "'");
      if (m[idx] > std::numeric_limits<Exponent>::max() - power)
        throw ParseError("exponent overflow in '" + std::string(body) + "'");
      m[idx] += power;
    }
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return m;
}

std::string render(const Monomial& m, const RingSpec& ring) {
  std::string out;
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += ring.var(i);
    if (m[i] != 1) out += '^' + std::to_string(m[i]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = m.size();
  for (std::size_t i = 0; i < m.size(); ++i) h = h * 1000003u ^ m[i];
  return h;
}

}  // namespace vnl

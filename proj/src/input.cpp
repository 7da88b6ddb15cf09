#include "vnumlab/input.hpp"

#include <cctype>
#include <optional>
#include <vector>

namespace vnl {

namespace {

struct Cursor {
  std::string_view line;
  std::size_t number;
  std::size_t pos = 0;

  [[noreturn]] void error(const std::string& what, std::size_t at) const {
    throw ParseError(what, number, at + 1);
  }
  [[noreturn]] void error(const std::string& what) const { error(what, pos); }

  void skip_space() {
    while (pos < line.size() && std::isspace(static_cast<unsigned char>(line[pos]))) ++pos;
  }
  bool done() {
    skip_space();
    return pos >= line.size();
  }
  bool peek(char c) {
    skip_space();
    return pos < line.size() && line[pos] == c;
  }
  void expect(std::string_view token) {
    skip_space();
    if (line.substr(pos, token.size()) != token)
      error("expected '" + std::string(token) + "'");
    pos += token.size();
  }
  std::string word() {
    skip_space();
    const std::size_t start = pos;
    while (pos < line.size() &&
           (std::isalnum(static_cast<unsigned char>(line[pos])) || line[pos] == '_'))
      ++pos;
    if (start == pos) error("expected an identifier");
    if (std::isdigit(static_cast<unsigned char>(line[start])))
      error("identifier cannot start with a digit", start);
    return std::string(line.substr(start, pos - start));
  }
  long long integer() {
    skip_space();
    const std::size_t start = pos;
    if (pos < line.size() && (line[pos] == '-' || line[pos] == '+')) ++pos;
    const std::size_t digits = pos;
    while (pos < line.size() && std::isdigit(static_cast<unsigned char>(line[pos]))) ++pos;
    if (digits == pos || pos - digits > 12) error("expected an integer", start);
    return std::stoll(std::string(line.substr(start, pos - start)));
  }
  void finish() {
    if (!done()) error("unexpected trailing text");
  }
};

// "(m1, m2, ...)" with per-item positions; "(0)" is the zero ideal.
MonomialIdeal ideal_list(Cursor& cur, const RingPtr& ring) {
  cur.skip_space();
  if (!cur.peek('(')) cur.error("expected '('");
  const std::size_t open = cur.pos;
  const std::size_t close = cur.line.find(')', open);
  if (close == std::string_view::npos) cur.error("missing ')'", open);
  std::vector<Monomial> gens;
  bool zero = false;
  std::size_t start = open + 1;
  while (true) {
    std::size_t end = cur.line.find(',', start);
    if (end == std::string_view::npos || end > close) end = close;
    std::string_view item = cur.line.substr(start, end - start);
    std::size_t lead = 0;
    while (lead < item.size() && std::isspace(static_cast<unsigned char>(item[lead]))) ++lead;
    std::size_t trail = item.size();
    while (trail > lead && std::isspace(static_cast<unsigned char>(item[trail - 1]))) --trail;
    const std::string_view t = item.substr(lead, trail - lead);
    if (t.empty()) cur.error(end == close && gens.empty() && !zero ? "empty generator list"
                                                                     : "empty generator",
                             start + lead);
    if (t == "0") {
      zero = true;
    } else {
      try {
        gens.push_back(parse_monomial(t, *ring));
      } catch (const ParseError& e) {
        cur.error(e.what(), start + lead);
      }
    }
    if (end == close) break;
    start = end + 1;
  }
  cur.pos = close + 1;
  if (zero && !gens.empty()) cur.error("0 cannot be combined with other generators", open);
  return zero ? MonomialIdeal::zero(ring) : MonomialIdeal::minimalize(ring, std::move(gens));
}

}  // namespace

FamilySpec parse_input(std::string_view text) {
  std::vector<std::string> vars;
  std::vector<Exponent> weights;
  std::size_t weights_line = 0;
  RingPtr ring;
  std::optional<MonomialIdeal> ideal;
  std::vector<Degree> shifts;
  std::vector<MonomialIdeal> relations, submodule;
  std::size_t last_line = 0, first_sub_line = 0;

  auto need_ring = [&](const Cursor& cur) {
    if (vars.empty()) cur.error("the ring must be declared first", 0);
    if (!ring) {
      try {
        ring = make_ring(vars, weights);
      } catch (const Error& e) {
        throw ParseError(e.what(), weights_line ? weights_line : cur.number, 1);
      }
    }
  };

  std::size_t number = 0;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    std::size_t end = text.find('\n', begin);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(begin, end - begin);
    begin = end + 1;
    ++number;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    Cursor cur{line, number};
    if (cur.done()) continue;
    last_line = number;
    const std::size_t key_at = cur.pos;
    const std::string key = cur.word();

    if (key == "ring") {
      if (!vars.empty()) cur.error("duplicate ring declaration", key_at);
      while (!cur.done()) {
        const std::size_t at = cur.pos;
        std::string v = cur.word();
        for (const auto& seen : vars)
          if (seen == v) cur.error("duplicate variable '" + v + "'", at);
        vars.push_back(std::move(v));
      }
      if (vars.empty()) cur.error("ring needs at least one variable");
      if (vars.size() > kMaxVars)
        cur.error("at most " + std::to_string(kMaxVars) + " variables are supported", key_at);
    } else if (key == "weights") {
      if (vars.empty()) cur.error("weights must follow the ring declaration", key_at);
      if (ring || weights_line) cur.error("weights must directly follow the ring", key_at);
      weights_line = number;
      while (!cur.done()) {
        const std::size_t at = cur.pos;
        const long long w = cur.integer();
        if (w < 1 || w > 1'000'000) cur.error("weights must be positive integers", at);
        weights.push_back(static_cast<Exponent>(w));
      }
      if (weights.size() != vars.size())
        cur.error("expected " + std::to_string(vars.size()) + " weights, got " +
                      std::to_string(weights.size()),
                  key_at);
    } else if (key == "ideal") {
      need_ring(cur);
      if (ideal) cur.error("duplicate ideal declaration", key_at);
      cur.word();
      cur.expect("=");
      cur.skip_space();
      const std::size_t at = cur.pos;
      auto i = ideal_list(cur, ring);
      cur.finish();
      if (i.is_unit()) cur.error("the ideal must be proper, (1) is not allowed", at);
      if (i.is_zero()) cur.error("the ideal must be nonzero", at);
      ideal = std::move(i);
    } else if (key == "module") {
      need_ring(cur);
      if (!submodule.empty()) cur.error("module lines must precede submodule lines", key_at);
      cur.word();
      cur.expect("+=");
      Degree shift = 0;
      bool any = false;
      if (cur.peek('[')) {
        cur.expect("[");
        shift = cur.integer();
        cur.expect("]");
        any = true;
      }
      MonomialIdeal rel = MonomialIdeal::zero(ring);
      if (cur.peek('/')) {
        cur.expect("/");
        rel = ideal_list(cur, ring);
        any = true;
      }
      if (!any) cur.error("expected [shift] or / (relations)");
      cur.finish();
      shifts.push_back(shift);
      relations.push_back(std::move(rel));
    } else if (key == "submodule") {
      need_ring(cur);
      cur.word();
      cur.expect("+=");
      auto k = ideal_list(cur, ring);
      cur.finish();
      if (submodule.empty()) first_sub_line = number;
      if (submodule.size() >= relations.size())
        cur.error("submodule has more components than the module (" +
                      std::to_string(relations.size()) + ")",
                  key_at);
      submodule.push_back(std::move(k));
    } else {
      cur.error("unknown keyword '" + key + "'", key_at);
    }
  }

  if (vars.empty()) throw ParseError("missing ring declaration", last_line ? last_line : 1, 1);
  if (!ideal) throw ParseError("missing ideal declaration", last_line ? last_line : 1, 1);
  if (relations.empty()) throw ParseError("missing module declaration", last_line, 1);
  if (!submodule.empty() && submodule.size() != relations.size())
    throw ParseError("submodule has " + std::to_string(submodule.size()) +
                         " components but the module has " + std::to_string(relations.size()),
                     first_sub_line, 1);
  return FamilySpec(ring, *ideal, std::move(shifts), std::move(relations), std::move(submodule));
}

std::string echo(const FamilySpec& spec) {
  const RingSpec& ring = *spec.ring();
  std::string out = "ring";
  for (const auto& v : ring.vars()) out += " " + v;
  out += "\n";
  if (!ring.unit_weights()) {
    out += "weights";
    for (auto w : ring.weights()) out += " " + std::to_string(w);
    out += "\n";
  }
  out += "ideal I = " + render(spec.ideal()) + "\n";
  for (const auto& c : spec.components()) {
    out += "module M += [" + std::to_string(c.shift) + "]";
    if (!c.relations.is_zero()) out += " / " + render(c.relations);
    out += "\n";
  }
  if (spec.has_submodule())
    for (const auto& c : spec.components()) out += "submodule N += " + render(c.generators) + "\n";
  return out;
}

}  // namespace vnl

#include "scarftree/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_set>

#include "scarftree/error.hpp"

namespace scarftree {

Monomial::Monomial(std::map<std::string, Exponent> exponents) {
  for (auto& [name, e] : exponents) {
    if (e < 0) throw Error(ErrorCode::DivisibilityViolation, "negative exponent for '" + name + "'");
    if (e > 0) exponents_.emplace(name, std::move(e));
  }
}

Monomial Monomial::variable(const std::string& name, unsigned long exponent) {
  return Monomial(std::map<std::string, Exponent>{{name, Exponent(exponent)}});
}

Exponent Monomial::exponent(const std::string& name) const {
  auto it = exponents_.find(name);
  return it == exponents_.end() ? Exponent(0) : it->second;
}

Exponent Monomial::degree() const {
  Exponent d = 0;
  for (const auto& [name, e] : exponents_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial out = *this;
  for (const auto& [name, e] : other.exponents_) out.exponents_[name] += e;
  return out;
}

bool operator<(const Monomial& a, const Monomial& b) {
  auto ia = a.exponents_.begin(), ib = b.exponents_.begin();
  for (; ia != a.exponents_.end() && ib != b.exponents_.end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.exponents_.end() && ib != b.exponents_.end();
}

bool divides(const Monomial& a, const Monomial& b) {
  for (const auto& [name, e] : a.exponents()) {
    if (e > b.exponent(name)) return false;
  }
  return true;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  std::map<std::string, Exponent> out = a.exponents();
  for (const auto& [name, e] : b.exponents()) {
    auto& slot = out[name];
    if (e > slot) slot = e;
  }
  return Monomial(std::move(out));
}

Monomial lcm(std::span<const Monomial> monomials) {
  if (monomials.empty()) throw Error(ErrorCode::EmptyList, "lcm of an empty list");
  Monomial out = monomials.front();
  for (const Monomial& m : monomials.subspan(1)) out = lcm(out, m);
  return out;
}

Monomial radical(const Monomial& m) {
  std::map<std::string, Exponent> out;
  for (const auto& [name, e] : m.exponents()) out.emplace(name, Exponent(1));
  return Monomial(std::move(out));
}

Monomial exact_quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) {
    throw Error(ErrorCode::DivisibilityViolation, format_monomial(a) + " does not divide " + format_monomial(b));
  }
  std::map<std::string, Exponent> out = b.exponents();
  for (const auto& [name, e] : a.exponents()) out[name] -= e;
  return Monomial(std::move(out));
}

std::vector<Monomial> minimalize(const std::vector<Monomial>& generators) {
  std::vector<Monomial> out;
  for (std::size_t i = 0; i < generators.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < generators.size() && !redundant; ++j) {
      if (i == j || !divides(generators[j], generators[i])) continue;
      // Equal generators: keep the first occurrence only.
      redundant = generators[j] != generators[i] || j < i;
    }
    if (!redundant) out.push_back(generators[i]);
  }
  return out;
}

bool lex_less(const Monomial& a, const Monomial& b, const std::vector<std::string>& variables) {
  for (const std::string& v : variables) {
    const Exponent ea = a.exponent(v), eb = b.exponent(v);
    if (ea != eb) return ea < eb;
  }
  // Fall back to the unlisted variables, by name.
  std::map<std::string, std::pair<Exponent, Exponent>> rest;
  const std::unordered_set<std::string> listed(variables.begin(), variables.end());
  for (const auto& [name, e] : a.exponents()) {
    if (!listed.count(name)) rest[name].first = e;
  }
  for (const auto& [name, e] : b.exponents()) {
    if (!listed.count(name)) rest[name].second = e;
  }
  for (const auto& [name, pair] : rest) {
    if (pair.first != pair.second) return pair.first < pair.second;
  }
  return false;
}

bool is_valid_variable_name(std::string_view name) {
  if (name.empty() || !std::isalpha(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(),
                     [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

Monomial parse_monomial(std::string_view text) {
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_space();
  if (pos < text.size() && text[pos] == '1') {
    std::size_t after = pos + 1;
    while (after < text.size() && std::isspace(static_cast<unsigned char>(text[after]))) ++after;
    if (after == text.size()) return Monomial();
  }
  std::map<std::string, Exponent> exps;
  for (;;) {
    skip_space();
    const std::size_t start = pos;
    if (pos >= text.size() || !std::isalpha(static_cast<unsigned char>(text[pos]))) {
      throw ParseError("expected a variable name", pos);
    }
    while (pos < text.size() && (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) ++pos;
    std::string name(text.substr(start, pos - start));
    Exponent e = 1;
    skip_space();
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      skip_space();
      const std::size_t digits = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (digits == pos) throw ParseError("expected an exponent", digits);
      e = Exponent(std::string(text.substr(digits, pos - digits)), 10);
      if (e == 0) throw ParseError("exponents must be positive", digits);
    }
    exps[name] += e;
    skip_space();
    if (pos == text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*'", pos);
    ++pos;
  }
  return Monomial(std::move(exps));
}

namespace {

void append_term(std::string& out, const std::string& name, const Exponent& e) {
  if (!out.empty()) out += '*';
  out += name;
  if (e != 1) out += "^" + e.get_str();
}

}  // namespace

std::string format_monomial(const Monomial& m) { return format_monomial(m, {}); }

std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables) {
  if (m.is_unit()) return "1";
  std::string out;
  std::unordered_set<std::string> listed;
  for (const std::string& v : variables) {
    listed.insert(v);
    const Exponent e = m.exponent(v);
    if (e > 0) append_term(out, v, e);
  }
  for (const auto& [name, e] : m.exponents()) {
    if (!listed.count(name)) append_term(out, name, e);
  }
  return out;
}

MonomialIdeal::MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators)
    : variables_(std::move(variables)), generators_(std::move(generators)) {
  std::unordered_set<std::string> known;
  for (const std::string& v : variables_) {
    if (!is_valid_variable_name(v)) throw Error(ErrorCode::UnknownVariable, "invalid variable name '" + v + "'");
    if (!known.insert(v).second) throw Error(ErrorCode::UnknownVariable, "duplicate variable '" + v + "'");
  }
  for (const Monomial& g : generators_) {
    for (const auto& [name, e] : g.exponents()) {
      if (!known.count(name)) {
        throw Error(ErrorCode::UnknownVariable, "generator " + format_monomial(g) + " uses undeclared variable '" + name + "'");
      }
    }
  }
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    for (std::size_t j = 0; j < generators_.size(); ++j) {
      if (i != j && divides(generators_[i], generators_[j])) {
        throw Error(ErrorCode::NotMinimal, "generator " + format_monomial(generators_[i], variables_) + " divides " +
                                               format_monomial(generators_[j], variables_));
      }
    }
  }
}

namespace {

std::vector<std::string> variables_of(const std::vector<Monomial>& generators) {
  std::vector<std::string> out;
  for (const Monomial& g : generators) {
    for (const auto& [name, e] : g.exponents()) out.push_back(name);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

// Copies rather than moves: argument evaluation order is unspecified.
MonomialIdeal::MonomialIdeal(std::vector<Monomial> generators)
    : MonomialIdeal(variables_of(generators), generators) {}

MonomialIdeal MonomialIdeal::minimalized(std::vector<std::string> variables, const std::vector<Monomial>& generators) {
  return MonomialIdeal(std::move(variables), minimalize(generators));
}

LcmCode::LcmCode(const std::vector<std::string>& variables, const std::vector<Monomial>& generators)
    : variables_(variables), values_(variables.size()) {
  std::map<std::string, std::size_t> index;
  for (std::size_t k = 0; k < variables_.size(); ++k) index.emplace(variables_[k], k);
  for (const Monomial& g : generators) {
    for (const auto& [name, e] : g.exponents()) {
      if (!index.count(name)) throw Error(ErrorCode::UnknownVariable, "variable '" + name + "' not in the variable list");
    }
  }
  for (std::size_t k = 0; k < variables_.size(); ++k) {
    std::vector<Exponent>& vals = values_[k];
    vals.emplace_back(0);
    for (const Monomial& g : generators) vals.push_back(g.exponent(variables_[k]));
    std::sort(vals.begin(), vals.end());
    vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
  }
  for (const Monomial& g : generators) {
    Code code(variables_.size(), 0);
    for (std::size_t k = 0; k < variables_.size(); ++k) {
      const Exponent e = g.exponent(variables_[k]);
      const auto& vals = values_[k];
      code[k] = static_cast<std::uint32_t>(std::lower_bound(vals.begin(), vals.end(), e) - vals.begin());
    }
    generators_.push_back(std::move(code));
  }
}

Monomial LcmCode::decode(std::span<const std::uint32_t> code) const {
  std::map<std::string, Exponent> exps;
  for (std::size_t k = 0; k < code.size(); ++k) {
    if (code[k] != 0) exps.emplace(variables_[k], values_[k][code[k]]);
  }
  return Monomial(std::move(exps));
}

std::size_t CodeHash::operator()(const LcmCode::Code& code) const noexcept {
  std::size_t h = 0xcbf29ce484222325ULL;
  for (std::uint32_t v : code) {
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

bool code_divides(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

void code_lcm_into(std::span<std::uint32_t> acc, std::span<const std::uint32_t> other) {
  for (std::size_t k = 0; k < acc.size(); ++k) acc[k] = std::max(acc[k], other[k]);
}

std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal) {
  const LcmCode code(ideal.variables(), ideal.generators());
  // Closure under lcm with each generator in turn.
  std::unordered_set<LcmCode::Code, CodeHash> lattice;
  for (std::size_t i = 0; i < code.generator_count(); ++i) {
    std::vector<LcmCode::Code> fresh{code.generator(i)};
    for (const LcmCode::Code& existing : lattice) {
      LcmCode::Code joined = existing;
      code_lcm_into(joined, code.generator(i));
      fresh.push_back(std::move(joined));
    }
    for (auto& c : fresh) lattice.insert(std::move(c));
  }
  std::vector<LcmCode::Code> sorted(lattice.begin(), lattice.end());
  // Rank coding preserves the per-variable order, so lex on codes is lex on monomials.
  std::sort(sorted.begin(), sorted.end());
  std::vector<Monomial> out;
  out.reserve(sorted.size());
  for (const auto& c : sorted) out.push_back(code.decode(c));
  return out;
}

}  // namespace scarftree

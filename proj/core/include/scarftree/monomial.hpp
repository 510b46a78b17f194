#pragma once

// Exact monomials over named variables and minimally generated monomial ideals.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace scarftree {

using Exponent = mpz_class;

class Monomial {
 public:
  // The unit monomial.
  Monomial() = default;
  // Zero exponents are dropped; negative ones throw DivisibilityViolation.
  explicit Monomial(std::map<std::string, Exponent> exponents);

  static Monomial variable(const std::string& name, unsigned long exponent = 1);

  const std::map<std::string, Exponent>& exponents() const noexcept { return exponents_; }
  Exponent exponent(const std::string& name) const;
  bool is_unit() const noexcept { return exponents_.empty(); }
  Exponent degree() const;

  Monomial operator*(const Monomial& other) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  // Arbitrary but total order (by variable name, then exponent), for use as a map key.
  friend bool operator<(const Monomial& a, const Monomial& b);

 private:
  std::map<std::string, Exponent> exponents_;
};

bool divides(const Monomial& a, const Monomial& b);

Monomial lcm(const Monomial& a, const Monomial& b);
// Throws EmptyList.
Monomial lcm(std::span<const Monomial> monomials);

Monomial radical(const Monomial& m);

// b / a; throws DivisibilityViolation unless a | b.
Monomial exact_quotient(const Monomial& b, const Monomial& a);

// Drops duplicates and every monomial divisible by another; keeps first
// occurrences in input order.
std::vector<Monomial> minimalize(const std::vector<Monomial>& generators);

// Lexicographic comparison of exponent vectors, variables taken in the given
// order. Variables missing from the list compare after all listed ones, by name.
bool lex_less(const Monomial& a, const Monomial& b, const std::vector<std::string>& variables);

// Grammar: term ("*" term)*, term = name ("^" positive-integer)?,
// name = letter (letter | digit | "_")*; "1" is the unit.
Monomial parse_monomial(std::string_view text);
// Variables in name order.
std::string format_monomial(const Monomial& m);
// Variables in the given order, then any unlisted ones by name.
std::string format_monomial(const Monomial& m, const std::vector<std::string>& variables);

bool is_valid_variable_name(std::string_view name);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  // Throws NotMinimal if some generator divides another (or repeats), and
  // UnknownVariable if a generator uses a variable outside `variables`.
  MonomialIdeal(std::vector<std::string> variables, std::vector<Monomial> generators);
  // Variables inferred from the generators, sorted by name.
  explicit MonomialIdeal(std::vector<Monomial> generators);

  static MonomialIdeal minimalized(std::vector<std::string> variables, const std::vector<Monomial>& generators);

  const std::vector<std::string>& variables() const noexcept { return variables_; }
  const std::vector<Monomial>& generators() const noexcept { return generators_; }
  std::size_t size() const noexcept { return generators_.size(); }

  friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;

 private:
  std::vector<std::string> variables_;
  std::vector<Monomial> generators_;
};

// Dense coding of the lcms of a fixed generator list. Each exponent is
// replaced by its rank among the exponents that variable takes in the
// generators (0 for absent), which preserves max and <= exactly.
class LcmCode {
 public:
  using Code = std::vector<std::uint32_t>;

  LcmCode(const std::vector<std::string>& variables, const std::vector<Monomial>& generators);

  std::size_t width() const noexcept { return variables_.size(); }
  std::size_t generator_count() const noexcept { return generators_.size(); }
  const Code& generator(std::size_t i) const { return generators_[i]; }
  Monomial decode(std::span<const std::uint32_t> code) const;

 private:
  std::vector<std::string> variables_;
  // values_[k][r] = exponent of rank r for variable k (values_[k][0] == 0).
  std::vector<std::vector<Exponent>> values_;
  std::vector<Code> generators_;
};

struct CodeHash {
  std::size_t operator()(const LcmCode::Code& code) const noexcept;
};

bool code_divides(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
void code_lcm_into(std::span<std::uint32_t> acc, std::span<const std::uint32_t> other);

// {lcm(S) : S nonempty subset of the generators}, sorted by lex_less under the
// ideal's variable order.
std::vector<Monomial> lcm_lattice(const MonomialIdeal& ideal);

}  // namespace scarftree

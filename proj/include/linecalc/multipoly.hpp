#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "linecalc/param_scalar.hpp"

namespace linecalc {

/// Ordered list of named variables shared by a family of polynomials.
class Universe {
 public:
  explicit Universe(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const noexcept { return names_; }
  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Throws UnknownVariable.
  std::size_t require(std::string_view name) const;

  friend bool operator==(const Universe& a, const Universe& b) { return a.names_ == b.names_; }

 private:
  std::vector<std::string> names_;
};

using UniversePtr = std::shared_ptr<const Universe>;

/// S, T, Z1..Z{N-1}: homogeneous coordinates of P^N.
UniversePtr projective_universe(std::size_t n);
/// a1..a{N-1}, b1..b{N-1}: coordinates of the standard line chart.
UniversePtr chart_universe(std::size_t n);
/// s, t followed by the chart coordinates.
UniversePtr line_universe(std::size_t n);
/// s, t.
UniversePtr binary_universe();

using Exponents = std::vector<std::uint16_t>;

struct ExponentOrder {
  /// Graded, then lexicographic with the first universe variable most
  /// significant; "greater" so maps iterate from the leading term down.
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse polynomial over a Universe with ParamScalar coefficients.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, ParamScalar, ExponentOrder>;

  MultiPoly(UniversePtr u, const FieldSpec& f);

  static MultiPoly variable(UniversePtr u, const FieldSpec& f, std::size_t index);
  static MultiPoly variable(UniversePtr u, const FieldSpec& f, std::string_view name);
  static MultiPoly constant(UniversePtr u, const ParamScalar& c);

  const UniversePtr& universe() const noexcept { return universe_; }
  const FieldSpec& field() const noexcept { return field_; }
  const TermMap& terms() const noexcept { return terms_; }

  bool is_zero() const noexcept { return terms_.empty(); }
  bool has_parameters() const;
  std::size_t max_parameter() const;
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  /// True when every term has total degree d (the zero polynomial qualifies for every d).
  bool is_homogeneous(unsigned d) const;
  ParamScalar coefficient(const Exponents& e) const;
  /// Adds c * monomial(e).
  void add_term(const Exponents& e, const ParamScalar& c);

  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly operator-() const;
  MultiPoly scaled(const ParamScalar& c) const;
  MultiPoly pow(unsigned e) const;

  /// Moves the terms onto another universe of the same size (renaming).
  MultiPoly rebased(UniversePtr u) const;
  /// Values for c_1, c_2, ... are substituted into every coefficient.
  MultiPoly evaluate_parameters(std::span<const Scalar> values) const;
  /// Full evaluation at a point of the universe.
  ParamScalar evaluate(std::span<const ParamScalar> point) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  /// Text in the polynomial grammar, e.g. "c1*S^3 - S^2*T".
  std::string to_string() const;

 private:
  void check_compatible(const MultiPoly& o) const;

  UniversePtr universe_;
  FieldSpec field_;
  TermMap terms_;
};

/// Formal partial derivative; exponents divisible by the characteristic annihilate.
MultiPoly differentiate(const MultiPoly& p, std::size_t var);
MultiPoly differentiate(const MultiPoly& p, std::string_view var);

/// Simultaneous substitution var_i -> images[i]; every image lives in the
/// same target universe. Variables not occurring in p may map to anything.
MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images);
/// Map-based form; every variable occurring in p must be assigned.
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment);

/// Parses the polynomial grammar: integers, variables from the universe,
/// parameters c1..ck (when allow_parameters), + - * ^ / and parentheses.
/// Division is only by nonzero integer constants. Throws ParseError.
MultiPoly parse_polynomial(std::string_view text, const UniversePtr& u, const FieldSpec& f,
                           bool allow_parameters = true);

}  // namespace linecalc

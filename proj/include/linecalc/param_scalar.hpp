#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "linecalc/field.hpp"

namespace linecalc {

/// Exponents of c_1, c_2, ...; trailing zeros are always trimmed so that
/// monomials compare independently of how many parameters are in play.
using ParamMonomial = std::vector<std::uint16_t>;

/// Graded lexicographic order with c_1 < c_2 < ...
bool grlex_less(const ParamMonomial& a, const ParamMonomial& b);

/// Polynomial in the parameters c_1..c_k over a base field. With no
/// parameters in use it degenerates to a plain field element.
///
/// Canonical form: terms strictly decreasing in grlex, no zero coefficients;
/// zero is the empty term list.
class ParamScalar {
 public:
  struct Term {
    ParamMonomial mono;
    Scalar coeff;
  };

  ParamScalar() = default;  // zero over Q
  explicit ParamScalar(const FieldSpec& f) : field_(f) {}
  ParamScalar(const Scalar& s);  // NOLINT(google-explicit-constructor)

  static ParamScalar constant(const FieldSpec& f, long long n);
  /// The parameter c_index (1-based).
  static ParamScalar parameter(const FieldSpec& f, std::size_t index);

  const FieldSpec& field() const noexcept { return field_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  bool is_one() const;
  /// Throws ParameterPresent when the value carries a parameter.
  Scalar constant_value() const;
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// Highest parameter index occurring (0 if constant).
  std::size_t max_parameter() const;
  unsigned total_degree() const;

  ParamScalar& operator+=(const ParamScalar& o);
  ParamScalar& operator-=(const ParamScalar& o);
  ParamScalar& operator*=(const ParamScalar& o);
  friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
  friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
  friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
  ParamScalar operator-() const;
  ParamScalar scaled(const Scalar& s) const;
  ParamScalar pow(unsigned e) const;

  /// Quotient a / d when d divides a exactly; throws InvalidArgument otherwise.
  ParamScalar divide_exact(const ParamScalar& d) const;

  /// values[i] is substituted for c_{i+1}; must cover max_parameter().
  Scalar evaluate(std::span<const Scalar> values) const;

  friend bool operator==(const ParamScalar& a, const ParamScalar& b);

  /// Parseable text, e.g. "c1^2 - 3*c2 + 1". Multi-term values are not
  /// parenthesized here; callers embedding them in products must do so.
  std::string to_string() const;
  /// Number of printed summands, used by callers to decide on parentheses.
  std::size_t size() const noexcept { return terms_.size(); }

 private:
  static ParamScalar from_sorted(const FieldSpec& f, std::vector<Term> terms);
  ParamScalar& add_scaled(const ParamScalar& o, bool negate);

  FieldSpec field_;
  std::vector<Term> terms_;
};

}  // namespace linecalc

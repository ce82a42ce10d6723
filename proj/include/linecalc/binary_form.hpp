#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "linecalc/multipoly.hpp"

namespace linecalc {

/// Homogeneous form in (s, t). coeffs[k] multiplies s^(d-k) t^k.
class BinaryForm {
 public:
  BinaryForm() = default;
  BinaryForm(const FieldSpec& f, unsigned degree);
  BinaryForm(const FieldSpec& f, unsigned degree, std::vector<ParamScalar> coeffs);

  static BinaryForm from_ints(const FieldSpec& f, const std::vector<long long>& coeffs);
  /// s^(d-k) t^k.
  static BinaryForm monomial(const FieldSpec& f, unsigned degree, unsigned k);
  /// p must live in a two-variable universe and be homogeneous of the given degree.
  static BinaryForm from_multipoly(const MultiPoly& p, unsigned degree);

  const FieldSpec& field() const noexcept { return field_; }
  unsigned degree() const noexcept { return degree_; }
  const std::vector<ParamScalar>& coeffs() const noexcept { return coeffs_; }
  const ParamScalar& coeff(unsigned k) const { return coeffs_.at(k); }
  bool is_zero() const;
  bool has_parameters() const;

  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  BinaryForm operator-() const;
  BinaryForm scaled(const ParamScalar& c) const;
  BinaryForm pow(unsigned e) const;

  /// F(P(s,t), Q(s,t)); P and Q share a degree.
  BinaryForm compose(const BinaryForm& p, const BinaryForm& q) const;
  BinaryForm evaluate_parameters(std::span<const Scalar> values) const;
  MultiPoly to_multipoly(const UniversePtr& st) const;

  friend bool operator==(const BinaryForm& a, const BinaryForm& b);
  std::string to_string() const;

 private:
  FieldSpec field_;
  unsigned degree_ = 0;
  std::vector<ParamScalar> coeffs_{ParamScalar()};
};

/// Quotient f / d when d divides f; nullopt otherwise. Parameter-free only.
std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& d);

/// gcd as polynomials in (s, t): the common power of t is split off, the
/// rest is a gcd of the dehomogenized polynomials in s, made monic.
/// Degree 0 means the forms have no common projective zero.
/// Throws AllZero when every form vanishes and ParameterPresent on parameters.
BinaryForm binary_gcd(std::span<const BinaryForm> forms);

}  // namespace linecalc

#include "linecalc/binary_form.hpp"

#include <algorithm>

#include "linecalc/error.hpp"

namespace linecalc {

namespace {

// Univariate polynomial in x = s/t, ascending coefficients, no trailing zeros.
using UPoly = std::vector<Scalar>;

void normalize(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

UPoly upoly_mod(UPoly a, const UPoly& b) {
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar factor = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    normalize(a);
  }
  return a;
}

std::optional<UPoly> upoly_div_exact(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) {
    if (a.empty()) return UPoly{};
    return std::nullopt;
  }
  UPoly q(a.size() - b.size() + 1, Scalar::zero(b.back().field()));
  const Scalar lead_inv = b.back().inverse();
  while (a.size() >= b.size()) {
    const Scalar factor = a.back() * lead_inv;
    const std::size_t shift = a.size() - b.size();
    q[shift] = factor;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] -= factor * b[i];
    a.pop_back();
    normalize(a);
  }
  if (!a.empty()) return std::nullopt;
  return q;
}

UPoly make_monic(UPoly p) {
  const Scalar inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly upoly_gcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = upoly_mod(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  return a.empty() ? a : make_monic(std::move(a));
}

// F = t^v * F' with F' not divisible by t; returns v and F'(x, 1).
std::pair<unsigned, UPoly> split_t_power(const BinaryForm& f) {
  const unsigned d = f.degree();
  unsigned v = 0;
  while (f.coeff(v).is_zero()) ++v;
  UPoly p(d - v + 1);
  for (unsigned k = v; k <= d; ++k) p[d - k] = f.coeff(k).constant_value();
  normalize(p);
  return {v, p};
}

// t^v * homogenization of g.
BinaryForm join_t_power(const FieldSpec& f, unsigned v, const UPoly& g) {
  const unsigned e = static_cast<unsigned>(g.size()) - 1;
  std::vector<ParamScalar> coeffs(e + v + 1, ParamScalar(f));
  for (unsigned i = 0; i <= e; ++i) coeffs[e - i + v] = ParamScalar(g[i]);
  return BinaryForm(f, e + v, std::move(coeffs));
}

}  // namespace

BinaryForm::BinaryForm(const FieldSpec& f, unsigned degree)
    : field_(f), degree_(degree), coeffs_(degree + 1, ParamScalar(f)) {}

BinaryForm::BinaryForm(const FieldSpec& f, unsigned degree, std::vector<ParamScalar> coeffs)
    : field_(f), degree_(degree), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != degree + 1) throw Error(ErrorKind::InvalidArgument, "binary form needs degree+1 coefficients");
}

BinaryForm BinaryForm::from_ints(const FieldSpec& f, const std::vector<long long>& coeffs) {
  if (coeffs.empty()) throw Error(ErrorKind::InvalidArgument, "binary form needs at least one coefficient");
  std::vector<ParamScalar> c;
  for (auto x : coeffs) c.push_back(ParamScalar::constant(f, x));
  return BinaryForm(f, static_cast<unsigned>(coeffs.size() - 1), std::move(c));
}

BinaryForm BinaryForm::monomial(const FieldSpec& f, unsigned degree, unsigned k) {
  BinaryForm b(f, degree);
  b.coeffs_.at(k) = ParamScalar::constant(f, 1);
  return b;
}

BinaryForm BinaryForm::from_multipoly(const MultiPoly& p, unsigned degree) {
  if (p.universe()->size() != 2) throw Error(ErrorKind::InvalidArgument, "binary form needs a two-variable universe");
  if (!p.is_homogeneous(degree)) {
    throw Error(ErrorKind::NotHomogeneous, p.to_string() + " is not homogeneous of degree " + std::to_string(degree));
  }
  BinaryForm b(p.field(), degree);
  for (const auto& [e, c] : p.terms()) b.coeffs_[e[1]] = c;
  return b;
}

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const ParamScalar& c) { return c.is_zero(); });
}

bool BinaryForm::has_parameters() const {
  return std::any_of(coeffs_.begin(), coeffs_.end(), [](const ParamScalar& c) { return !c.is_constant(); });
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree_ != degree_) throw Error(ErrorKind::InvalidArgument, "adding binary forms of different degrees");
  for (unsigned k = 0; k <= degree_; ++k) coeffs_[k] += o.coeffs_[k];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) {
  if (o.degree_ != degree_) throw Error(ErrorKind::InvalidArgument, "subtracting binary forms of different degrees");
  for (unsigned k = 0; k <= degree_; ++k) coeffs_[k] -= o.coeffs_[k];
  return *this;
}

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  BinaryForm r(a.field_, a.degree_ + b.degree_);
  for (unsigned i = 0; i <= a.degree_; ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (unsigned j = 0; j <= b.degree_; ++j) {
      if (!b.coeffs_[j].is_zero()) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return r;
}

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BinaryForm BinaryForm::scaled(const ParamScalar& c) const {
  BinaryForm r = *this;
  for (auto& x : r.coeffs_) x = x * c;
  return r;
}

BinaryForm BinaryForm::pow(unsigned e) const {
  BinaryForm result = from_ints(field_, {1});
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

BinaryForm BinaryForm::compose(const BinaryForm& p, const BinaryForm& q) const {
  if (p.degree_ != q.degree_) throw Error(ErrorKind::InvalidArgument, "composition needs P and Q of equal degree");
  BinaryForm result(field_, degree_ * p.degree_);
  std::vector<BinaryForm> p_pow{from_ints(field_, {1})}, q_pow{from_ints(field_, {1})};
  for (unsigned i = 0; i < degree_; ++i) {
    p_pow.push_back(p_pow.back() * p);
    q_pow.push_back(q_pow.back() * q);
  }
  for (unsigned k = 0; k <= degree_; ++k) {
    if (coeffs_[k].is_zero()) continue;
    result += (p_pow[degree_ - k] * q_pow[k]).scaled(coeffs_[k]);
  }
  return result;
}

BinaryForm BinaryForm::evaluate_parameters(std::span<const Scalar> values) const {
  BinaryForm r = *this;
  for (auto& c : r.coeffs_) c = ParamScalar(c.evaluate(values));
  return r;
}

MultiPoly BinaryForm::to_multipoly(const UniversePtr& st) const {
  MultiPoly p(st, field_);
  for (unsigned k = 0; k <= degree_; ++k) {
    p.add_term(Exponents{static_cast<std::uint16_t>(degree_ - k), static_cast<std::uint16_t>(k)}, coeffs_[k]);
  }
  return p;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) { return a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_; }

std::string BinaryForm::to_string() const { return to_multipoly(binary_universe()).to_string(); }

std::optional<BinaryForm> divide_exact(const BinaryForm& f, const BinaryForm& d) {
  if (f.has_parameters() || d.has_parameters()) {
    throw Error(ErrorKind::ParameterPresent, "binary form division needs parameter-free forms");
  }
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "division by the zero form");
  if (d.degree() > f.degree()) {
    if (f.is_zero()) return BinaryForm(f.field(), 0);
    return std::nullopt;
  }
  if (f.is_zero()) return BinaryForm(f.field(), f.degree() - d.degree());
  auto [vf, pf] = split_t_power(f);
  auto [vd, pd] = split_t_power(d);
  if (vd > vf) return std::nullopt;
  auto q = upoly_div_exact(pf, pd);
  if (!q) return std::nullopt;
  BinaryForm result = join_t_power(f.field(), vf - vd, *q);
  if (result.degree() != f.degree() - d.degree()) return std::nullopt;
  return result;
}

BinaryForm binary_gcd(std::span<const BinaryForm> forms) {
  std::optional<unsigned> v_min;
  UPoly g;
  FieldSpec field;
  for (const auto& f : forms) {
    if (f.has_parameters()) throw Error(ErrorKind::ParameterPresent, "binary_gcd needs parameter-free forms");
    if (f.is_zero()) continue;
    field = f.field();
    auto [v, p] = split_t_power(f);
    v_min = v_min ? std::min(*v_min, v) : v;
    g = upoly_gcd(std::move(g), std::move(p));
  }
  if (!v_min) throw Error(ErrorKind::AllZero, "binary_gcd of zero forms only");
  return join_t_power(field, *v_min, g);
}

}  // namespace linecalc

#include "linecalc/param_scalar.hpp"

#include <algorithm>
#include <map>

#include "linecalc/error.hpp"

namespace linecalc {

namespace {

unsigned degree_of(const ParamMonomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

void trim(ParamMonomial& m) {
  while (!m.empty() && m.back() == 0) m.pop_back();
}

ParamMonomial mono_mul(const ParamMonomial& a, const ParamMonomial& b) {
  ParamMonomial r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return r;
}

bool mono_divides(const ParamMonomial& d, const ParamMonomial& m) {
  if (d.size() > m.size()) return false;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

ParamMonomial mono_div(const ParamMonomial& m, const ParamMonomial& d) {
  ParamMonomial r = m;
  for (std::size_t i = 0; i < d.size(); ++i) r[i] -= d[i];
  trim(r);
  return r;
}

struct GrlexGreater {
  bool operator()(const ParamMonomial& a, const ParamMonomial& b) const { return grlex_less(b, a); }
};

}  // namespace

bool grlex_less(const ParamMonomial& a, const ParamMonomial& b) {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da < db;
  // c_k is the most significant variable
  const std::size_t n = std::max(a.size(), b.size());
  for (std::size_t i = n; i-- > 0;) {
    const unsigned ea = i < a.size() ? a[i] : 0;
    const unsigned eb = i < b.size() ? b[i] : 0;
    if (ea != eb) return ea < eb;
  }
  return false;
}

ParamScalar::ParamScalar(const Scalar& s) : field_(s.field()) {
  if (!s.is_zero()) terms_.push_back({{}, s});
}

ParamScalar ParamScalar::constant(const FieldSpec& f, long long n) { return ParamScalar(Scalar::from_int(f, n)); }

ParamScalar ParamScalar::parameter(const FieldSpec& f, std::size_t index) {
  if (index == 0) throw Error(ErrorKind::InvalidArgument, "parameters are 1-based");
  ParamScalar p(f);
  ParamMonomial m(index, 0);
  m.back() = 1;
  p.terms_.push_back({std::move(m), Scalar::one(f)});
  return p;
}

ParamScalar ParamScalar::from_sorted(const FieldSpec& f, std::vector<Term> terms) {
  ParamScalar p(f);
  p.terms_ = std::move(terms);
  return p;
}

bool ParamScalar::is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.empty()); }

bool ParamScalar::is_one() const { return terms_.size() == 1 && terms_[0].mono.empty() && terms_[0].coeff.is_one(); }

Scalar ParamScalar::constant_value() const {
  if (terms_.empty()) return Scalar::zero(field_);
  if (!is_constant()) throw Error(ErrorKind::ParameterPresent, "value depends on parameters: " + to_string());
  return terms_[0].coeff;
}

std::size_t ParamScalar::max_parameter() const {
  std::size_t k = 0;
  for (const auto& t : terms_) k = std::max(k, t.mono.size());
  return k;
}

unsigned ParamScalar::total_degree() const { return terms_.empty() ? 0 : degree_of(terms_.front().mono); }

ParamScalar& ParamScalar::add_scaled(const ParamScalar& o, bool negate) {
  if (o.terms_.empty()) return *this;
  if (terms_.empty()) field_ = o.field_;
  std::vector<Term> out;
  out.reserve(terms_.size() + o.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && grlex_less(o.terms_[j].mono, terms_[i].mono))) {
      out.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || grlex_less(terms_[i].mono, o.terms_[j].mono)) {
      out.push_back({o.terms_[j].mono, negate ? -o.terms_[j].coeff : o.terms_[j].coeff});
      ++j;
    } else {
      Scalar c = negate ? terms_[i].coeff - o.terms_[j].coeff : terms_[i].coeff + o.terms_[j].coeff;
      if (!c.is_zero()) out.push_back({std::move(terms_[i].mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  terms_ = std::move(out);
  return *this;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o) { return add_scaled(o, false); }
ParamScalar& ParamScalar::operator-=(const ParamScalar& o) { return add_scaled(o, true); }

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b) {
  const FieldSpec& f = a.terms_.empty() ? b.field_ : a.field_;
  if (a.terms_.empty() || b.terms_.empty()) return ParamScalar(f);
  if (a.terms_.size() == 1 && a.terms_[0].mono.empty()) return b.scaled(a.terms_[0].coeff);
  if (b.terms_.size() == 1 && b.terms_[0].mono.empty()) return a.scaled(b.terms_[0].coeff);
  std::map<ParamMonomial, Scalar, GrlexGreater> acc;
  for (const auto& x : a.terms_) {
    for (const auto& y : b.terms_) {
      auto m = mono_mul(x.mono, y.mono);
      auto it = acc.find(m);
      if (it == acc.end()) {
        acc.emplace(std::move(m), x.coeff * y.coeff);
      } else {
        it->second += x.coeff * y.coeff;
      }
    }
  }
  std::vector<ParamScalar::Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (!c.is_zero()) terms.push_back({m, std::move(c)});
  }
  return ParamScalar::from_sorted(f, std::move(terms));
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) { return *this = *this * o; }

ParamScalar ParamScalar::operator-() const {
  ParamScalar r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

ParamScalar ParamScalar::scaled(const Scalar& s) const {
  if (s.is_zero()) return ParamScalar(s.field());
  ParamScalar r = *this;
  for (auto& t : r.terms_) t.coeff *= s;
  return r;
}

ParamScalar ParamScalar::pow(unsigned e) const {
  ParamScalar result = constant(field_, 1);
  ParamScalar base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

ParamScalar ParamScalar::divide_exact(const ParamScalar& d) const {
  if (d.is_zero()) throw Error(ErrorKind::DivisionByZero, "exact division by zero");
  if (d.is_constant()) return scaled(d.terms_[0].coeff.inverse());
  ParamScalar q(field_);
  ParamScalar r = *this;
  const Term& lead = d.terms_.front();
  const Scalar lead_inv = lead.coeff.inverse();
  while (!r.is_zero()) {
    const Term& rt = r.terms_.front();
    if (!mono_divides(lead.mono, rt.mono)) {
      throw Error(ErrorKind::InvalidArgument, "inexact division of " + to_string() + " by " + d.to_string());
    }
    Term t{mono_div(rt.mono, lead.mono), rt.coeff * lead_inv};
    std::vector<Term> shifted;
    shifted.reserve(d.terms_.size());
    for (const auto& dt : d.terms_) shifted.push_back({mono_mul(dt.mono, t.mono), dt.coeff * t.coeff});
    for (auto& s : shifted) trim(s.mono);
    r -= from_sorted(field_, std::move(shifted));
    q += from_sorted(field_, {std::move(t)});
  }
  return q;
}

Scalar ParamScalar::evaluate(std::span<const Scalar> values) const {
  Scalar acc = Scalar::zero(field_);
  for (const auto& t : terms_) {
    Scalar v = t.coeff;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (i >= values.size()) {
        throw Error(ErrorKind::InvalidArgument, "no value supplied for c" + std::to_string(i + 1));
      }
      v *= values[i].pow(t.mono[i]);
    }
    acc += v;
  }
  return acc;
}

bool operator==(const ParamScalar& a, const ParamScalar& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].mono != b.terms_[i].mono || !(a.terms_[i].coeff == b.terms_[i].coeff)) return false;
  }
  return true;
}

std::string ParamScalar::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : terms_) {
    std::string c = t.coeff.to_string();
    bool negative = c.front() == '-';
    if (negative) c.erase(0, 1);
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < t.mono.size(); ++i) {
      if (t.mono[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "c" + std::to_string(i + 1);
      if (t.mono[i] > 1) mono += "^" + std::to_string(t.mono[i]);
    }
    if (mono.empty()) {
      out += c;
    } else if (c == "1") {
      out += mono;
    } else {
      out += c + "*" + mono;
    }
  }
  return out;
}

}  // namespace linecalc

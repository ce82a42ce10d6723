#include "linecalc/multipoly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "linecalc/error.hpp"

namespace linecalc {

// --- Universe ---------------------------------------------------------------

Universe::Universe(std::vector<std::string> names) : names_(std::move(names)) {}

std::optional<std::size_t> Universe::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i] == name) return i;
  }
  return std::nullopt;
}

std::size_t Universe::require(std::string_view name) const {
  if (auto i = index_of(name)) return *i;
  throw Error(ErrorKind::UnknownVariable, "unknown variable '" + std::string(name) + "'");
}

UniversePtr projective_universe(std::size_t n) {
  std::vector<std::string> names{"S", "T"};
  for (std::size_t j = 1; j + 1 <= n; ++j) names.push_back("Z" + std::to_string(j));
  return std::make_shared<const Universe>(std::move(names));
}

UniversePtr chart_universe(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t j = 1; j + 1 <= n; ++j) names.push_back("a" + std::to_string(j));
  for (std::size_t j = 1; j + 1 <= n; ++j) names.push_back("b" + std::to_string(j));
  return std::make_shared<const Universe>(std::move(names));
}

UniversePtr line_universe(std::size_t n) {
  std::vector<std::string> names{"s", "t"};
  auto chart = chart_universe(n);
  names.insert(names.end(), chart->names().begin(), chart->names().end());
  return std::make_shared<const Universe>(std::move(names));
}

UniversePtr binary_universe() { return std::make_shared<const Universe>(std::vector<std::string>{"s", "t"}); }

// --- MultiPoly --------------------------------------------------------------

namespace {

unsigned degree_of(const Exponents& e) {
  unsigned d = 0;
  for (auto x : e) d += x;
  return d;
}

}  // namespace

bool ExponentOrder::operator()(const Exponents& a, const Exponents& b) const {
  const unsigned da = degree_of(a), db = degree_of(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

MultiPoly::MultiPoly(UniversePtr u, const FieldSpec& f) : universe_(std::move(u)), field_(f) {}

MultiPoly MultiPoly::variable(UniversePtr u, const FieldSpec& f, std::size_t index) {
  if (index >= u->size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  MultiPoly p(u, f);
  Exponents e(u->size(), 0);
  e[index] = 1;
  p.terms_.emplace(std::move(e), ParamScalar::constant(f, 1));
  return p;
}

MultiPoly MultiPoly::variable(UniversePtr u, const FieldSpec& f, std::string_view name) {
  const std::size_t i = u->require(name);
  return variable(std::move(u), f, i);
}

MultiPoly MultiPoly::constant(UniversePtr u, const ParamScalar& c) {
  MultiPoly p(u, c.field());
  if (!c.is_zero()) p.terms_.emplace(Exponents(u->size(), 0), c);
  return p;
}

bool MultiPoly::has_parameters() const {
  return std::any_of(terms_.begin(), terms_.end(), [](const auto& t) { return !t.second.is_constant(); });
}

std::size_t MultiPoly::max_parameter() const {
  std::size_t k = 0;
  for (const auto& [e, c] : terms_) k = std::max(k, c.max_parameter());
  return k;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(degree_of(e)));
  return d;
}

bool MultiPoly::is_homogeneous(unsigned d) const {
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return degree_of(t.first) == d; });
}

ParamScalar MultiPoly::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? ParamScalar(field_) : it->second;
}

void MultiPoly::add_term(const Exponents& e, const ParamScalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void MultiPoly::check_compatible(const MultiPoly& o) const {
  if (universe_ != o.universe_ && !(*universe_ == *o.universe_)) {
    throw Error(ErrorKind::InvalidArgument, "polynomials over different universes");
  }
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_compatible(b);
  MultiPoly r(a.universe_, a.field_);
  Exponents e(a.universe_->size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  }
  return r;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

MultiPoly MultiPoly::scaled(const ParamScalar& c) const {
  MultiPoly r(universe_, field_);
  for (const auto& [e, x] : terms_) r.add_term(e, x * c);
  return r;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly result = constant(universe_, ParamScalar::constant(field_, 1));
  MultiPoly base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e != 0) base *= base;
  }
  return result;
}

MultiPoly MultiPoly::rebased(UniversePtr u) const {
  if (u->size() != universe_->size()) throw Error(ErrorKind::InvalidArgument, "rebase needs equal universe sizes");
  MultiPoly r(std::move(u), field_);
  r.terms_ = terms_;
  return r;
}

MultiPoly MultiPoly::evaluate_parameters(std::span<const Scalar> values) const {
  MultiPoly r(universe_, field_);
  for (const auto& [e, c] : terms_) r.add_term(e, ParamScalar(c.evaluate(values)));
  return r;
}

ParamScalar MultiPoly::evaluate(std::span<const ParamScalar> point) const {
  if (point.size() != universe_->size()) throw Error(ErrorKind::InvalidArgument, "evaluation point has wrong length");
  ParamScalar acc(field_);
  for (const auto& [e, c] : terms_) {
    ParamScalar v = c;
    for (std::size_t i = 0; i < e.size() && !v.is_zero(); ++i) {
      if (e[i] != 0) v *= point[i].pow(e[i]);
    }
    acc += v;
  }
  return acc;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib) {
    if (ia->first != ib->first || !(ia->second == ib->second)) return false;
  }
  return true;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += universe_->name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string coeff;
    bool negative = false;
    if (c.size() == 1) {
      coeff = c.to_string();
      if (coeff.front() == '-') {
        negative = true;
        coeff.erase(0, 1);
      }
    } else {
      coeff = "(" + c.to_string() + ")";
    }
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (mono.empty()) {
      out += coeff;
    } else if (coeff == "1") {
      out += mono;
    } else {
      out += coeff + "*" + mono;
    }
  }
  return out;
}

MultiPoly differentiate(const MultiPoly& p, std::size_t var) {
  if (var >= p.universe()->size()) throw Error(ErrorKind::UnknownVariable, "variable index out of range");
  MultiPoly r(p.universe(), p.field());
  for (const auto& [e, c] : p.terms()) {
    if (e[var] == 0) continue;
    Exponents d = e;
    --d[var];
    r.add_term(d, c.scaled(Scalar::from_int(p.field(), e[var])));
  }
  return r;
}

MultiPoly differentiate(const MultiPoly& p, std::string_view var) { return differentiate(p, p.universe()->require(var)); }

MultiPoly substitute(const MultiPoly& p, std::span<const MultiPoly> images) {
  const std::size_t n = p.universe()->size();
  if (images.size() != n) throw Error(ErrorKind::InvalidArgument, "substitution needs one image per variable");
  if (n == 0) return p;
  const UniversePtr& target = images[0].universe();
  // powers[i][k] = images[i]^k, built lazily
  std::vector<std::vector<MultiPoly>> powers(n);
  MultiPoly one = MultiPoly::constant(target, ParamScalar::constant(p.field(), 1));
  MultiPoly result(target, p.field());
  for (const auto& [e, c] : p.terms()) {
    MultiPoly term = MultiPoly::constant(target, c);
    for (std::size_t i = 0; i < n && !term.is_zero(); ++i) {
      if (e[i] == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(one);
      while (pw.size() <= e[i]) pw.push_back(pw.back() * images[i]);
      term *= pw[e[i]];
    }
    result += term;
  }
  return result;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& assignment) {
  const auto& u = *p.universe();
  if (assignment.empty()) {
    if (p.total_degree() <= 0) return p;
    throw Error(ErrorKind::UnknownVariable, "empty assignment");
  }
  for (const auto& [name, img] : assignment) u.require(name);
  std::vector<bool> occurs(u.size(), false);
  for (const auto& [e, c] : p.terms()) {
    for (std::size_t i = 0; i < e.size(); ++i) occurs[i] = occurs[i] || e[i] != 0;
  }
  const MultiPoly& sample = assignment.begin()->second;
  std::vector<MultiPoly> images;
  images.reserve(u.size());
  for (std::size_t i = 0; i < u.size(); ++i) {
    auto it = assignment.find(u.name(i));
    if (it != assignment.end()) {
      images.push_back(it->second);
    } else if (occurs[i]) {
      throw Error(ErrorKind::UnknownVariable, "no image for variable '" + u.name(i) + "'");
    } else {
      images.emplace_back(sample.universe(), sample.field());
    }
  }
  return substitute(p, images);
}

// --- parser -----------------------------------------------------------------

namespace {

class Parser {
 public:
  Parser(std::string_view text, const UniversePtr& u, const FieldSpec& f, bool allow_params)
      : text_(text), u_(u), f_(f), allow_params_(allow_params) {}

  MultiPoly parse() {
    skip_ws();
    if (pos_ == text_.size()) fail("empty polynomial");
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorKind::ParseError,
                msg + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  MultiPoly expr() {
    MultiPoly acc(u_, f_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  MultiPoly term() {
    MultiPoly acc = power();
    for (;;) {
      if (accept('*')) {
        acc *= power();
      } else if (accept('/')) {
        MultiPoly d = power();
        if (d.total_degree() > 0 || d.has_parameters() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc.scaled(ParamScalar(d.terms().begin()->second.constant_value().inverse()));
      } else {
        return acc;
      }
    }
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      skip_ws();
      unsigned e = 0;
      auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), e);
      if (ec != std::errc{}) fail("expected exponent");
      pos_ = static_cast<std::size_t>(ptr - text_.data());
      return base.pow(e);
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ == text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (ch == '-') {
      ++pos_;
      return -atom();
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      mpz_class n(std::string(text_.substr(start, pos_ - start)));
      return MultiPoly::constant(u_, ParamScalar(Scalar::from_mpz(f_, n)));
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string_view name = text_.substr(start, pos_ - start);
      if (auto i = u_->index_of(name)) return MultiPoly::variable(u_, f_, *i);
      if (allow_params_ && name.size() > 1 && name[0] == 'c') {
        std::size_t k = 0;
        auto [ptr, ec] = std::from_chars(name.data() + 1, name.data() + name.size(), k);
        if (ec == std::errc{} && ptr == name.data() + name.size() && k >= 1) {
          return MultiPoly::constant(u_, ParamScalar::parameter(f_, k));
        }
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  std::string_view text_;
  const UniversePtr& u_;
  FieldSpec f_;
  bool allow_params_;
  std::size_t pos_ = 0;
};

}  // namespace

MultiPoly parse_polynomial(std::string_view text, const UniversePtr& u, const FieldSpec& f, bool allow_parameters) {
  return Parser(text, u, f, allow_parameters).parse();
}

}  // namespace linecalc

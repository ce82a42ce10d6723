#include "linecalc/field.hpp"

#include <charconv>

#include "linecalc/error.hpp"

namespace linecalc {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(u128{a} * b % m); }

u64 pow_mod(u64 b, u64 e, u64 m) {
  u64 r = 1 % m;
  b %= m;
  while (e != 0) {
    if (e & 1) r = mul_mod(r, b, m);
    b = mul_mod(b, b, m);
    e >>= 1;
  }
  return r;
}

u64 inv_mod(u64 a, u64 m) {
  // extended Euclid on signed 128-bit to stay clear of overflow
  __int128 t = 0, new_t = 1;
  __int128 r = m, new_r = a;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (t < 0) t += m;
  return static_cast<u64>(t);
}

}  // namespace

std::string_view error_kind_name(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidField: return "InvalidField";
    case ErrorKind::UnknownVariable: return "UnknownVariable";
    case ErrorKind::ParameterPresent: return "ParameterPresent";
    case ErrorKind::FieldMismatch: return "FieldMismatch";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::AllZero: return "AllZero";
    case ErrorKind::NotHomogeneous: return "NotHomogeneous";
    case ErrorKind::LineNotContained: return "LineNotContained";
    case ErrorKind::InfiniteField: return "InfiniteField";
    case ErrorKind::CurveNotOnX: return "CurveNotOnX";
    case ErrorKind::SingularAlongCurve: return "SingularAlongCurve";
    case ErrorKind::SingularAlongLine: return "SingularAlongLine";
    case ErrorKind::TwistTooNegative: return "TwistTooNegative";
    case ErrorKind::BasePointedCover: return "BasePointedCover";
    case ErrorKind::NotCorankOne: return "NotCorankOne";
    case ErrorKind::ConstraintViolated: return "ConstraintViolated";
    case ErrorKind::CharTwoForbidden: return "CharTwoForbidden";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // these bases are a proven witness set for all n < 3.3e24
  for (u64 a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

FieldSpec FieldSpec::prime(u64 p) {
  if (p >= kMaxModulus) {
    throw Error(ErrorKind::InvalidField, "prime modulus must be below 2^61: " + std::to_string(p));
  }
  if (!is_prime(p)) {
    throw Error(ErrorKind::InvalidField, "modulus is not prime: " + std::to_string(p));
  }
  return FieldSpec(p);
}

FieldSpec FieldSpec::from_characteristic(u64 c) { return c == 0 ? rationals() : prime(c); }

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "0") return rationals();
  if (text.starts_with("F:")) text.remove_prefix(2);
  u64 p = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), p);
  if (ec != std::errc{} || ptr != text.data() + text.size() || text.empty()) {
    throw Error(ErrorKind::ParseError, "bad field spec '" + std::string(text) + "' (expected Q or F:p)");
  }
  return prime(p);
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? std::string("Q") : "F:" + std::to_string(p_);
}

// --- Scalar ---------------------------------------------------------------

Scalar Scalar::from_int(const FieldSpec& f, long long n) {
  if (f.is_rationals()) return Scalar(mpq_class(static_cast<long>(n)));
  const u64 p = f.modulus();
  long long r = n % static_cast<long long>(p);
  if (r < 0) r += static_cast<long long>(p);
  return Scalar(Mod{static_cast<u64>(r), p});
}

Scalar Scalar::from_mpz(const FieldSpec& f, const mpz_class& n) {
  if (f.is_rationals()) return Scalar(mpq_class(n));
  // unsigned long is 64-bit on the supported targets and p < 2^61
  const u64 r = mpz_fdiv_ui(n.get_mpz_t(), static_cast<unsigned long>(f.modulus()));
  return Scalar(Mod{r, f.modulus()});
}

Scalar Scalar::from_rational(const FieldSpec& f, const mpq_class& q) {
  if (f.is_rationals()) {
    mpq_class c = q;
    c.canonicalize();
    return Scalar(std::move(c));
  }
  Scalar num = from_mpz(f, q.get_num());
  Scalar den = from_mpz(f, q.get_den());
  if (den.is_zero()) {
    throw Error(ErrorKind::DivisionByZero, "denominator vanishes in " + f.to_string());
  }
  return num / den;
}

FieldSpec Scalar::field() const {
  if (const auto* m = std::get_if<Mod>(&v_)) return FieldSpec(m->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const {
  if (const auto* m = std::get_if<Mod>(&v_)) return m->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (const auto* m = std::get_if<Mod>(&v_)) return m->value == 1;
  return std::get<mpq_class>(v_) == 1;
}

u64 Scalar::residue() const { return std::get<Mod>(v_).value; }

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(v_); }

void Scalar::check_same_field(const Scalar& o) const {
  const auto* a = std::get_if<Mod>(&v_);
  const auto* b = std::get_if<Mod>(&o.v_);
  if ((a == nullptr) != (b == nullptr) || (a != nullptr && a->p != b->p)) {
    throw Error(ErrorKind::FieldMismatch, "arithmetic between different fields");
  }
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* m = std::get_if<Mod>(&v_)) {
    u64 s = m->value + std::get<Mod>(o.v_).value;
    m->value = s >= m->p ? s - m->p : s;
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same_field(o);
  if (auto* m = std::get_if<Mod>(&v_)) {
    u64 b = std::get<Mod>(o.v_).value;
    m->value = m->value >= b ? m->value - b : m->value + (m->p - b);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* m = std::get_if<Mod>(&v_)) {
    m->value = mul_mod(m->value, std::get<Mod>(o.v_).value, m->p);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

Scalar Scalar::operator-() const {
  if (const auto* m = std::get_if<Mod>(&v_)) {
    return Scalar(Mod{m->value == 0 ? 0 : m->p - m->value, m->p});
  }
  return Scalar(mpq_class(-std::get<mpq_class>(v_)));
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorKind::DivisionByZero, "inverse of zero");
  if (const auto* m = std::get_if<Mod>(&v_)) return Scalar(Mod{inv_mod(m->value, m->p), m->p});
  return Scalar(mpq_class(1 / std::get<mpq_class>(v_)));
}

Scalar Scalar::pow(u64 e) const {
  if (const auto* m = std::get_if<Mod>(&v_)) return Scalar(Mod{pow_mod(m->value, e, m->p), m->p});
  Scalar result = one(FieldSpec::rationals());
  Scalar base = *this;
  while (e != 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* x = std::get_if<Scalar::Mod>(&a.v_);
  const auto* y = std::get_if<Scalar::Mod>(&b.v_);
  if ((x == nullptr) != (y == nullptr)) return false;
  if (x != nullptr) return x->p == y->p && x->value == y->value;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (const auto* x = std::get_if<Scalar::Mod>(&a.v_)) return x->value <=> std::get<Scalar::Mod>(b.v_).value;
  int c = cmp(std::get<mpq_class>(a.v_), std::get<mpq_class>(b.v_));
  return c <=> 0;
}

std::string Scalar::to_string() const {
  if (const auto* m = std::get_if<Mod>(&v_)) {
    if (m->value > m->p / 2) return "-" + std::to_string(m->p - m->value);
    return std::to_string(m->value);
  }
  return std::get<mpq_class>(v_).get_str();
}

}  // namespace linecalc

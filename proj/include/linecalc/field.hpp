#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

#include <gmpxx.h>

namespace linecalc {

/// Deterministic Miller-Rabin for 64-bit integers.
bool is_prime(std::uint64_t n);

/// Either the rationals or a prime field F_p with p < 2^61.
class FieldSpec {
 public:
  static constexpr std::uint64_t kMaxModulus = std::uint64_t{1} << 61;

  FieldSpec() = default;  // rationals

  static FieldSpec rationals() { return FieldSpec{}; }
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q" or "F:p".
  static FieldSpec parse(std::string_view text);
  /// 0 means the rationals, anything else a prime modulus.
  static FieldSpec from_characteristic(std::uint64_t c);

  bool is_rationals() const noexcept { return p_ == 0; }
  bool is_prime_field() const noexcept { return p_ != 0; }
  std::uint64_t modulus() const noexcept { return p_; }
  std::uint64_t characteristic() const noexcept { return p_; }
  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  explicit FieldSpec(std::uint64_t p) : p_(p) {}
  std::uint64_t p_ = 0;
};

/// An element of a FieldSpec: a residue mod p or an exact rational.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar zero(const FieldSpec& f) { return from_int(f, 0); }
  static Scalar one(const FieldSpec& f) { return from_int(f, 1); }
  static Scalar from_int(const FieldSpec& f, long long n);
  static Scalar from_mpz(const FieldSpec& f, const mpz_class& n);
  static Scalar from_rational(const FieldSpec& f, const mpq_class& q);

  FieldSpec field() const;
  bool is_zero() const;
  bool is_one() const;

  /// Residue in [0, p); only valid over a prime field.
  std::uint64_t residue() const;
  /// Only valid over the rationals.
  const mpq_class& rational() const;

  Scalar inverse() const;
  Scalar pow(std::uint64_t e) const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);
  /// Total order used only for canonical sorting; not field-meaningful.
  friend std::strong_ordering canonical_compare(const Scalar& a, const Scalar& b);

  /// Residues print in the symmetric range (-p/2, p/2]; rationals as n or n/d.
  std::string to_string() const;

 private:
  struct Mod {
    std::uint64_t value;
    std::uint64_t p;
  };
  explicit Scalar(Mod m) : v_(m) {}
  explicit Scalar(mpq_class q) : v_(std::move(q)) {}
  void check_same_field(const Scalar& o) const;

  std::variant<Mod, mpq_class> v_;
};

}  // namespace linecalc

#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lpa {

/// The coefficient field, identified by its characteristic: 0 for the
/// rationals, p for the prime field of order p.
class FieldSpec {
 public:
  FieldSpec() = default;
  /// Throws std::invalid_argument unless `characteristic` is 0 or a prime
  /// below 2^31.
  explicit FieldSpec(std::uint32_t characteristic);

  static FieldSpec rationals() { return FieldSpec(); }

  std::uint32_t characteristic() const { return p_; }
  bool is_rational() const { return p_ == 0; }
  bool has_char_two() const { return p_ == 2; }

  friend bool operator==(FieldSpec, FieldSpec) = default;

 private:
  std::uint32_t p_ = 0;
};

std::string to_string(FieldSpec f);

class ScalarError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact field element. Rationals are kept in lowest terms with a positive
/// denominator; residues are kept in [0, p).
class Scalar {
 public:
  /// Zero of the rationals.
  Scalar() = default;
  Scalar(FieldSpec field, long n);
  Scalar(FieldSpec field, const mpz_class& n);
  /// num/den; throws ScalarError when den is zero in the field.
  Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den);

  static Scalar zero(FieldSpec f) { return Scalar(f, 0L); }
  static Scalar one(FieldSpec f) { return Scalar(f, 1L); }

  /// Parses `integer` or `integer/positive-integer`.
  static Scalar parse(FieldSpec field, std::string_view literal);

  FieldSpec field() const { return field_; }
  bool is_zero() const;
  bool is_one() const;

  /// Throws ScalarError on zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o) { return *this *= o.inverse(); }

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// True for rationals below zero; residues are never negative.
  bool is_negative() const;

  /// `3`, `-1/2`; residues print as their representative in [0, p).
  std::string to_string() const;

  const mpq_class& rational() const { return q_; }
  std::uint64_t residue() const { return r_; }

 private:
  void check_same_field(const Scalar& o) const;

  FieldSpec field_;
  mpq_class q_;
  std::uint64_t r_ = 0;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

/// The canonical ring map from the integers.
inline Scalar from_integer(FieldSpec f, long n) { return Scalar(f, n); }

}  // namespace lpa

#include "lpa/scalar.hpp"

#include <cctype>
#include <ostream>

namespace lpa {

namespace {

bool is_prime(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::uint64_t reduce(const mpz_class& n, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), n.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t pow_mod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

}  // namespace

FieldSpec::FieldSpec(std::uint32_t characteristic) : p_(characteristic) {
  if (characteristic != 0 && (characteristic >= (1u << 31) || !is_prime(characteristic)))
    throw std::invalid_argument("characteristic must be 0 or a prime, got " +
                                std::to_string(characteristic));
}

std::string to_string(FieldSpec f) {
  return f.is_rational() ? "Q" : "GF(" + std::to_string(f.characteristic()) + ")";
}

Scalar::Scalar(FieldSpec field, long n) : field_(field) {
  if (field_.is_rational())
    q_ = n;
  else
    r_ = reduce(mpz_class(n), field_.characteristic());
}

Scalar::Scalar(FieldSpec field, const mpz_class& n) : field_(field) {
  if (field_.is_rational())
    q_ = n;
  else
    r_ = reduce(n, field_.characteristic());
}

Scalar::Scalar(FieldSpec field, const mpz_class& num, const mpz_class& den) : field_(field) {
  if (field_.is_rational()) {
    if (den == 0) throw ScalarError("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  } else {
    auto d = reduce(den, field_.characteristic());
    if (d == 0)
      throw ScalarError("denominator " + den.get_str() + " is not invertible in " +
                        lpa::to_string(field_));
    *this = Scalar(field_, num) * Scalar(field_, den).inverse();
  }
}

Scalar Scalar::parse(FieldSpec field, std::string_view literal) {
  auto digits = [](std::string_view s) {
    return !s.empty() &&
           std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  std::string_view num = literal;
  std::string_view den;
  if (auto slash = literal.find('/'); slash != std::string_view::npos) {
    num = literal.substr(0, slash);
    den = literal.substr(slash + 1);
    if (!digits(den)) throw ScalarError("malformed denominator in `" + std::string(literal) + "`");
  }
  std::string_view mag = num;
  if (!mag.empty() && (mag[0] == '-' || mag[0] == '+')) mag.remove_prefix(1);
  if (!digits(mag)) throw ScalarError("malformed scalar `" + std::string(literal) + "`");
  mpz_class n(std::string(num[0] == '+' ? num.substr(1) : num));
  if (den.empty()) return Scalar(field, n);
  mpz_class d{std::string(den)};
  if (d == 0) throw ScalarError("zero denominator in `" + std::string(literal) + "`");
  return Scalar(field, n, d);
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_ == 0 : r_ == 0; }
bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }
bool Scalar::is_negative() const { return field_.is_rational() && sgn(q_) < 0; }

void Scalar::check_same_field(const Scalar& o) const {
  if (!(field_ == o.field_)) throw std::invalid_argument("scalars over different fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw ScalarError("inversion of zero");
  Scalar out = *this;
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    out.r_ = pow_mod(r_, field_.characteristic() - 2, field_.characteristic());
  }
  return out;
}

Scalar Scalar::operator-() const {
  Scalar out = *this;
  if (field_.is_rational())
    out.q_ = -q_;
  else if (r_ != 0)
    out.r_ = field_.characteristic() - r_;
  return out;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ += o.q_;
  else
    r_ = (r_ + o.r_) % field_.characteristic();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational())
    q_ *= o.q_;
  else
    r_ = r_ * o.r_ % field_.characteristic();
  return *this;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (!(a.field_ == b.field_)) return false;
  return a.field_.is_rational() ? a.q_ == b.q_ : a.r_ == b.r_;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.get_str() : std::to_string(r_);
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace lpa

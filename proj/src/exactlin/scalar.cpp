#include "leibniz/scalar.hpp"

#include <cctype>

#include "leibniz/error.hpp"

namespace leibniz {

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mulmod(result, base, p);
    base = mulmod(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t reduce(const Rational& value, std::uint64_t p) {
  Integer modulus(p);
  Integer num = boost::multiprecision::numerator(value) % modulus;
  if (num < 0) num += modulus;
  Integer den = boost::multiprecision::denominator(value) % modulus;
  if (den == 0) {
    throw Error(ErrorCode::InvalidInput, "denominator vanishes modulo " + std::to_string(p));
  }
  auto n = num.convert_to<std::uint64_t>();
  auto d = den.convert_to<std::uint64_t>();
  return mulmod(n, powmod(d, p - 2, p), p);
}

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

}  // namespace

Field Field::prime(std::uint64_t p) {
  if (!is_prime(p)) {
    throw Error(ErrorCode::InvalidInput, "GF(p) needs a prime p, got " + std::to_string(p));
  }
  return Field(p);
}

std::string Field::name() const {
  return is_rational() ? std::string("Q") : "GF(" + std::to_string(p_) + ")";
}

Scalar::Scalar(Field field, long long value) : Scalar(field, Rational(value)) {}

Scalar::Scalar(Field field, const Rational& value) : field_(field) {
  if (field.is_rational()) {
    q_ = value;
  } else {
    r_ = reduce(value, field.characteristic());
  }
}

Scalar Scalar::parse(Field field, std::string_view text) {
  auto bad = [&] { return Error(ErrorCode::ParseError, "bad scalar '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) {
    std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (s.size() == start) throw bad();
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) throw bad();
    }
    std::string digits(s[0] == '+' ? s.substr(1) : s);
    return Integer(digits);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Scalar(field, Rational(parse_int(text)));
  Integer num = parse_int(text.substr(0, slash));
  std::string_view den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+')) throw bad();
  Integer den = parse_int(den_text);
  if (den == 0) throw bad();
  return Scalar(field, Rational(num, den));
}

bool Scalar::is_zero() const { return field_.is_rational() ? q_.is_zero() : r_ == 0; }

bool Scalar::is_one() const { return field_.is_rational() ? q_ == 1 : r_ == 1; }

void Scalar::require_same_field(const Scalar& rhs) const {
  if (field_ != rhs.field_) {
    throw Error(ErrorCode::FieldMismatch, field_.name() + " vs " + rhs.field_.name());
  }
}

Scalar& Scalar::operator+=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ += rhs.q_;
  } else {
    std::uint64_t p = field_.characteristic();
    r_ = (r_ >= p - rhs.r_) ? r_ - (p - rhs.r_) : r_ + rhs.r_;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ -= rhs.q_;
  } else {
    std::uint64_t p = field_.characteristic();
    r_ = (r_ >= rhs.r_) ? r_ - rhs.r_ : r_ + (p - rhs.r_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& rhs) {
  require_same_field(rhs);
  if (field_.is_rational()) {
    q_ *= rhs.q_;
  } else {
    r_ = mulmod(r_, rhs.r_, field_.characteristic());
  }
  return *this;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
  Scalar out = *this;
  out += rhs;
  return out;
}

Scalar Scalar::operator-(const Scalar& rhs) const {
  Scalar out = *this;
  out -= rhs;
  return out;
}

Scalar Scalar::operator*(const Scalar& rhs) const {
  Scalar out = *this;
  out *= rhs;
  return out;
}

Scalar Scalar::operator/(const Scalar& rhs) const {
  require_same_field(rhs);
  return *this * rhs.inverse();
}

Scalar Scalar::operator-() const {
  Scalar out(field_);
  out -= *this;
  return out;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::InvalidInput, "division by zero");
  Scalar out(field_);
  if (field_.is_rational()) {
    out.q_ = 1 / q_;
  } else {
    std::uint64_t p = field_.characteristic();
    out.r_ = powmod(r_, p - 2, p);
  }
  return out;
}

std::string Scalar::to_string() const {
  return field_.is_rational() ? q_.str() : std::to_string(r_);
}

Rational Scalar::to_rational() const {
  return field_.is_rational() ? q_ : Rational(r_);
}

bool Scalar::operator==(const Scalar& rhs) const {
  if (field_ != rhs.field_) return false;
  return field_.is_rational() ? q_ == rhs.q_ : r_ == rhs.r_;
}

Vector zero_vector(Field field, std::size_t n) { return Vector(n, Scalar(field)); }

Vector unit_vector(Field field, std::size_t n, std::size_t i) {
  Vector v = zero_vector(field, n);
  v.at(i) = Scalar(field, 1);
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v) {
    if (!x.is_zero()) return false;
  }
  return true;
}

Vector add(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "vector add");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Vector sub(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "vector sub");
  Vector out = a;
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Vector scale(const Scalar& c, const Vector& v) {
  Vector out = v;
  for (auto& x : out) x = c * x;
  return out;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

}  // namespace leibniz

#include "nilalg/scalar.hpp"

#include <algorithm>
#include <limits>

namespace nilalg {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::uint64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

FieldSpec::FieldSpec(std::uint64_t characteristic) {
  if (characteristic != 0 &&
      (characteristic > std::numeric_limits<std::uint32_t>::max() || !is_prime(characteristic)))
    throw Error("field characteristic " + std::to_string(characteristic) + " is neither 0 nor a prime");
  characteristic_ = static_cast<std::uint32_t>(characteristic);
}

std::ostream& operator<<(std::ostream& os, FieldSpec f) {
  if (f.is_rational()) return os << "QQ";
  return os << "GF(" << f.characteristic() << ")";
}

namespace {

std::uint32_t residue_of(const mpz_class& v, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t mod_pow(std::uint64_t b, std::uint64_t e, std::uint32_t p) {
  std::uint64_t r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

}  // namespace

Scalar::Scalar(FieldSpec field) : field_(field) {
  if (field.is_rational())
    value_ = mpq_class(0);
  else
    value_ = std::uint32_t{0};
}

Scalar::Scalar(FieldSpec field, long value) : Scalar(field, mpz_class(value)) {}

Scalar::Scalar(FieldSpec field, const mpz_class& value) : field_(field) {
  if (field.is_rational())
    value_ = mpq_class(value);
  else
    value_ = residue_of(value, field.characteristic());
}

Scalar::Scalar(FieldSpec field, const mpq_class& value) : field_(field) {
  if (field.is_rational()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = std::move(v);
    return;
  }
  const std::uint32_t p = field.characteristic();
  const std::uint32_t den = residue_of(value.get_den(), p);
  if (den == 0) throw DivisionByZero();
  const std::uint64_t num = residue_of(value.get_num(), p);
  value_ = static_cast<std::uint32_t>(num * mod_pow(den, p - 2, p) % p);
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<std::uint32_t>(&value_)) return *r == 1;
  return std::get<mpq_class>(value_) == 1;
}

const mpq_class& Scalar::rational() const {
  if (!field_.is_rational()) throw Error("scalar is not rational");
  return std::get<mpq_class>(value_);
}

std::uint32_t Scalar::residue() const {
  if (field_.is_rational()) throw Error("scalar is not a residue");
  return std::get<std::uint32_t>(value_);
}

void Scalar::check_same_field(const Scalar& o) const {
  if (field_ != o.field_) throw FieldMismatch();
}

Scalar Scalar::operator-() const {
  Scalar r(field_);
  if (field_.is_rational()) {
    r.value_ = mpq_class(-std::get<mpq_class>(value_));
  } else {
    const std::uint32_t v = std::get<std::uint32_t>(value_);
    r.value_ = v == 0 ? 0u : field_.characteristic() - v;
  }
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw DivisionByZero();
  Scalar r(field_);
  if (field_.is_rational()) {
    r.value_ = mpq_class(1 / std::get<mpq_class>(value_));
  } else {
    const std::uint32_t p = field_.characteristic();
    r.value_ = mod_pow(std::get<std::uint32_t>(value_), p - 2, p);
  }
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} + std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(o.value_);
  } else {
    const std::uint64_t s = std::uint64_t{std::get<std::uint32_t>(value_)} * std::get<std::uint32_t>(o.value_);
    value_ = static_cast<std::uint32_t>(s % field_.characteristic());
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  check_same_field(a);
  check_same_field(b);
  if (field_.is_rational()) {
    std::get<mpq_class>(value_) += std::get<mpq_class>(a.value_) * std::get<mpq_class>(b.value_);
  } else {
    const std::uint64_t p = field_.characteristic();
    const std::uint64_t prod = std::uint64_t{std::get<std::uint32_t>(a.value_)} * std::get<std::uint32_t>(b.value_) % p;
    value_ = static_cast<std::uint32_t>((prod + std::get<std::uint32_t>(value_)) % p);
  }
}

bool operator==(const Scalar& a, const Scalar& b) {
  return a.field_ == b.field_ && a.value_ == b.value_;
}

std::string Scalar::to_string() const {
  if (field_.is_rational()) return std::get<mpq_class>(value_).get_str();
  return std::to_string(std::get<std::uint32_t>(value_));
}

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op) {
  switch (op) {
    case ArithOp::add:
      return a + b;
    case ArithOp::sub:
      return a - b;
    case ArithOp::mul:
      return a * b;
    case ArithOp::div:
      return a / b;
  }
  throw Error("unknown arithmetic operation");
}

std::vector<mpz_class> integer_normalize(std::span<const mpq_class> coeffs) {
  mpz_class denominator_lcm = 1;
  bool any_nonzero = false;
  for (const mpq_class& c : coeffs) {
    if (sgn(c) == 0) continue;
    any_nonzero = true;
    mpz_lcm(denominator_lcm.get_mpz_t(), denominator_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  if (!any_nonzero) throw Error("cannot normalize an all-zero coefficient vector");

  std::vector<mpz_class> out;
  out.reserve(coeffs.size());
  mpz_class content = 0;
  for (const mpq_class& c : coeffs) {
    mpz_class v = c.get_num() * (denominator_lcm / c.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
    out.push_back(std::move(v));
  }
  const auto first = std::find_if(out.begin(), out.end(), [](const mpz_class& v) { return sgn(v) != 0; });
  if (sgn(*first) < 0) content = -content;
  for (mpz_class& v : out) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), content.get_mpz_t());
  return out;
}

std::vector<Scalar> reduce_mod(std::span<const mpz_class> coeffs, std::uint64_t p) {
  if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
  const FieldSpec field(p);
  std::vector<Scalar> out;
  out.reserve(coeffs.size());
  for (const mpz_class& c : coeffs) out.emplace_back(field, c);
  return out;
}

}  // namespace nilalg

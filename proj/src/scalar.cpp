#include "torsorkit/scalar.hpp"

#include <cctype>
#include <ostream>

#include "torsorkit/error.hpp"

namespace torsorkit {

namespace {

std::uint32_t reduce(long value, std::uint32_t p) {
  long r = value % static_cast<long>(p);
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r);
}

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = result * base % p;
    base = base * base % p;
    exp >>= 1U;
  }
  return static_cast<std::uint32_t>(result);
}

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

FieldSpec FieldSpec::prime(std::uint64_t p) {
  if (p >= (1ULL << 31U) || !is_prime(p))
    throw Error(Errc::ParseError, "field modulus " + std::to_string(p) +
                                      " is not a supported prime");
  FieldSpec f;
  f.kind_ = Kind::PrimeField;
  f.p_ = static_cast<std::uint32_t>(p);
  return f;
}

FieldSpec FieldSpec::parse(std::string_view text) {
  if (text == "Q" || text == "QQ" || text == "rationals") return rationals();
  std::string_view digits = text;
  if (digits.starts_with("GF"))
    digits.remove_prefix(2);
  else if (digits.starts_with("F"))
    digits.remove_prefix(1);
  if (!all_digits(digits) || digits.size() > 10)
    throw Error(Errc::ParseError, "unrecognised field '" + std::string(text) + "'");
  return prime(std::stoull(std::string(digits)));
}

std::string FieldSpec::to_string() const {
  return is_rationals() ? "Q" : "F" + std::to_string(p_);
}

Scalar::Scalar(const FieldSpec& field, long value) {
  if (field.is_rationals())
    value_ = mpq_class(value);
  else
    value_ = Residue{reduce(value, field.modulus()), field.modulus()};
}

Scalar::Scalar(const FieldSpec& field, const mpq_class& value) {
  if (field.is_rationals()) {
    mpq_class v = value;
    v.canonicalize();
    value_ = v;
    return;
  }
  const std::uint32_t p = field.modulus();
  mpz_class num = value.get_num() % p;
  mpz_class den = value.get_den() % p;
  if (den == 0) throw Error(Errc::DivisionByZero, "denominator vanishes mod p");
  if (num < 0) num += p;
  if (den < 0) den += p;
  const auto n = static_cast<std::uint32_t>(num.get_ui());
  const auto d = static_cast<std::uint32_t>(den.get_ui());
  value_ = Residue{static_cast<std::uint32_t>(
                       static_cast<std::uint64_t>(n) * pow_mod(d, p - 2, p) % p),
                   p};
}

Scalar Scalar::parse(const FieldSpec& field, std::string_view text) {
  std::string_view body = text;
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.front())))
    body.remove_prefix(1);
  while (!body.empty() && std::isspace(static_cast<unsigned char>(body.back())))
    body.remove_suffix(1);
  const bool negative = !body.empty() && body.front() == '-';
  if (negative || (!body.empty() && body.front() == '+')) body.remove_prefix(1);
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(Errc::ParseError, "malformed scalar '" + std::string(text) + "'");
  mpz_class n{std::string(num)};
  mpz_class d{std::string(den)};
  if (d == 0)
    throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  if (!field.is_rationals() && d % field.modulus() == 0)
    throw Error(Errc::ParseError, "denominator of '" + std::string(text) +
                                      "' vanishes in " + field.to_string());
  return Scalar(field, mpq_class(n, d));
}

FieldSpec Scalar::field() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return FieldSpec::checked_prime(r->p);
  return FieldSpec::rationals();
}

bool Scalar::is_zero() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 0;
  return sgn(std::get<mpq_class>(value_)) == 0;
}

bool Scalar::is_one() const noexcept {
  if (const auto* r = std::get_if<Residue>(&value_)) return r->value == 1;
  return std::get<mpq_class>(value_) == 1;
}

void Scalar::check_same(const Scalar& other) const {
  if (value_.index() != other.value_.index())
    throw Error(Errc::ModulusMismatch, "mixing rational and prime-field scalars");
  if (const auto* r = std::get_if<Residue>(&value_))
    if (r->p != std::get<Residue>(other.value_).p)
      throw Error(Errc::ModulusMismatch, "mixing different prime fields");
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero");
  if (const auto* r = std::get_if<Residue>(&value_))
    return Scalar(Residue{pow_mod(r->value, r->p - 2, r->p), r->p});
  mpq_class inv = 1 / std::get<mpq_class>(value_);
  Scalar s;
  s.value_ = inv;
  return s;
}

Scalar Scalar::pow(long exponent) const {
  Scalar base = exponent < 0 ? inverse() : *this;
  unsigned long e = exponent < 0 ? static_cast<unsigned long>(-exponent)
                                 : static_cast<unsigned long>(exponent);
  Scalar result = Scalar::one(field());
  while (e > 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1UL;
  }
  return result;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  check_same(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    std::uint64_t s = static_cast<std::uint64_t>(r->value) +
                      std::get<Residue>(other.value_).value;
    if (s >= r->p) s -= r->p;
    r->value = static_cast<std::uint32_t>(s);
  } else {
    std::get<mpq_class>(value_) += std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& other) { return *this += -other; }

Scalar& Scalar::operator*=(const Scalar& other) {
  check_same(other);
  if (auto* r = std::get_if<Residue>(&value_)) {
    r->value = static_cast<std::uint32_t>(
        static_cast<std::uint64_t>(r->value) * std::get<Residue>(other.value_).value %
        r->p);
  } else {
    std::get<mpq_class>(value_) *= std::get<mpq_class>(other.value_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& other) { return *this *= other.inverse(); }

void Scalar::add_product(const Scalar& a, const Scalar& b) {
  if (auto* r = std::get_if<Residue>(&value_)) {
    a.check_same(b);
    check_same(a);
    const std::uint64_t prod = static_cast<std::uint64_t>(std::get<Residue>(a.value_).value) *
                               std::get<Residue>(b.value_).value % r->p;
    std::uint64_t s = r->value + prod;
    if (s >= r->p) s -= r->p;
    r->value = static_cast<std::uint32_t>(s);
    return;
  }
  *this += a * b;
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (auto* r = std::get_if<Residue>(&s.value_)) {
    if (r->value != 0) r->value = r->p - r->value;
  } else {
    mpq_class& q = std::get<mpq_class>(s.value_);
    q = -q;
  }
  return s;
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.value_.index() != b.value_.index()) return false;
  if (const auto* r = std::get_if<Scalar::Residue>(&a.value_))
    return *r == std::get<Scalar::Residue>(b.value_);
  return std::get<mpq_class>(a.value_) == std::get<mpq_class>(b.value_);
}

std::string Scalar::to_string() const {
  if (const auto* r = std::get_if<Residue>(&value_)) return std::to_string(r->value);
  return std::get<mpq_class>(value_).get_str();
}

const mpq_class& Scalar::rational() const { return std::get<mpq_class>(value_); }

std::uint32_t Scalar::residue() const { return std::get<Residue>(value_).value; }

std::ostream& operator<<(std::ostream& os, const Scalar& s) { return os << s.to_string(); }

}  // namespace torsorkit

#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace torsorkit {

/// Ground field of a presentation: the rationals or a prime field F_p.
class FieldSpec {
 public:
  enum class Kind { Rationals, PrimeField };

  static FieldSpec rationals() noexcept { return FieldSpec(); }
  /// Throws ParseError when p is not a prime in [2, 2^31).
  static FieldSpec prime(std::uint64_t p);
  /// Accepts "Q", "QQ", "F<p>", "GF<p>" or a bare prime.
  static FieldSpec parse(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_rationals() const noexcept { return kind_ == Kind::Rationals; }
  std::uint32_t modulus() const noexcept { return p_; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const noexcept { return p_; }

  std::string to_string() const;

  friend bool operator==(const FieldSpec&, const FieldSpec&) = default;

 private:
  friend class Scalar;
  FieldSpec() = default;
  static FieldSpec checked_prime(std::uint32_t p) noexcept {
    FieldSpec f;
    f.kind_ = Kind::PrimeField;
    f.p_ = p;
    return f;
  }

  Kind kind_ = Kind::Rationals;
  std::uint32_t p_ = 0;
};

bool is_prime(std::uint64_t n) noexcept;

/// Exact element of Q (always in lowest terms) or F_p (residue in [0, p)).
class Scalar {
 public:
  Scalar() : Scalar(FieldSpec::rationals(), 0) {}
  Scalar(const FieldSpec& field, long value);
  Scalar(const FieldSpec& field, const mpq_class& value);

  static Scalar zero(const FieldSpec& field) { return Scalar(field, 0); }
  static Scalar one(const FieldSpec& field) { return Scalar(field, 1); }
  /// Parses "a", "-a" or "a/b". Throws ParseError on malformed text or b = 0.
  static Scalar parse(const FieldSpec& field, std::string_view text);

  FieldSpec field() const;
  bool is_zero() const noexcept;
  bool is_one() const noexcept;

  /// Throws DivisionByZero on zero.
  Scalar inverse() const;
  Scalar pow(long exponent) const;

  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);
  /// this += a * b without a temporary on the prime-field path.
  void add_product(const Scalar& a, const Scalar& b);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  Scalar operator-() const;

  friend bool operator==(const Scalar& a, const Scalar& b);

  /// Canonical text: "a/b" or "a" over Q, "r" over F_p.
  std::string to_string() const;

  /// Only meaningful over Q.
  const mpq_class& rational() const;
  /// Only meaningful over F_p.
  std::uint32_t residue() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t p;
    friend bool operator==(const Residue&, const Residue&) = default;
  };
  explicit Scalar(Residue r) : value_(r) {}
  void check_same(const Scalar& other) const;

  std::variant<mpq_class, Residue> value_;
};

std::ostream& operator<<(std::ostream& os, const Scalar& s);

}  // namespace torsorkit

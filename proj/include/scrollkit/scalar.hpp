#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace scrollkit {

class Rng;
class Scalar;

/// The active coefficient field: the rationals, or Z/p for an odd prime p < 2^63.
class Field {
 public:
  static Field rationals() { return Field(0); }
  /// Throws kInvalidArgument unless p is an odd prime below 2^63.
  static Field prime(std::uint64_t p);
  /// Accepts "q" or "fp:P".
  static Field parse(std::string_view tag);

  static constexpr std::uint64_t kDefaultPrime = 10007;

  bool is_rational() const { return modulus_ == 0; }
  std::uint64_t modulus() const { return modulus_; }
  std::string tag() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t v) const;
  Scalar from_ratio(std::int64_t num, std::int64_t den) const;
  /// Parses the serialized form produced by Scalar::to_string.
  Scalar parse_scalar(std::string_view text) const;

  /// Over Z/p: uniform residue. Over Q: integer in [-kRationalSampleBound, kRationalSampleBound].
  Scalar random(Rng& rng) const;
  Scalar random_nonzero(Rng& rng) const;

  static constexpr std::int64_t kRationalSampleBound = 1000;

  friend bool operator==(const Field&, const Field&) = default;

 private:
  friend class Scalar;
  explicit Field(std::uint64_t modulus) : modulus_(modulus) {}
  std::uint64_t modulus_;
};

/// Exact field element. Rationals are kept canonical by GMP (lowest terms,
/// positive denominator); residues are kept in [0, p).
class Scalar {
 public:
  explicit Scalar(mpq_class q);
  Scalar(std::uint64_t residue, std::uint64_t modulus);

  Field field() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const;
  std::uint64_t residue() const;

  Scalar inverse() const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  Scalar pow(unsigned e) const;

  /// "num" or "num/den" over Q; the canonical residue over Z/p.
  std::string to_string() const;

 private:
  struct Residue {
    std::uint64_t value;
    std::uint64_t modulus;
  };
  void check_same_field(const Scalar& o) const;

  std::variant<mpq_class, Residue> value_;
};

namespace detail {
std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m);
bool is_prime_u64(std::uint64_t n);
}  // namespace detail

}  // namespace scrollkit

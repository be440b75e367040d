#include "scrollkit/scalar.hpp"

#include <charconv>

#include "scrollkit/error.hpp"
#include "scrollkit/rng.hpp"

namespace scrollkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kFieldMismatch: return "FIELD_MISMATCH";
    case ErrorCode::kRemainder: return "REMAINDER";
    case ErrorCode::kZeroDivisor: return "ZERO_DIVISOR";
    case ErrorCode::kBothZero: return "BOTH_ZERO";
    case ErrorCode::kInvalidArgument: return "INVALID_ARGUMENT";
    case ErrorCode::kDegenerate: return "DEGENERATE";
    case ErrorCode::kNotThroughFrame: return "NOT_THROUGH_FRAME";
    case ErrorCode::kZeroQuadric: return "ZERO_QUADRIC";
    case ErrorCode::kInternal: return "INTERNAL";
    case ErrorCode::kCenterNotOnCurve: return "CENTER_NOT_ON_CURVE";
    case ErrorCode::kDependentConditions: return "DEPENDENT_CONDITIONS";
    case ErrorCode::kEmptyFamily: return "EMPTY_FAMILY";
    case ErrorCode::kNoCoprimeWitness: return "NO_COPRIME_WITNESS";
    case ErrorCode::kInvalidTrials: return "INVALID_TRIALS";
    case ErrorCode::kFieldTooSmall: return "FIELD_TOO_SMALL";
    case ErrorCode::kPrecondition: return "PRECONDITION";
  }
  return "UNKNOWN";
}

namespace detail {

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e > 0) {
    if (e & 1) r = mul_mod(r, a, m);
    a = mul_mod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic Miller-Rabin for 64-bit inputs.
bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
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

}  // namespace detail

// ---------------------------------------------------------------- Field

Field Field::prime(std::uint64_t p) {
  if (p < 3 || p >= (1ULL << 63) || !detail::is_prime_u64(p)) {
    throw Error(ErrorCode::kInvalidArgument, "modulus " + std::to_string(p) + " is not an odd prime below 2^63");
  }
  return Field(p);
}

Field Field::parse(std::string_view tag) {
  if (tag == "q" || tag == "Q") return rationals();
  if (tag.starts_with("fp:")) {
    std::uint64_t p = 0;
    auto body = tag.substr(3);
    auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), p);
    if (ec != std::errc() || ptr != body.data() + body.size()) {
      throw Error(ErrorCode::kInvalidArgument, "bad field tag '" + std::string(tag) + "'");
    }
    return prime(p);
  }
  throw Error(ErrorCode::kInvalidArgument, "bad field tag '" + std::string(tag) + "' (expected q or fp:PRIME)");
}

std::string Field::tag() const { return is_rational() ? "q" : "fp:" + std::to_string(modulus_); }

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(std::int64_t v) const {
  if (is_rational()) return Scalar(mpq_class(mpz_class(static_cast<long>(v))));
  std::int64_t m = static_cast<std::int64_t>(modulus_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return Scalar(static_cast<std::uint64_t>(r), modulus_);
}

Scalar Field::from_ratio(std::int64_t num, std::int64_t den) const {
  if (den == 0) throw Error(ErrorCode::kZeroDivisor, "zero denominator");
  return from_int(num) / from_int(den);
}

Scalar Field::parse_scalar(std::string_view text) const {
  std::string s(text);
  if (is_rational()) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw Error(ErrorCode::kInvalidArgument, "bad rational '" + s + "'");
    if (q.get_den() == 0) throw Error(ErrorCode::kZeroDivisor, "zero denominator in '" + s + "'");
    q.canonicalize();
    return Scalar(std::move(q));
  }
  mpz_class z;
  auto slash = s.find('/');
  if (slash != std::string::npos) {
    return parse_scalar(s.substr(0, slash)) / parse_scalar(s.substr(slash + 1));
  }
  if (z.set_str(s, 10) != 0) throw Error(ErrorCode::kInvalidArgument, "bad residue '" + s + "'");
  mpz_class m(std::to_string(modulus_));
  mpz_class r = z % m;
  if (r < 0) r += m;
  return Scalar(std::stoull(r.get_str()), modulus_);
}

Scalar Field::random(Rng& rng) const {
  if (is_rational()) return from_int(rng.between(-kRationalSampleBound, kRationalSampleBound));
  return Scalar(rng.below(modulus_), modulus_);
}

Scalar Field::random_nonzero(Rng& rng) const {
  for (;;) {
    Scalar s = random(rng);
    if (!s.is_zero()) return s;
  }
}

// ---------------------------------------------------------------- Scalar

Scalar::Scalar(mpq_class q) : value_(std::move(q)) {}

Scalar::Scalar(std::uint64_t residue, std::uint64_t modulus) : value_(Residue{residue % modulus, modulus}) {}

Field Scalar::field() const {
  if (is_rational()) return Field::rationals();
  return Field(std::get<Residue>(value_).modulus);
}

bool Scalar::is_zero() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

const mpq_class& Scalar::rational() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return *q;
  throw Error(ErrorCode::kFieldMismatch, "rational value requested from a residue");
}

std::uint64_t Scalar::residue() const {
  if (auto* r = std::get_if<Residue>(&value_)) return r->value;
  throw Error(ErrorCode::kFieldMismatch, "residue requested from a rational");
}

void Scalar::check_same_field(const Scalar& o) const {
  if (value_.index() != o.value_.index()) {
    throw Error(ErrorCode::kFieldMismatch, "mixing rational and modular scalars");
  }
  if (auto* r = std::get_if<Residue>(&value_)) {
    if (r->modulus != std::get<Residue>(o.value_).modulus) {
      throw Error(ErrorCode::kFieldMismatch, "mixing residues of different moduli");
    }
  }
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kZeroDivisor, "inverse of zero");
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class r = 1 / *q;
    return Scalar(std::move(r));
  }
  const auto& r = std::get<Residue>(value_);
  return Scalar(detail::pow_mod(r.value, r.modulus - 2, r.modulus), r.modulus);
}

Scalar Scalar::operator-() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    mpq_class r = -*q;
    return Scalar(std::move(r));
  }
  const auto& r = std::get<Residue>(value_);
  return Scalar(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q += std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    std::uint64_t b = std::get<Residue>(o.value_).value;
    r.value = r.value >= r.modulus - b ? r.value - (r.modulus - b) : r.value + b;
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same_field(o);
  if (auto* q = std::get_if<mpq_class>(&value_)) {
    *q *= std::get<mpq_class>(o.value_);
  } else {
    auto& r = std::get<Residue>(value_);
    r.value = detail::mul_mod(r.value, std::get<Residue>(o.value_).value, r.modulus);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  check_same_field(o);
  return *this *= o.inverse();
}

bool operator==(const Scalar& a, const Scalar& b) {
  a.check_same_field(b);
  if (auto* q = std::get_if<mpq_class>(&a.value_)) return *q == std::get<mpq_class>(b.value_);
  return std::get<Scalar::Residue>(a.value_).value == std::get<Scalar::Residue>(b.value_).value;
}

Scalar Scalar::pow(unsigned e) const {
  Scalar result = field().one();
  Scalar base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Scalar::to_string() const {
  if (auto* q = std::get_if<mpq_class>(&value_)) return q->get_str(10);
  return std::to_string(std::get<Residue>(value_).value);
}

}  // namespace scrollkit

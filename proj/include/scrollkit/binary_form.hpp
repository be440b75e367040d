#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "scrollkit/error.hpp"
#include "scrollkit/scalar.hpp"

namespace scrollkit {

/// A point (s0 : s1) of the projective line, stored as a representative.
struct P1Point {
  Scalar s0;
  Scalar s1;

  static P1Point affine(const Scalar& x) { return {x, x.field().one()}; }
  static P1Point infinity(const Field& k) { return {k.one(), k.zero()}; }

  bool is_valid() const { return !(s0.is_zero() && s1.is_zero()); }
  /// s0/s1, or nullopt at (1:0).
  std::optional<Scalar> affine_value() const;
};

bool same_point(const P1Point& a, const P1Point& b);
/// s0 * b.s1 - s1 * b.s0; vanishes exactly when the points coincide.
Scalar cross(const P1Point& a, const P1Point& b);

/// Homogeneous form in (s0, s1). coeffs[j] multiplies s0^(degree-j) s1^j.
class BinaryForm {
 public:
  explicit BinaryForm(std::vector<Scalar> coeffs);

  static BinaryForm zero(const Field& k, int degree);
  static BinaryForm constant(const Scalar& c);
  static BinaryForm monomial(const Field& k, int degree, int j);
  /// a*s0 + b*s1
  static BinaryForm linear(const Scalar& a, const Scalar& b);
  /// The linear form vanishing at p: p.s1*s0 - p.s0*s1.
  static BinaryForm vanishing_at(const P1Point& p);
  static BinaryForm from_ints(const Field& k, const std::vector<long>& coeffs);

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& operator[](int j) const { return coeffs_[static_cast<std::size_t>(j)]; }
  std::span<const Scalar> coeffs() const { return coeffs_; }
  Field field() const { return coeffs_.front().field(); }

  bool is_zero() const;
  /// Largest v with s1^v dividing the form; degree+1 for the zero form.
  int s1_valuation() const;
  /// Largest v with s0^v dividing the form; degree+1 for the zero form.
  int s0_valuation() const;

  Scalar evaluate(const Scalar& s0, const Scalar& s1) const;
  Scalar evaluate(const P1Point& p) const { return evaluate(p.s0, p.s1); }

  BinaryForm operator-() const;
  BinaryForm& operator+=(const BinaryForm& o);
  BinaryForm& operator-=(const BinaryForm& o);
  friend BinaryForm operator+(BinaryForm a, const BinaryForm& b) { return a += b; }
  friend BinaryForm operator-(BinaryForm a, const BinaryForm& b) { return a -= b; }
  friend BinaryForm operator*(const BinaryForm& a, const BinaryForm& b);
  friend bool operator==(const BinaryForm& a, const BinaryForm& b);

  BinaryForm scaled(const Scalar& c) const;
  BinaryForm pow(int e) const;
  BinaryForm derivative_s0() const;
  BinaryForm derivative_s1() const;
  /// f(t0(s), t1(s)); t0, t1 must share a degree.
  BinaryForm compose(const BinaryForm& t0, const BinaryForm& t1) const;
  /// Divides by the first nonzero coefficient.
  BinaryForm monic() const;
  bool proportional_to(const BinaryForm& o) const;

  /// e.g. "s0^2 - 5*s0*s1 + 6*s1^2".
  std::string to_string() const;
  std::vector<std::string> serialize() const;

 private:
  std::vector<Scalar> coeffs_;
};

/// Carries the nonzero remainder f - g*q of a failed exact division.
class RemainderError : public Error {
 public:
  explicit RemainderError(BinaryForm remainder)
      : Error(ErrorCode::kRemainder, "division is not exact, remainder " + remainder.to_string()),
        remainder_(std::move(remainder)) {}
  const BinaryForm& remainder() const { return remainder_; }

 private:
  BinaryForm remainder_;
};

BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g);

/// q with f = g*q. Throws RemainderError, or kZeroDivisor when g = 0.
BinaryForm form_divide_exact(const BinaryForm& f, const BinaryForm& g);
std::optional<BinaryForm> try_divide_exact(const BinaryForm& f, const BinaryForm& g);

/// Monic gcd. Throws kBothZero when both inputs vanish.
BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g);
BinaryForm form_gcd(std::span<const BinaryForm> forms);

/// The zero of a nonzero linear form c0*s0 + c1*s1, i.e. (-c1 : c0).
P1Point root_of_linear(const BinaryForm& l);

/// Product of the linear forms vanishing at the given points.
BinaryForm product_vanishing_at(const Field& k, std::span<const P1Point> points);

}  // namespace scrollkit

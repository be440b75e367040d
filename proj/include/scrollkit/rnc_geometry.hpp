#pragma once

#include <optional>
#include <vector>

#include "scrollkit/binary_form.hpp"
#include "scrollkit/matrix.hpp"

namespace scrollkit {

class Rng;

/// n+2 points of P^n. Frame index n+1 is the "unit" point.
struct Frame {
  std::vector<Vector> points;

  int n() const { return static_cast<int>(points.size()) - 2; }
  Field field() const { return points.front().front().field(); }

  /// e_0, ..., e_n, (1:...:1).
  static Frame standard(const Field& k, int n);
  /// Uniformly random points, resampled until in linear general position.
  static Frame random(const Field& k, int n, Rng& rng);
};

/// The indices of an (n+1)-subset of rank < n+1, if there is one.
std::optional<std::vector<std::size_t>> general_position_violation(const Frame& f);

/// T with T P_j proportional to e_j (j <= n) and T P_{n+1} proportional to
/// (1:...:1). Scaled so the first nonzero entry is 1. Throws kDegenerate.
Matrix frame_transform(const Frame& f);

/// A rational curve t -> (X_0(t) : ... : X_m(t)), all X_i of one degree.
struct ParametrizedCurve {
  std::vector<BinaryForm> coords;

  int ambient() const { return static_cast<int>(coords.size()) - 1; }
  int degree() const { return coords.front().degree(); }
  Field field() const { return coords.front().field(); }

  Vector evaluate(const P1Point& s) const;
  /// Row i holds the coefficients of X_i.
  Matrix coefficient_matrix() const;
  /// Coordinates are linearly independent forms.
  bool nondegenerate() const;
  /// Reparametrize by s -> (m00 s0 + m01 s1 : m10 s0 + m11 s1).
  ParametrizedCurve reparametrized(const Matrix& m) const;
  /// x -> T x.
  ParametrizedCurve transformed(const Matrix& t) const;
};

/// Parameters of the frame points on a curve of P^n through the standard
/// frame, or nullopt if the curve misses one of them.
std::optional<std::vector<P1Point>> frame_parameters(const ParametrizedCurve& c);

/// The rational normal curve through the standard frame with nodes
/// (0, 1, a_2, ..., a_n): frame point j sits at (a_j : 1) and the unit point at (1:0).
class StandardRNC {
 public:
  /// Throws kInvalidArgument unless {0, 1, a_2, ..., a_n} are distinct and n >= 2.
  StandardRNC(const Field& k, std::vector<Scalar> params);

  static StandardRNC random(const Field& k, int n, Rng& rng);

  int n() const { return static_cast<int>(params_.size()) + 1; }
  const Field& field() const { return field_; }
  /// (a_2, ..., a_n)
  const std::vector<Scalar>& params() const { return params_; }
  /// (0, 1, a_2, ..., a_n)
  std::vector<Scalar> nodes() const;
  /// Parameter of frame point j, 0 <= j <= n+1.
  P1Point frame_parameter(int j) const;

  /// Coordinate j is prod_{i != j} (s0 - a_i s1).
  ParametrizedCurve curve() const;
  Vector evaluate(const P1Point& s) const;

  friend bool operator==(const StandardRNC& a, const StandardRNC& b) {
    return a.field_ == b.field_ && a.params_ == b.params_;
  }

 private:
  Field field_;
  std::vector<Scalar> params_;
};

/// Moebius map sending p0 -> (0:1), p1 -> (1:1), p_inf -> (1:0), as a 2x2 matrix
/// acting on (s0, s1).
Matrix standardizing_mobius(const P1Point& p0, const P1Point& p1, const P1Point& p_inf);
P1Point apply_mobius(const Matrix& m, const P1Point& s);

/// The standard curve with the same image as `c`, which must be a degree-n curve
/// of P^n through the standard frame. Throws kNotThroughFrame or kDegenerate.
StandardRNC standardize(const ParametrizedCurve& c);

/// q(x) = x^T G x with G symmetric.
class Quadric {
 public:
  explicit Quadric(Matrix gram);
  /// Off-diagonal monomial x_i x_j with coefficient c contributes c/2 to G_ij and G_ji.
  static Quadric from_monomials(const Field& k, int n, const std::vector<std::pair<std::pair<int, int>, Scalar>>& terms);

  int n() const { return static_cast<int>(gram_.rows()) - 1; }
  const Matrix& gram() const { return gram_; }
  Field field() const { return gram_.field(); }

  Scalar evaluate(std::span<const Scalar> x) const;
  BinaryForm compose(const ParametrizedCurve& c) const;
  std::size_t rank() const { return scrollkit::rank(gram_); }
  bool is_zero() const { return gram_.is_zero(); }

  /// Frame indices j with q(P_j) != 0, for the standard frame.
  std::vector<std::size_t> frame_violations() const;
  bool through_standard_frame() const { return frame_violations().empty(); }
  /// Frame indices j with G P_j = 0, i.e. frame points in Sing(Q).
  std::vector<std::size_t> singular_frame_points() const;

 private:
  Matrix gram_;
};

/// Random quadric of rank 3 or 4 through the standard frame, smooth at every
/// frame point.
Quadric random_quadric_through_frame(const Field& k, int n, int rank, Rng& rng);

/// p of degree n-2 with q(phi(s)) = s1 s0 (s0 - s1) prod_{i>=2} (s0 - a_i s1) p(s).
/// The curve lies on Q iff p = 0. Throws kZeroQuadric, kNotThroughFrame.
BinaryForm residual_polynomial(const Quadric& q, const StandardRNC& c);
/// The divisor s1 s0 (s0 - s1) prod (s0 - a_i s1) above.
BinaryForm frame_vanishing_form(const StandardRNC& c);

struct FinitenessCheck {
  /// Row r: coefficient r of p; column i: derivative in a_{i+2}.
  Matrix jacobian;
  std::size_t rank;
  /// rank < n-1: the sample says nothing about finiteness.
  bool non_generic;
};

/// Exact Jacobian of the coefficients of residual_polynomial in (a_2, ..., a_n).
FinitenessCheck rnc_finiteness_rank(const Quadric& q, const StandardRNC& c);

/// Projection of a curve through the standard frame of P^n from frame point j,
/// with the image frame made standard again. Throws kCenterNotOnCurve.
ParametrizedCurve project_from_frame_point(const ParametrizedCurve& c, int j);
StandardRNC project_from_frame_point(const StandardRNC& c, int j);

}  // namespace scrollkit

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "scrollkit/binary_form.hpp"
#include "scrollkit/matrix.hpp"
#include "scrollkit/rnc_geometry.hpp"
#include "scrollkit/scroll_families.hpp"

namespace scrollkit {

class Rng;

/// A point of F(a) in bihomogeneous coordinates (y_1..y_d ; t0, t1), where
/// (y, t) ~ (lambda mu^{-a_i} y_i, mu t).
struct ScrollPoint {
  Vector y;
  P1Point t;
};

/// Image of a scroll point under |M|: t0^{a_i-c} t1^c y_i, ordered by i then c.
Vector scroll_point_image(const std::vector<int>& a, const ScrollPoint& p);

/// s -> (y(s); t0(s), t1(s)) with deg t = k and deg y_i = n - k a_i.
class CurveInScroll {
 public:
  /// Validates degrees, gcd(t0, t1) = 1, the absence of base points, k <= d and
  /// n - k a_i >= 0. Throws kInvalidArgument.
  CurveInScroll(ScrollType scroll, BinaryForm t0, BinaryForm t1, std::vector<BinaryForm> ys);

  static CurveInScroll random(const ScrollType& scroll, int k, const Field& f, Rng& rng);

  const ScrollType& scroll() const { return scroll_; }
  int k() const { return t0_.degree(); }
  const BinaryForm& t0() const { return t0_; }
  const BinaryForm& t1() const { return t1_; }
  const std::vector<BinaryForm>& ys() const { return ys_; }
  Field field() const { return t0_.field(); }

  ScrollPoint at(const P1Point& s) const;

 private:
  ScrollType scroll_;
  BinaryForm t0_, t1_;
  std::vector<BinaryForm> ys_;
};

struct PushForward {
  ParametrizedCurve curve;
  std::size_t rank;
  /// rank < n+1: the image spans a proper subspace.
  bool degenerate;
};

PushForward push_forward(const CurveInScroll& c);

/// sum_i comp_i(t) y_i, a section of mL + M. `a` is kept in the given order
/// (the degeneration needs unsorted multi-indices); deg comp_i = a_i + m.
struct ScrollSection {
  std::vector<int> a;
  int m;
  std::vector<BinaryForm> comps;

  /// Validates component degrees. Throws kInvalidArgument.
  void validate() const;
  bool is_zero() const;
  /// Throws kInvalidArgument for the invalid point y = 0 or t = (0,0).
  Scalar evaluate(const ScrollPoint& p) const;
  /// Restriction to a curve: a form of degree k m + n.
  BinaryForm pull_back(const CurveInScroll& c) const;
  bool proportional_to(const ScrollSection& o) const;
  std::string to_string() const;
};

/// Monomial basis of |mL + M|, ordered by i then by the power of t1.
std::vector<ScrollSection> section_basis(const Field& k, const std::vector<int>& a, int m);
/// Basis of the sections of |mL + M| vanishing at all given points.
std::vector<ScrollSection> sections_through(const Field& k, const std::vector<int>& a, int m,
                                            const std::vector<ScrollPoint>& points);

/// n+2 random points of F(a) with pairwise distinct t-values; with
/// `repeat_t`, points 0 and 1 share their t-value instead.
std::vector<ScrollPoint> random_lifted_frame(const ScrollType& a, const Field& k, Rng& rng, bool repeat_t = false);

enum class UnisecantStatus { kUnique, kNone, kPositiveFamily };
std::string to_string(UnisecantStatus s);

struct UnisecantResult {
  UnisecantStatus status;
  std::optional<CurveInScroll> curve;
  /// Dimension of the kernel of the interpolation system; 1 means a single
  /// projective solution.
  std::size_t kernel_dim = 0;
  std::size_t equations = 0;
  std::size_t unknowns = 0;
  std::string reason;
};

/// The curve with t = identity whose y passes through the given points.
/// Throws kDependentConditions if the images in P^n are not in linear general
/// position.
UnisecantResult interpolate_unisecant(const ScrollType& a, const std::vector<ScrollPoint>& frame);

struct IncidenceTrial {
  std::size_t rank_orbit;      // rank [J | D]
  std::size_t rank_incidence;  // rank [J | T | D]
  std::size_t rank_torus;      // rank D
  int raw_image;               // rank [J|D] - rank D
  int measured_family;         // raw_image - 3
  int incidence_image;         // rank [J|T|D] - rank D
  int fiber;                   // measured_family + n + 2 - incidence_image
  std::optional<int> measured_fk;
  bool matches;
};

struct DimensionReport {
  std::string family;
  ScrollType scroll;
  int k;
  int predicted;
  std::optional<int> predicted_fk;
  int group_correction = 5;
  std::uint64_t seed;
  std::string field;
  std::vector<IncidenceTrial> trials;
  std::size_t matches = 0;
};

/// Rank experiment for the family of degree-k curves in F(a) through n+2
/// points; over the given field (the reference runs use Z/10007). Trial i uses
/// the stream fork(i) of `seed`. Throws kEmptyFamily, kInvalidTrials.
DimensionReport incidence_dimension_estimate(const ScrollType& a, int k, int trials, std::uint64_t seed,
                                             const Field& f);

/// y'_j = mult_j(t) * x_{source_j}: a map from F(source_a) to F(target_a).
struct ScrollEmbedding {
  std::vector<int> source_a;
  std::vector<int> target_a;
  std::vector<std::size_t> source;
  std::vector<BinaryForm> mult;

  /// deg mult_j = source_a[source_j] - target_a[j]. Throws kInvalidArgument.
  void validate() const;
  ScrollPoint apply(const ScrollPoint& p) const;
  /// The section restricted to the image, as a section on the source.
  ScrollSection pull_back(const ScrollSection& s) const;
};

struct Degeneration {
  std::vector<int> a;    // the original multi-index, in the given order
  std::size_t donor;     // entry lowered by one
  std::size_t recipient;
  std::vector<int> aux;  // a with a[donor]-1, then an appended 1
  int aux_n;             // n + 1
};

/// Defaults: donor is the first entry >= 1, recipient the last entry.
/// Throws kInvalidArgument if a[donor] = 0, donor = recipient or d < 2.
Degeneration make_degeneration(const std::vector<int>& a, std::optional<std::size_t> donor = std::nullopt,
                               std::optional<std::size_t> recipient = std::nullopt);

/// t0 y_{d+1} - lambda t1^{a_donor - 1} y_donor - t1^{a_recip} y_recip on the auxiliary scroll.
ScrollSection degeneration_member(const Degeneration& g, const Scalar& lambda);
/// F(a) -> aux: (.., t0 x_donor, .., t1^{a_donor-1} x_donor).
ScrollEmbedding degeneration_phi1(const Degeneration& g, const Field& k);
/// F(a'), a' = a with donor - 1 and recipient + 1 -> aux: (.., t0 x_recip, .., t1^{a_recip} x_recip).
ScrollEmbedding degeneration_phi2(const Degeneration& g, const Field& k);
/// t0 y_{d+1} - t1^{a_donor - 1} y_donor, which cuts out im(phi1).
ScrollSection degeneration_phi1_section(const Degeneration& g, const Field& k);

/// Whether y_donor -> lambda y_donor carries the lambda-member onto the
/// lambda = 1 member. Throws kInvalidArgument for lambda = 0.
bool degeneration_equivalence_check(const Degeneration& g, const Scalar& lambda);

}  // namespace scrollkit

#pragma once

#include <optional>
#include <string>
#include <vector>

namespace scrollkit {

/// Splitting type a = (a_1 <= ... <= a_d) of a minimal-degree scroll in P^n.
class ScrollType {
 public:
  /// Sorts `a` and validates sum(a) = n - d + 1, max(a) > 0, 1 <= d <= n - 1.
  /// Throws kInvalidArgument otherwise.
  ScrollType(int n, std::vector<int> a);

  int n() const { return n_; }
  int d() const { return static_cast<int>(a_.size()); }
  const std::vector<int>& a() const { return a_; }
  int degree() const { return n_ - d() + 1; }
  /// |a_i - a_j| <= 1 for all i, j.
  bool balanced() const;
  /// "(1,2)"
  std::string to_string() const;

  friend bool operator==(const ScrollType&, const ScrollType&) = default;

 private:
  int n_;
  std::vector<int> a_;
};

/// The unique balanced splitting type for (n, d).
ScrollType balanced_type(int n, int d);
/// All sorted multi-indices for (n, d), lexicographic.
std::vector<ScrollType> scroll_types(int n, int d);

int aut_dimension(const ScrollType& a);
int dim_all_scrolls(int n, int d);
int dim_stratum(const ScrollType& a);
int dim_rnc(int n);
int dim_rnc_through_frame(int n);
int dim_scrolls_through_frame(const ScrollType& a);

/// Rational curves in the scroll mapping k:1 onto the base P^1 and passing
/// through n+2 general points; nullopt is EMPTY.
std::optional<int> dim_curves_in_scroll(const ScrollType& a, int k);
/// Requires n even and d = n/2 (kPrecondition). nullopt is EMPTY.
std::optional<int> dim_scrolls_with_curve(const ScrollType& a, int k);
/// Free coefficients of (t0, t1, y_i) minus the group and frame corrections;
/// always equal to the closed form of dim_curves_in_scroll.
int curve_parameter_count(const ScrollType& a, int k);

int intersection_bound(int n);
int dim_binary_family(int n);
int gonality_bound(int arithmetic_genus);

enum class FamilyKind {
  kAllScrolls,
  kStratum,
  kRnc,
  kRncThroughFrame,
  kScrollsThroughFrame,
  kCurvesInScroll,
  kScrollsWithCurve,
  kBinaryThroughFrame,
};

struct FamilyDescriptor {
  FamilyKind kind;
  int n = 0;
  int d = 0;
  std::vector<int> a;
  int k = 0;
};

/// Dispatches to the closed forms above; checks that exactly the parameters
/// the kind needs are present. nullopt is EMPTY.
std::optional<int> family_dimension(const FamilyDescriptor& f);
std::string to_string(FamilyKind kind);

struct PerK {
  int k;
  std::optional<int> dim_curves;
  /// Only meaningful when n = 2d.
  bool scrolls_with_curve_applies = false;
  std::optional<int> dim_scrolls_with_curve;
};

struct StratumRow {
  ScrollType type;
  int aut_dim;
  int dim_all;
  int dim_stratum;
  int dim_through_frame;
  bool balanced;
  bool dense;
  std::vector<PerK> per_k;
};

/// One row per multi-index; k runs over 1..d.
std::vector<StratumRow> stratification_table(int n, int d);

}  // namespace scrollkit

#include "scrollkit/scroll_families.hpp"

#include <algorithm>
#include <numeric>

#include "scrollkit/error.hpp"

namespace scrollkit {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw Error(ErrorCode::kPrecondition, what);
}

void check_nd(int n, int d) {
  require(d >= 1 && d <= n - 1, "need 1 <= d <= n-1, got n=" + std::to_string(n) + " d=" + std::to_string(d));
}

void partitions(int remaining, int parts, int min_part, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (parts == 0) {
    if (remaining == 0) out.push_back(cur);
    return;
  }
  for (int v = min_part; v * parts <= remaining; ++v) {
    cur.push_back(v);
    partitions(remaining - v, parts - 1, v, cur, out);
    cur.pop_back();
  }
}

}  // namespace

ScrollType::ScrollType(int n, std::vector<int> a) : n_(n), a_(std::move(a)) {
  std::sort(a_.begin(), a_.end());
  const int d = static_cast<int>(a_.size());
  auto bad = [&](const std::string& why) {
    throw Error(ErrorCode::kInvalidArgument, "invalid scroll type " + to_string() + " in P^" + std::to_string(n_) + ": " + why);
  };
  if (d < 1 || d > n_ - 1) bad("need 1 <= d <= n-1");
  if (a_.front() < 0) bad("negative entry");
  if (a_.back() <= 0) bad("some a_i must be positive");
  if (std::accumulate(a_.begin(), a_.end(), 0) != n_ - d + 1) bad("entries must sum to n-d+1");
}

bool ScrollType::balanced() const { return a_.back() - a_.front() <= 1; }

std::string ScrollType::to_string() const {
  std::string s = "(";
  for (std::size_t i = 0; i < a_.size(); ++i) s += (i ? "," : "") + std::to_string(a_[i]);
  return s + ")";
}

ScrollType balanced_type(int n, int d) {
  check_nd(n, d);
  const int total = n - d + 1;
  std::vector<int> a(static_cast<std::size_t>(d), total / d);
  for (int i = 0; i < total % d; ++i) a[static_cast<std::size_t>(d - 1 - i)] += 1;
  return ScrollType(n, a);
}

std::vector<ScrollType> scroll_types(int n, int d) {
  check_nd(n, d);
  std::vector<std::vector<int>> parts;
  std::vector<int> cur;
  partitions(n - d + 1, d, 0, cur, parts);
  std::sort(parts.begin(), parts.end());
  std::vector<ScrollType> out;
  for (auto& p : parts) out.emplace_back(n, p);
  return out;
}

int aut_dimension(const ScrollType& a) {
  int s = 0;
  for (int ai : a.a())
    for (int aj : a.a()) s += std::max(0, ai - aj + 1);
  return s;
}

int dim_all_scrolls(int n, int d) {
  check_nd(n, d);
  return n * n + 2 * n - 2 - d * d;
}

int dim_stratum(const ScrollType& a) {
  return dim_all_scrolls(a.n(), a.d()) - (aut_dimension(a) - a.d() * a.d());
}

int dim_rnc(int n) {
  require(n >= 2, "rational normal curves need n >= 2");
  return n * n + 2 * n - 3;
}

int dim_rnc_through_frame(int n) {
  require(n >= 2, "rational normal curves need n >= 2");
  return n - 1;
}

int dim_scrolls_through_frame(const ScrollType& a) {
  const int n = a.n(), d = a.d();
  return (n + 2) * d - (d * d + 2) - (aut_dimension(a) - d * d);
}

std::optional<int> dim_curves_in_scroll(const ScrollType& a, int k) {
  require(k >= 1, "k must be positive");
  const int n = a.n(), d = a.d();
  if (k > d) return std::nullopt;
  for (int ai : a.a())
    if (n - k * ai < 0) return std::nullopt;
  return (d - 1) * (n + 3 - k) + (k - 1) * (2 * d - n);
}

std::optional<int> dim_scrolls_with_curve(const ScrollType& a, int k) {
  require(k >= 1, "k must be positive");
  const int n = a.n(), d = a.d();
  require(n % 2 == 0 && 2 * d == n, "needs n even and d = n/2, got " + a.to_string() + " in P^" + std::to_string(n));
  for (int ai : a.a())
    if (n - k * ai < 0) return std::nullopt;
  const int h = n / 2;
  return h * h + n - 2 - (k - 1) * (h - 1) - (aut_dimension(a) - h * h);
}

int curve_parameter_count(const ScrollType& a, int k) {
  require(k >= 1, "k must be positive");
  int s = 0;
  for (int ai : a.a()) s += a.n() - k * ai + 1;
  return s + 2 * (k + 1) - 5;
}

int intersection_bound(int n) {
  require(n >= 3, "needs n >= 3");
  return 2 * n - 3;
}

int dim_binary_family(int n) {
  require(n >= 3, "needs n >= 3");
  return 2 * n - 2;
}

int gonality_bound(int arithmetic_genus) {
  require(arithmetic_genus >= 2, "needs arithmetic genus >= 2");
  return (arithmetic_genus + 3) / 2;
}

std::string to_string(FamilyKind kind) {
  switch (kind) {
    case FamilyKind::kAllScrolls: return "ALL_SCROLLS";
    case FamilyKind::kStratum: return "STRATUM";
    case FamilyKind::kRnc: return "RNC";
    case FamilyKind::kRncThroughFrame: return "RNC_THROUGH_S";
    case FamilyKind::kScrollsThroughFrame: return "SCROLLS_THROUGH_S";
    case FamilyKind::kCurvesInScroll: return "CURVES_IN_SCROLL";
    case FamilyKind::kScrollsWithCurve: return "SCROLLS_WITH_CURVE";
    case FamilyKind::kBinaryThroughFrame: return "BINARY_THROUGH_S";
  }
  return "UNKNOWN";
}

std::optional<int> family_dimension(const FamilyDescriptor& f) {
  const bool wants_a = f.kind == FamilyKind::kStratum || f.kind == FamilyKind::kScrollsThroughFrame ||
                       f.kind == FamilyKind::kCurvesInScroll || f.kind == FamilyKind::kScrollsWithCurve;
  const bool wants_d = f.kind == FamilyKind::kAllScrolls;
  const bool wants_k = f.kind == FamilyKind::kCurvesInScroll || f.kind == FamilyKind::kScrollsWithCurve;
  auto mismatch = [&](const char* what) {
    throw Error(ErrorCode::kInvalidArgument, to_string(f.kind) + std::string(": ") + what);
  };
  if (wants_a != !f.a.empty()) mismatch(wants_a ? "needs a" : "does not take a");
  if (!wants_a && wants_d != (f.d != 0)) mismatch(wants_d ? "needs d" : "does not take d");
  if (wants_k != (f.k != 0)) mismatch(wants_k ? "needs k" : "does not take k");
  if (wants_a && f.d != 0 && f.d != static_cast<int>(f.a.size())) mismatch("d disagrees with a");

  switch (f.kind) {
    case FamilyKind::kAllScrolls: return dim_all_scrolls(f.n, f.d);
    case FamilyKind::kStratum: return dim_stratum(ScrollType(f.n, f.a));
    case FamilyKind::kRnc: return dim_rnc(f.n);
    case FamilyKind::kRncThroughFrame: return dim_rnc_through_frame(f.n);
    case FamilyKind::kScrollsThroughFrame: return dim_scrolls_through_frame(ScrollType(f.n, f.a));
    case FamilyKind::kCurvesInScroll: return dim_curves_in_scroll(ScrollType(f.n, f.a), f.k);
    case FamilyKind::kScrollsWithCurve: return dim_scrolls_with_curve(ScrollType(f.n, f.a), f.k);
    case FamilyKind::kBinaryThroughFrame: return dim_binary_family(f.n);
  }
  throw Error(ErrorCode::kInternal, "unknown family kind");
}

std::vector<StratumRow> stratification_table(int n, int d) {
  std::vector<StratumRow> rows;
  const int all = dim_all_scrolls(n, d);
  for (const ScrollType& t : scroll_types(n, d)) {
    StratumRow r{t, aut_dimension(t), all, dim_stratum(t), dim_scrolls_through_frame(t), t.balanced(), t.balanced(), {}};
    for (int k = 1; k <= d; ++k) {
      PerK pk{k, dim_curves_in_scroll(t, k), 2 * d == n, std::nullopt};
      if (pk.scrolls_with_curve_applies) pk.dim_scrolls_with_curve = dim_scrolls_with_curve(t, k);
      r.per_k.push_back(pk);
    }
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace scrollkit

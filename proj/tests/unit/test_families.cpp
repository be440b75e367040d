#include <algorithm>

#include "doctest.h"
#include "scrollkit/error.hpp"
#include "scrollkit/scroll_families.hpp"

using namespace scrollkit;

namespace {

// dim Hom(O(a_i), O(a_j)) on P^1, counted by listing monomials of degree a_j - a_i.
int hom_count(const std::vector<int>& a) {
  int total = 0;
  for (int ai : a)
    for (int aj : a) {
      int deg = aj - ai;
      for (int e0 = 0; e0 <= deg; ++e0) ++total;
    }
  return total;
}

}  // namespace

TEST_CASE("scroll type validation") {
  CHECK(ScrollType(4, {2, 1}).a() == std::vector<int>{1, 2});
  CHECK_THROWS_AS(ScrollType(4, {1, 1}), Error);
  CHECK_THROWS_AS(ScrollType(4, {0, 0, 0, 0}), Error);
  CHECK_THROWS_AS(ScrollType(3, {-1, 3}), Error);
  CHECK(ScrollType(3, {3}).d() == 1);
  CHECK(balanced_type(6, 3) == ScrollType(6, {1, 1, 2}));
}

TEST_CASE("aut_dimension examples and oracle") {
  CHECK(aut_dimension(ScrollType(3, {1, 1})) == 4);
  CHECK(aut_dimension(ScrollType(4, {1, 2})) == 4);
  CHECK(aut_dimension(ScrollType(4, {0, 3})) == 6);
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d <= n - 1; ++d)
      for (const auto& t : scroll_types(n, d)) {
        CHECK(aut_dimension(t) == hom_count(t.a()));
        CHECK(aut_dimension(t) >= d * d);
        CHECK((aut_dimension(t) == d * d) == t.balanced());
      }
}

TEST_CASE("closed form dimensions") {
  CHECK(dim_all_scrolls(4, 2) == 18);
  CHECK(dim_all_scrolls(3, 1) == 12);
  CHECK(dim_all_scrolls(6, 3) == 37);
  CHECK(dim_stratum(ScrollType(4, {1, 2})) == 18);
  CHECK(dim_stratum(ScrollType(4, {0, 3})) == 16);
  CHECK(dim_stratum(ScrollType(5, {1, 1, 1})) == dim_all_scrolls(5, 3));
  CHECK(dim_all_scrolls(5, 3) == 24);
  CHECK(dim_rnc(3) == 12);
  CHECK(dim_rnc_through_frame(3) == 2);
  CHECK(dim_rnc(4) == 21);
  CHECK(dim_rnc_through_frame(4) == 3);
  CHECK(dim_scrolls_through_frame(ScrollType(4, {1, 2})) == 6);
  CHECK(dim_scrolls_through_frame(ScrollType(4, {0, 3})) == 4);
  CHECK(dim_scrolls_through_frame(ScrollType(3, {1, 1})) == 4);
  CHECK(intersection_bound(4) == 5);
  CHECK(dim_binary_family(4) == 6);
  CHECK(gonality_bound(5) == 4);
  CHECK(gonality_bound(2) == 2);
  CHECK_THROWS_AS(gonality_bound(1), Error);
}

TEST_CASE("curves in a scroll and scrolls containing a curve") {
  CHECK(dim_curves_in_scroll(ScrollType(4, {1, 2}), 1) == 6);
  CHECK(dim_curves_in_scroll(ScrollType(4, {1, 2}), 2) == 5);
  CHECK_FALSE(dim_curves_in_scroll(ScrollType(4, {0, 3}), 2).has_value());
  CHECK_FALSE(dim_curves_in_scroll(ScrollType(4, {1, 2}), 3).has_value());
  CHECK(dim_scrolls_with_curve(ScrollType(4, {1, 2}), 1) == 6);
  CHECK(dim_scrolls_with_curve(ScrollType(4, {1, 2}), 2) == 5);
  CHECK_FALSE(dim_scrolls_with_curve(ScrollType(4, {0, 3}), 2).has_value());
  CHECK_THROWS_AS(dim_scrolls_with_curve(ScrollType(5, {1, 1, 2}), 1), Error);
}

TEST_CASE("exhaustive identities up to n = 12") {
  for (int n = 2; n <= 12; ++n)
    for (int d = 1; d <= n - 1; ++d)
      for (const auto& t : scroll_types(n, d)) {
        CHECK(dim_stratum(t) <= dim_all_scrolls(n, d));
        CHECK((dim_stratum(t) == dim_all_scrolls(n, d)) == t.balanced());
        for (int k = 1; k <= d + 1; ++k) {
          auto closed = (d - 1) * (n + 3 - k) + (k - 1) * (2 * d - n);
          CHECK(curve_parameter_count(t, k) == closed);
        }
        if (2 * d == n) {
          CHECK(dim_scrolls_with_curve(t, 1) == dim_scrolls_through_frame(t));
          if (n < 4) continue;
          for (int h = 1; h <= n; ++h)
            for (int k = 1; k <= n; ++k) {
              if (h == k || h + k < n / 2 + 1) continue;
              auto dh = dim_scrolls_with_curve(t, h), dk = dim_scrolls_with_curve(t, k);
              if (!dh || !dk) continue;
              CHECK(*dh + *dk - dim_scrolls_through_frame(t) <= intersection_bound(n));
            }
        }
      }
}

TEST_CASE("stratification tables") {
  auto t = stratification_table(4, 2);
  REQUIRE(t.size() == 2);
  CHECK(t[0].type == ScrollType(4, {0, 3}));
  CHECK_FALSE(t[0].dense);
  CHECK(t[1].type == ScrollType(4, {1, 2}));
  CHECK(t[1].balanced);
  CHECK(t[1].dense);
  CHECK(t[1].per_k[1].dim_scrolls_with_curve == 5);
  CHECK(stratification_table(3, 1).size() == 1);
  auto t6 = stratification_table(6, 3);
  std::vector<std::vector<int>> got;
  for (auto& r : t6) got.push_back(r.type.a());
  CHECK(got == std::vector<std::vector<int>>{{0, 0, 4}, {0, 1, 3}, {0, 2, 2}, {1, 1, 2}});
  CHECK(std::count_if(t6.begin(), t6.end(), [](auto& r) { return r.dense; }) == 1);
}

TEST_CASE("family descriptors") {
  CHECK(family_dimension({FamilyKind::kAllScrolls, 4, 2, {}, 0}) == 18);
  CHECK(family_dimension({FamilyKind::kCurvesInScroll, 4, 0, {1, 2}, 2}) == 5);
  CHECK(family_dimension({FamilyKind::kBinaryThroughFrame, 5, 0, {}, 0}) == 8);
  CHECK_THROWS_AS(family_dimension({FamilyKind::kRnc, 4, 0, {1, 2}, 0}), Error);
  CHECK_THROWS_AS(family_dimension({FamilyKind::kCurvesInScroll, 4, 0, {1, 2}, 0}), Error);
}

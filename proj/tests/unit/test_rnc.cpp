#include "doctest.h"
#include "scrollkit/error.hpp"
#include "scrollkit/rnc_geometry.hpp"
#include "scrollkit/rng.hpp"

using namespace scrollkit;

namespace {

Quadric x0x3_minus_x1x2(const Field& k) {
  return Quadric::from_monomials(k, 3, {{{0, 3}, k.one()}, {{1, 2}, -k.one()}});
}

bool proportional(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j)
      if (!(a[i] * b[j] == a[j] * b[i])) return false;
  return !is_zero_vector(a) && !is_zero_vector(b);
}

// p(t:1) from scalar evaluation only: q(phi(t)) / (t * (t-1) * prod (t - a_i)).
Scalar residual_at(const Quadric& q, const std::vector<Scalar>& nodes, const Scalar& t) {
  const Field k = t.field();
  Vector x;
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    Scalar v = k.one();
    for (std::size_t i = 0; i < nodes.size(); ++i)
      if (i != j) v *= t - nodes[i];
    x.push_back(v);
  }
  Scalar den = k.one();
  for (const auto& a : nodes) den *= t - a;
  return q.evaluate(x) / den;
}

}  // namespace

TEST_CASE("frame_transform") {
  Field k = Field::rationals();
  CHECK(frame_transform(Frame::standard(k, 3)) == Matrix::identity(k, 4));

  Frame swapped = Frame::standard(k, 3);
  std::swap(swapped.points[0], swapped.points[1]);
  Matrix perm = Matrix::from_ints(k, {{0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(frame_transform(swapped) == perm);

  Rng rng(11);
  for (Field f : {Field::rationals(), Field::prime(10007)}) {
    for (int n : {2, 3, 5}) {
      Frame fr = Frame::random(f, n, rng);
      Matrix t = frame_transform(fr);
      Frame std_frame = Frame::standard(f, n);
      for (std::size_t j = 0; j < fr.points.size(); ++j) CHECK(proportional(t.apply(fr.points[j]), std_frame.points[j]));
    }
  }

  Frame bad = Frame::standard(k, 3);
  bad.points[4] = Vector{k.one(), k.one(), k.zero(), k.zero()};
  try {
    frame_transform(bad);
    FAIL("expected DEGENERATE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kDegenerate);
  }
}

TEST_CASE("standard curve evaluation") {
  Field k = Field::rationals();
  StandardRNC c(k, {k.from_int(2), k.from_int(3)});
  CHECK(c.evaluate(P1Point::infinity(k)) == Vector(4, k.one()));
  auto nodes = c.nodes();
  for (int j = 0; j <= 3; ++j) {
    Vector e(4, k.zero());
    e[static_cast<std::size_t>(j)] = k.one();
    CHECK(proportional(c.evaluate(P1Point::affine(nodes[static_cast<std::size_t>(j)])), e));
  }
  CHECK(proportional(c.evaluate({k.one(), k.one()}), Vector{k.zero(), k.one(), k.zero(), k.zero()}));
  CHECK(c.curve().nondegenerate());
  CHECK_THROWS_AS(StandardRNC(k, {k.from_int(1)}), Error);
  CHECK_THROWS_AS(StandardRNC(k, {k.from_int(5), k.from_int(5)}), Error);

  Rng rng(3);
  for (int n = 2; n <= 8; ++n) {
    auto r = StandardRNC::random(Field::prime(10007), n, rng);
    CHECK(r.curve().nondegenerate());
    CHECK(r.params().size() == static_cast<std::size_t>(n - 1));
  }
}

TEST_CASE("standardize undoes reparametrization and rescaling") {
  Rng rng(5);
  for (Field k : {Field::rationals(), Field::prime(10007)}) {
    for (int n = 2; n <= 6; ++n) {
      StandardRNC c = StandardRNC::random(k, n, rng);
      Matrix m = Matrix::from_rows(k, {{k.random(rng), k.random(rng)}, {k.random(rng), k.random(rng)}});
      if (!inverse(m)) continue;
      ParametrizedCurve moved = c.curve().reparametrized(m);
      Scalar lambda = k.random_nonzero(rng);
      for (auto& x : moved.coords) x = x.scaled(lambda);
      CHECK(standardize(moved) == c);
    }
  }
}

TEST_CASE("residual polynomial") {
  Field k = Field::rationals();
  Quadric q = x0x3_minus_x1x2(k);
  CHECK(q.through_standard_frame());
  StandardRNC c(k, {k.from_int(2), k.from_int(3)});
  BinaryForm p = residual_polynomial(q, c);
  CHECK(p.degree() == 1);
  CHECK(p == BinaryForm::from_ints(k, {0, 2}));
  CHECK(p * frame_vanishing_form(c) == q.compose(c.curve()));

  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    StandardRNC g = StandardRNC::random(k, 3, rng);
    const Scalar& a2 = g.params()[0];
    const Scalar& a3 = g.params()[1];
    BinaryForm expect({a3 - k.one() - a2, a2});
    CHECK(residual_polynomial(q, g) == expect);
  }

  CHECK_THROWS_AS(residual_polynomial(Quadric(Matrix(k, 4, 4)), c), Error);
  try {
    residual_polynomial(Quadric(Matrix(k, 4, 4)), c);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kZeroQuadric);
  }
  try {
    residual_polynomial(Quadric::from_monomials(k, 3, {{{0, 0}, k.one()}}), c);
    FAIL("expected NOT_THROUGH_FRAME");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNotThroughFrame);
  }
}

TEST_CASE("finiteness jacobian") {
  Field k = Field::rationals();
  auto chk = rnc_finiteness_rank(x0x3_minus_x1x2(k), StandardRNC(k, {k.from_int(2), k.from_int(3)}));
  CHECK(chk.jacobian == Matrix::from_ints(k, {{-1, 1}, {1, 0}}));
  CHECK(chk.rank == 2);
  CHECK_FALSE(chk.non_generic);

  // p is affine in each a_i, so a unit forward difference is the exact derivative.
  Rng rng(21);
  for (Field f : {Field::rationals(), Field::prime(10007)}) {
    for (int n = 3; n <= 6; ++n) {
      Quadric q = random_quadric_through_frame(f, n, 4, rng);
      StandardRNC c = StandardRNC::random(f, n, rng);
      auto fc = rnc_finiteness_rank(q, c);
      auto nodes = c.nodes();
      for (int trial = 0; trial < 3; ++trial) {
        Scalar t = f.random(rng);
        bool on_node = false;
        for (int i = 2; i <= n; ++i) {
          auto plus = nodes;
          plus[static_cast<std::size_t>(i)] += f.one();
          for (auto& a : nodes) on_node = on_node || a == t;
          for (auto& a : plus) on_node = on_node || a == t;
        }
        if (on_node) continue;
        for (int i = 2; i <= n; ++i) {
          auto plus = nodes;
          plus[static_cast<std::size_t>(i)] += f.one();
          Scalar diff = residual_at(q, plus, t) - residual_at(q, nodes, t);
          Scalar col = f.zero();
          for (int r = 0; r <= n - 2; ++r) col += fc.jacobian(static_cast<std::size_t>(r), static_cast<std::size_t>(i - 2)) * t.pow(static_cast<unsigned>(n - 2 - r));
          CHECK(diff == col);
        }
      }
    }
  }
}

TEST_CASE("random quadrics through the frame") {
  Rng rng(99);
  for (Field f : {Field::rationals(), Field::prime(10007)}) {
    for (int n = 3; n <= 6; ++n) {
      for (int r : {3, 4}) {
        Quadric q = random_quadric_through_frame(f, n, r, rng);
        CHECK(q.rank() == static_cast<std::size_t>(r));
        CHECK(q.through_standard_frame());
        CHECK(q.singular_frame_points().empty());
      }
    }
  }
  Field k = Field::rationals();
  Quadric cone = Quadric::from_monomials(k, 3, {{{0, 1}, k.one()}, {{0, 2}, -k.one()}});
  CHECK(cone.through_standard_frame());
  CHECK(cone.singular_frame_points() == std::vector<std::size_t>{3});
}

TEST_CASE("projection from frame points") {
  Field k = Field::rationals();
  StandardRNC cubic(k, {k.from_int(2), k.from_int(3)});
  ParametrizedCurve conic = project_from_frame_point(cubic.curve(), 0);
  CHECK(conic.degree() == 2);
  CHECK(conic.ambient() == 2);
  CHECK(rank(conic.coefficient_matrix()) == 3);

  Rng rng(4);
  for (Field f : {Field::rationals(), Field::prime(10007)}) {
    for (int n = 3; n <= 7; ++n) {
      StandardRNC c = StandardRNC::random(f, n, rng);
      for (int j = 0; j <= n + 1; ++j) {
        ParametrizedCurve img = project_from_frame_point(c.curve(), j);
        CHECK(img.degree() == n - 1);
        CHECK(img.nondegenerate());
        auto params = frame_parameters(img);
        REQUIRE(params);
        Frame fr;
        for (const auto& s : *params) fr.points.push_back(img.evaluate(s));
        CHECK_FALSE(general_position_violation(fr));
        StandardRNC std_img = project_from_frame_point(c, j);
        CHECK(std_img.n() == n - 1);
      }
    }
  }

  // Move the curve off e_0 and the projection must refuse.
  StandardRNC c = StandardRNC::random(k, 4, rng);
  Matrix t = Matrix::identity(k, 5);
  t(1, 0) = k.from_int(1);
  try {
    project_from_frame_point(c.curve().transformed(t), 0);
    FAIL("expected CENTER_NOT_ON_CURVE");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCenterNotOnCurve);
  }
}

#include <doctest.h>

#include "scrollkit/binary_curves.hpp"
#include "scrollkit/error.hpp"
#include "scrollkit/rng.hpp"

using namespace scrollkit;

namespace {

const Field kP = Field::prime(10007);
const Field kQ = Field::rationals();

// Pencil matrix built from monomial evaluations, independent of pencil_system.
std::size_t oracle_pencil_rank(const NodeData& nodes, int degree) {
  const Field k = nodes.front().r.s0.field();
  std::vector<Vector> rows;
  for (const auto& [r, s] : nodes) {
    Vector row;
    for (int i = 0; i <= degree; ++i) row.push_back(BinaryForm::monomial(k, degree, i).evaluate(r.s0, r.s1) * s.s1);
    for (int i = 0; i <= degree; ++i) row.push_back(-BinaryForm::monomial(k, degree, i).evaluate(r.s0, r.s1) * s.s0);
    rows.push_back(row);
  }
  return rank(Matrix::from_rows(k, rows));
}

bool proportional(const Vector& a, const Vector& b) {
  return rank(Matrix::from_rows(a.front().field(), {a, b})) <= 1;
}

NodeData equal_component_nodes(const Field& k, int n, std::uint64_t seed) {
  Rng rng(seed);
  StandardRNC c = StandardRNC::random(k, n, rng);
  NodeData d;
  for (int j = 0; j <= n + 1; ++j) d.push_back({c.frame_parameter(j), c.frame_parameter(j)});
  return d;
}

}  // namespace

TEST_CASE("random binary curves") {
  BinaryCurve c = random_binary_curve(4, kP, 1);
  CHECK(c == random_binary_curve(4, kP, 1));
  CHECK_FALSE(c == random_binary_curve(4, kP, 2));
  CHECK(c.arithmetic_genus() == 5);
  CHECK(c.node_count() == 6);
  CHECK(rank(c.comp1().curve().coefficient_matrix()) == 5);
  CHECK(rank(c.comp2().curve().coefficient_matrix()) == 5);

  // Both components pass through the same frame point at every node.
  Frame f = Frame::standard(kP, 4);
  auto nodes = c.nodes();
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    CHECK(proportional(c.comp1().evaluate(nodes[j].r), f.points[j]));
    CHECK(proportional(c.comp2().evaluate(nodes[j].s), f.points[j]));
  }

  CHECK_THROWS_AS(BinaryCurve(c.comp1(), c.comp1()), Error);
  try {
    random_binary_curve(4, Field::prime(13), 1);
    FAIL("expected FIELD_TOO_SMALL");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kFieldTooSmall);
  }
  CHECK_THROWS_AS(random_binary_curve(2, kP, 1), Error);
}

TEST_CASE("gonality map, n = 4") {
  for (const Field& k : {kP, kQ}) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
      BinaryCurve c = random_binary_curve(4, k, seed);
      GonalityResult g = gonality_map(c);
      CHECK(g.equations == 6);
      CHECK(g.unknowns == 8);
      CHECK(g.kernel_dim == 8 - oracle_pencil_rank(c.nodes(), 3));
      CHECK(g.kernel_dim == 2);
      CHECK(g.witness.degree == 3);
      CHECK(g.witness.total_degree == 4);
      CHECK(g.bound == 4);
      CHECK_FALSE(g.witness.reduced);
      CHECK(form_gcd(g.witness.q1, g.witness.q2).degree() == 0);
      for (const auto& [r, s] : c.nodes()) {
        Scalar a = g.witness.q1.evaluate(r.s0, r.s1), b = g.witness.q2.evaluate(r.s0, r.s1);
        CHECK_FALSE((a.is_zero() && b.is_zero()));
        CHECK((a * s.s1 - b * s.s0).is_zero());
      }
      for (const auto& q : g.kernel) CHECK((q.first.degree() == 3 && q.second.degree() == 3));
    }
  }
}

TEST_CASE("gonality map, odd n and batches") {
  BinaryCurve c5 = random_binary_curve(5, kP, 11);
  GonalityResult g5 = gonality_map(c5);
  CHECK(g5.equations == 7);
  CHECK(g5.unknowns == 8);
  CHECK(g5.kernel_dim >= 1);
  CHECK(g5.kernel_dim == 8 - oracle_pencil_rank(c5.nodes(), 3));
  CHECK(g5.witness.degree == 3);
  CHECK(g5.witness.total_degree <= gonality_bound(6));

  for (int n : {4, 6, 8}) {
    int exact = 0;
    const int batch = 20;
    for (int s = 0; s < batch; ++s) {
      GonalityResult g = gonality_map(random_binary_curve(n, kP, 100 + static_cast<std::uint64_t>(s)));
      CHECK(g.kernel_dim >= 2);
      exact += g.kernel_dim == 2;
      CHECK(g.witness.total_degree <= gonality_bound(n + 1));
      CHECK(g.witness.degree == n / 2 + 1);
    }
    CHECK(exact * 100 >= 95 * batch);
  }
}

TEST_CASE("gonality map with equal components") {
  for (int n : {4, 6, 10}) {
    NodeData d = equal_component_nodes(kP, n, 5);
    GonalityResult g = gonality_map(d, n);
    CHECK(g.kernel_dim == static_cast<std::size_t>(n / 2 + 1));
    CHECK(g.witness.degree == 1);
    CHECK(g.witness.total_degree == 2);
    CHECK(g.witness.reduced);
    CHECK(certifies_nodes({g.witness.q1, g.witness.q2}, d));
    // The kernel is {(s0 m, s1 m)}.
    for (const auto& [q1, q2] : g.kernel) {
      CHECK((q1 * BinaryForm::monomial(kP, 1, 1)) == (q2 * BinaryForm::monomial(kP, 1, 0)));
    }
  }
}

TEST_CASE("hyperelliptic test") {
  Rng rng(3);
  NodeData three;
  for (int j = 0; j < 3; ++j) three.push_back({P1Point::affine(kP.from_int(j)), P1Point::affine(kP.from_int(5 * j + 2))});
  CHECK(hyperelliptic_test(three).hyperelliptic);

  int positives = 0;
  for (std::uint64_t s = 0; s < 100; ++s) positives += hyperelliptic_test(random_binary_curve(3, kP, s)).hyperelliptic;
  CHECK(positives <= 1);

  // Second component's nodes are a Moebius image of the first's.
  for (const Field& k : {kP, kQ}) {
    Matrix m = Matrix::from_ints(k, {{2, 7}, {-3, 5}});
    StandardRNC c = StandardRNC::random(k, 5, rng);
    NodeData d;
    for (int j = 0; j <= 6; ++j) d.push_back({c.frame_parameter(j), apply_mobius(m, c.frame_parameter(j))});
    HyperellipticResult h = hyperelliptic_test(d);
    CHECK(h.hyperelliptic);
    CHECK(h.kernel_dim == 1);
    REQUIRE(h.mobius);
    CHECK(rank(h.mobius->hstack(m)) == 2);
    Vector a{(*h.mobius)(0, 0), (*h.mobius)(0, 1), (*h.mobius)(1, 0), (*h.mobius)(1, 1)};
    Vector b{m(0, 0), m(0, 1), m(1, 0), m(1, 1)};
    CHECK(proportional(a, b));
  }
}

TEST_CASE("quadrics through binary curves") {
  const std::vector<std::pair<int, std::size_t>> cases{{3, 1}, {4, 3}, {5, 6}, {6, 10}};
  for (auto [n, expected] : cases) {
    for (const Field& k : {kP, kQ}) {
      if (n > 4 && k.is_rational()) continue;
      BinaryCurve c = random_binary_curve(n, k, 7);
      QuadricSpace qs = quadrics_through(c);
      CHECK(qs.expected == expected);
      CHECK(qs.basis.size() == expected);
      CHECK(qs.unknowns == static_cast<std::size_t>((n + 1) * (n + 2) / 2));
      for (const auto& q : qs.basis) {
        CHECK_FALSE(q.is_zero());
        CHECK(q.compose(c.comp1().curve()).is_zero());
        CHECK(q.compose(c.comp2().curve()).is_zero());
        CHECK(q.through_standard_frame());
      }
    }
  }
}

TEST_CASE("plane slicing of a cubic surface scroll") {
  // 2x2 minors of [[x0, x1, x3], [x1, x2, x4]]: every plane meets the surface.
  const Field k = kQ;
  auto mono = [&](int i, int j, long c) { return std::pair<std::pair<int, int>, Scalar>{{i, j}, k.from_int(c)}; };
  std::vector<Quadric> minors{Quadric::from_monomials(k, 4, {mono(0, 2, 1), mono(1, 1, -1)}),
                              Quadric::from_monomials(k, 4, {mono(0, 4, 1), mono(1, 3, -1)}),
                              Quadric::from_monomials(k, 4, {mono(1, 4, 1), mono(2, 3, -1)})};
  auto trials = plane_slices(minors, 6, 9);
  REQUIRE(trials.size() == 6);
  for (const auto& t : trials) {
    CHECK(t.hit);
    CHECK(t.common.degree() >= 3);
  }
  // Two quadrics alone meet every plane in four points.
  auto pair = plane_slices({minors[0], minors[1]}, 3, 9);
  for (const auto& t : pair) CHECK(t.common.degree() == 4);
  CHECK_THROWS_AS(plane_slices(minors, 0, 1), Error);
}

TEST_CASE("scroll containment, n = 4") {
  BinaryCurve c = random_binary_curve(4, kQ, 3);
  ContainmentReport r = scroll_containment_witness(c, 20, 3);
  CHECK(r.verdict == ContainmentVerdict::kNoneFound);
  CHECK(r.trials.size() == 20);
  CHECK(r.hits == 0);
  CHECK(r.quadric_dim == 3);
  CHECK_FALSE(r.anomaly);
  CHECK_FALSE(r.heuristic);
  for (const auto& t : r.trials) CHECK(t.resultants.size() == 3);

  try {
    scroll_containment_witness(c, 0, 3);
    FAIL("expected INVALID_TRIALS");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kInvalidTrials);
  }

  for (const Field& k : {kQ, kP}) {
    BinaryCurve pc = scroll_positive_control(k, 4);
    CHECK(pc.n() == 4);
    CHECK(quadrics_through(pc).basis.size() == 3);
    ContainmentReport w = scroll_containment_witness(pc, 8, 5);
    CHECK(w.verdict == ContainmentVerdict::kWitness);
    CHECK(w.hits == 8);
  }
}

TEST_CASE("scroll containment, stratified search") {
  BinaryCurve c6 = random_binary_curve(6, kP, 21);
  ContainmentReport r = scroll_containment_witness(c6, 5, 1);
  CHECK(r.heuristic);
  CHECK(r.verdict == ContainmentVerdict::kNoneFound);
  CHECK(r.projections == 0);
  CHECK_FALSE(r.strata.empty());
  bool saw_linear = false;
  for (const auto& s : r.strata) {
    CHECK(s.excluded);
    if (s.method == "pencil-linear-system") {
      saw_linear = true;
      CHECK(s.kernel_dim == 0u);
    }
  }
  CHECK(saw_linear);

  ContainmentReport r5 = scroll_containment_witness(random_binary_curve(5, kP, 2), 5, 1);
  CHECK(r5.projections == 1);
  CHECK(r5.verdict == ContainmentVerdict::kNoneFound);

  ContainmentReport r3 = scroll_containment_witness(random_binary_curve(3, kP, 2), 5, 1);
  CHECK(r3.verdict == ContainmentVerdict::kNoneFound);
}

TEST_CASE("projection from a node") {
  BinaryCurve c = random_binary_curve(4, kP, 8);
  BinaryCurve p = project_from_node(c, 0);
  CHECK(p.n() == 3);
  CHECK(p.arithmetic_genus() == 4);
  CHECK(p.node_count() == 5);
  CHECK(quadrics_through(p).basis.size() == 1);
  CHECK_FALSE(hyperelliptic_test(p).hyperelliptic);

  // The projected component equals the projection of the parametrized curve.
  ParametrizedCurve direct = project_from_frame_point(c.comp1().curve(), 0);
  Frame f = Frame::standard(kP, 3);
  auto nodes = p.nodes();
  for (std::size_t j = 0; j < nodes.size(); ++j) CHECK(proportional(p.comp1().evaluate(nodes[j].r), f.points[j]));
  CHECK(standardize(direct) == p.comp1());

  BinaryCurve c5 = random_binary_curve(5, kP, 9);
  BinaryCurve twice = project_from_node(project_from_node(c5, 0), 0);
  CHECK(twice.n() == 3);
  CHECK(twice.arithmetic_genus() == 4);
  CHECK(quadrics_through(twice).basis.size() == 1);
  CHECK(gonality_map(twice).witness.total_degree <= gonality_bound(4));

  CHECK_THROWS_AS(project_from_node(random_binary_curve(3, kP, 1), 0), Error);
}

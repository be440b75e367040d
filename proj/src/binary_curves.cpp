#include "scrollkit/binary_curves.hpp"

#include <algorithm>

#include "scrollkit/error.hpp"
#include "scrollkit/rng.hpp"
#include "scrollkit/scroll_curves.hpp"

namespace scrollkit {

namespace {

std::vector<std::string> sorted_params(const StandardRNC& c) {
  std::vector<std::string> v;
  for (const auto& x : c.params()) v.push_back(x.to_string());
  std::sort(v.begin(), v.end());
  return v;
}

std::vector<Scalar> powers(const Scalar& x, int d) {
  std::vector<Scalar> p{x.field().one()};
  for (int i = 1; i <= d; ++i) p.push_back(p.back() * x);
  return p;
}

// Coprime map of exactly the form degree, or the lowest-degree reduction
// that still satisfies the node conditions.
std::optional<GonalityWitness> scan_witness(const std::vector<FormPair>& kernel, const NodeData& nodes,
                                            bool allow_reduced) {
  if (kernel.empty()) return std::nullopt;
  const Field k = kernel.front().first.field();
  const std::size_t dim = kernel.size();

  std::vector<std::vector<int>> combos;
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<int> c(dim, 0);
    c[i] = 1;
    combos.push_back(c);
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j)
      for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) {
          if (a == 0 || b == 0) continue;
          std::vector<int> c(dim, 0);
          c[i] = a;
          c[j] = b;
          combos.push_back(c);
        }
  if (dim >= 3 && dim <= 4) {
    std::vector<int> c(dim, -3);
    for (;;) {
      if (std::count(c.begin(), c.end(), 0) == 0) combos.push_back(c);
      std::size_t p = 0;
      while (p < dim && c[p] == 3) c[p++] = -3;
      if (p == dim) break;
      ++c[p];
    }
  }

  std::optional<GonalityWitness> best_reduced;
  for (const auto& c : combos) {
    BinaryForm q1 = BinaryForm::zero(k, kernel.front().first.degree());
    BinaryForm q2 = q1;
    for (std::size_t i = 0; i < dim; ++i) {
      if (c[i] == 0) continue;
      q1 += kernel[i].first.scaled(k.from_int(c[i]));
      q2 += kernel[i].second.scaled(k.from_int(c[i]));
    }
    if (q1.is_zero() && q2.is_zero()) continue;
    BinaryForm g = form_gcd(q1, q2);
    if (g.degree() == 0) {
      if (certifies_nodes({q1, q2}, nodes)) return GonalityWitness{q1, q2, q1.degree(), q1.degree() + 1, false, c};
      continue;
    }
    if (!allow_reduced) continue;
    FormPair r{form_divide_exact(q1, g), form_divide_exact(q2, g)};
    if (!certifies_nodes(r, nodes)) continue;
    if (!best_reduced || r.first.degree() < best_reduced->degree)
      best_reduced = GonalityWitness{r.first, r.second, r.first.degree(), r.first.degree() + 1, true, c};
  }
  return best_reduced;
}

std::vector<Vector> random_plane(const Field& k, const std::vector<Quadric>& quadrics, Rng& rng) {
  for (;;) {
    std::vector<Vector> pts(3, Vector(5, k.zero()));
    for (auto& p : pts)
      for (auto& x : p) x = k.random(rng);
    if (rank(Matrix::from_rows(k, pts)) < 3) continue;
    // The third point must avoid every quadric so each conic is monic in u2.
    bool ok = std::all_of(quadrics.begin(), quadrics.end(),
                          [&](const Quadric& q) { return !q.evaluate(pts[2]).is_zero(); });
    if (ok) return pts;
  }
}

struct Conic {
  Scalar c2;       // u2^2
  BinaryForm c1;   // u2 * (linear in u0, u1)
  BinaryForm c0;   // quadratic in u0, u1
};

Conic restrict_to_plane(const Quadric& q, const std::vector<Vector>& pts) {
  const Matrix& g = q.gram();
  auto bil = [&](const Vector& x, const Vector& y) {
    Scalar acc = g.field().zero();
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j)
        if (!g(i, j).is_zero()) acc += x[i] * g(i, j) * y[j];
    return acc;
  };
  const Scalar two = g.field().from_int(2);
  return {bil(pts[2], pts[2]),
          BinaryForm::linear(two * bil(pts[0], pts[2]), two * bil(pts[1], pts[2])),
          BinaryForm({bil(pts[0], pts[0]), two * bil(pts[0], pts[1]), bil(pts[1], pts[1])})};
}

// Resultant in u2 of two conics with constant nonzero u2^2 coefficients.
BinaryForm resultant_u2(const Conic& f, const Conic& g) {
  BinaryForm a = f.c0.scaled(g.c2) - g.c0.scaled(f.c2);
  BinaryForm b = f.c1.scaled(g.c2) - g.c1.scaled(f.c2);
  BinaryForm c = f.c1 * g.c0 - g.c1 * f.c0;
  return a * a + b * c;
}

}  // namespace

// ---------------------------------------------------------------- curves

BinaryCurve::BinaryCurve(StandardRNC comp1, StandardRNC comp2) : comp1_(std::move(comp1)), comp2_(std::move(comp2)) {
  if (comp1_.n() != comp2_.n()) throw Error(ErrorCode::kInvalidArgument, "components in different spaces");
  if (comp1_.field() != comp2_.field()) throw Error(ErrorCode::kFieldMismatch, "components over different fields");
  if (sorted_params(comp1_) == sorted_params(comp2_))
    throw Error(ErrorCode::kInvalidArgument, "components have the same parameters");
}

NodeData BinaryCurve::nodes() const {
  NodeData out;
  for (int j = 0; j <= n() + 1; ++j) out.push_back({comp1_.frame_parameter(j), comp2_.frame_parameter(j)});
  return out;
}

BinaryCurve random_binary_curve(int n, const Field& k, std::uint64_t seed) {
  if (n < 3) throw Error(ErrorCode::kPrecondition, "binary curves need n >= 3");
  if (!k.is_rational() && k.modulus() < 4 * static_cast<std::uint64_t>(n))
    throw Error(ErrorCode::kFieldTooSmall, "need p >= 4n, got p = " + std::to_string(k.modulus()));
  Rng rng(seed);
  StandardRNC c1 = StandardRNC::random(k, n, rng);
  for (;;) {
    StandardRNC c2 = StandardRNC::random(k, n, rng);
    if (sorted_params(c1) != sorted_params(c2)) return BinaryCurve(c1, c2);
  }
}

// ---------------------------------------------------------------- pencils

PencilSystem pencil_system(const NodeData& nodes, int degree) {
  if (nodes.empty()) throw Error(ErrorCode::kInvalidArgument, "no nodes");
  if (degree < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree");
  const Field k = nodes.front().r.s0.field();
  const auto m = static_cast<std::size_t>(degree) + 1;
  Matrix a(k, nodes.size(), 2 * m);
  for (std::size_t j = 0; j < nodes.size(); ++j) {
    const auto& [r, s] = nodes[j];
    auto p0 = powers(r.s0, degree), p1 = powers(r.s1, degree);
    for (std::size_t i = 0; i < m; ++i) {
      Scalar mono = p0[m - 1 - i] * p1[i];
      a(j, i) = mono * s.s1;
      a(j, m + i) = -(mono * s.s0);
    }
  }
  RankKernel rk = rank_kernel(a);
  PencilSystem out{a, rk.rank, {}};
  for (const auto& v : rk.kernel)
    out.kernel.emplace_back(BinaryForm(Vector(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(m))),
                            BinaryForm(Vector(v.begin() + static_cast<std::ptrdiff_t>(m), v.end())));
  return out;
}

bool certifies_nodes(const FormPair& q, const NodeData& nodes) {
  for (const auto& [r, s] : nodes) {
    P1Point image{q.first.evaluate(r.s0, r.s1), q.second.evaluate(r.s0, r.s1)};
    if (!image.is_valid() || !same_point(image, s)) return false;
  }
  return true;
}

GonalityResult gonality_map(const NodeData& nodes, int n) {
  if (n < 1) throw Error(ErrorCode::kInvalidArgument, "n must be positive");
  const int e = n / 2 + 1;
  PencilSystem sys = pencil_system(nodes, e);
  auto w = scan_witness(sys.kernel, nodes, true);
  if (!w) {
    std::string msg = "kernel of dimension " + std::to_string(sys.kernel.size()) + ":";
    for (const auto& [q1, q2] : sys.kernel) msg += " (" + q1.to_string() + ", " + q2.to_string() + ")";
    throw Error(ErrorCode::kNoCoprimeWitness, msg);
  }
  return {e,
          nodes.size(),
          sys.matrix.cols(),
          sys.kernel.size(),
          sys.kernel,
          *w,
          gonality_bound(n + 1)};
}

GonalityResult gonality_map(const BinaryCurve& c) { return gonality_map(c.nodes(), c.n()); }

HyperellipticResult hyperelliptic_test(const NodeData& nodes) {
  PencilSystem sys = pencil_system(nodes, 1);
  HyperellipticResult out{false, sys.kernel.size(), std::nullopt};
  if (auto w = scan_witness(sys.kernel, nodes, false)) {
    out.hyperelliptic = true;
    out.mobius = Matrix::from_rows(w->q1.field(), {Vector(w->q1.coeffs().begin(), w->q1.coeffs().end()), Vector(w->q2.coeffs().begin(), w->q2.coeffs().end())});
  }
  return out;
}

HyperellipticResult hyperelliptic_test(const BinaryCurve& c) { return hyperelliptic_test(c.nodes()); }

// ---------------------------------------------------------------- quadrics

QuadricSpace quadrics_through(const BinaryCurve& c) {
  const int n = c.n();
  const Field k = c.field();
  std::vector<std::pair<int, int>> monos;
  for (int i = 0; i <= n; ++i)
    for (int j = i; j <= n; ++j) monos.emplace_back(i, j);

  const std::size_t len = static_cast<std::size_t>(2 * n) + 1;
  Matrix a(k, 2 * len, monos.size());
  std::size_t offset = 0;
  for (const StandardRNC* comp : {&c.comp1(), &c.comp2()}) {
    ParametrizedCurve pc = comp->curve();
    for (std::size_t col = 0; col < monos.size(); ++col) {
      auto [i, j] = monos[col];
      BinaryForm f = pc.coords[static_cast<std::size_t>(i)] * pc.coords[static_cast<std::size_t>(j)];
      for (std::size_t r = 0; r < len; ++r) a(offset + r, col) = f[static_cast<int>(r)];
    }
    offset += len;
  }

  QuadricSpace out{{}, a.rows(), a.cols(), static_cast<std::size_t>((n - 1) * (n - 2) / 2)};
  for (const auto& v : rank_kernel(a).kernel) {
    std::vector<std::pair<std::pair<int, int>, Scalar>> terms;
    for (std::size_t col = 0; col < monos.size(); ++col)
      if (!v[col].is_zero()) terms.push_back({monos[col], v[col]});
    out.basis.push_back(Quadric::from_monomials(k, n, terms));
  }
  return out;
}

// ---------------------------------------------------------------- containment

std::string to_string(ContainmentVerdict v) { return v == ContainmentVerdict::kWitness ? "WITNESS" : "NONE_FOUND"; }

std::vector<SliceTrial> plane_slices(const std::vector<Quadric>& quadrics, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kInvalidTrials, "trials must be positive");
  if (quadrics.size() < 2) throw Error(ErrorCode::kInvalidArgument, "plane slicing needs at least two quadrics");
  for (const auto& q : quadrics)
    if (q.n() != 4) throw Error(ErrorCode::kPrecondition, "plane slicing works in P^4");
  const Field k = quadrics.front().field();
  const Rng base(seed);
  std::vector<SliceTrial> out;
  for (int t = 0; t < trials; ++t) {
    Rng rng = base.fork(static_cast<std::uint64_t>(t));
    auto pts = random_plane(k, quadrics, rng);
    std::vector<Conic> conics;
    for (const auto& q : quadrics) conics.push_back(restrict_to_plane(q, pts));
    SliceTrial tr{static_cast<std::uint64_t>(t), {}, BinaryForm::zero(k, 0), false};
    for (std::size_t i = 0; i < conics.size(); ++i)
      for (std::size_t j = i + 1; j < conics.size(); ++j) tr.resultants.push_back(resultant_u2(conics[i], conics[j]));
    bool all_zero = std::all_of(tr.resultants.begin(), tr.resultants.end(), [](const BinaryForm& f) { return f.is_zero(); });
    if (all_zero) {
      tr.hit = true;
    } else {
      tr.common = form_gcd(std::span<const BinaryForm>(tr.resultants));
      tr.hit = tr.common.degree() > 0;
    }
    out.push_back(std::move(tr));
  }
  return out;
}

std::vector<StratumCheck> containment_strata(const BinaryCurve& c) {
  const int n = c.n();
  if (n < 4 || n % 2 != 0) throw Error(ErrorCode::kPrecondition, "the stratified search needs n even and >= 4");
  const int d = n / 2;
  const NodeData nodes = c.nodes();
  NodeData swapped;
  for (const auto& [r, s] : nodes) swapped.push_back({s, r});

  std::vector<StratumCheck> out;
  for (const ScrollType& a : scroll_types(n, d)) {
    for (int h = 1; h <= d; ++h) {
      for (int k = 1; k <= d; ++k) {
        StratumCheck s{a, h, k, "", true, std::nullopt, std::nullopt, ""};
        auto dh = dim_scrolls_with_curve(a, h), dk = dim_scrolls_with_curve(a, k);
        if (!dim_curves_in_scroll(a, h) || !dim_curves_in_scroll(a, k) || !dh || !dk) {
          s.method = "empty-family";
          s.detail = "no curves of this degree through the frame";
        } else if (2 * (h + k) < n + 2) {
          s.method = "lower-dimension";
          s.detail = "a divisor in |L+M| through the curve is a smaller scroll";
        } else if (std::min(h, k) == 1) {
          // Unisecant component: the other one maps to it with degree max(h, k).
          const int m = std::max(h, k);
          PencilSystem sys = pencil_system(h == 1 ? swapped : nodes, m);
          s.method = "pencil-linear-system";
          s.kernel_dim = sys.kernel.size();
          auto w = scan_witness(sys.kernel, h == 1 ? swapped : nodes, true);
          s.excluded = !w.has_value();
          s.detail = s.excluded ? "no map of degree " + std::to_string(m) + " matches the nodes"
                                : "node-compatible map of degree " + std::to_string(w->degree) + " exists";
        } else if (h != k) {
          s.method = "dimension-count";
          s.estimate = std::min({*dh, *dk, intersection_bound(n)});
          s.excluded = *s.estimate < dim_binary_family(n);
          s.detail = "scroll family of dimension <= " + std::to_string(*s.estimate) + " against " +
                     std::to_string(dim_binary_family(n)) + " binary curves through the frame";
        } else {
          s.method = "singular-node";
          s.detail = "equal degrees force a singular node, then projection lowers n";
        }
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

ContainmentReport scroll_containment_witness(const BinaryCurve& c, int trials, std::uint64_t seed) {
  if (trials < 1) throw Error(ErrorCode::kInvalidTrials, "trials must be positive");
  ContainmentReport rep{};
  rep.seed = seed;
  if (c.n() == 4) {
    rep.method = "plane-slicing";
    rep.heuristic = false;
    QuadricSpace qs = quadrics_through(c);
    rep.quadric_dim = qs.basis.size();
    rep.expected_quadric_dim = qs.expected;
    if (qs.basis.size() != qs.expected) rep.anomaly = "QUADRIC_SPACE_UNEXPECTED_DIM";
    if (qs.basis.size() < 2) {
      rep.verdict = ContainmentVerdict::kNoneFound;
      rep.description = "fewer than two quadrics through the curve; no surface is cut out";
      return rep;
    }
    rep.trials = plane_slices(qs.basis, trials, seed);
    rep.hits = static_cast<std::size_t>(std::count_if(rep.trials.begin(), rep.trials.end(),
                                                      [](const SliceTrial& t) { return t.hit; }));
    rep.verdict = 2 * rep.hits > rep.trials.size() ? ContainmentVerdict::kWitness : ContainmentVerdict::kNoneFound;
    rep.description = std::to_string(rep.hits) + " of " + std::to_string(rep.trials.size()) +
                      " random planes meet the base locus of the quadrics";
    return rep;
  }

  rep.method = "stratified-search";
  rep.heuristic = true;
  if (c.n() == 3) {
    rep.verdict = ContainmentVerdict::kNoneFound;
    rep.description = "scrolls of dimension <= 1 are curves and cannot contain both components";
    return rep;
  }
  BinaryCurve work = c;
  if (work.n() % 2 == 1) {
    work = project_from_node(work, 0);
    rep.projections = 1;
  }
  rep.strata = containment_strata(work);
  std::size_t open = 0;
  std::string first_open;
  for (const auto& s : rep.strata) {
    if (s.excluded) continue;
    if (open++ == 0)
      first_open = s.scroll.to_string() + " h=" + std::to_string(s.h) + " k=" + std::to_string(s.k);
  }
  rep.verdict = open == 0 ? ContainmentVerdict::kNoneFound : ContainmentVerdict::kWitness;
  rep.description = open == 0 ? "every stratum excluded (" + std::to_string(rep.strata.size()) + " checked)"
                              : std::to_string(open) + " strata not excluded, first " + first_open;
  return rep;
}

// ---------------------------------------------------------------- constructions

BinaryCurve scroll_positive_control(const Field& k, std::uint64_t seed) {
  const ScrollType a(4, {1, 2});
  Rng rng(seed);
  for (int attempt = 0; attempt < 64; ++attempt) {
    try {
      CurveInScroll g2 = CurveInScroll::random(a, 2, k, rng);
      std::vector<ScrollPoint> pts;
      std::vector<P1Point> ts;
      while (pts.size() < 6) {
        ScrollPoint p = g2.at(P1Point::affine(k.random(rng)));
        bool fresh = std::none_of(ts.begin(), ts.end(), [&](const P1Point& t) { return same_point(t, p.t); });
        if (!fresh) continue;
        ts.push_back(p.t);
        pts.push_back(std::move(p));
      }
      UnisecantResult u = interpolate_unisecant(a, pts);
      if (u.status != UnisecantStatus::kUnique) continue;
      PushForward f1 = push_forward(*u.curve), f2 = push_forward(g2);
      if (f1.degenerate || f2.degenerate) continue;
      Frame frame;
      for (const auto& p : pts) frame.points.push_back(scroll_point_image(a.a(), p));
      Matrix t = frame_transform(frame);
      return BinaryCurve(standardize(f1.curve.transformed(t)), standardize(f2.curve.transformed(t)));
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::kInternal, "could not build a curve on a cubic scroll");
}

BinaryCurve project_from_node(const BinaryCurve& c, int j) {
  if (c.n() < 4) throw Error(ErrorCode::kPrecondition, "projection from a node needs n >= 4");
  return BinaryCurve(project_from_frame_point(c.comp1(), j), project_from_frame_point(c.comp2(), j));
}

}  // namespace scrollkit

#include "scrollkit/scroll_curves.hpp"

#include <numeric>

#include "scrollkit/error.hpp"
#include "scrollkit/rng.hpp"

namespace scrollkit {

namespace {

BinaryForm t0_form(const Field& k) { return BinaryForm::linear(k.one(), k.zero()); }
BinaryForm t1_form(const Field& k) { return BinaryForm::linear(k.zero(), k.one()); }

BinaryForm random_form(const Field& k, int degree, Rng& rng) {
  std::vector<Scalar> c;
  for (int j = 0; j <= degree; ++j) c.push_back(k.random(rng));
  return BinaryForm(std::move(c));
}

// s0^(deg-c) s1^c at s, for c = 0..deg.
std::vector<Scalar> monomial_values(const P1Point& s, int deg) {
  std::vector<Scalar> out;
  for (int c = 0; c <= deg; ++c) out.push_back(s.s0.pow(static_cast<unsigned>(deg - c)) * s.s1.pow(static_cast<unsigned>(c)));
  return out;
}

int ambient_of(const std::vector<int>& a) {
  return std::accumulate(a.begin(), a.end(), 0) + static_cast<int>(a.size()) - 1;
}

}  // namespace

Vector scroll_point_image(const std::vector<int>& a, const ScrollPoint& p) {
  if (p.y.size() != a.size()) throw Error(ErrorCode::kInvalidArgument, "point has the wrong number of y-coordinates");
  Vector out;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (const auto& m : monomial_values(p.t, a[i])) out.push_back(m * p.y[i]);
  return out;
}

// ---------------------------------------------------------------- curves

CurveInScroll::CurveInScroll(ScrollType scroll, BinaryForm t0, BinaryForm t1, std::vector<BinaryForm> ys)
    : scroll_(std::move(scroll)), t0_(std::move(t0)), t1_(std::move(t1)), ys_(std::move(ys)) {
  auto bad = [](const std::string& why) { throw Error(ErrorCode::kInvalidArgument, "invalid curve in scroll: " + why); };
  const int k = t0_.degree(), n = scroll_.n(), d = scroll_.d();
  if (t1_.degree() != k || k < 1) bad("t0 and t1 need a common positive degree");
  if (k > d) bad("k exceeds d");
  if (ys_.size() != static_cast<std::size_t>(d)) bad("need d y-forms");
  for (int i = 0; i < d; ++i) {
    int want = n - k * scroll_.a()[static_cast<std::size_t>(i)];
    if (want < 0) bad("n - k a_i < 0");
    if (ys_[static_cast<std::size_t>(i)].degree() != want) bad("y_" + std::to_string(i + 1) + " must have degree " + std::to_string(want));
    if (ys_[static_cast<std::size_t>(i)].field() != t0_.field()) throw Error(ErrorCode::kFieldMismatch, "curve forms over different fields");
  }
  if (t0_.is_zero() && t1_.is_zero()) bad("t vanishes identically");
  if (form_gcd(t0_, t1_).degree() > 0) bad("t0 and t1 share a factor");
  bool y_zero = true;
  for (const auto& y : ys_) y_zero = y_zero && y.is_zero();
  if (y_zero || form_gcd(ys_).degree() > 0) bad("y has a base point");
}

CurveInScroll CurveInScroll::random(const ScrollType& scroll, int k, const Field& f, Rng& rng) {
  if (!dim_curves_in_scroll(scroll, k)) throw Error(ErrorCode::kEmptyFamily, "no curves of degree " + std::to_string(k) + " over P^1 in F" + scroll.to_string());
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BinaryForm t0 = random_form(f, k, rng), t1 = random_form(f, k, rng);
    std::vector<BinaryForm> ys;
    for (int ai : scroll.a()) ys.push_back(random_form(f, scroll.n() - k * ai, rng));
    try {
      return CurveInScroll(scroll, t0, t1, ys);
    } catch (const Error&) {
    }
  }
  throw Error(ErrorCode::kFieldTooSmall, "could not sample a valid curve");
}

ScrollPoint CurveInScroll::at(const P1Point& s) const {
  ScrollPoint p{{}, {t0_.evaluate(s), t1_.evaluate(s)}};
  for (const auto& y : ys_) p.y.push_back(y.evaluate(s));
  return p;
}

PushForward push_forward(const CurveInScroll& c) {
  ParametrizedCurve out;
  for (std::size_t i = 0; i < c.ys().size(); ++i) {
    const int ai = c.scroll().a()[i];
    for (int j = 0; j <= ai; ++j) out.coords.push_back(c.t0().pow(ai - j) * c.t1().pow(j) * c.ys()[i]);
  }
  std::size_t r = rank(out.coefficient_matrix());
  return {out, r, r < static_cast<std::size_t>(c.scroll().n() + 1)};
}

// ---------------------------------------------------------------- sections

void ScrollSection::validate() const {
  if (comps.size() != a.size()) throw Error(ErrorCode::kInvalidArgument, "section needs one component per y");
  for (std::size_t i = 0; i < a.size(); ++i)
    if (comps[i].degree() != a[i] + m) {
      throw Error(ErrorCode::kInvalidArgument, "component " + std::to_string(i + 1) + " must have degree " + std::to_string(a[i] + m));
    }
}

bool ScrollSection::is_zero() const {
  for (const auto& c : comps)
    if (!c.is_zero()) return false;
  return true;
}

Scalar ScrollSection::evaluate(const ScrollPoint& p) const {
  if (!p.t.is_valid() || is_zero_vector(p.y)) throw Error(ErrorCode::kInvalidArgument, "invalid scroll point");
  if (p.y.size() != comps.size()) throw Error(ErrorCode::kInvalidArgument, "point and section on different scrolls");
  Scalar s = p.y.front().field().zero();
  for (std::size_t i = 0; i < comps.size(); ++i) s += comps[i].evaluate(p.t) * p.y[i];
  return s;
}

BinaryForm ScrollSection::pull_back(const CurveInScroll& c) const {
  if (a != c.scroll().a()) throw Error(ErrorCode::kInvalidArgument, "section and curve on different scrolls");
  const Field k = c.field();
  BinaryForm acc = BinaryForm::zero(k, c.k() * m + c.scroll().n());
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].is_zero() || c.ys()[i].is_zero()) continue;
    acc += comps[i].compose(c.t0(), c.t1()) * c.ys()[i];
  }
  return acc;
}

bool ScrollSection::proportional_to(const ScrollSection& o) const {
  if (a != o.a || m != o.m) return false;
  Vector u, v;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    u.insert(u.end(), comps[i].coeffs().begin(), comps[i].coeffs().end());
    v.insert(v.end(), o.comps[i].coeffs().begin(), o.comps[i].coeffs().end());
  }
  std::size_t p = 0;
  while (p < u.size() && u[p].is_zero()) ++p;
  if (p == u.size()) return is_zero_vector(v);
  if (v[p].is_zero()) return false;
  for (std::size_t i = 0; i < u.size(); ++i)
    if (!(u[i] * v[p] == v[i] * u[p])) return false;
  return true;
}

std::string ScrollSection::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    if (comps[i].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + comps[i].to_string() + ")*y" + std::to_string(i + 1);
  }
  if (out.empty()) return "0";
  // Curve parameters in sections are the fibre coordinates t0, t1.
  for (std::size_t pos = 0; (pos = out.find("s0", pos)) != std::string::npos;) out.replace(pos, 2, "t0");
  for (std::size_t pos = 0; (pos = out.find("s1", pos)) != std::string::npos;) out.replace(pos, 2, "t1");
  return out;
}

std::vector<ScrollSection> section_basis(const Field& k, const std::vector<int>& a, int m) {
  std::vector<ScrollSection> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] + m < 0) throw Error(ErrorCode::kInvalidArgument, "negative component degree");
    for (int j = 0; j <= a[i] + m; ++j) {
      ScrollSection s{a, m, {}};
      for (std::size_t l = 0; l < a.size(); ++l) s.comps.push_back(BinaryForm::zero(k, a[l] + m));
      s.comps[i] = BinaryForm::monomial(k, a[i] + m, j);
      out.push_back(std::move(s));
    }
  }
  return out;
}

std::vector<ScrollSection> sections_through(const Field& k, const std::vector<int>& a, int m,
                                            const std::vector<ScrollPoint>& points) {
  auto basis = section_basis(k, a, m);
  Matrix sys(k, points.size(), basis.size());
  for (std::size_t r = 0; r < points.size(); ++r)
    for (std::size_t c = 0; c < basis.size(); ++c) sys(r, c) = basis[c].evaluate(points[r]);
  std::vector<ScrollSection> out;
  for (const auto& v : rank_kernel(sys).kernel) {
    ScrollSection s{a, m, {}};
    for (std::size_t l = 0; l < a.size(); ++l) s.comps.push_back(BinaryForm::zero(k, a[l] + m));
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (std::size_t l = 0; l < a.size(); ++l)
        if (!v[c].is_zero()) s.comps[l] += basis[c].comps[l].scaled(v[c]);
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<ScrollPoint> random_lifted_frame(const ScrollType& a, const Field& k, Rng& rng, bool repeat_t) {
  const int count = a.n() + 2;
  std::vector<ScrollPoint> pts;
  while (static_cast<int>(pts.size()) < count) {
    ScrollPoint p{{}, {k.random(rng), k.random(rng)}};
    for (int i = 0; i < a.d(); ++i) p.y.push_back(k.random(rng));
    if (!p.t.is_valid() || is_zero_vector(p.y)) continue;
    if (repeat_t && pts.size() == 1) {
      Scalar c = k.random_nonzero(rng);
      p.t = {pts[0].t.s0 * c, pts[0].t.s1 * c};
    } else {
      bool clash = false;
      for (const auto& q : pts) clash = clash || same_point(q.t, p.t);
      if (clash) continue;
    }
    pts.push_back(std::move(p));
  }
  return pts;
}

// ---------------------------------------------------------------- unisecant

std::string to_string(UnisecantStatus s) {
  switch (s) {
    case UnisecantStatus::kUnique: return "UNIQUE";
    case UnisecantStatus::kNone: return "NONE";
    case UnisecantStatus::kPositiveFamily: return "POSITIVE_FAMILY";
  }
  return "UNKNOWN";
}

UnisecantResult interpolate_unisecant(const ScrollType& a, const std::vector<ScrollPoint>& frame) {
  const int n = a.n(), d = a.d();
  if (frame.size() != static_cast<std::size_t>(n + 2)) throw Error(ErrorCode::kInvalidArgument, "need n+2 points");
  const Field k = frame.front().t.s0.field();
  UnisecantResult res{UnisecantStatus::kNone, std::nullopt, 0, 0, 0, ""};

  for (std::size_t i = 0; i < frame.size(); ++i) {
    if (!frame[i].t.is_valid() || is_zero_vector(frame[i].y)) throw Error(ErrorCode::kInvalidArgument, "invalid scroll point");
    for (std::size_t j = 0; j < i; ++j)
      if (same_point(frame[i].t, frame[j].t)) {
        res.reason = "points " + std::to_string(j) + " and " + std::to_string(i) + " lie on one ruling";
        return res;
      }
  }
  Frame images;
  for (const auto& p : frame) images.points.push_back(scroll_point_image(a.a(), p));
  if (auto bad = general_position_violation(images)) {
    std::string s;
    for (auto j : *bad) s += (s.empty() ? "" : ",") + std::to_string(j);
    throw Error(ErrorCode::kDependentConditions, "images of points {" + s + "} are linearly dependent");
  }

  // Unknowns: coefficients of y_i, degree n - a_i, with t the identity.
  std::vector<std::size_t> offset;
  std::size_t unknowns = 0;
  for (int ai : a.a()) {
    offset.push_back(unknowns);
    unknowns += static_cast<std::size_t>(n - ai + 1);
  }
  std::vector<Vector> rows;
  for (const auto& p : frame) {
    std::size_t piv = 0;
    while (p.y[piv].is_zero()) ++piv;
    for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
      if (i == piv) continue;
      // y_i(t_j) Y_piv - y_piv(t_j) Y_i = 0
      Vector row(unknowns, k.zero());
      auto vi = monomial_values(p.t, n - a.a()[i]);
      auto vp = monomial_values(p.t, n - a.a()[piv]);
      for (std::size_t c = 0; c < vi.size(); ++c) row[offset[i] + c] += vi[c] * p.y[piv];
      for (std::size_t c = 0; c < vp.size(); ++c) row[offset[piv] + c] -= vp[c] * p.y[i];
      rows.push_back(std::move(row));
    }
  }
  res.unknowns = unknowns;
  res.equations = rows.size();
  Matrix sys = rows.empty() ? Matrix(k, 0, unknowns) : Matrix::from_rows(k, rows);
  auto rk = rank_kernel(sys);
  res.kernel_dim = rk.kernel.size();
  if (res.kernel_dim > 1) {
    res.status = UnisecantStatus::kPositiveFamily;
    res.reason = "solutions form a family of projective dimension " + std::to_string(res.kernel_dim - 1);
    return res;
  }
  const Vector& v = rk.kernel.at(0);
  std::vector<BinaryForm> ys;
  for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
    const auto deg = static_cast<std::size_t>(n - a.a()[i]);
    ys.emplace_back(Vector(v.begin() + static_cast<std::ptrdiff_t>(offset[i]),
                           v.begin() + static_cast<std::ptrdiff_t>(offset[i] + deg + 1)));
  }
  for (std::size_t j = 0; j < frame.size(); ++j) {
    bool vanishes = true;
    for (const auto& y : ys) vanishes = vanishes && y.evaluate(frame[j].t).is_zero();
    if (vanishes) {
      res.reason = "the only solution misses point " + std::to_string(j);
      return res;
    }
  }
  try {
    res.curve.emplace(a, t0_form(k), t1_form(k), ys);
  } catch (const Error&) {
    res.reason = "the only solution has a base point";
    return res;
  }
  res.status = UnisecantStatus::kUnique;
  return res;
}

// ---------------------------------------------------------------- incidence experiment

DimensionReport incidence_dimension_estimate(const ScrollType& a, int k, int trials, std::uint64_t seed,
                                             const Field& f) {
  if (trials <= 0) throw Error(ErrorCode::kInvalidTrials, "trials must be positive");
  auto predicted = dim_curves_in_scroll(a, k);
  if (!predicted) throw Error(ErrorCode::kEmptyFamily, "F" + a.to_string() + " has no curves with k=" + std::to_string(k));
  const int n = a.n(), d = a.d();
  DimensionReport rep{"CURVES_IN_SCROLL", a, k, *predicted, std::nullopt, 5, seed, f.tag(), {}, 0};
  if (2 * d == n) rep.predicted_fk = dim_scrolls_with_curve(a, k);
  const int aut = aut_dimension(a);

  const std::size_t pts = static_cast<std::size_t>(n + 2);
  const std::size_t block = static_cast<std::size_t>(d + 2);
  std::vector<std::size_t> offset;
  std::size_t ncoef = 0;
  for (int ai : a.a()) {
    offset.push_back(ncoef);
    ncoef += static_cast<std::size_t>(n - k * ai + 1);
  }
  const std::size_t t_off = ncoef;
  ncoef += 2 * static_cast<std::size_t>(k + 1);

  Rng base(seed);
  for (int trial = 0; trial < trials; ++trial) {
    Rng rng = base.fork(static_cast<std::uint64_t>(trial));
    CurveInScroll c = CurveInScroll::random(a, k, f, rng);
    std::vector<P1Point> params;
    while (params.size() < pts) {
      P1Point s = P1Point::affine(f.random(rng));
      bool clash = false;
      for (const auto& q : params) clash = clash || same_point(q, s);
      if (!clash) params.push_back(s);
    }

    const std::size_t rows = block * pts;
    Matrix j_mat(f, rows, ncoef), d_mat(f, rows, 2 * pts), t_mat(f, rows, 2 * pts);
    for (std::size_t p = 0; p < pts; ++p) {
      const P1Point& s = params[p];
      const std::size_t r0 = p * block;
      for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
        auto mv = monomial_values(s, n - k * a.a()[i]);
        for (std::size_t c2 = 0; c2 < mv.size(); ++c2) j_mat(r0 + i, offset[i] + c2) = mv[c2];
      }
      auto tv = monomial_values(s, k);
      for (std::size_t c2 = 0; c2 < tv.size(); ++c2) {
        j_mat(r0 + d, t_off + c2) = tv[c2];
        j_mat(r0 + d + 1, t_off + tv.size() + c2) = tv[c2];
      }

      // Torus orbit directions at this point: (y, 0) and (-a_i y_i, t).
      ScrollPoint at = c.at(s);
      for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
        d_mat(r0 + i, 2 * p) = at.y[i];
        d_mat(r0 + i, 2 * p + 1) = -(f.from_int(a.a()[i]) * at.y[i]);
      }
      d_mat(r0 + d, 2 * p + 1) = at.t.s0;
      d_mat(r0 + d + 1, 2 * p + 1) = at.t.s1;

      // Moving the point along the curve.
      for (std::size_t i = 0; i < static_cast<std::size_t>(d); ++i) {
        t_mat(r0 + i, 2 * p) = c.ys()[i].derivative_s0().evaluate(s);
        t_mat(r0 + i, 2 * p + 1) = c.ys()[i].derivative_s1().evaluate(s);
      }
      t_mat(r0 + d, 2 * p) = c.t0().derivative_s0().evaluate(s);
      t_mat(r0 + d, 2 * p + 1) = c.t0().derivative_s1().evaluate(s);
      t_mat(r0 + d + 1, 2 * p) = c.t1().derivative_s0().evaluate(s);
      t_mat(r0 + d + 1, 2 * p + 1) = c.t1().derivative_s1().evaluate(s);
    }

    IncidenceTrial tr{};
    tr.rank_torus = rank(d_mat);
    tr.rank_orbit = rank(j_mat.hstack(d_mat));
    tr.rank_incidence = rank(j_mat.hstack(t_mat).hstack(d_mat));
    tr.raw_image = static_cast<int>(tr.rank_orbit) - static_cast<int>(tr.rank_torus);
    // The remaining 3 of the 5-dimensional group: reparametrizations of P^1.
    tr.measured_family = tr.raw_image - 3;
    tr.incidence_image = static_cast<int>(tr.rank_incidence) - static_cast<int>(tr.rank_torus);
    tr.fiber = tr.measured_family + n + 2 - tr.incidence_image;
    if (rep.predicted_fk) tr.measured_fk = tr.incidence_image - (aut + 2);
    tr.matches = tr.measured_family == rep.predicted && tr.measured_fk == rep.predicted_fk;
    if (tr.matches) ++rep.matches;
    rep.trials.push_back(tr);
  }
  return rep;
}

// ---------------------------------------------------------------- degeneration

void ScrollEmbedding::validate() const {
  if (source.size() != target_a.size() || mult.size() != target_a.size()) {
    throw Error(ErrorCode::kInvalidArgument, "embedding needs one (source, multiplier) per target coordinate");
  }
  for (std::size_t j = 0; j < target_a.size(); ++j) {
    if (source[j] >= source_a.size()) throw Error(ErrorCode::kInvalidArgument, "embedding source index out of range");
    if (mult[j].degree() != source_a[source[j]] - target_a[j]) {
      throw Error(ErrorCode::kInvalidArgument, "embedding multiplier " + std::to_string(j) + " has the wrong degree");
    }
  }
}

ScrollPoint ScrollEmbedding::apply(const ScrollPoint& p) const {
  ScrollPoint q{{}, p.t};
  for (std::size_t j = 0; j < target_a.size(); ++j) q.y.push_back(mult[j].evaluate(p.t) * p.y[source[j]]);
  return q;
}

ScrollSection ScrollEmbedding::pull_back(const ScrollSection& s) const {
  if (s.a != target_a) throw Error(ErrorCode::kInvalidArgument, "section is not on the embedding's target");
  const Field k = mult.front().field();
  ScrollSection out{source_a, s.m, {}};
  for (int ai : source_a) out.comps.push_back(BinaryForm::zero(k, ai + s.m));
  for (std::size_t j = 0; j < target_a.size(); ++j) out.comps[source[j]] += s.comps[j] * mult[j];
  return out;
}

Degeneration make_degeneration(const std::vector<int>& a, std::optional<std::size_t> donor,
                               std::optional<std::size_t> recipient) {
  const std::size_t d = a.size();
  if (d < 2) throw Error(ErrorCode::kInvalidArgument, "the degeneration needs d >= 2");
  for (int x : a)
    if (x < 0) throw Error(ErrorCode::kInvalidArgument, "negative entry in multi-index");
  std::size_t dn = 0;
  if (donor) {
    dn = *donor;
  } else {
    while (dn < d && a[dn] < 1) ++dn;
  }
  std::size_t rc = recipient.value_or(d - 1);
  if (dn >= d || rc >= d) throw Error(ErrorCode::kInvalidArgument, "donor or recipient index out of range");
  if (a[dn] < 1) throw Error(ErrorCode::kInvalidArgument, "donor entry a_" + std::to_string(dn + 1) + " must be at least 1");
  if (dn == rc) throw Error(ErrorCode::kInvalidArgument, "donor and recipient coincide");
  Degeneration g{a, dn, rc, a, ambient_of(a) + 1};
  g.aux[dn] -= 1;
  g.aux.push_back(1);
  return g;
}

ScrollSection degeneration_member(const Degeneration& g, const Scalar& lambda) {
  const Field k = lambda.field();
  const std::size_t d = g.a.size();
  ScrollSection s{g.aux, 0, {}};
  for (int x : g.aux) s.comps.push_back(BinaryForm::zero(k, x));
  s.comps[d] = t0_form(k);
  s.comps[g.donor] -= BinaryForm::monomial(k, g.aux[g.donor], g.aux[g.donor]).scaled(lambda);
  s.comps[g.recipient] -= BinaryForm::monomial(k, g.aux[g.recipient], g.aux[g.recipient]);
  return s;
}

ScrollEmbedding degeneration_phi1(const Degeneration& g, const Field& k) {
  const std::size_t d = g.a.size();
  ScrollEmbedding e{g.a, g.aux, {}, {}};
  for (std::size_t j = 0; j < d; ++j) {
    e.source.push_back(j);
    e.mult.push_back(j == g.donor ? t0_form(k) : BinaryForm::constant(k.one()));
  }
  e.source.push_back(g.donor);
  e.mult.push_back(BinaryForm::monomial(k, g.a[g.donor] - 1, g.a[g.donor] - 1));
  e.validate();
  return e;
}

ScrollEmbedding degeneration_phi2(const Degeneration& g, const Field& k) {
  const std::size_t d = g.a.size();
  std::vector<int> src = g.a;
  src[g.donor] -= 1;
  src[g.recipient] += 1;
  ScrollEmbedding e{src, g.aux, {}, {}};
  for (std::size_t j = 0; j < d; ++j) {
    e.source.push_back(j);
    e.mult.push_back(j == g.recipient ? t0_form(k) : BinaryForm::constant(k.one()));
  }
  e.source.push_back(g.recipient);
  e.mult.push_back(BinaryForm::monomial(k, g.a[g.recipient], g.a[g.recipient]));
  e.validate();
  return e;
}

ScrollSection degeneration_phi1_section(const Degeneration& g, const Field& k) {
  const std::size_t d = g.a.size();
  ScrollSection s{g.aux, 0, {}};
  for (int x : g.aux) s.comps.push_back(BinaryForm::zero(k, x));
  s.comps[d] = t0_form(k);
  s.comps[g.donor] -= BinaryForm::monomial(k, g.aux[g.donor], g.aux[g.donor]);
  return s;
}

bool degeneration_equivalence_check(const Degeneration& g, const Scalar& lambda) {
  if (lambda.is_zero()) throw Error(ErrorCode::kInvalidArgument, "lambda must be nonzero");
  const Field k = lambda.field();
  ScrollSection one = degeneration_member(g, k.one());
  // Substituting y_donor -> lambda y_donor scales that component.
  one.comps[g.donor] = one.comps[g.donor].scaled(lambda);
  return one.proportional_to(degeneration_member(g, lambda));
}

}  // namespace scrollkit

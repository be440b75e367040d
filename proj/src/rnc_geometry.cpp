#include "scrollkit/rnc_geometry.hpp"

#include "scrollkit/error.hpp"
#include "scrollkit/rng.hpp"

namespace scrollkit {

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "{";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + "}";
}

BinaryForm s1_form(const Field& k) { return BinaryForm::linear(k.zero(), k.one()); }

// s0 - a s1
BinaryForm node_factor(const Scalar& a) { return BinaryForm::linear(a.field().one(), -a); }

}  // namespace

// ---------------------------------------------------------------- frames

Frame Frame::standard(const Field& k, int n) {
  Frame f;
  for (int j = 0; j <= n; ++j) {
    Vector e(static_cast<std::size_t>(n + 1), k.zero());
    e[static_cast<std::size_t>(j)] = k.one();
    f.points.push_back(std::move(e));
  }
  f.points.emplace_back(static_cast<std::size_t>(n + 1), k.one());
  return f;
}

Frame Frame::random(const Field& k, int n, Rng& rng) {
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Frame f;
    for (int j = 0; j < n + 2; ++j) {
      Vector p;
      for (int i = 0; i <= n; ++i) p.push_back(k.random(rng));
      f.points.push_back(std::move(p));
    }
    if (!general_position_violation(f)) return f;
  }
  throw Error(ErrorCode::kFieldTooSmall, "could not sample a frame in general position");
}

std::optional<std::vector<std::size_t>> general_position_violation(const Frame& f) {
  const std::size_t m = f.points.size();
  for (std::size_t skip = m; skip-- > 0;) {
    std::vector<Vector> cols;
    std::vector<std::size_t> subset;
    for (std::size_t j = 0; j < m; ++j) {
      if (j == skip) continue;
      cols.push_back(f.points[j]);
      subset.push_back(j);
    }
    if (rank(Matrix::from_rows(f.field(), cols)) < m - 1) return subset;
  }
  return std::nullopt;
}

Matrix frame_transform(const Frame& f) {
  const Field k = f.field();
  const std::size_t m = static_cast<std::size_t>(f.n()) + 1;
  if (f.points.size() != m + 1) throw Error(ErrorCode::kInvalidArgument, "a frame of P^n has n+2 points");
  if (auto bad = general_position_violation(f)) {
    throw Error(ErrorCode::kDegenerate, "frame points " + join(*bad) + " are linearly dependent");
  }
  Matrix a(k, m, m);
  for (std::size_t j = 0; j < m; ++j)
    for (std::size_t i = 0; i < m; ++i) a(i, j) = f.points[j][i];
  auto lambda = solve(a, f.points[m]);
  if (!lambda) throw Error(ErrorCode::kInternal, "frame system inconsistent after general position check");
  for (std::size_t j = 0; j < m; ++j) {
    if ((*lambda)[j].is_zero()) throw Error(ErrorCode::kInternal, "zero frame scaling after general position check");
    for (std::size_t i = 0; i < m; ++i) a(i, j) *= (*lambda)[j];
  }
  auto t = inverse(a);
  if (!t) throw Error(ErrorCode::kInternal, "frame matrix not invertible");
  Scalar lead = k.zero();
  for (std::size_t i = 0; i < m * m && lead.is_zero(); ++i) lead = (*t)(i / m, i % m);
  Scalar inv = lead.inverse();
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t c = 0; c < m; ++c) (*t)(r, c) *= inv;
  return *t;
}

// ---------------------------------------------------------------- parametrized curves

Vector ParametrizedCurve::evaluate(const P1Point& s) const {
  Vector v;
  for (const auto& x : coords) v.push_back(x.evaluate(s));
  return v;
}

Matrix ParametrizedCurve::coefficient_matrix() const {
  Matrix m(field(), coords.size(), static_cast<std::size_t>(degree()) + 1);
  for (std::size_t i = 0; i < coords.size(); ++i)
    for (int j = 0; j <= degree(); ++j) m(i, static_cast<std::size_t>(j)) = coords[i][j];
  return m;
}

bool ParametrizedCurve::nondegenerate() const { return rank(coefficient_matrix()) == coords.size(); }

ParametrizedCurve ParametrizedCurve::reparametrized(const Matrix& m) const {
  BinaryForm t0 = BinaryForm::linear(m(0, 0), m(0, 1));
  BinaryForm t1 = BinaryForm::linear(m(1, 0), m(1, 1));
  ParametrizedCurve out;
  for (const auto& x : coords) out.coords.push_back(x.compose(t0, t1));
  return out;
}

ParametrizedCurve ParametrizedCurve::transformed(const Matrix& t) const {
  if (t.cols() != coords.size()) throw Error(ErrorCode::kInvalidArgument, "transform size mismatch");
  ParametrizedCurve out;
  for (std::size_t r = 0; r < t.rows(); ++r) {
    BinaryForm acc = BinaryForm::zero(field(), degree());
    for (std::size_t c = 0; c < coords.size(); ++c)
      if (!t(r, c).is_zero()) acc += coords[c].scaled(t(r, c));
    out.coords.push_back(std::move(acc));
  }
  return out;
}

std::optional<std::vector<P1Point>> frame_parameters(const ParametrizedCurve& c) {
  const int n = c.ambient();
  if (form_gcd(c.coords).degree() > 0) throw Error(ErrorCode::kDegenerate, "coordinates share a common factor");
  std::vector<P1Point> out;
  auto root_of = [&](const std::vector<BinaryForm>& forms) -> std::optional<P1Point> {
    BinaryForm g = form_gcd(forms);
    if (g.degree() == 0) return std::nullopt;
    if (g.degree() > 1) throw Error(ErrorCode::kDegenerate, "curve passes through a frame point more than once");
    return root_of_linear(g);
  };
  for (int j = 0; j <= n; ++j) {
    std::vector<BinaryForm> others;
    for (int i = 0; i <= n; ++i)
      if (i != j) others.push_back(c.coords[static_cast<std::size_t>(i)]);
    auto p = root_of(others);
    if (!p) return std::nullopt;
    out.push_back(*p);
  }
  std::vector<BinaryForm> diffs;
  for (int i = 1; i <= n; ++i) diffs.push_back(c.coords[static_cast<std::size_t>(i)] - c.coords[0]);
  auto u = root_of(diffs);
  if (!u) return std::nullopt;
  out.push_back(*u);
  return out;
}

// ---------------------------------------------------------------- standard RNC

StandardRNC::StandardRNC(const Field& k, std::vector<Scalar> params) : field_(k), params_(std::move(params)) {
  if (params_.empty()) throw Error(ErrorCode::kInvalidArgument, "a rational normal curve needs n >= 2");
  auto nd = nodes();
  for (std::size_t i = 0; i < nd.size(); ++i) {
    if (nd[i].field() != k) throw Error(ErrorCode::kFieldMismatch, "curve parameter from another field");
    for (std::size_t j = 0; j < i; ++j)
      if (nd[i] == nd[j]) throw Error(ErrorCode::kInvalidArgument, "curve nodes must be distinct (repeated " + nd[i].to_string() + ")");
  }
}

StandardRNC StandardRNC::random(const Field& k, int n, Rng& rng) {
  for (;;) {
    std::vector<Scalar> p;
    for (int i = 2; i <= n; ++i) p.push_back(k.random(rng));
    try {
      return StandardRNC(k, p);
    } catch (const Error&) {
    }
  }
}

std::vector<Scalar> StandardRNC::nodes() const {
  std::vector<Scalar> v{field_.zero(), field_.one()};
  v.insert(v.end(), params_.begin(), params_.end());
  return v;
}

P1Point StandardRNC::frame_parameter(int j) const {
  if (j < 0 || j > n() + 1) throw Error(ErrorCode::kInvalidArgument, "frame index out of range");
  if (j == n() + 1) return P1Point::infinity(field_);
  return P1Point::affine(nodes()[static_cast<std::size_t>(j)]);
}

ParametrizedCurve StandardRNC::curve() const {
  auto nd = nodes();
  ParametrizedCurve c;
  for (std::size_t j = 0; j < nd.size(); ++j) {
    BinaryForm x = BinaryForm::constant(field_.one());
    for (std::size_t i = 0; i < nd.size(); ++i)
      if (i != j) x = x * node_factor(nd[i]);
    c.coords.push_back(std::move(x));
  }
  return c;
}

Vector StandardRNC::evaluate(const P1Point& s) const { return curve().evaluate(s); }

Matrix standardizing_mobius(const P1Point& p0, const P1Point& p1, const P1Point& p_inf) {
  // M(s) = (det(s,p0) det(p1,p_inf) : det(s,p_inf) det(p1,p0)), det(s,p) = s0 p.s1 - s1 p.s0.
  Scalar c0 = cross(p1, p_inf), c1 = cross(p1, p0);
  if (c0.is_zero() || c1.is_zero() || cross(p0, p_inf).is_zero()) {
    throw Error(ErrorCode::kDegenerate, "Moebius normalization needs three distinct points");
  }
  Matrix m(p0.s0.field(), 2, 2);
  m(0, 0) = c0 * p0.s1;
  m(0, 1) = -(c0 * p0.s0);
  m(1, 0) = c1 * p_inf.s1;
  m(1, 1) = -(c1 * p_inf.s0);
  return m;
}

P1Point apply_mobius(const Matrix& m, const P1Point& s) {
  return {m(0, 0) * s.s0 + m(0, 1) * s.s1, m(1, 0) * s.s0 + m(1, 1) * s.s1};
}

StandardRNC standardize(const ParametrizedCurve& c) {
  const int n = c.ambient();
  if (c.degree() != n) throw Error(ErrorCode::kDegenerate, "expected a curve of degree n in P^n");
  auto params = frame_parameters(c);
  if (!params) throw Error(ErrorCode::kNotThroughFrame, "curve misses a point of the standard frame");
  const auto& p = *params;
  Matrix m = standardizing_mobius(p[0], p[1], p[static_cast<std::size_t>(n + 1)]);
  std::vector<Scalar> a;
  for (int j = 2; j <= n; ++j) {
    auto v = apply_mobius(m, p[static_cast<std::size_t>(j)]).affine_value();
    if (!v) throw Error(ErrorCode::kDegenerate, "frame parameters collide");
    a.push_back(*v);
  }
  StandardRNC out(c.field(), a);

  // Sanity check: c(M^{-1} u) must be a common multiple of the standard coordinates.
  auto minv = inverse(m);
  ParametrizedCurve back = c.reparametrized(*minv);
  ParametrizedCurve ref = out.curve();
  std::optional<Scalar> ratio;
  for (std::size_t j = 0; j < ref.coords.size(); ++j) {
    const Scalar& lead = ref.coords[j][0];
    Scalar r = back.coords[j][0] / lead;
    if (ratio && !(r == *ratio)) throw Error(ErrorCode::kDegenerate, "curve is not the rational normal curve of its frame");
    ratio = r;
    if (!(back.coords[j] == ref.coords[j].scaled(r))) {
      throw Error(ErrorCode::kDegenerate, "curve is not the rational normal curve of its frame");
    }
  }
  return out;
}

// ---------------------------------------------------------------- quadrics

Quadric::Quadric(Matrix gram) : gram_(std::move(gram)) {
  if (gram_.rows() != gram_.cols()) throw Error(ErrorCode::kInvalidArgument, "Gram matrix must be square");
  if (!(gram_ == gram_.transpose())) throw Error(ErrorCode::kInvalidArgument, "Gram matrix must be symmetric");
}

Quadric Quadric::from_monomials(const Field& k, int n, const std::vector<std::pair<std::pair<int, int>, Scalar>>& terms) {
  Matrix g(k, static_cast<std::size_t>(n + 1), static_cast<std::size_t>(n + 1));
  const Scalar half = k.from_ratio(1, 2);
  for (const auto& [ij, c] : terms) {
    auto [i, j] = ij;
    if (i < 0 || j < 0 || i > n || j > n) throw Error(ErrorCode::kInvalidArgument, "monomial index out of range");
    auto ui = static_cast<std::size_t>(i), uj = static_cast<std::size_t>(j);
    if (i == j) {
      g(ui, ui) += c;
    } else {
      g(ui, uj) += c * half;
      g(uj, ui) += c * half;
    }
  }
  return Quadric(g);
}

Scalar Quadric::evaluate(std::span<const Scalar> x) const {
  Vector gx = gram_.apply(x);
  Scalar s = field().zero();
  for (std::size_t i = 0; i < gx.size(); ++i) s += x[i] * gx[i];
  return s;
}

BinaryForm Quadric::compose(const ParametrizedCurve& c) const {
  const std::size_t m = gram_.rows();
  if (c.coords.size() != m) throw Error(ErrorCode::kInvalidArgument, "curve and quadric live in different spaces");
  const Field k = field();
  const Scalar two = k.from_int(2);
  BinaryForm acc = BinaryForm::zero(k, 2 * c.degree());
  for (std::size_t i = 0; i < m; ++i) {
    if (!gram_(i, i).is_zero()) acc += (c.coords[i] * c.coords[i]).scaled(gram_(i, i));
    for (std::size_t j = i + 1; j < m; ++j)
      if (!gram_(i, j).is_zero()) acc += (c.coords[i] * c.coords[j]).scaled(gram_(i, j) * two);
  }
  return acc;
}

std::vector<std::size_t> Quadric::frame_violations() const {
  std::vector<std::size_t> bad;
  const std::size_t m = gram_.rows();
  Scalar total = field().zero();
  for (std::size_t i = 0; i < m; ++i) {
    if (!gram_(i, i).is_zero()) bad.push_back(i);
    for (std::size_t j = 0; j < m; ++j) total += gram_(i, j);
  }
  if (!total.is_zero()) bad.push_back(m);
  return bad;
}

std::vector<std::size_t> Quadric::singular_frame_points() const {
  std::vector<std::size_t> out;
  Frame f = Frame::standard(field(), n());
  for (std::size_t j = 0; j < f.points.size(); ++j)
    if (is_zero_vector(gram_.apply(f.points[j]))) out.push_back(j);
  return out;
}

namespace {

Matrix symmetric_product(const Vector& l1, const Vector& l2) {
  const Field k = l1.front().field();
  const Scalar half = k.from_ratio(1, 2);
  Matrix g(k, l1.size(), l1.size());
  for (std::size_t i = 0; i < l1.size(); ++i)
    for (std::size_t j = 0; j < l1.size(); ++j) g(i, j) = (l1[i] * l2[j] + l2[i] * l1[j]) * half;
  return g;
}

Matrix matrix_sub(Matrix a, const Matrix& b) {
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) a(i, j) -= b(i, j);
  return a;
}

Vector random_vector(const Field& k, std::size_t m, Rng& rng) {
  Vector v;
  for (std::size_t i = 0; i < m; ++i) v.push_back(k.random(rng));
  return v;
}

std::optional<Quadric> try_rank4(const Field& k, int n, Rng& rng) {
  // q = L1 L2 - L3 L4 with L1, L3 random; vanishing on the frame is linear in (L2, L4).
  const std::size_t m = static_cast<std::size_t>(n + 1);
  Vector l1 = random_vector(k, m, rng), l3 = random_vector(k, m, rng);
  Matrix sys(k, m + 1, 2 * m);
  Scalar s1 = k.zero(), s3 = k.zero();
  for (std::size_t j = 0; j < m; ++j) {
    sys(j, j) = l1[j];
    sys(j, m + j) = -l3[j];
    s1 += l1[j];
    s3 += l3[j];
  }
  for (std::size_t j = 0; j < m; ++j) {
    sys(m, j) = s1;
    sys(m, m + j) = -s3;
  }
  auto rk = rank_kernel(sys);
  Vector coeffs = random_vector(k, rk.kernel.size(), rng);
  Vector sol = linear_combination(rk.kernel, coeffs);
  Vector l2(sol.begin(), sol.begin() + static_cast<std::ptrdiff_t>(m));
  Vector l4(sol.begin() + static_cast<std::ptrdiff_t>(m), sol.end());
  Quadric q(matrix_sub(symmetric_product(l1, l2), symmetric_product(l3, l4)));
  if (q.rank() != 4) return std::nullopt;
  return q;
}

std::optional<Quadric> try_rank3(const Field& k, int n, Rng& rng) {
  // q = L1 L2 - L3^2 with L1 = c u^2, L2 = c v^2, L3 = c u v coordinatewise. Then
  // q(e_j) = 0 for free, and q(1,...,1) = 0 is linear in c_n.
  const std::size_t m = static_cast<std::size_t>(n + 1);
  Vector u = random_vector(k, m, rng), v = random_vector(k, m, rng), c = random_vector(k, m, rng);
  Scalar a = k.zero(), b = k.zero(), x = k.zero();
  for (std::size_t j = 0; j + 1 < m; ++j) {
    a += c[j] * u[j] * u[j];
    b += c[j] * v[j] * v[j];
    x += c[j] * u[j] * v[j];
  }
  const Scalar& un = u[m - 1];
  const Scalar& vn = v[m - 1];
  Scalar den = a * vn * vn + b * un * un - k.from_int(2) * x * un * vn;
  if (den.is_zero()) return std::nullopt;
  c[m - 1] = (x * x - a * b) / den;
  Vector l1, l2, l3;
  for (std::size_t j = 0; j < m; ++j) {
    l1.push_back(c[j] * u[j] * u[j]);
    l2.push_back(c[j] * v[j] * v[j]);
    l3.push_back(c[j] * u[j] * v[j]);
  }
  Quadric q(matrix_sub(symmetric_product(l1, l2), symmetric_product(l3, l3)));
  if (q.rank() != 3) return std::nullopt;
  return q;
}

}  // namespace

Quadric random_quadric_through_frame(const Field& k, int n, int rank, Rng& rng) {
  if (rank != 3 && rank != 4) throw Error(ErrorCode::kInvalidArgument, "only ranks 3 and 4 are sampled");
  if (n + 1 < rank) throw Error(ErrorCode::kInvalidArgument, "rank exceeds n+1");
  for (int attempt = 0; attempt < 200; ++attempt) {
    auto q = rank == 4 ? try_rank4(k, n, rng) : try_rank3(k, n, rng);
    if (q && q->through_standard_frame() && q->singular_frame_points().empty()) return *q;
  }
  throw Error(ErrorCode::kFieldTooSmall, "no suitable quadric found; the field may be too small");
}

// ---------------------------------------------------------------- residual polynomial

BinaryForm frame_vanishing_form(const StandardRNC& c) {
  BinaryForm f = s1_form(c.field());
  for (const auto& a : c.nodes()) f = f * node_factor(a);
  return f;
}

namespace {

void check_residual_inputs(const Quadric& q, const StandardRNC& c) {
  if (q.n() != c.n()) throw Error(ErrorCode::kInvalidArgument, "quadric and curve live in different spaces");
  if (q.field() != c.field()) throw Error(ErrorCode::kFieldMismatch, "quadric and curve over different fields");
  if (q.is_zero()) throw Error(ErrorCode::kZeroQuadric, "the zero quadric contains everything");
  auto bad = q.frame_violations();
  if (!bad.empty()) throw Error(ErrorCode::kNotThroughFrame, "quadric does not vanish at frame points " + join(bad));
}

}  // namespace

BinaryForm residual_polynomial(const Quadric& q, const StandardRNC& c) {
  check_residual_inputs(q, c);
  auto p = try_divide_exact(q.compose(c.curve()), frame_vanishing_form(c));
  if (!p) throw Error(ErrorCode::kInternal, "q o phi is not divisible by the frame factor");
  return *p;
}

FinitenessCheck rnc_finiteness_rank(const Quadric& q, const StandardRNC& c) {
  BinaryForm p = residual_polynomial(q, c);
  const Field k = c.field();
  const int n = c.n();
  auto nodes = c.nodes();
  ParametrizedCurve x = c.curve();
  BinaryForm big_n = frame_vanishing_form(c);
  BinaryForm s1 = s1_form(k);
  const std::size_t m = static_cast<std::size_t>(n + 1);

  // G X, coordinatewise, reused for every column.
  std::vector<BinaryForm> gx;
  for (std::size_t r = 0; r < m; ++r) {
    BinaryForm acc = BinaryForm::zero(k, n);
    for (std::size_t j = 0; j < m; ++j)
      if (!q.gram()(r, j).is_zero()) acc += x.coords[j].scaled(q.gram()(r, j));
    gx.push_back(std::move(acc));
  }

  Matrix jac(k, static_cast<std::size_t>(n - 1), static_cast<std::size_t>(n - 1));
  for (std::size_t i = 2; i < m; ++i) {
    // d X_j / d a_i = -s1 prod_{l != j, i} (s0 - a_l s1) for j != i.
    BinaryForm dq = BinaryForm::zero(k, 2 * n);
    for (std::size_t j = 0; j < m; ++j) {
      if (j == i) continue;
      BinaryForm dx = -s1;
      for (std::size_t l = 0; l < m; ++l)
        if (l != j && l != i) dx = dx * node_factor(nodes[l]);
      dq += gx[j] * dx;
    }
    dq = dq.scaled(k.from_int(2));
    // d N / d a_i = -s1 * N / (s0 - a_i s1)
    BinaryForm dn = -(s1 * s1);
    for (std::size_t l = 0; l < m; ++l)
      if (l != i) dn = dn * node_factor(nodes[l]);
    auto dp = try_divide_exact(dq - dn * p, big_n);
    if (!dp) throw Error(ErrorCode::kInternal, "derivative of the residual is not polynomial");
    for (int r = 0; r <= n - 2; ++r) jac(static_cast<std::size_t>(r), i - 2) = (*dp)[r];
  }
  std::size_t r = rank(jac);
  return {jac, r, r < static_cast<std::size_t>(n - 1)};
}

// ---------------------------------------------------------------- projection

ParametrizedCurve project_from_frame_point(const ParametrizedCurve& c, int j) {
  const int n = c.ambient();
  if (j < 0 || j > n + 1) throw Error(ErrorCode::kInvalidArgument, "frame index out of range");
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "cannot project a curve in P^" + std::to_string(n));
  std::vector<BinaryForm> img;
  if (j <= n) {
    for (int i = 0; i <= n; ++i)
      if (i != j) img.push_back(c.coords[static_cast<std::size_t>(i)]);
  } else {
    // From (1:...:1): x_i - x_n. The old e_n becomes the new unit point.
    for (int i = 0; i < n; ++i) img.push_back(c.coords[static_cast<std::size_t>(i)] - c.coords[static_cast<std::size_t>(n)]);
  }
  BinaryForm g = form_gcd(img);
  if (g.degree() == 0) {
    throw Error(ErrorCode::kCenterNotOnCurve, "frame point " + std::to_string(j) + " is not on the curve");
  }
  ParametrizedCurve out;
  for (const auto& f : img) out.coords.push_back(form_divide_exact(f, g));
  return out;
}

StandardRNC project_from_frame_point(const StandardRNC& c, int j) {
  if (c.n() < 3) throw Error(ErrorCode::kInvalidArgument, "projection of a conic is a line");
  return standardize(project_from_frame_point(c.curve(), j));
}

}  // namespace scrollkit

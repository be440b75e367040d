#include "scrollkit/binary_form.hpp"

#include <algorithm>

namespace scrollkit {

std::optional<Scalar> P1Point::affine_value() const {
  if (s1.is_zero()) return std::nullopt;
  return s0 / s1;
}

Scalar cross(const P1Point& a, const P1Point& b) { return a.s0 * b.s1 - a.s1 * b.s0; }

bool same_point(const P1Point& a, const P1Point& b) { return cross(a, b).is_zero(); }

// ---------------------------------------------------------------- construction

BinaryForm::BinaryForm(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) throw Error(ErrorCode::kInvalidArgument, "a binary form needs at least one coefficient");
  const Field k = coeffs_.front().field();
  for (const auto& c : coeffs_) {
    if (c.field() != k) throw Error(ErrorCode::kFieldMismatch, "coefficients from different fields");
  }
}

BinaryForm BinaryForm::zero(const Field& k, int degree) {
  if (degree < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree");
  return BinaryForm(std::vector<Scalar>(static_cast<std::size_t>(degree) + 1, k.zero()));
}

BinaryForm BinaryForm::constant(const Scalar& c) { return BinaryForm(std::vector<Scalar>{c}); }

BinaryForm BinaryForm::monomial(const Field& k, int degree, int j) {
  if (j < 0 || j > degree) throw Error(ErrorCode::kInvalidArgument, "monomial index out of range");
  BinaryForm f = zero(k, degree);
  f.coeffs_[static_cast<std::size_t>(j)] = k.one();
  return f;
}

BinaryForm BinaryForm::linear(const Scalar& a, const Scalar& b) { return BinaryForm(std::vector<Scalar>{a, b}); }

BinaryForm BinaryForm::vanishing_at(const P1Point& p) { return linear(p.s1, -p.s0); }

BinaryForm BinaryForm::from_ints(const Field& k, const std::vector<long>& coeffs) {
  std::vector<Scalar> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.push_back(k.from_int(v));
  return BinaryForm(std::move(c));
}

// ---------------------------------------------------------------- queries

bool BinaryForm::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c.is_zero(); });
}

int BinaryForm::s1_valuation() const {
  int v = 0;
  while (v <= degree() && coeffs_[static_cast<std::size_t>(v)].is_zero()) ++v;
  return v;
}

int BinaryForm::s0_valuation() const {
  int v = 0;
  while (v <= degree() && coeffs_[static_cast<std::size_t>(degree() - v)].is_zero()) ++v;
  return v;
}

Scalar BinaryForm::evaluate(const Scalar& s0, const Scalar& s1) const {
  // Horner in both variables: sum c_j s0^(d-j) s1^j.
  Scalar acc = coeffs_.front();
  Scalar s1_pow = s1.field().one();
  for (std::size_t j = 1; j < coeffs_.size(); ++j) {
    s1_pow *= s1;
    acc = acc * s0 + coeffs_[j] * s1_pow;
  }
  return acc;
}

// ---------------------------------------------------------------- arithmetic

BinaryForm BinaryForm::operator-() const {
  BinaryForm r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

BinaryForm& BinaryForm::operator+=(const BinaryForm& o) {
  if (o.degree() != degree()) throw Error(ErrorCode::kInvalidArgument, "adding forms of different degree");
  for (std::size_t j = 0; j < coeffs_.size(); ++j) coeffs_[j] += o.coeffs_[j];
  return *this;
}

BinaryForm& BinaryForm::operator-=(const BinaryForm& o) { return *this += -o; }

BinaryForm operator*(const BinaryForm& a, const BinaryForm& b) {
  if (a.field() != b.field()) throw Error(ErrorCode::kFieldMismatch, "multiplying forms over different fields");
  BinaryForm r = BinaryForm::zero(a.field(), a.degree() + b.degree());
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) r.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return r;
}

bool operator==(const BinaryForm& a, const BinaryForm& b) {
  return a.degree() == b.degree() && std::equal(a.coeffs_.begin(), a.coeffs_.end(), b.coeffs_.begin());
}

BinaryForm BinaryForm::scaled(const Scalar& c) const {
  BinaryForm r = *this;
  for (auto& x : r.coeffs_) x *= c;
  return r;
}

BinaryForm BinaryForm::pow(int e) const {
  if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative power");
  BinaryForm r = constant(field().one());
  for (int i = 0; i < e; ++i) r = r * *this;
  return r;
}

BinaryForm BinaryForm::derivative_s0() const {
  const Field k = field();
  if (degree() == 0) return zero(k, 0);
  std::vector<Scalar> c;
  for (int j = 0; j < degree(); ++j) c.push_back(coeffs_[static_cast<std::size_t>(j)] * k.from_int(degree() - j));
  return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::derivative_s1() const {
  const Field k = field();
  if (degree() == 0) return zero(k, 0);
  std::vector<Scalar> c;
  for (int j = 1; j <= degree(); ++j) c.push_back(coeffs_[static_cast<std::size_t>(j)] * k.from_int(j));
  return BinaryForm(std::move(c));
}

BinaryForm BinaryForm::compose(const BinaryForm& t0, const BinaryForm& t1) const {
  if (t0.degree() != t1.degree()) throw Error(ErrorCode::kInvalidArgument, "compose needs t0, t1 of equal degree");
  const int d = degree();
  std::vector<BinaryForm> p0{constant(field().one())}, p1{constant(field().one())};
  for (int i = 1; i <= d; ++i) {
    p0.push_back(p0.back() * t0);
    p1.push_back(p1.back() * t1);
  }
  BinaryForm r = zero(field(), d * t0.degree());
  for (int j = 0; j <= d; ++j) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    r += (p0[static_cast<std::size_t>(d - j)] * p1[static_cast<std::size_t>(j)]).scaled(c);
  }
  return r;
}

BinaryForm BinaryForm::monic() const {
  int v = s1_valuation();
  if (v > degree()) return *this;
  return scaled(coeffs_[static_cast<std::size_t>(v)].inverse());
}

bool BinaryForm::proportional_to(const BinaryForm& o) const {
  if (degree() != o.degree()) return false;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = i + 1; j < coeffs_.size(); ++j) {
      if (!(coeffs_[i] * o.coeffs_[j] - coeffs_[j] * o.coeffs_[i]).is_zero()) return false;
    }
  }
  return true;
}

std::string BinaryForm::to_string() const {
  std::string out;
  const int d = degree();
  for (int j = 0; j <= d; ++j) {
    const Scalar& c = coeffs_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    std::string coef = c.to_string();
    bool negative = c.is_rational() && sgn(c.rational()) < 0;
    if (negative) coef = (-c).to_string();
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    std::string mono;
    auto power = [](const char* var, int e) {
      return e == 1 ? std::string(var) : std::string(var) + "^" + std::to_string(e);
    };
    if (d - j > 0) mono = power("s0", d - j);
    if (j > 0) mono += (mono.empty() ? "" : "*") + power("s1", j);
    if (mono.empty()) {
      out += coef;
    } else if (coef == "1") {
      out += mono;
    } else {
      out += coef + "*" + mono;
    }
  }
  return out.empty() ? "0" : out;
}

std::vector<std::string> BinaryForm::serialize() const {
  std::vector<std::string> out;
  for (const auto& c : coeffs_) out.push_back(c.to_string());
  return out;
}

// ---------------------------------------------------------------- division and gcd

BinaryForm form_mul(const BinaryForm& f, const BinaryForm& g) { return f * g; }

std::optional<BinaryForm> try_divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (g.is_zero()) throw Error(ErrorCode::kZeroDivisor, "division by the zero form");
  if (f.field() != g.field()) throw Error(ErrorCode::kFieldMismatch, "dividing forms over different fields");
  const int m = f.degree();
  const int e = g.degree();
  if (e > m) return std::nullopt;
  const int v = g.s1_valuation();
  const Scalar lead_inv = g[v].inverse();
  std::vector<Scalar> q;
  q.reserve(static_cast<std::size_t>(m - e) + 1);
  for (int j = 0; j <= m - e; ++j) {
    Scalar acc = f[j + v];
    for (int i = 1; i <= std::min(j, e - v); ++i) acc -= g[v + i] * q[static_cast<std::size_t>(j - i)];
    q.push_back(acc * lead_inv);
  }
  BinaryForm quotient(std::move(q));
  if (!(f - g * quotient).is_zero()) return std::nullopt;
  return quotient;
}

BinaryForm form_divide_exact(const BinaryForm& f, const BinaryForm& g) {
  if (auto q = try_divide_exact(f, g)) return *std::move(q);
  if (g.degree() > f.degree()) throw RemainderError(f);
  // Recompute the quotient attempt so the remainder can be reported.
  const int v = g.s1_valuation();
  const Scalar lead_inv = g[v].inverse();
  std::vector<Scalar> q;
  for (int j = 0; j <= f.degree() - g.degree(); ++j) {
    Scalar acc = f[j + v];
    for (int i = 1; i <= std::min(j, g.degree() - v); ++i) acc -= g[v + i] * q[static_cast<std::size_t>(j - i)];
    q.push_back(acc * lead_inv);
  }
  throw RemainderError(f - g * BinaryForm(std::move(q)));
}

namespace {

using Poly = std::vector<Scalar>;  // descending powers, leading entry nonzero; empty = 0

void strip(Poly& p) {
  auto it = std::find_if(p.begin(), p.end(), [](const Scalar& c) { return !c.is_zero(); });
  p.erase(p.begin(), it);
}

Poly poly_rem(Poly a, const Poly& b) {
  while (a.size() >= b.size()) {
    Scalar c = a.front() / b.front();
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= c * b[i];
    a.erase(a.begin());
    strip(a);
  }
  return a;
}

Poly poly_gcd(Poly a, Poly b) {
  while (!b.empty()) {
    Poly r = poly_rem(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

BinaryForm form_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.field() != g.field()) throw Error(ErrorCode::kFieldMismatch, "gcd of forms over different fields");
  const bool fz = f.is_zero(), gz = g.is_zero();
  if (fz && gz) throw Error(ErrorCode::kBothZero, "gcd of two zero forms");
  if (fz) return g.monic();
  if (gz) return f.monic();
  const Field k = f.field();
  const int a = f.s1_valuation();
  const int b = g.s1_valuation();
  Poly pf(f.coeffs().begin() + a, f.coeffs().end());
  Poly pg(g.coeffs().begin() + b, g.coeffs().end());
  Poly h = poly_gcd(pf, pg);
  const Scalar inv = h.front().inverse();
  const int shift = std::min(a, b);
  std::vector<Scalar> c(static_cast<std::size_t>(shift), k.zero());
  for (const auto& x : h) c.push_back(x * inv);
  return BinaryForm(std::move(c));
}

BinaryForm form_gcd(std::span<const BinaryForm> forms) {
  if (forms.empty()) throw Error(ErrorCode::kInvalidArgument, "gcd of no forms");
  std::optional<BinaryForm> acc;
  for (const auto& f : forms) {
    if (f.is_zero()) continue;
    acc = acc ? form_gcd(*acc, f) : f.monic();
  }
  if (!acc) throw Error(ErrorCode::kBothZero, "gcd of zero forms");
  return *acc;
}

P1Point root_of_linear(const BinaryForm& l) {
  if (l.degree() != 1 || l.is_zero()) throw Error(ErrorCode::kInvalidArgument, "not a nonzero linear form: " + l.to_string());
  return {-l[1], l[0]};
}

BinaryForm product_vanishing_at(const Field& k, std::span<const P1Point> points) {
  BinaryForm r = BinaryForm::constant(k.one());
  for (const auto& p : points) r = r * BinaryForm::vanishing_at(p);
  return r;
}

}  // namespace scrollkit

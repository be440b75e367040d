#include "scrollkit/report.hpp"

#include <gmp.h>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

#include "scrollkit/error.hpp"
#include "scrollkit/rng.hpp"
#include "scrollkit/scroll_curves.hpp"
#include "scrollkit/scroll_families.hpp"

namespace scrollkit {

namespace {

Json scalars(std::span<const Scalar> v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.to_string());
  return out;
}

Json matrix_json(const Matrix& m) { return m.serialize(); }

Json dim_json(const std::optional<int>& d) { return d ? Json(*d) : Json("EMPTY"); }

Json point_json(const P1Point& p) { return Json::array({p.s0.to_string(), p.s1.to_string()}); }

int need(const std::optional<int>& v, const char* flag) {
  if (!v) throw UsageError(std::string("missing --") + flag);
  return *v;
}

struct Context {
  const ExperimentConfig& cfg;
  Field field;
  Json config;
  Json anomalies = Json::array();
};

Field resolve_field(const ExperimentConfig& c, const std::string& fallback) {
  try {
    return Field::parse(c.field.value_or(fallback));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

int trials_or(const Context& ctx, int fallback) {
  int t = ctx.cfg.trials.value_or(fallback);
  if (t < 1) throw UsageError(std::string(to_string(ErrorCode::kInvalidTrials)) + ": trials must be positive");
  return t;
}

ScrollType scroll_from_config(const ExperimentConfig& c) {
  try {
    if (c.a) {
      const int d = static_cast<int>(c.a->size());
      int sum = 0;
      for (int x : *c.a) sum += x;
      return ScrollType(c.n.value_or(sum + d - 1), *c.a);
    }
    return balanced_type(need(c.n, "n"), need(c.d, "d"));
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

BinaryCurve curve_from_config(Context& ctx, int default_n) {
  if (ctx.cfg.input) {
    std::ifstream in(*ctx.cfg.input);
    if (!in) throw UsageError("cannot read " + *ctx.cfg.input);
    Json j;
    try {
      j = Json::parse(in);
      BinaryCurve c = binary_curve_from_json(j);
      ctx.field = c.field();
      return c;
    } catch (const Json::exception& e) {
      throw UsageError(std::string("bad curve file: ") + e.what());
    } catch (const Error& e) {
      throw UsageError(std::string("bad curve file: ") + e.what());
    }
  }
  try {
    return random_binary_curve(ctx.cfg.n.value_or(default_n), ctx.field, ctx.cfg.seed);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
}

// ---------------------------------------------------------------- commands

Json cmd_dims(Context& ctx) {
  const int n = need(ctx.cfg.n, "n"), d = need(ctx.cfg.d, "d");
  ctx.config["n"] = n;
  ctx.config["d"] = d;
  std::vector<StratumRow> table;
  try {
    table = stratification_table(n, d);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Json rows = Json::array();
  for (const auto& r : table) {
    for (const auto& pk : r.per_k) {
      Json row;
      row["n"] = n;
      row["d"] = d;
      row["a"] = r.type.to_string();
      row["balanced"] = r.balanced;
      row["dense"] = r.dense;
      row["aut_dim"] = r.aut_dim;
      row["dim_all"] = r.dim_all;
      row["dim_stratum"] = r.dim_stratum;
      row["dim_through_frame"] = r.dim_through_frame;
      row["k"] = pk.k;
      row["dim_curves"] = dim_json(pk.dim_curves);
      row["dim_scrolls_with_curve"] = pk.scrolls_with_curve_applies ? dim_json(pk.dim_scrolls_with_curve) : Json("NA");
      rows.push_back(std::move(row));
    }
  }
  Json out;
  out["strata"] = table.size();
  out["dim_rnc"] = dim_rnc(n);
  out["dim_rnc_through_frame"] = dim_rnc_through_frame(n);
  out["rows"] = std::move(rows);
  return out;
}

Json cmd_rnc(Context& ctx) {
  const int n = need(ctx.cfg.n, "n");
  if (n < 3) throw UsageError("rnc needs n >= 3");
  const int trials = trials_or(ctx, 10);
  ctx.config["n"] = n;
  ctx.config["trials"] = trials;
  const Rng base(ctx.cfg.seed);
  Json records = Json::array();
  int exact = 0, full = 0, non_generic = 0;
  for (int t = 0; t < trials; ++t) {
    Rng rng = base.fork(static_cast<std::uint64_t>(t));
    const int qrank = t % 2 == 0 ? 3 : 4;
    Quadric q = random_quadric_through_frame(ctx.field, n, qrank, rng);
    StandardRNC c = StandardRNC::random(ctx.field, n, rng);
    Json rec;
    rec["trial"] = t;
    rec["quadric_rank"] = qrank;
    rec["params"] = scalars(c.params());
    try {
      BinaryForm p = residual_polynomial(q, c);
      bool divides = q.compose(c.curve()) == frame_vanishing_form(c) * p;
      FinitenessCheck f = rnc_finiteness_rank(q, c);
      exact += divides;
      full += f.rank == static_cast<std::size_t>(n - 1);
      non_generic += f.non_generic;
      rec["status"] = "OK";
      rec["residual_degree"] = p.degree();
      rec["residual"] = p.to_string();
      rec["exact_division"] = divides;
      rec["jacobian_rank"] = f.rank;
      rec["non_generic"] = f.non_generic;
    } catch (const Error& e) {
      rec["status"] = std::string(to_string(e.code()));
      ctx.anomalies.push_back({{"trial", t}, {"error", e.what()}});
    }
    records.push_back(std::move(rec));
  }
  Json out;
  out["exact_divisions"] = exact;
  out["full_rank_jacobians"] = full;
  out["non_generic"] = non_generic;
  if (n == 3) {
    // x0 x3 - x1 x2 leaves (a3 - 1 - a2) s0 + a2 s1.
    Rng rng = base.fork(static_cast<std::uint64_t>(trials));
    StandardRNC c = StandardRNC::random(ctx.field, 3, rng);
    const Field& k = ctx.field;
    Quadric q = Quadric::from_monomials(k, 3, {{{0, 3}, k.one()}, {{1, 2}, -k.one()}});
    const Scalar &a2 = c.params()[0], &a3 = c.params()[1];
    out["closed_form_check"] = residual_polynomial(q, c) == BinaryForm({a3 - k.one() - a2, a2});
  }
  out["trials"] = std::move(records);
  return out;
}

Json curve_in_scroll_json(const CurveInScroll& c) {
  Json ys = Json::array();
  for (const auto& y : c.ys()) ys.push_back(y.to_string());
  return {{"k", c.k()}, {"t0", c.t0().to_string()}, {"t1", c.t1().to_string()}, {"y", ys}};
}

Json cmd_unisecant(Context& ctx) {
  ScrollType a = scroll_from_config(ctx.cfg);
  const int trials = trials_or(ctx, 10);
  ctx.config["n"] = a.n();
  ctx.config["a"] = a.a();
  ctx.config["trials"] = trials;
  ctx.config["repeat_t"] = ctx.cfg.repeat_t;
  const Rng base(ctx.cfg.seed);
  Json records = Json::array();
  std::map<std::string, int> counts;
  for (int t = 0; t < trials; ++t) {
    Rng rng = base.fork(static_cast<std::uint64_t>(t));
    auto frame = random_lifted_frame(a, ctx.field, rng, ctx.cfg.repeat_t);
    Json rec;
    rec["trial"] = t;
    try {
      UnisecantResult u = interpolate_unisecant(a, frame);
      rec["status"] = to_string(u.status);
      rec["kernel_dim"] = u.kernel_dim;
      rec["equations"] = u.equations;
      rec["unknowns"] = u.unknowns;
      if (!u.reason.empty()) rec["reason"] = u.reason;
      if (u.curve) {
        auto sections = sections_through(ctx.field, a.a(), 1, frame);
        bool vanish = std::all_of(sections.begin(), sections.end(),
                                  [&](const ScrollSection& s) { return s.pull_back(*u.curve).is_zero(); });
        rec["sections_through_frame"] = sections.size();
        rec["sections_vanish"] = vanish;
        rec["curve"] = curve_in_scroll_json(*u.curve);
      }
      ++counts[to_string(u.status)];
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kDependentConditions) throw;
      rec["status"] = "DEPENDENT_CONDITIONS";
      ++counts["DEPENDENT_CONDITIONS"];
    }
    records.push_back(std::move(rec));
  }
  Json out;
  out["scroll"] = a.to_string();
  out["counts"] = Json::object();
  for (const auto& [k, v] : counts) out["counts"][k] = v;
  out["trials"] = std::move(records);
  return out;
}

Json cmd_incidence(Context& ctx) {
  ScrollType a = scroll_from_config(ctx.cfg);
  const int k = need(ctx.cfg.k, "k");
  const int trials = trials_or(ctx, 10);
  ctx.config["n"] = a.n();
  ctx.config["a"] = a.a();
  ctx.config["k"] = k;
  ctx.config["trials"] = trials;
  std::optional<DimensionReport> est;
  try {
    est = incidence_dimension_estimate(a, k, trials, ctx.cfg.seed, ctx.field);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kEmptyFamily) throw UsageError(e.what());
    return {{"status", "EMPTY"}, {"scroll", a.to_string()}, {"k", k}};
  }
  const DimensionReport& r = *est;
  Json out;
  out["status"] = "OK";
  out["family"] = r.family;
  out["scroll"] = r.scroll.to_string();
  out["k"] = r.k;
  out["predicted"] = r.predicted;
  out["predicted_fk"] = r.predicted_fk ? Json(*r.predicted_fk) : Json(nullptr);
  out["group_correction"] = r.group_correction;
  out["matches"] = r.matches;
  out["match_rate"] = std::to_string(r.matches) + "/" + std::to_string(r.trials.size());
  Json rows = Json::array();
  for (std::size_t i = 0; i < r.trials.size(); ++i) {
    const auto& t = r.trials[i];
    rows.push_back({{"trial", i},
                    {"rank_orbit", t.rank_orbit},
                    {"rank_incidence", t.rank_incidence},
                    {"rank_torus", t.rank_torus},
                    {"measured_family", t.measured_family},
                    {"incidence_image", t.incidence_image},
                    {"fiber", t.fiber},
                    {"measured_fk", t.measured_fk ? Json(*t.measured_fk) : Json(nullptr)},
                    {"matches", t.matches}});
  }
  out["trials"] = std::move(rows);
  return out;
}

Json cmd_degenerate(Context& ctx) {
  if (!ctx.cfg.a) throw UsageError("missing --a");
  Degeneration g;
  try {
    g = make_degeneration(*ctx.cfg.a);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  Scalar lambda = ctx.field.from_int(2);
  if (ctx.cfg.lambda) {
    try {
      lambda = ctx.field.parse_scalar(*ctx.cfg.lambda);
    } catch (const Error& e) {
      throw UsageError(e.what());
    }
  }
  if (lambda.is_zero()) throw UsageError("--lambda must be nonzero");
  ctx.config["a"] = *ctx.cfg.a;
  ctx.config["lambda"] = lambda.to_string();
  const Field& k = ctx.field;
  auto phi1 = degeneration_phi1(g, k);
  auto phi2 = degeneration_phi2(g, k);
  ScrollSection m0 = degeneration_member(g, k.zero());
  Json out;
  out["a"] = g.a;
  out["donor"] = g.donor;
  out["recipient"] = g.recipient;
  out["aux"] = g.aux;
  out["aux_n"] = g.aux_n;
  out["phi2_source"] = phi2.source_a;
  out["member_0"] = m0.to_string();
  out["member_1"] = degeneration_member(g, k.one()).to_string();
  out["member_lambda"] = degeneration_member(g, lambda).to_string();
  out["checks"] = {
      {"phi1_lies_on_member_1_locus", phi1.pull_back(degeneration_phi1_section(g, k)).is_zero()},
      {"phi2_lies_on_member_0", phi2.pull_back(m0).is_zero()},
      {"phi2_off_member_1", !phi2.pull_back(degeneration_member(g, k.one())).is_zero()},
      {"lambda_equivalent_to_1", degeneration_equivalence_check(g, lambda)},
  };
  return out;
}

Json form_pair_json(const FormPair& p) { return Json::array({to_json(p.first), to_json(p.second)}); }

Json cmd_gonality(Context& ctx) {
  BinaryCurve c = curve_from_config(ctx, 4);
  ctx.config["n"] = c.n();
  Json out;
  out["curve"] = to_json(c);
  try {
    GonalityResult g = gonality_map(c);
    out["status"] = "OK";
    out["form_degree"] = g.form_degree;
    out["equations"] = g.equations;
    out["unknowns"] = g.unknowns;
    out["kernel_dim"] = g.kernel_dim;
    Json kernel = Json::array();
    for (const auto& p : g.kernel) kernel.push_back(form_pair_json(p));
    out["kernel"] = std::move(kernel);
    out["witness"] = {{"q1", to_json(g.witness.q1)},
                      {"q2", to_json(g.witness.q2)},
                      {"degree", g.witness.degree},
                      {"total_degree", g.witness.total_degree},
                      {"reduced", g.witness.reduced},
                      {"combination", g.witness.combination},
                      {"nodes_certified", certifies_nodes({g.witness.q1, g.witness.q2}, c.nodes())}};
    out["gonality_bound"] = g.bound;
    out["clifford_index_bound"] = g.witness.total_degree - 2;
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNoCoprimeWitness) throw;
    out["status"] = "NO_COPRIME_WITNESS";
    ctx.anomalies.push_back({{"error", e.what()}});
  }
  return out;
}

Json cmd_hyperelliptic(Context& ctx) {
  const int trials = trials_or(ctx, 1);
  ctx.config["trials"] = trials;
  ctx.config["positive_control"] = ctx.cfg.positive_control;
  Json records = Json::array();
  int positives = 0;
  if (ctx.cfg.input) {
    BinaryCurve c = curve_from_config(ctx, 3);
    HyperellipticResult h = hyperelliptic_test(c);
    positives += h.hyperelliptic;
    records.push_back({{"trial", 0}, {"hyperelliptic", h.hyperelliptic}, {"kernel_dim", h.kernel_dim}});
  } else {
    const int n = ctx.cfg.n.value_or(3);
    if (n < 3) throw UsageError("hyperelliptic needs n >= 3");
    ctx.config["n"] = n;
    const Rng base(ctx.cfg.seed);
    for (int t = 0; t < trials; ++t) {
      const std::uint64_t curve_seed = ctx.cfg.seed + static_cast<std::uint64_t>(t);
      Json rec{{"trial", t}, {"curve_seed", curve_seed}};
      HyperellipticResult h;
      if (ctx.cfg.positive_control) {
        // Second component's node parameters are a Moebius image of the first's.
        Rng rng = base.fork(static_cast<std::uint64_t>(t));
        StandardRNC c = StandardRNC::random(ctx.field, n, rng);
        Matrix m(ctx.field, 2, 2);
        do {
          for (std::size_t i = 0; i < 4; ++i) m(i / 2, i % 2) = ctx.field.random(rng);
        } while ((m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).is_zero());
        NodeData nodes;
        for (int j = 0; j <= n + 1; ++j) nodes.push_back({c.frame_parameter(j), apply_mobius(m, c.frame_parameter(j))});
        h = hyperelliptic_test(nodes);
        rec["mobius"] = matrix_json(m);
      } else {
        h = hyperelliptic_test(random_binary_curve(n, ctx.field, curve_seed));
      }
      positives += h.hyperelliptic;
      rec["hyperelliptic"] = h.hyperelliptic;
      rec["kernel_dim"] = h.kernel_dim;
      records.push_back(std::move(rec));
    }
  }
  Json out;
  out["hyperelliptic_count"] = positives;
  out["trials"] = std::move(records);
  return out;
}

Json cmd_quadrics(Context& ctx) {
  BinaryCurve c = curve_from_config(ctx, 4);
  ctx.config["n"] = c.n();
  QuadricSpace qs = quadrics_through(c);
  bool vanish = true;
  Json basis = Json::array();
  for (const auto& q : qs.basis) {
    vanish = vanish && q.compose(c.comp1().curve()).is_zero() && q.compose(c.comp2().curve()).is_zero();
    basis.push_back(to_json(q));
  }
  if (qs.basis.size() != qs.expected)
    ctx.anomalies.push_back({{"code", "QUADRIC_SPACE_UNEXPECTED_DIM"}, {"dimension", qs.basis.size()}});
  Json out;
  out["curve"] = to_json(c);
  out["dimension"] = qs.basis.size();
  out["expected"] = qs.expected;
  out["equations"] = qs.equations;
  out["unknowns"] = qs.unknowns;
  out["vanish_on_components"] = vanish;
  out["basis"] = std::move(basis);
  return out;
}

Json cmd_containment(Context& ctx) {
  const int trials = trials_or(ctx, 20);
  ctx.config["trials"] = trials;
  ctx.config["positive_control"] = ctx.cfg.positive_control;
  BinaryCurve c = ctx.cfg.positive_control ? scroll_positive_control(ctx.field, ctx.cfg.seed) : curve_from_config(ctx, 4);
  ctx.config["n"] = c.n();
  ContainmentReport r = scroll_containment_witness(c, trials, ctx.cfg.seed);
  if (r.anomaly) ctx.anomalies.push_back({{"code", *r.anomaly}, {"dimension", r.quadric_dim}});
  Json out;
  out["curve"] = to_json(c);
  out["verdict"] = to_string(r.verdict);
  out["method"] = r.method;
  out["heuristic"] = r.heuristic;
  out["description"] = r.description;
  out["quadric_dim"] = r.quadric_dim;
  out["expected_quadric_dim"] = r.expected_quadric_dim;
  out["hits"] = r.hits;
  out["projections"] = r.projections;
  Json rows = Json::array();
  for (const auto& t : r.trials) {
    Json degs = Json::array();
    for (const auto& f : t.resultants) degs.push_back(f.is_zero() ? -1 : f.degree());
    rows.push_back({{"trial", t.stream},
                    {"seed", ctx.cfg.seed},
                    {"hit", t.hit},
                    {"common_degree", t.common.degree()},
                    {"common", t.common.to_string()},
                    {"resultant_degrees", degs}});
  }
  out["trials"] = std::move(rows);
  Json strata = Json::array();
  for (const auto& s : r.strata) {
    strata.push_back({{"a", s.scroll.to_string()},
                      {"h", s.h},
                      {"k", s.k},
                      {"method", s.method},
                      {"excluded", s.excluded},
                      {"kernel_dim", s.kernel_dim ? Json(*s.kernel_dim) : Json(nullptr)},
                      {"estimate", s.estimate ? Json(*s.estimate) : Json(nullptr)},
                      {"detail", s.detail}});
  }
  out["strata"] = std::move(strata);
  return out;
}

Json cmd_project(Context& ctx) {
  BinaryCurve c = curve_from_config(ctx, 4);
  const int node = ctx.cfg.node.value_or(0);
  ctx.config["n"] = c.n();
  ctx.config["node"] = node;
  if (c.n() < 4) throw UsageError("project needs n >= 4");
  if (node < 0 || node > c.n() + 1) throw UsageError("--node out of range");
  Json out;
  out["curve"] = to_json(c);
  try {
    BinaryCurve p = project_from_node(c, node);
    out["status"] = "OK";
    out["projected"] = to_json(p);
    out["genus"] = Json::array({c.arithmetic_genus(), p.arithmetic_genus()});
    out["nodes"] = Json::array({c.node_count(), p.node_count()});
  } catch (const Error& e) {
    out["status"] = std::string(to_string(e.code()));
    ctx.anomalies.push_back({{"error", e.what()}});
  }
  return out;
}

using Command = std::function<Json(Context&)>;

const std::vector<std::pair<std::string, Command>>& command_table() {
  static const std::vector<std::pair<std::string, Command>> t{
      {"dims", cmd_dims},         {"rnc", cmd_rnc},           {"unisecant", cmd_unisecant},
      {"incidence", cmd_incidence}, {"degenerate", cmd_degenerate}, {"gonality", cmd_gonality},
      {"hyperelliptic", cmd_hyperelliptic}, {"quadrics", cmd_quadrics}, {"containment", cmd_containment},
      {"project", cmd_project},
  };
  return t;
}

// ---------------------------------------------------------------- rendering

std::string cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

void flatten(const Json& j, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& out) {
  if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) flatten(it.value(), prefix.empty() ? it.key() : prefix + "." + it.key(), out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], prefix + "[" + std::to_string(i) + "]", out);
  } else {
    out.emplace_back(prefix, cell(j));
  }
}

// Key of the result's row table, if any.
std::optional<std::string> row_table(const Json& result) {
  for (const char* key : {"rows", "trials"}) {
    if (result.contains(key) && result[key].is_array() && !result[key].empty() && result[key].front().is_object())
      return key;
  }
  return std::nullopt;
}

std::string render_csv(const Json& report) {
  std::ostringstream os;
  const Json& result = report["result"];
  if (auto key = row_table(result)) {
    const Json* rows = &result[*key];
    std::vector<std::string> cols;
    for (auto it = rows->front().begin(); it != rows->front().end(); ++it) cols.push_back(it.key());
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << csv_escape(cols[i]);
    os << "\n";
    for (const auto& r : *rows) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        os << (i ? "," : "") << csv_escape(r.contains(cols[i]) ? cell(r[cols[i]]) : "");
      os << "\n";
    }
    return os.str();
  }
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(report, "", flat);
  os << "key,value\n";
  for (const auto& [k, v] : flat) os << csv_escape(k) << "," << csv_escape(v) << "\n";
  return os.str();
}

std::string render_text(const Json& report) {
  std::ostringstream os;
  os << report["tool"].get<std::string>() << " " << report["version"].get<std::string>() << " "
     << report["command"].get<std::string>() << "\n";
  std::vector<std::pair<std::string, std::string>> flat;
  flatten(report["config"], "config", flat);
  Json rest = report["result"];
  Json table;
  if (auto key = row_table(rest)) {
    table = rest[*key];
    rest.erase(*key);
  }
  flatten(rest, "", flat);
  flatten(report["anomalies"], "anomalies", flat);
  std::size_t width = 0;
  for (const auto& [k, v] : flat) width = std::max(width, k.size());
  for (const auto& [k, v] : flat) os << k << std::string(width - k.size() + 2, ' ') << v << "\n";
  if (!table.is_null()) {
    std::vector<std::string> cols;
    for (auto it = table.front().begin(); it != table.front().end(); ++it) cols.push_back(it.key());
    std::vector<std::size_t> w(cols.size());
    for (std::size_t i = 0; i < cols.size(); ++i) {
      w[i] = cols[i].size();
      for (const auto& r : table) w[i] = std::max(w[i], r.contains(cols[i]) ? cell(r[cols[i]]).size() : 0);
    }
    os << "\n";
    for (std::size_t i = 0; i < cols.size(); ++i) os << cols[i] << std::string(w[i] - cols[i].size() + 2, ' ');
    os << "\n";
    for (const auto& r : table) {
      for (std::size_t i = 0; i < cols.size(); ++i) {
        std::string v = r.contains(cols[i]) ? cell(r[cols[i]]) : "";
        os << v << std::string(w[i] - v.size() + 2, ' ');
      }
      os << "\n";
    }
  }
  if (report.contains("wall_clock_ms")) os << "\nwall_clock_ms  " << report["wall_clock_ms"].dump() << "\n";
  return os.str();
}

}  // namespace

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : command_table()) v.push_back(name);
    return v;
  }();
  return names;
}

Json run(const ExperimentConfig& config) {
  const auto start = std::chrono::steady_clock::now();
  auto it = std::find_if(command_table().begin(), command_table().end(),
                         [&](const auto& e) { return e.first == config.command; });
  if (it == command_table().end()) throw UsageError("unknown command '" + config.command + "'");
  if (config.format != "json" && config.format != "csv" && config.format != "text")
    throw UsageError("--format must be json, csv or text");

  Context ctx{config, resolve_field(config, config.command == "incidence" ? "fp:10007" : "q"), Json::object()};
  Json result;
  try {
    result = it->second(ctx);
  } catch (const Error& e) {
    switch (e.code()) {
      case ErrorCode::kInvalidArgument:
      case ErrorCode::kInvalidTrials:
      case ErrorCode::kPrecondition:
      case ErrorCode::kFieldTooSmall:
        throw UsageError(e.what());
      default:
        throw;
    }
  }
  // Echo the resolved configuration; the field may come from an input file.
  Json echo;
  echo["command"] = config.command;
  echo["field"] = ctx.field.tag();
  echo["seed"] = config.seed;
  echo["format"] = config.format;
  if (config.input) echo["input"] = *config.input;
  for (auto e = ctx.config.begin(); e != ctx.config.end(); ++e) echo[e.key()] = e.value();

  Json report;
  report["tool"] = "scrollkit";
  report["version"] = SCROLLKIT_VERSION;
  report["versions"] = {{"scrollkit", SCROLLKIT_VERSION}, {"gmp", gmp_version}};
  report["command"] = config.command;
  report["config"] = std::move(echo);
  report["result"] = std::move(result);
  report["anomalies"] = std::move(ctx.anomalies);
  if (!config.omit_clock) {
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
    report["wall_clock_ms"] = ms.count();
  }
  return report;
}

std::string render(const Json& report, const std::string& format) {
  if (format == "json") return report.dump(2) + "\n";
  if (format == "csv") return render_csv(report);
  if (format == "text") return render_text(report);
  throw UsageError("--format must be json, csv or text");
}

// ---------------------------------------------------------------- serialization

Json to_json(const BinaryForm& f) { return {{"degree", f.degree()}, {"coeffs", scalars(f.coeffs())}, {"text", f.to_string()}}; }

Json to_json(const BinaryCurve& c) {
  Json nodes = Json::array();
  for (const auto& [r, s] : c.nodes()) nodes.push_back({{"comp1", point_json(r)}, {"comp2", point_json(s)}});
  return {{"n", c.n()},
          {"field", c.field().tag()},
          {"comp1", {{"params", scalars(c.comp1().params())}}},
          {"comp2", {{"params", scalars(c.comp2().params())}}},
          {"arithmetic_genus", c.arithmetic_genus()},
          {"nodes", nodes}};
}

Json to_json(const Quadric& q) { return {{"rank", q.rank()}, {"gram", matrix_json(q.gram())}}; }

BinaryCurve binary_curve_from_json(const Json& j) {
  const Field k = Field::parse(j.at("field").get<std::string>());
  auto comp = [&](const char* key) {
    std::vector<Scalar> p;
    for (const auto& x : j.at(key).at("params")) p.push_back(k.parse_scalar(x.get<std::string>()));
    return StandardRNC(k, p);
  };
  BinaryCurve c(comp("comp1"), comp("comp2"));
  if (j.contains("n") && j["n"].get<int>() != c.n())
    throw Error(ErrorCode::kInvalidArgument, "n does not match the number of parameters");
  return c;
}

}  // namespace scrollkit

#include "liesurf/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <iomanip>
#include <sstream>

#include "liesurf/bending.hpp"
#include "liesurf/embedded_data.hpp"
#include "liesurf/lie_core.hpp"
#include "liesurf/projections.hpp"
#include "liesurf/properness.hpp"
#include "liesurf/roots_weyl.hpp"
#include "liesurf/sl2_orbits.hpp"

namespace liesurf {

namespace {

using Clock = std::chrono::steady_clock;

constexpr double kMaxWordCondition = 1e10;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

Json header(const std::string& command, const ReportOptions& opt) {
  Json doc;
  doc["tool"] = "liesurf";
  doc["version"] = kToolVersion;
  doc["command"] = command;
  doc["config"] = config_echo(opt.cfg);
  doc["positivity_convention"] = SplitTorusData::positivity_convention();
  return doc;
}

void finish(Report& r, Clock::time_point t0, const ReportOptions& opt) {
  r.doc["verdict"] = r.matches ? "MATCH" : "MISMATCH";
  if (opt.timing) r.doc["runtime_s"] = seconds_since(t0);
}

Json weyl_json(const OrbitMembership& m, const SplitTorusData& torus) {
  Json j;
  if (m.member) {
    j["kind"] = "weyl_element";
    j["w"] = m.witness->to_string();
    j["index"] = m.witness_index;
  } else {
    j["kind"] = "exhaustive";
    j["weyl_order"] = torus.weyl.size();
  }
  return j;
}

Json benoist_json(const BenoistVerdict& b) {
  Json j;
  j["holds"] = b.holds;
  if (b.certificate) j["certificate"] = rational_vector_to_json(*b.certificate);
  if (b.covering) j["covering_w"] = b.covering->to_string();
  return j;
}

bool record(Report& r, Json& check, bool ok) {
  check["match"] = ok;
  r.matches = r.matches && ok;
  return ok;
}

QMatrix rational_matrix_from_json(const Json& j, const std::string& what) {
  if (!j.is_array()) throw ParameterError(what + " must be an array of vectors");
  QMatrix out;
  for (const auto& row : j) out.push_back(rational_vector_from_json(row));
  return out;
}

CMatrix sigma_rho1_expected(int p, int q) {
  const int N = p + q;
  CMatrix S = CMatrix::Identity(N, N);
  for (int k = 0; k < q; ++k) {
    S(k, k) = -1.0;
    S(N - 1 - k, N - 1 - k) = -1.0;
  }
  return S;
}

Json triple_supq(const Sl2Triple& t, const HSubalgebraTorus& ah, const Json& golden_row, const char* key,
                 const ReportOptions& opt, Report& r) {
  const auto& alg = *t.alg;
  const int p = alg.p(), q = alg.q();
  const Tolerances& tol = opt.cfg.tol;
  Json j;
  j["id"] = "su(" + std::to_string(p) + "," + std::to_string(q) + ")/" + t.label;
  TripleCheck tc = verify_sl2_triple(t, tol);
  j["triple_residuals"] = {{"he", tc.r_he}, {"hf", tc.r_hf}, {"ef", tc.r_ef}, {"membership", tc.membership}};
  bool ok = tc.ok;

  const bool even = is_even(t, tol);
  j["even"] = even;
  const Json& ge = golden_row[std::string(key) + "_even"];
  j["expected_even"] = ge;
  ok = ok && ge.is_boolean() && ge.get<bool>() == even;

  CMatrix s = sigma(t, tol);
  j["sigma"] = matrix_to_json(s, true);
  CMatrix s_exp = t.kind == TripleKind::rho1 ? sigma_rho1_expected(p, q) : CMatrix::Identity(p + q, p + q);
  double sdev = (s - s_exp).cwiseAbs().maxCoeff();
  j["sigma_expected"] = t.kind == TripleKind::rho1 ? "diag(-I_q, I_{p-q}, -I_q)" : "I_{p+q}";
  j["sigma_deviation"] = sdev;
  ok = ok && sdev <= 1e-12;

  SubspaceOfG ge_sub = g_even(t, tol);
  SubspaceOfG fixed = ad_sigma_fixed(t, tol);
  j["g_even_dim"] = ge_sub.dim();
  j["ad_sigma_fixed_dim"] = fixed.dim();
  ok = ok && ge_sub.dim() == fixed.dim();

  const int bound = genus_bound(t, whole_algebra(t.alg), tol);
  const int cdim = centralizer(t.alg, t.H, tol).dim();
  const int formula = t.kind == TripleKind::rho1 ? 2 * q * q + (p - q) * (p - q) - 1 : (p - q) * (p - q) + 2 * q - 1;
  j["genus_bound"] = bound;
  j["centralizer_dim"] = cdim;
  j["genus_bound_formula"] = t.kind == TripleKind::rho1 ? "2q^2+(p-q)^2-1" : "(p-q)^2+2q-1";
  j["genus_bound_formula_value"] = formula;
  const Json& gb = golden_row[std::string(key) + "_genus_bound"];
  if (!gb.is_null()) {
    j["expected_genus_bound"] = gb;
    ok = ok && gb.get<int>() == formula;
  }
  ok = ok && bound == formula && cdim == formula;

  ProperVerdict pv = sl2_action_proper(ah, t, opt.exec);
  j["dominant"] = rational_vector_to_json(pv.dominant);
  j["dominant_in_b_plus"] = ah.torus()->in_b_plus(pv.dominant);
  j["proper"] = pv.proper;
  j["witness"] = weyl_json(pv.membership, *ah.torus());
  ok = ok && pv.proper && ah.torus()->in_b_plus(pv.dominant);
  record(r, j, ok);
  return j;
}

Json plan_json(const BendingPlan& plan) {
  const auto& alg = *plan.triple.alg;
  Json j;
  j["target_dim"] = plan.target.dim();
  Json mult = Json::object();
  for (const auto& [i, m] : plan.target_mult) mult[std::to_string(2 * i + 1)] = m;
  j["target_multiplicities"] = mult;
  j["lambda_size"] = plan.entries.size();
  j["max_fixed_residual"] = plan.max_fixed_residual;
  Json entries = Json::array();
  for (const auto& e : plan.entries) {
    Json x;
    x["i"] = e.i;
    x["j"] = e.j;
    x["generator"] = e.generator;
    x["X"] = matrix_to_json(alg.element(e.X), alg.is_real());
    if (e.i != 0) {
      x["Y"] = e.y_name;
      x["bracket_norm"] = e.bracket_norm;
    } else {
      const auto& s = plan.star.at(e.j - 1);
      x["kind"] = to_string(s.kind);
      x["period_residual"] = s.period_residual;
    }
    entries.push_back(x);
  }
  j["entries"] = entries;
  return j;
}

Json margins_json(const InequalityReport& rep) {
  Json out = Json::array();
  for (const auto& m : rep.margins)
    out.push_back({{"i", m.i}, {"j", m.j}, {"k", m.k}, {"family", m.family}, {"lhs", m.lhs}, {"rhs", m.rhs},
                   {"margin", m.margin}, {"ok", m.ok}});
  return out;
}

struct WordSample {
  std::vector<RVector> mu;
  int skipped = 0;  // words too badly conditioned for double precision
};

// Words of length <= L in the generators and their inverses, freely reduced.
WordSample word_mu_sample(const SurfaceGroupRep& rep, const SplitTorusData& torus, int L, const Tolerances& tol) {
  std::vector<CMatrix> letters;
  for (const auto& g : rep.generators) {
    letters.push_back(g);
    letters.push_back(g.inverse());
  }
  const int n = static_cast<int>(letters.size());
  WordSample out;
  struct Node {
    CMatrix m;
    int last;
  };
  std::vector<Node> layer{{CMatrix::Identity(rep.generators[0].rows(), rep.generators[0].cols()), -1}};
  for (int len = 1; len <= L; ++len) {
    std::vector<Node> next;
    for (const auto& node : layer)
      for (int l = 0; l < n; ++l) {
        if (node.last >= 0 && (l ^ 1) == node.last) continue;
        next.push_back({node.m * letters[l], l});
      }
    for (const auto& node : next) {
      Eigen::JacobiSVD<CMatrix> svd(node.m);
      const RVector& sv = svd.singularValues();
      if (sv(0) > kMaxWordCondition * sv(sv.size() - 1)) {
        ++out.skipped;
        continue;
      }
      out.mu.push_back(mu(torus, node.m, tol));
    }
    layer = std::move(next);
  }
  return out;
}

Sl2Triple triple_from_plan(const Json& spec, const Torus& torus, const Tolerances& tol) {
  if (!spec.is_object() || !spec.contains("kind")) throw ParameterError("plan.triple must be an object with a kind");
  const std::string kind = spec["kind"].get<std::string>();
  if (kind == "rho1") return rho1_su(torus);
  if (kind == "rho2") return rho2_su(torus);
  if (kind == "partition") {
    if (!spec.contains("parts") || !spec["parts"].is_array()) throw ParameterError("partition triple needs parts");
    return sl2_from_partition(torus, spec["parts"].get<std::vector<int>>());
  }
  if (kind == "custom") {
    for (const char* k : {"H", "E", "F"})
      if (!spec.contains(k)) throw ParameterError(std::string("custom triple needs ") + k);
    return custom_triple(torus, matrix_from_json(spec["H"]), matrix_from_json(spec["E"]), matrix_from_json(spec["F"]),
                         "custom", tol);
  }
  throw ParameterError("unknown triple kind: " + kind);
}

}  // namespace

Report reproduce_sec53(const ReportOptions& opt) {
  const auto t0 = Clock::now();
  Report r;
  r.doc = header("reproduce sec53", opt);
  const Json golden = parse_json_text(embedded::kGoldenSl5, "sl5 golden table");
  Algebra alg = make_sl(5);
  Torus torus = split_torus(alg);
  HSubalgebraTorus ah(torus, rational_matrix_from_json(golden["a_h"], "a_h"), false);
  r.doc["algebra"] = alg->label();
  r.doc["a_h"] = golden["a_h"];
  r.doc["weyl_order"] = torus->weyl.size();

  Json rows = Json::array();
  bool even_proper = false;
  for (const auto& g : golden["rows"]) {
    const auto rt = Clock::now();
    Sl2Triple t = sl2_from_partition(torus, g["partition"].get<std::vector<int>>());
    Json j;
    j["id"] = "sl5/" + t.label;
    j["symbol"] = t.label;
    const bool even = is_even(t, opt.cfg.tol);
    j["even"] = even;
    j["parity_rule_even"] = parity_rule_even(t.partition);
    j["dominant"] = rational_vector_to_json(*t.dominant);
    ProperVerdict pv = sl2_action_proper(ah, t, opt.exec);
    j["in_weyl_orbit"] = pv.membership.member;
    j["witness"] = weyl_json(pv.membership, *torus);
    j["proper"] = pv.proper;
    j["expected"] = {{"symbol", g["symbol"]}, {"even", g["even"]}, {"dominant", g["dominant"]}, {"proper", g["proper"]}};
    bool ok = t.label == g["symbol"].get<std::string>() && even == g["even"].get<bool>() &&
              even == parity_rule_even(t.partition) && j["dominant"] == g["dominant"] &&
              pv.proper == g["proper"].get<bool>() && torus->in_b_plus(*t.dominant);
    even_proper = even_proper || (even && pv.proper);
    if (opt.timing) j["runtime_s"] = seconds_since(rt);
    record(r, j, ok);
    rows.push_back(j);
  }
  r.doc["rows"] = rows;

  Json b = benoist_json(benoist_criterion(ah, opt.exec));
  b["id"] = "sl5/benoist";
  record(r, b, b["holds"].get<bool>());
  r.doc["benoist"] = b;

  Json ep;
  ep["id"] = "sl5/even-proper";
  ep["exists"] = even_proper;
  ep["expected"] = golden["even_proper_exists"];
  record(r, ep, even_proper == golden["even_proper_exists"].get<bool>());
  r.doc["even_proper"] = ep;
  finish(r, t0, opt);
  return r;
}

Report reproduce_sec6(const ReportOptions& opt, std::optional<std::pair<int, int>> pq) {
  const auto t0 = Clock::now();
  Report r;
  r.doc = header("reproduce sec6", opt);
  const Json golden = parse_json_text(embedded::kGoldenSupq, "su(p,q) golden table");
  r.doc["table"] = golden["table"];

  std::vector<std::pair<int, int>> cases;
  if (pq) {
    if (pq->second < 1 || pq->first < pq->second) throw ParameterError("reproduce sec6 needs p >= q >= 1");
    cases.push_back(*pq);
  } else {
    for (int p = 1; p <= 6; ++p)
      for (int q = 1; q <= p; ++q) cases.emplace_back(p, q);
  }

  Json out = Json::array();
  for (auto [p, q] : cases) {
    const auto ct = Clock::now();
    Json grow;
    for (const auto& g : golden["grid"])
      if (g["p"] == p && g["q"] == q) grow = g;
    if (grow.is_null()) {
      // Outside the stored grid: the table rule and the closed forms.
      grow["rho1_even"] = p == q;
      grow["rho2_even"] = p == q ? Json() : Json(true);
      grow["rho1_genus_bound"] = 2 * q * q + (p - q) * (p - q) - 1;
      grow["rho2_genus_bound"] = p == q ? Json() : Json((p - q) * (p - q) + 2 * q - 1);
    }
    Algebra alg = make_su(p, q);
    Torus torus = split_torus(alg);
    HSubalgebraTorus ah = first_coordinate_hyperplane(torus);
    Json c;
    c["p"] = p;
    c["q"] = q;
    c["algebra"] = alg->label();

    Json bj = benoist_json(benoist_criterion(ah, opt.exec));
    bj["id"] = "su(" + std::to_string(p) + "," + std::to_string(q) + ")/benoist";
    record(r, bj, bj["holds"].get<bool>());
    c["benoist"] = bj;
    Json cm;
    cm["id"] = "su(" + std::to_string(p) + "," + std::to_string(q) + ")/calabi-markus";
    cm["holds"] = calabi_markus(ah);
    record(r, cm, !cm["holds"].get<bool>());
    c["calabi_markus"] = cm;

    Sl2Triple r1 = rho1_su(torus);
    c["rho1"] = triple_supq(r1, ah, grow, "rho1", opt, r);
    bool all_proper_even = true;
    if (c["rho1"]["proper"].get<bool>() && !c["rho1"]["even"].get<bool>()) all_proper_even = false;

    if (p > q) {
      Sl2Triple r2 = rho2_su(torus);
      c["rho2"] = triple_supq(r2, ah, grow, "rho2", opt, r);
    } else {
      Json u;
      u["id"] = "su(" + std::to_string(p) + "," + std::to_string(q) + ")/rho2";
      bool raised = false;
      try {
        rho2_su(torus);
      } catch (const ParameterError& e) {
        raised = true;
        u["error"] = e.what();
      }
      u["status"] = "undefined";
      record(r, u, raised && grow["rho2_even"].is_null());
      c["rho2"] = u;
    }
    if (p == q) {
      Json cor;
      cor["id"] = "su(" + std::to_string(p) + "," + std::to_string(q) + ")/proper-implies-even";
      cor["scope"] = "family-restricted";
      cor["holds"] = all_proper_even;
      record(r, cor, all_proper_even);
      c["proper_implies_even"] = cor;
    }
    if (opt.timing) c["runtime_s"] = seconds_since(ct);
    out.push_back(c);
  }
  r.doc["cases"] = out;
  finish(r, t0, opt);
  return r;
}

Report bend_report(const Json& plan_doc, const ReportOptions& opt) {
  const auto t0 = Clock::now();
  const Tolerances& tol = opt.cfg.tol;
  Report r;
  r.doc = header("bend", opt);
  if (!plan_doc.is_object()) throw ParameterError("plan must be a JSON object");
  for (const char* k : {"family", "params", "triple", "genus"})
    if (!plan_doc.contains(k)) throw ParameterError(std::string("plan is missing ") + k);
  r.doc["plan_input"] = plan_doc;

  Algebra alg = make_algebra(plan_doc["family"].get<std::string>(), plan_doc["params"].get<std::vector<int>>());
  Torus torus = split_torus(alg);
  Sl2Triple t = triple_from_plan(plan_doc["triple"], torus, tol);
  TripleCheck tc = verify_sl2_triple(t, tol);
  if (!tc.ok) throw ParameterError("plan triple fails the sl2 relations");
  r.doc["algebra"] = alg->label();
  r.doc["triple"] = {{"kind", to_string(t.kind)}, {"label", t.label}, {"even", is_even(t, tol)}};

  const int genus = plan_doc["genus"].get<int>();
  SurfaceGroupRep seed = fuchsian_generators(genus);
  Json sj;
  sj["genus"] = genus;
  sj["relation_residual"] = seed.relation_residual;
  Json traces = Json::array();
  for (const auto& g : seed.generators) traces.push_back(g.trace().real());
  sj["traces"] = traces;
  r.doc["seed"] = sj;

  std::optional<SubspaceOfG> target;
  if (plan_doc.contains("target") && plan_doc["target"].is_object()) {
    const Json& tb = plan_doc["target"]["basis"];
    RMatrix C(alg->dim(), static_cast<Eigen::Index>(tb.size()));
    for (std::size_t k = 0; k < tb.size(); ++k) {
      auto v = tb[k].get<std::vector<double>>();
      if (static_cast<int>(v.size()) != alg->dim()) throw ParameterError("target basis vector has the wrong length");
      for (int i = 0; i < alg->dim(); ++i) C(i, static_cast<Eigen::Index>(k)) = v[i];
    }
    target = span_of(alg, C, tol.rank);
  }
  BendingPlan plan = make_plan(t, seed, tol, target);
  r.doc["plan"] = plan_json(plan);

  // t selection.
  double t_used = 0;
  Json ts;
  if (!plan_doc.contains("t") || (plan_doc["t"].is_string() && plan_doc["t"] == "auto")) {
    TSelection sel = select_t(plan, opt.cfg.t_grid());
    Json tried = Json::array();
    for (auto [tv, ok] : sel.tried) tried.push_back({{"t", tv}, {"inequalities_hold", ok}});
    ts["mode"] = "auto";
    ts["tried"] = tried;
    t_used = sel.t ? *sel.t : opt.cfg.t_grid().front();
    ts["selected"] = sel.t ? Json(*sel.t) : Json();
  } else {
    if (!plan_doc["t"].is_number()) throw ParameterError("plan.t must be a number or \"auto\"");
    ts["mode"] = "fixed";
    t_used = plan_doc["t"].get<double>();
  }
  ts["t"] = t_used;
  r.doc["t_selection"] = ts;

  SurfaceGroupRep unbent = push_forward(t, seed);
  SurfaceGroupRep bent = bend(seed, plan, t_used);
  Json res;
  res["id"] = "bend/relation";
  res["seed"] = seed.relation_residual;
  res["unbent"] = unbent.relation_residual;
  res["bent"] = bent.relation_residual;
  res["bound"] = 10.0 * unbent.relation_residual + 1e-12;
  record(r, res, bent.relation_residual <= 10.0 * unbent.relation_residual + 1e-12);
  r.doc["relation"] = res;
  Json gens = Json::array();
  for (const auto& g : bent.generators) gens.push_back(matrix_to_json(g, alg->is_real()));
  r.doc["bent_generators"] = gens;

  DensityCertificate cert = density_certificate(plan, t_used, tol, opt.exec);
  Json ij;
  ij["id"] = "bend/inequalities";
  ij["holds"] = cert.inequalities.holds;
  ij["margins"] = margins_json(cert.inequalities);
  r.doc["inequalities"] = ij;
  Json cj;
  cj["id"] = "bend/density";
  cj["verdict"] = cert.verdict;
  cj["achieved_dim"] = cert.achieved_dim;
  cj["target_dim"] = cert.target_dim;
  cj["seed_count"] = cert.seed_count;
  bool ok = true;
  if (plan_doc.contains("expect")) {
    const Json& e = plan_doc["expect"];
    cj["expected"] = e;
    if (e.contains("verdict")) ok = ok && e["verdict"].get<std::string>() == cert.verdict;
    if (e.contains("dimension")) ok = ok && e["dimension"].get<int>() == cert.achieved_dim;
    if (e.contains("max_residual")) ok = ok && bent.relation_residual <= e["max_residual"].get<double>();
  }
  record(r, cj, ok);
  r.doc["certificate"] = cj;

  if (alg->family() == Family::SU_p_q) {
    HSubalgebraTorus ah = first_coordinate_hyperplane(torus);
    WordSample sample = word_mu_sample(bent, *torus, 4, tol);
    PitchforkResult pf = pitchfork_margin(ah, sample.mu, opt.cfg.pitchfork_radius, opt.exec);
    Json pj;
    pj["a_h"] = "a_1 = 0";
    pj["word_length"] = 4;
    pj["samples"] = sample.mu.size();
    pj["skipped_ill_conditioned"] = sample.skipped;
    pj["qualifying"] = pf.qualifying;
    pj["margin"] = pf.margin;
    pj["inconclusive"] = pf.inconclusive;
    r.doc["pitchfork"] = pj;
  }
  finish(r, t0, opt);
  return r;
}

Report check_report(const std::string& family, const std::vector<int>& params, const Json& ah_doc,
                    const ReportOptions& opt) {
  const auto t0 = Clock::now();
  Report r;
  r.doc = header("check", opt);
  if (!ah_doc.is_object() || !ah_doc.contains("basis")) throw ParameterError("a_h file must be an object with a basis");
  if (ah_doc.contains("family") && ah_doc["family"].get<std::string>() != family)
    throw ParameterError("a_h file is for family " + ah_doc["family"].get<std::string>());
  Algebra alg = make_algebra(family, params);
  Torus torus = split_torus(alg);
  const bool symmetric = ah_doc.value("symmetric", false);
  HSubalgebraTorus ah(torus, rational_matrix_from_json(ah_doc["basis"], "a_h basis"), symmetric);
  r.doc["algebra"] = alg->label();
  r.doc["a_h"] = {{"basis", ah_doc["basis"]}, {"dim", ah.dim()}, {"symmetric", symmetric}};
  r.doc["rank"] = torus->rank;

  Json cm;
  cm["id"] = "check/calabi-markus";
  cm["holds"] = calabi_markus(ah);
  cm["witness"] = {{"dim_a_h", ah.dim()}, {"rank", torus->rank}};
  Json bj = benoist_json(benoist_criterion(ah, opt.exec));
  bj["id"] = "check/benoist";

  Json ew;
  ew["id"] = "check/even-witness";
  bool found = false;
  if (alg->family() == Family::SL_n_R) {
    if (bj["holds"].get<bool>()) {
      for (const auto& parts : partitions_of(alg->n())) {
        if (!parity_rule_even(parts)) continue;
        Sl2Triple t = sl2_from_partition(torus, parts);
        if (!is_even(t, opt.cfg.tol)) continue;
        ProperVerdict pv = sl2_action_proper(ah, t, opt.exec);
        if (pv.proper && torus->in_b_plus(pv.dominant)) {
          found = true;
          ew["symbol"] = t.label;
          ew["dominant"] = rational_vector_to_json(pv.dominant);
          break;
        }
      }
      ew["searched"] = "even partitions of " + std::to_string(alg->n());
      if (!found) ew["message"] = "no even witness among partitions of " + std::to_string(alg->n());
    } else {
      ew["message"] = "not searched: Benoist criterion fails";
    }
  } else {
    ew["message"] = "only searched for sl(n,R)";
  }
  ew["found"] = found;

  bool ok_cm = true, ok_b = true, ok_e = true;
  if (ah_doc.contains("expect")) {
    const Json& e = ah_doc["expect"];
    if (e.contains("calabi_markus")) ok_cm = e["calabi_markus"].get<bool>() == cm["holds"].get<bool>();
    if (e.contains("benoist")) ok_b = e["benoist"].get<bool>() == bj["holds"].get<bool>();
    if (e.contains("even_witness")) ok_e = e["even_witness"].get<bool>() == found;
    r.doc["expect"] = e;
  }
  // Calabi-Markus excludes the Benoist condition.
  ok_cm = ok_cm && !(cm["holds"].get<bool>() && bj["holds"].get<bool>());
  record(r, cm, ok_cm);
  record(r, bj, ok_b);
  record(r, ew, ok_e);
  r.doc["calabi_markus"] = cm;
  r.doc["benoist"] = bj;
  r.doc["even_witness"] = ew;

  PositivityCrossCheck pc = chamber_intersection_cross_check(ah);
  Json pj;
  pj["id"] = "check/chamber-intersection";
  pj["applicable"] = pc.applicable;
  if (pc.applicable) {
    pj["checked"] = pc.checked;
    pj["agreements"] = pc.agreements;
    record(r, pj, pc.checked == pc.agreements);
  } else {
    pj["skipped"] = pc.reason;
  }
  r.doc["chamber_intersection"] = pj;
  finish(r, t0, opt);
  return r;
}

std::string preset_directory() {
  if (const char* env = std::getenv("LIESURF_PRESET_DIR")) return env;
  return std::string(LIESURF_SOURCE_DIR) + "/presets";
}

std::vector<std::string> preset_names() {
  std::vector<std::string> out;
  std::error_code ec;
  for (const auto& e : std::filesystem::directory_iterator(preset_directory(), ec))
    if (e.path().extension() == ".json") out.push_back(e.path().stem().string());
  std::sort(out.begin(), out.end());
  return out;
}

Json load_preset(const std::string& name) {
  if (name.empty() || name.find('/') != std::string::npos || name.find("..") != std::string::npos)
    throw ParameterError("invalid preset name: " + name);
  std::filesystem::path p = std::filesystem::path(preset_directory()) / (name + ".json");
  if (!std::filesystem::exists(p)) throw ParameterError("unknown preset: " + name);
  return read_json_file(p.string());
}

namespace {

std::string vec_text(const Json& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += v[i].is_string() ? v[i].get<std::string>() : v[i].dump();
  }
  return s + ")";
}

std::string yes(bool b) { return b ? "yes" : "no"; }

std::string num(const Json& j) {
  if (!j.is_number()) return j.is_string() ? j.get<std::string>() : j.dump();
  std::ostringstream os;
  os << std::setprecision(4) << j.get<double>();
  return os.str();
}

void text_partition_table(const Json& d, bool witness, std::ostringstream& os) {
  os << d["algebra"].get<std::string>() << ", a_h = span";
  for (const auto& b : d["a_h"]) os << " " << vec_text(b);
  os << "\n\n";
  os << std::left << std::setw(10) << "symbol" << std::setw(11) << "parity" << std::setw(20) << "dominant"
     << std::setw(12) << "in W.a_h" << std::setw(8) << "proper" << "match\n";
  for (const auto& row : d["rows"]) {
    os << std::left << std::setw(10) << row["symbol"].get<std::string>() << std::setw(11)
       << (row["even"].get<bool>() ? "even" : "non-even") << std::setw(20) << vec_text(row["dominant"])
       << std::setw(12) << yes(row["in_weyl_orbit"].get<bool>()) << std::setw(8) << yes(row["proper"].get<bool>())
       << yes(row["match"].get<bool>()) << "\n";
    if (witness) {
      const Json& w = row["witness"];
      if (w["kind"] == "weyl_element")
        os << "    witness w = " << w["w"].get<std::string>() << "\n";
      else
        os << "    no w among " << w["weyl_order"].dump() << " elements\n";
    }
  }
  os << "\nBenoist criterion: " << yes(d["benoist"]["holds"].get<bool>());
  if (witness && d["benoist"].contains("certificate")) os << ", certificate " << vec_text(d["benoist"]["certificate"]);
  os << "\nproper even row exists: " << yes(d["even_proper"]["exists"].get<bool>()) << "\n";
}

void text_triple6(const Json& t, bool witness, std::ostringstream& os) {
  if (t.contains("status")) {
    os << "  " << std::left << std::setw(6) << "rho2" << "undefined\n";
    return;
  }
  const std::string name = t["id"].get<std::string>().substr(t["id"].get<std::string>().find('/') + 1);
  os << "  " << std::left << std::setw(6) << name << std::setw(10) << (t["even"].get<bool>() ? "even" : "non-even")
     << "g_even " << std::setw(5) << t["g_even_dim"].dump() << "genus " << std::setw(4) << t["genus_bound"].dump()
     << "(" << t["genus_bound_formula"].get<std::string>() << " = " << t["genus_bound_formula_value"].dump()
     << ", centralizer " << t["centralizer_dim"].dump() << ")  proper " << yes(t["proper"].get<bool>())
     << "  sigma " << t["sigma_expected"].get<std::string>() << "  match " << yes(t["match"].get<bool>()) << "\n";
  if (witness) os << "        dominant " << vec_text(t["dominant"]) << "\n";
}

void text_supq(const Json& d, bool witness, std::ostringstream& os) {
  for (const auto& c : d["cases"]) {
    os << c["algebra"].get<std::string>() << "  Benoist " << yes(c["benoist"]["holds"].get<bool>())
       << "  Calabi-Markus " << yes(c["calabi_markus"]["holds"].get<bool>());
    if (witness && c["benoist"].contains("certificate"))
      os << "  certificate " << vec_text(c["benoist"]["certificate"]);
    os << "\n";
    text_triple6(c["rho1"], witness, os);
    text_triple6(c["rho2"], witness, os);
    if (c.contains("proper_implies_even"))
      os << "  proper members even (family-restricted): " << yes(c["proper_implies_even"]["holds"].get<bool>())
         << "\n";
  }
}

void text_bend(const Json& d, bool witness, std::ostringstream& os) {
  os << d["algebra"].get<std::string>() << ", triple " << d["triple"]["label"].get<std::string>() << ", genus "
     << d["seed"]["genus"].dump() << "\n";
  os << "seed relation residual   " << num(d["relation"]["seed"]) << "\n";
  os << "bent relation residual   " << num(d["relation"]["bent"]) << "\n";
  os << "|Lambda| = " << d["plan"]["lambda_size"].dump() << ", target dim " << d["plan"]["target_dim"].dump() << "\n";
  for (const auto& e : d["plan"]["entries"]) {
    os << "  (" << e["i"].dump() << "," << e["j"].dump() << ") -> b_" << e["generator"].dump();
    if (e.contains("Y"))
      os << "  Y = " << e["Y"].get<std::string>() << "  |[X,Y]| = " << num(e["bracket_norm"]);
    else
      os << "  " << e["kind"].get<std::string>() << ", |exp X - 1| = " << num(e["period_residual"]);
    os << "\n";
  }
  os << "t = " << num(d["t_selection"]["t"]) << " (" << d["t_selection"]["mode"].get<std::string>() << ")\n";
  os << "inequalities hold: " << yes(d["inequalities"]["holds"].get<bool>()) << "\n";
  if (witness)
    for (const auto& m : d["inequalities"]["margins"])
      os << "  (" << m["i"].dump() << "," << m["j"].dump() << "," << m["k"].dump() << ") family " << m["family"].dump()
         << ": lhs " << num(m["lhs"]) << ", rhs " << num(m["rhs"]) << "\n";
  os << "density certificate: " << d["certificate"]["verdict"].get<std::string>() << ", dimension "
     << d["certificate"]["achieved_dim"].dump() << " of " << d["certificate"]["target_dim"].dump() << "\n";
  if (d.contains("pitchfork"))
    os << "pitchfork margin (words <= 4, a_1 = 0): " << num(d["pitchfork"]["margin"]) << " over "
       << d["pitchfork"]["qualifying"].dump() << " samples\n";
}

void text_check(const Json& d, bool witness, std::ostringstream& os) {
  os << d["algebra"].get<std::string>() << ", dim a_h = " << d["a_h"]["dim"].dump() << ", rank "
     << d["rank"].dump() << "\n";
  os << "Calabi-Markus: " << yes(d["calabi_markus"]["holds"].get<bool>()) << "\n";
  os << "Benoist:       " << yes(d["benoist"]["holds"].get<bool>());
  if (witness && d["benoist"].contains("certificate")) os << ", certificate " << vec_text(d["benoist"]["certificate"]);
  if (witness && d["benoist"].contains("covering_w"))
    os << ", b inside w.a_h for w = " << d["benoist"]["covering_w"].get<std::string>();
  os << "\n";
  const Json& e = d["even_witness"];
  if (e["found"].get<bool>())
    os << "even witness: " << e["symbol"].get<std::string>() << " " << vec_text(e["dominant"]) << "\n";
  else
    os << e["message"].get<std::string>() << "\n";
  const Json& p = d["chamber_intersection"];
  if (p["applicable"].get<bool>())
    os << "chamber intersection cross-check: " << p["agreements"].dump() << "/" << p["checked"].dump() << "\n";
}

}  // namespace

std::string render_text(const Json& doc, bool witness) {
  std::ostringstream os;
  const std::string cmd = doc["command"].get<std::string>();
  os << "liesurf " << doc["version"].get<std::string>() << "  " << cmd << "\n\n";
  if (cmd == "reproduce sec53")
    text_partition_table(doc, witness, os);
  else if (cmd == "reproduce sec6")
    text_supq(doc, witness, os);
  else if (cmd == "bend")
    text_bend(doc, witness, os);
  else
    text_check(doc, witness, os);
  os << "\nverdict: " << doc["verdict"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace liesurf

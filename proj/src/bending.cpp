#include "liesurf/bending.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace liesurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

RMatrix rot(double phi) {
  RMatrix R(2, 2);
  R << std::cos(phi / 2), std::sin(phi / 2), -std::sin(phi / 2), std::cos(phi / 2);
  return R;
}

CMatrix lie_image(const Sl2Triple& t, const RMatrix& L) {
  return L(0, 0) * t.H + L(0, 1) * t.E + L(1, 0) * t.F;
}

// Real logarithm of the hyperbolic element +-a.
RMatrix hyperbolic_log(const RMatrix& a) {
  const double tr = a.trace();
  if (std::abs(tr) <= 2.0 + 1e-12) throw ParameterError("generator is not hyperbolic (|trace| <= 2)");
  RMatrix m = tr > 0 ? a : RMatrix(-a);
  Eigen::EigenSolver<RMatrix> es(m);
  RMatrix V = es.eigenvectors().real();
  RVector lam = es.eigenvalues().real();
  RMatrix D = RMatrix::Zero(2, 2);
  D(0, 0) = std::log(lam(0));
  D(1, 1) = std::log(lam(1));
  return V * D * V.inverse();
}

}  // namespace

double relation_residual(const std::vector<CMatrix>& gens) {
  if (gens.empty() || gens.size() % 2 != 0) throw ShapeError("relation: need an even number of generators");
  const Eigen::Index N = gens.front().rows();
  CMatrix P = CMatrix::Identity(N, N);
  for (std::size_t k = 0; k < gens.size(); k += 2) {
    const CMatrix& A = gens[k];
    const CMatrix& B = gens[k + 1];
    P = P * A * B * A.inverse() * B.inverse();
  }
  return (P - CMatrix::Identity(N, N)).norm();
}

SurfaceGroupRep fuchsian_generators(int genus) {
  if (genus < 2) throw ParameterError("surface genus must be at least 2");
  const int n = 4 * genus;
  // Translation length fixed by the vertex angle 2 pi / 4g.
  const double d = std::acosh(1.0 / std::tan(kPi / n));
  RMatrix tau = RMatrix::Zero(2, 2);
  tau(0, 0) = std::exp(d);
  tau(1, 1) = std::exp(-d);
  // Side j to side j'.
  auto pairing = [&](int j, int jp) -> RMatrix {
    return rot(2 * kPi * jp / n) * tau * rot(kPi - 2 * kPi * j / n);
  };
  SurfaceGroupRep out;
  out.genus = genus;
  for (int k = 0; k < genus; ++k) {
    out.generators.push_back(pairing(4 * k + 2, 4 * k).cast<Complex>());
    out.generators.push_back(pairing(4 * k + 1, 4 * k + 3).cast<Complex>());
  }
  out.relation_residual = relation_residual(out.generators);
  return out;
}

CMatrix rho_group(const Sl2Triple& t, const RMatrix& a) {
  if (a.rows() != 2 || a.cols() != 2) throw ShapeError("rho_group: expected a 2x2 matrix");
  Eigen::JacobiSVD<RMatrix> svd(a, Eigen::ComputeFullU | Eigen::ComputeFullV);
  RMatrix U = svd.matrixU(), V = svd.matrixV();
  if (U.determinant() < 0) {
    U.col(1) *= -1;
    V.col(1) *= -1;
  }
  // exp(phi J) = [[cos, sin], [-sin, cos]] with J = e - f.
  const double phi1 = std::atan2(U(0, 1), U(0, 0));
  const RMatrix Vt = V.transpose();
  const double phi2 = std::atan2(Vt(0, 1), Vt(0, 0));
  const double s = std::log(svd.singularValues()(0));
  const CMatrix J = t.E - t.F;
  return (phi1 * J).exp() * (s * t.H).exp() * (phi2 * J).exp();
}

SurfaceGroupRep push_forward(const Sl2Triple& t, const SurfaceGroupRep& seed) {
  SurfaceGroupRep out;
  out.genus = seed.genus;
  for (const auto& g : seed.generators) out.generators.push_back(rho_group(t, g.real()));
  out.relation_residual = relation_residual(out.generators);
  return out;
}

RVector fixed_weight_zero_vector(const Sl2Triple& t, const RMatrix& chain, const RMatrix& a,
                                 const Tolerances& tol) {
  const auto& alg = *t.alg;
  if (chain.cols() % 2 != 1 || chain.cols() < 3)
    throw ParameterError("fixed vector: piece must be odd-dimensional and nontrivial");
  RMatrix L = hyperbolic_log(a);
  RMatrix ad = adjoint_operator(alg, lie_image(t, L), tol.membership);
  // The raw chain is badly scaled (ad F powers); work in an orthonormal basis of it.
  Eigen::HouseholderQR<RMatrix> qr(chain);
  const RMatrix Q = qr.householderQ() * RMatrix::Identity(chain.rows(), chain.cols());
  RMatrix M = ad * Q;
  Eigen::JacobiSVD<RMatrix> svd(M, Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  const Eigen::Index k = sv.size();
  const double cut = tol.rank * std::max(1.0, sv(0));
  if (sv(k - 1) > cut) throw NumericalError("fixed vector: no Ad-fixed line in the piece");
  if (k >= 2 && sv(k - 2) <= cut) throw NumericalError("fixed vector: fixed space has dimension > 1");
  RVector X = Q * svd.matrixV().col(k - 1);
  X /= X.norm();
  Eigen::Index idx;
  X.cwiseAbs().maxCoeff(&idx);
  if (X(idx) < 0) X = -X;
  return X;
}

BendingPlan make_plan(const Sl2Triple& t, const SurfaceGroupRep& seed, const Tolerances& tol,
                      const std::optional<SubspaceOfG>& target) {
  const auto& alg = *t.alg;
  if (!verify_sl2_triple(t, tol).ok) throw ParameterError("bending plan: invalid sl2-triple");
  if (seed.genus < 2 || static_cast<int>(seed.generators.size()) != 2 * seed.genus)
    throw ParameterError("bending plan: malformed seed representation");
  if (seed.relation_residual > tol.relation)
    throw NumericalError("bending plan: seed relation residual exceeds tolerance");

  BendingPlan plan;
  plan.triple = t;
  plan.seed = seed;
  plan.genus = seed.genus;

  SubspaceOfG ge = g_even(t, tol);
  SubspaceOfG z = triple_centralizer(t, tol);
  if (target) {
    const SubspaceOfG& s = *target;
    if (s.parent().get() != t.alg.get()) throw ParameterError("target subalgebra belongs to another algebra");
    if (bracket_closure_defect(s) > tol.rank) throw ParameterError("target is not closed under the bracket");
    for (const CMatrix* X : {&t.H, &t.E, &t.F})
      if (!s.contains(alg.coordinates(*X), tol.rank)) throw ParameterError("target does not contain the triple");
    if (!s.contains_subspace(z, tol.rank)) throw ParameterError("target does not contain the centralizer of the triple");
    if (!ge.contains_subspace(s, tol.rank)) throw ParameterError("target is not contained in g_even");
    plan.target = s;
  } else {
    plan.target = ge;
  }

  plan.iso = module_multiplicities(t, plan.target, tol);
  for (const auto& [i, j] : plan.iso.lambda) ++plan.target_mult[i];
  const int lambda_size = static_cast<int>(plan.iso.lambda.size());
  if (seed.genus < lambda_size) {
    std::ostringstream os;
    os << "genus condition violated: g = " << seed.genus << " < |Lambda| = " << lambda_size;
    throw GenusConditionError(os.str());
  }

  // Property (*) basis of the centralizer (the V_1 part of g').
  plan.star = property_star_basis(z, tol);
  if (static_cast<int>(plan.star.size()) != (plan.target_mult.count(0) ? plan.target_mult.at(0) : 0))
    throw NumericalError("centralizer dimension disagrees with [g' : V_1]");

  // f: (i descending, j ascending) -> 1, 2, ...
  std::vector<int> order(lambda_size);
  for (int k = 0; k < lambda_size; ++k) order[k] = k;
  std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
    const auto& a = plan.iso.lambda[x];
    const auto& b = plan.iso.lambda[y];
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });

  const std::pair<const char*, const CMatrix*> triple_images[] = {{"H", &t.H}, {"E", &t.E}, {"F", &t.F}};
  int gen = 0;
  for (int k : order) {
    PlanEntry e;
    e.i = plan.iso.lambda[k].first;
    e.j = plan.iso.lambda[k].second;
    e.generator = ++gen;
    if (e.i == 0) {
      e.X = alg.coordinates(plan.star.at(e.j - 1).X);
      plan.entries.push_back(std::move(e));
      continue;
    }
    e.piece = plan.iso.lambda_piece[k];
    const RMatrix a = seed.a(e.generator).real();
    e.X = fixed_weight_zero_vector(t, plan.iso.pieces[e.piece].chain, a, tol);
    CMatrix Xm = alg.element(e.X);
    CMatrix g = rho_group(t, a);
    double fixed = (g * Xm - Xm * g).norm() / (g.norm() * Xm.norm());
    plan.max_fixed_residual = std::max(plan.max_fixed_residual, fixed);
    if (fixed > 1e-8) throw NumericalError("fixed vector is not fixed by Ad(rho(a))");
    for (const auto& [name, Y] : triple_images) {
      double nb = alg.coordinates(bracket(Xm, *Y)).norm();
      if (nb > e.bracket_norm) {
        e.bracket_norm = nb;
        e.y_name = name;
        e.Y = alg.coordinates(*Y);
      }
    }
    if (e.bracket_norm <= tol.rank) throw NumericalError("[X, Y] vanishes for every triple image");
    plan.entries.push_back(std::move(e));
  }
  return plan;
}

SurfaceGroupRep bend(const SurfaceGroupRep& seed, const BendingPlan& plan, double t) {
  if (seed.genus != plan.genus) throw ParameterError("plan/seed genus mismatch");
  if (static_cast<int>(plan.entries.size()) > plan.genus) throw GenusConditionError("plan has more entries than generators");
  const auto& alg = *plan.triple.alg;
  std::vector<RVector> X(plan.genus + 1);
  for (const auto& e : plan.entries) X[e.generator] = e.X;
  SurfaceGroupRep out;
  out.genus = seed.genus;
  for (int k = 1; k <= seed.genus; ++k) {
    out.generators.push_back(rho_group(plan.triple, seed.a(k).real()));
    CMatrix b = rho_group(plan.triple, seed.b(k).real());
    if (t != 0.0 && X[k].size() > 0 && X[k].norm() > 0) b = b * (t * alg.element(X[k])).exp();
    out.generators.push_back(b);
  }
  out.relation_residual = relation_residual(out.generators);
  return out;
}

RVector z_vector(const LieAlgebraSpace& alg, const CMatrix& X, const CMatrix& Y, double t) {
  if (t == 0.0) throw ParameterError("z_vector: t must be nonzero");
  CMatrix g = (t * X).exp();
  CMatrix gi = (-t * X).exp();
  return alg.coordinates(g * Y * gi - Y) / t;
}

InequalityReport bending_inequalities(const BendingPlan& plan, double t) {
  const auto& alg = *plan.triple.alg;
  InequalityReport rep;
  for (const auto& e : plan.entries) {
    if (e.i == 0) continue;
    const double m = plan.target_mult.at(e.i);
    CMatrix Xm = alg.element(e.X), Ym = alg.element(e.Y);
    RVector Z = z_vector(alg, Xm, Ym, t);
    RVector XY = alg.coordinates(bracket(Xm, Ym));
    const double base = plan.iso.model_coefficients(e.piece, XY).norm();

    InequalityMargin m1;
    m1.i = e.i;
    m1.j = e.j;
    m1.k = e.j;
    m1.family = 1;
    m1.lhs = plan.iso.model_coefficients(e.piece, Z).norm();
    m1.rhs = (1.0 - 1.0 / m) * base;
    m1.margin = m1.lhs - m1.rhs;
    m1.ok = m1.lhs > m1.rhs;
    rep.holds = rep.holds && m1.ok;
    rep.margins.push_back(m1);

    for (const auto& other : plan.entries) {
      if (other.i != e.i || other.j == e.j) continue;
      InequalityMargin m2;
      m2.i = e.i;
      m2.j = e.j;
      m2.k = other.j;
      m2.family = 2;
      m2.lhs = plan.iso.model_coefficients(other.piece, Z).norm();
      m2.rhs = base / m;
      m2.margin = m2.rhs - m2.lhs;
      m2.ok = m2.lhs < m2.rhs;
      rep.holds = rep.holds && m2.ok;
      rep.margins.push_back(m2);
    }
  }
  return rep;
}

DensityCertificate density_certificate(const BendingPlan& plan, double t, const Tolerances& tol, Exec exec) {
  const auto& alg = *plan.triple.alg;
  DensityCertificate c;
  c.target_dim = plan.target.dim();
  std::vector<CMatrix> seeds{plan.triple.H, plan.triple.E, plan.triple.F};
  bool degenerate = t == 0.0;
  if (!degenerate) {
    c.inequalities = bending_inequalities(plan, t);
    for (const auto& e : plan.entries)
      if (e.i != 0) seeds.push_back(alg.element(z_vector(alg, alg.element(e.X), alg.element(e.Y), t)));
  }
  for (const auto& s : plan.star) seeds.push_back(s.X);
  c.seed_count = static_cast<int>(seeds.size());
  c.achieved_dim = generated_subalgebra(plan.triple.alg, seeds, tol, exec).dim();
  if (degenerate || !c.inequalities.holds)
    c.verdict = "INCONCLUSIVE";
  else
    c.verdict = c.achieved_dim == c.target_dim ? "PASS" : "FAIL";
  return c;
}

std::vector<double> default_t_grid() {
  const double golden = (1.0 + std::sqrt(5.0)) / 2.0;
  return {1e-2 * golden, 1e-3 * golden, 1e-4 * golden};
}

TSelection select_t(const BendingPlan& plan, const std::vector<double>& grid) {
  TSelection out;
  for (double t : grid) {
    bool ok = t != 0.0 && bending_inequalities(plan, t).holds;
    out.tried.emplace_back(t, ok);
    if (ok) {
      out.t = t;
      break;
    }
  }
  return out;
}

}  // namespace liesurf

#include "liesurf/projections.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace liesurf {

namespace {

// Descending log values of length N folded into torus coordinates.
RVector fold(const SplitTorusData& torus, RVector logs, double pairing_tol, bool strict) {
  std::sort(logs.data(), logs.data() + logs.size(), std::greater<double>());
  if (torus.parent->family() == Family::SL_n_R) return logs;
  const int N = static_cast<int>(logs.size());
  const int q = torus.coord_count;
  RVector out(q);
  for (int i = 0; i < q; ++i) {
    double pair = logs(i) + logs(N - 1 - i);
    if (strict && std::abs(pair) > pairing_tol) {
      std::ostringstream os;
      os << "Cartan projection does not pair: log s_" << i + 1 << " + log s_" << N - i << " = " << pair;
      throw RealizationError(os.str());
    }
    out(i) = 0.5 * (logs(i) - logs(N - 1 - i));
  }
  for (int i = q; i < N - q; ++i)
    if (strict && std::abs(logs(i)) > pairing_tol) {
      std::ostringstream os;
      os << "Cartan projection has a nonzero middle log singular value " << logs(i);
      throw RealizationError(os.str());
    }
  return out;
}

}  // namespace

RVector mu(const SplitTorusData& torus, const CMatrix& g, const Tolerances& tol) {
  const auto& alg = *torus.parent;
  double res = alg.group_residual(g);
  Eigen::JacobiSVD<CMatrix> svd(g);
  const RVector& sv = svd.singularValues();
  // log|det g| from singular values carries an error of about eps * s_max / s_min.
  const double slack = 1e-14 * sv(0) / sv(sv.size() - 1);
  if (!(res <= tol.group + slack)) {
    std::ostringstream os;
    os << "mu: matrix is not in the group of " << alg.label() << " (residual " << res << ")";
    throw MembershipError(os.str());
  }
  RVector logs = sv.array().log();
  if (alg.family() == Family::SL_n_R) return fold(torus, logs, tol.mu_pairing, true);

  // The top q log singular values are accurate to machine precision; the
  // bottom ones only to eps * s_max / s_min, which widens the pairing test.
  const int N = static_cast<int>(logs.size());
  const int q = torus.coord_count;
  RVector out(q);
  for (int i = 0; i < q; ++i) {
    double pair = logs(i) + logs(N - 1 - i);
    if (std::abs(pair) > tol.mu_pairing + slack) {
      std::ostringstream os;
      os << "Cartan projection does not pair: log s_" << i + 1 << " + log s_" << N - i << " = " << pair;
      throw RealizationError(os.str());
    }
    out(i) = logs(i);
  }
  for (int i = q; i < N - q; ++i)
    if (std::abs(logs(i)) > tol.mu_pairing + 1e-14 * sv(0)) {
      std::ostringstream os;
      os << "Cartan projection has a nonzero middle log singular value " << logs(i);
      throw RealizationError(os.str());
    }
  return out;
}

RVector lyapunov(const SplitTorusData& torus, const CMatrix& g) {
  if (g.rows() != torus.parent->matrix_size() || g.cols() != g.rows())
    throw ShapeError("lyapunov: wrong matrix size");
  Eigen::ComplexEigenSolver<CMatrix> es(g, false);
  RVector logs = es.eigenvalues().array().abs().log();
  return fold(torus, logs, 0.0, false);
}

CMatrix matrix_exp(const CMatrix& X) { return X.exp(); }

CMatrix random_algebra_element(const LieAlgebraSpace& alg, std::mt19937_64& rng, double scale) {
  std::normal_distribution<double> nd(0.0, 1.0);
  RVector c(alg.dim());
  for (int i = 0; i < alg.dim(); ++i) c(i) = scale * nd(rng);
  return alg.element(c);
}

CMatrix random_compact_element(const LieAlgebraSpace& alg, std::mt19937_64& rng) {
  CMatrix X = random_algebra_element(alg, rng);
  CMatrix K = 0.5 * (X + cartan_involution(alg, X));
  return matrix_exp(K);
}

CMatrix random_group_element(const SplitTorusData& torus, std::mt19937_64& rng, double scale) {
  std::uniform_real_distribution<double> ud(-scale, scale);
  RVector a(torus.coord_count);
  for (int i = 0; i < a.size(); ++i) a(i) = ud(rng);
  if (torus.parent->family() == Family::SL_n_R) a.array() -= a.mean();
  const auto& alg = *torus.parent;
  return random_compact_element(alg, rng) * matrix_exp(torus.matrix(a)) * random_compact_element(alg, rng);
}

}  // namespace liesurf

#include "liesurf/lie_core.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "liesurf/kernels.hpp"

namespace liesurf {

namespace {

const Complex I_unit(0.0, 1.0);

CMatrix unit(int N, int r, int c, Complex value = 1.0) {
  CMatrix M = CMatrix::Zero(N, N);
  M(r, c) = value;
  return M;
}

// Singular values at or below this are rounding noise whatever the scale.
constexpr double kNoiseFloor = 1e-13;

// Pseudo-inverse via SVD; the vectorized bases are tall and well conditioned.
RMatrix left_inverse(const RMatrix& V) {
  Eigen::JacobiSVD<RMatrix> svd(V, Eigen::ComputeThinU | Eigen::ComputeThinV);
  RVector s = svd.singularValues();
  RVector inv(s.size());
  for (int i = 0; i < s.size(); ++i) inv(i) = s(i) > 1e-12 * s(0) ? 1.0 / s(i) : 0.0;
  return svd.matrixV() * inv.asDiagonal() * svd.matrixU().transpose();
}

}  // namespace

std::string family_tag(Family f) { return f == Family::SL_n_R ? "sl" : "su"; }

LieAlgebraSpace::LieAlgebraSpace(Family family, int a, int b) : family_(family) {
  if (family == Family::SL_n_R) {
    if (a < 2) throw ParameterError("sl(n,R) requires n >= 2, got n = " + std::to_string(a));
    size_ = a;
    form_ = CMatrix::Identity(a, a);
    for (int k = 0; k < a; ++k)
      for (int l = 0; l < a; ++l)
        if (k != l) basis_.push_back(unit(a, k, l));
    for (int k = 0; k + 1 < a; ++k) {
      CMatrix H = CMatrix::Zero(a, a);
      H(k, k) = 1.0;
      H(k + 1, k + 1) = -1.0;
      basis_.push_back(H);
    }
  } else {
    if (b < 1) throw ParameterError("su(p,q) requires q >= 1, got q = " + std::to_string(b));
    if (a < b) throw ParameterError("su(p,q) requires p >= q, got p = " + std::to_string(a) +
                                    ", q = " + std::to_string(b));
    p_ = a;
    q_ = b;
    const int N = a + b;
    size_ = N;
    // pi(k) = N-1-k on the outer blocks, the identity on the middle block.
    std::vector<int> pi(N);
    for (int k = 0; k < N; ++k) pi[k] = (k < b || k >= a) ? N - 1 - k : k;
    form_ = CMatrix::Zero(N, N);
    for (int k = 0; k < N; ++k) form_(k, pi[k]) = 1.0;

    std::vector<CMatrix> traced;
    auto add = [&](CMatrix X) {
      if (std::abs(X.trace()) > 0.5)
        traced.push_back(std::move(X));
      else
        basis_.push_back(std::move(X));
    };
    for (int k = 0; k < N; ++k)
      for (int l = k + 1; l < N; ++l) {
        add(form_ * (unit(N, k, l) - unit(N, l, k)));
        add(form_ * (unit(N, k, l, I_unit) + unit(N, l, k, I_unit)));
      }
    for (int k = 0; k < N; ++k) add(form_ * unit(N, k, k, I_unit));
    // Traces are nonzero multiples of i; differences against the first carrier.
    for (std::size_t j = 1; j < traced.size(); ++j) {
      double ratio = (traced[j].trace() / traced[0].trace()).real();
      basis_.push_back(traced[j] - ratio * traced[0]);
    }
  }

  RMatrix V(2 * size_ * size_, dim());
  for (int j = 0; j < dim(); ++j) V.col(j) = vectorize(basis_[j]);
  coord_map_ = left_inverse(V);
}

std::string LieAlgebraSpace::label() const {
  std::ostringstream os;
  if (family_ == Family::SL_n_R)
    os << "sl(" << size_ << ",R)";
  else
    os << "su(" << p_ << "," << q_ << ")";
  return os.str();
}

RVector LieAlgebraSpace::coordinates(const CMatrix& X) const {
  if (X.rows() != size_ || X.cols() != size_)
    throw ShapeError("coordinates: expected a " + std::to_string(size_) + "x" + std::to_string(size_) +
                     " matrix");
  return coord_map_ * vectorize(X);
}

CMatrix LieAlgebraSpace::element(const RVector& c) const {
  if (c.size() != dim()) throw ShapeError("element: coordinate vector has wrong length");
  CMatrix X = CMatrix::Zero(size_, size_);
  for (int j = 0; j < dim(); ++j)
    if (c(j) != 0.0) X += c(j) * basis_[j];
  return X;
}

double LieAlgebraSpace::membership_residual(const CMatrix& X) const {
  if (X.rows() != size_ || X.cols() != size_) throw ShapeError("membership: wrong matrix size");
  double r = std::abs(X.trace());
  if (family_ == Family::SL_n_R)
    r += X.imag().norm();
  else
    r += (X.adjoint() * form_ + form_ * X).norm();
  return r / std::max(1.0, X.norm());
}

void LieAlgebraSpace::require_member(const CMatrix& X, double tol, const std::string& what) const {
  double r = membership_residual(X);
  if (!(r <= tol)) {
    std::ostringstream os;
    os << what << " is not in " << label() << " (relative residual " << r << ", tolerance " << tol << ")";
    throw MembershipError(os.str());
  }
}

double LieAlgebraSpace::group_residual(const CMatrix& g) const {
  if (g.rows() != size_ || g.cols() != size_) throw ShapeError("group element: wrong matrix size");
  // |det g| = 1 is checked through the log singular values, which stays
  // accurate for badly conditioned g; the phase of det separately.
  Eigen::JacobiSVD<CMatrix> svd(g);
  double r = std::abs(svd.singularValues().array().log().sum());
  Complex det = g.determinant();
  if (std::abs(det) == 0.0) return std::numeric_limits<double>::infinity();
  r += std::abs(det / std::abs(det) - 1.0);
  if (family_ == Family::SL_n_R)
    r += g.imag().norm() / std::max(1.0, g.norm());
  else
    r += (g.adjoint() * form_ * g - form_).norm() / std::max(1.0, g.squaredNorm());
  return r;
}

Algebra make_sl(int n) { return std::make_shared<const LieAlgebraSpace>(Family::SL_n_R, n); }

Algebra make_su(int p, int q) { return std::make_shared<const LieAlgebraSpace>(Family::SU_p_q, p, q); }

Algebra make_algebra(const std::string& family, const std::vector<int>& params) {
  if (family == "sl") {
    if (params.size() != 1) throw ParameterError("family sl takes one parameter n");
    return make_sl(params[0]);
  }
  if (family == "su") {
    if (params.size() != 2) throw ParameterError("family su takes two parameters p q");
    return make_su(params[0], params[1]);
  }
  throw ParameterError("unknown family '" + family + "' (expected sl or su)");
}

RVector vectorize(const CMatrix& X) {
  const Eigen::Index m = X.size();
  RVector v(2 * m);
  v.head(m) = X.real().reshaped();
  v.tail(m) = X.imag().reshaped();
  return v;
}

CMatrix bracket(const CMatrix& X, const CMatrix& Y) {
  if (X.rows() != X.cols() || Y.rows() != Y.cols() || X.rows() != Y.rows())
    throw ShapeError("bracket: operands must be square matrices of equal size");
  return X * Y - Y * X;
}

CMatrix cartan_involution(const LieAlgebraSpace& alg, const CMatrix& X, double tol) {
  alg.require_member(X, tol, "argument of the Cartan involution");
  if (alg.is_real()) return -X.transpose();
  return -X.adjoint();
}

RMatrix adjoint_operator(const LieAlgebraSpace& alg, const CMatrix& X, double tol, Exec exec) {
  alg.require_member(X, tol, "argument of ad");
  return kernels::adjoint_matrix(alg, X, exec);
}

SubspaceOfG::SubspaceOfG(Algebra parent, RMatrix basis) : parent_(std::move(parent)), basis_(std::move(basis)) {
  if (basis_.rows() != parent_->dim()) throw ShapeError("subspace basis has wrong coordinate length");
}

std::vector<CMatrix> SubspaceOfG::elements() const {
  std::vector<CMatrix> out;
  for (int i = 0; i < dim(); ++i) out.push_back(element(i));
  return out;
}

double SubspaceOfG::relative_distance(const RVector& c) const {
  double n = c.norm();
  if (n == 0.0) return 0.0;
  RVector r = c - basis_ * (basis_.transpose() * c);
  return r.norm() / n;
}

bool SubspaceOfG::contains_subspace(const SubspaceOfG& other, double tol) const {
  for (int i = 0; i < other.dim(); ++i)
    if (!contains(other.basis().col(i), tol)) return false;
  return true;
}

RMatrix orthonormal_span(const RMatrix& coords, double rank_tol) {
  if (coords.cols() == 0) return RMatrix(coords.rows(), 0);
  Eigen::JacobiSVD<RMatrix> svd(coords, Eigen::ComputeThinU);
  const RVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= kNoiseFloor) return RMatrix(coords.rows(), 0);
  int r = 0;
  while (r < s.size() && s(r) > rank_tol * s(0) && s(r) > kNoiseFloor) ++r;
  return svd.matrixU().leftCols(r);
}

RMatrix numerical_kernel(const RMatrix& M, double rank_tol) {
  const Eigen::Index n = M.cols();
  if (M.rows() == 0) return RMatrix::Identity(n, n);
  Eigen::JacobiSVD<RMatrix> svd(M, Eigen::ComputeFullV);
  const RVector& s = svd.singularValues();
  if (s.size() == 0 || s(0) <= kNoiseFloor) return RMatrix::Identity(n, n);
  Eigen::Index r = 0;
  while (r < s.size() && s(r) > rank_tol * s(0) && s(r) > kNoiseFloor) ++r;
  return svd.matrixV().rightCols(n - r);
}

SubspaceOfG span_of(const Algebra& alg, const RMatrix& coords, double rank_tol) {
  return SubspaceOfG(alg, orthonormal_span(coords, rank_tol));
}

SubspaceOfG whole_algebra(const Algebra& alg) {
  return SubspaceOfG(alg, RMatrix::Identity(alg->dim(), alg->dim()));
}

SubspaceOfG centralizer(const Algebra& alg, const CMatrix& X, const Tolerances& tol) {
  RMatrix ad = adjoint_operator(*alg, X, tol.membership);
  return SubspaceOfG(alg, numerical_kernel(ad, tol.rank));
}

SubspaceOfG generated_subalgebra(const Algebra& alg, const std::vector<CMatrix>& seeds,
                                 const Tolerances& tol, Exec exec) {
  const int d = alg->dim();
  RMatrix seed_coords(d, static_cast<Eigen::Index>(seeds.size()));
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    alg->require_member(seeds[i], tol.membership, "seed " + std::to_string(i));
    RVector c = alg->coordinates(seeds[i]);
    double n = c.norm();
    seed_coords.col(i) = n > 0 ? RVector(c / n) : c;
  }
  RMatrix Q = orthonormal_span(seed_coords, tol.rank);
  Eigen::Index fresh_begin = 0;

  while (Q.cols() > fresh_begin && Q.cols() < d) {
    const Eigen::Index total = Q.cols();
    std::vector<CMatrix> elems;
    elems.reserve(total);
    for (Eigen::Index i = 0; i < total; ++i) elems.push_back(alg->element(Q.col(i)));
    // (old + new) x new, each unordered pair once.
    std::vector<std::pair<int, int>> pairs;
    for (Eigen::Index j = fresh_begin; j < total; ++j)
      for (Eigen::Index i = 0; i < j; ++i) pairs.emplace_back(static_cast<int>(i), static_cast<int>(j));
    if (pairs.empty()) break;
    RMatrix C = kernels::bracket_coordinates(*alg, elems, pairs, exec);

    RMatrix Cn(d, C.cols());
    Eigen::Index kept = 0;
    for (Eigen::Index k = 0; k < C.cols(); ++k) {
      double n = C.col(k).norm();
      if (n > 1e-14) Cn.col(kept++) = C.col(k) / n;
    }
    if (kept == 0) break;
    Cn.conservativeResize(d, kept);
    Eigen::JacobiSVD<RMatrix> full(Cn);
    const double scale = full.singularValues()(0);

    RMatrix R = Cn - Q * (Q.transpose() * Cn);
    R -= Q * (Q.transpose() * R);
    Eigen::JacobiSVD<RMatrix> svd(R, Eigen::ComputeThinU);
    const RVector& s = svd.singularValues();
    Eigen::Index r = 0;
    while (r < s.size() && s(r) > tol.rank * scale) ++r;
    if (r == 0) break;
    r = std::min<Eigen::Index>(r, d - total);
    RMatrix fresh = svd.matrixU().leftCols(r);
    fresh -= Q * (Q.transpose() * fresh);
    Eigen::HouseholderQR<RMatrix> qr(fresh);
    fresh = qr.householderQ() * RMatrix::Identity(d, r);

    RMatrix next(d, total + r);
    next << Q, fresh;
    Q = std::move(next);
    fresh_begin = total;
  }
  return SubspaceOfG(alg, Q);
}

double bracket_closure_defect(const SubspaceOfG& s) {
  const auto& alg = *s.parent();
  std::vector<CMatrix> elems = s.elements();
  double worst = 0.0;
  for (int i = 0; i < s.dim(); ++i)
    for (int j = i + 1; j < s.dim(); ++j) {
      RVector c = alg.coordinates(bracket(elems[i], elems[j]));
      worst = std::max(worst, s.relative_distance(c));
    }
  return worst;
}

std::string to_string(ElementKind k) {
  switch (k) {
    case ElementKind::elliptic:
      return "elliptic";
    case ElementKind::hyperbolic:
      return "hyperbolic";
    case ElementKind::nilpotent:
      return "nilpotent";
    case ElementKind::mixed:
      return "mixed";
  }
  return "mixed";
}

namespace {

bool is_nilpotent_matrix(const CMatrix& X, double tol) {
  const double s = X.norm();
  if (s == 0.0) return true;
  CMatrix P = X / s;
  CMatrix acc = P;
  for (int k = 1; k < X.rows(); ++k) acc = acc * P;
  return acc.norm() <= tol;
}

// Semisimplicity: the product over distinct eigenvalues of (X - lambda) vanishes.
bool is_semisimple(const CMatrix& X, const Eigen::VectorXcd& ev, double scale) {
  std::vector<Complex> distinct;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    bool seen = false;
    for (const auto& d : distinct)
      if (std::abs(d - ev(i)) <= 1e-6 * scale) seen = true;
    if (!seen) distinct.push_back(ev(i));
  }
  const Eigen::Index N = X.rows();
  CMatrix P = CMatrix::Identity(N, N);
  for (const auto& d : distinct) P = P * ((X - d * CMatrix::Identity(N, N)) / scale);
  return P.norm() <= 1e-6;
}

}  // namespace

ElementKind classify_algebra_element(const CMatrix& X, double tol) {
  if (X.rows() != X.cols()) throw ShapeError("classify: square matrix expected");
  const double scale = X.norm();
  if (scale == 0.0) return ElementKind::nilpotent;
  Eigen::ComplexEigenSolver<CMatrix> es(X, false);
  const Eigen::VectorXcd& ev = es.eigenvalues();
  // Eigenvalues of a nilpotent matrix are only accurate to eps^(1/N), so the
  // spectral test is loose and the power test decides.
  if (ev.cwiseAbs().maxCoeff() <= 1e-3 * scale && is_nilpotent_matrix(X, tol)) return ElementKind::nilpotent;
  if (!is_semisimple(X, ev, scale)) return ElementKind::mixed;
  bool real = true, imaginary = true;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev(i).imag()) > 1e-7 * scale) real = false;
    if (std::abs(ev(i).real()) > 1e-7 * scale) imaginary = false;
  }
  if (imaginary) return ElementKind::elliptic;
  if (real) return ElementKind::hyperbolic;
  return ElementKind::mixed;
}

ElementKind classify_group_element(const CMatrix& g, double tol) {
  if (g.rows() != g.cols()) throw ShapeError("classify: square matrix expected");
  const Eigen::Index N = g.rows();
  CMatrix u = g - CMatrix::Identity(N, N);
  const double scale = std::max(1.0, g.norm());
  Eigen::ComplexEigenSolver<CMatrix> es(g, false);
  const Eigen::VectorXcd& ev = es.eigenvalues();
  if (u.norm() <= tol * scale) return ElementKind::nilpotent;
  if ((ev.array() - 1.0).abs().maxCoeff() <= 1e-3 && is_nilpotent_matrix(u, tol)) return ElementKind::nilpotent;
  if (!is_semisimple(g, ev, scale)) return ElementKind::mixed;
  bool unit = true, positive = true;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(std::abs(ev(i)) - 1.0) > 1e-7 * scale) unit = false;
    if (std::abs(ev(i).imag()) > 1e-7 * scale || ev(i).real() <= 0.0) positive = false;
  }
  if (unit) return ElementKind::elliptic;
  if (positive) return ElementKind::hyperbolic;
  return ElementKind::mixed;
}

}  // namespace liesurf

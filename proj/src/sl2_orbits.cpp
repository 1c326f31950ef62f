#include "liesurf/sl2_orbits.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/QR>
#include <Eigen/SVD>
#include <unsupported/Eigen/MatrixFunctions>

namespace liesurf {

namespace {

constexpr double kPi = 3.14159265358979323846;

CMatrix zeros(int N) { return CMatrix::Zero(N, N); }

int round_weight(double x, double tol, const char* what) {
  double r = std::round(x);
  if (std::abs(x - r) > tol) {
    std::ostringstream os;
    os << what << ": eigenvalue " << x << " is not an integer";
    throw NumericalError(os.str());
  }
  return static_cast<int>(r);
}

std::map<int, int> weights_of(const RMatrix& M, double tol) {
  std::map<int, int> out;
  if (M.rows() == 0) return out;
  Eigen::EigenSolver<RMatrix> es(M, false);
  for (Eigen::Index i = 0; i < M.rows(); ++i) {
    Complex ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > tol) throw NumericalError("ad H has a non-real eigenvalue");
    ++out[round_weight(ev.real(), tol, "ad H")];
  }
  return out;
}

// Kernel with an absolute singular-value cutoff, so that an operator that is
// zero up to rounding on a block is recognized as zero there.
RMatrix kernel_abs(const RMatrix& M, double cutoff) {
  const Eigen::Index n = M.cols();
  if (M.rows() == 0 || n == 0) return RMatrix::Identity(n, n);
  Eigen::JacobiSVD<RMatrix> svd(M, Eigen::ComputeFullV);
  const RVector& sv = svd.singularValues();
  Eigen::Index r = 0;
  while (r < sv.size() && sv(r) > cutoff) ++r;
  return svd.matrixV().rightCols(n - r);
}

// Restriction of an operator on g to an invariant subspace with orthonormal basis Q.
RMatrix restrict(const RMatrix& A, const RMatrix& Q) { return Q.transpose() * A * Q; }

void attach_dominant(Sl2Triple& t) {
  if (!t.torus) return;
  auto c = t.torus->coordinates_of(t.H);
  if (c) t.dominant = dominant_representative(*t.torus, *c).v_plus;
}

// Rows reduced to echelon form with partial pivoting; gives a basis of the
// row span that does not depend on the input basis.
RMatrix numerical_rref(RMatrix R) {
  const Eigen::Index rows = R.rows(), cols = R.cols();
  const double thresh = 1e-8 * std::max(1.0, R.cwiseAbs().maxCoeff());
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < cols && r < rows; ++c) {
    Eigen::Index best;
    double v = R.col(c).tail(rows - r).cwiseAbs().maxCoeff(&best);
    if (v <= thresh) continue;
    best += r;
    R.row(r).swap(R.row(best));
    R.row(r) /= R(r, c);
    for (Eigen::Index k = 0; k < rows; ++k)
      if (k != r) R.row(k) -= R(k, c) * R.row(r);
    ++r;
  }
  if (r < rows) throw NumericalError("highest weight vectors are numerically dependent");
  return R;
}

}  // namespace

std::string to_string(TripleKind k) {
  switch (k) {
    case TripleKind::partition: return "partition";
    case TripleKind::rho1: return "rho1";
    case TripleKind::rho2: return "rho2";
    case TripleKind::custom: return "custom";
  }
  return "custom";
}

std::string partition_symbol(const std::vector<int>& parts) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (i > 0) os << ",";
    os << parts[i];
    if (j - i > 1) os << "^" << (j - i);
    i = j;
  }
  os << "]";
  return os.str();
}

bool parity_rule_even(const std::vector<int>& parts) {
  for (int p : parts)
    if ((p - parts.front()) % 2 != 0) return false;
  return true;
}

std::vector<std::vector<int>> partitions_of(int n) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      self(self, remaining - k, k);
      cur.pop_back();
    }
  };
  if (n >= 1) rec(rec, n, n);
  return out;
}

Sl2Triple sl2_from_partition(const Torus& torus, const std::vector<int>& parts) {
  const Algebra& alg = torus->parent;
  if (alg->family() != Family::SL_n_R) throw ParameterError("partition triples are defined for sl(n,R) only");
  const int n = alg->n();
  if (parts.empty() || std::any_of(parts.begin(), parts.end(), [](int p) { return p < 1; }) ||
      std::accumulate(parts.begin(), parts.end(), 0) != n)
    throw ParameterError("not a partition of " + std::to_string(n) + ": " + partition_symbol(parts));

  Sl2Triple t;
  t.alg = alg;
  t.torus = torus;
  t.kind = TripleKind::partition;
  t.partition = parts;
  std::sort(t.partition.begin(), t.partition.end(), std::greater<int>());
  t.label = partition_symbol(t.partition);
  t.H = t.E = t.F = zeros(n);
  int off = 0;
  for (int p : t.partition) {
    for (int j = 0; j < p; ++j) t.H(off + j, off + j) = p - 1 - 2 * j;
    for (int j = 1; j < p; ++j) {
      double c = std::sqrt(static_cast<double>(j * (p - j)));
      t.E(off + j - 1, off + j) = c;
      t.F(off + j, off + j - 1) = c;
    }
    off += p;
  }
  attach_dominant(t);
  return t;
}

Sl2Triple sl2_from_partition(const Algebra& sl_n, const std::vector<int>& parts) {
  return sl2_from_partition(split_torus(sl_n), parts);
}

Sl2Triple rho1_su(const Torus& torus) {
  const Algebra& alg = torus->parent;
  if (alg->family() != Family::SU_p_q) throw ParameterError("rho1 is defined for su(p,q) only");
  const int p = alg->p(), q = alg->q(), N = p + q;
  Sl2Triple t;
  t.alg = alg;
  t.torus = torus;
  t.kind = TripleKind::rho1;
  t.label = "rho1";
  t.H = t.E = zeros(N);
  const Complex I(0.0, 1.0);
  for (int k = 0; k < q; ++k) {
    t.H(k, k) = 1.0;
    t.H(N - q + k, N - q + k) = -1.0;
    t.E(k, N - q + k) = I;
  }
  t.F = t.E.adjoint();
  attach_dominant(t);
  return t;
}

Sl2Triple rho1_su(const Algebra& su_pq) { return rho1_su(split_torus(su_pq)); }

Sl2Triple rho2_su(const Torus& torus) {
  const Algebra& alg = torus->parent;
  if (alg->family() != Family::SU_p_q) throw ParameterError("rho2 is defined for su(p,q) only");
  const int p = alg->p(), q = alg->q(), N = p + q;
  if (p == q) throw ParameterError("rho2 is undefined for p = q");
  Sl2Triple t;
  t.alg = alg;
  t.torus = torus;
  t.kind = TripleKind::rho2;
  t.label = "rho2";
  t.H = t.E = zeros(N);
  auto c = [q](int k) { return Complex(0.0, std::sqrt(static_cast<double>(k * (2 * q + 1 - k)))); };
  for (int k = 0; k < q; ++k) {
    t.H(k, k) = 2.0 * (q - k);
    t.H(N - 1 - k, N - 1 - k) = -2.0 * (q - k);
  }
  // First block: chain 0 -> 1 -> ... -> q with c_1..c_q.
  for (int k = 1; k <= q; ++k) t.E(k - 1, k) = c(k);
  // Link from the weight-0 slot q to the first slot p of the last block.
  t.E(q, p) = c(q);
  // Last block: c_{q-1}, ..., c_1.
  for (int k = 1; k < q; ++k) t.E(p + k - 1, p + k) = c(q - k);
  t.F = t.E.adjoint();
  attach_dominant(t);
  return t;
}

Sl2Triple rho2_su(const Algebra& su_pq) { return rho2_su(split_torus(su_pq)); }

Sl2Triple custom_triple(const Torus& torus, const CMatrix& H, const CMatrix& E, const CMatrix& F,
                        const std::string& label, const Tolerances& tol) {
  const Algebra& alg = torus->parent;
  alg->require_member(H, tol.membership, "H");
  alg->require_member(E, tol.membership, "E");
  alg->require_member(F, tol.membership, "F");
  Sl2Triple t;
  t.alg = alg;
  t.torus = torus;
  t.kind = TripleKind::custom;
  t.label = label;
  t.H = H;
  t.E = E;
  t.F = F;
  attach_dominant(t);
  return t;
}

TripleCheck verify_sl2_triple(const Sl2Triple& t, const Tolerances& tol) {
  TripleCheck c;
  const double s = std::max({1.0, t.H.norm(), t.E.norm(), t.F.norm()});
  c.r_he = (bracket(t.H, t.E) - 2.0 * t.E).norm() / (s * s);
  c.r_hf = (bracket(t.H, t.F) + 2.0 * t.F).norm() / (s * s);
  c.r_ef = (bracket(t.E, t.F) - t.H).norm() / (s * s);
  c.membership = std::max({t.alg->membership_residual(t.H), t.alg->membership_residual(t.E),
                           t.alg->membership_residual(t.F)});
  c.ok = c.r_he <= tol.membership && c.r_hf <= tol.membership && c.r_ef <= tol.membership &&
         c.membership <= tol.membership;
  return c;
}

std::map<int, int> weight_multiplicities(const Sl2Triple& t, const Tolerances& tol) {
  return weights_of(adjoint_operator(*t.alg, t.H, tol.membership), tol.weight_rounding);
}

std::map<int, int> weight_multiplicities(const Sl2Triple& t, const SubspaceOfG& S, const Tolerances& tol) {
  RMatrix ad = adjoint_operator(*t.alg, t.H, tol.membership);
  return weights_of(restrict(ad, S.basis()), tol.weight_rounding);
}

bool is_even(const Sl2Triple& t, const Tolerances& tol) {
  for (const auto& [w, m] : weight_multiplicities(t, tol))
    if (w % 2 != 0 && m > 0) return false;
  return true;
}

CMatrix sigma(const Sl2Triple& t, const Tolerances& tol) {
  const Eigen::Index N = t.H.rows();
  Eigen::ComplexEigenSolver<CMatrix> es(t.H);
  Eigen::VectorXcd d(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    Complex ev = es.eigenvalues()(i);
    if (std::abs(ev.imag()) > tol.weight_rounding)
      throw NumericalError("sigma: H has a non-real eigenvalue");
    int k = round_weight(ev.real(), tol.weight_rounding, "sigma");
    d(i) = (k % 2 == 0) ? 1.0 : -1.0;
  }
  const CMatrix& V = es.eigenvectors();
  CMatrix S = V * d.asDiagonal() * V.inverse();
  if (S.imag().norm() > 1e-8 * std::max(1.0, S.norm()))
    throw NumericalError("sigma: result is not real");
  CMatrix out = S.real().cast<Complex>();
  // Snap to the exact +-1/0 pattern when H was diagonal.
  for (Eigen::Index i = 0; i < N; ++i)
    for (Eigen::Index j = 0; j < N; ++j) {
      double x = out(i, j).real();
      double r = std::round(x);
      if (std::abs(x - r) <= 1e-12) out(i, j) = r;
    }
  return out;
}

SubspaceOfG g_even(const Sl2Triple& t, const Tolerances& tol) {
  const int d = t.alg->dim();
  RMatrix ad = adjoint_operator(*t.alg, t.H, tol.membership);
  RMatrix acc(d, 0);
  for (const auto& [w, m] : weights_of(ad, tol.weight_rounding)) {
    if (w % 2 != 0) continue;
    RMatrix K = kernel_abs(ad - w * RMatrix::Identity(d, d), tol.rank * std::max(1.0, ad.norm()));
    if (K.cols() != m) throw NumericalError("g_even: weight space dimension disagrees with multiplicity");
    RMatrix next(d, acc.cols() + K.cols());
    next << acc, K;
    acc = next;
  }
  return span_of(t.alg, acc, tol.rank);
}

SubspaceOfG ad_sigma_fixed(const Sl2Triple& t, const Tolerances& tol) {
  const auto& alg = *t.alg;
  const int d = alg.dim();
  CMatrix s = sigma(t, tol);
  CMatrix sinv = s.inverse();
  RMatrix A(d, d);
  for (int j = 0; j < d; ++j) A.col(j) = alg.coordinates(s * alg.basis_element(j) * sinv);
  return SubspaceOfG(t.alg, kernel_abs(A - RMatrix::Identity(d, d), tol.rank * std::max(1.0, A.norm())));
}

SubspaceOfG triple_centralizer(const Sl2Triple& t, const Tolerances& tol) {
  const int d = t.alg->dim();
  RMatrix M(3 * d, d);
  M << adjoint_operator(*t.alg, t.H, tol.membership), adjoint_operator(*t.alg, t.E, tol.membership),
      adjoint_operator(*t.alg, t.F, tol.membership);
  return SubspaceOfG(t.alg, numerical_kernel(M, tol.rank));
}

int IsotypicData::piece_of(int i, int j) const {
  for (std::size_t k = 0; k < lambda.size(); ++k)
    if (lambda[k].first == i && lambda[k].second == j) return lambda_piece[k];
  return -1;
}

RVector IsotypicData::model_coefficients(int piece, const RVector& x) const {
  const auto& pc = pieces.at(piece);
  return coefficient_map.middleRows(offsets.at(piece), pc.dimension) * x;
}

RVector IsotypicData::project(int piece, const RVector& x) const {
  return pieces.at(piece).chain * model_coefficients(piece, x);
}

IsotypicData module_multiplicities(const Sl2Triple& t, const Tolerances& tol) {
  return module_multiplicities(t, whole_algebra(t.alg), tol);
}

IsotypicData module_multiplicities(const Sl2Triple& t, const SubspaceOfG& S, const Tolerances& tol) {
  const auto& alg = *t.alg;
  const RMatrix& Q = S.basis();
  const Eigen::Index s = Q.cols();
  RMatrix adH = adjoint_operator(alg, t.H, tol.membership);
  RMatrix adE = adjoint_operator(alg, t.E, tol.membership);
  RMatrix adF = adjoint_operator(alg, t.F, tol.membership);
  RMatrix MH = restrict(adH, Q), ME = restrict(adE, Q);
  if ((adH * Q - Q * MH).norm() > 1e-7 * std::max(1.0, adH.norm()) ||
      (adE * Q - Q * ME).norm() > 1e-7 * std::max(1.0, adE.norm()))
    throw ParameterError("subspace is not invariant under the triple");

  IsotypicData out;
  out.weight_mult = weights_of(MH, tol.weight_rounding);
  auto m = [&](int w) {
    auto it = out.weight_mult.find(w);
    return it == out.weight_mult.end() ? 0 : it->second;
  };
  int top = out.weight_mult.empty() ? 0 : out.weight_mult.rbegin()->first;
  for (int k = top + 1; k >= 1; --k) {
    int mult = m(k - 1) - m(k + 1);
    if (mult < 0) throw NumericalError("negative module multiplicity from the weight table");
    if (mult > 0) out.module_mult[k] = mult;
  }

  const double cut_h = tol.rank * std::max(1.0, adH.norm());
  const double cut_e = tol.rank * std::max(1.0, adE.norm());
  std::vector<RVector> columns;
  for (auto it = out.module_mult.rbegin(); it != out.module_mult.rend(); ++it) {
    const int k = it->first, w = k - 1, mult = it->second;
    RMatrix N = kernel_abs(MH - w * RMatrix::Identity(s, s), cut_h);
    if (N.cols() != m(w)) throw NumericalError("numerical rank ambiguity in a weight space");
    RMatrix C = kernel_abs(ME * N, cut_e);
    if (C.cols() != mult) throw NumericalError("numerical rank ambiguity among highest weight vectors");
    RMatrix hw = numerical_rref(RMatrix((Q * N * C).transpose()));
    for (int j = 0; j < mult; ++j) {
      IsotypicPiece pc;
      pc.dimension = k;
      pc.index = j + 1;
      pc.chain.resize(alg.dim(), k);
      pc.chain.col(0) = hw.row(j).transpose();
      for (int l = 1; l < k; ++l) pc.chain.col(l) = adF * pc.chain.col(l - 1);
      RVector tail = adF * pc.chain.col(k - 1);
      if (tail.norm() > 1e-7 * std::max(1.0, adF.norm()) * pc.chain.col(k - 1).norm())
        throw NumericalError("F-chain of a highest weight vector does not terminate");
      out.offsets.push_back(static_cast<int>(columns.size()));
      for (int l = 0; l < k; ++l) columns.push_back(pc.chain.col(l));
      if (k % 2 == 1) {
        out.lambda.emplace_back((k - 1) / 2, j + 1);
        out.lambda_piece.push_back(static_cast<int>(out.pieces.size()));
      }
      out.pieces.push_back(std::move(pc));
    }
  }
  if (static_cast<Eigen::Index>(columns.size()) != s)
    throw NumericalError("isotypic pieces do not fill the subspace");
  RMatrix P(alg.dim(), s);
  for (Eigen::Index c = 0; c < s; ++c) P.col(c) = columns[c];
  out.coefficient_map = P.completeOrthogonalDecomposition().pseudoInverse();
  return out;
}

int genus_bound(const Sl2Triple& t, const SubspaceOfG& S, const Tolerances& tol) {
  auto wm = weight_multiplicities(t, S, tol);
  auto m = [&](int w) {
    auto it = wm.find(w);
    return it == wm.end() ? 0 : it->second;
  };
  int total = 0;
  // [S : V_{2i+1}] = m_{2i} - m_{2i+2}
  for (const auto& [w, mult] : wm)
    if (w >= 0 && w % 2 == 0) total += mult - m(w + 2);
  return total;
}

std::vector<Sl2Triple> even_sl2_basis_of_b(const Torus& torus) {
  const Algebra& alg = torus->parent;
  if (alg->family() != Family::SL_n_R) throw UnsupportedError("even basis of b is implemented for sl(n,R) only");
  const int target = static_cast<int>(torus->b_basis.size());
  std::vector<Sl2Triple> out;
  QMatrix chosen;
  for (const auto& parts : partitions_of(alg->n())) {
    if (static_cast<int>(chosen.size()) == target) break;
    if (!parity_rule_even(parts)) continue;
    Sl2Triple t = sl2_from_partition(torus, parts);
    QMatrix trial = chosen;
    trial.push_back(*t.dominant);
    if (rank(trial) > static_cast<int>(chosen.size())) {
      chosen = std::move(trial);
      out.push_back(std::move(t));
    }
  }
  if (static_cast<int>(chosen.size()) != target)
    throw NumericalError("even triples do not span b");
  return out;
}

std::vector<Sl2Triple> even_sl2_basis_of_b(const Algebra& sl_n) { return even_sl2_basis_of_b(split_torus(sl_n)); }

std::vector<StarElement> property_star_basis(const SubspaceOfG& z, const Tolerances& tol) {
  const auto& alg = *z.parent();
  const int d = alg.dim();
  std::vector<StarElement> out;
  if (z.dim() == 0) return out;

  RMatrix Kc(d, z.dim()), Pc(d, z.dim());
  for (int i = 0; i < z.dim(); ++i) {
    RVector c = z.basis().col(i);
    RVector tc = alg.coordinates(cartan_involution(alg, alg.element(c), tol.membership));
    if (!z.contains(tc, tol.rank)) throw UnsupportedError("centralizer is not stable under the Cartan involution");
    Kc.col(i) = 0.5 * (c + tc);
    Pc.col(i) = 0.5 * (c - tc);
  }
  RMatrix K = orthonormal_span(Kc, tol.rank);
  RMatrix P = orthonormal_span(Pc, tol.rank);
  if (K.cols() + P.cols() != z.dim()) throw NumericalError("Cartan decomposition of the centralizer is inconsistent");

  // Compact part: rescale candidates so that exp(X) = 1.
  std::vector<RVector> candidates;
  if (K.cols() > 0) {
    RMatrix R = numerical_rref(RMatrix(K.transpose()));
    for (Eigen::Index i = 0; i < R.rows(); ++i) candidates.push_back(R.row(i).transpose());
    for (int j = 0; j < d; ++j) {
      RVector c = K * K.row(j).transpose();
      if (c.norm() > 1e-8) candidates.push_back(c);
    }
  }
  RMatrix accepted(d, 0);
  for (const auto& c : candidates) {
    if (accepted.cols() == K.cols()) break;
    CMatrix Y = alg.element(c);
    Eigen::ComplexEigenSolver<CMatrix> es(Y, false);
    const auto& ev = es.eigenvalues();
    double lmax = ev.imag().cwiseAbs().maxCoeff();
    if (lmax < 1e-12) continue;
    long L = 1;
    bool ok = true;
    for (Eigen::Index i = 0; i < ev.size() && ok; ++i) {
      auto r = rationalize(ev(i).imag() / lmax, 1e-9, 60);
      if (!r) {
        ok = false;
        break;
      }
      L = std::lcm(L, r->get_den().get_si());
    }
    if (!ok) continue;
    CMatrix X = (2.0 * kPi * static_cast<double>(L) / lmax) * Y;
    double res = (X.exp() - CMatrix::Identity(X.rows(), X.cols())).norm();
    if (res > tol.period) continue;
    RMatrix trial(d, accepted.cols() + 1);
    trial << accepted, alg.coordinates(X);
    if (orthonormal_span(trial, tol.rank).cols() <= accepted.cols()) continue;
    accepted = trial;
    out.push_back({X, classify_algebra_element(X), res});
  }
  if (accepted.cols() != K.cols())
    throw UnsupportedError("no period-one basis of the compact part of the centralizer among the tried candidates");

  for (Eigen::Index i = 0; i < P.cols(); ++i) {
    CMatrix X = alg.element(P.col(i));
    ElementKind kind = classify_algebra_element(X);
    if (kind != ElementKind::hyperbolic && kind != ElementKind::nilpotent)
      throw UnsupportedError("noncompact centralizer element is neither hyperbolic nor nilpotent");
    out.push_back({X, kind, 0.0});
  }
  return out;
}

}  // namespace liesurf

#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's exact or numerical machinery; each oracle takes a different route
// to the same answer.

#include <algorithm>
#include <map>
#include <numeric>
#include <vector>

#include <gmpxx.h>
#include <Eigen/Dense>
#include <unsupported/Eigen/MatrixFunctions>

namespace oracle {

using Q = mpq_class;
using QVec = std::vector<Q>;

// Rank by fraction-free elimination on a copy.
inline int exact_rank(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  const std::size_t n = rows[0].size();
  int r = 0;
  for (std::size_t c = 0; c < n && r < static_cast<int>(rows.size()); ++c) {
    int piv = -1;
    for (std::size_t i = r; i < rows.size(); ++i)
      if (rows[i][c] != 0) {
        piv = static_cast<int>(i);
        break;
      }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (static_cast<int>(i) == r || rows[i][c] == 0) continue;
      Q f = rows[i][c] / rows[r][c];
      for (std::size_t k = c; k < n; ++k) rows[i][k] -= f * rows[r][k];
    }
    ++r;
  }
  return r;
}

inline bool in_span(const std::vector<QVec>& basis, const QVec& v) {
  auto ext = basis;
  ext.push_back(v);
  return exact_rank(ext) == exact_rank(basis);
}

// Brute force over all permutations, and over all sign patterns when `signed_`.
inline bool weyl_orbit_meets(const std::vector<QVec>& basis, const QVec& v, bool signed_) {
  const int n = static_cast<int>(v.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  const int sign_patterns = signed_ ? (1 << n) : 1;
  do {
    for (int s = 0; s < sign_patterns; ++s) {
      QVec w(n);
      for (int i = 0; i < n; ++i) w[i] = ((s >> i) & 1 ? -1 : 1) * v[perm[i]];
      if (in_span(basis, w)) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

inline long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }

// Clebsch-Gordan: gl_n restricted along the partition is the sum over part
// pairs of V_a (x) V_b; dropping one trivial summand gives sl_n.
inline std::map<int, int> partition_module_mult(const std::vector<int>& parts) {
  std::map<int, int> out;
  for (int a : parts)
    for (int b : parts)
      for (int k = std::abs(a - b) + 1; k <= a + b - 1; k += 2) ++out[k];
  if (--out[1] == 0) out.erase(1);
  return out;
}

// ad H weights from the diagonal of H (complexified algebra is sl_N).
inline std::map<int, int> diagonal_weights(const std::vector<int>& h) {
  std::map<int, int> out;
  for (int a : h)
    for (int b : h) ++out[a - b];
  if (--out[0] == 0) out.erase(0);
  return out;
}

inline std::map<int, int> modules_from_weights(const std::map<int, int>& m) {
  std::map<int, int> out;
  auto get = [&](int w) {
    auto it = m.find(w);
    return it == m.end() ? 0 : it->second;
  };
  for (auto [w, c] : m)
    if (w >= 0 && c - get(w + 2) > 0) out[w + 1] = c - get(w + 2);
  return out;
}

// Dimension of the centralizer of a real diagonal element of sl_N or su(p,q).
inline int diagonal_centralizer_dim(const std::vector<int>& h) {
  std::map<int, int> mult;
  for (int a : h) ++mult[a];
  int d = -1;
  for (auto [v, c] : mult) d += c * c;
  return d;
}

// ||[A1,B1]...[Ag,Bg] - 1||_F by straight multiplication.
inline double relation_residual(const std::vector<Eigen::MatrixXcd>& gens) {
  const auto N = gens[0].rows();
  Eigen::MatrixXcd P = Eigen::MatrixXcd::Identity(N, N);
  for (std::size_t k = 0; k + 1 < gens.size(); k += 2) {
    const auto& A = gens[k];
    const auto& B = gens[k + 1];
    P = P * A * B * A.inverse() * B.inverse();
  }
  return (P - Eigen::MatrixXcd::Identity(N, N)).norm();
}

// Real vectorization of a complex matrix.
inline Eigen::VectorXd vec(const Eigen::MatrixXcd& X) {
  const auto n = X.size();
  Eigen::VectorXd v(2 * n);
  for (Eigen::Index i = 0; i < n; ++i) {
    v(i) = X.data()[i].real();
    v(n + i) = X.data()[i].imag();
  }
  return v;
}

// Iterated bracket closure in matrix space. Each round stacks the current
// orthonormal basis with all its brackets and keeps the left singular vectors
// above tol * s_max; stops when the rank no longer grows.
inline int closure_dimension(const std::vector<Eigen::MatrixXcd>& seeds, double tol = 1e-9) {
  if (seeds.empty()) return 0;
  const Eigen::Index rows = seeds[0].rows(), cols = seeds[0].cols();
  auto unvec = [&](const Eigen::VectorXd& v) {
    const Eigen::Index n = rows * cols;
    Eigen::MatrixXcd X(rows, cols);
    for (Eigen::Index i = 0; i < n; ++i) X.data()[i] = {v(i), v(n + i)};
    return X;
  };
  auto span = [&](const std::vector<Eigen::MatrixXcd>& mats) {
    Eigen::MatrixXd M(2 * rows * cols, static_cast<Eigen::Index>(mats.size()));
    for (std::size_t k = 0; k < mats.size(); ++k) {
      Eigen::VectorXd v = vec(mats[k]);
      const double n = v.norm();
      M.col(static_cast<Eigen::Index>(k)) = n > 0 ? Eigen::VectorXd(v / n) : v;
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(M, Eigen::ComputeThinU);
    const auto& sv = svd.singularValues();
    std::vector<Eigen::MatrixXcd> out;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
      if (sv(i) > tol * sv(0)) out.push_back(unvec(svd.matrixU().col(i)));
    return out;
  };
  std::vector<Eigen::MatrixXcd> basis = span(seeds);
  for (;;) {
    std::vector<Eigen::MatrixXcd> cand = basis;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (std::size_t j = i + 1; j < basis.size(); ++j) cand.push_back(basis[i] * basis[j] - basis[j] * basis[i]);
    std::vector<Eigen::MatrixXcd> next = span(cand);
    if (next.size() == basis.size()) return static_cast<int>(basis.size());
    basis = std::move(next);
  }
}

// Sorted log moduli of the eigenvalues, descending.
inline Eigen::VectorXd log_moduli(const Eigen::MatrixXcd& g) {
  Eigen::ComplexEigenSolver<Eigen::MatrixXcd> es(g, false);
  Eigen::VectorXd l = es.eigenvalues().cwiseAbs().array().log();
  std::sort(l.data(), l.data() + l.size(), std::greater<double>());
  return l;
}

// Sorted log singular values, descending.
inline Eigen::VectorXd log_singular(const Eigen::MatrixXcd& g) {
  Eigen::JacobiSVD<Eigen::MatrixXcd> svd(g);
  return svd.singularValues().array().log();
}

}  // namespace oracle

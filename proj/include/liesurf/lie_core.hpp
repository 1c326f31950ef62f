#pragma once

#include <memory>
#include <string>
#include <vector>

#include "liesurf/types.hpp"

namespace liesurf {

enum class Family { SL_n_R, SU_p_q };

std::string family_tag(Family f);  // "sl" or "su"

/// Matrix realization of sl(n,R) or su(p,q) with a fixed real basis.
///
/// Basis ordering, sl(n,R): E_kl for k != l in row-major order, then
/// E_kk - E_{k+1,k+1} for k = 0..n-2.
///
/// Basis ordering, su(p,q): every element is B*S with S skew-Hermitian and B
/// the form matrix. S runs over E_kl - E_lk and i(E_kl + E_lk) for k < l in
/// row-major order, then i E_kk. Elements with nonzero trace are replaced by
/// their traceless difference with the first such element, which is dropped.
/// With this choice every basis element is an ad-eigenvector of the diagonal
/// split torus.
class LieAlgebraSpace {
 public:
  LieAlgebraSpace(Family family, int a, int b = 0);

  Family family() const { return family_; }
  int n() const { return size_; }
  int p() const { return p_; }
  int q() const { return q_; }
  int matrix_size() const { return size_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool is_real() const { return family_ == Family::SL_n_R; }
  std::string label() const;

  /// The Hermitian form B_{p,q}; the identity for sl(n,R).
  const CMatrix& form() const { return form_; }
  const std::vector<CMatrix>& basis() const { return basis_; }
  const CMatrix& basis_element(int i) const { return basis_.at(i); }

  /// Coordinates in the basis. No membership check; the result is the
  /// least-squares fit for matrices outside the algebra.
  RVector coordinates(const CMatrix& X) const;
  CMatrix element(const RVector& c) const;

  /// Defining-condition residual divided by max(1, |X|_F).
  double membership_residual(const CMatrix& X) const;
  bool contains(const CMatrix& X, double tol) const { return membership_residual(X) <= tol; }
  void require_member(const CMatrix& X, double tol, const std::string& what) const;

  /// Defining condition for group elements: det g = 1, and g* B g = B for su.
  double group_residual(const CMatrix& g) const;

 private:
  Family family_;
  int p_ = 0;
  int q_ = 0;
  int size_ = 0;
  CMatrix form_;
  std::vector<CMatrix> basis_;
  RMatrix coord_map_;  // dim x 2N^2 left inverse of the vectorized basis
};

using Algebra = std::shared_ptr<const LieAlgebraSpace>;

Algebra make_sl(int n);
Algebra make_su(int p, int q);
/// family is "sl" (params {n}) or "su" (params {p, q}).
Algebra make_algebra(const std::string& family, const std::vector<int>& params);

/// Real vectorization [Re X; Im X], column-major, length 2N^2.
RVector vectorize(const CMatrix& X);

CMatrix bracket(const CMatrix& X, const CMatrix& Y);
CMatrix cartan_involution(const LieAlgebraSpace& alg, const CMatrix& X, double tol = 1e-9);
/// Matrix of ad X in the algebra basis (column j = coordinates of [X, b_j]).
RMatrix adjoint_operator(const LieAlgebraSpace& alg, const CMatrix& X, double tol = 1e-9,
                         Exec exec = Exec::parallel);

/// Subspace of g given by an orthonormal coordinate basis (columns).
class SubspaceOfG {
 public:
  SubspaceOfG() = default;
  SubspaceOfG(Algebra parent, RMatrix basis);

  const Algebra& parent() const { return parent_; }
  const RMatrix& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.cols()); }
  CMatrix element(int i) const { return parent_->element(basis_.col(i)); }
  std::vector<CMatrix> elements() const;
  /// Distance from coordinate vector c to the subspace, relative to |c|.
  double relative_distance(const RVector& c) const;
  bool contains(const RVector& c, double tol) const { return relative_distance(c) <= tol; }
  bool contains_subspace(const SubspaceOfG& other, double tol) const;

 private:
  Algebra parent_;
  RMatrix basis_;
};

/// Orthonormal basis for the column span of `coords`, with the rank decided by
/// singular values above rank_tol * (largest singular value) and above 1e-13.
RMatrix orthonormal_span(const RMatrix& coords, double rank_tol);
/// Orthonormal basis of the numerical kernel of M.
RMatrix numerical_kernel(const RMatrix& M, double rank_tol);

SubspaceOfG span_of(const Algebra& alg, const RMatrix& coords, double rank_tol = 1e-7);
SubspaceOfG whole_algebra(const Algebra& alg);
SubspaceOfG centralizer(const Algebra& alg, const CMatrix& X, const Tolerances& tol = {});
SubspaceOfG generated_subalgebra(const Algebra& alg, const std::vector<CMatrix>& seeds,
                                 const Tolerances& tol = {}, Exec exec = Exec::parallel);
/// Largest relative residual of brackets of basis pairs leaving the subspace.
double bracket_closure_defect(const SubspaceOfG& s);

enum class ElementKind { elliptic, hyperbolic, nilpotent, mixed };
std::string to_string(ElementKind k);

/// Algebra elements: purely imaginary spectrum and semisimple -> elliptic,
/// real spectrum and semisimple -> hyperbolic, zero spectrum -> nilpotent.
ElementKind classify_algebra_element(const CMatrix& X, double tol = 1e-8);
/// Group elements: unit-modulus semisimple -> elliptic, positive real
/// semisimple -> hyperbolic, all eigenvalues one -> nilpotent (unipotent).
ElementKind classify_group_element(const CMatrix& g, double tol = 1e-8);

}  // namespace liesurf

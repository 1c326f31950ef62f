#include "liesurf/properness.hpp"

#include <algorithm>
#include <cmath>

#include "liesurf/kernels.hpp"

namespace liesurf {

namespace {

std::vector<mpz_class> as_integer(const TorusVector& v) { return primitive_integer_vector(v); }

}  // namespace

HSubalgebraTorus::HSubalgebraTorus(Torus torus, QMatrix basis, bool symmetric)
    : torus_(std::move(torus)), basis_(std::move(basis)), symmetric_(symmetric) {
  const int m = torus_->coord_count;
  for (const auto& b : basis_) {
    if (static_cast<int>(b.size()) != m)
      throw ParameterError("a_h basis vector has " + std::to_string(b.size()) + " coordinates, expected " +
                           std::to_string(m));
    if (!torus_->in_torus(b)) throw ParameterError("a_h basis vector does not lie in a");
  }
  if (rank(basis_) != static_cast<int>(basis_.size()))
    throw ParameterError("a_h basis vectors are linearly dependent");
  for (const auto& f : nullspace(basis_, m)) annihilators_.push_back(primitive_integer_vector(f));
}

bool HSubalgebraTorus::contains(const TorusVector& v) const {
  if (v.size() != static_cast<std::size_t>(torus_->coord_count)) throw ShapeError("vector does not lie in a");
  for (const auto& f : annihilators_) {
    mpq_class acc = 0;
    for (std::size_t i = 0; i < f.size(); ++i) acc += mpq_class(f[i]) * v[i];
    if (acc != 0) return false;
  }
  return true;
}

HSubalgebraTorus first_coordinate_hyperplane(const Torus& su_torus) {
  if (su_torus->parent->family() != Family::SU_p_q)
    throw ParameterError("the hyperplane a_1 = 0 is used for su(p,q) only");
  const int q = su_torus->coord_count;
  QMatrix basis;
  for (int i = 1; i < q; ++i) {
    QVector e(q, 0);
    e[i] = 1;
    basis.push_back(e);
  }
  return HSubalgebraTorus(su_torus, basis, true);
}

HSubalgebraTorus full_torus(const Torus& torus) {
  const int m = torus->coord_count;
  QMatrix basis;
  if (torus->parent->family() == Family::SL_n_R) {
    for (int i = 0; i + 1 < m; ++i) {
      QVector e(m, 0);
      e[i] = 1;
      e[i + 1] = -1;
      basis.push_back(e);
    }
  } else {
    for (int i = 0; i < m; ++i) {
      QVector e(m, 0);
      e[i] = 1;
      basis.push_back(e);
    }
  }
  return HSubalgebraTorus(torus, basis, true);
}

OrbitMembership in_weyl_orbit_of_subspace(const HSubalgebraTorus& ah, const TorusVector& v, Exec exec) {
  const auto& torus = *ah.torus();
  if (!torus.in_torus(v)) throw ShapeError("vector does not lie in a");
  OrbitMembership out;
  std::vector<std::vector<mpz_class>> vs{as_integer(v)};
  long k = kernels::first_weyl_into_kernel(torus.weyl, vs, ah.annihilators(), exec);
  if (k >= 0) {
    out.member = true;
    out.witness = torus.weyl[k];
    out.witness_index = k;
  }
  return out;
}

ProperVerdict sl2_action_proper(const HSubalgebraTorus& ah, const Sl2Triple& triple, Exec exec) {
  if (!triple.dominant)
    throw RealizationError("rho(A0) is not diagonal in a; conjugate the triple into a first");
  ProperVerdict out;
  out.dominant = *triple.dominant;
  out.membership = in_weyl_orbit_of_subspace(ah, out.dominant, exec);
  out.proper = !out.membership.member;
  return out;
}

BenoistVerdict benoist_criterion(const HSubalgebraTorus& ah, Exec exec) {
  const auto& torus = *ah.torus();
  BenoistVerdict out;
  std::vector<std::vector<mpz_class>> bvecs;
  for (const auto& b : torus.b_basis) bvecs.push_back(as_integer(b));
  long k = kernels::first_weyl_into_kernel(torus.weyl, bvecs, ah.annihilators(), exec);
  if (k >= 0) {
    out.covering = torus.weyl[k];
    return out;
  }
  out.holds = true;

  // b_+ spans b and no w.span(a_h) contains b, so a point on the moment curve
  // through the chamber interior avoids every translate for small s.
  TorusVector v = torus.strictly_dominant_point();
  TorusVector iv = torus.apply_iota(v);
  TorusVector c(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) c[i] = (v[i] + iv[i]) / 2;
  for (int N = 0; N <= 10000; ++N) {
    TorusVector x = c;
    if (N > 0) {
      mpq_class s(1, N), sk = 1;
      for (const auto& b : torus.b_basis) {
        sk *= s;
        for (std::size_t i = 0; i < x.size(); ++i) x[i] += sk * b[i];
      }
    }
    for (auto& xi : x) xi.canonicalize();
    if (!torus.in_b_plus(x)) continue;
    if (!in_weyl_orbit_of_subspace(ah, x, exec).member) {
      out.certificate = x;
      return out;
    }
  }
  throw NumericalError("no interior certificate point found on the moment curve");
}

bool calabi_markus(const HSubalgebraTorus& ah) { return ah.dim() == ah.torus()->rank; }

PitchforkResult pitchfork_margin(const HSubalgebraTorus& ah, const std::vector<RVector>& mu_samples,
                                 double radius, Exec exec) {
  const auto& torus = *ah.torus();
  const int m = torus.coord_count;
  RMatrix B(m, ah.dim());
  for (int j = 0; j < ah.dim(); ++j) B.col(j) = to_double(ah.basis()[j]);
  RMatrix U = orthonormal_span(B, 1e-12);
  RMatrix P = RMatrix::Identity(m, m) - U * U.transpose();

  std::vector<RVector> keep;
  for (const auto& s : mu_samples) {
    if (s.size() != m) throw ShapeError("mu sample has the wrong number of coordinates");
    if (s.norm() >= radius) keep.push_back(s);
  }
  PitchforkResult out;
  out.qualifying = static_cast<int>(keep.size());
  if (keep.empty()) return out;
  RMatrix S(m, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i) S.col(static_cast<Eigen::Index>(i)) = keep[i];
  RVector d = kernels::min_orbit_distance(torus.weyl, S, P, exec);
  out.margin = d.minCoeff();
  out.inconclusive = false;
  return out;
}

PositivityCrossCheck chamber_intersection_cross_check(const HSubalgebraTorus& ah, int box, int max_points) {
  PositivityCrossCheck out;
  const auto& torus = *ah.torus();
  if (torus.parent->family() != Family::SU_p_q) {
    out.reason = "only run for su(p,q)";
    return out;
  }
  if (!ah.symmetric()) {
    out.reason = "a_h not marked as coming from a symmetric pair";
    return out;
  }
  const int q = torus.coord_count;
  std::vector<bool> in_h(q, false);
  if (ah.dim() > 0) {
    RowEchelon e = rref(ah.basis());
    for (const auto& row : e.rows) {
      int nonzero = 0;
      for (const auto& x : row) nonzero += (x != 0);
      if (nonzero != 1) {
        out.reason = "a_h is not spanned by coordinate vectors";
        return out;
      }
    }
    for (int p : e.pivots) in_h[p] = true;
  }
  out.applicable = true;
  // Reorder so the a_h coordinates come first; in that chamber a_+ meets a_h
  // exactly in the vectors supported on the first dim(a_h) slots.
  std::vector<int> order;
  for (int i = 0; i < q; ++i)
    if (in_h[i]) order.push_back(i);
  for (int i = 0; i < q; ++i)
    if (!in_h[i]) order.push_back(i);

  std::vector<int> digits(q, -box);
  for (int count = 0; count < max_points; ++count) {
    TorusVector v(q);
    for (int i = 0; i < q; ++i) v[i] = digits[i];
    TorusVector re(q);
    for (int i = 0; i < q; ++i) re[i] = abs(v[order[i]]);
    std::sort(re.begin(), re.end(), [](const Rational& a, const Rational& b) { return a > b; });
    bool dominant_in_h = true;
    for (int i = ah.dim(); i < q; ++i) dominant_in_h = dominant_in_h && re[i] == 0;
    bool orbit = in_weyl_orbit_of_subspace(ah, v, Exec::serial).member;
    ++out.checked;
    if (orbit == dominant_in_h) ++out.agreements;

    int pos = q - 1;
    while (pos >= 0 && digits[pos] == box) digits[pos--] = -box;
    if (pos < 0) break;
    ++digits[pos];
  }
  return out;
}

}  // namespace liesurf

#include "liesurf/roots_weyl.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace liesurf {

WeylElement WeylElement::identity(int n) {
  WeylElement w;
  w.size = static_cast<std::int8_t>(n);
  for (int i = 0; i < n; ++i) w.perm[i] = static_cast<std::int8_t>(i);
  return w;
}

bool WeylElement::is_identity() const {
  if (negate != 0) return false;
  for (int i = 0; i < size; ++i)
    if (perm[i] != i) return false;
  return true;
}

QVector WeylElement::apply(const QVector& v) const {
  if (static_cast<int>(v.size()) != size) throw ShapeError("Weyl element applied to a vector of wrong length");
  QVector out(size);
  for (int i = 0; i < size; ++i) out[i] = sign(i) < 0 ? Rational(-v[perm[i]]) : v[perm[i]];
  return out;
}

RVector WeylElement::apply(const RVector& v) const {
  if (v.size() != size) throw ShapeError("Weyl element applied to a vector of wrong length");
  RVector out(size);
  for (int i = 0; i < size; ++i) out(i) = sign(i) * v(perm[i]);
  return out;
}

std::string WeylElement::to_string() const {
  std::ostringstream os;
  os << '[';
  for (int i = 0; i < size; ++i) {
    if (i) os << ',';
    os << sign(i) * (perm[i] + 1);
  }
  os << ']';
  return os.str();
}

bool SplitTorusData::in_torus(const TorusVector& v) const {
  if (static_cast<int>(v.size()) != coord_count) return false;
  if (parent->family() == Family::SL_n_R) {
    Rational s = 0;
    for (const auto& x : v) s += x;
    return s == 0;
  }
  return true;
}

bool SplitTorusData::in_chamber(const TorusVector& v) const {
  for (const auto& row : chamber)
    if (dot(row, v) < 0) return false;
  return true;
}

bool SplitTorusData::in_chamber(const RVector& v, double tol) const {
  for (const auto& row : chamber) {
    double s = 0.0;
    for (int j = 0; j < coord_count; ++j) s += row[j].get_d() * v(j);
    if (s < -tol) return false;
  }
  return true;
}

bool SplitTorusData::in_b(const TorusVector& v) const { return in_torus(v) && apply_iota(v) == v; }

TorusVector SplitTorusData::apply_iota(const TorusVector& v) const {
  TorusVector out(coord_count, Rational(0));
  for (int i = 0; i < coord_count; ++i)
    for (int j = 0; j < coord_count; ++j)
      if (iota[i][j] != 0) out[i] += iota[i][j] * v[j];
  return out;
}

RVector SplitTorusData::apply_iota(const RVector& v) const {
  RVector out = RVector::Zero(coord_count);
  for (int i = 0; i < coord_count; ++i)
    for (int j = 0; j < coord_count; ++j) out(i) += iota[i][j].get_d() * v(j);
  return out;
}

RVector SplitTorusData::diagonal(const RVector& v) const {
  if (v.size() != coord_count) throw ShapeError("torus vector has wrong length");
  if (parent->family() == Family::SL_n_R) return v;
  const int N = parent->matrix_size();
  RVector d = RVector::Zero(N);
  for (int k = 0; k < coord_count; ++k) {
    d(k) = v(k);
    d(N - 1 - k) = -v(k);
  }
  return d;
}

CMatrix SplitTorusData::matrix(const RVector& v) const {
  return diagonal(v).cast<Complex>().asDiagonal();
}

RVector SplitTorusData::float_coordinates_of(const CMatrix& H) const {
  const int N = parent->matrix_size();
  if (H.rows() != N || H.cols() != N) throw ShapeError("torus element has wrong size");
  const double scale = std::max(1.0, H.norm());
  CMatrix off = H;
  off.diagonal().setZero();
  if (off.norm() > 1e-9 * scale || H.diagonal().imag().norm() > 1e-9 * scale)
    throw RealizationError("element is not a real diagonal matrix of the split torus");
  RVector d = H.diagonal().real();
  if (parent->family() == Family::SL_n_R) return d;
  RVector v(coord_count);
  for (int k = 0; k < coord_count; ++k) v(k) = d(k);
  if ((diagonal(v) - d).norm() > 1e-9 * scale)
    throw RealizationError("diagonal element does not have the split torus pattern");
  return v;
}

std::optional<TorusVector> SplitTorusData::coordinates_of(const CMatrix& H, double tol) const {
  RVector v;
  try {
    v = float_coordinates_of(H);
  } catch (const RealizationError&) {
    return std::nullopt;
  }
  TorusVector out;
  for (int i = 0; i < v.size(); ++i) {
    auto r = rationalize(v(i), tol, 64);
    if (!r) return std::nullopt;
    out.push_back(*r);
  }
  if (!in_torus(out)) return std::nullopt;
  return out;
}

TorusVector SplitTorusData::strictly_dominant_point() const {
  TorusVector v;
  if (parent->family() == Family::SL_n_R) {
    for (int i = 0; i < coord_count; ++i) v.emplace_back(coord_count - 1 - 2 * i);
  } else {
    for (int i = 0; i < coord_count; ++i) v.emplace_back(coord_count - i);
  }
  return v;
}

std::vector<const Root*> SplitTorusData::positive_roots() const {
  std::vector<const Root*> out;
  for (const auto& r : roots)
    if (r.positive) out.push_back(&r);
  return out;
}

std::vector<const Root*> SplitTorusData::simple_roots() const {
  std::vector<const Root*> out;
  for (const auto& r : roots)
    if (r.simple) out.push_back(&r);
  return out;
}

std::string SplitTorusData::positivity_convention() {
  return "lexicographic on (a1,...,ar)";
}

namespace {

std::vector<WeylElement> enumerate_weyl(Family family, int m) {
  std::vector<WeylElement> W;
  std::vector<int> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  const int masks = family == Family::SL_n_R ? 1 : (1 << m);
  do {
    for (int mask = 0; mask < masks; ++mask) {
      WeylElement w;
      w.size = static_cast<std::int8_t>(m);
      for (int i = 0; i < m; ++i) w.perm[i] = static_cast<std::int8_t>(perm[i]);
      w.negate = static_cast<std::uint16_t>(mask);
      W.push_back(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return W;
}

std::vector<std::vector<int>> candidate_roots(Family family, int m) {
  std::vector<std::vector<int>> out;
  if (family == Family::SL_n_R) {
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j)
        if (i != j) {
          std::vector<int> c(m, 0);
          c[i] = 1;
          c[j] = -1;
          out.push_back(c);
        }
    return out;
  }
  for (int i = 0; i < m; ++i) {
    for (int s : {1, -1}) {
      for (int k : {1, 2}) {
        std::vector<int> c(m, 0);
        c[i] = s * k;
        out.push_back(c);
      }
      for (int j = i + 1; j < m; ++j)
        for (int t : {1, -1}) {
          std::vector<int> c(m, 0);
          c[i] = s;
          c[j] = t;
          out.push_back(c);
        }
    }
  }
  return out;
}

bool lex_positive(const std::vector<int>& c) {
  for (int x : c)
    if (x != 0) return x > 0;
  return false;
}

}  // namespace

Torus split_torus(const Algebra& alg) {
  auto t = std::make_shared<SplitTorusData>();
  t->parent = alg;
  const Family fam = alg->family();
  if (fam == Family::SL_n_R) {
    t->coord_count = alg->n();
    t->rank = alg->n() - 1;
  } else {
    t->coord_count = alg->q();
    t->rank = alg->q();
  }
  if (t->rank > 8)
    throw UnsupportedError("split torus of rank " + std::to_string(t->rank) +
                           " exceeds the extensional Weyl group cap of 8");
  const int m = t->coord_count;
  t->weyl = enumerate_weyl(fam, m);

  // Generic integral element: every candidate functional takes a distinct value.
  RVector c(m);
  if (fam == Family::SL_n_R) {
    double s = 0;
    for (int i = 0; i < m; ++i) s += std::pow(3.0, m - 1 - i);
    for (int i = 0; i < m; ++i) c(i) = m * std::pow(3.0, m - 1 - i) - s;
  } else {
    for (int i = 0; i < m; ++i) c(i) = std::pow(7.0, m - i);
  }
  RMatrix ad = adjoint_operator(*alg, t->matrix(c));
  Eigen::EigenSolver<RMatrix> es(ad, false);
  std::map<long long, int> counts;
  for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
    auto ev = es.eigenvalues()(i);
    long long r = std::llround(ev.real());
    if (std::abs(ev.imag()) > 1e-6 || std::abs(ev.real() - static_cast<double>(r)) > 1e-6)
      throw NumericalError("non-integral eigenvalue of ad on the split torus");
    counts[r]++;
  }
  int total = counts.count(0) ? counts[0] : 0;
  for (const auto& cand : candidate_roots(fam, m)) {
    double value = 0;
    for (int i = 0; i < m; ++i) value += cand[i] * c(i);
    long long key = std::llround(value);
    auto it = counts.find(key);
    if (it == counts.end() || key == 0) continue;
    Root r;
    r.coeffs = cand;
    r.multiplicity = it->second;
    r.positive = lex_positive(cand);
    total += r.multiplicity;
    t->roots.push_back(r);
  }
  if (total != alg->dim()) throw NumericalError("root space dimensions do not add up to dim g");

  std::vector<int> pos;
  for (std::size_t i = 0; i < t->roots.size(); ++i)
    if (t->roots[i].positive) pos.push_back(static_cast<int>(i));
  for (int i : pos) {
    bool decomposable = false;
    for (int a : pos) {
      for (int b : pos) {
        bool eq = true;
        for (int k = 0; k < m && eq; ++k)
          eq = t->roots[a].coeffs[k] + t->roots[b].coeffs[k] == t->roots[i].coeffs[k];
        if (eq) decomposable = true;
      }
    }
    t->roots[i].simple = !decomposable;
  }
  for (const auto& r : t->roots) {
    if (!r.simple) continue;
    QVector row;
    for (int x : r.coeffs) row.emplace_back(x);
    t->chamber.push_back(row);
  }
  if (static_cast<int>(t->chamber.size()) != t->rank) throw NumericalError("simple root count differs from rank");

  // w0 sends the strictly dominant point into the negative chamber.
  const TorusVector rho = t->strictly_dominant_point();
  for (std::size_t k = 0; k < t->weyl.size() && t->w0_index < 0; ++k) {
    TorusVector v = t->weyl[k].apply(rho);
    bool strictly_negative = true;
    for (const auto& row : t->chamber)
      if (dot(row, v) >= 0) strictly_negative = false;
    if (strictly_negative) t->w0_index = static_cast<int>(k);
  }
  if (t->w0_index < 0) throw NumericalError("longest Weyl element not found");

  t->iota.assign(m, QVector(m, Rational(0)));
  for (int j = 0; j < m; ++j) {
    TorusVector e(m, Rational(0));
    e[j] = 1;
    TorusVector img = t->w0().apply(e);
    for (int i = 0; i < m; ++i) t->iota[i][j] = -img[i];
  }
  QMatrix rows = t->iota;
  for (int i = 0; i < m; ++i) rows[i][i] -= 1;
  if (fam == Family::SL_n_R) rows.push_back(QVector(m, Rational(1)));
  t->b_basis = nullspace(rows, m);
  return t;
}

DominantResult dominant_representative(const SplitTorusData& torus, const TorusVector& v) {
  if (!torus.in_torus(v)) throw ShapeError("vector does not lie in the split torus");
  const int m = torus.coord_count;
  const bool signed_perm = torus.parent->family() == Family::SU_p_q;
  std::vector<Rational> key(v.begin(), v.end());
  if (signed_perm)
    for (auto& x : key) x = abs(x);
  std::vector<int> order(m);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return key[a] > key[b]; });
  WeylElement w = WeylElement::identity(m);
  for (int i = 0; i < m; ++i) {
    w.perm[i] = static_cast<std::int8_t>(order[i]);
    if (signed_perm && v[order[i]] < 0) w.negate |= static_cast<std::uint16_t>(1u << i);
  }
  return {w.apply(v), w};
}

RVector dominant_representative(const SplitTorusData& torus, const RVector& v) {
  if (v.size() != torus.coord_count) throw ShapeError("vector does not lie in the split torus");
  RVector out = v;
  if (torus.parent->family() == Family::SU_p_q) out = out.cwiseAbs();
  std::sort(out.data(), out.data() + out.size(), std::greater<double>());
  return out;
}

BSpace b_space(const SplitTorusData& torus) { return {torus.b_basis, torus.chamber}; }

std::vector<std::string> to_strings(const TorusVector& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(to_string(x));
  return out;
}

RVector to_double(const TorusVector& v) {
  RVector out(static_cast<Eigen::Index>(v.size()));
  for (std::size_t i = 0; i < v.size(); ++i) out(static_cast<Eigen::Index>(i)) = v[i].get_d();
  return out;
}

}  // namespace liesurf

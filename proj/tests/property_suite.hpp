#pragma once

// Randomized property checks shared by the unit tests and the acceptance
// binary. Every suite runs `cases` seeded cases and counts failures.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "liesurf/lie_core.hpp"
#include "liesurf/projections.hpp"
#include "liesurf/roots_weyl.hpp"
#include "liesurf/sl2_orbits.hpp"

namespace props {

using namespace liesurf;

struct SuiteResult {
  explicit SuiteResult(std::string n = {}) : name(std::move(n)) {}

  std::string name;
  int cases = 0;
  int failures = 0;
  double worst = 0;  // largest residual seen, where meaningful
  std::string first_failure;

  bool ok() const { return failures == 0 && cases > 0; }
};

namespace detail {

inline void record(SuiteResult& r, bool pass, double residual, const std::string& what) {
  ++r.cases;
  r.worst = std::max(r.worst, residual);
  if (!pass) {
    if (r.failures == 0) r.first_failure = what;
    ++r.failures;
  }
}

inline Algebra random_algebra(std::mt19937_64& rng) {
  static const std::vector<std::pair<int, int>> su{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {4, 2}};
  std::uniform_int_distribution<int> pick(0, 9);
  int k = pick(rng);
  if (k < 4) return make_sl(k + 2);
  return make_su(su[k - 4].first, su[k - 4].second);
}

inline std::vector<Torus> tori() {
  return {split_torus(make_sl(3)), split_torus(make_sl(4)), split_torus(make_sl(5)),
          split_torus(make_su(2, 1)), split_torus(make_su(3, 2)), split_torus(make_su(2, 2))};
}

inline CMatrix permutation_matrix(const std::vector<int>& perm) {
  const int n = static_cast<int>(perm.size());
  CMatrix P = CMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) P(perm[i], i) = 1;
  return P;
}

inline double rel(const RVector& a, const RVector& b) { return (a - b).norm() / std::max(1.0, b.norm()); }

}  // namespace detail

inline SuiteResult jacobi(std::uint64_t seed, int cases) {
  SuiteResult r{"Jacobi identity"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    Algebra alg = detail::random_algebra(rng);
    CMatrix X = random_algebra_element(*alg, rng), Y = random_algebra_element(*alg, rng),
            Z = random_algebra_element(*alg, rng);
    CMatrix J = bracket(X, bracket(Y, Z)) + bracket(Y, bracket(Z, X)) + bracket(Z, bracket(X, Y));
    double res = J.norm() / (X.norm() * Y.norm() * Z.norm());
    bool closed = alg->membership_residual(bracket(X, Y)) <= 1e-9;
    detail::record(r, res <= 1e-9 && closed, res, alg->label());
  }
  return r;
}

inline SuiteResult theta_automorphism(std::uint64_t seed, int cases) {
  SuiteResult r{"Cartan involution is an automorphism"};
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    Algebra alg = detail::random_algebra(rng);
    CMatrix X = random_algebra_element(*alg, rng), Y = random_algebra_element(*alg, rng);
    CMatrix tX = cartan_involution(*alg, X), tY = cartan_involution(*alg, Y);
    double scale = X.norm() * Y.norm();
    double hom = (cartan_involution(*alg, bracket(X, Y)) - bracket(tX, tY)).norm() / scale;
    double inv = (cartan_involution(*alg, tX) - X).norm() / X.norm();
    double res = std::max(hom, inv);
    detail::record(r, res <= 1e-9, res, alg->label());
  }
  return r;
}

inline SuiteResult mu_inverse(std::uint64_t seed, int cases) {
  SuiteResult r{"mu(g^-1) = iota(mu(g))"};
  std::mt19937_64 rng(seed);
  auto ts = detail::tori();
  for (int i = 0; i < cases; ++i) {
    const Torus& t = ts[i % ts.size()];
    CMatrix g = random_group_element(*t, rng, 1.5);
    double res = (mu(*t, g.inverse()) - t->apply_iota(mu(*t, g))).norm();
    detail::record(r, res <= 1e-8, res, t->parent->label());
  }
  return r;
}

inline SuiteResult mu_k_invariance(std::uint64_t seed, int cases) {
  SuiteResult r{"mu(k g k') = mu(g)"};
  std::mt19937_64 rng(seed);
  auto ts = detail::tori();
  for (int i = 0; i < cases; ++i) {
    const Torus& t = ts[i % ts.size()];
    CMatrix g = random_group_element(*t, rng, 1.5);
    CMatrix k1 = random_compact_element(*t->parent, rng), k2 = random_compact_element(*t->parent, rng);
    double res = (mu(*t, k1 * g * k2) - mu(*t, g)).norm();
    detail::record(r, res <= 1e-8, res, t->parent->label());
  }
  return r;
}

inline SuiteResult lyapunov_powers(std::uint64_t seed, int cases) {
  SuiteResult r{"lambda(g^m) = m lambda(g)"};
  std::mt19937_64 rng(seed);
  auto ts = detail::tori();
  std::uniform_int_distribution<int> pm(2, 4);
  for (int i = 0; i < cases; ++i) {
    const Torus& t = ts[i % ts.size()];
    CMatrix g = random_group_element(*t, rng, 0.8);
    int m = pm(rng);
    CMatrix gm = CMatrix::Identity(g.rows(), g.cols());
    for (int k = 0; k < m; ++k) gm = gm * g;
    RVector expected = static_cast<double>(m) * lyapunov(*t, g);
    double res = detail::rel(lyapunov(*t, gm), expected);
    detail::record(r, res <= 1e-8, res, t->parent->label());
  }
  return r;
}

/// Triples built by the library: partition triples of sl(n,R) conjugated by a
/// random permutation (still a-diagonal), and rho1 / rho2 of su(p,q).
inline Sl2Triple random_diagonal_triple(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 3);
  if (kind(rng) < 3) {
    int n = std::uniform_int_distribution<int>(2, 6)(rng);
    auto parts = partitions_of(n);
    const auto& p = parts[std::uniform_int_distribution<std::size_t>(0, parts.size() - 1)(rng)];
    Torus t = split_torus(make_sl(n));
    Sl2Triple base = sl2_from_partition(t, p);
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    std::shuffle(perm.begin(), perm.end(), rng);
    CMatrix P = detail::permutation_matrix(perm);
    return custom_triple(t, P * base.H * P.transpose(), P * base.E * P.transpose(), P * base.F * P.transpose(),
                         base.label);
  }
  static const std::vector<std::pair<int, int>> su{{1, 1}, {2, 1}, {2, 2}, {3, 1}, {3, 2}, {3, 3}, {4, 1}, {4, 2}};
  auto [p, q] = su[std::uniform_int_distribution<std::size_t>(0, su.size() - 1)(rng)];
  Torus t = split_torus(make_su(p, q));
  if (p > q && std::uniform_int_distribution<int>(0, 1)(rng) == 1) return rho2_su(t);
  return rho1_su(t);
}

struct TripleSuites {
  SuiteResult multiplicities{"[g:V_k] = m_{k-1} - m_{k+1}, sum k [g:V_k] = dim g"};
  SuiteResult centralizer{"sum of odd multiplicities = centralizer dimension"};
  SuiteResult dominant{"dominant vector lies in b_+"};
  SuiteResult a_in_g_even{"a is contained in g_even"};
};

inline void check_multiplicities(SuiteResult& r, const Sl2Triple& t) {
  IsotypicData d = module_multiplicities(t);
  auto m = [&](int j) {
    auto it = d.weight_mult.find(j);
    return it == d.weight_mult.end() ? 0 : it->second;
  };
  // Weight table recomputed from the spectrum of ad H.
  RMatrix adH = adjoint_operator(*t.alg, t.H);
  Eigen::VectorXcd ev = adH.eigenvalues();
  std::map<int, int> spectrum;
  for (Eigen::Index i = 0; i < ev.size(); ++i) ++spectrum[static_cast<int>(std::lround(ev(i).real()))];
  bool ok = spectrum == d.weight_mult;
  int top = d.weight_mult.empty() ? 0 : d.weight_mult.rbegin()->first;
  long total = 0;
  for (int k = 1; k <= top + 1; ++k) {
    auto it = d.module_mult.find(k);
    int got = it == d.module_mult.end() ? 0 : it->second;
    ok = ok && got == m(k - 1) - m(k + 1);
    total += static_cast<long>(k) * got;
  }
  ok = ok && total == t.alg->dim();
  detail::record(r, ok, 0, t.label);
}

inline void check_centralizer(SuiteResult& r, const Sl2Triple& t) {
  IsotypicData d = module_multiplicities(t);
  int odd = 0;
  for (auto [k, mult] : d.module_mult)
    if (k % 2 == 1) odd += mult;
  int z = centralizer(t.alg, t.H).dim();
  detail::record(r, odd == z, 0, t.label);
}

inline TripleSuites triple_suites(std::uint64_t seed, int cases) {
  TripleSuites s;
  std::mt19937_64 rng(seed);
  for (int i = 0; i < cases; ++i) {
    Sl2Triple t = random_diagonal_triple(rng);
    check_multiplicities(s.multiplicities, t);
    check_centralizer(s.centralizer, t);
    detail::record(s.dominant, t.dominant && t.torus->in_b_plus(*t.dominant), 0, t.label);

    SubspaceOfG ge = g_even(t);
    bool contains = true;
    // Coordinate functionals of a: the diagonal matrices with full diagonal
    // d(v) for unit torus vectors v, made traceless for sl(n,R).
    for (int k = 0; k < t.torus->coord_count; ++k) {
      RVector v = RVector::Zero(t.torus->coord_count);
      v(k) = 1;
      if (t.alg->family() == Family::SL_n_R) v.array() -= 1.0 / t.torus->coord_count;
      RVector diag = t.torus->diagonal(v);
      CMatrix D = diag.cast<Complex>().asDiagonal();
      contains = contains && ge.contains(t.alg->coordinates(D), 1e-7);
    }
    detail::record(s.a_in_g_even, contains, 0, t.label);

    // The same identities for a conjugate by a random group element, which
    // leaves the diagonal.
    CMatrix g = random_group_element(*t.torus, rng, 0.5);
    CMatrix gi = g.inverse();
    Sl2Triple c = custom_triple(t.torus, g * t.H * gi, g * t.E * gi, g * t.F * gi, t.label + "^g");
    check_multiplicities(s.multiplicities, c);
    check_centralizer(s.centralizer, c);
  }
  return s;
}

inline std::vector<SuiteResult> all_suites(std::uint64_t seed, int cases) {
  std::vector<SuiteResult> out{jacobi(seed, cases), theta_automorphism(seed + 1, cases),
                               mu_inverse(seed + 2, cases), mu_k_invariance(seed + 3, cases),
                               lyapunov_powers(seed + 4, cases)};
  TripleSuites t = triple_suites(seed + 5, cases);
  out.push_back(t.multiplicities);
  out.push_back(t.centralizer);
  out.push_back(t.dominant);
  out.push_back(t.a_in_g_even);
  return out;
}

}  // namespace props

#include "liesurf/kernels.hpp"

#include <cstdint>
#include <algorithm>
#include <limits>


namespace liesurf::kernels {

RMatrix adjoint_matrix(const LieAlgebraSpace& alg, const CMatrix& X, Exec exec) {
  const int d = alg.dim();
  RMatrix out(d, d);
  if (exec == Exec::serial) {
    for (int j = 0; j < d; ++j) out.col(j) = alg.coordinates(bracket(X, alg.basis_element(j)));
    return out;
  }
#pragma omp parallel for schedule(static)
  for (int j = 0; j < d; ++j) out.col(j) = alg.coordinates(bracket(X, alg.basis_element(j)));
  return out;
}

RMatrix bracket_coordinates(const LieAlgebraSpace& alg, const std::vector<CMatrix>& elems,
                            const std::vector<std::pair<int, int>>& pairs, Exec exec) {
  const long m = static_cast<long>(pairs.size());
  RMatrix out(alg.dim(), m);
  if (exec == Exec::serial) {
    for (long k = 0; k < m; ++k)
      out.col(k) = alg.coordinates(bracket(elems[pairs[k].first], elems[pairs[k].second]));
    return out;
  }
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < m; ++k)
    out.col(k) = alg.coordinates(bracket(elems[pairs[k].first], elems[pairs[k].second]));
  return out;
}

namespace {

bool vanishes_i64(const WeylElement& w, const std::vector<std::vector<std::int64_t>>& vs,
                  const std::vector<std::vector<std::int64_t>>& rows) {
  for (const auto& v : vs)
    for (const auto& row : rows) {
      std::int64_t s = 0;
      for (int j = 0; j < w.size; ++j) s += row[j] * w.sign(j) * v[w.perm[j]];
      if (s != 0) return false;
    }
  return true;
}

bool vanishes_mpz(const WeylElement& w, const std::vector<std::vector<mpz_class>>& vs,
                  const std::vector<std::vector<mpz_class>>& rows) {
  mpz_class s;
  for (const auto& v : vs)
    for (const auto& row : rows) {
      s = 0;
      for (int j = 0; j < w.size; ++j) {
        if (w.sign(j) < 0)
          s -= row[j] * v[w.perm[j]];
        else
          s += row[j] * v[w.perm[j]];
      }
      if (s != 0) return false;
    }
  return true;
}

}  // namespace

long first_weyl_into_kernel(const std::vector<WeylElement>& W,
                            const std::vector<std::vector<mpz_class>>& vectors,
                            const std::vector<std::vector<mpz_class>>& annihilators, Exec exec) {
  const long count = static_cast<long>(W.size());
  if (annihilators.empty() || vectors.empty()) return count > 0 ? 0 : -1;

  // Each partial sum is bounded by n * max|row| * max|v|; stay well inside int64.
  mpz_class max_row = 0, max_v = 0;
  for (const auto& v : vectors)
    for (const auto& x : v) max_v = std::max(max_v, mpz_class(abs(x)));
  for (const auto& row : annihilators)
    for (const auto& x : row) max_row = std::max(max_row, mpz_class(abs(x)));
  const mpz_class bound = max_row * max_v * static_cast<long>(vectors.front().size() + 1);
  const bool small = bound < mpz_class(std::numeric_limits<std::int64_t>::max() / 4);

  std::vector<std::vector<std::int64_t>> v64, rows64;
  if (small) {
    for (const auto& v : vectors) {
      v64.emplace_back();
      for (const auto& x : v) v64.back().push_back(x.get_si());
    }
    for (const auto& row : annihilators) {
      rows64.emplace_back();
      for (const auto& x : row) rows64.back().push_back(x.get_si());
    }
  }

  auto hit = [&](long k) {
    return small ? vanishes_i64(W[k], v64, rows64) : vanishes_mpz(W[k], vectors, annihilators);
  };

  if (exec == Exec::serial) {
    for (long k = 0; k < count; ++k)
      if (hit(k)) return k;
    return -1;
  }

  long best = count;
#pragma omp parallel for schedule(static) reduction(min : best)
  for (long k = 0; k < count; ++k) {
    if (k < best && hit(k)) best = k;
  }
  return best == count ? -1 : best;
}

RVector min_orbit_distance(const std::vector<WeylElement>& W, const RMatrix& samples,
                           const RMatrix& complement_projector, Exec exec) {
  const long m = samples.cols();
  RVector out(m);
  auto one = [&](long s) {
    double best = std::numeric_limits<double>::infinity();
    RVector col = samples.col(s);
    for (const auto& w : W) best = std::min(best, (complement_projector * w.apply(col)).norm());
    return best;
  };
  if (exec == Exec::serial) {
    for (long s = 0; s < m; ++s) out(s) = one(s);
    return out;
  }
#pragma omp parallel for schedule(dynamic, 4)
  for (long s = 0; s < m; ++s) out(s) = one(s);
  return out;
}

}  // namespace liesurf::kernels

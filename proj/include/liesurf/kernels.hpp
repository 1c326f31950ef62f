#pragma once

// Hot loops with a serial reference and an OpenMP version. The two paths
// return identical results; the parallel merges are deterministic.

#include <utility>
#include <vector>

#include <gmpxx.h>

#include "liesurf/lie_core.hpp"
#include "liesurf/roots_weyl.hpp"

namespace liesurf::kernels {

/// Column j holds the coordinates of [X, b_j].
RMatrix adjoint_matrix(const LieAlgebraSpace& alg, const CMatrix& X, Exec exec);

/// Column k holds the coordinates of [elems[pairs[k].first], elems[pairs[k].second]].
RMatrix bracket_coordinates(const LieAlgebraSpace& alg, const std::vector<CMatrix>& elems,
                            const std::vector<std::pair<int, int>>& pairs, Exec exec);

/// Smallest index w such that every annihilator row vanishes on W[w].v for
/// every v in `vectors`, or -1. Runs in int64 when the entries are small
/// enough, otherwise in mpz.
long first_weyl_into_kernel(const std::vector<WeylElement>& W,
                            const std::vector<std::vector<mpz_class>>& vectors,
                            const std::vector<std::vector<mpz_class>>& annihilators, Exec exec);

/// For each column s of `samples`, min over w of |P (w.s)|, where P is the
/// orthogonal projector onto the complement of a subspace.
RVector min_orbit_distance(const std::vector<WeylElement>& W, const RMatrix& samples,
                           const RMatrix& complement_projector, Exec exec);

}  // namespace liesurf::kernels

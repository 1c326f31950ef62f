#pragma once

#include <random>

#include "liesurf/lie_core.hpp"
#include "liesurf/roots_weyl.hpp"

namespace liesurf {

/// Cartan projection: the a_+ coordinates of the middle factor of g = k exp(mu) k'.
/// Computed from the singular values of g, i.e. half the logs of the
/// eigenvalues of theta(g)^{-1} g = g* g.
RVector mu(const SplitTorusData& torus, const CMatrix& g, const Tolerances& tol = {});

/// Lyapunov projection: dominant log of the eigenvalue moduli of g.
RVector lyapunov(const SplitTorusData& torus, const CMatrix& g);

CMatrix matrix_exp(const CMatrix& X);

/// Random element of g with i.i.d. normal coordinates times `scale`.
CMatrix random_algebra_element(const LieAlgebraSpace& alg, std::mt19937_64& rng, double scale = 1.0);
/// exp of a random element of k (the +1 eigenspace of the Cartan involution).
CMatrix random_compact_element(const LieAlgebraSpace& alg, std::mt19937_64& rng);
/// k exp(A) k' with A a random element of a (coordinates uniform in [-scale, scale]).
CMatrix random_group_element(const SplitTorusData& torus, std::mt19937_64& rng, double scale = 1.0);

}  // namespace liesurf

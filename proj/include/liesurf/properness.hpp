#pragma once

// Exact properness and existence tests on the split torus. Every decision
// here runs in rational or integer arithmetic; only pitchfork_margin is a
// floating-point diagnostic.

#include <limits>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "liesurf/exact.hpp"
#include "liesurf/roots_weyl.hpp"
#include "liesurf/sl2_orbits.hpp"

namespace liesurf {

/// a_h as an exact subspace of a.
class HSubalgebraTorus {
 public:
  /// Validates the a-pattern and linear independence (ParameterError otherwise).
  /// `symmetric` marks a_h as coming from a symmetric pair.
  HSubalgebraTorus(Torus torus, QMatrix basis, bool symmetric = false);

  const Torus& torus() const { return torus_; }
  const QMatrix& basis() const { return basis_; }
  int dim() const { return static_cast<int>(basis_.size()); }
  bool symmetric() const { return symmetric_; }
  /// Primitive integer functionals whose common kernel is span(a_h).
  const std::vector<std::vector<mpz_class>>& annihilators() const { return annihilators_; }
  bool contains(const TorusVector& v) const;

 private:
  Torus torus_;
  QMatrix basis_;
  bool symmetric_ = false;
  std::vector<std::vector<mpz_class>> annihilators_;
};

/// {a_1 = 0} in su(p,q), the a_h of U(p,q-1).
HSubalgebraTorus first_coordinate_hyperplane(const Torus& su_torus);
/// a_h = a.
HSubalgebraTorus full_torus(const Torus& torus);

struct OrbitMembership {
  bool member = false;
  std::optional<WeylElement> witness;  // smallest index w in W with w.v in a_h
  long witness_index = -1;
};

OrbitMembership in_weyl_orbit_of_subspace(const HSubalgebraTorus& ah, const TorusVector& v,
                                          Exec exec = Exec::parallel);

struct ProperVerdict {
  bool proper = false;
  TorusVector dominant;
  OrbitMembership membership;
};

/// Throws RealizationError when H is not diagonal in a.
ProperVerdict sl2_action_proper(const HSubalgebraTorus& ah, const Sl2Triple& triple,
                                Exec exec = Exec::parallel);

struct BenoistVerdict {
  bool holds = false;                       // b_+ not contained in W.a_h
  std::optional<WeylElement> covering;      // w with b inside w.span(a_h), when it fails
  std::optional<TorusVector> certificate;   // point of b_+ outside W.a_h, when it holds
};

BenoistVerdict benoist_criterion(const HSubalgebraTorus& ah, Exec exec = Exec::parallel);

/// True iff dim a_h = rank (no infinite discontinuous groups).
bool calabi_markus(const HSubalgebraTorus& ah);

struct PitchforkResult {
  double margin = std::numeric_limits<double>::infinity();
  bool inconclusive = true;
  int qualifying = 0;
};

/// Min over samples with |mu| >= radius of the distance from mu to W.span(a_h).
PitchforkResult pitchfork_margin(const HSubalgebraTorus& ah, const std::vector<RVector>& mu_samples,
                                 double radius = 5.0, Exec exec = Exec::parallel);

struct PositivityCrossCheck {
  bool applicable = false;
  std::string reason;
  int checked = 0;
  int agreements = 0;
};

/// Compares Weyl-orbit membership with membership of the dominant
/// representative in a_h, for integer points of a box. Only run for
/// symmetric a_h spanned by coordinate vectors in su(p,q), with a chamber
/// ordering that lists the a_h coordinates first.
PositivityCrossCheck chamber_intersection_cross_check(const HSubalgebraTorus& ah, int box = 2,
                                                      int max_points = 625);

}  // namespace liesurf

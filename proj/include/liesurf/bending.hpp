#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "liesurf/lie_core.hpp"
#include "liesurf/sl2_orbits.hpp"

namespace liesurf {

/// Images of a_1, b_1, ..., a_g, b_g (in that order).
struct SurfaceGroupRep {
  int genus = 0;
  std::vector<CMatrix> generators;
  double relation_residual = 0;

  const CMatrix& a(int k) const { return generators.at(2 * (k - 1)); }      // k is 1-based
  const CMatrix& b(int k) const { return generators.at(2 * (k - 1) + 1); }
};

/// |[A_1,B_1]...[A_g,B_g] - 1|_F with [A,B] = A B A^{-1} B^{-1}.
double relation_residual(const std::vector<CMatrix>& generators);

/// Side pairings of the regular hyperbolic 4g-gon with angle sum 2 pi.
SurfaceGroupRep fuchsian_generators(int genus);

/// Group-level image of a in SL(2,R) under the homomorphism integrating the
/// triple, through a = exp(phi1 J) exp(s h) exp(phi2 J), J = e - f.
CMatrix rho_group(const Sl2Triple& t, const RMatrix& a);
SurfaceGroupRep push_forward(const Sl2Triple& t, const SurfaceGroupRep& seed);

/// Unit vector spanning the Ad(rho(a))-fixed line of the piece with the given
/// F-chain. Sign: the largest-magnitude coordinate is positive.
RVector fixed_weight_zero_vector(const Sl2Triple& t, const RMatrix& chain, const RMatrix& a,
                                 const Tolerances& tol = {});

struct PlanEntry {
  int i = 0, j = 0;
  int generator = 0;  // f(i,j), 1-based
  int piece = -1;     // index into iso.pieces, -1 for i = 0
  RVector X;          // algebra coordinates
  RVector Y;          // unused for i = 0
  std::string y_name; // "H", "E" or "F"
  double bracket_norm = 0;
};

struct BendingPlan {
  Sl2Triple triple;
  SurfaceGroupRep seed;
  int genus = 0;
  SubspaceOfG target;
  IsotypicData iso;
  std::map<int, int> target_mult;  // i -> [g' : V_{2i+1}]
  std::vector<PlanEntry> entries;  // ordered by (i descending, j ascending) = f order
  std::vector<StarElement> star;   // X_{0,j}
  double max_fixed_residual = 0;  // max |gX - Xg|_F / (|g|_F |X|_F) over the entries
};

/// Builds Lambda, f, X and Y for the target g' (default g_even). Throws
/// GenusConditionError when genus < |Lambda|.
BendingPlan make_plan(const Sl2Triple& t, const SurfaceGroupRep& seed, const Tolerances& tol = {},
                      const std::optional<SubspaceOfG>& target = std::nullopt);

/// rho_t(a_k) = rho(a_k), rho_t(b_k) = rho(b_k) exp(t X_k).
SurfaceGroupRep bend(const SurfaceGroupRep& seed, const BendingPlan& plan, double t);

/// (Ad(exp(tX)) Y - Y) / t in algebra coordinates; t != 0.
RVector z_vector(const LieAlgebraSpace& alg, const CMatrix& X, const CMatrix& Y, double t);

struct InequalityMargin {
  int i = 0, j = 0, k = 0;
  int family = 1;  // 1: the (i,j)-(i,j) inequality, 2: the (i,k)-(i,j) one
  double lhs = 0, rhs = 0, margin = 0;
  bool ok = false;
};

struct InequalityReport {
  bool holds = true;
  std::vector<InequalityMargin> margins;
};

InequalityReport bending_inequalities(const BendingPlan& plan, double t);

struct DensityCertificate {
  std::string verdict;  // PASS, FAIL or INCONCLUSIVE
  int achieved_dim = 0;
  int target_dim = 0;
  InequalityReport inequalities;
  int seed_count = 0;
};

/// Bracket closure of H, E, F, Z_{i,j}(t) (i != 0) and X_{0,j}. At t = 0 the
/// Z seeds are dropped and the verdict is INCONCLUSIVE.
DensityCertificate density_certificate(const BendingPlan& plan, double t, const Tolerances& tol = {},
                                       Exec exec = Exec::parallel);

struct TSelection {
  std::optional<double> t;
  std::vector<std::pair<double, bool>> tried;
};

std::vector<double> default_t_grid();
/// First grid value at which the inequalities hold.
TSelection select_t(const BendingPlan& plan, const std::vector<double>& grid);

}  // namespace liesurf
